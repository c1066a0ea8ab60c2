"""
Brute-force distributions of mesh patterns over all of S_n.

Permutations of each length are split into blocks by their first entry
(lexicographic order).  Each block is counted with numpy: for every k-subset
of positions the order-isomorphism test runs over the whole block at once and
only the surviving rows get their shaded boxes checked.

>>> from meshpatterns.patterns import catalog_pattern
>>> distribution_table(catalog_pattern("Z"), 3).rows[2]
QPolynomial([1, 0, 1])
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import chain, combinations, permutations
from math import factorial

import numpy as np

from .patterns import MeshPattern, count_occurrences, parse_mesh_pattern
from .qseries import QPolynomial, Series

__all__ = [
    "DistributionTable", "VerificationReport", "distribution_table",
    "avoidance_counts", "verify_against_series", "verify_avoidance",
    "block_counts", "default_workers",
]


@dataclass(frozen=True)
class DistributionTable:
    """rows[n] = sum over S_n of q^(number of occurrences)."""
    pattern: MeshPattern | None
    rows: dict[int, QPolynomial]

    @property
    def n_max(self) -> int:
        return max(self.rows, default=-1)

    def avoidance(self) -> list[int]:
        return [self.rows[n][0] for n in sorted(self.rows)]

    def as_series(self) -> Series:
        return Series(self.n_max, tuple(self.rows[n] for n in sorted(self.rows)))

    def to_tsv(self) -> str:
        return "\n".join(f"{n}\t{' '.join(map(str, self.rows[n].coeffs))}"
                         for n in sorted(self.rows))

    def to_json(self) -> str:
        return json.dumps({"pattern": str(self.pattern) if self.pattern is not None else None,
                           "rows": {str(n): [str(c) for c in self.rows[n].coeffs]
                                    for n in sorted(self.rows)}},
                          sort_keys=True)

    @classmethod
    def from_tsv(cls, text: str, pattern: MeshPattern | None = None) -> DistributionTable:
        rows = {}
        for line in text.strip().splitlines():
            n, coeffs = line.split("\t")
            rows[int(n)] = QPolynomial(int(c) for c in coeffs.split())
        return cls(pattern, rows)

    @classmethod
    def from_json(cls, text: str) -> DistributionTable:
        data = json.loads(text)
        pattern = parse_mesh_pattern(data["pattern"]) if data.get("pattern") else None
        return cls(pattern, {int(n): QPolynomial(int(c) for c in cs)
                             for n, cs in data["rows"].items()})


@dataclass
class VerificationReport:
    pattern: str
    family: str
    n_max: int
    matches: dict[int, bool] = field(default_factory=dict)
    first_mismatch: tuple[int, QPolynomial, QPolynomial] | None = None

    @property
    def ok(self) -> bool:
        return all(self.matches.values())

    def __str__(self):
        lines = [f"pattern\t{self.pattern}", f"family\t{self.family}", f"n_max\t{self.n_max}"]
        lines += [f"n={n}\t{'match' if m else 'MISMATCH'}" for n, m in sorted(self.matches.items())]
        if self.first_mismatch is not None:
            n, expected, actual = self.first_mismatch
            lines.append(f"first_mismatch\tn={n}\texpected={expected}\tactual={actual}")
        lines.append(f"result\t{'OK' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        mm = None
        if self.first_mismatch is not None:
            n, e, a = self.first_mismatch
            mm = {"n": n, "expected": [str(c) for c in e.coeffs],
                  "actual": [str(c) for c in a.coeffs]}
        return json.dumps({"pattern": self.pattern, "family": self.family, "n_max": self.n_max,
                           "matches": {str(n): m for n, m in sorted(self.matches.items())},
                           "first_mismatch": mm, "ok": self.ok}, sort_keys=True)


def default_workers() -> int:
    return os.cpu_count() or 1


def _perm_block(n: int, first: int | None) -> np.ndarray:
    """All permutations of 1..n (with the given first entry), lexicographic."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int16)
    if first is None:
        rest, prefix = range(1, n + 1), ()
    else:
        rest, prefix = [v for v in range(1, n + 1) if v != first], (first,)
    count = factorial(len(rest))
    flat = np.fromiter(chain.from_iterable(prefix + t for t in permutations(rest)),
                       dtype=np.int16, count=count * n)
    return flat.reshape(count, n)


def block_counts(p: MeshPattern, perms: np.ndarray) -> np.ndarray:
    """Occurrence counts of ``p`` in each row of ``perms``."""
    rows_total, n = perms.shape
    k = len(p.perm)
    counts = np.zeros(rows_total, dtype=np.int64)
    if k > n:
        return counts
    # by_rank[r] = pattern index holding value r+1
    by_rank = [p.perm.index(r) for r in range(1, k + 1)]
    boxes = sorted(p.shaded)
    for pos in combinations(range(n), k):
        vals = perms[:, pos]
        mask = np.ones(rows_total, dtype=bool)
        for r in range(k - 1):
            mask &= vals[:, by_rank[r]] < vals[:, by_rank[r + 1]]
        idx = np.flatnonzero(mask)
        if idx.size == 0:
            continue
        sub = perms[idx]
        v = vals[idx]
        m = idx.size
        lows = [np.zeros(m, dtype=np.int16)] + [v[:, by_rank[r]] for r in range(k)] \
            + [np.full(m, n + 1, dtype=np.int16)]
        cols = (-1, *pos, n)
        good = np.ones(m, dtype=bool)
        for a, b in boxes:
            lo, hi = cols[a] + 1, cols[a + 1]
            if lo >= hi:
                continue
            block = sub[:, lo:hi]
            hit = (block > lows[b][:, None]) & (block < lows[b + 1][:, None])
            good &= ~hit.any(axis=1)
        counts[idx[good]] += 1
    return counts


def _block_polynomial(args) -> dict[int, int]:
    p, n, first = args
    counts = block_counts(p, _perm_block(n, first))
    values, freq = np.unique(counts, return_counts=True)
    return {int(c): int(f) for c, f in zip(values, freq)}


def _row(p: MeshPattern, n: int, pool) -> QPolynomial:
    firsts = [None] if n <= 1 else list(range(1, n + 1))
    jobs = [(p, n, f) for f in firsts]
    parts = pool.map(_block_polynomial, jobs) if pool is not None else map(_block_polynomial, jobs)
    acc: dict[int, int] = {}
    for part in parts:
        for c, f in part.items():
            acc[c] = acc.get(c, 0) + f
    top = max(acc, default=-1)
    return QPolynomial(acc.get(d, 0) for d in range(top + 1))


def _direct_row(p: MeshPattern, n: int) -> QPolynomial:
    acc: dict[int, int] = {}
    for perm in permutations(range(1, n + 1)):
        c = count_occurrences(p, perm)
        acc[c] = acc.get(c, 0) + 1
    return QPolynomial(acc.get(d, 0) for d in range(max(acc) + 1))


def distribution_table(p: MeshPattern | str, n_max: int = 7, workers: int = 1,
                       method: str = "numpy") -> DistributionTable:
    """
    Exact distribution of ``p`` over S_0..S_{n_max}.

    ``method="direct"`` uses the per-permutation definition instead of the
    vectorized counter (slow; meant for cross-checks).
    """
    if isinstance(p, str):
        p = parse_mesh_pattern(p)
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if method == "direct":
        return DistributionTable(p, {n: _direct_row(p, n) for n in range(n_max + 1)})
    if method != "numpy":
        raise ValueError(f"unknown method {method!r}")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = {n: _row(p, n, pool if n >= 7 else None) for n in range(n_max + 1)}
    else:
        rows = {n: _row(p, n, None) for n in range(n_max + 1)}
    return DistributionTable(p, rows)


def avoidance_counts(p: MeshPattern | str, n_max: int = 7, workers: int = 1) -> list[int]:
    return distribution_table(p, n_max, workers).avoidance()


def verify_against_series(table: DistributionTable, s: Series, family: str = "") -> VerificationReport:
    """Compare table rows with the x^n coefficients of ``s``."""
    upto = min(table.n_max, s.order)
    report = VerificationReport(str(table.pattern) if table.pattern is not None else "",
                                family, upto)
    for n in range(upto + 1):
        if n not in table.rows:
            continue
        ok = table.rows[n] == s[n]
        report.matches[n] = ok
        if not ok and report.first_mismatch is None:
            report.first_mismatch = (n, s[n], table.rows[n])
    return report


def verify_avoidance(table: DistributionTable, s: Series, family: str = "") -> VerificationReport:
    """Compare only the q^0 column of the table with ``s`` at q = 0."""
    zero_col = DistributionTable(table.pattern,
                                 {n: QPolynomial.const(r[0]) for n, r in table.rows.items()})
    return verify_against_series(zero_col, Series(s.order, tuple(QPolynomial.const(t(0)) for t in s.terms)),
                                 family)

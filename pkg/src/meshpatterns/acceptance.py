"""
The acceptance battery, shared by ``meshpat selftest`` and the test suite.

Each criterion runs a list of sub-checks and reports one line.  A criterion
passes when every sub-check passes within its time budget.  Sub-checks are
kept individually so a failing criterion shows exactly which identity broke.

Criteria compare the published closed forms with brute force.  The
``corrected`` battery runs the same comparisons with the corrected
evaluators; it is reported separately and is not one of the criteria.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Callable

from . import families as fam
from .embed import figure1_pattern
from .oracle import distribution_table
from .patterns import (MeshPattern, Permutation, catalog_pattern, count_occurrences,
                       find_occurrences, is_irreducible, parse_mesh_pattern, rotate180)
from .qseries import QPolynomial, Series
from .registry import build, formula, inner_series

__all__ = ["Check", "CriterionResult", "CRITERIA", "CORRECTED", "run_acceptance",
           "run_corrected", "FIGURE1_BOXES", "BATTERY"]

FIGURE1_BOXES = frozenset([
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (0, 6),
    (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 0), (2, 1), (2, 2), (2, 3), (2, 4), (2, 6),
    (3, 0), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6),
    (4, 0), (4, 1), (4, 2), (4, 3), (4, 5), (4, 6),
    (5, 0), (5, 1), (5, 2), (5, 5), (5, 6),
    (6, 0), (6, 2), (6, 3), (6, 4), (6, 5), (6, 6),
])

# inner patterns tried in every slot; None is the empty pattern
BATTERY: dict[str, MeshPattern | None] = {
    "empty": None,
    "1;": parse_mesh_pattern("1;"),
    "1;0,0": parse_mesh_pattern("1;0,0"),
    "Z": catalog_pattern("Z"),
    "X": catalog_pattern("X"),
}

FULL21 = parse_mesh_pattern("21;" + " ".join(f"{a},{b}" for a in range(3) for b in range(3)))
STAIRCASE_INNERS = {"21;": parse_mesh_pattern("21;"), "21;full": FULL21}
# irreducible inners whose shading stays off the boxes touching the staircase
CORRECTED_STAIRCASE_INNERS = {t: parse_mesh_pattern(t) for t in ("21;", "312;", "21;1,1", "21;0,2")}


@dataclass
class Check:
    label: str
    ok: bool
    detail: str = ""


@dataclass
class CriterionResult:
    ident: str
    title: str
    budget: float | None
    seconds: float = 0.0
    checks: list[Check] = field(default_factory=list)

    @property
    def within_budget(self) -> bool:
        return self.budget is None or self.seconds < self.budget

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks) and self.within_budget

    def line(self) -> str:
        failed = [c.label for c in self.checks if not c.ok]
        budget = "" if self.budget is None else f" (budget {self.budget:g}s)"
        extra = ""
        if failed:
            extra = f"; failed {len(failed)}/{len(self.checks)}: " + ", ".join(failed)
        elif not self.within_budget:
            extra = "; over time budget"
        return (f"{'PASS' if self.ok else 'FAIL'} {self.ident} {self.title} "
                f"[{len(self.checks)} checks, {self.seconds:.2f}s{budget}]{extra}")

    def report(self) -> str:
        lines = [self.line()]
        for c in self.checks:
            lines.append(f"    {'ok  ' if c.ok else 'FAIL'} {c.label}" + (f"  {c.detail}" if c.detail else ""))
        return "\n".join(lines)


class _Oracle:
    """Tables computed during one run, keyed by pattern and bound."""

    def __init__(self, workers: int = 1):
        self.workers = workers
        self._cache: dict[tuple[str, int], object] = {}

    def table(self, p: MeshPattern, n_max: int):
        key = (str(p), n_max)
        if key not in self._cache:
            self._cache[key] = distribution_table(p, n_max, self.workers)
        return self._cache[key]

    def rows(self, p: MeshPattern, n_max: int) -> list[QPolynomial]:
        t = self.table(p, n_max)
        return [t.rows[n] for n in range(n_max + 1)]

    def avoiders(self, p: MeshPattern, n_max: int) -> list[int]:
        return self.table(p, n_max).avoidance()


def _first_diff(expected, actual) -> str:
    for n, (e, a) in enumerate(zip(expected, actual)):
        if e != a:
            return f"n={n}: formula {e} vs oracle {a}"
    return ""


def _dist_check(label, s: Series, oracle: _Oracle, p: MeshPattern, n_max: int) -> Check:
    got = oracle.rows(p, n_max)
    want = [s[n] for n in range(n_max + 1)]
    return Check(label, want == got, _first_diff(want, got))


def _avoid_check(label, s: Series, oracle: _Oracle, p: MeshPattern, n_max: int) -> Check:
    got = oracle.avoiders(p, n_max)
    want = s.coefficients(0)[: n_max + 1]
    return Check(label, want == got, _first_diff(want, got))


def _name(p):
    return "empty" if p is None else str(p)


# criteria -------------------------------------------------------------------

def c1_occurrences(oracle):
    p = parse_mesh_pattern("231;1,2 2,1")
    host = Permutation((2, 4, 5, 3, 1))
    start = time.perf_counter()
    n = count_occurrences(p, host)
    elapsed = time.perf_counter() - start
    values = sorted(tuple(host[i - 1] for i in occ) for occ in find_occurrences(p, host))
    return [Check("count = 2", n == 2, f"got {n}"),
            Check("values 241 and 453", values == [(2, 4, 1), (4, 5, 3)], f"got {values}"),
            Check("count under 1 ms", elapsed < 1e-3, f"{elapsed * 1e3:.3f} ms")]


def c2_base(oracle):
    s = fam.base_length1(8).distribution
    z = catalog_pattern("Z")
    return [_dist_check("Z distribution n<=7", s, oracle, z, 7),
            Check("avoiders begin 1,0,1,3", oracle.avoiders(z, 7)[:4] == [1, 0, 1, 3],
                  str(oracle.avoiders(z, 7)[:4]))]


def c3_corollaries(oracle):
    checks = []
    for ident in ("12", "13", "17", "66"):
        r = formula("Y", [_y_inner(ident)], order=8)
        checks.append(_dist_check(f"Nr.{ident}", r.distribution, oracle, catalog_pattern(ident), 7))
    # row n of Nr. 13: (n! - (n-2)!) + q (n-2)!
    rows = oracle.rows(catalog_pattern("13"), 7)
    ok = all(rows[n] == QPolynomial((factorial(n) - factorial(n - 2), factorial(n - 2)))
             for n in range(2, 8))
    checks.append(Check("Nr.13 rows n!-(n-2)! + q(n-2)!", ok))
    return checks


def _y_inner(ident):
    """The inner pattern that turns Y into the given catalog pattern."""
    return {"12": parse_mesh_pattern("1;"), "13": parse_mesh_pattern("1;0,1 1,0 1,1"),
            "17": parse_mesh_pattern("1;0,1 1,0"), "66": parse_mesh_pattern("1;0,0")}[ident]


def _c4(oracle, exact):
    checks = []
    slots = {"13": 1, "19": 1, "20": 2, "22": 3, "28": 1}
    for fid, m in slots.items():
        for name, inner in BATTERY.items():
            inners = [inner] * m
            r = formula(fid, inners, order=7, exact=exact)
            checks.append(_dist_check(f"{fid}[{name}]", r.distribution, oracle, build(fid, inners), 7))
    return checks


def c4_families(oracle):
    return _c4(oracle, exact=False)


def _c5(oracle, exact):
    checks = []
    inners = STAIRCASE_INNERS if not exact else CORRECTED_STAIRCASE_INNERS
    for k in ((1, 2) if not exact else (1, 2, 3)):
        for name, inner in inners.items():
            r = formula("staircase", [inner], k=k, order=7, exact=exact)
            p = build("staircase", [inner], k=k)
            checks.append(_dist_check(f"k={k} {name} distribution", r.distribution, oracle, p, 7))
            checks.append(_avoid_check(f"k={k} {name} avoidance", r.avoidance, oracle, p, 7))
    if not exact:
        for name, inner in STAIRCASE_INNERS.items():
            rs = inner_series(inner, 8)
            for k, standalone in ((1, fam.family_X), (2, fam.family_33)):
                a = fam.family_staircase(rs.distribution, k, 8, A_p1=rs.avoidance, inner=inner)
                b = standalone(rs.distribution, rs.avoidance, 8, inner=inner)
                checks.append(Check(f"k={k} {name} unified = standalone at N=8",
                                    a.distribution == b.distribution and a.avoidance == b.avoidance))
    return checks


def c5_staircase(oracle):
    return _c5(oracle, exact=False)


def _c6(oracle, exact):
    checks = []
    names = list(BATTERY)
    for a, b in product(names, names):
        ins = [BATTERY[a], BATTERY[b]]
        for fid in ("28-2", "27"):
            r = formula(fid, ins, order=7, exact=exact)
            checks.append(_avoid_check(f"{fid}[{a},{b}]", r.avoidance, oracle, build(fid, ins), 7))
    for a in names:
        inner = BATTERY[a]
        if inner is not None and (0, 0) in inner.shaded:
            continue
        r = formula("30", [inner], order=7, exact=exact)
        checks.append(_avoid_check(f"30[{a}]", r.avoidance, oracle, build("30", [inner]), 7))
    for k in (1, 2, 3):
        r = formula("34", k=k, order=7)
        checks.append(_avoid_check(f"34 k={k}", r.avoidance, oracle, build("34", k=k), 7))
        checks.append(_dist_check(f"34 k={k} distribution", r.distribution, oracle, build("34", k=k), 7))
    for k in (2, 3):
        for a in names:
            r = formula("34-2", [BATTERY[a]], k=k, order=7, exact=exact)
            checks.append(_avoid_check(f"34-2 k={k}[{a}]", r.avoidance, oracle,
                                       build("34-2", [BATTERY[a]], k=k), 7))
    if not exact:
        for a, b in product(names, names):
            p = build("28-2", [BATTERY[a], BATTERY[b]])
            checks.append(Check(f"rotate180 28-2[{a},{b}]",
                                oracle.avoiders(p, 7) == oracle.avoiders(rotate180(p), 7)))
    return checks


def c6_avoidance(oracle):
    return _c6(oracle, exact=False)


def c7_figure(oracle):
    p = figure1_pattern()
    checks = [Check("permutation 162345", p.perm == Permutation((1, 6, 2, 3, 4, 5)), str(p.perm)),
              Check("shaded set equals the figure", p.shaded == FIGURE1_BOXES,
                    f"{len(p.shaded)} boxes, figure lists {len(FIGURE1_BOXES)}")]
    composed = fam.figure1_composed(9).distribution
    printed = fam.figure1_printed_form(9)
    checks.append(Check("printed formula = composed at N=9", printed == composed,
                        _first_diff([printed[n] for n in range(10)], [composed[n] for n in range(10)])))
    checks.append(_dist_check("composed = oracle n<=9", composed, oracle, p, 9))
    checks.append(_dist_check("printed formula = oracle n<=9", printed, oracle, p, 9))
    return checks


def _property_series(order=7):
    """Every distribution (and avoidance) the registry produces on the battery."""
    out = []
    for fid, m in (("Y", 1), ("13", 1), ("19", 1), ("20", 2), ("22", 3), ("28", 1)):
        for name, inner in BATTERY.items():
            out.append((f"{fid}[{name}]", formula(fid, [inner] * m, order=order)))
    for k in (1, 2, 3):
        for name, inner in STAIRCASE_INNERS.items():
            out.append((f"staircase k={k} {name}", formula("staircase", [inner], k=k, order=order)))
        out.append((f"34 k={k}", formula("34", k=k, order=order)))
    out.append(("base1", formula("base1", order=order)))
    out.append(("lemma30", formula("lemma30", order=order)))
    out.append(("figure1", formula("figure1", order=order)))
    return out


def _random_pattern(rng: random.Random, max_len: int = 3) -> MeshPattern:
    k = rng.randint(1, max_len)
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    boxes = [(a, b) for a in range(k + 1) for b in range(k + 1)]
    return MeshPattern(Permutation(perm), frozenset(b for b in boxes if rng.random() < 0.4))


def _random_perm(rng: random.Random, n: int) -> Permutation:
    v = list(range(1, n + 1))
    rng.shuffle(v)
    return Permutation(v)


def _random_series(rng: random.Random, order: int, unit: bool = False) -> Series:
    terms = [QPolynomial(rng.randint(-5, 5) for _ in range(rng.randint(0, 3))) for _ in range(order + 1)]
    if unit:
        terms[0] = QPolynomial.const(rng.choice((1, -1)))
    return Series(order, tuple(terms))


def c8_properties(oracle, seed: int = 20240601):
    checks = []
    for label, r in _property_series():
        if r.distribution is not None:
            mass = r.distribution.coefficients(1)
            ok = mass == [factorial(n) for n in range(len(mass))]
            checks.append(Check(f"q=1 mass {label}", ok, "" if ok else f"{mass}"))
        if r.distribution is not None and r.avoidance is not None:
            z, a = r.distribution.coefficients(0), r.avoidance.coefficients(0)
            checks.append(Check(f"q=0 {label}", z == a, _first_diff(a, z)))
    rng = random.Random(seed)
    mono = rot = True
    for _ in range(150):
        p = _random_pattern(rng)
        k = len(p.perm)
        extra = (rng.randint(0, k), rng.randint(0, k))
        more = p.with_shading(p.shaded | {extra})
        host = _random_perm(rng, rng.randint(0, 7))
        mono &= set(find_occurrences(more, host)) <= set(find_occurrences(p, host))
        rot &= count_occurrences(rotate180(p), Permutation(
            len(host) + 1 - v for v in reversed(host))) == count_occurrences(p, host)
    checks.append(Check("shading monotonicity", mono))
    checks.append(Check("rotation equivariance", rot))
    ring = inv = True
    for _ in range(60):
        a, b, c = (_random_series(rng, 5) for _ in range(3))
        ring &= (a + b) * c == a * c + b * c and (a * b) * c == a * (b * c) and a * b == b * a
        u = _random_series(rng, 5, unit=True)
        inv &= u * u.inverse() == Series.constant(1, 5) and u.inverse().inverse() == u
    checks.append(Check("series ring laws", ring))
    checks.append(Check("invert round-trip", inv))
    return checks


def _irreducible_by_definition(perm) -> bool:
    n = len(perm)
    if n < 2:
        return False
    return not any(all(perm[i] > perm[j] for j in range(i)) for i in range(1, n))


def c9_irreducible(oracle):
    bad = [perm for n in range(7) for perm in permutations(range(1, n + 1))
           if is_irreducible(perm) != _irreducible_by_definition(perm)]
    return [Check("agrees with definition for n<=6", not bad, f"{len(bad)} disagreements"),
            Check("length 1 is not irreducible", not is_irreducible((1,)))]


CRITERIA: list[tuple[str, str, float | None, Callable]] = [
    ("C1", "occurrence semantics", None, c1_occurrences),
    ("C2", "length-1 pattern Z", 5, c2_base),
    ("C3", "corollaries for Nr.12/13/17/66", 20, c3_corollaries),
    ("C4", "families 13/19/20/22/28 distributions", 180, c4_families),
    ("C5", "staircase k=1,2", None, c5_staircase),
    ("C6", "avoidance families", None, c6_avoidance),
    ("C7", "length-6 example", 120, c7_figure),
    ("C8", "property suites", None, c8_properties),
    ("C9", "irreducibility", None, c9_irreducible),
]

CORRECTED: list[tuple[str, str, float | None, Callable]] = [
    ("C4*", "families 20/22 with counts multiplied", None,
     lambda o: [c for c in _c4(o, exact=True) if c.label.startswith(("20", "22"))]),
    ("C5*", "staircase, solved avoidance, k=1..3", None, lambda o: _c5(o, exact=True)),
    ("C6*", "avoid_30 solved form", None,
     lambda o: [c for c in _c6(o, exact=True) if c.label.startswith("30")]),
    ("C7*", "length-6 corrected closed form", None,
     lambda o: [_dist_check("corrected closed form = oracle n<=9", fam.figure1_closed_form(9), o,
                            figure1_pattern(), 9),
                Check("corrected closed form = composed at N=9",
                      fam.figure1_closed_form(9) == fam.figure1_composed(9).distribution)]),
]


def _run(table, workers, only):
    oracle = _Oracle(workers)
    results = []
    for ident, title, budget, fn in table:
        if only and ident not in only:
            continue
        start = time.perf_counter()
        checks = fn(oracle)
        results.append(CriterionResult(ident, title, budget, time.perf_counter() - start, checks))
    return results


def run_acceptance(workers: int = 1, only: set[str] | None = None) -> list[CriterionResult]:
    return _run(CRITERIA, workers, only)


def run_corrected(workers: int = 1) -> list[CriterionResult]:
    return _run(CORRECTED, workers, None)

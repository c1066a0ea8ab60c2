"""
Permutations, mesh patterns and their occurrences.

A mesh pattern of length k is a permutation ``perm`` of 1..k together with a
set of shaded boxes ``(i, j)``, ``0 <= i, j <= k``.  Box ``(i, j)`` is the cell
between position lines i and i+1 and value lines j and j+1.

>>> p = parse_mesh_pattern("231;1,2 2,1")
>>> find_occurrences(p, parse_permutation("24531"))
[(1, 2, 5), (1, 4, 5), (2, 3, 4)]
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "MeshPattern", "Occurrence",
    "parse_permutation", "parse_mesh_pattern", "find_occurrences",
    "count_occurrences", "is_irreducible", "rotate180", "rotate_permutation",
    "catalog_pattern", "CATALOG", "pattern_from_json",
]

# positions (1-based, strictly increasing) of an occurrence inside its host
Occurrence = tuple[int, ...]


class Permutation(tuple):
    """A permutation of 1..n in one-line notation; n may be 0."""

    def __new__(cls, values: Iterable[int] = ()):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation of 1..{len(values)}: {values}")
        return super().__new__(cls, values)

    def __repr__(self):
        return f"Permutation({str(self)!r})"

    def __str__(self):
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)


def parse_permutation(text: str) -> Permutation:
    """
    Parse a digit string (n <= 9) or a comma-separated list.

    >>> parse_permutation("24531")
    Permutation('24531')
    >>> len(parse_permutation(""))
    0
    >>> parse_permutation("10,2,1,3,4,5,6,7,8,9")[0]
    10
    """
    text = text.strip()
    if not text:
        return Permutation()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        tokens = list(text)
    try:
        values = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    if any(not t.isdigit() for t in tokens):
        raise ValueError(f"malformed permutation {text!r}")
    return Permutation(values)


@dataclass(frozen=True)
class MeshPattern:
    """An underlying permutation plus a set of shaded boxes."""
    perm: Permutation
    shaded: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if not isinstance(self.perm, Permutation):
            object.__setattr__(self, "perm", Permutation(self.perm))
        boxes = frozenset((int(i), int(j)) for i, j in self.shaded)
        k = len(self.perm)
        for i, j in boxes:
            if not (0 <= i <= k and 0 <= j <= k):
                raise ValueError(f"box {(i, j)} outside the {k + 1}x{k + 1} grid")
        object.__setattr__(self, "shaded", boxes)

    def __len__(self):
        return len(self.perm)

    def __str__(self):
        boxes = " ".join(f"{i},{j}" for i, j in sorted(self.shaded))
        return f"{self.perm};{boxes}"

    def __repr__(self):
        return f"MeshPattern({str(self)!r})"

    def to_json(self) -> str:
        return json.dumps({"perm": list(self.perm),
                           "shaded": [list(b) for b in sorted(self.shaded)]},
                          sort_keys=True)

    def with_shading(self, boxes: Iterable[tuple[int, int]]) -> MeshPattern:
        return MeshPattern(self.perm, frozenset(boxes))


def pattern_from_json(text: str) -> MeshPattern:
    data = json.loads(text)
    boxes = [tuple(b) for b in data["shaded"]]
    if len(set(boxes)) != len(boxes):
        raise ValueError("duplicate box")
    return MeshPattern(Permutation(data["perm"]), frozenset(boxes))


def parse_mesh_pattern(text: str) -> MeshPattern:
    """
    Parse ``PERM;BOXES`` where BOXES is a space-separated list of ``i,j``.

    JSON input (``{"perm": [...], "shaded": [[i, j], ...]}``) is accepted too.

    >>> parse_mesh_pattern("231;1,2 2,1")
    MeshPattern('231;1,2 2,1')
    >>> parse_mesh_pattern("1;").shaded
    frozenset()
    """
    text = text.strip()
    if text.startswith("{"):
        return pattern_from_json(text)
    if ";" not in text:
        raise ValueError(f"missing ';' in pattern {text!r}")
    perm_text, box_text = text.split(";", 1)
    perm = parse_permutation(perm_text)
    boxes = []
    for token in box_text.split():
        parts = token.split(",")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed box {token!r}")
        boxes.append((int(parts[0]), int(parts[1])))
    if len(set(boxes)) != len(boxes):
        raise ValueError(f"duplicate box in {text!r}")
    return MeshPattern(perm, frozenset(boxes))


def _as_pattern(p) -> MeshPattern:
    return p if isinstance(p, MeshPattern) else parse_mesh_pattern(p)


def _as_perm(host) -> Permutation:
    if isinstance(host, Permutation):
        return host
    if isinstance(host, str):
        return parse_permutation(host)
    return Permutation(host)


def _is_occurrence(p: MeshPattern, host: Sequence[int], pos: Sequence[int]) -> bool:
    # pos is 0-based here
    n, k = len(host), len(p.perm)
    vals = [host[t] for t in pos]
    order = sorted(range(k), key=vals.__getitem__)
    # order[r] is the pattern index holding rank r+1
    for r, idx in enumerate(order):
        if p.perm[idx] != r + 1:
            return False
    cols = [-1, *pos, n]
    rows = [0, *(vals[i] for i in order), n + 1]
    for a, b in p.shaded:
        lo, hi = rows[b], rows[b + 1]
        for t in range(cols[a] + 1, cols[a + 1]):
            if lo < host[t] < hi:
                return False
    return True


def find_occurrences(p: MeshPattern | str, host) -> list[Occurrence]:
    """All occurrences of ``p`` in ``host`` as 1-based position tuples, in lexicographic order."""
    p, host = _as_pattern(p), _as_perm(host)
    return [tuple(t + 1 for t in pos)
            for pos in combinations(range(len(host)), len(p.perm))
            if _is_occurrence(p, host, pos)]


def count_occurrences(p: MeshPattern | str, host) -> int:
    p, host = _as_pattern(p), _as_perm(host)
    return sum(1 for pos in combinations(range(len(host)), len(p.perm))
               if _is_occurrence(p, host, pos))


def is_irreducible(perm) -> bool:
    """
    True iff the permutation has length >= 2 and no entry after the first
    exceeds every entry to its left.  Length 0 and 1 count as reducible.

    >>> is_irreducible(Permutation((2, 1))), is_irreducible(Permutation((1,)))
    (True, False)
    """
    if isinstance(perm, MeshPattern):
        perm = perm.perm
    if len(perm) < 2:
        return False
    running = perm[0]
    for v in perm[1:]:
        if v > running:
            return False
        running = max(running, v)
    return True


def rotate_permutation(perm) -> Permutation:
    n = len(perm)
    return Permutation(n + 1 - v for v in reversed(perm))


def rotate180(p: MeshPattern) -> MeshPattern:
    """Reverse-complement of the pattern; box (i, j) goes to (k-i, k-j)."""
    k = len(p.perm)
    return MeshPattern(rotate_permutation(p.perm),
                       frozenset((k - i, k - j) for i, j in p.shaded))


CATALOG: dict[str, str] = {
    "Z": "1;0,0 1,1",
    "X": "1;0,1 1,0",
    "Y": "1;0,0 0,1 1,0",
    "12": "12;0,0 0,1 0,2 1,0 2,0",
    "13": "12;0,0 0,1 0,2 1,0 1,2 2,0 2,1 2,2",
    "16": "12;0,1 0,2 1,0 2,0",
    "17": "12;0,0 0,1 0,2 1,0 1,2 2,0 2,1",
    "19": "12;0,1 0,2 1,1 1,2 2,0 2,2",
    "20": "12;0,0 0,1 0,2 1,1 1,2 2,0 2,1",
    "22": "12;0,0 0,1 1,1 1,2 2,0 2,2",
    "27": "12;0,1 0,2 1,0 1,1 2,0 2,2",
    "28": "12;0,0 0,1 1,0 1,2 2,1 2,2",
    "30": "12;0,1 0,2 1,0 1,1 1,2 2,0 2,1",
    "33": "12;0,1 0,2 1,0 1,2 2,0 2,1",
    "34": "12;0,0 0,1 1,0 1,1 1,2 2,1 2,2",
    "66": "12;0,0 0,1 0,2 1,0 1,1 2,0",
}


def catalog_pattern(ident: str) -> MeshPattern:
    """
    Named patterns: Z, X, Y and the numbered length-2 patterns.

    >>> catalog_pattern("X")
    MeshPattern('1;0,1 1,0')
    """
    try:
        return parse_mesh_pattern(CATALOG[str(ident)])
    except KeyError:
        raise KeyError(f"unknown catalog pattern {ident!r}") from None

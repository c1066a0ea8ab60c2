"""
Building larger mesh patterns by inserting patterns into unshaded boxes.

Inserting an inner pattern of length m into box (i, j) of an outer pattern
widens column i and row j of the outer grid into m+1 columns/rows.  Points of
the outer pattern to the right of (above) the box shift by m; a shaded outer
box that lies in the widened column or row is shaded across its whole
stretched extent.

>>> from meshpatterns.patterns import catalog_pattern, parse_mesh_pattern
>>> embed_at_box(catalog_pattern("Y"), (1, 1), parse_mesh_pattern("1;")) == catalog_pattern("12")
True
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .patterns import MeshPattern, Permutation, catalog_pattern, parse_mesh_pattern

__all__ = [
    "embed_at_box", "embed_multi", "embed_multi_sequential",
    "staircase_pattern", "run34_pattern", "figure1_pattern",
]

Box = tuple[int, int]


def embed_multi(outer: MeshPattern, assignments: Mapping[Box, MeshPattern | None]) -> MeshPattern:
    """
    Insert several patterns at once.  ``None`` values leave the box untouched.

    Boxes must be unshaded and pairwise in different columns and rows.
    """
    k = len(outer.perm)
    items = {}
    for box, inner in assignments.items():
        i, j = box
        if not (0 <= i <= k and 0 <= j <= k):
            raise ValueError(f"box {box} out of range for a pattern of length {k}")
        if box in outer.shaded:
            raise ValueError(f"box {box} is shaded in the outer pattern")
        if inner is None:
            continue
        if isinstance(inner, str):
            inner = parse_mesh_pattern(inner)
        if len(inner.perm) == 0:
            raise ValueError("cannot insert an empty pattern")
        items[box] = inner
    cols = [b[0] for b in items]
    rows = [b[1] for b in items]
    if len(set(cols)) != len(cols) or len(set(rows)) != len(rows):
        raise ValueError("inserted boxes must lie in distinct columns and rows")

    col_w = [0] * (k + 1)
    row_w = [0] * (k + 1)
    for (i, j), inner in items.items():
        col_w[i] = row_w[j] = len(inner.perm)
    # new index of grid line / box a
    col_start = [a + sum(col_w[:a]) for a in range(k + 1)]
    row_start = [b + sum(row_w[:b]) for b in range(k + 1)]

    size = k + sum(col_w)
    values = [0] * size
    for c, r in enumerate(outer.perm, 1):
        # point at line c sits at the left edge of box c
        values[col_start[c] - 1] = row_start[r]
    for (i, j), inner in items.items():
        for c, r in enumerate(inner.perm, 1):
            values[col_start[i] + c - 1] = row_start[j] + r

    shaded = set()
    for a, b in outer.shaded:
        for c in range(col_start[a], col_start[a] + col_w[a] + 1):
            for r in range(row_start[b], row_start[b] + row_w[b] + 1):
                shaded.add((c, r))
    for (i, j), inner in items.items():
        for a, b in inner.shaded:
            shaded.add((col_start[i] + a, row_start[j] + b))
    return MeshPattern(Permutation(values), frozenset(shaded))


def embed_at_box(outer: MeshPattern, box: Box, inner: MeshPattern) -> MeshPattern:
    if inner is None:
        raise ValueError("inner pattern required")
    return embed_multi(outer, {tuple(box): inner})


def embed_multi_sequential(outer: MeshPattern, assignments: Mapping[Box, MeshPattern]) -> MeshPattern:
    """
    One insertion at a time, in decreasing lexicographic box order; boxes
    still pending are translated by each insertion.  Agrees with embed_multi.
    """
    pending = sorted(((b, p) for b, p in assignments.items() if p is not None), reverse=True)
    result = outer
    while pending:
        (i, j), inner = pending.pop(0)
        result = embed_at_box(result, (i, j), inner)
        m = len(inner.perm)
        pending = [((a + m if a > i else a, b + m if b > j else b), p) for (a, b), p in pending]
    return result


def staircase_pattern(k: int, inner: MeshPattern | None = None) -> MeshPattern:
    """Increasing pattern of length k, every off-diagonal box shaded, ``inner`` at (k, k)."""
    if k < 1:
        raise ValueError("k must be positive")
    bare = MeshPattern(Permutation(range(1, k + 1)),
                       frozenset((a, b) for a in range(k + 1) for b in range(k + 1) if a != b))
    if inner is None:
        return bare
    return embed_at_box(bare, (k, k), inner)


def run34_pattern(k: int, sigma: Sequence[int] | None = None,
                  p2: MeshPattern | None = None) -> MeshPattern:
    """
    ``1`` followed by a permutation ``sigma`` of 2..k, with every box shaded
    except (0, k) and (k, 0); ``p2`` goes into box (k, 0).
    """
    if k < 1:
        raise ValueError("k must be positive")
    sigma = tuple(range(2, k + 1)) if sigma is None else tuple(sigma)
    if sorted(sigma) != list(range(2, k + 1)):
        raise ValueError(f"sigma must be a permutation of 2..{k}")
    free = {(0, k), (k, 0)}
    bare = MeshPattern(Permutation((1, *sigma)),
                       frozenset((a, b) for a in range(k + 1) for b in range(k + 1)
                                 if (a, b) not in free))
    if p2 is None:
        return bare
    return embed_at_box(bare, (k, 0), p2)


def figure1_pattern() -> MeshPattern:
    """The length-6 pattern: Nr. 66 inside Nr. 28 inside Nr. 19."""
    middle = embed_at_box(catalog_pattern("28"), (1, 1), catalog_pattern("66"))
    return embed_at_box(catalog_pattern("19"), (2, 1), middle)

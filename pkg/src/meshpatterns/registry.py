"""
Family identifiers, their pattern constructors and formula evaluators.

``build(fid, inners, k)`` gives the concrete mesh pattern, ``formula(fid,
inners, k, order)`` its generating functions.  Inner series are resolved by
``inner_series``: known closed forms first, the oracle otherwise.  ``None``
as an inner means the empty pattern.

Evaluators reproduce the published closed forms.  With ``exact=True`` the
families whose published form disagrees with brute force (20, 22, 30 and the
staircase avoidance) use the corrected evaluators instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import families as fam
from .embed import embed_multi, figure1_pattern, run34_pattern, staircase_pattern
from .families import FamilyResult
from .oracle import distribution_table
from .patterns import CATALOG, MeshPattern, catalog_pattern, parse_mesh_pattern
from .qseries import QPolynomial, Series, X, factorial_series, stirling_first_kind_series

__all__ = ["FamilySpec", "FAMILIES", "parse_family", "inner_series", "build",
           "formula", "parse_inner"]


def parse_inner(text: str | None) -> MeshPattern | None:
    """Pattern text, a catalog id such as ``X`` or ``66``, or ``empty``."""
    if text is None or text.strip().lower() in ("", "empty", "-"):
        return None
    if text.strip() in CATALOG:
        return catalog_pattern(text.strip())
    return parse_mesh_pattern(text)


def _known(p: MeshPattern | None, order: int) -> FamilyResult | None:
    if p is None:
        return fam.empty_convention(order)
    text = str(p)
    F = factorial_series(order)
    x = X(order)
    one = Series.constant(1, order)
    if text == "1;":
        return fam.single_point(order)
    if text == "1;0,0":
        return FamilyResult(one, stirling_first_kind_series(order))
    if p in (catalog_pattern("Z"), catalog_pattern("X")):
        return fam.base_length1(order)
    if text == "1;0,1 1,0 1,1":
        return FamilyResult((1 - x) * F, (1 - x + x * QPolynomial.monomial(1)) * F)
    for ident, build_it in _CATALOG_KNOWN.items():
        if p == catalog_pattern(ident):
            return build_it(order)
    return None


def _via_Y(inner_text):
    def go(order):
        r = inner_series(parse_mesh_pattern(inner_text), order)
        return fam.family_Y(r.distribution, r.avoidance, order)
    return go


def _with_empty(evaluator, slots):
    def go(order):
        e = fam.empty_convention(order)
        return evaluator(*([e.distribution, e.avoidance] * slots), order)
    return go


_CATALOG_KNOWN: dict[str, Callable[[int], FamilyResult]] = {
    "Y": _with_empty(fam.family_Y, 1),
    "12": _via_Y("1;"),
    "13": _via_Y("1;0,1 1,0 1,1"),
    "17": _via_Y("1;0,1 1,0"),
    "66": _via_Y("1;0,0"),
    "19": _with_empty(fam.family_19, 1),
    "20": _with_empty(fam.family_20, 2),
    "22": _with_empty(fam.family_22, 3),
    "28": _with_empty(fam.family_28, 1),
    "30": fam.lemma_30,
    "34": lambda order: fam.family_34(2, order),
}


def inner_series(p: MeshPattern | None, order: int, workers: int = 1) -> FamilyResult:
    """Distribution and avoidance of ``p`` up to x^order."""
    known = _known(p, order)
    if known is not None:
        return known
    table = distribution_table(p, order, workers)
    dist = table.as_series()
    return FamilyResult(Series.from_ints(table.avoidance()), dist)


@dataclass(frozen=True)
class FamilySpec:
    """A family: outer pattern (or constructor), insertion boxes, evaluator."""
    ident: str
    slots: int
    builder: Callable[[Sequence[MeshPattern | None], int | None], MeshPattern]
    evaluator: Callable[[Sequence[FamilyResult], Sequence[MeshPattern | None], int | None, int],
                        FamilyResult | Series]
    needs_k: bool = False
    avoidance_only: bool = False
    exact: Callable | None = None


def _boxes(outer_id, boxes):
    def go(inners, k):
        return embed_multi(catalog_pattern(outer_id), dict(zip(boxes, inners)))
    return go


def _flat(results):
    out = []
    for r in results:
        out += [r.distribution, r.avoidance]
    return out


def _staircase_eval(k_fixed=None, solved=False):
    def go(results, inners, k, order):
        kk = k_fixed or k
        r = results[0]
        out = fam.family_staircase(r.distribution, kk, order, A_p1=r.avoidance, inner=inners[0])
        if solved:
            out = FamilyResult(fam.staircase_avoidance_solved(r.avoidance, kk, order), out.distribution)
        return out
    return go


FAMILIES: dict[str, FamilySpec] = {
    "base1": FamilySpec("base1", 0, lambda inners, k: catalog_pattern("Z"),
                        lambda rs, ins, k, order: fam.base_length1(order)),
    "lemma30": FamilySpec("lemma30", 0, lambda inners, k: catalog_pattern("30"),
                          lambda rs, ins, k, order: fam.lemma_30(order)),
    "figure1": FamilySpec("figure1", 0, lambda inners, k: figure1_pattern(),
                          lambda rs, ins, k, order: FamilyResult(None, fam.figure1_dist(order))),
    "Y": FamilySpec("Y", 1, _boxes("Y", [(1, 1)]),
                    lambda rs, ins, k, order: fam.family_Y(*_flat(rs), order)),
    "13": FamilySpec("13", 1, _boxes("13", [(1, 1)]),
                     lambda rs, ins, k, order: fam.family_13(*_flat(rs), order)),
    "19": FamilySpec("19", 1, _boxes("19", [(2, 1)]),
                     lambda rs, ins, k, order: fam.family_19(*_flat(rs), order)),
    "20": FamilySpec("20", 2, _boxes("20", [(2, 2), (1, 0)]),
                     lambda rs, ins, k, order: fam.family_20(*_flat(rs), order),
                     exact=lambda rs, ins, k, order: fam.family_20_exact(*_flat(rs), order)),
    "22": FamilySpec("22", 3, _boxes("22", [(0, 2), (1, 0), (2, 1)]),
                     lambda rs, ins, k, order: fam.family_22(*_flat(rs), order),
                     exact=lambda rs, ins, k, order: fam.family_22_exact(*_flat(rs), order)),
    "28": FamilySpec("28", 1, _boxes("28", [(1, 1)]),
                     lambda rs, ins, k, order: fam.family_28(*_flat(rs), order)),
    "X": FamilySpec("X", 1, lambda inners, k: staircase_pattern(1, inners[0]),
                    _staircase_eval(1), exact=_staircase_eval(1, solved=True)),
    "33": FamilySpec("33", 1, lambda inners, k: staircase_pattern(2, inners[0]),
                     _staircase_eval(2), exact=_staircase_eval(2, solved=True)),
    "staircase": FamilySpec("staircase", 1, lambda inners, k: staircase_pattern(k, inners[0]),
                            _staircase_eval(), needs_k=True,
                            exact=_staircase_eval(solved=True)),
    "28-2": FamilySpec("28-2", 2, _boxes("28", [(1, 1), (2, 0)]),
                       lambda rs, ins, k, order: fam.avoid_28_2(rs[0].avoidance, rs[1].avoidance, order),
                       avoidance_only=True),
    "30": FamilySpec("30", 1, _boxes("30", [(2, 2)]),
                     lambda rs, ins, k, order: fam.avoid_30(rs[0].avoidance, order, inner=ins[0]),
                     avoidance_only=True,
                     exact=lambda rs, ins, k, order: fam.avoid_30_solved(rs[0].avoidance, order,
                                                                          inner=ins[0])),
    "27": FamilySpec("27", 2, _boxes("27", [(0, 0), (2, 1)]),
                     lambda rs, ins, k, order: fam.avoid_27(rs[0].avoidance, rs[1].avoidance, order),
                     avoidance_only=True),
    "34": FamilySpec("34", 0, lambda inners, k: run34_pattern(k),
                     lambda rs, ins, k, order: fam.family_34(k, order), needs_k=True),
    "34-2": FamilySpec("34-2", 1, lambda inners, k: run34_pattern(k, None, inners[0]),
                       lambda rs, ins, k, order: fam.avoid_34_2(k, rs[0].avoidance, order),
                       needs_k=True, avoidance_only=True),
}


def parse_family(text: str, k: int | None = None) -> tuple[FamilySpec, int | None]:
    """``"34:3"`` and ``("34", k=3)`` are the same family."""
    ident, _, ktext = text.partition(":")
    if ident not in FAMILIES:
        raise KeyError(f"unknown family {text!r}")
    spec = FAMILIES[ident]
    if ktext:
        k = int(ktext)
    if spec.needs_k and k is None:
        raise ValueError(f"family {ident!r} needs k")
    if k is not None and k < 1:
        raise ValueError("k must be positive")
    return spec, k


def _pad(spec, inners):
    inners = list(inners)
    if len(inners) > spec.slots:
        raise ValueError(f"family {spec.ident!r} takes at most {spec.slots} inner patterns")
    return inners + [None] * (spec.slots - len(inners))


def build(fid: str, inners: Sequence[MeshPattern | None] = (), k: int | None = None) -> MeshPattern:
    spec, k = parse_family(fid, k)
    return spec.builder(_pad(spec, inners), k)


def formula(fid: str, inners: Sequence[MeshPattern | None] = (), k: int | None = None,
            order: int = 8, workers: int = 1, exact: bool = False) -> FamilyResult:
    """Generating functions of the family; avoidance-only families fill ``avoidance``."""
    spec, k = parse_family(fid, k)
    inners = _pad(spec, inners)
    if spec.ident in ("X", "33", "staircase") and inners[0] is None:
        raise ValueError("staircase families need an irreducible inner pattern")
    results = [inner_series(p, order, workers) for p in inners]
    evaluator = spec.exact if exact and spec.exact is not None else spec.evaluator
    out = evaluator(results, inners, k, order)
    if isinstance(out, Series):
        return FamilyResult(out, None) if spec.avoidance_only else FamilyResult(None, out)
    return out

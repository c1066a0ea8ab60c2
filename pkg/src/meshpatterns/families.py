"""
Generating functions of the infinite mesh-pattern families.

Each evaluator takes the series of its inner patterns (distribution ``F_pi``
and avoidance ``A_pi``) and a truncation order, and returns a
``FamilyResult``.  Inner series come from other evaluators or from the
brute-force oracle; an absent inner pattern is modelled by
``empty_convention``.  Where only avoidance is known the evaluator returns a
bare ``Series``.

>>> r = base_length1(4)
>>> r.avoidance.coefficients(0)
[1, 0, 1, 3, 14]
>>> str(r.distribution[2])
'1 + q^2'
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .patterns import MeshPattern, is_irreducible
from .qseries import (DEFAULT_ORDER, QPolynomial, Series, X, Q, factorial_series,
                      staircase_sum, stirling_first_kind_series, subst_q_power)

__all__ = [
    "FamilyResult", "empty_convention", "single_point", "base_length1",
    "family_Y", "family_13", "family_19", "family_20", "family_22", "family_28",
    "family_20_exact", "family_22_exact", "count_product",
    "family_X", "family_33", "family_staircase", "staircase_avoidance_solved",
    "avoid_28_2", "lemma_30", "avoid_30", "avoid_30_solved", "avoid_27", "family_34", "avoid_34_2", "figure1_dist",
    "figure1_composed", "figure1_closed_form", "figure1_printed_form",
    "FormulaMismatch",
]


class FormulaMismatch(AssertionError):
    """Two independent evaluations of the same generating function disagree."""


@dataclass(frozen=True)
class FamilyResult:
    avoidance: Series | None = None
    distribution: Series | None = None

    def consistent(self) -> bool:
        """Distribution at q=0 equals avoidance (vacuous if either is absent)."""
        if self.avoidance is None or self.distribution is None:
            return True
        order = min(self.avoidance.order, self.distribution.order)
        return (self.distribution.coefficients(0)[: order + 1]
                == self.avoidance.coefficients(0)[: order + 1])


def _FX(order):
    return factorial_series(order), X(order)


def _check_inner(inner: MeshPattern | None, condition, message):
    if inner is not None and not condition(inner):
        raise ValueError(message)


def empty_convention(order: int = DEFAULT_ORDER) -> FamilyResult:
    """An empty inner pattern: avoided by nothing, one occurrence everywhere."""
    F = factorial_series(order)
    return FamilyResult(Series.constant(0, order), F * QPolynomial.monomial(1))


def single_point(order: int = DEFAULT_ORDER) -> FamilyResult:
    """The unshaded one-point pattern: every entry is an occurrence, F(qx)."""
    F = factorial_series(order)
    dist = Series(order, tuple(F[n] * QPolynomial.monomial(n) for n in range(order + 1)))
    return FamilyResult(Series.constant(1, order), dist)


def base_length1(order: int = DEFAULT_ORDER) -> FamilyResult:
    """Patterns Z and X."""
    F, x = _FX(order)
    q = Q(order)
    return FamilyResult(F / (1 + x * F), F / (1 + x * (1 - q) * F))


def family_Y(F_p1: Series, A_p1: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    F, x = _FX(order)
    return FamilyResult((1 - x) * F + x * A_p1, (1 - x) * F + x * F_p1)


def family_13(F_p1: Series, A_p1: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    F, x = _FX(order)
    x2 = x * x
    return FamilyResult(F - x2 * (F - A_p1), (1 - x2) * F + x2 * F_p1)


def family_19(F_p1: Series, A_p1: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    F, x = _FX(order)
    return FamilyResult(F - x * (F - 1) * (F - A_p1), F + x * (F - 1) * (F_p1 - F))


def _product_family(inners, order):
    # occurrence counts in the boxes are treated as adding up (q-exponents add)
    F, x = _FX(order)
    occ = Series.constant(1, order)
    some = Series.constant(1, order)
    for F_pi, A_pi in inners:
        occ = occ * (F_pi - A_pi)
        some = some * (F - A_pi)
    x2 = x * x
    return FamilyResult(F - x2 * some, F + x2 * (occ - some))


def _exponent_product(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    """sum a_i b_j q^(i*j)"""
    out: dict[int, int] = {}
    for i, c in enumerate(a.coeffs):
        if c:
            for j, d in enumerate(b.coeffs):
                if d:
                    out[i * j] = out.get(i * j, 0) + c * d
    return QPolynomial(out.get(e, 0) for e in range(max(out, default=-1) + 1))


def count_product(a: Series, b: Series) -> Series:
    """
    Cauchy product in x where q-exponents multiply instead of adding: the
    generating function of pairs whose statistic is the product of the two.
    """
    order = min(a.order, b.order)
    terms = []
    for n in range(order + 1):
        acc = QPolynomial()
        for i in range(n + 1):
            if a[i] and b[n - i]:
                acc = acc + _exponent_product(a[i], b[n - i])
        terms.append(acc)
    return Series(order, tuple(terms))


def _product_family_exact(inners, order):
    F, x = _FX(order)
    occ = None
    some = Series.constant(1, order)
    for F_pi, A_pi in inners:
        d = F_pi - A_pi
        occ = d if occ is None else count_product(occ, d)
        some = some * (F - A_pi)
    avoid = F - x * x * some
    return FamilyResult(avoid, avoid + x * x * occ)


def family_20(F_p1: Series, A_p1: Series, F_p2: Series, A_p2: Series,
              order: int = DEFAULT_ORDER) -> FamilyResult:
    """
    Nr. 20 with p1 in box (2, 2) and p2 in box (1, 0), closed form as
    published.  The avoidance is right; the distribution lets the counts of
    the two boxes add, whereas every pair of inner occurrences is an
    occurrence of the whole pattern.  Use family_20_exact for distributions.
    """
    return _product_family([(F_p1, A_p1), (F_p2, A_p2)], order)


def family_20_exact(F_p1: Series, A_p1: Series, F_p2: Series, A_p2: Series,
                    order: int = DEFAULT_ORDER) -> FamilyResult:
    """Nr. 20 family with the occurrence counts of the two boxes multiplied."""
    return _product_family_exact([(F_p1, A_p1), (F_p2, A_p2)], order)


def family_22(F_p1: Series, A_p1: Series, F_p2: Series, A_p2: Series,
              F_p3: Series, A_p3: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    """Nr. 22 with inners in boxes (0, 2), (1, 0), (2, 1); see family_20 for the caveat."""
    return _product_family([(F_p1, A_p1), (F_p2, A_p2), (F_p3, A_p3)], order)


def family_22_exact(F_p1: Series, A_p1: Series, F_p2: Series, A_p2: Series,
                    F_p3: Series, A_p3: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    return _product_family_exact([(F_p1, A_p1), (F_p2, A_p2), (F_p3, A_p3)], order)


def family_28(F_p1: Series, A_p1: Series, order: int = DEFAULT_ORDER) -> FamilyResult:
    F, x = _FX(order)
    x2 = x * x
    return FamilyResult(F / (1 + x2 * (F - A_p1) * F), F / (1 + x2 * (F - F_p1) * F))


def family_staircase(F_p1: Series, k: int, order: int = DEFAULT_ORDER,
                     A_p1: Series | None = None,
                     inner: MeshPattern | None = None) -> FamilyResult:
    """
    Increasing run of k points with all off-diagonal boxes shaded and p1 in
    the top-right box.  p1 must be irreducible of length >= 2; this is checked
    when ``inner`` is given.  Avoidance is returned for k = 1, 2 when ``A_p1``
    is supplied.
    """
    if k < 1:
        raise ValueError("k must be positive")
    _check_inner(inner, is_irreducible, "inner pattern must be irreducible of length >= 2")
    F, x = _FX(order)
    B = F / (1 + x * F)
    B_p1 = F_p1 / (1 + x * F_p1)
    head = Series.constant(0, order)
    for i in range(1, k + 1):
        head = head + (B ** i).shift(i - 1)
    dist = head + B ** k * staircase_sum(B_p1, k, order)
    avoid = None
    if A_p1 is not None and k in (1, 2):
        xk = x ** k
        avoid = (1 + xk * A_p1) * F / (1 + xk * F)
    return FamilyResult(avoid, dist)


def staircase_avoidance_solved(A_p1: Series, k: int, order: int = DEFAULT_ORDER) -> Series:
    """
    F - x^k B^k (F - A_p1) with B = F/(1+xF): the leftmost run of k points
    has X-avoiding boxes below each point.  Agrees with the published k = 1
    closed form; for k = 2 the published (1+x^2 A)F/(1+x^2 F) is not equal
    to it and does not match brute force.
    """
    if k < 1:
        raise ValueError("k must be positive")
    F, x = _FX(order)
    B = F / (1 + x * F)
    return F - x ** k * B ** k * (F - A_p1)


def family_X(F_p1: Series, A_p1: Series | None = None, order: int = DEFAULT_ORDER,
             inner: MeshPattern | None = None) -> FamilyResult:
    """Pattern X with an irreducible p1 in its top-right box, as a standalone formula."""
    _check_inner(inner, is_irreducible, "inner pattern must be irreducible of length >= 2")
    F, x = _FX(order)
    total = Series.constant(1, order)
    prod = Series.constant(1, order)
    for i in range(1, order + 1):
        Fj = subst_q_power(F_p1, i)
        prod = prod * Fj / (1 + x * Fj)
        total = total + prod.shift(i)
    dist = total * F / (1 + x * F)
    avoid = None if A_p1 is None else (1 + x * A_p1) * F / (1 + x * F)
    return FamilyResult(avoid, dist)


def family_33(F_p1: Series, A_p1: Series | None = None, order: int = DEFAULT_ORDER,
              inner: MeshPattern | None = None) -> FamilyResult:
    """Pattern Nr. 33 with an irreducible p1 in its top-right box, as a standalone formula."""
    _check_inner(inner, is_irreducible, "inner pattern must be irreducible of length >= 2")
    F, x = _FX(order)
    B = F / (1 + x * F)
    tail = x
    prod = Series.constant(1, order)
    for i in range(2, order + 1):
        Fj = subst_q_power(F_p1, comb(i, 2))
        prod = prod * Fj / (1 + x * Fj)
        tail = tail + prod.shift(i)
    dist = B + B * B * tail
    avoid = None
    if A_p1 is not None:
        x2 = x * x
        avoid = (1 + x2 * A_p1) * F / (1 + x2 * F)
    return FamilyResult(avoid, dist)


def avoid_28_2(A_p1: Series, A_p2: Series, order: int = DEFAULT_ORDER) -> Series:
    F, x = _FX(order)
    x2 = x * x
    return (F + x2 * F * A_p2 * (F - A_p1)) / (1 + x2 * (F - A_p1) * F)


def lemma_30(order: int = DEFAULT_ORDER) -> FamilyResult:
    """Pattern Nr. 30."""
    F, x = _FX(order)
    q = Q(order)
    x2 = x * x
    avoid = (1 + x) * F / (1 + x + x2 * F)
    dist = (1 + x - q * x) * F / (1 + (1 - q) * x + (1 - q) * x2 * F)
    return FamilyResult(avoid, dist)


def avoid_30(A_p1: Series, order: int = DEFAULT_ORDER, inner: MeshPattern | None = None) -> Series:
    """
    Nr. 30 with p1 in its top-right box, ((1+x)F + x^2 A_p1)/(1+x+x^2 F) as
    published.  Only right when A_p1 = 0; avoid_30_solved is the version that
    matches brute force.  p1 must leave box (0, 0) unshaded.
    """
    _check_inner(inner, _bottom_left_free, "inner pattern must leave its bottom-left box unshaded")
    F, x = _FX(order)
    x2 = x * x
    return ((1 + x) * F + x2 * A_p1) / (1 + x + x2 * F)


def avoid_30_solved(A_p1: Series, order: int = DEFAULT_ORDER,
                    inner: MeshPattern | None = None) -> Series:
    """
    F - x^2 B (F - A_p1) with B = F/(1+x+x^2 F), i.e.
    ((1+x)F + x^2 F A_p1)/(1+x+x^2 F).
    """
    _check_inner(inner, _bottom_left_free, "inner pattern must leave its bottom-left box unshaded")
    F, x = _FX(order)
    x2 = x * x
    return F - x2 * F / (1 + x + x2 * F) * (F - A_p1)


def _bottom_left_free(p: MeshPattern) -> bool:
    return (0, 0) not in p.shaded


def avoid_27(A_p1: Series, A_p2: Series, order: int = DEFAULT_ORDER) -> Series:
    F, x = _FX(order)
    return F - (x * x) * F / (1 + x * F) * (F - A_p1) * (F - A_p2)


def family_34(k: int, order: int = DEFAULT_ORDER) -> FamilyResult:
    """``1`` followed by k-1 larger points, all boxes but two shaded."""
    if k < 1:
        raise ValueError("k must be positive")
    F, x = _FX(order)
    q = Q(order)
    xk = x ** k
    return FamilyResult(F / (1 + xk * F), F / (1 + (1 - q) * xk * F))


def avoid_34_2(k: int, A_p2: Series, order: int = DEFAULT_ORDER) -> Series:
    if k < 1:
        raise ValueError("k must be positive")
    F, x = _FX(order)
    xk = x ** k
    return F - xk * F / (1 + xk * F) * (F - A_p2)


def figure1_composed(order: int = DEFAULT_ORDER) -> FamilyResult:
    """Nr. 66 inside Nr. 28 inside Nr. 19, through the family evaluators."""
    stirling = stirling_first_kind_series(order)
    one = Series.constant(1, order)
    nr66 = family_Y(stirling, one, order)
    nr28 = family_28(nr66.distribution, nr66.avoidance, order)
    return family_19(nr28.distribution, nr28.avoidance, order)


def _rising_tail(order):
    # sum_{n>=1} prod_{i=1}^{n-1}(q+i) x^n
    terms = [QPolynomial()]
    acc = QPolynomial.const(1)
    for n in range(1, order + 1):
        terms.append(acc)
        acc = acc * QPolynomial((n, 1))
    return Series(order, tuple(terms))


def figure1_printed_form(order: int = DEFAULT_ORDER) -> Series:
    """
    F(1 + x(F-1)(1/(1 + x^2 F (F - 1 - q x S)) - 1)),
    S = sum_{n>=1} prod_{i=1}^{n-1}(q+i) x^n, evaluated exactly as written.

    This expression does not collapse to n! at q = 1; see figure1_closed_form.
    """
    F, x = _FX(order)
    q = Q(order)
    S = _rising_tail(order)
    inner = 1 / (1 + x * x * F * (F - 1 - q * x * S))
    return F * (1 + x * (F - 1) * (inner - 1))


def figure1_closed_form(order: int = DEFAULT_ORDER) -> Series:
    """
    The same closed form with the factor x that F - F_66 carries:
    F(1 + x(F-1)(1/(1 + x^2 F (xF - x - q x S)) - 1)).
    """
    F, x = _FX(order)
    q = Q(order)
    S = _rising_tail(order)
    inner = 1 / (1 + x * x * F * (x * F - x - q * x * S))
    return F * (1 + x * (F - 1) * (inner - 1))


def figure1_dist(order: int = DEFAULT_ORDER) -> Series:
    """
    Distribution of the length-6 pattern, computed by the closed form and by
    composing evaluators; raises FormulaMismatch if the two disagree.
    """
    composed = figure1_composed(order).distribution
    closed = figure1_closed_form(order)
    if composed != closed:
        raise FormulaMismatch("closed form and composed evaluators disagree")
    return composed

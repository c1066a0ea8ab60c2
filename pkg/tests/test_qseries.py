import pytest
from hypothesis import given, settings, strategies as st

from meshpatterns.qseries import (
    QPolynomial, Q, Series, X, eval_q, factorial_series, series_invert, series_scale,
    staircase_sum, stirling_first_kind_series, subst_q_power,
)


def S(*vals, order=None):
    return Series.from_ints(list(vals), order)


def test_qpolynomial_basics():
    p = QPolynomial((1, 0, 2, 0, 0))
    assert p.coeffs == (1, 0, 2)
    assert p.degree == 2 and QPolynomial().degree == float("-inf")
    assert str(p) == "1 + 2*q^2"
    assert str(QPolynomial((0, -1, 3))) == "-q + 3*q^2"
    assert p(2) == 9
    assert (p * QPolynomial((0, 1))).coeffs == (0, 1, 0, 2)
    assert QPolynomial((0, 1, 1)).subst_power(2) == QPolynomial((0, 0, 1, 0, 1))
    assert p - p == 0


def test_add_sub_scale_mul():
    x = X(3)
    assert (1 + x) + (1 - x) == Series.constant(2, 3)
    a = S(1, 2, 3, 4)
    assert (a - a).coefficients(1) == [0, 0, 0, 0]
    F = factorial_series(3)
    assert series_scale(F, QPolynomial((0, 1))) == Series(3, tuple(QPolynomial((0, c)) for c in (1, 1, 2, 6)))
    assert ((1 + x) * (1 - x)).coefficients(1) == [1, 0, -1, 0]
    assert (F * F).coefficients(1) == [1, 2, 5, 16]


def test_truncation_to_smaller_order():
    assert (S(1, 1, 1) + S(1, 1, 1, 1, 1)).order == 2


def test_invert():
    assert (1 + X(5)).inverse().coefficients(1) == [1, -1, 1, -1, 1, -1]
    F = factorial_series(4)
    assert (1 + X(4) * F).inverse().coefficients(1) == [1, -1, 0, -1, -3]
    assert (-1 + X(3)).inverse().coefficients(1) == [-1, -1, -1, -1]
    with pytest.raises(ZeroDivisionError):
        series_invert(S(2, 1))
    with pytest.raises(ZeroDivisionError):
        series_invert(X(3))


def test_subst_q_power():
    s = Series(2, (QPolynomial((0, 1, 1)),))
    assert subst_q_power(s, 1) == s
    assert subst_q_power(s, 2)[0] == QPolynomial((0, 0, 1, 0, 1))
    with pytest.raises(ValueError):
        subst_q_power(s, 0)


def test_factorial_and_stirling():
    assert factorial_series(4).coefficients(1) == [1, 1, 2, 6, 24]
    assert factorial_series(0).coefficients(1) == [1]
    s = stirling_first_kind_series(3)
    assert s[1] == QPolynomial((0, 1))
    assert s[2] == QPolynomial((0, 1, 1))
    assert s[3] == QPolynomial((0, 2, 3, 1))


def test_staircase_sum():
    assert staircase_sum(Series.constant(1, 5), 1).coefficients(1) == [0, 1, 1, 1, 1, 1]
    assert staircase_sum(Series.constant(1, 1), 2).coefficients(1) == [0, 0]
    # k=2 with B = 1 + q x: x^2 B(q) + x^3 B(q) B(q^3) + ...
    B = 1 + Q(4) * X(4)
    got = staircase_sum(B, 2)
    want = X(4) ** 2 * B + X(4) ** 3 * B * B.subst_q(3) + X(4) ** 4 * B * B.subst_q(3) * B.subst_q(6)
    assert got == want
    with pytest.raises(ValueError):
        staircase_sum(B, 0)


def test_eval_q():
    assert eval_q(Series.constant(0, 3), 5) == [0, 0, 0, 0]
    s = Series(1, (QPolynomial((1, 1)), QPolynomial((0, 0, 3))))
    assert eval_q(s, 2) == [3, 12]
    assert s.at_q(0) == [1, 0]


def test_serialization_roundtrip():
    s = Series(3, (QPolynomial((1,)), QPolynomial((0, 10**30)), QPolynomial(), QPolynomial((-2, 1))))
    assert Series.from_json(s.to_json()) == s
    assert s.to_tsv().splitlines() == ["0\t1", f"1\t0 {10**30}", "2\t0", "3\t-2 1"]
    assert s.to_json() == Series.from_json(s.to_json()).to_json()


polys = st.lists(st.integers(-20, 20), max_size=4).map(QPolynomial)


@st.composite
def series(draw, order=5, unit=False):
    terms = draw(st.lists(polys, min_size=order + 1, max_size=order + 1))
    if unit:
        terms[0] = QPolynomial.const(draw(st.sampled_from([1, -1])))
    return Series(order, tuple(terms))


@settings(max_examples=100, deadline=None)
@given(series(), series(), series())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == Series.constant(0, a.order)
    assert a * Series.constant(1, a.order) == a


@settings(max_examples=100, deadline=None)
@given(series(unit=True), series())
def test_invert_roundtrip(u, b):
    one = Series.constant(1, u.order)
    assert u * u.inverse() == one
    assert u.inverse().inverse() == u
    assert (b / u) * u == b


@settings(max_examples=100, deadline=None)
@given(series(), series(), st.integers(1, 4), st.integers(1, 4), st.integers(-3, 3))
def test_subst_is_ring_map_and_composes(a, b, m, r, v):
    assert (a * b).subst_q(m) == a.subst_q(m) * b.subst_q(m)
    assert (a + b).subst_q(m) == a.subst_q(m) + b.subst_q(m)
    assert a.subst_q(m).subst_q(r) == a.subst_q(m * r)
    assert a.subst_q(m).at_q(v) == a.at_q(v ** m)


@settings(max_examples=100, deadline=None)
@given(series(), series(), st.integers(-3, 3))
def test_eval_is_ring_map(a, b, v):
    ab = [sum(x * y for x, y in zip(a.at_q(v)[: n + 1], reversed(b.at_q(v)[: n + 1])))
          for n in range(a.order + 1)]
    assert (a * b).at_q(v) == ab

"""
Truncated power series in x whose coefficients are polynomials in q.

Everything is exact Python integer arithmetic.  A ``Series`` of order N stores
the coefficients of x^0..x^N; binary operations truncate to the smaller order.

>>> F = factorial_series(4)
>>> (F * F).coefficients(1)
[1, 2, 5, 16, 64]
>>> (1 + X(4) * F).inverse().coefficients(1)
[1, -1, 0, -1, -3]
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "QPolynomial", "Series", "X", "Q",
    "series_add", "series_sub", "series_scale", "series_mul", "series_invert",
    "subst_q_power", "factorial_series", "stirling_first_kind_series",
    "staircase_sum", "eval_q", "DEFAULT_ORDER",
]

DEFAULT_ORDER = 8


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPolynomial:
    """Polynomial in q with integer coefficients; ``coeffs[d]`` is the q^d coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def const(cls, c: int) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, d: int, c: int = 1) -> QPolynomial:
        return cls((0,) * d + (c,))

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial.const(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other):
        other = _poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __call__(self, v: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def subst_power(self, m: int) -> QPolynomial:
        """Replace q by q^m."""
        if m < 1:
            raise ValueError("exponent must be positive")
        if not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for d, c in enumerate(self.coeffs):
            out[d * m] = c
        return QPolynomial(out)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if mono and abs(c) == 1:
                term = ("-" if c < 0 else "") + mono
            else:
                term = f"{c}{'*' + mono if mono else ''}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def _poly(c) -> QPolynomial:
    if isinstance(c, QPolynomial):
        return c
    if isinstance(c, int):
        return QPolynomial.const(c)
    raise TypeError(f"cannot treat {type(c).__name__} as a polynomial in q")


ZERO = QPolynomial()
ONE = QPolynomial.const(1)


@dataclass(frozen=True, eq=False)
class Series:
    """Power series in x truncated after x^order."""
    order: int
    terms: tuple[QPolynomial, ...]

    def __post_init__(self):
        terms = tuple(_poly(t) for t in self.terms)
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        if len(terms) < self.order + 1:
            terms = terms + (ZERO,) * (self.order + 1 - len(terms))
        object.__setattr__(self, "terms", terms[: self.order + 1])

    @classmethod
    def from_ints(cls, values: Sequence[int], order: int | None = None) -> Series:
        order = len(values) - 1 if order is None else order
        return cls(order, tuple(QPolynomial.const(v) for v in values))

    @classmethod
    def constant(cls, c, order: int) -> Series:
        return cls(order, (_poly(c),))

    def __getitem__(self, n: int) -> QPolynomial:
        return self.terms[n]

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, self.terms))

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        return Series.constant(_poly(other), self.order)

    def __add__(self, other):
        return series_add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return series_sub(self, self._coerce(other))

    def __rsub__(self, other):
        return series_sub(self._coerce(other), self)

    def __neg__(self):
        return Series(self.order, tuple(-t for t in self.terms))

    def __mul__(self, other):
        if isinstance(other, Series):
            return series_mul(self, other)
        return series_scale(self, _poly(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        out = Series.constant(1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> Series:
        return series_invert(self)

    def shift(self, m: int) -> Series:
        """Multiply by x^m."""
        return Series(self.order, (ZERO,) * m + self.terms)

    def truncate(self, order: int) -> Series:
        return Series(min(order, self.order), self.terms)

    def at_q(self, v: int) -> list[int]:
        return eval_q(self, v)

    def coefficients(self, v: int) -> list[int]:
        return eval_q(self, v)

    def subst_q(self, m: int) -> Series:
        return subst_q_power(self, m)

    def to_json(self) -> str:
        return json.dumps({"order": self.order,
                           "terms": [[str(c) for c in t.coeffs] for t in self.terms]},
                          sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> Series:
        data = json.loads(text)
        return cls(data["order"], tuple(QPolynomial(int(c) for c in t) for t in data["terms"]))

    def to_tsv(self) -> str:
        return "\n".join(f"{n}\t{' '.join(map(str, t.coeffs)) or '0'}"
                         for n, t in enumerate(self.terms))

    def __repr__(self):
        return f"Series(order={self.order}, terms=[{', '.join(str(t) for t in self.terms)}])"


def X(order: int = DEFAULT_ORDER) -> Series:
    """The series x."""
    return Series(order, (ZERO, ONE))


def Q(order: int = DEFAULT_ORDER) -> Series:
    """The constant series q."""
    return Series(order, (QPolynomial.monomial(1),))


def series_add(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    return Series(order, tuple(a.terms[n] + b.terms[n] for n in range(order + 1)))


def series_sub(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    return Series(order, tuple(a.terms[n] - b.terms[n] for n in range(order + 1)))


def series_scale(a: Series, c: QPolynomial) -> Series:
    return Series(a.order, tuple(t * c for t in a.terms))


def series_mul(a: Series, b: Series) -> Series:
    order = min(a.order, b.order)
    out = []
    for n in range(order + 1):
        acc = ZERO
        for i in range(n + 1):
            if a.terms[i] and b.terms[n - i]:
                acc = acc + a.terms[i] * b.terms[n - i]
        out.append(acc)
    return Series(order, tuple(out))


def series_invert(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be 1 or -1."""
    a0 = a.terms[0]
    if a0 == ONE:
        s = 1
    elif a0 == -ONE:
        s = -1
    else:
        raise ZeroDivisionError(f"constant term {a0} is not a unit")
    b = [QPolynomial.const(s)]
    for n in range(1, a.order + 1):
        acc = ZERO
        for i in range(1, n + 1):
            if a.terms[i]:
                acc = acc + a.terms[i] * b[n - i]
        b.append(acc * (-s))
    return Series(a.order, tuple(b))


def subst_q_power(a: Series, m: int) -> Series:
    """Replace q by q^m in every coefficient."""
    return Series(a.order, tuple(t.subst_power(m) for t in a.terms))


def eval_q(a: Series, v: int) -> list[int]:
    return [t(v) for t in a.terms]


def factorial_series(order: int = DEFAULT_ORDER) -> Series:
    """F(x) = sum n! x^n."""
    vals = [1]
    for n in range(1, order + 1):
        vals.append(vals[-1] * n)
    return Series.from_ints(vals, order)


def stirling_first_kind_series(order: int = DEFAULT_ORDER) -> Series:
    """1 + sum_{n>=1} q(q+1)...(q+n-1) x^n."""
    terms = [ONE]
    for n in range(1, order + 1):
        terms.append(terms[-1] * QPolynomial((n - 1, 1)))
    return Series(order, tuple(terms))


def staircase_sum(B: Series, k: int, order: int | None = None) -> Series:
    """
    sum_{i>=k} x^i prod_{j=k}^{i} B(x, q^C(j,k)), truncated.

    >>> staircase_sum(Series.constant(1, 4), 1).coefficients(1)
    [0, 1, 1, 1, 1]
    """
    if k < 1:
        raise ValueError("k must be positive")
    order = B.order if order is None else min(order, B.order)
    B = B.truncate(order)
    total = Series.constant(0, order)
    prod = Series.constant(1, order)
    for i in range(k, order + 1):
        prod = prod * subst_q_power(B, comb(i, k))
        total = total + prod.shift(i)
    return total

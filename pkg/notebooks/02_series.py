"""
Generating functions as truncated series
========================================

Distributions are power series in x whose coefficients are polynomials in q.
Coefficient [x^n q^m] counts permutations of length n with m occurrences.
"""

from meshpatterns import X, factorial_series, stirling_first_kind_series
from meshpatterns import families as fam

N = 7
F = factorial_series(N)
x = X(N)

# F(x) = sum n! x^n, and its reciprocal-type expressions, exactly
print("F      ", F.coefficients(1))
print("1/(1+xF)", (1 / (1 + x * F)).coefficients(1))

# pattern Z: avoidance and full distribution
z = fam.base_length1(N)
print("avoid Z", z.avoidance.coefficients(1))
for n in range(5):
    print(f"  n={n}: {z.distribution[n]}")

# q=1 recovers n!, q=0 recovers the avoiders
print("q=1    ", z.distribution.at_q(1))
print("q=0    ", z.distribution.at_q(0))

# point with its bottom-left box shaded: left-to-right minima, Stirling numbers
print(stirling_first_kind_series(4)[4])

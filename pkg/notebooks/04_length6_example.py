"""
A length-6 pattern built in three steps
=======================================

Nr. 66 goes inside Nr. 28, which goes inside Nr. 19.  Composing the three
family formulas gives the distribution of the resulting length-6 pattern.
"""

import time

from meshpatterns import distribution_table, figure1_pattern
from meshpatterns import families as fam

p = figure1_pattern()
print(p)

N = 9
composed = fam.figure1_composed(N).distribution
closed = fam.figure1_closed_form(N)
printed = fam.figure1_printed_form(N)
print("composed == corrected closed form:", composed == closed)

start = time.perf_counter()
table = distribution_table(p, N, workers=4)
print(f"oracle up to n={N} in {time.perf_counter() - start:.1f}s")

for n in range(5, N + 1):
    print(n, composed[n], "| oracle", table.rows[n], "| as printed", printed[n])

# the printed form loses mass: at q=1 it is not n!
print(printed.at_q(1))

"""
Pattern families by box insertion
=================================

Inserting a pattern into an unshaded box of a larger one builds an infinite
family.  The family formulas express the big pattern's distribution through
the inner pattern's series, which is checked here against brute force.
"""

from meshpatterns import build, catalog_pattern, distribution_table, formula, parse_mesh_pattern

# Nr. 19 with pattern X inside box (2,1)
inner = catalog_pattern("X")
p = build("19", [inner])
print("constructed:", p)

r = formula("19", [inner], order=7)
table = distribution_table(p, 7)
for n in range(8):
    print(n, r.distribution[n], "|", table.rows[n], "ok" if r.distribution[n] == table.rows[n] else "DIFF")

# Nr. 20 takes two inner patterns.  The published form lets the two counts
# add; brute force shows every pair is an occurrence, so counts multiply.
ins = [parse_mesh_pattern("1;"), parse_mesh_pattern("1;")]
p20 = build("20", ins)
t20 = distribution_table(p20, 6)
published = formula("20", ins, order=6)
corrected = formula("20", ins, order=6, exact=True)
for n in range(4, 7):
    print(n, "published", published.distribution[n], " corrected", corrected.distribution[n],
          " oracle", t20.rows[n])

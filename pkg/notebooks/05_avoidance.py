"""
Avoidance-only families
=======================

Several results only give the number of avoiders.  Each is compared to the
q=0 column of the oracle table.
"""

from meshpatterns import build, catalog_pattern, distribution_table, formula, parse_mesh_pattern

N = 7
cases = [
    ("28-2", [parse_mesh_pattern("1;"), catalog_pattern("Z")], None),
    ("27", [parse_mesh_pattern("1;"), parse_mesh_pattern("1;")], None),
    ("30", [parse_mesh_pattern("1;")], None),
    ("34", [], 3),
    ("34-2", [parse_mesh_pattern("1;")], 2),
]
for fid, inners, k in cases:
    a = formula(fid, inners, k=k, order=N).avoidance.at_q(0)
    o = distribution_table(build(fid, inners, k), N).avoidance()
    print(f"{fid:5} k={k}  formula {a}\n{'':11}oracle  {o}")

# Nr. 30 as published disagrees once the inner pattern is nonempty;
# the solved form matches
print(formula("30", [parse_mesh_pattern("1;")], order=N, exact=True).avoidance.at_q(0))

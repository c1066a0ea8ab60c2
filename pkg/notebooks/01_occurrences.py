"""
Counting mesh pattern occurrences
=================================

A mesh pattern is a classical pattern together with a set of shaded boxes
that must stay empty.  This walks through a small example by hand.
"""

from meshpatterns import catalog_pattern, count_occurrences, find_occurrences, parse_mesh_pattern

# 231 with boxes (1,2) and (2,1) shaded
p = parse_mesh_pattern("231;1,2 2,1")
host = (2, 4, 5, 3, 1)

# every subsequence order-isomorphic to 231, and which of them survive the shading
for occ in find_occurrences(parse_mesh_pattern("231;"), host):
    values = "".join(str(host[i - 1]) for i in occ)
    print(values, "occurrence" if occ in find_occurrences(p, host) else "blocked")

print("total:", count_occurrences(p, host))

# Z: a single point with the bottom-left and top-right boxes shaded.
# In 21 both points qualify, in 12 neither does.
Z = catalog_pattern("Z")
print("Z in 12:", count_occurrences(Z, (1, 2)), " Z in 21:", count_occurrences(Z, (2, 1)))

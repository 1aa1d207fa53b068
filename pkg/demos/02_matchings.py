"""Perfect matchings of a wheel, and how two of them differ."""

from itertools import combinations

from matchcover.families import wheel
from matchcover.graph import delete_vertices
from matchcover.matching import (
    Matching,
    count_pm_containing,
    enumerate_perfect_matchings,
    exists_alternating_cycle,
    max_matching,
    symmetric_difference_components,
)

g = wheel(6)  # hub 0, rim 1..5
for m in enumerate_perfect_matchings(g):
    print(sorted(m))

for e in g.edges:
    print(e, "in", count_pm_containing(g, e), "perfect matchings")

# drop the hub and one rim vertex: an odd path is left, with a unique perfect matching
def unique_matching_without(drop):
    h, new_of = delete_vertices(g, drop, return_mapping=True)
    old_of = {v: k for k, v in new_of.items()}
    (m,) = enumerate_perfect_matchings(h)
    assert not exists_alternating_cycle(h, m)
    return Matching(g, [(old_of[u], old_of[v]) for u, v in m])

for a, b in combinations(range(1, 6), 2):
    comps = symmetric_difference_components(unique_matching_without({0, a}),
                                            unique_matching_without({0, b}))
    print(a, b, [(c.kind, c.vertices, c.length) for c in comps])

print("maximum matching of W7:", sorted(max_matching(wheel(7))))

"""Removable, b-invariant and solitary edges on wheels, ladders and prisms."""

from matchcover.edges import classify_all_edges, vertex_tallies
from matchcover.families import moebius_ladder, prism, wheel

for n in (6, 8):
    g = wheel(n)
    print(f"W{n}")
    for r in classify_all_edges(g):
        print(f"   {r.edge}  pms={r.pm_count}  removable={r.removable:d}  "
              f"b-inv={r.b_invariant:d}  solitary={r.solitary:d}")
    print("   tallies", vertex_tallies(g))

# these attain the smallest possible number of b-invariant edges, n/2
for label, g in [("M8", moebius_ladder(8)), ("M12", moebius_ladder(12)), ("P10", prism(10))]:
    rows = classify_all_edges(g)
    print(label, "b-invariant:", sum(r.b_invariant for r in rows), "of", g.m)

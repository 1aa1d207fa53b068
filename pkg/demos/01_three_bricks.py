"""K4, the triangular prism and the Petersen graph: bricks, and which are solid."""

from matchcover import families
from matchcover.graph6 import to_graph6
from matchcover.matching import count_perfect_matchings
from matchcover.structure import find_nonsolid_witness, is_brick

for name, g in [("K4", families.complete(4)),
                ("C6-complement", families.c6_complement()),
                ("Petersen", families.petersen())]:
    print(f"{name:14} {to_graph6(g):10} n={g.n:2} m={g.m:2} "
          f"pms={count_perfect_matchings(g)} brick={is_brick(g)}")
    w = find_nonsolid_witness(g)
    if w is None:
        print("   solid")
    else:
        w.validate(g)  # disjoint odd cycles, remainder really has a perfect matching
        print(f"   nonsolid: {w.cycle1} + {w.cycle2}, remainder {sorted(w.remainder_matching)}")

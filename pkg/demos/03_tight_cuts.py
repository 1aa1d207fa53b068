"""Tight cut decomposition of a few matching covered graphs."""

import random

from matchcover.families import cycle, prism, wheel
from matchcover.graph import Graph
from matchcover.graph6 import to_graph6
from matchcover.structure import tight_cut_decomposition

two_k4s = Graph(8, [(0, 3), (0, 5), (0, 6), (1, 4), (1, 6), (1, 7), (2, 5), (2, 7),
                    (3, 6), (3, 7), (4, 6), (4, 7)])

for name, g in [("C6", cycle(6)), ("cube", prism(8)), ("W8", wheel(8)), ("two K4s", two_k4s)]:
    r = tight_cut_decomposition(g, validate=True)
    print(f"{name}: b = {r.brick_count}")
    for step in r.trace:
        print(f"   cut {step.graph6} along {step.shore}")
    for h, tag in r.leaves:
        print(f"   {tag:5} {to_graph6(h)}")

# another order of cuts gives the same leaves up to isomorphism
r = tight_cut_decomposition(two_k4s, rng=random.Random(1))
print("shuffled:", sorted(to_graph6(h) for h, _ in r.leaves))

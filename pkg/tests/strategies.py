from __future__ import annotations

import random

from hypothesis import strategies as st

from matchcover.graph import Graph


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 9, even: bool = False) -> Graph:
    n = draw(st.integers(min_order, max_order))
    if even and n % 2:
        n = n + 1 if n < max_order else n - 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_matching_covered(rng: random.Random, n: int, p: float) -> Graph | None:
    """Plant a perfect matching, sprinkle edges, keep only edges in some perfect matching."""
    from matchcover.graph import is_connected
    from matchcover.matching import perfect_matching_bits

    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted((perm[2 * i], perm[2 * i + 1]))) for i in range(n // 2)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    g = Graph(n, edges)
    union = 0
    for pm in perfect_matching_bits(g):
        union |= pm
    kept = [e for i, e in enumerate(g.edges) if union >> i & 1]
    h = Graph(n, kept)
    return h if n >= 2 and is_connected(h) else None

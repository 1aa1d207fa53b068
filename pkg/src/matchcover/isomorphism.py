"""Isomorphism testing for small graphs.

Colour refinement (seeded with degree and triangle count) gives an invariant
that is cheap to hash; graphs with equal invariants are compared by
backtracking over colour-preserving bijections. Intended for n <= 12; it
stays correct above that but can get slow on large regular graphs.
"""

from __future__ import annotations

from .graph import Graph, iter_bits


def _refine(g: Graph) -> tuple[list[int], tuple]:
    adj = g.adj
    n = g.n
    colors = []
    for v in range(n):
        nb = adj[v]
        tri = sum((adj[u] & nb).bit_count() for u in iter_bits(nb)) // 2
        colors.append((nb.bit_count(), tri))
    palette = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [palette[c] for c in colors]
    history = [tuple(sorted(palette.items()))]
    ncolors = len(palette)
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(adj[v]))))
            for v in range(n)
        ]
        distinct = sorted(set(sigs))
        palette = {s: i for i, s in enumerate(distinct)}
        colors = [palette[s] for s in sigs]
        history.append(tuple(sorted(sigs)))
        if len(distinct) == ncolors:
            break
        ncolors = len(distinct)
    return colors, tuple(history)


def invariant_key(g: Graph) -> tuple:
    """Hashable isomorphism invariant: equal for isomorphic graphs."""
    return (g.n, g.m, _refine(g)[1])


def _search_order(g: Graph, colors: list[int]) -> list[int]:
    size = {}
    for c in colors:
        size[c] = size.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        v = min(
            remaining,
            key=lambda x: (-(g.adj[x] & placed).bit_count(), size[colors[x]], -g.degree(x), x),
        )
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Return ``phi`` with ``phi[v]`` the image of ``v``, or ``None`` if not isomorphic."""
    if g.n != h.n or g.m != h.m:
        return None
    cg, kg = _refine(g)
    ch, kh = _refine(h)
    if kg != kh:
        return None
    return _match(g, cg, h, ch)


def _match(g: Graph, cg: list[int], h: Graph, ch: list[int]) -> list[int] | None:
    n = g.n
    order = _search_order(g, cg)
    # earlier[i]: positions j < i, with whether order[j] ~ order[i] in g
    earlier = [
        [(order[j], bool(g.adj[order[i]] >> order[j] & 1)) for j in range(i)]
        for i in range(n)
    ]
    by_color: dict[int, list[int]] = {}
    for w in range(n):
        by_color.setdefault(ch[w], []).append(w)
    phi = [-1] * n
    used = [False] * n
    hadj = h.adj

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in by_color[cg[v]]:
            if used[w]:
                continue
            wnb = hadj[w]
            if all(bool(wnb >> phi[u] & 1) == adjacent for u, adjacent in earlier[i]):
                phi[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        phi[v] = -1
        return False

    return list(phi) if extend(0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


class IsomorphismClasses:
    """Incremental deduplication of graphs up to isomorphism."""

    def __init__(self):
        self._buckets: dict[tuple, list[tuple[Graph, list[int]]]] = {}
        self.representatives: list[Graph] = []

    def add(self, g: Graph) -> bool:
        """Record ``g``; return True if it starts a new isomorphism class."""
        colors, key = _refine(g)
        bucket = self._buckets.setdefault((g.n, g.m, key), [])
        for h, hcolors in bucket:
            if _match(g, colors, h, hcolors) is not None:
                return False
        bucket.append((g, colors))
        self.representatives.append(g)
        return True

    def find(self, g: Graph) -> Graph | None:
        colors, key = _refine(g)
        for h, hcolors in self._buckets.get((g.n, g.m, key), ()):
            if _match(g, colors, h, hcolors) is not None:
                return h
        return None

    def __len__(self) -> int:
        return len(self.representatives)


def same_multiset(gs: list[Graph], hs: list[Graph]) -> bool:
    """True iff the two lists agree as multisets of isomorphism classes."""
    if len(gs) != len(hs):
        return False
    pool = list(hs)
    for g in gs:
        for i, h in enumerate(pool):
            if are_isomorphic(g, h):
                del pool[i]
                break
        else:
            return False
    return True

"""Matchings: maximum matching, perfect-matching existence/enumeration/counting,
and alternating paths and cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Literal

from .graph import Edge, Graph, delete_edge, iter_bits, mask_of, normalize_edge

# Above this order the subset DP is abandoned for the blossom algorithm.
DP_LIMIT = 24


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges of ``graph``."""

    graph: Graph
    edges: frozenset[Edge]

    def __init__(self, graph: Graph, edges: Iterable[Edge]):
        norm = frozenset(normalize_edge(u, v) for u, v in edges)
        seen = 0
        for u, v in norm:
            if not graph.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the graph")
            if seen >> u & 1 or seen >> v & 1:
                raise ValueError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
            seen |= (1 << u) | (1 << v)
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "edges", norm)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.edges))

    def __contains__(self, e: object) -> bool:
        return isinstance(e, tuple) and len(e) == 2 and normalize_edge(*e) in self.edges

    @property
    def covered_mask(self) -> int:
        return mask_of(v for e in self.edges for v in e)

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.graph.n

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


class _PerfectMatchingTable:
    """Memoised perfect-matching existence and counting over vertex subsets of one graph."""

    def __init__(self, g: Graph):
        self.adj = g.adj
        self._exists: dict[int, bool] = {0: True}
        self._count: dict[int, int] = {0: 1}

    def exists(self, mask: int) -> bool:
        hit = self._exists.get(mask)
        if hit is not None:
            return hit
        result = False
        if not mask.bit_count() & 1:
            low = mask & -mask
            rest = mask ^ low
            cand = self.adj[low.bit_length() - 1] & rest
            while cand:
                b = cand & -cand
                if self.exists(rest ^ b):
                    result = True
                    break
                cand ^= b
        self._exists[mask] = result
        return result

    def count(self, mask: int) -> int:
        hit = self._count.get(mask)
        if hit is not None:
            return hit
        total = 0
        if not mask.bit_count() & 1:
            low = mask & -mask
            rest = mask ^ low
            cand = self.adj[low.bit_length() - 1] & rest
            while cand:
                b = cand & -cand
                total += self.count(rest ^ b)
                cand ^= b
        self._count[mask] = total
        self._exists[mask] = total > 0
        return total


@lru_cache(maxsize=2048)
def pm_table(g: Graph) -> _PerfectMatchingTable:
    return _PerfectMatchingTable(g)


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching by Edmonds' blossom algorithm, O(n^3)."""
    n = g.n
    nbrs = [list(iter_bits(nb)) for nb in g.adj]
    match = [-1] * n

    # greedy start
    for v in range(n):
        if match[v] == -1:
            for u in nbrs[v]:
                if match[u] == -1:
                    match[v], match[u] = u, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        in_tree = [False] * n
        in_tree[root] = True
        queue = [root]

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not in_tree[i]:
                                in_tree[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        # flip the augmenting path ending at `to`
                        while to != -1:
                            pv = parent[to]
                            nxt = match[pv]
                            match[to], match[pv] = pv, to
                            to = nxt
                        return True
                    in_tree[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            augment_from(v)
    return Matching(g, [(v, match[v]) for v in range(n) if match[v] > v])


def has_perfect_matching(g: Graph) -> bool:
    """True iff ``g`` has a perfect matching (the 0-vertex graph has the empty one)."""
    if g.n % 2:
        return False
    if g.n > DP_LIMIT:
        return 2 * len(max_matching(g)) == g.n
    return pm_table(g).exists(g.full_mask)


def has_perfect_matching_on(g: Graph, mask: int) -> bool:
    """Perfect-matching test for the induced subgraph on the vertex set ``mask``."""
    return pm_table(g).exists(mask & g.full_mask)


def count_perfect_matchings(g: Graph, mask: int | None = None) -> int:
    return pm_table(g).count(g.full_mask if mask is None else mask)


def _enumerate_masks(g: Graph) -> Iterator[list[Edge]]:
    table = pm_table(g)
    adj = g.adj
    chosen: list[Edge] = []

    def rec(mask: int) -> Iterator[list[Edge]]:
        if mask == 0:
            yield list(chosen)
            return
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        for u in iter_bits(adj[v] & rest):
            sub = rest & ~(1 << u)
            if table.exists(sub):
                chosen.append((v, u))
                yield from rec(sub)
                chosen.pop()

    if g.n % 2 == 0 and table.exists(g.full_mask):
        yield from rec(g.full_mask)


def enumerate_perfect_matchings(g: Graph) -> Iterator[Matching]:
    """Every perfect matching exactly once.

    Backtracks on the lowest uncovered vertex, trying its neighbours in
    increasing order and pruning branches whose remainder has no perfect
    matching, so the order is deterministic.
    """
    for edges in _enumerate_masks(g):
        yield Matching(g, edges)


@lru_cache(maxsize=2048)
def perfect_matching_bits(g: Graph) -> tuple[int, ...]:
    """All perfect matchings as bitmasks over ``g.edges`` indices, in enumeration order."""
    index = g.edge_index
    return tuple(sum(1 << index[e] for e in edges) for edges in _enumerate_masks(g))


def count_pm_containing(g: Graph, e: Edge) -> int:
    u, v = g.check_edge(e)
    return pm_table(g).count(g.full_mask & ~(1 << u) & ~(1 << v))


@dataclass(frozen=True)
class AlternatingComponent:
    """A component of the symmetric difference of two matchings.

    ``vertices`` lists the component in path/cycle order (a cycle does not
    repeat its first vertex); ``tags[i]`` says which matching (1 or 2) the
    edge ``vertices[i] -- vertices[i+1]`` (cyclically for cycles) belongs to.
    """

    kind: Literal["path", "cycle"]
    vertices: tuple[int, ...]
    tags: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.tags)

    def edges(self) -> list[Edge]:
        vs = self.vertices
        k = len(self.tags)
        return [normalize_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(k)]


def symmetric_difference_components(m1: Matching, m2: Matching) -> list[AlternatingComponent]:
    """Components of the edge-induced subgraph on ``m1`` delta ``m2``.

    Components are sorted by smallest vertex. Paths are read from their
    smaller end; cycles start at their smallest vertex and head towards its
    smaller neighbour.
    """
    if m1.graph != m2.graph:
        raise ValueError("matchings belong to different graphs")
    tag: dict[Edge, int] = {}
    for e in m1.edges - m2.edges:
        tag[e] = 1
    for e in m2.edges - m1.edges:
        tag[e] = 2
    nbrs: dict[int, list[int]] = {}
    for u, v in tag:
        nbrs.setdefault(u, []).append(v)
        nbrs.setdefault(v, []).append(u)
    for lst in nbrs.values():
        lst.sort()

    done: set[int] = set()
    out = []
    for start in sorted(nbrs):
        if start in done:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        done |= comp
        ends = sorted(v for v in comp if len(nbrs[v]) == 1)
        kind = "path" if ends else "cycle"
        first = ends[0] if ends else min(comp)
        seq = [first]
        prev, cur = None, first
        while True:
            nxt = [y for y in nbrs[cur] if y != prev]
            if not nxt or (kind == "cycle" and nxt[0] == first):
                break
            prev, cur = cur, nxt[0]
            if cur == first:
                break
            seq.append(cur)
        k = len(seq) if kind == "cycle" else len(seq) - 1
        tags = tuple(tag[normalize_edge(seq[i], seq[(i + 1) % len(seq)])] for i in range(k))
        out.append(AlternatingComponent(kind, tuple(seq), tags))
    return out


def _check_matching_of(g: Graph, m: Matching) -> None:
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise ValueError(f"matching edge ({u}, {v}) is not an edge of the graph")


def find_alternating_cycle(g: Graph, m: Matching) -> AlternatingComponent | None:
    """An ``m``-alternating cycle of ``g``, or ``None`` if there is none.

    Such a cycle lives on the vertices covered by ``m``, where ``m`` is
    perfect; it exists iff that induced subgraph has a second perfect
    matching, which must avoid some edge of ``m``.
    """
    _check_matching_of(g, m)
    covered = m.covered_mask
    for e in sorted(m.edges):
        h = delete_edge(g, e)
        if not has_perfect_matching_on(h, covered):
            continue
        other = _pm_on(h, covered)
        comps = symmetric_difference_components(Matching(g, m.edges), Matching(g, other))
        for comp in comps:
            if e in comp.edges():
                return comp
    return None


def exists_alternating_cycle(g: Graph, m: Matching) -> bool:
    return find_alternating_cycle(g, m) is not None


def _pm_on(g: Graph, mask: int) -> list[Edge]:
    table = pm_table(g)
    out = []
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        for u in iter_bits(g.adj[v] & rest):
            if table.exists(rest & ~(1 << u)):
                out.append((v, u))
                mask = rest & ~(1 << u)
                break
        else:
            raise ValueError("vertex set has no perfect matching")
    return out


def exists_open_alternating_path(g: Graph, m: Matching, x: int, y: int) -> bool:
    """Is there an open ``m``-alternating path from ``x`` to ``y``?

    Open means the first and last edges are not in ``m`` (so the length is
    odd). For ``x == y`` this asks for an odd cycle through ``x`` whose
    ``m``-edges form the perfect matching of the cycle minus ``x``.

    Interior vertices of such a path are covered by ``m`` and cannot be the
    mates of ``x`` or ``y``. Dropping those mates, and splitting ``x`` into
    two copies when ``x == y``, turns the path into an augmenting path
    between the only two exposed vertices, which exists iff the remaining
    covered vertices plus the two ends have a perfect matching.
    """
    _check_matching_of(g, m)
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError("query vertex outside the graph")
    mate = m.mate()
    adj = list(g.adj)
    n = g.n
    if x == y:
        drop = {x, mate.get(x, x)}
        keep = (m.covered_mask | (1 << x)) & ~mask_of(drop)
        x2 = n
        adj.append(0)
        nb = g.adj[x] & ~mask_of(drop)
        adj[x2] = nb
        for u in iter_bits(nb):
            adj[u] |= 1 << x2
        keep |= (1 << x) | (1 << x2)
        # x keeps only its non-mate neighbours
        adj[x] = nb
        if x in mate:
            adj[mate[x]] &= ~(1 << x)
        h = Graph.from_adjacency(adj)
        return has_perfect_matching_on(h, keep)
    drop = {mate[v] for v in (x, y) if v in mate} - {x, y}
    keep = (m.covered_mask | (1 << x) | (1 << y)) & ~mask_of(drop)
    if mate.get(x) == y:
        adj[x] &= ~(1 << y)
        adj[y] &= ~(1 << x)
    h = Graph.from_adjacency(adj)
    return has_perfect_matching_on(h, keep)

"""Simple undirected graphs on dense integer vertices.

Vertices are ``0..n-1`` and adjacency is stored as one bitmask per vertex, so
vertex subsets are plain ints throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.edges
    ((0, 1), (1, 2))
    >>> g.degree(1)
    2
    """

    __slots__ = ("n", "adj", "_edges", "_edge_index")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"parallel edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._init(n, tuple(adj))

    def _init(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_edges", None)
        object.__setattr__(self, "_edge_index", None)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        """Build from per-vertex neighbour bitmasks (must be symmetric, loop-free)."""
        adj = tuple(adj)
        n = len(adj)
        for v, nb in enumerate(adj):
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if nb >> n:
                raise ValueError(f"neighbour of vertex {v} out of range")
            for u in iter_bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        g = cls.__new__(cls)
        g._init(n, adj)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def __reduce__(self):
        return (Graph.from_adjacency, (self.adj,))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``; the order defines edge indices."""
        if self._edges is None:
            es = tuple(
                (u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            )
            object.__setattr__(self, "_edges", es)
        return self._edges

    @property
    def edge_index(self) -> dict[Edge, int]:
        if self._edge_index is None:
            object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(self.edges)})
        return self._edge_index

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    def check_edge(self, e: Edge) -> Edge:
        """Return ``e`` normalized, raising ``ValueError`` if it is not an edge."""
        u, v = e
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        return normalize_edge(u, v)

    def incident_edge_masks(self) -> list[int]:
        """Per vertex, the bitmask (over edge indices) of incident edges."""
        inc = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            inc[u] |= 1 << i
            inc[v] |= 1 << i
        return inc


@dataclass(frozen=True)
class Shore:
    """A vertex subset X of a graph together with its cut boundary."""

    graph: Graph
    members: frozenset[int]

    def __init__(self, graph: Graph, members: Iterable[int]):
        members = frozenset(members)
        if not 1 <= len(members) <= graph.n - 1:
            raise ValueError(f"shore must have between 1 and {graph.n - 1} vertices, got {len(members)}")
        if any(not 0 <= v < graph.n for v in members):
            raise ValueError("shore contains a vertex outside the graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "members", members)

    @property
    def mask(self) -> int:
        return mask_of(self.members)

    @property
    def boundary(self) -> list[Edge]:
        x = self.mask
        return [(u, v) for u, v in self.graph.edges if (x >> u & 1) != (x >> v & 1)]

    @property
    def neighborhood(self) -> frozenset[int]:
        """N(X): vertices outside X with a neighbour in X."""
        x = self.mask
        nb = 0
        for v in self.members:
            nb |= self.graph.adj[v]
        return frozenset(iter_bits(nb & ~x))

    def complement(self) -> Shore:
        return Shore(self.graph, set(range(self.graph.n)) - self.members)

    def is_trivial(self) -> bool:
        return len(self.members) == 1 or len(self.members) == self.graph.n - 1


def _members(g: Graph, x: Shore | Iterable[int]) -> frozenset[int]:
    return x.members if isinstance(x, Shore) else Shore(g, x).members


def induced_subgraph(g: Graph, keep_mask: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep_mask`` with vertices relabelled compactly in order."""
    old = list(iter_bits(keep_mask & g.full_mask))
    new_of = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        nb = 0
        for u in iter_bits(g.adj[v] & keep_mask):
            nb |= 1 << new_of[u]
        adj.append(nb)
    h = Graph.__new__(Graph)
    h._init(len(old), tuple(adj))
    return h, new_of


def delete_vertices(g: Graph, vertices: Iterable[int], *, return_mapping: bool = False):
    """Remove ``vertices`` from ``g``.

    Surviving vertices keep their relative order and are relabelled ``0..k-1``.
    With ``return_mapping=True`` a ``(graph, old_to_new)`` pair is returned.
    """
    drop = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
        drop |= 1 << v
    h, new_of = induced_subgraph(g, g.full_mask & ~drop)
    return (h, new_of) if return_mapping else h


def delete_edge(g: Graph, e: Edge) -> Graph:
    u, v = g.check_edge(e)
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    h = Graph.__new__(Graph)
    h._init(g.n, tuple(adj))
    return h


def add_edge(g: Graph, e: Edge) -> Graph:
    u, v = e
    if u == v or g.has_edge(u, v) or not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"cannot add edge ({u}, {v})")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    h = Graph.__new__(Graph)
    h._init(g.n, tuple(adj))
    return h


def contract_shore(g: Graph, x: Shore | Iterable[int]) -> Graph:
    """Shrink the shore ``x`` to a single vertex, giving the simple graph G/X.

    Vertices outside ``x`` keep their relative order as ``0..k-1``; the new
    vertex is ``k`` and is adjacent to exactly N(X). Parallel edges collapse and
    loops disappear.
    """
    members = _members(g, x)
    xmask = mask_of(members)
    rest, new_of = induced_subgraph(g, g.full_mask & ~xmask)
    k = rest.n
    hub_nb = 0
    adj = list(rest.adj)
    for v, i in new_of.items():
        if g.adj[v] & xmask:
            hub_nb |= 1 << i
            adj[i] |= 1 << k
    adj.append(hub_nb)
    h = Graph.__new__(Graph)
    h._init(k + 1, tuple(adj))
    return h


def component_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from ``start`` inside the vertex set ``within``."""
    if within is None:
        within = g.full_mask
    seen = 1 << start
    frontier = seen
    adj = g.adj
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & within & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph, within: int | None = None) -> bool:
    if within is None:
        within = g.full_mask
    if within == 0:
        return True
    start = (within & -within).bit_length() - 1
    return component_mask(g, start, within) == within


def components(g: Graph) -> list[int]:
    left = g.full_mask
    out = []
    while left:
        start = (left & -left).bit_length() - 1
        comp = component_mask(g, start, left)
        out.append(comp)
        left &= ~comp
    return out


def is_complete(g: Graph) -> bool:
    return all(nb.bit_count() == g.n - 1 for nb in g.adj)


def has_separator_of_size(g: Graph, k: int) -> bool:
    """True if deleting some ``k`` vertices leaves a disconnected graph (of >= 2 vertices)."""
    full = g.full_mask
    for s in combinations(range(g.n), k):
        rest = full & ~mask_of(s)
        if rest.bit_count() >= 2 and not is_connected(g, rest):
            return True
    return False


def is_k_connected(g: Graph, k: int) -> bool:
    """k-connectivity: more than ``k`` vertices and no separator of fewer than ``k``."""
    if g.n <= k:
        return False
    if g.min_degree() < k:
        return False
    return not any(has_separator_of_size(g, s) for s in range(k))


def vertex_connectivity(g: Graph) -> int:
    """Size of a minimum vertex cut (``n - 1`` for complete graphs).

    Exhaustive over candidate cut sets smaller than the minimum degree, so it
    is only meant for small graphs (n <= 16).
    """
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least two vertices")
    if is_complete(g):
        return g.n - 1
    delta = g.min_degree()
    for k in range(delta):
        if has_separator_of_size(g, k):
            return k
    return delta


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def complement(g: Graph) -> Graph:
    full = g.full_mask
    h = Graph.__new__(Graph)
    h._init(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))
    return h


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])

"""Matching-covered graphs, tight cuts, bricks and braces, solidity, wheels."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Literal

from .graph import (
    Graph,
    Shore,
    _members,
    component_mask,
    contract_shore,
    is_bipartite,
    is_complete,
    is_connected,
    is_k_connected,
    iter_bits,
    mask_of,
)
from .graph6 import to_graph6
from .matching import Matching, _pm_on, has_perfect_matching, perfect_matching_bits, pm_table


def is_matching_covered(g: Graph) -> bool:
    """Connected, at least two vertices, and every edge lies in a perfect matching."""
    if g.n < 2 or g.n % 2 or not is_connected(g):
        return False
    table = pm_table(g)
    full = g.full_mask
    return all(table.exists(full & ~(1 << u) & ~(1 << v)) for u, v in g.edges)


def _boundary_bits(inc: list[int], xmask: int) -> int:
    # edges inside X appear twice and cancel
    b = 0
    for v in iter_bits(xmask):
        b ^= inc[v]
    return b


def is_tight_cut(g: Graph, x: Shore | frozenset[int] | set[int]) -> bool:
    """Every perfect matching of ``g`` uses exactly one edge of the cut."""
    bnd = _boundary_bits(g.incident_edge_masks(), mask_of(_members(g, x)))
    return all((pm & bnd).bit_count() == 1 for pm in perfect_matching_bits(g))


def nontrivial_tight_shores(g: Graph) -> Iterator[int]:
    """Bitmasks of all nontrivial tight shores, in increasing order."""
    n = g.n
    pms = perfect_matching_bits(g)
    if not pms:
        return
    inc = g.incident_edge_masks()
    for k in range(3, n - 2, 2):
        for combo in combinations(range(n), k):
            xmask = mask_of(combo)
            bnd = _boundary_bits(inc, xmask)
            if all((pm & bnd).bit_count() == 1 for pm in pms):
                yield xmask


def find_nontrivial_tight_cut(g: Graph, rng: random.Random | None = None) -> Shore | None:
    """A nontrivial tight shore, or ``None`` when ``g`` is a brick or a brace.

    Without ``rng`` the shore with the lowest bitmask is returned; with
    ``rng`` one is drawn uniformly from all nontrivial tight shores.
    """
    if rng is None:
        best = min(nontrivial_tight_shores(g), default=None)
    else:
        shores = list(nontrivial_tight_shores(g))
        best = rng.choice(shores) if shores else None
    return None if best is None else Shore(g, iter_bits(best))


@dataclass(frozen=True)
class TraceStep:
    graph6: str
    shore: tuple[int, ...]


@dataclass
class DecompositionResult:
    leaves: list[tuple[Graph, Literal["brick", "brace"]]]
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def brick_count(self) -> int:
        return sum(1 for _, tag in self.leaves if tag == "brick")

    @property
    def bricks(self) -> list[Graph]:
        return [h for h, tag in self.leaves if tag == "brick"]

    @property
    def braces(self) -> list[Graph]:
        return [h for h, tag in self.leaves if tag == "brace"]


def tight_cut_decomposition(
    g: Graph, rng: random.Random | None = None, validate: bool = False
) -> DecompositionResult:
    """Split along nontrivial tight cuts until every piece is a brick or brace.

    For a tight shore X the two contractions G/X and G/X-bar are decomposed
    in that order, depth first. ``rng`` randomises the choice of cut;
    ``validate`` re-checks that every contraction is matching covered.
    """
    if not is_matching_covered(g):
        raise ValueError("tight cut decomposition needs a matching covered graph")
    result = DecompositionResult(leaves=[])
    stack = [g]
    while stack:
        h = stack.pop()
        shore = find_nontrivial_tight_cut(h, rng)
        if shore is None:
            result.leaves.append((h, "brace" if is_bipartite(h) else "brick"))
            continue
        result.trace.append(TraceStep(to_graph6(h), tuple(sorted(shore.members))))
        shrunk_x = contract_shore(h, shore)
        shrunk_xbar = contract_shore(h, shore.complement())
        if validate:
            for piece in (shrunk_x, shrunk_xbar):
                if not is_matching_covered(piece):
                    raise AssertionError(f"tight cut contraction {to_graph6(piece)} is not matching covered")
        stack.append(shrunk_xbar)
        stack.append(shrunk_x)
    return result


def brick_count(g: Graph) -> int:
    """b(G), the number of bricks in a tight cut decomposition."""
    return tight_cut_decomposition(g).brick_count


def is_brick(g: Graph) -> bool:
    """3-connected and G - {u, v} has a perfect matching for every pair u, v."""
    n = g.n
    if n < 4 or n % 2 or g.min_degree() < 3:
        return False
    table = pm_table(g)
    full = g.full_mask
    for u in range(n):
        for v in range(u + 1, n):
            if not table.exists(full & ~(1 << u) & ~(1 << v)):
                return False
    return is_k_connected(g, 3)


def is_brace(g: Graph) -> bool:
    return is_bipartite(g) and is_matching_covered(g) and find_nontrivial_tight_cut(g) is None


def enumerate_odd_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    """Each simple odd cycle once, as a vertex sequence starting at its smallest vertex.

    The second vertex is smaller than the last, which fixes the direction.
    Cycles come out grouped by smallest vertex, in depth-first order.
    """
    adj = g.adj
    for s in range(g.n):
        higher = g.full_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        def walk(v: int, used: int) -> Iterator[tuple[int, ...]]:
            if len(path) >= 3 and len(path) % 2 and adj[v] >> s & 1 and path[1] < v:
                yield tuple(path)
            for u in iter_bits(adj[v] & higher & ~used):
                path.append(u)
                yield from walk(u, used | (1 << u))
                path.pop()

        yield from walk(s, 1 << s)


def odd_cycle_vertex_sets(g: Graph, max_size: int | None = None) -> list[int]:
    """Bitmasks of vertex sets spanned by at least one odd cycle, by (size, mask).

    Path-extension dynamic programme: for each start vertex s (the smallest of
    the cycle) track which end vertices are reachable by a path from s through
    exactly a given vertex set.
    """
    n = g.n
    if max_size is None:
        max_size = n
    adj = g.adj
    found = set()
    for s in range(n):
        higher = g.full_mask & ~((1 << (s + 1)) - 1)
        layer = {1 << s: 1 << s}
        for size in range(2, max_size + 1):
            nxt: dict[int, int] = {}
            for mask, ends in layer.items():
                for v in iter_bits(ends):
                    for u in iter_bits(adj[v] & higher & ~mask):
                        nm = mask | (1 << u)
                        nxt[nm] = nxt.get(nm, 0) | (1 << u)
            if not nxt:
                break
            if size % 2 and size >= 3:
                for mask, ends in nxt.items():
                    if ends & adj[s]:
                        found.add(mask)
            layer = nxt
    return sorted(found, key=lambda m: (m.bit_count(), m))


def spanning_cycle(g: Graph, mask: int) -> tuple[int, ...] | None:
    """A cycle through exactly the vertices of ``mask`` (smallest vertex first), if any."""
    verts = list(iter_bits(mask))
    if len(verts) < 3:
        return None
    s = verts[0]
    adj = g.adj
    path = [s]

    def walk(v: int, used: int) -> bool:
        if used == mask:
            return bool(adj[v] >> s & 1)
        for u in iter_bits(adj[v] & mask & ~used):
            path.append(u)
            if walk(u, used | (1 << u)):
                return True
            path.pop()
        return False

    return tuple(path) if walk(s, 1 << s) else None


@dataclass(frozen=True)
class NonsolidWitness:
    """Two vertex-disjoint odd cycles whose removal leaves a perfect matching."""

    cycle1: tuple[int, ...]
    cycle2: tuple[int, ...]
    remainder_matching: Matching

    def validate(self, g: Graph) -> None:
        """Raise ``AssertionError`` unless this is a genuine witness in ``g``."""
        for c in (self.cycle1, self.cycle2):
            assert len(c) >= 3 and len(c) % 2 == 1, f"{c} is not an odd cycle"
            assert len(set(c)) == len(c), f"{c} repeats a vertex"
            for i in range(len(c)):
                assert g.has_edge(c[i], c[(i + 1) % len(c)]), f"{c} is not a cycle of the graph"
        assert not set(self.cycle1) & set(self.cycle2), "cycles share a vertex"
        m = self.remainder_matching
        assert m.graph == g, "matching is for another graph"
        rest = set(range(g.n)) - set(self.cycle1) - set(self.cycle2)
        assert m.covered == rest, "matching does not cover exactly the remainder"


def _nonsolid_witness(g: Graph) -> NonsolidWitness | None:
    n = g.n
    table = pm_table(g)
    full = g.full_mask
    sets = odd_cycle_vertex_sets(g, max_size=n - 3)
    for i, a in enumerate(sets):
        for b in sets[i + 1:]:
            if a & b:
                continue
            rest = full & ~a & ~b
            if rest.bit_count() % 2 == 0 and table.exists(rest):
                return NonsolidWitness(
                    spanning_cycle(g, a), spanning_cycle(g, b), Matching(g, _pm_on(g, rest))
                )
    return None


def find_nonsolid_witness(g: Graph) -> NonsolidWitness | None:
    """For a brick ``g``: a witness of nonsolidity, or ``None`` if ``g`` is solid.

    Candidate cycles are taken by vertex set, ordered by (size, bitmask), and
    pairs are scanned in that order; the first hit is returned.
    """
    if not is_brick(g):
        raise ValueError("solidity is only defined for bricks")
    return _nonsolid_witness(g)


def is_solid(g: Graph) -> bool:
    return find_nonsolid_witness(g) is None


def is_wheel(g: Graph) -> bool:
    n = g.n
    if n < 4:
        return False
    if n == 4:
        return is_complete(g)
    hubs = [v for v in range(n) if g.degree(v) == n - 1]
    if len(hubs) != 1:
        return False
    hub = hubs[0]
    rim = g.full_mask & ~(1 << hub)
    if any((g.adj[v] & rim).bit_count() != 2 for v in iter_bits(rim)):
        return False
    start = (rim & -rim).bit_length() - 1
    return component_mask(g, start, rim) == rim


def wheel_parts(g: Graph) -> tuple[int, list[tuple[int, int]], list[tuple[int, int]]]:
    """Hub, spokes and rim edges of a wheel of order at least 5."""
    if not is_wheel(g) or g.n < 5:
        raise ValueError("not a wheel of order >= 5")
    hub = next(v for v in range(g.n) if g.degree(v) == g.n - 1)
    spokes = [e for e in g.edges if hub in e]
    rim = [e for e in g.edges if hub not in e]
    return hub, spokes, rim

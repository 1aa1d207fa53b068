"""Per-edge classification: removable, b-invariant, solitary."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Edge, Graph, delete_edge, is_connected
from .matching import count_pm_containing, perfect_matching_bits
from .structure import brick_count, is_matching_covered


@dataclass(frozen=True)
class EdgeClassification:
    edge: Edge
    in_some_pm: bool
    pm_count: int
    removable: bool
    b_invariant: bool
    solitary: bool


class VertexTally(NamedTuple):
    nonremovable: int
    nonsolitary: int


def is_removable(g: Graph, e: Edge) -> bool:
    """G - e is still matching covered (g is assumed matching covered)."""
    return is_matching_covered(delete_edge(g, e))


def is_b_invariant(g: Graph, e: Edge) -> bool:
    """Removable and b(G - e) = b(G). False for nonremovable edges."""
    if not is_removable(g, e):
        return False
    return brick_count(delete_edge(g, e)) == brick_count(g)


def is_solitary(g: Graph, e: Edge) -> bool:
    return count_pm_containing(g, e) == 1


def classify_all_edges(g: Graph) -> list[EdgeClassification]:
    """One record per edge of ``g``, in ``g.edges`` order.

    The perfect matchings of ``g`` are enumerated once: G - e is matching
    covered iff it is connected and every other edge lies in some perfect
    matching of ``g`` that avoids ``e``.
    """
    if not is_matching_covered(g):
        raise ValueError("edge classification needs a matching covered graph")
    pms = perfect_matching_bits(g)
    m = len(g.edges)
    all_edges = (1 << m) - 1
    b_g = brick_count(g)
    out = []
    for i, e in enumerate(g.edges):
        bit = 1 << i
        count = 0
        avoid_union = 0
        for pm in pms:
            if pm & bit:
                count += 1
            else:
                avoid_union |= pm
        g_minus_e = delete_edge(g, e)
        removable = avoid_union == all_edges & ~bit and is_connected(g_minus_e)
        b_invariant = removable and brick_count(g_minus_e) == b_g
        out.append(EdgeClassification(e, count > 0, count, removable, b_invariant, count == 1))
    return out


def vertex_tallies(g: Graph, classification: list[EdgeClassification] | None = None) -> list[VertexTally]:
    """Per vertex: how many incident edges are nonremovable / nonsolitary."""
    if classification is None:
        classification = classify_all_edges(g)
    nonrem = [0] * g.n
    nonsol = [0] * g.n
    for rec in classification:
        for v in rec.edge:
            nonrem[v] += not rec.removable
            nonsol[v] += not rec.solitary
    return [VertexTally(a, b) for a, b in zip(nonrem, nonsol)]

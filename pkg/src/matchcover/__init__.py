"""Perfect matchings, tight cuts, bricks and solid bricks on small graphs."""

from .corpus import CorpusSource, graphs_of_order, ingest
from .edges import (
    EdgeClassification,
    classify_all_edges,
    is_b_invariant,
    is_removable,
    is_solitary,
    vertex_tallies,
)
from .families import FamilySpec, generate
from .graph import (
    Graph,
    Shore,
    contract_shore,
    delete_edge,
    delete_vertices,
    is_bipartite,
    vertex_connectivity,
)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .harness import VerificationReport, emit_report, load_report, verify_claim, verify_main_theorem
from .isomorphism import are_isomorphic
from .matching import (
    AlternatingComponent,
    Matching,
    count_perfect_matchings,
    count_pm_containing,
    enumerate_perfect_matchings,
    exists_alternating_cycle,
    exists_open_alternating_path,
    find_alternating_cycle,
    has_perfect_matching,
    max_matching,
    symmetric_difference_components,
)
from .structure import (
    DecompositionResult,
    NonsolidWitness,
    brick_count,
    enumerate_odd_cycles,
    find_nonsolid_witness,
    find_nontrivial_tight_cut,
    is_brick,
    is_matching_covered,
    is_solid,
    is_tight_cut,
    is_wheel,
    tight_cut_decomposition,
)

__version__ = "0.1.0"

"""Evenness of vertex sets in finite simple connected graphs.

Scores how evenly a set of vertices spreads out: exact energy (sum of
reciprocal pairwise distances), sum of distances, maximally even sets on
cycles, the majorization order on distance vectors, and musical readings
(rhythms, chords, scales) of the optimal sets.
"""

from .evenness import (
    check_vertex_set,
    complement,
    distance_vector,
    energy,
    format_rational,
    is_maximally_even,
    j_set,
    maximally_even_family,
    rational_decimal,
    rational_json,
    sum_distances,
)
from .graphs import (
    DisconnectedError,
    DistanceMatrix,
    EdgeListError,
    FamilySpec,
    FamilySpecError,
    Graph,
    GraphError,
    all_pairs_distances,
    build_family,
    complete,
    cycle,
    cycle_power,
    dihedral_canonical,
    hypercube,
    is_distance_degree_regular,
    mobius_ladder,
    parse_edge_list,
    path,
    reflected,
    rotated,
    rotation_canonical,
    vertex_distance_vector,
)
from .majorization import (
    HasseDiagram,
    HasseNode,
    MajorizationRelation,
    MEMajorizationReport,
    TransferError,
    check_me_majorization,
    hasse_diagram,
    majorize,
    robinhood_transfer,
    schur_phi,
)
from .music import (
    Catalog,
    CatalogEntry,
    CatalogError,
    default_catalog,
    format_steps,
    identify,
    load_catalog,
    onsets_from_steps,
    render_rhythm,
    step_sequence,
    step_symbols,
)
from .search import (
    BudgetExceededError,
    ComplementReport,
    CycleTheoremReport,
    Objective,
    OptimaReport,
    count_dihedral_classes,
    enumerate_optima,
    verify_complement_property,
    verify_cycle_theorem,
)

__version__ = "0.1.0"

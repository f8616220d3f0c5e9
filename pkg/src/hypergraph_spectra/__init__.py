"""Spectral theory of uniform power hypergraphs.

Blow-up constructions (vertices to s-sets, edges to k-sets), parity-based
odd-bipartiteness certificates, adjacency and signless Laplacian tensor
spectral radii by bracketed power iteration, the matching matrix-side
computations, and exhaustive small-graph experiments around the limit point
sqrt(2 + sqrt(5)).
"""

from .constructions import (
    BlowupMap,
    caterpillar,
    cycle_graph,
    cycle_plus_pendant,
    generalized_power,
    internal_path_edges,
    path_graph,
    s_cycle,
    s_path,
    subdivide,
    t_graph,
)
from .core import Bipartition, Hypergraph, SimpleGraph, degree, is_connected, remove_edge
from .enumeration import (
    canonical_code,
    canonical_form,
    enumerate_connected_graphs,
    enumerate_connected_nonbipartite,
    graph_code,
    graph_from_code,
)
from .experiments import (
    ExperimentReport,
    ReportCheck,
    convergence_report,
    min_rho_search,
    verify_theorem_nob,
)
from .fileio import (
    ParseError,
    parse_graph,
    parse_hypergraph,
    serialize_graph,
    serialize_hypergraph,
)
from .matrixspec import (
    LimitPointTable,
    adjacency_matrix,
    alpha_n,
    beta_n,
    limit_point_table,
    pendant_cycle_rho_sequence,
    rho_adjacency_matrix,
    rho_signless_laplacian_matrix,
    signless_laplacian_matrix,
    tau_threshold,
)
from .oddbip import (
    ParitySystem,
    gf2_solve,
    is_bipartite,
    odd_bipartition,
    parity_system,
    verify_odd_bipartition,
)
from .cli import main, run_cli
from .tensors import (
    AdjacencyTensor,
    DenseTensor,
    ImplicitTensor,
    SignlessLaplacianTensor,
    SpectralResult,
    check_subsolution,
    half_edge_constancy,
    identity_tensor,
    lift_vector,
    power_iteration_rho,
    rho_bounds,
    row_sums,
    s_ratios,
    txk,
    weakly_irreducible,
)

__version__ = "0.1.0"

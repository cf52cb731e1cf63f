"""Exact-arithmetic toolkit for graphs with exactly two main eigenvalues."""

from .census import (
    AuditReport,
    CensusRow,
    CensusTable,
    ClassificationError,
    Convention,
    bundled_reference_rows,
    census_table,
    classify_member,
    compare_to_reference,
    enumerate_switching_class,
    verify_switching_invariance_exhaustive,
)
from .constructions import (
    BoundaryCertificate,
    RealizationError,
    SpliceError,
    SpliceSpec,
    boundary_impossibility,
    cone_over_regular,
    equitable_biregular_from,
    sp_component,
    splice,
    splice_chain,
    symplectic_graph,
    three_valenced_boundary,
)
from .equitable import (
    QuotientMatrix,
    is_equitable,
    main_bound,
    quotient_matrix,
    refine_to_equitable,
    valency_partition,
)
from .graph6 import Graph6Error, parse_graph6, parse_graph6_lines, write_graph6
from .graphs import (
    Graph,
    circulant,
    complete,
    cone,
    cycle,
    degree_vector,
    diameter,
    graph_from_adjacency_text,
    graph_from_edges,
    induced_subgraph,
    is_connected,
    path,
    relabel,
    star,
    t_lambda_tree,
    vertex_cap,
)
from .linalg import (
    char_poly,
    distinct_root_count,
    eigenvalues_float,
    poly_divides,
    rank_exact,
    solve_in_span,
    squarefree_part,
)
from .seidel import (
    SeidelReport,
    is_strong,
    seidel_matrix,
    seidel_report,
    srg_params,
    switch,
    verify_nonregular_structure,
)
from .spectrum import (
    MainSpectrumReport,
    QuadraticPair,
    TwoWalkParams,
    analyze,
    existence_check,
    harmonic_delta,
    main_eigenvalue_count,
    main_values,
    two_walk_params,
    walk_matrix,
)

__version__ = "0.1.0"

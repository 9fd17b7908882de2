"""Clique tensor spectra and localized clique-count bounds."""

from .graphs import (
    Graph,
    ParseError,
    Partition,
    ValidationError,
    complement,
    complete_multipartite,
    complete_multipartite_partition,
    connected_components,
    cycle_graph,
    gnp_random,
    induced_subgraph,
    parse_dimacs,
    parse_edge_list,
    path_graph,
    petersen_graph,
    serialize_dimacs,
    serialize_edge_list,
    turan_graph,
)
from .cliques import (
    CliqueCatalog,
    build_catalog,
    clique_components,
    clique_core,
    clique_number,
    cliques_of_order,
    extension_order,
    vertex_extension_order,
)
from .spectral import (
    CliqueTensor,
    SpectralResult,
    apply,
    multistart_spectral_radius,
    power_iteration,
    product_sum,
    rayleigh_value,
    spectral_radius,
)
from .bounds import (
    BoundReport,
    BoundSuite,
    EqualityCase,
    count_bound_from_vertex_counts,
    count_bound_from_vertex_orders,
    count_vs_radius_bound,
    equality_case_predicate,
    evaluate_bounds,
    inverse_order_weight,
    liu_ning_bound,
    localized_turan_bound,
    maclaurin_product_check,
    multipartite_radius_formula,
    nikiforov_bound,
    order_uniformity_comparison,
    order_weight,
    radius_bound_from_clique_orders,
    radius_bound_from_vertex_counts,
    radius_bound_from_vertex_orders,
    turan_edge_bound,
    weight_count_balance_check,
    weighted_clique_sum_check,
    weighted_vertex_sum_check,
    witness_vector,
)

from .verify import (
    SuiteConfig,
    VerificationReport,
    canonical_report_bytes,
    emit_report,
    enumerate_all_graphs,
    equality_census,
    load_report,
    run_suite,
)

__version__ = "0.1.0"

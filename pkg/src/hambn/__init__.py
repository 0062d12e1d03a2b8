"""Boolean networks with Hamiltonian dynamics and the unate self-dual family ``f^[n]``."""

from .core import (
    BooleanNetwork,
    Configuration,
    DimensionError,
    SubnetworkError,
    TruthTable,
    evaluate,
    evaluate_local,
    point_counts,
    subnetwork,
)
from .dynamics import (
    FunctionalGraph,
    HamiltonianClass,
    Kind,
    analyze,
    canonical_form,
    classify,
    isomorphic,
    trajectory,
    transition_graph,
    two_hamiltonian_witness,
)
from .interaction import (
    ArcSign,
    Connectivity,
    SignedDigraph,
    component_graph,
    connectivity,
    interaction_graph,
    local_interaction_graph,
    strongly_connected_components,
)
from .properties import (
    assumability_violation,
    is_balanced,
    is_self_dual,
    threshold_feasibility,
    unate_analysis,
)
from .construction import (
    Variant,
    build_family,
    fixture_source,
    paper_fixture,
    realize_hamiltonian,
    realize_two_hamiltonian,
    table1_predicate,
    z_config,
)
from .formats import ParseError, export_dot, load_network, parse_network, serialize_network
from .suites import SuiteReport, run_suite

__version__ = "0.1.0"

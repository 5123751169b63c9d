"""Independence complexes of graphs: star clusters, homology, constructions and bounds."""

from .bounds import (
    BoundReport,
    bound_report,
    catloc_cover,
    check_cover,
    chromatic_cover,
    clawfree_bound,
    diameter_bound,
    distance3_bound,
    engstrom_clawfree_bound,
    extension_hypothesis,
    maxdeg_bound,
)
from .collapses import CollapseTrace, greedy_collapse, is_collapsible_greedy, replay, strong_core
from .complexes import (
    Poset,
    SimplicialComplex,
    alexander_dual,
    barycentric_subdivision,
    clique_complex,
    cone,
    incomparability_graph,
    independence_complex,
    join,
    link,
    matching_complex,
    order_complex,
    simplicial_suspension,
    star,
    star_cluster,
    suspension_pieces,
)
from .constructions import (
    Relation,
    crossing_resolution,
    csorba_full_subdivision,
    degree3_reduction,
    dowker_graph,
    dowker_pair,
    graph_suspension,
    jonsson_graph,
    subdivide_edge_four,
)
from .exceptions import (
    ComplexError,
    GraphError,
    HypothesisViolation,
    InstanceTooLarge,
    ParseError,
    StarClusterError,
)
from .graphs import Graph, complement, maximal_independent_sets
from .homology import (
    ALL,
    HomologyGroup,
    HomologyProfile,
    homological_connectivity,
    independence_homology,
    reduced_homology,
    smith_normal_form,
)
from .verify import SUITES, VerificationReport, run_suite

__version__ = "0.1.0"

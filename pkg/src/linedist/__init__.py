"""Distinguishing numbers of iterated line graphs.

Line graphs with provenance, automorphism groups and their lifts, vertex
clusters, a verifiable two-colouring that breaks every symmetry of
``L^K(G)``, and the tree-level test for ``D(L(T)) > D(T)``.
"""

__version__ = "0.1.0"

from ._config import config_context, get_config, set_config
from .autgroup import (
    AutGroup,
    automorphisms,
    cluster_equivariance,
    compose,
    identity,
    inverse,
    is_automorphism,
    lift,
    lift_chain,
    verify_sabidussi,
)
from .certificate import certificate_from_json, certificate_to_json, verify_certificate
from .distinguish import (
    BreakCertificate,
    Coloring,
    break_symmetry,
    distinguishing_colorings,
    distinguishing_number,
    is_distinguishing,
    min_degree_stabilization,
    partition_bound,
    remark_bound,
    rooted_sb_count,
)
from .enumeration import free_tree_code, rooted_code, unlabeled_trees
from .exceptions import *  # noqa: F401,F403
from .graph import (
    Edge,
    Graph,
    SpecialClass,
    build,
    classify_special,
    complete,
    cycle,
    degree,
    diamond,
    double_star,
    is_connected,
    is_tree,
    max_degree,
    min_degree,
    path,
    paw,
    star,
)
from .io import format_edge_list, parse_edge_list, to_dot
from .linegraph import (
    ClusterFamily,
    IterationChain,
    Provenance,
    clusters,
    iterate,
    line_graph,
    origin_map,
)
from .treesym import (
    decompose,
    edge_assoc,
    line_branch,
    monochromatic_center_test,
    peel,
    predict_increase,
    sweep,
    tree_report,
)

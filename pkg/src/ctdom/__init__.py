"""Contraction numbers for total and semitotal domination."""

from types import ModuleType as _ModuleType

from .classes import (
    DichotomyVerdict,
    Verdict,
    classify_dichotomy,
    contains_induced,
    find_hole,
    is_h_free,
    is_induced_subgraph_of,
)
from .contraction import (
    CtCertificate,
    CtResult,
    ct,
    ct_bruteforce,
    ct_characterization,
    k_edge_contraction,
    verify_certificate,
)
from .detectors import Pattern, STConfig, find_friendly_triple, find_pattern, find_st_config, validate_witness
from .domination import (
    DomKind,
    SolverBudget,
    enumerate_dom_sets,
    gamma,
    is_dom_set,
    min_dom_set,
    private_neighborhood,
    witnesses,
)
from .errors import CtdomError
from .graph import (
    Graph,
    bits,
    build_graph,
    contract_edge,
    four_subdivide,
    induced_subgraph,
    load_graph,
    make_named_graph,
    parse_edge_list,
    random_connected_graph,
)
from .poly import BoundFn, BoundKind, bound_value, two_ec_semitotal, two_ec_total_p6kp3

__version__ = "0.1.0"

__all__ = [n for n, obj in list(globals().items()) if not n.startswith("_") and not isinstance(obj, _ModuleType)]

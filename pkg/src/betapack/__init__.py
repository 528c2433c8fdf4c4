"""Exact beta-packing and alpha-domination solvers for small simple graphs."""

from fractions import Fraction

from .closed_forms import (
    ClosedFormResult,
    complete_bipartite_formula,
    cycle_formula,
    gamma_complete_bipartite,
    gamma_path_one_third,
    multipartite_beta1_formula,
    path_formula,
)
from .domination import (
    ComparisonRecord,
    DominationSolveResult,
    alpha_domination_number,
    compare_parameters,
    satisfies_alpha_domination,
)
from .errors import BetaPackError, CapExceededError, GraphFormatError, InputError, InvariantViolation
from .graph import (
    Graph,
    GraphClassSpec,
    distinct_degrees,
    generate,
    is_connected_induced,
    max_degree,
    parse_edge_list,
    parse_generator_spec,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .packing import (
    PackingProfile,
    PackingSolveResult,
    beta_pack_number,
    enumerate_maximal_packings,
    interesting_betas,
    is_packing_set,
    packing_profile,
    satisfies_packing,
    threshold,
)
from .rational import format_ratio, parse_ratio

__version__ = "0.1.0"

"""Exact centralizer algebra, principality, Bredon cohomology and TC bounds."""

__version__ = "0.1.0"

from .groups import (  # noqa: E402
    Free,
    FreeAbelian,
    GroupElement,
    GroupId,
    Heisenberg,
    Klein,
    ball,
    commutator,
    element,
    identity,
    inverse,
    klein_named,
    klein_four_form,
    multiply,
    parse_group,
)
from .centralizers import centralizer, centralizer_bruteforce, double_centralizer, subgroup_index  # noqa: E402
from .principality import condition_c, is_principal, property_n_witness_search  # noqa: E402
from .bredon import cd_d_report, cubical_resolution, phi_chain_map, phi_on_constant_cohomology  # noqa: E402
from .tcbounds import ExteriorClass, is_essential, tc_bounds, zero_divisor_cup_length  # noqa: E402
from .joins import build_join, homology  # noqa: E402

__all__ = [
    "ExteriorClass",
    "Free",
    "FreeAbelian",
    "GroupElement",
    "GroupId",
    "Heisenberg",
    "Klein",
    "ball",
    "build_join",
    "cd_d_report",
    "centralizer",
    "centralizer_bruteforce",
    "commutator",
    "condition_c",
    "cubical_resolution",
    "double_centralizer",
    "element",
    "homology",
    "identity",
    "inverse",
    "is_essential",
    "is_principal",
    "klein_named",
    "klein_four_form",
    "multiply",
    "parse_group",
    "phi_chain_map",
    "phi_on_constant_cohomology",
    "property_n_witness_search",
    "subgroup_index",
    "tc_bounds",
    "zero_divisor_cup_length",
]

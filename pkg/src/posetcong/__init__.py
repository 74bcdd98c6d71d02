"""Congruences of finite posets with cone-valued operations."""

from .boolean import (
    Complementation,
    enumerate_boolean_congruences,
    filter_kernel_status,
    find_complementation,
    is_boolean,
    is_distributive,
    lemma2_kernel_exclusion,
    pixley_T,
    theorem2_checks,
    undefined_join_pairs,
    weak_regularity,
)
from .checks import CheckReport, run_checks
from .congruence import (
    ConFamily,
    CongruenceError,
    EquivRelation,
    con_poset,
    congruence_properties,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    format_relation,
    is_congruence,
    kernel,
    parse_relation,
    quotient_poset,
)
from .heyting import (
    StarTable,
    enumerate_star_congruences,
    is_deductive_system,
    is_star_congruence,
    malcev_T,
    star_table,
    strong_filter_congruence,
)
from .io import PosetDocument, emit_dot, load, load_bundled, parse_poset_file
from .poset import ElementSet, Poset, PosetError, build_poset, lower_cone, max_l, min_u, upper_cone

__version__ = "0.1.0"

__all__ = [
    "CheckReport", "Complementation", "ConFamily", "CongruenceError", "ElementSet",
    "EquivRelation", "Poset", "PosetDocument", "PosetError", "StarTable",
    "build_poset", "con_poset", "congruence_properties", "emit_dot",
    "enumerate_boolean_congruences", "enumerate_congruences",
    "enumerate_congruences_bruteforce", "enumerate_star_congruences",
    "filter_kernel_status", "find_complementation", "format_relation", "is_boolean",
    "is_congruence", "is_deductive_system", "is_distributive", "is_star_congruence",
    "kernel", "lemma2_kernel_exclusion", "load", "load_bundled", "lower_cone",
    "malcev_T", "max_l", "min_u", "parse_poset_file", "parse_relation", "pixley_T",
    "quotient_poset", "run_checks", "star_table", "strong_filter_congruence",
    "theorem2_checks", "undefined_join_pairs", "upper_cone", "weak_regularity",
]

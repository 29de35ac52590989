"""Characters of the equivariant D-modules on Veronese cones and the
multiplicities behind them."""

from .characters import (
    MultiplicityTable,
    d2_table_predicate,
    dj_character,
    e_character,
    m_character,
    prepare_window,
)
from .ext import ExtTable, ext_closed_form, ext_via_bott
from .multiplicities import (
    a_lambda_j,
    a_pleth,
    det_sym_weight,
    e_lambda,
    m_lambda,
    module_character,
    nu_at_level,
    nu_stable,
    p_mult,
    s_mult,
)
from .spectral import (
    PrimitiveSum,
    check_ordering,
    d0_spectral,
    filtration_check,
    filtration_multiplicity,
    hook_string_orderability,
    primitive_partitions,
    primitive_sum_check,
)

__all__ = [
    "ExtTable",
    "MultiplicityTable",
    "PrimitiveSum",
    "a_lambda_j",
    "a_pleth",
    "check_ordering",
    "d0_spectral",
    "d2_table_predicate",
    "det_sym_weight",
    "dj_character",
    "e_character",
    "e_lambda",
    "ext_closed_form",
    "ext_via_bott",
    "filtration_check",
    "filtration_multiplicity",
    "hook_string_orderability",
    "m_character",
    "m_lambda",
    "module_character",
    "nu_at_level",
    "nu_stable",
    "p_mult",
    "prepare_window",
    "primitive_partitions",
    "primitive_sum_check",
    "s_mult",
]

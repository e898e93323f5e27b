"""Gröbner–Shirshov bases in free associative algebras over the rationals."""

from .freealg import Alphabet, Poly, leading_word, make_monic, poly_arith
from .orders import DegLex, HnnOrder, order_diagnostics
from .rewrite import (
    BudgetExceeded,
    Presentation,
    Rule,
    cd_crosscheck,
    check_condition_A,
    check_triviality,
    elw_step,
    find_compositions,
    is_gs_basis,
    normal_form,
    red_enumerate,
    reduce_word,
    shirshov_complete,
)

__all__ = [
    "Alphabet",
    "BudgetExceeded",
    "DegLex",
    "HnnOrder",
    "Poly",
    "Presentation",
    "Rule",
    "cd_crosscheck",
    "check_condition_A",
    "check_triviality",
    "elw_step",
    "find_compositions",
    "is_gs_basis",
    "leading_word",
    "make_monic",
    "normal_form",
    "order_diagnostics",
    "poly_arith",
    "red_enumerate",
    "reduce_word",
    "shirshov_complete",
]

__version__ = "0.1.0"

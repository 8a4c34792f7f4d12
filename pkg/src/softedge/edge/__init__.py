"""Exact soft-edge machinery: Airy functions, the Painleve II boundary-value
table, Tracy-Widom weights, and the closed-form / integral scaling functions."""

from .airy import airy_ai, airy_ai_prime, airy_bi, airy_bi_prime, airy_integral
from .closed_forms import edge_density, shifted_wigner, wigner
from .painleve import EdgeTable, PainleveConvergenceError, build_edge_table, tw2_mean
from .scaling import (
    FTildeSolution,
    g_tilde,
    p_typ_conditional,
    p_typ_exact,
    p_typ_norm,
    rho_edge_conditional,
    rho_edge_exact,
    solve_f_tilde,
)
from .asymptotes import (
    A4_GAP,
    GAP_TAIL_AMPLITUDE,
    GLAISHER,
    ZETA_PRIME_MINUS_ONE,
    UnsupportedAsymptote,
    asymptote,
)

__all__ = [
    "airy_ai", "airy_ai_prime", "airy_bi", "airy_bi_prime", "airy_integral",
    "wigner", "shifted_wigner", "edge_density",
    "EdgeTable", "build_edge_table", "tw2_mean", "PainleveConvergenceError",
    "FTildeSolution", "solve_f_tilde", "g_tilde", "p_typ_norm",
    "rho_edge_exact", "p_typ_exact", "rho_edge_conditional", "p_typ_conditional",
    "asymptote", "UnsupportedAsymptote",
    "A4_GAP", "GAP_TAIL_AMPLITUDE", "GLAISHER", "ZETA_PRIME_MINUS_ONE",
]

"""Generalized p-trigonometric functions and numerical checks of
logarithmic-mean convexity inequalities."""

from .convexity import (
    CLAIMS,
    Claim,
    ConvexityReport,
    Direction,
    GridSpec,
    Profile,
    Verdict,
    chebyshev_check,
    check_claim,
    get_claim,
    jensen_check,
    mn_convexity_check,
    monotone_profile,
    profile_values,
    run_theorem_suite,
    solve_r_p,
    solve_s_p,
)
from .errors import BracketError, ConvergenceError, DomainError, PFunError
from .forward import (
    FunctionKind,
    cos_p,
    cosh_p,
    derivative_eval,
    forward_eval,
    plaplacian_lambda_profile,
    sin_cos_p,
    sin_p,
    sinh_p,
    tan_p,
    tanh_p,
)
from .inverse import InverseKind, arccos_p, arcsin_p, arcsinh_p, arctan_p, arctanh_p, inverse_eval
from .means import MeanKind, Power, evaluate_mean
from .numerics import DEFAULT_CONFIG, Interval, NumericConfig, RootResult, central_diff, integrate, solve_bracketed
from .special import PParam, b_p, c_p, pi_p

__version__ = "0.1.0"

__all__ = [
    "CLAIMS",
    "Claim",
    "ConvexityReport",
    "Direction",
    "GridSpec",
    "Profile",
    "Verdict",
    "chebyshev_check",
    "check_claim",
    "get_claim",
    "jensen_check",
    "mn_convexity_check",
    "monotone_profile",
    "profile_values",
    "run_theorem_suite",
    "solve_r_p",
    "solve_s_p",
    "BracketError",
    "ConvergenceError",
    "DomainError",
    "PFunError",
    "FunctionKind",
    "cos_p",
    "cosh_p",
    "derivative_eval",
    "forward_eval",
    "plaplacian_lambda_profile",
    "sin_cos_p",
    "sin_p",
    "sinh_p",
    "tan_p",
    "tanh_p",
    "InverseKind",
    "arccos_p",
    "arcsin_p",
    "arcsinh_p",
    "arctan_p",
    "arctanh_p",
    "inverse_eval",
    "MeanKind",
    "Power",
    "evaluate_mean",
    "DEFAULT_CONFIG",
    "Interval",
    "NumericConfig",
    "RootResult",
    "central_diff",
    "integrate",
    "solve_bracketed",
    "PParam",
    "b_p",
    "c_p",
    "pi_p",
]

"""Grassmannian di- and trilogarithms.

Closed forms, log-singular quadrature over CP^1 and CP^2, and exact checks of
the algebraic identities behind them.
"""

__version__ = "0.1.0"

from .configspace import (Configuration, FormalSum, GaussianRational, cross_ratio, delta,
                          dualize, drop, is_generic, project, triple_ratio_arg)
from .errors import (CrossRatioDegenerateError, CutError, DegenerateError, DomainError,
                     GrasslogError, NonGenericError, SingularityError, SizeError)
from .grasspoly import (difference_term, grass_dilog, grass_trilog_closed, grass_trilog_numeric,
                        lie_trilog, special_config, special_stratum_value)
from .polylog import bloch_wigner, li, sv_trilog
from .quad import Integrand, QuadratureEstimate, integrate_cp1, integrate_cp2

__all__ = [
    "Configuration", "FormalSum", "GaussianRational", "cross_ratio", "delta", "dualize", "drop",
    "is_generic", "project", "triple_ratio_arg",
    "CrossRatioDegenerateError", "CutError", "DegenerateError", "DomainError", "GrasslogError",
    "NonGenericError", "SingularityError", "SizeError",
    "difference_term", "grass_dilog", "grass_trilog_closed", "grass_trilog_numeric", "lie_trilog",
    "special_config", "special_stratum_value",
    "bloch_wigner", "li", "sv_trilog",
    "Integrand", "QuadratureEstimate", "integrate_cp1", "integrate_cp2",
]

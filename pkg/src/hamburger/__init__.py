"""Functional equations of Dirichlet series with the chi factor of zeta.

Special functions (``specfun``), the zeta(s - 2k) family and generalized
Dirichlet series (``dirichlet``), the T_{d,e} distributions (``tde``),
atomic measures and their Prony decomposition (``measures``) and seeded
verification suites (``verify``).
"""

from .errors import NumericalError

__all__ = ["NumericalError"]
__version__ = "0.1.0"

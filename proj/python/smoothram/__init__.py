"""Exact smooth-restricted Ramanujan expansions.

All rational results are ``fractions.Fraction``; certified values are
``(center, radius)`` pairs. Function arguments accept catalog ids such as
``"mu"`` or ``"ramanujan-sum:3"`` as well as ``ArithmeticFunction`` objects.
"""

from ._core import (
    ArithmeticFunction,
    CertificateError,
    ParseError,
    PeriodicityError,
    TruncationError,
    approximate_reef_residual,
    coefficients,
    conjecture1_eval,
    conjecture1_sweep,
    correlation,
    correlation_coefficient,
    counterexample1,
    euler_phi,
    mobius,
    orthogonality_matrix,
    prop2_exact,
    prop2_truncated,
    ramanujan_sum,
    reef_report,
    smooth_power_series,
    smooth_restrict,
    smooth_up_to,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

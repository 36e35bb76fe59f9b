"""Scalar special functions and the 2x2 Cholesky factor used by the samplers.

The heavy lifting is delegated to :mod:`scipy.special`; these wrappers add the
domain checks the estimators rely on.
"""
import math

import numpy as np
from scipy import special

from .exceptions import DomainError


def _finite(x, name):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError(f"{name} must be finite")
    return x


def _unwrap(x):
    return float(x) if np.ndim(x) == 0 else x


def digamma(x):
    """Digamma function psi(x) for x > 0."""
    x = _finite(x, "x")
    if np.any(x <= 0):
        raise DomainError("digamma is only defined here for x > 0")
    return _unwrap(special.digamma(x))


def std_normal_cdf(x):
    """Standard normal CDF."""
    return _unwrap(special.ndtr(_finite(x, "x")))


def std_normal_quantile(p):
    """Inverse of :func:`std_normal_cdf` on the open interval (0, 1)."""
    p = _finite(p, "p")
    if np.any((p <= 0) | (p >= 1)):
        raise DomainError("p must lie in the open interval (0, 1)")
    return _unwrap(special.ndtri(p))


def exponential_quantile(p, rate):
    """Quantile ``-log(1 - p) / rate`` of the exponential distribution.

    Parameters
    ----------
    p : float or array_like
        Probabilities in [0, 1).
    rate : float
        Positive rate parameter (the mean is ``1 / rate``).
    """
    p = _finite(p, "p")
    if not (math.isfinite(rate) and rate > 0):
        raise DomainError(f"rate must be positive, got {rate!r}")
    if np.any((p < 0) | (p >= 1)):
        raise DomainError("p must lie in [0, 1)")
    return _unwrap(-np.log1p(-p) / rate)


def cholesky2(rho):
    """Lower Cholesky factor of the 2x2 correlation matrix [[1, rho], [rho, 1]].

    ``rho = +-1`` is admitted and yields the degenerate factor whose second
    row duplicates (or mirrors) the first deviate.
    """
    rho = float(rho)
    if not (math.isfinite(rho) and -1.0 <= rho <= 1.0):
        raise DomainError(f"rho must lie in [-1, 1], got {rho!r}")
    return np.array([[1.0, 0.0], [rho, math.sqrt(1.0 - rho * rho)]])

"""Seeded generators for the bivariate simulation designs.

Normal deviates come from the inverse normal CDF applied to PCG64 uniforms
(53-bit midpoints, strictly inside (0, 1)), so a seed fixes every draw
independently of numpy's own normal sampler.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from ._special import cholesky2
from .exceptions import DomainError

FAMILIES = ("bvn_mean_shift", "bvn_rho_sweep", "gauss_copula_sweep")
_FAMILY_CODES = {name: i + 1 for i, name in enumerate(FAMILIES)}
_REFERENCE, _COMPARISON = 0, 1


@dataclass(frozen=True)
class MarginalSpec:
    kind: str = "standard_normal"
    rate: float = 1.0

    def __post_init__(self):
        if self.kind not in ("standard_normal", "exponential"):
            raise ValueError(f"unknown marginal kind {self.kind!r}")
        if self.kind == "exponential" and not (math.isfinite(self.rate) and self.rate > 0):
            raise DomainError(f"exponential rate must be positive, got {self.rate!r}")


DEFAULT_COPULA_MARGINALS = (MarginalSpec("standard_normal"), MarginalSpec("exponential", 0.5))


@dataclass(frozen=True)
class ScenarioSpec:
    """One reference/comparison pair of a simulation design.

    `parameter` is the mean shift ``i`` (comparison mean ``(i, i)``) for
    ``bvn_mean_shift`` and the comparison correlation for the two sweeps.
    """

    family: str
    parameter: float
    n: int = 500
    seed: int = 0
    marginals: tuple = DEFAULT_COPULA_MARGINALS

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not math.isfinite(self.parameter):
            raise ValueError("parameter must be finite")
        if self.family != "bvn_mean_shift" and not 0.0 <= self.parameter <= 1.0:
            raise ValueError(f"{self.family} needs a correlation in [0, 1], got {self.parameter}")


def stream(seed, *key):
    """Generator for the sub-stream ``key`` of `seed`."""
    return np.random.default_rng([int(seed), *(int(k) for k in key)])


def sample_std_normal(rng, n):
    """`n` standard normal deviates by inverse-CDF transform."""
    u = (rng.integers(0, 2**53, size=n, dtype=np.int64) + 0.5) / 2.0**53
    return special.ndtri(u)


def sample_bivariate_normal(rng, n, mean=(0.0, 0.0), rho=0.0):
    """`n` rows of a bivariate normal with unit variances and correlation `rho`."""
    L = cholesky2(rho)
    z = sample_std_normal(rng, 2 * n).reshape(n, 2)
    return z @ L.T + np.asarray(mean, dtype=float)


def _to_marginal(z, spec):
    if spec.kind == "standard_normal":
        return z
    # exponential quantile of Phi(z), written through the survival function
    # -log(1 - Phi(z)) = -log Phi(-z) so the upper tail never rounds to p = 1
    with np.errstate(divide="ignore"):
        return -special.log_ndtr(-z) / spec.rate


def sample_gaussian_copula(rng, n, rho, marginals=DEFAULT_COPULA_MARGINALS):
    """Gaussian copula with correlation `rho` joined to the given marginals."""
    if len(marginals) != 2:
        raise ValueError("need exactly two marginals")
    z = sample_bivariate_normal(rng, n, rho=rho)
    return np.column_stack([_to_marginal(z[:, j], spec) for j, spec in enumerate(marginals)])


def generate_scenario(spec):
    """Return ``(reference, comparison)`` samples for `spec`.

    The reference sample depends only on ``(seed, family, n)``, so every
    parameter value of a design is compared against the same reference.
    """
    code = _FAMILY_CODES[spec.family]
    ref_rng = stream(spec.seed, code, _REFERENCE)
    cmp_rng = stream(spec.seed, code, _COMPARISON, round(spec.parameter * 1_000_000) % 2**63)
    if spec.family == "bvn_mean_shift":
        reference = sample_bivariate_normal(ref_rng, spec.n, rho=0.5)
        comparison = sample_bivariate_normal(cmp_rng, spec.n, mean=(spec.parameter, spec.parameter), rho=0.5)
    elif spec.family == "bvn_rho_sweep":
        reference = sample_bivariate_normal(ref_rng, spec.n, rho=0.0)
        comparison = sample_bivariate_normal(cmp_rng, spec.n, rho=spec.parameter)
    else:
        reference = sample_bivariate_normal(ref_rng, spec.n, rho=0.0)
        comparison = sample_gaussian_copula(cmp_rng, spec.n, spec.parameter, spec.marginals)
    return reference, comparison

"""Two-sample statistics: copula-entropy difference, MI baseline, MMD, energy.

Every statistic takes two samples with the same number of columns and
returns a float that grows as the samples' distributions diverge.
"""
import dataclasses
import math
from functools import partial

import numpy as np
from scipy.spatial.distance import cdist

from ._validation import check_pair, check_positive_int
from .copula import EstimatorConfig, copula_entropy

HYPOTHESES = ("H0", "H1")
MMD_VARIANTS = ("biased", "unbiased")


def build_labels(m, n, hypothesis):
    """Group-labeling column for the pooled sample.

    Under ``"H1"`` the first `m` rows are labeled 0 and the remaining `n`
    rows 1; under ``"H0"`` every row is labeled 1.
    """
    m = check_positive_int(m, "m")
    n = check_positive_int(n, "n")
    if hypothesis == "H1":
        return np.concatenate([np.zeros(m), np.ones(n)])
    if hypothesis == "H0":
        return np.ones(m + n)
    raise ValueError(f"hypothesis must be one of {HYPOTHESES}, got {hypothesis!r}")


def _label_config(config):
    cfg = EstimatorConfig() if config is None else config
    # a constant label column has no usable ranks without random tie-breaking
    if cfg.tie_policy != "distinct-random":
        cfg = dataclasses.replace(cfg, tie_policy="distinct-random")
    return cfg


def ce_difference(X, labels_null, labels_alt, config=None):
    """``CE(X, labels_null) - CE(X, labels_alt)`` with labels appended as a column."""
    X = np.asarray(X, dtype=float)
    cfg = _label_config(config)
    return copula_entropy(np.column_stack([X, labels_null]), cfg) - copula_entropy(
        np.column_stack([X, labels_alt]), cfg
    )


def tce_statistic(x1, x2, config=None):
    """Copula-entropy two-sample statistic.

    The pooled sample is augmented once with the all-ones null labeling and
    once with the group labeling; the statistic is the copula entropy of the
    first minus that of the second. It is near zero when both samples come
    from one distribution and approaches ``log 2`` for fully separated
    samples of equal size.

    Parameters
    ----------
    x1, x2 : array_like of shape (m, d) and (n, d)
    config : EstimatorConfig, optional
        ``tie_policy`` is always treated as ``"distinct-random"``.
    """
    x1, x2 = check_pair(x1, x2)
    m, n = x1.shape[0], x2.shape[0]
    cfg = _label_config(config)
    if m + n < cfg.k + 2:
        raise ValueError(f"need at least k + 2 = {cfg.k + 2} pooled rows, got {m + n}")
    X = np.vstack([x1, x2])
    return ce_difference(X, build_labels(m, n, "H0"), build_labels(m, n, "H1"), cfg)


def tmi_statistic(x1, x2, config=None):
    """Mutual-information baseline: ``CE(X) - CE(X, Y1)``.

    This is the estimated mutual information between the pooled sample and
    its group labels.
    """
    x1, x2 = check_pair(x1, x2)
    m, n = x1.shape[0], x2.shape[0]
    cfg = _label_config(config)
    if m + n < cfg.k + 2:
        raise ValueError(f"need at least k + 2 = {cfg.k + 2} pooled rows, got {m + n}")
    X = np.vstack([x1, x2])
    joint = copula_entropy(np.column_stack([X, build_labels(m, n, "H1")]), cfg)
    return -(joint - copula_entropy(X, cfg))


@dataclasses.dataclass(frozen=True)
class KernelConfig:
    """Gaussian kernel scale and MMD estimator variant."""

    delta: float = 1.0
    variant: str = "biased"

    def __post_init__(self):
        if not (math.isfinite(self.delta) and self.delta > 0):
            raise ValueError(f"delta must be positive, got {self.delta!r}")
        if self.variant not in MMD_VARIANTS:
            raise ValueError(f"variant must be one of {MMD_VARIANTS}, got {self.variant!r}")


def gaussian_kernel(a, b, delta=1.0):
    """``exp(-||a - b||^2 / (2 delta^2))``."""
    if not (math.isfinite(delta) and delta > 0):
        raise ValueError(f"delta must be positive, got {delta!r}")
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return math.exp(-float(np.sum((a - b) ** 2)) / (2.0 * delta * delta))


def _total(a):
    # summing in sorted order makes equal multisets give bit-identical totals
    return float(np.sum(np.sort(a, axis=None)))


def mmd2_statistic(x1, x2, kernel=None):
    """Squared maximum mean discrepancy with a Gaussian kernel.

    Parameters
    ----------
    x1, x2 : array_like of shape (m, d) and (n, d)
    kernel : KernelConfig, optional
        Defaults to ``delta=1`` and the biased (V-statistic) variant, which is
        never negative. The unbiased variant drops the diagonal of the
        within-sample kernel matrices and needs ``m, n >= 2``.
    """
    kc = KernelConfig() if kernel is None else kernel
    x1, x2 = check_pair(x1, x2)
    m, n = x1.shape[0], x2.shape[0]
    scale = 2.0 * kc.delta * kc.delta
    kxx = np.exp(-cdist(x1, x1, "sqeuclidean") / scale)
    kyy = np.exp(-cdist(x2, x2, "sqeuclidean") / scale)
    kxy = np.exp(-cdist(x1, x2, "sqeuclidean") / scale)
    if kc.variant == "biased":
        value = _total(kxx) / (m * m) + _total(kyy) / (n * n) - 2.0 * _total(kxy) / (m * n)
        return max(value, 0.0)
    if m < 2 or n < 2:
        raise ValueError("the unbiased MMD needs at least two rows per sample")
    xx = (_total(kxx) - _total(np.diag(kxx))) / (m * (m - 1))
    yy = (_total(kyy) - _total(np.diag(kyy))) / (n * (n - 1))
    return xx + yy - 2.0 * _total(kxy) / (m * n)


def energy_statistic(x1, x2):
    """Energy two-sample statistic ``mn / (m + n) * E``.

    ``E = 2 mean||x - y|| - mean||x - x'|| - mean||y - y'||`` with Euclidean
    norms and all pairs (including the zero diagonal) in the within-sample
    means.
    """
    x1, x2 = check_pair(x1, x2)
    m, n = x1.shape[0], x2.shape[0]
    within = _total(cdist(x1, x1)) / (m * m) + _total(cdist(x2, x2)) / (n * n)
    e = 2.0 * _total(cdist(x1, x2)) / (m * n) - within
    return m * n / (m + n) * max(e, 0.0)


STATISTICS = ("ce", "mi", "mmd", "energy")


def get_statistic(name, config=None, kernel=None):
    """Two-argument statistic function by name (``ce``, ``mi``, ``mmd``, ``energy``)."""
    if name == "ce":
        return partial(tce_statistic, config=config)
    if name == "mi":
        return partial(tmi_statistic, config=config)
    if name == "mmd":
        return partial(mmd2_statistic, kernel=kernel)
    if name == "energy":
        return energy_statistic
    raise ValueError(f"unknown statistic {name!r}; choose from {STATISTICS}")

"""Non-parametric copula entropy: empirical copula by ranks, then kNN entropy.

Copula entropy (CE) is the differential entropy of the copula density. It is
non-positive, zero iff the coordinates are independent, and equals minus the
mutual information among the coordinates. The estimator has two steps:

1. map every column to pseudo-observations ``rank / n`` (the empirical copula);
2. estimate the entropy of the pseudo-observations with a k-nearest-neighbor
   method under the max-norm, in nats.

For step 2 the default is the Kraskov-Stogbauer-Grassberger estimator
(their second algorithm), which evaluates the joint entropy and the uniform
marginal entropies with shared neighbor radii. Its errors near the faces of
the unit cube cancel between the joint and marginal terms. The plain
Kozachenko-Leonenko joint entropy (``estimator="kl"``) overestimates copula
entropy by roughly 0.09 nats for 500 bivariate points because of those faces.

Before the KSG step each rank ``r`` is replaced by ``r - v`` with ``v`` a
seeded uniform draw on [0, 1), which spreads the pseudo-observations
continuously over their rank cells without changing any order. On the raw
integer lattice the marginal neighbor counts always include both mirror
points at the radius, which biases the estimate toward zero by about 0.035
nats at ``n = 500``, ``rho = 0.5``.
"""
from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from ._special import digamma
from ._validation import check_positive_int, check_sample
from .exceptions import DegenerateInputError, DuplicatePointError
from .neighbors import kneighbors, kth_neighbor_distances

TIE_POLICIES = ("distinct-random", "average")
ESTIMATORS = ("ksg", "kl")


@dataclass(frozen=True)
class EstimatorConfig:
    """Settings of the copula entropy estimator.

    Parameters
    ----------
    k : int
        Neighbor order of the entropy estimator.
    tie_policy : {"distinct-random", "average"}
        ``"distinct-random"`` orders tied values by seeded random keys so every
        column's ranks are a permutation of ``1..n``. ``"average"`` assigns
        tied values the mean rank of their block.
    jitter_scale : float
        Optional uniform jitter, as a fraction of the column range, added
        before ranking under ``"distinct-random"``. Zero (the default) breaks
        exact ties only and never reorders distinct values.
    seed : int
        Seed of the tie-breaking keys.
    estimator : {"ksg", "kl"}
        Entropy step applied to the pseudo-observations.
    """

    k: int = 3
    tie_policy: str = "distinct-random"
    jitter_scale: float = 0.0
    seed: int = 0
    estimator: str = "ksg"

    def __post_init__(self):
        check_positive_int(self.k, "k")
        if self.tie_policy not in TIE_POLICIES:
            raise ValueError(f"tie_policy must be one of {TIE_POLICIES}, got {self.tie_policy!r}")
        if not (np.isfinite(self.jitter_scale) and self.jitter_scale >= 0):
            raise ValueError(f"jitter_scale must be >= 0, got {self.jitter_scale!r}")
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or self.seed < 0:
            raise ValueError(f"seed must be a non-negative integer, got {self.seed!r}")
        if self.estimator not in ESTIMATORS:
            raise ValueError(f"estimator must be one of {ESTIMATORS}, got {self.estimator!r}")


def _config(config):
    return EstimatorConfig() if config is None else config


def _ranks(X, cfg):
    X = check_sample(X, min_samples=2)
    n, d = X.shape
    if cfg.tie_policy == "average":
        if d == 1 and np.ptp(X[:, 0]) == 0:
            raise DegenerateInputError("constant column: all pseudo-observations would be equal")
        return rankdata(X, method="average", axis=0)

    rng = np.random.default_rng(cfg.seed)
    keys = rng.random((n, d))
    if cfg.jitter_scale > 0:
        spread = np.ptp(X, axis=0)
        spread = np.where(spread > 0, spread, 1.0)
        X = X + cfg.jitter_scale * spread * rng.random((n, d))
    ranks = np.empty((n, d))
    for j in range(d):
        ranks[np.lexsort((keys[:, j], X[:, j])), j] = np.arange(1, n + 1)
    return ranks


def rank_transform(X, config=None):
    """Pseudo-observations ``rank / n`` of each column of `X`.

    Parameters
    ----------
    X : array_like of shape (n, d)
    config : EstimatorConfig, optional

    Returns
    -------
    ndarray of shape (n, d) with entries in (0, 1]

    Raises
    ------
    DegenerateInputError
        A single constant column under the ``"average"`` policy.
    """
    ranks = _ranks(X, _config(config))
    return ranks / ranks.shape[0]


def kl_entropy(points, k=3, algorithm="auto"):
    """Kozachenko-Leonenko entropy estimate in nats.

    ``H = -psi(k) + psi(n) + (d / n) * sum_i log(2 * eps_i)`` where ``eps_i``
    is the max-norm distance from point ``i`` to its k-th nearest neighbor.

    Raises
    ------
    DuplicatePointError
        If any ``eps_i`` is zero.
    """
    points = check_sample(points, "points", min_samples=2)
    n, d = points.shape
    eps = kth_neighbor_distances(points, k, algorithm=algorithm)
    zero = np.flatnonzero(eps == 0)
    if zero.size:
        raise DuplicatePointError(zero)
    return -digamma(k) + digamma(n) + d * float(np.mean(np.log(2.0 * eps)))


def ksg_mutual_information(points, k=3):
    """Multi-information among the columns of `points` (KSG, second algorithm).

    ``I = psi(k) - (d - 1) / k + (d - 1) * psi(n) - <sum_j psi(n_j)>`` where,
    for each point, ``n_j`` counts the other points whose coordinate ``j`` lies
    within (inclusive) the largest coordinate-``j`` offset among its k nearest
    max-norm neighbors. A single column carries no dependence: the result is
    exactly 0.

    Raises
    ------
    DuplicatePointError
        If any point has a zero k-th neighbor distance.
    """
    points = check_sample(points, "points", min_samples=2)
    n, d = points.shape
    if d == 1:
        return 0.0
    dist, ind = kneighbors(points, k)
    zero = np.flatnonzero(dist[:, -1] == 0)
    if zero.size:
        raise DuplicatePointError(zero)
    radii = np.max(np.abs(points[ind] - points[:, None, :]), axis=1)
    counts = np.empty((n, d))
    rows = max(1, 4_000_000 // n)
    for start in range(0, n, rows):
        stop = min(n, start + rows)
        for j in range(d):
            near = np.abs(points[start:stop, j, None] - points[None, :, j]) <= radii[start:stop, j, None]
            counts[start:stop, j] = near.sum(axis=1) - 1
    return float(digamma(k) - (d - 1) / k + (d - 1) * digamma(n) - np.mean(np.sum(digamma(counts), axis=1)))


def copula_entropy(X, config=None):
    """Copula entropy of `X` in nats (non-positive in expectation).

    The estimate is a deterministic function of ``(X, config)``. Because it
    depends on `X` only through column ranks, it is unchanged by any strictly
    increasing transform of a column of tie-free data.
    """
    cfg = _config(config)
    ranks = _ranks(X, cfg)
    if cfg.estimator == "kl":
        return kl_entropy(ranks / ranks.shape[0], cfg.k)
    if cfg.tie_policy == "distinct-random":
        ranks = ranks - np.random.default_rng([cfg.seed, 1]).random(ranks.shape)
    return -ksg_mutual_information(ranks, cfg.k)


def mutual_information(X, config=None):
    """Mutual information among the columns of `X`, i.e. minus its copula entropy."""
    return -copula_entropy(X, config)


class CopulaTransformer(TransformerMixin, BaseEstimator):
    """Map data to the unit cube through its empirical marginal CDFs.

    ``fit_transform`` returns the pseudo-observations of the training data
    under the configured tie policy. ``transform`` evaluates the fitted
    right-continuous empirical CDFs, so new points may receive the value 0.

    Parameters
    ----------
    tie_policy : {"distinct-random", "average"}
    jitter_scale : float
    seed : int
    """

    def __init__(self, tie_policy="distinct-random", jitter_scale=0.0, seed=0):
        self.tie_policy = tie_policy
        self.jitter_scale = jitter_scale
        self.seed = seed

    def _estimator_config(self):
        return EstimatorConfig(tie_policy=self.tie_policy, jitter_scale=self.jitter_scale, seed=self.seed)

    def fit(self, X, y=None):
        self._estimator_config()
        X = validate_data(self, X, ensure_min_samples=2, dtype=np.float64)
        self.sorted_columns_ = np.sort(X, axis=0)
        return self

    def transform(self, X):
        check_is_fitted(self, "sorted_columns_")
        X = validate_data(self, X, reset=False, dtype=np.float64)
        n = self.sorted_columns_.shape[0]
        return np.column_stack(
            [np.searchsorted(self.sorted_columns_[:, j], X[:, j], side="right") / n for j in range(X.shape[1])]
        )

    def fit_transform(self, X, y=None):
        self.fit(X)
        return rank_transform(X, self._estimator_config())


class CopulaEntropy(BaseEstimator):
    """Estimator wrapper around :func:`copula_entropy`.

    Attributes
    ----------
    entropy_ : float
        Estimated copula entropy (nats).
    mutual_information_ : float
        ``-entropy_``.
    """

    def __init__(self, k=3, tie_policy="distinct-random", jitter_scale=0.0, seed=0, estimator="ksg"):
        self.k = k
        self.tie_policy = tie_policy
        self.jitter_scale = jitter_scale
        self.seed = seed
        self.estimator = estimator

    def fit(self, X, y=None):
        cfg = EstimatorConfig(
            k=self.k, tie_policy=self.tie_policy, jitter_scale=self.jitter_scale, seed=self.seed, estimator=self.estimator
        )
        X = validate_data(self, X, ensure_min_samples=2, dtype=np.float64)
        self.entropy_ = copula_entropy(X, cfg)
        self.mutual_information_ = -self.entropy_
        return self

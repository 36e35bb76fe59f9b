"""scikit-learn style front end for the two-sample tests."""
import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import validate_data

from ._validation import check_pair, split_by_labels
from .copula import CopulaEntropy, CopulaTransformer, EstimatorConfig
from .permutation import TestResult, permutation_pvalue
from .twosample import KernelConfig, get_statistic

__all__ = ["CopulaEntropy", "CopulaTransformer", "TwoSampleTest"]


class TwoSampleTest(BaseEstimator):
    """Two-sample test on data labeled by group.

    ``fit(X, y)`` splits the rows of `X` by the two values of `y` (the
    smaller label forms the first sample), evaluates the statistic and, when
    ``n_permutations > 0``, its permutation p-value.

    Parameters
    ----------
    statistic : {"ce", "mi", "mmd", "energy"}
        Copula-entropy difference, mutual-information baseline, Gaussian
        kernel MMD^2 or energy statistic.
    k : int
        Neighbor order for ``"ce"`` and ``"mi"``.
    seed : int
        Tie-breaking seed for ``"ce"`` and ``"mi"``.
    delta : float
        Gaussian kernel scale for ``"mmd"``.
    mmd_variant : {"biased", "unbiased"}
    n_permutations : int
        Zero skips calibration.
    random_state : int
        Seed of the permutations.

    Attributes
    ----------
    statistic_ : float
    pvalue_ : float or None
    null_distribution_ : ndarray or None
    result_ : TestResult
    classes_ : ndarray of shape (2,)
    """

    def __init__(
        self, statistic="ce", k=3, seed=0, delta=1.0, mmd_variant="biased", n_permutations=0, random_state=0
    ):
        self.statistic = statistic
        self.k = k
        self.seed = seed
        self.delta = delta
        self.mmd_variant = mmd_variant
        self.n_permutations = n_permutations
        self.random_state = random_state

    def _echo(self):
        return {k: v for k, v in self.get_params().items() if k not in ("n_permutations", "random_state")}

    def test(self, x1, x2):
        """Run the test on two explicit samples and return a :class:`TestResult`."""
        x1, x2 = check_pair(x1, x2)
        stat = get_statistic(
            self.statistic,
            config=EstimatorConfig(k=self.k, seed=self.seed),
            kernel=KernelConfig(delta=self.delta, variant=self.mmd_variant),
        )
        if self.n_permutations:
            result = permutation_pvalue(stat, x1, x2, self.n_permutations, self.random_state, self._echo())
        else:
            result = TestResult(statistic=float(stat(x1, x2)), config=self._echo())
        self.result_ = result
        self.statistic_ = result.statistic
        self.pvalue_ = result.p_value
        self.null_distribution_ = result.permutation_stats
        return result

    def fit(self, X, y):
        X = validate_data(self, X, dtype=np.float64)
        x1, x2, self.classes_ = split_by_labels(X, y)
        self.test(x1, x2)
        return self

"""Permutation calibration for any deterministic two-sample statistic."""
from dataclasses import dataclass, field

import numpy as np

from ._validation import check_pair, check_positive_int


@dataclass
class TestResult:
    """Observed statistic with its optional permutation calibration.

    ``p_value`` lies in ``[1 / (B + 1), 1]`` when ``permutation_stats``
    holds ``B`` values.
    """

    __test__ = False  # not a pytest class

    statistic: float
    p_value: float | None = None
    permutation_stats: np.ndarray | None = None
    config: dict = field(default_factory=dict)


def permutation_rng(seed, replicate):
    """Generator of permutation `replicate`; independent of evaluation order."""
    return np.random.default_rng([seed, replicate])


def permutation_pvalue(statistic, x1, x2, n_permutations=99, seed=0, config=None):
    """Permutation p-value of ``statistic(x1, x2)``.

    Each replicate shuffles the pooled rows into groups of the original
    sizes and re-evaluates the statistic. The p-value is
    ``(1 + #{permuted >= observed}) / (B + 1)``.

    Parameters
    ----------
    statistic : callable
        ``statistic(x1, x2) -> float``, deterministic.
    x1, x2 : array_like of shape (m, d) and (n, d)
    n_permutations : int
        Number of replicates ``B >= 1``.
    seed : int
        Replicate ``b`` draws its permutation from ``(seed, b)``.
    config : dict, optional
        Settings echoed into the result.
    """
    B = check_positive_int(n_permutations, "n_permutations")
    x1, x2 = check_pair(x1, x2)
    m = x1.shape[0]
    pooled = np.vstack([x1, x2])
    observed = float(statistic(x1, x2))
    null = np.empty(B)
    for b in range(B):
        perm = permutation_rng(seed, b).permutation(pooled.shape[0])
        null[b] = statistic(pooled[perm[:m]], pooled[perm[m:]])
    p_value = (1.0 + np.count_nonzero(null >= observed)) / (B + 1.0)
    echo = {"n_permutations": B, "seed": seed, **(config or {})}
    return TestResult(statistic=observed, p_value=float(p_value), permutation_stats=null, config=echo)

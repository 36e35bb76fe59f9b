"""Two-sample testing with copula entropy.

The central statistic compares the copula entropy of the pooled sample
under the null labeling (all rows in one group) with that under the true
group labeling. Baselines: mutual information with the labels, Gaussian
kernel MMD^2 and the energy statistic. Any of them can be calibrated by
permutation.
"""
from ._special import cholesky2, digamma, exponential_quantile, std_normal_cdf, std_normal_quantile
from .copula import (
    CopulaEntropy,
    CopulaTransformer,
    EstimatorConfig,
    copula_entropy,
    kl_entropy,
    ksg_mutual_information,
    mutual_information,
    rank_transform,
)
from .estimators import TwoSampleTest
from .exceptions import DegenerateInputError, DomainError, DuplicatePointError
from .neighbors import chebyshev_dist, kneighbors, kth_neighbor_distances
from .permutation import TestResult, permutation_pvalue
from .twosample import (
    KernelConfig,
    build_labels,
    energy_statistic,
    gaussian_kernel,
    mmd2_statistic,
    tce_statistic,
    tmi_statistic,
)

__version__ = "0.1.0"

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from cetest import (
    EstimatorConfig,
    KernelConfig,
    build_labels,
    energy_statistic,
    gaussian_kernel,
    mmd2_statistic,
    tce_statistic,
    tmi_statistic,
)
from cetest.samplers import sample_bivariate_normal, stream
from cetest.twosample import ce_difference, get_statistic


def energy_loop(x, y):
    def dist(a, b):
        return math.sqrt(sum((p - q) ** 2 for p, q in zip(a, b)))

    m, n = len(x), len(y)
    xy = sum(dist(a, b) for a in x for b in y)
    xx = sum(dist(a, b) for a in x for b in x)
    yy = sum(dist(a, b) for a in y for b in y)
    return m * n / (m + n) * (2 * xy / (m * n) - xx / m**2 - yy / n**2)


def mmd_loop(x, y, delta, unbiased=False):
    def k(a, b):
        return math.exp(-sum((p - q) ** 2 for p, q in zip(a, b)) / (2 * delta**2))

    m, n = len(x), len(y)
    if unbiased:
        xx = sum(k(x[i], x[j]) for i in range(m) for j in range(m) if i != j) / (m * (m - 1))
        yy = sum(k(y[i], y[j]) for i in range(n) for j in range(n) if i != j) / (n * (n - 1))
    else:
        xx = sum(k(a, b) for a in x for b in x) / m**2
        yy = sum(k(a, b) for a in y for b in y) / n**2
    return xx + yy - 2 * sum(k(a, b) for a in x for b in y) / (m * n)


def bvn_pair(seed, n=500, shift=0.0, rho=0.5):
    return (
        sample_bivariate_normal(stream(seed, 0), n, rho=rho),
        sample_bivariate_normal(stream(seed, 1), n, mean=(shift, shift), rho=rho),
    )


# labels -----------------------------------------------------------------------


def test_build_labels():
    np.testing.assert_array_equal(build_labels(2, 3, "H1"), [0, 0, 1, 1, 1])
    np.testing.assert_array_equal(build_labels(2, 3, "H0"), [1, 1, 1, 1, 1])
    np.testing.assert_array_equal(build_labels(1, 1, "H1"), [0, 1])


@pytest.mark.parametrize("m, n, h", [(0, 3, "H1"), (2, 0, "H0"), (2, 2, "H2")])
def test_build_labels_invalid(m, n, h):
    with pytest.raises(ValueError):
        build_labels(m, n, h)


# kernel / MMD -----------------------------------------------------------------


def test_gaussian_kernel():
    x = np.array([0.3, -1.2])
    assert gaussian_kernel(x, x, 0.7) == 1.0
    assert gaussian_kernel((0, 0), (1, 0), 1.0) == pytest.approx(0.6065306597, abs=1e-10)
    assert gaussian_kernel((0,), (2,), 2.0) == pytest.approx(0.6065306597, abs=1e-10)
    with pytest.raises(ValueError):
        gaussian_kernel((0,), (1,), 0.0)


def test_mmd_examples():
    x = np.random.default_rng(0).normal(size=(30, 2))
    assert mmd2_statistic(x, x) == 0.0
    assert mmd2_statistic([0.0], [1.0]) == pytest.approx(2 - 2 * math.exp(-0.5), abs=1e-12)
    assert mmd2_statistic([0.0, 0.0], [0.0, 0.0], KernelConfig(variant="unbiased")) == 0.0


def test_mmd_permuted_multiset_exact_zero():
    x = np.random.default_rng(1).normal(size=(40, 3))
    y = x[np.random.default_rng(2).permutation(40)]
    assert mmd2_statistic(x, y) == 0.0
    assert energy_statistic(x, y) == 0.0


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("variant", ["biased", "unbiased"])
def test_mmd_matches_loop(seed, variant):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=(12, 2)), rng.normal(0.5, 1.3, size=(9, 2))
    expected = mmd_loop(x.tolist(), y.tolist(), 0.8, variant == "unbiased")
    assert mmd2_statistic(x, y, KernelConfig(0.8, variant)) == pytest.approx(expected, abs=1e-12)


def test_mmd_unbiased_needs_two_rows():
    with pytest.raises(ValueError):
        mmd2_statistic([[0.0]], [[1.0], [2.0]], KernelConfig(variant="unbiased"))


def test_kernel_config_validation():
    with pytest.raises(ValueError):
        KernelConfig(delta=-1.0)
    with pytest.raises(ValueError):
        KernelConfig(variant="linear")


# energy -----------------------------------------------------------------------


def test_energy_examples():
    assert energy_statistic([0.0], [1.0]) == 1.0
    assert energy_statistic([0.0, 1.0], [0.0, 1.0]) == 0.0
    x = np.random.default_rng(4).normal(size=(25, 2))
    assert energy_statistic(x, x) == 0.0


@pytest.mark.parametrize("seed", range(3))
def test_energy_matches_loop(seed):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=(11, 3)), rng.normal(1, 2, size=(7, 3))
    assert energy_statistic(x, y) == pytest.approx(energy_loop(x.tolist(), y.tolist()), rel=1e-12)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        energy_statistic(np.zeros((3, 2)), np.zeros((3, 3)))


samples = st.tuples(st.integers(1, 12), st.integers(1, 12), st.integers(1, 3)).flatmap(
    lambda s: st.tuples(
        arrays(np.float64, (s[0], s[2]), elements=st.floats(-50, 50)),
        arrays(np.float64, (s[1], s[2]), elements=st.floats(-50, 50)),
    )
)


@settings(max_examples=200, deadline=None)
@given(samples)
def test_symmetry_and_nonnegativity(pair):
    x, y = pair
    e = energy_statistic(x, y)
    assert e >= 0
    assert e == energy_statistic(y, x)
    for variant in ("biased", "unbiased"):
        if variant == "unbiased" and (len(x) < 2 or len(y) < 2):
            continue
        kc = KernelConfig(variant=variant)
        assert mmd2_statistic(x, y, kc) == mmd2_statistic(y, x, kc)
    assert mmd2_statistic(x, y) >= 0


# T_ce / T_mi ------------------------------------------------------------------


def test_ce_difference_identical_labels_is_zero():
    X = np.random.default_rng(0).normal(size=(60, 2))
    y = build_labels(30, 30, "H1")
    assert ce_difference(X, y, y) == 0.0


def test_tce_null_near_zero_and_shift_larger():
    null = [tce_statistic(*bvn_pair(s)) for s in range(10)]
    shifted = [tce_statistic(*bvn_pair(s, shift=5.0)) for s in range(10)]
    assert abs(np.median(null)) <= 0.1
    assert all(b > a for a, b in zip(null, shifted))
    assert np.median(shifted) - np.median(null) >= 0.5


def test_tce_swap_symmetry_approximate():
    diffs = []
    for s in range(10):
        x1, x2 = bvn_pair(s, shift=1.0)
        diffs.append(abs(tce_statistic(x1, x2) - tce_statistic(x2, x1)))
    assert np.median(diffs) <= 0.05


def test_tmi_shift_larger():
    null = [tmi_statistic(*bvn_pair(s)) for s in range(5)]
    shifted = [tmi_statistic(*bvn_pair(s, shift=5.0)) for s in range(5)]
    assert all(b > a for a, b in zip(null, shifted))
    assert abs(np.median(null)) <= 0.1


def test_label_statistics_monotone_invariance():
    x1, x2 = bvn_pair(3, n=150, shift=0.5)
    cfg = EstimatorConfig(seed=5)
    t = tce_statistic(x1, x2, cfg)
    assert tce_statistic(x1**3, x2**3, cfg) == t
    assert tce_statistic(np.exp(x1), np.exp(x2), cfg) == t
    m = tmi_statistic(x1, x2, cfg)
    assert tmi_statistic(np.exp(x1), np.exp(x2), cfg) == m


def test_tce_forces_distinct_policy():
    x1, x2 = bvn_pair(0, n=80, shift=1.0)
    avg = EstimatorConfig(tie_policy="average", seed=2)
    assert tce_statistic(x1, x2, avg) == tce_statistic(x1, x2, EstimatorConfig(seed=2))


def test_tce_too_small():
    with pytest.raises(ValueError):
        tce_statistic([[0.0, 1.0]], [[1.0, 0.0], [2.0, 2.0]])


def test_get_statistic():
    x1, x2 = bvn_pair(0, n=40, shift=1.0)
    assert get_statistic("energy")(x1, x2) == energy_statistic(x1, x2)
    assert get_statistic("mmd", kernel=KernelConfig(2.0))(x1, x2) == mmd2_statistic(x1, x2, KernelConfig(2.0))
    assert get_statistic("ce")(x1, x2) == tce_statistic(x1, x2)
    with pytest.raises(ValueError):
        get_statistic("t")

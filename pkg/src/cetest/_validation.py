"""Input validation helpers shared by the functional and estimator APIs."""
import numbers

import numpy as np
from sklearn.utils import check_array


def check_sample(X, name="X", min_samples=1):
    """Return `X` as a finite 2-D float array, one row per observation.

    1-D input is treated as a single column.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    return check_array(X, ensure_min_samples=min_samples, input_name=name)


def check_pair(x1, x2, min_samples=1):
    x1 = check_sample(x1, "x1", min_samples)
    x2 = check_sample(x2, "x2", min_samples)
    if x1.shape[1] != x2.shape[1]:
        raise ValueError(
            f"x1 and x2 must have the same number of columns, got {x1.shape[1]} and {x2.shape[1]}"
        )
    return x1, x2


def check_positive_int(value, name, minimum=1):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def split_by_labels(X, y):
    """Split rows of `X` into two groups by the two distinct values of `y`.

    The group holding the smaller label value comes first.
    """
    X = check_sample(X)
    y = np.asarray(y).ravel()
    if y.shape[0] != X.shape[0]:
        raise ValueError(f"X has {X.shape[0]} rows but y has {y.shape[0]} labels")
    classes = np.unique(y)
    if classes.shape[0] != 2:
        raise ValueError(f"y must contain exactly two groups, found {classes.shape[0]}")
    return X[y == classes[0]], X[y == classes[1]], classes

"""k-th nearest neighbor queries under the Chebyshev (max) metric.

The exhaustive O(n^2) scan is the reference path. A KD-tree path
(:class:`scipy.spatial.cKDTree` with ``p=inf``) returns identical distances and
is used automatically for large inputs.
"""
import numpy as np
from scipy.spatial import cKDTree

from ._validation import check_positive_int, check_sample

# rows x n x d floats held at once by the exhaustive scan
_CHUNK_ELEMENTS = 4_000_000
_AUTO_TREE_THRESHOLD = 5000


def chebyshev_dist(a, b):
    """Max-norm distance between two vectors of equal length."""
    a = np.asarray(a, dtype=float).ravel()
    b = np.asarray(b, dtype=float).ravel()
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a - b)))


def _blocks(points):
    """Yield ``(start, stop, dist)`` with the max-norm distances of rows
    ``start:stop`` to all points; self-distances are set to inf."""
    n, d = points.shape
    rows = max(1, _CHUNK_ELEMENTS // max(1, n * d))
    for start in range(0, n, rows):
        stop = min(n, start + rows)
        block = points[start:stop]
        dist = np.abs(block[:, None, 0] - points[None, :, 0])
        for j in range(1, d):
            np.maximum(dist, np.abs(block[:, None, j] - points[None, :, j]), out=dist)
        dist[np.arange(stop - start), np.arange(start, stop)] = np.inf
        yield start, stop, dist


def _check_query(points, k):
    points = check_sample(points, "points")
    n = points.shape[0]
    k = check_positive_int(k, "k")
    if k >= n:
        raise ValueError(f"k must be smaller than the number of points ({n}), got {k}")
    return points, k


def kneighbors(points, k):
    """Distances and indices of the k nearest other points, nearest first.

    Exhaustive max-norm scan; among equidistant candidates the lower row
    index wins, so the result is fully determined by the point set and its
    row order.

    Returns
    -------
    distances : ndarray of shape (n, k)
    indices : ndarray of shape (n, k)
    """
    points, k = _check_query(points, k)
    n = points.shape[0]
    distances = np.empty((n, k))
    indices = np.empty((n, k), dtype=np.intp)
    for start, stop, dist in _blocks(points):
        kth = np.partition(dist, k - 1, axis=1)[:, k - 1]
        rows, cols = np.nonzero(dist <= kth[:, None])
        vals = dist[rows, cols]
        order = np.lexsort((cols, vals, rows))
        # every row has at least k candidates; keep the first k of each
        first = np.searchsorted(rows[order], np.arange(stop - start))
        take = order[(first[:, None] + np.arange(k)).ravel()]
        indices[start:stop] = cols[take].reshape(-1, k)
        distances[start:stop] = vals[take].reshape(-1, k)
    return distances, indices


def kth_neighbor_distances(points, k, algorithm="auto"):
    """Chebyshev distance from every point to its k-th nearest other point.

    Parameters
    ----------
    points : array_like of shape (n, d)
        The point set; 1-D input is one coordinate per point.
    k : int
        Neighbor order, ``1 <= k <= n - 1``.
    algorithm : {"auto", "brute", "kd_tree"}
        ``"auto"`` scans exhaustively up to 5000 points and uses a KD-tree
        beyond that. Both paths give identical results.

    Returns
    -------
    ndarray of shape (n,)
    """
    points, k = _check_query(points, k)
    n = points.shape[0]
    if algorithm == "auto":
        algorithm = "brute" if n <= _AUTO_TREE_THRESHOLD else "kd_tree"
    if algorithm == "brute":
        out = np.empty(n)
        for start, stop, dist in _blocks(points):
            out[start:stop] = np.partition(dist, k - 1, axis=1)[:, k - 1]
        return out
    if algorithm == "kd_tree":
        dist, _ = cKDTree(points).query(points, k=k + 1, p=np.inf)
        # column 0 is a zero distance: the point itself or an exact duplicate
        return dist[:, k]
    raise ValueError(f"unknown algorithm {algorithm!r}")

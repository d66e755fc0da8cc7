"""Lloyd's K-means on 3-D Cartesian positions."""

from __future__ import annotations

import numpy as np

from ..errors import BadClusterCount


def _as_rng(rng):
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def squared_distances(x):
    xx = np.einsum("ij,ij->i", x, x)
    return np.maximum(xx[:, None] + xx[None, :] - 2.0 * (x @ x.T), 0.0)


def kmeans_plusplus(x, n_clusters, rng, sqdist=None):
    """D^2-weighted seeding. Returns indices of the chosen seed points.

    ``sqdist`` is an optional precomputed matrix of pairwise squared
    distances, worth passing when seeding the same points many times.
    """
    n = x.shape[0]
    if sqdist is None:
        xx = np.einsum("ij,ij->i", x, x)

        def row(i):
            return np.maximum(xx - 2.0 * (x @ x[i]) + xx[i], 0.0)
    else:
        def row(i):
            return sqdist[i]

    idx = np.empty(n_clusters, dtype=np.int64)
    idx[0] = rng.integers(n)
    draws = rng.random(n_clusters)
    d2 = row(idx[0]).copy()
    d2[idx[0]] = 0.0
    for c in range(1, n_clusters):
        cum = np.cumsum(d2)
        total = cum[-1]
        if total > 0.0:
            pick = min(int(cum.searchsorted(draws[c] * total, side="right")), n - 1)
            # cumsum round-off can land on a zero-weight point
            if d2[pick] == 0.0:
                pick = int(np.flatnonzero(d2 > 0.0)[-1])
        else:
            pick = int(draws[c] * n)
        idx[c] = pick
        np.minimum(d2, row(pick), out=d2)
        d2[pick] = 0.0
    return idx


def _repair_empty(labels, dist2, n_clusters):
    counts = np.bincount(labels, minlength=n_clusters)
    empty = np.flatnonzero(counts == 0)
    if empty.size == 0:
        return labels
    own = dist2[np.arange(labels.size), labels].copy()
    for e in empty:
        # farthest point whose cluster keeps at least one member
        candidates = np.where(counts[labels] > 1, own, -np.inf)
        i = int(np.argmax(candidates))
        if not np.isfinite(candidates[i]):
            break
        counts[labels[i]] -= 1
        labels[i] = e
        counts[e] = 1
        own[i] = -np.inf
    return labels


def kmeans_run(points, n_clusters, max_iters=500, rng=None, sqdist=None):
    """Run Lloyd iterations; returns ``(labels, rounds_used)``.

    Stops early once an assignment round leaves every label unchanged.
    Empty clusters are refilled with the point farthest from its centroid.
    ``sqdist`` optionally supplies pairwise squared distances for seeding.
    """
    x = np.asarray(points, dtype=float)
    n = x.shape[0]
    if not 1 <= n_clusters <= n:
        raise BadClusterCount(f"cluster count {n_clusters} outside [1, {n}]")
    if max_iters < 1:
        raise BadClusterCount("max_iters must be >= 1")
    rng = _as_rng(rng)
    x = x - x.mean(axis=0)
    xx = np.einsum("ij,ij->i", x, x)
    centers = x[kmeans_plusplus(x, n_clusters, rng, sqdist)]
    labels = None
    rounds = 0
    for rounds in range(1, max_iters + 1):
        # squared distance up to the per-row constant |x|^2
        rel = np.einsum("ij,ij->i", centers, centers) - 2.0 * (x @ centers.T)
        new = np.argmin(rel, axis=1)
        if np.bincount(new, minlength=n_clusters).min() == 0:
            new = _repair_empty(new, rel + xx[:, None], n_clusters)
        if labels is not None and np.array_equal(new, labels):
            break
        labels = new
        counts = np.bincount(labels, minlength=n_clusters).astype(float)
        sums = np.stack([np.bincount(labels, weights=x[:, d], minlength=n_clusters) for d in range(x.shape[1])], axis=1)
        nonempty = counts > 0
        centers[nonempty] = sums[nonempty] / counts[nonempty, None]
    return labels, rounds


def kmeans(points, n_clusters, max_iters=500, rng=None) -> np.ndarray:
    """Cluster labels for ``points`` (``(K, 3)``) into ``n_clusters`` groups."""
    return kmeans_run(points, n_clusters, max_iters, rng)[0]

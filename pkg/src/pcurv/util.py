"""Deterministic reductions and seeded random streams."""
from __future__ import annotations

import numpy as np


def tree_sum(x: np.ndarray) -> float:
    """Fixed-order pairwise sum of a 1-d array.

    The reduction schedule depends only on the array length, never on thread
    count or chunking, so repeated runs produce bit-identical totals.
    """
    x = np.ascontiguousarray(x, dtype=float).ravel()
    n = x.size
    if n == 0:
        return 0.0
    while n > 1:
        half = n // 2
        tail = x[2 * half:n]
        x = x[0:2 * half:2] + x[1:2 * half:2]
        if tail.size:
            x = np.concatenate([x, tail])
        n = x.size
    return float(x[0])


def rng_stream(seed: int, *key: int) -> np.random.Generator:
    """Counter-based Philox generator for a (seed, key...) slot.

    Philox is splittable: distinct keys give independent streams for the same
    user seed, and the draw sequence is identical across platforms.
    """
    return np.random.Generator(np.random.Philox(key=(int(seed),) + tuple(int(k) for k in key)))


def pairwise_min_distance(points: np.ndarray, sample: int = 512, seed: int = 0) -> float:
    """Minimum distance over a random node subsample, excluding grid neighbors.

    Cheap screen for likely self-intersection; not a proof of embeddedness.
    """
    pts = points.reshape(-1, points.shape[-1])
    if pts.shape[0] > sample:
        idx = rng_stream(seed, 97).choice(pts.shape[0], size=sample, replace=False)
        pts = pts[idx]
    d2 = np.sum((pts[:, None, :] - pts[None, :, :]) ** 2, axis=-1)
    np.fill_diagonal(d2, np.inf)
    return float(np.sqrt(d2.min()))

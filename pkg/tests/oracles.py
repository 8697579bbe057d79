"""Brute-force routes used to cross-check the lattice computations."""

from __future__ import annotations

from collections import Counter

import numpy as np


def _half_sums(rows: np.ndarray, m: int) -> np.ndarray:
    """All sums sum_i c_i rows[i] mod m with c_i in [0, m), one per row of the result."""
    k, cols = rows.shape
    if k == 0:
        return np.zeros((1, cols), dtype=np.int64)
    grid = np.indices((m,) * k, dtype=np.int64).reshape(k, -1).T
    return (grid @ (rows % m)) % m


def _encode(vectors: np.ndarray, m: int) -> np.ndarray:
    weights = m ** np.arange(vectors.shape[1], dtype=np.int64)
    return vectors @ weights


def count_kernel(P, m: int) -> int:
    """|{c in Z_m^r : c P = 0 mod m}| by meet-in-the-middle enumeration."""
    P = np.asarray(P, dtype=np.int64)
    r = P.shape[0]
    if r == 0:
        return 1
    split = r // 2
    left = _encode(_half_sums(P[:split], m), m)
    right = _encode((-_half_sums(P[split:], m)) % m, m)
    counts = Counter(left.tolist())
    return sum(counts[x] for x in right.tolist())


def count_kernel_naive(P, m: int) -> int:
    P = np.asarray(P, dtype=np.int64)
    sums = _half_sums(P, m)
    return int((~sums.any(axis=1)).sum())

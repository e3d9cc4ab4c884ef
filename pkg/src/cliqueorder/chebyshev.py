"""Chebyshev (king-move) distance matrices and the derived cost matrices.

Formulas are 1-based; storage is 0-based.  The mapping is
``entry(i, j)_storage = formula(i + 1, j + 1)``.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "chebyshev",
    "chebyshev_complement",
    "cost_lemma",
    "cost_stable",
    "default_epsilon",
    "default_sinkhorn_iters",
]


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"matrix dimension must be >= 1, got {n}")


def chebyshev(n: int) -> np.ndarray:
    """Integer matrix with entry (i, j) = max(i, j) - 1 in 1-based indexing:
    the number of king moves from the top-left corner cell to cell (i, j) on
    an n x n board."""
    _check_n(n)
    idx = np.arange(1, n + 1)
    return np.maximum.outer(idx, idx) - 1


def chebyshev_complement(n: int) -> np.ndarray:
    """Integer matrix with entry (i, j) = n - max(i, j) in 1-based indexing.
    Satisfies chebyshev(n) + chebyshev_complement(n) == (n - 1) * ones."""
    _check_n(n)
    idx = np.arange(1, n + 1)
    return n - np.maximum.outer(idx, idx)


def cost_lemma(n: int) -> list[list[int]]:
    """Exact big-integer cost matrix with entry (i, j) = (n^2) ** (n - max(i, j))
    (1-based).  Consecutive shells differ by an exact factor of n^2, which is
    what the prefix-forcing argument needs; entries grow as n^(2(n-1)), so this
    is intended for small n (the permutation oracle gates at n <= 8)."""
    _check_n(n)
    base = n * n
    shell = [base ** (n - k) for k in range(1, n + 1)]  # shell[k0] for max0 = k0
    return [[shell[max(i, j)] for j in range(n)] for i in range(n)]


def cost_stable(n: int, epsilon: float) -> np.ndarray:
    """Float cost matrix with entry (i, j) = (1 + eps) ** ((n - max(i, j)) - n/2)
    (1-based): same shell structure as cost_lemma with a gentler base, offset
    by n/2 in the exponent to keep entries near 1."""
    _check_n(n)
    if not epsilon > 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    comp = chebyshev_complement(n).astype(np.float64)
    return (1.0 + epsilon) ** (comp - n / 2.0)


def default_epsilon(n: int) -> float:
    """Default cost-matrix base parameter: 0.2 for n <= 100, 0.06 above."""
    return 0.2 if n <= 100 else 0.06


def default_sinkhorn_iters(n: int) -> int:
    """Default number of Sinkhorn iterations: 20 for n <= 100, 10 above."""
    return 20 if n <= 100 else 10

"""Exact linear-sum assignment used to decode soft permutations into hard ones.

Delegates to scipy's shortest-augmenting-path solver (O(n^3), exact,
deterministic for a fixed input), wrapped with the validation and result
shape the rest of the package expects.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

__all__ = ["AssignmentResult", "hungarian"]


@dataclass(frozen=True)
class AssignmentResult:
    """perm[i] is the column assigned to row i; total_cost is the exact sum
    of the selected entries."""

    perm: tuple[int, ...]
    total_cost: float


def hungarian(cost) -> AssignmentResult:
    """Minimum-cost perfect assignment on a square cost matrix.

    Returns a bijection rows -> columns minimizing the total cost.  Any
    minimizer may be returned, but the result is deterministic for a fixed
    input matrix."""
    cost = np.asarray(cost, dtype=np.float64)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
        raise ValueError(f"cost matrix must be square, got shape {cost.shape}")
    if not np.isfinite(cost).all():
        raise ValueError("cost matrix contains non-finite entries")
    rows, cols = linear_sum_assignment(cost)
    # rows come back sorted 0..n-1, so cols alone encodes the bijection
    perm = tuple(int(c) for c in cols)
    return AssignmentResult(perm=perm, total_cost=float(cost[rows, cols].sum()))

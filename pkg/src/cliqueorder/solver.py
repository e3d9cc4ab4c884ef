"""Exact maximum-clique branch and bound with greedy-coloring upper bounds,
dynamic near-root re-sorting, and a pluggable initial vertex ordering.

The search grows a clique Q over a candidate array R kept sorted so that
greedy colors are non-decreasing; the last candidate always carries the
maximum color, and the bound |Q| + C[i] <= |Q_max| prunes the whole tail at
once.  Near the root (while S[level] / ALL_STEPS stays below t_limit) the
candidate set is re-sorted by degree within the induced subgraph before
coloring, which concentrates effort where the tree is widest.

Vertices are visited from the END of the ordered array, so an initial
ordering helps by placing likely clique members FIRST (leading positions):
non-clique vertices are then evaluated early and cheaply, and strong
incumbents appear sooner.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, degree_order, perm_to_sequence, random_order

__all__ = [
    "ColorClasses",
    "CliqueResult",
    "SolveReport",
    "initial_coloring",
    "color_sort",
    "max_clique_dyn",
    "solve_with_ordering",
]


@dataclass(frozen=True)
class ColorClasses:
    """Candidate vertices in bound-compatible order with their greedy colors.
    colors[i] belongs to order[i]; along the reordered tail the colors are
    non-decreasing, so the last entry carries the maximum color."""

    order: list[int]
    colors: list[int]


@dataclass(frozen=True)
class CliqueResult:
    """A maximum clique plus search statistics."""

    clique: list[int]
    steps: int
    wall_time: float

    @property
    def omega(self) -> int:
        return len(self.clique)


@dataclass(frozen=True)
class SolveReport:
    """CliqueResult plus how the initial ordering was produced and what it
    cost.  inference_seconds is populated only for the learned strategy (it
    equals order_seconds there); order_seconds covers every strategy."""

    result: CliqueResult
    ordering: str
    order_seconds: float
    inference_seconds: float | None


def initial_coloring(order: Sequence[int], g: Graph) -> ColorClasses:
    """Root bound array for the ordered vertex sequence: the vertex at
    position i gets color i + 1 while i < max_degree, and max_degree + 1
    afterwards.  (Any clique inside the first i + 1 vertices has at most
    i + 1 members, and no clique exceeds max_degree + 1.)"""
    if len(order) != g.n:
        raise ValueError(f"ordering length {len(order)} != n {g.n}")
    seq = perm_to_sequence(order)
    cap = g.max_degree
    colors = [i + 1 if i < cap else cap + 1 for i in range(g.n)]
    return ColorClasses(order=seq, colors=colors)


def _greedy_color_sort(
    candidates: Sequence[int], adj: Sequence[int], k_min: int
) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring in candidate order; every vertex takes the
    smallest existing color class with no neighbor in it, else opens a new
    class.  Vertices colored below k_min keep their relative input positions
    at the front; the rest follow grouped by ascending color."""
    class_masks: list[int] = []
    class_members: list[list[int]] = []
    color_of: dict[int, int] = {}
    for v in candidates:
        a = adj[v]
        k = 0
        while k < len(class_masks) and (class_masks[k] & a):
            k += 1
        if k == len(class_masks):
            class_masks.append(0)
            class_members.append([])
        class_masks[k] |= 1 << v
        class_members[k].append(v)
        color_of[v] = k + 1
    order: list[int] = []
    colors: list[int] = []
    for v in candidates:
        if color_of[v] < k_min:
            order.append(v)
            colors.append(color_of[v])
    for k in range(max(k_min - 1, 0), len(class_members)):
        members = class_members[k]
        order.extend(members)
        colors.extend([k + 1] * len(members))
    return order, colors


def color_sort(candidates: Sequence[int], g: Graph, k_min: int) -> ColorClasses:
    """Public wrapper over the greedy coloring used inside the search."""
    if k_min < 1:
        raise ValueError(f"k_min must be >= 1, got {k_min}")
    cand = [int(v) for v in candidates]
    for v in cand:
        if not 0 <= v < g.n:
            raise ValueError(f"candidate {v} out of range")
    order, colors = _greedy_color_sort(cand, g.adj_bits, k_min)
    return ColorClasses(order=order, colors=colors)


def max_clique_dyn(g: Graph, order: Sequence[int], t_limit: float = 0.025) -> CliqueResult:
    """Exact maximum clique of g starting from the given position map.

    Counters: S and S_old are per-level accumulators updated by
    S[level] += S[level-1] - S_old[level]; S_old[level] = S[level-1] on every
    call; ALL_STEPS starts at 1 and increments once per recursive expansion
    with a non-empty candidate set.  The reported steps value is the final
    ALL_STEPS; identical (graph, ordering, t_limit) give identical steps."""
    root = initial_coloring(order, g)
    n = g.n
    adj = g.adj_bits
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 1000))

    s = [0.0] * (n + 2)
    s_old = [0.0] * (n + 2)
    state = {"best_size": 0, "all_steps": 1}
    q: list[int] = []
    q_max: list[int] = []

    def expand(r: list[int], c: list[int], level: int) -> None:
        s[level] += s[level - 1] - s_old[level]
        s_old[level] = s[level - 1]
        best_size = state["best_size"]
        while r:
            i = len(r) - 1
            p = r[i]
            if len(q) + c[i] > best_size:
                q.append(p)
                ap = adj[p]
                rp = [v for v in r[:i] if (ap >> v) & 1]
                if rp:
                    if s[level] / state["all_steps"] < t_limit:
                        # near root: re-sort candidates by degree within the
                        # induced subgraph (stable, ties keep array position)
                        mask = 0
                        for v in rp:
                            mask |= 1 << v
                        rp.sort(key=lambda v: -(adj[v] & mask).bit_count())
                    k_min = state["best_size"] - len(q) + 1
                    r_next, c_next = _greedy_color_sort(rp, adj, k_min)
                    s[level] += 1
                    state["all_steps"] += 1
                    expand(r_next, c_next, level + 1)
                    best_size = state["best_size"]
                elif len(q) > best_size:
                    state["best_size"] = best_size = len(q)
                    q_max.clear()
                    q_max.extend(q)
                q.pop()
            else:
                return
            r.pop()

    start = time.perf_counter()
    expand(list(root.order), list(root.colors), 1)
    elapsed = time.perf_counter() - start
    return CliqueResult(clique=sorted(q_max), steps=state["all_steps"], wall_time=elapsed)


def solve_with_ordering(
    g: Graph,
    strategy: str = "degree",
    *,
    seed: int = 0,
    cfg=None,
    t_limit: float = 0.025,
) -> SolveReport:
    """Compute an initial ordering by the named strategy, then solve.

    strategy: "random" (seeded shuffle, uses ``seed``), "degree"
    (non-increasing degree), or "learned" (ordering optimizer; its seed and
    hyperparameters come from ``cfg``).  Ordering time is measured separately
    from search time; for the learned strategy it is also reported as
    inference_seconds."""
    t0 = time.perf_counter()
    if strategy == "random":
        order = random_order(g, seed)
    elif strategy == "degree":
        order = degree_order(g)
    elif strategy == "learned":
        from .engine import OptimizerConfig, optimize_ordering

        order = optimize_ordering(g, cfg or OptimizerConfig())
    else:
        raise ValueError(f"unknown ordering strategy {strategy!r}")
    order_seconds = time.perf_counter() - t0
    result = max_clique_dyn(g, order, t_limit=t_limit)
    return SolveReport(
        result=result,
        ordering=strategy,
        order_seconds=order_seconds,
        inference_seconds=order_seconds if strategy == "learned" else None,
    )

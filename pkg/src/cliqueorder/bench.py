"""Benchmark campaigns: generate a shared instance set per edge probability,
run every ordering strategy on the same instances, and aggregate means into
CSV rows.

Timing conventions: search_seconds covers only the recursive solve;
order_seconds covers computing the initial ordering for every strategy;
infer_seconds duplicates order_seconds for the learned strategy only (so both
"ordering cost folded in" and "inference reported separately" comparisons are
possible).  One warm-up solve runs before any timed work.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, replace
from typing import Sequence

from .engine import OptimizerConfig
from .graph import Graph, er_generate, zero_pad
from .solver import solve_with_ordering

__all__ = ["BenchRow", "CSV_HEADER", "run_bench", "rows_to_csv"]

CSV_HEADER = "p,strategy,mean_steps,mean_search_s,mean_infer_s,mean_omega,mean_order_s"

STRATEGIES = ("random", "degree", "learned")


@dataclass(frozen=True)
class BenchRow:
    n: int
    p: float
    strategy: str
    instances: int
    mean_steps: float
    mean_search_s: float
    mean_infer_s: float
    mean_omega: float
    mean_order_s: float


def run_bench(
    n: int,
    p_list: Sequence[float],
    instances: int,
    strategies: Sequence[str] = STRATEGIES,
    seed: int = 0,
    pad_to: int | None = None,
    cfg: OptimizerConfig | None = None,
    t_limit: float = 0.025,
) -> list[BenchRow]:
    """One row per (p, strategy).  All strategies see the identical instance
    set for a given p (seeds seed, seed+1, ...); instance i uses seed + i for
    both its graph and any per-instance randomness (random shuffle seed,
    optimizer seed)."""
    if instances < 1:
        raise ValueError(f"need at least one instance, got {instances}")
    for strat in strategies:
        if strat not in STRATEGIES:
            raise ValueError(f"unknown strategy {strat!r}")
    base_cfg = cfg or OptimizerConfig()
    rows: list[BenchRow] = []
    warmed_up = False
    for p in p_list:
        graphs: list[Graph] = []
        for i in range(instances):
            g = er_generate(n, p, seed + i)
            if pad_to is not None:
                g = zero_pad(g, pad_to)
            graphs.append(g)
        if not warmed_up:
            solve_with_ordering(graphs[0], "degree", t_limit=t_limit)
            warmed_up = True
        for strat in strategies:
            steps = search = infer = omega = order_s = 0.0
            for i, g in enumerate(graphs):
                inst_cfg = (
                    replace(base_cfg, seed=seed + i) if strat == "learned" else None
                )
                rep = solve_with_ordering(
                    g, strat, seed=seed + i, cfg=inst_cfg, t_limit=t_limit
                )
                steps += rep.result.steps
                search += rep.result.wall_time
                omega += rep.result.omega
                order_s += rep.order_seconds
                if rep.inference_seconds is not None:
                    infer += rep.inference_seconds
            k = float(instances)
            rows.append(
                BenchRow(
                    n=n,
                    p=p,
                    strategy=strat,
                    instances=instances,
                    mean_steps=steps / k,
                    mean_search_s=search / k,
                    mean_infer_s=infer / k,
                    mean_omega=omega / k,
                    mean_order_s=order_s / k,
                )
            )
    return rows


def rows_to_csv(rows: Sequence[BenchRow]) -> str:
    """Fixed header, fixed column order, one line per row."""
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in rows:
        buf.write(
            f"{r.p:g},{r.strategy},{r.mean_steps:.6g},{r.mean_search_s:.6g},"
            f"{r.mean_infer_s:.6g},{r.mean_omega:.6g},{r.mean_order_s:.6g}\n"
        )
    return buf.getvalue()

"""FastAPI service wrapping the solver, the ordering optimizer, instance
generation, and the prefix-forcing verifier.

The service is a thin layer: every endpoint delegates to the same library
functions the CLI uses.  Long-running benchmark campaigns stay CLI-only.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..chebyshev import cost_stable, default_epsilon
from ..engine import OptimizerConfig, optimize_ordering
from ..graph import Graph, er_generate, from_dimacs, to_dimacs
from ..oracle import enumerate_labeled_graphs, lemma_verify, perm_loss
from ..solver import solve_with_ordering
from .schemas import (
    EngineParams,
    GenerateRequest,
    GenerateResponse,
    GraphSpec,
    HealthResponse,
    LemmaRequest,
    LemmaResponse,
    OrderRequest,
    OrderResponse,
    SolveRequest,
    SolveResponse,
)

__all__ = ["create_app"]


def _build_graph(spec: GraphSpec) -> tuple[Graph, float | None, int | None]:
    """Returns (graph, p, seed); p/seed are None for DIMACS input."""
    if spec.dimacs is not None:
        try:
            return from_dimacs(spec.dimacs), None, None
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=f"bad DIMACS input: {exc}")
    return er_generate(spec.n, spec.p, spec.seed), spec.p, spec.seed


def _config(params: EngineParams) -> OptimizerConfig:
    return OptimizerConfig(
        tau=params.tau,
        gamma=params.gamma,
        sinkhorn_iters=params.sinkhorn_iters,
        alpha=params.alpha,
        epsilon=params.epsilon,
        learning_rate=params.learning_rate,
        outer_iters=params.outer_iters,
        restarts=params.restarts,
        seed=params.seed,
        noisy_decode=params.noisy_decode,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="cliqueorder",
        description="Exact maximum-clique solving with learned vertex orderings",
        version=__version__,
    )

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/solve", response_model=SolveResponse)
    def solve(req: SolveRequest) -> SolveResponse:
        g, p, seed = _build_graph(req.graph)
        cfg = _config(req.engine)
        rep = solve_with_ordering(
            g, req.ordering, seed=req.engine.seed, cfg=cfg, t_limit=req.t_limit
        )
        return SolveResponse(
            n=g.n,
            p=p,
            seed=seed,
            ordering=rep.ordering,
            omega=rep.result.omega,
            steps=rep.result.steps,
            search_seconds=rep.result.wall_time,
            inference_seconds=rep.inference_seconds,
            clique=[int(v) for v in rep.result.clique],
        )

    @app.post("/order", response_model=OrderResponse)
    def order(req: OrderRequest) -> OrderResponse:
        g, _, _ = _build_graph(req.graph)
        cfg = _config(req.engine)
        perm = optimize_ordering(g, cfg)
        d = cost_stable(g.n, cfg.epsilon or default_epsilon(g.n))
        return OrderResponse(
            n=g.n,
            permutation=[int(x) for x in perm],
            loss=float(perm_loss(g, perm, d)),
        )

    @app.post("/generate", response_model=GenerateResponse)
    def generate(req: GenerateRequest) -> GenerateResponse:
        names, texts = [], []
        for i in range(req.count):
            g = er_generate(req.n, req.p, req.seed + i)
            names.append(f"er_n{req.n}_p{req.p:g}_s{req.seed + i}.clq")
            texts.append(to_dimacs(g))
        return GenerateResponse(names=names, dimacs=texts)

    @app.post("/lemma/verify", response_model=LemmaResponse)
    def verify(req: LemmaRequest) -> LemmaResponse:
        checked = failures = vacuous = 0
        for n in range(1, req.max_exhaustive_n + 1):
            for g in enumerate_labeled_graphs(n):
                report = lemma_verify(g)
                checked += 1
                failures += 0 if report.ok else 1
                vacuous += 1 if report.vacuous else 0
        for i in range(req.samples):
            g = er_generate(req.sampled_n, 0.5, req.seed + i)
            report = lemma_verify(g)
            checked += 1
            failures += 0 if report.ok else 1
            vacuous += 1 if report.vacuous else 0
        return LemmaResponse(
            graphs_checked=checked,
            counterexamples=failures,
            vacuous=vacuous,
            all_hold=failures == 0,
        )

    return app

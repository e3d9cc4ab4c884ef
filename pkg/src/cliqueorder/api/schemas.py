"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, Field, model_validator

from ..bench import STRATEGIES


class GraphSpec(BaseModel):
    """A graph given either as DIMACS text or as random-instance parameters
    (n, p, seed)."""

    dimacs: str | None = None
    n: int | None = Field(default=None, ge=1)
    p: float | None = Field(default=None, ge=0.0, le=1.0)
    seed: int = 0

    @model_validator(mode="after")
    def _one_source(self):
        if self.dimacs is None and (self.n is None or self.p is None):
            raise ValueError("provide either dimacs text or both n and p")
        if self.dimacs is not None and (self.n is not None or self.p is not None):
            raise ValueError("provide dimacs text or (n, p), not both")
        return self


class EngineParams(BaseModel):
    """Ordering-optimizer hyperparameters; None fields resolve to
    size-dependent defaults."""

    tau: float = Field(default=2.0, gt=0)
    gamma: float = Field(default=0.02, ge=0)
    sinkhorn_iters: int | None = Field(default=None, ge=1)
    alpha: float = Field(default=40.0, gt=0)
    epsilon: float | None = Field(default=None, gt=0)
    learning_rate: float = Field(default=0.5, gt=0)
    outer_iters: int = Field(default=300, ge=1)
    restarts: int = Field(default=8, ge=1)
    seed: int = 0
    noisy_decode: bool = False


class SolveRequest(BaseModel):
    graph: GraphSpec
    ordering: str = "degree"
    t_limit: float = Field(default=0.025, ge=0)
    engine: EngineParams = EngineParams()

    @model_validator(mode="after")
    def _known_strategy(self):
        if self.ordering not in STRATEGIES:
            raise ValueError(f"ordering must be one of {STRATEGIES}")
        return self


class SolveResponse(BaseModel):
    n: int
    p: float | None = None
    seed: int | None = None
    ordering: str
    omega: int
    steps: int
    search_seconds: float
    inference_seconds: float | None = None
    clique: list[int]


class OrderRequest(BaseModel):
    graph: GraphSpec
    engine: EngineParams = EngineParams()


class OrderResponse(BaseModel):
    n: int
    permutation: list[int]  # position of each vertex
    loss: float  # exact hard-permutation loss under the stable cost matrix


class GenerateRequest(BaseModel):
    n: int = Field(ge=1)
    p: float = Field(ge=0.0, le=1.0)
    count: int = Field(default=1, ge=1, le=1000)
    seed: int = 0


class GenerateResponse(BaseModel):
    names: list[str]
    dimacs: list[str]


class LemmaRequest(BaseModel):
    """Bounded verification run; the CLI offers the full-budget variant."""

    max_exhaustive_n: int = Field(default=4, ge=1, le=8)
    sampled_n: int = Field(default=6, ge=1, le=8)
    samples: int = Field(default=20, ge=0)
    seed: int = 0


class LemmaResponse(BaseModel):
    graphs_checked: int
    counterexamples: int
    vacuous: int
    all_hold: bool


class HealthResponse(BaseModel):
    status: str
    version: str

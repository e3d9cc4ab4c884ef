"""Independent brute-force references: exact maximum clique via pivoting
enumeration, exact hard-permutation loss, exhaustive permutation
minimization, exhaustive assignment, and the prefix-forcing verifier.

Everything here is deliberately implemented without reusing the optimized
solver or engine code paths, so agreement between the two is evidence of
correctness rather than tautology.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .chebyshev import cost_lemma
from .graph import Graph, nonadjacency_matrix

__all__ = [
    "LemmaReport",
    "brute_force_max_clique",
    "perm_loss",
    "brute_force_perm_min",
    "brute_force_assignment",
    "lemma_verify",
    "enumerate_labeled_graphs",
]

_MAX_CLIQUE_N = 25
_MAX_PERM_N = 8


def brute_force_max_clique(g: Graph) -> list[int]:
    """Exact maximum clique by pivot-based recursive enumeration of maximal
    cliques.  Gated at n <= 25 (exponential).  Deterministic: the pivot is the
    vertex with the most candidates among its neighbors, ties by lowest index,
    and the first maximum-size clique encountered is kept."""
    if g.n > _MAX_CLIQUE_N:
        raise ValueError(f"brute force gated at n <= {_MAX_CLIQUE_N}, got {g.n}")
    adj = g.adj_bits
    best: list[int] = []

    def extend(stack: list[int], cand: int, seen: int) -> None:
        nonlocal best
        if cand == 0 and seen == 0:
            if len(stack) > len(best):
                best = stack.copy()
            return
        pool = cand | seen
        pivot, pivot_score = -1, -1
        m = pool
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            score = (cand & adj[u]).bit_count()
            if score > pivot_score:
                pivot_score, pivot = score, u
        rest = cand & ~adj[pivot]
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            stack.append(v)
            extend(stack, cand & adj[v], seen & adj[v])
            stack.pop()
            cand ^= low
            seen |= low

    extend([], (1 << g.n) - 1, 0)
    return sorted(best)


def perm_loss(g: Graph, perm: Sequence[int], D) -> int | float:
    """Exact loss of a hard permutation: sum over ordered non-adjacent pairs
    (u, v), u != v, of D[perm[u]][perm[v]] -- the explicit expansion of
    <P.T M P, D> with M the nonadjacency matrix and P[v, perm[v]] = 1.

    Returns an exact int when D holds ints (cost_lemma), a float when D is a
    float array (cost_stable)."""
    n = g.n
    pos = [int(x) for x in perm]
    if sorted(pos) != list(range(n)):
        raise ValueError("perm is not a permutation of 0..n-1")
    if len(D) != n or len(D[0]) != n:
        raise ValueError("cost matrix dimension mismatch")
    if isinstance(D, np.ndarray):
        m = nonadjacency_matrix(g)
        return float((m * D[np.ix_(pos, pos)]).sum())
    adj = g.adj_bits
    full = (1 << n) - 1
    total = 0
    for u in range(n):
        row = full & ~adj[u] & ~(1 << u)
        du = D[pos[u]]
        while row:
            low = row & -row
            v = low.bit_length() - 1
            row ^= low
            total += du[pos[v]]
    return total


def _nonadjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]


def brute_force_perm_min(g: Graph, D) -> tuple[tuple[int, ...], int | float]:
    """Global minimizer of the hard-permutation loss over all n! position maps,
    with its exact loss.  Ties broken by lexicographic order of the position
    map (the first minimizer in itertools.permutations order wins).
    Gated at n <= 8."""
    if g.n > _MAX_PERM_N:
        raise ValueError(f"permutation enumeration gated at n <= {_MAX_PERM_N}, got {g.n}")
    n = g.n
    pairs = _nonadjacent_pairs(g)
    best_perm: tuple[int, ...] | None = None
    best_loss: int | float | None = None
    for pm in permutations(range(n)):
        s = 0
        for u, v in pairs:
            s += D[pm[u]][pm[v]]
        s = s * 2  # D is symmetric; ordered pairs double the unordered sum
        if best_loss is None or s < best_loss:
            best_loss, best_perm = s, pm
    assert best_perm is not None
    if isinstance(D, np.ndarray):
        best_loss = float(best_loss)
    return best_perm, best_loss


def brute_force_assignment(cost) -> tuple[tuple[int, ...], float]:
    """Exhaustive minimum-cost assignment: returns (columns per row, total).
    Gated at n <= 8."""
    cost = np.asarray(cost, dtype=np.float64)
    n = cost.shape[0]
    if cost.ndim != 2 or cost.shape[1] != n:
        raise ValueError("cost matrix must be square")
    if n > _MAX_PERM_N:
        raise ValueError(f"assignment enumeration gated at n <= {_MAX_PERM_N}, got {n}")
    rows = np.arange(n)
    best_perm, best_total = None, None
    for pm in permutations(range(n)):
        total = float(cost[rows, pm].sum())
        if best_total is None or total < best_total:
            best_total, best_perm = total, pm
    return best_perm, best_total


@dataclass
class LemmaReport:
    """Result of verifying that the exponential cost matrix forces a maximum
    clique into the leading positions of the loss-minimizing permutation."""

    graph_id: str
    n: int
    omega: int
    minimizing_perm: tuple[int, ...]
    min_loss: int
    clique_in_prefix: bool
    bounds_hold: bool
    vacuous: bool  # omega == n: the non-prefixing class is empty

    @property
    def ok(self) -> bool:
        return self.clique_in_prefix and self.bounds_hold

    def to_json(self) -> str:
        d = asdict(self)
        d["minimizing_perm"] = list(self.minimizing_perm)
        d["min_loss"] = str(self.min_loss)  # exact integer, may exceed 2**53
        d["ok"] = self.ok
        return json.dumps(d, sort_keys=True)


def lemma_verify(g: Graph, graph_id: str = "") -> LemmaReport:
    """Enumerate all n! position maps under the exact exponential cost matrix
    and check, with exact integer arithmetic:

    - the global minimizer places some maximum clique in positions 0..omega-1
      (equivalently: the vertices mapped to the first omega positions are
      pairwise adjacent);
    - every clique-prefixing map has loss <= (n^2 - omega^2) * (n^2)^(n-omega-1);
    - every non-clique-prefixing map has loss >= (n^2)^(n-omega).

    When omega == n the non-prefixing class is empty and the report is flagged
    vacuous.  Gated at n <= 8."""
    if g.n > _MAX_PERM_N:
        raise ValueError(f"permutation enumeration gated at n <= {_MAX_PERM_N}, got {g.n}")
    n = g.n
    omega = len(brute_force_max_clique(g))
    D = cost_lemma(n)
    adj = g.adj_bits
    pairs = _nonadjacent_pairs(g)
    nsq = n * n
    vacuous = omega == n
    prefix_bound = 0 if vacuous else (nsq - omega * omega) * nsq ** (n - omega - 1)
    nonprefix_bound = nsq ** (n - omega)
    prefix_mask_limit = omega  # positions 0..omega-1

    best_perm: tuple[int, ...] | None = None
    best_loss: int | None = None
    best_prefixing = False
    bounds_hold = True
    for pm in permutations(range(n)):
        s = 0
        for u, v in pairs:
            s += D[pm[u]][pm[v]]
        s = s * 2
        # classify: are the vertices in the first omega positions a clique?
        mask = 0
        for v in range(n):
            if pm[v] < prefix_mask_limit:
                mask |= 1 << v
        prefixing = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if (adj[v] & mask) != (mask ^ low):
                prefixing = False
                break
        if prefixing:
            if s > prefix_bound:
                bounds_hold = False
        else:
            if s < nonprefix_bound:
                bounds_hold = False
        if best_loss is None or s < best_loss:
            best_loss, best_perm, best_prefixing = s, pm, prefixing
    assert best_perm is not None and best_loss is not None
    return LemmaReport(
        graph_id=graph_id,
        n=n,
        omega=omega,
        minimizing_perm=best_perm,
        min_loss=best_loss,
        clique_in_prefix=best_prefixing,
        bounds_hold=bounds_hold,
        vacuous=vacuous,
    )


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices (2^C(n,2) of them), in
    deterministic edge-subset order."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    pair_list = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(pair_list)
    for mask in range(1 << m):
        bits = [0] * n
        rest = mask
        while rest:
            low = rest & -rest
            k = low.bit_length() - 1
            rest ^= low
            u, v = pair_list[k]
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        yield Graph(n, bits)

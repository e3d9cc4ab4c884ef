"""Undirected simple graphs with bitset adjacency, generators, DIMACS I/O,
relabeling, padding, features, and baseline vertex orderings.

Permutation convention used across the package: a permutation is an integer
array ``perm`` of length n where ``perm[v]`` is the NEW POSITION of original
vertex ``v``.  The corresponding 0/1 matrix ``P`` has ``P[v, perm[v]] = 1``,
and relabeling acts as ``A' = P.T @ A @ P`` so that
``A'[perm[u], perm[v]] == A[u, v]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "VertexFeatures",
    "er_generate",
    "from_dimacs",
    "to_dimacs",
    "relabel",
    "nonadjacency_matrix",
    "zero_pad",
    "degree_order",
    "random_order",
    "features",
    "perm_to_sequence",
    "sequence_to_perm",
    "invert_perm",
    "perm_matrix",
    "is_permutation",
]


class Graph:
    """Immutable undirected simple graph.

    Adjacency is stored as one Python-int bitmask per vertex
    (``adj_bits[v] >> u & 1`` tests the edge u-v), which gives O(1) adjacency
    tests and fast neighbor-set intersection via ``&``.
    """

    __slots__ = ("n", "adj_bits", "_degrees")

    def __init__(self, n: int, adj_bits: Sequence[int]):
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        if len(adj_bits) != n:
            raise ValueError("adjacency rows must match vertex count")
        bits = tuple(int(b) for b in adj_bits)
        full = (1 << n) - 1
        for v, row in enumerate(bits):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop on vertex {v}")
        for v in range(n):
            for u in range(v + 1, n):
                if ((bits[v] >> u) & 1) != ((bits[u] >> v) & 1):
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj_bits", bits)
        object.__setattr__(self, "_degrees", None)

    def __setattr__(self, name, value):  # immutability guard
        raise AttributeError("Graph is immutable")

    # -- constructors -------------------------------------------------------
    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={n}")
        bits = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return Graph(n, bits)

    @staticmethod
    def from_matrix(a) -> "Graph":
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        bits = [0] * n
        for v in range(n):
            row = 0
            for u in range(n):
                if a[v, u]:
                    row |= 1 << u
            bits[v] = row
        return Graph(n, bits)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, [full ^ (1 << v) for v in range(n)])

    @staticmethod
    def edgeless(n: int) -> "Graph":
        return Graph(n, [0] * n)

    # -- accessors -----------------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj_bits[u] >> v) & 1)

    @property
    def degrees(self) -> tuple[int, ...]:
        cached = self._degrees
        if cached is None:
            cached = tuple(b.bit_count() for b in self.adj_bits)
            object.__setattr__(self, "_degrees", cached)
        return cached

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def neighbors(self, v: int) -> list[int]:
        return _bits_to_list(self.adj_bits[v])

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for v, row in enumerate(self.adj_bits):
            while row:
                low = row & -row
                a[v, low.bit_length() - 1] = 1
                row ^= low
        return a

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj_bits[v] >> (v + 1) << (v + 1)  # only u > v
            out.extend((v, u) for u in _bits_to_list(row))
        return out

    # -- equality ------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj_bits == other.adj_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"


def _bits_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class VertexFeatures:
    """Per-vertex degree and local density.

    ``local_density[v]`` is the fraction of realized edges among v's
    neighborhood, i.e. (edges among neighbors) / C(deg(v), 2), defined as 0
    for vertices of degree < 2.
    """

    degree: np.ndarray
    local_density: np.ndarray


# -- generation and I/O -------------------------------------------------------

def er_generate(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p): each unordered pair is an edge independently with
    probability p.  Deterministic for a fixed seed."""
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"edge probability must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    bits = [0] * n
    k = 0
    for v in range(n):
        for u in range(v + 1, n):
            if draws[k] < p:
                bits[v] |= 1 << u
                bits[u] |= 1 << v
            k += 1
    return Graph(n, bits)


def from_dimacs(text: str) -> Graph:
    """Parse DIMACS ascii clique format: comment lines start with "c", one
    "p edge <n> <m>" header, then "e <u> <v>" lines with 1-based indices.
    Duplicate edges are tolerated; self-loops and out-of-range indices are
    rejected."""
    n = None
    bits: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        tok = line.split()
        kind = tok[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(tok) != 4 or tok[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: malformed problem line {line!r}") from exc
            if n < 1 or m < 0:
                raise ValueError(f"line {lineno}: invalid sizes in problem line")
            bits = [0] * n
        elif kind == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(tok) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError as exc:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}") from exc
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {lineno}: vertex index out of range")
            if u == v:
                raise ValueError(f"line {lineno}: self-loop edge")
            bits[u - 1] |= 1 << (v - 1)
            bits[v - 1] |= 1 << (u - 1)
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    return Graph(n, bits)


def to_dimacs(g: Graph) -> str:
    """Serialize to DIMACS: one header, one e-line per unique edge (1-based,
    u < v), no duplicates."""
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- permutations -------------------------------------------------------------

def is_permutation(perm: Sequence[int], n: int) -> bool:
    return len(perm) == n and sorted(int(x) for x in perm) == list(range(n))


def _check_perm(perm: Sequence[int], n: int) -> list[int]:
    perm = [int(x) for x in perm]
    if not is_permutation(perm, n):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm}")
    return perm


def perm_to_sequence(perm: Sequence[int]) -> list[int]:
    """Invert a position map into a visit sequence: result[i] = the vertex
    placed at position i."""
    perm = _check_perm(perm, len(perm))
    seq = [0] * len(perm)
    for v, pos in enumerate(perm):
        seq[pos] = v
    return seq


def sequence_to_perm(seq: Sequence[int]) -> list[int]:
    """Inverse of perm_to_sequence: given vertex-at-each-position, return the
    position map."""
    return perm_to_sequence(seq)  # inversion is an involution


def invert_perm(perm: Sequence[int]) -> list[int]:
    return perm_to_sequence(perm)


def perm_matrix(perm: Sequence[int]) -> np.ndarray:
    """0/1 matrix P with P[v, perm[v]] = 1."""
    perm = _check_perm(perm, len(perm))
    n = len(perm)
    mat = np.zeros((n, n), dtype=np.int64)
    mat[np.arange(n), perm] = 1
    return mat


# -- transforms ---------------------------------------------------------------

def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertices so the output adjacency at (perm[u], perm[v]) equals
    the input adjacency at (u, v)."""
    perm = _check_perm(perm, g.n)
    bits = [0] * g.n
    for u, v in g.edges():
        pu, pv = perm[u], perm[v]
        bits[pu] |= 1 << pv
        bits[pv] |= 1 << pu
    return Graph(g.n, bits)


def nonadjacency_matrix(g: Graph) -> np.ndarray:
    """All-ones matrix minus identity minus adjacency: entry (i, j) is 1 iff
    i != j and i, j are not adjacent."""
    m = 1 - g.adjacency_matrix()
    np.fill_diagonal(m, 0)
    return m


def zero_pad(g: Graph, target_n: int) -> Graph:
    """Append isolated vertices until the graph has target_n vertices."""
    if target_n < g.n:
        raise ValueError(f"cannot pad from n={g.n} down to {target_n}")
    if target_n == g.n:
        return g
    return Graph(target_n, list(g.adj_bits) + [0] * (target_n - g.n))


# -- orderings ----------------------------------------------------------------

def degree_order(g: Graph) -> np.ndarray:
    """Position map placing vertices in non-increasing degree, ties broken by
    ascending original index."""
    deg = g.degrees
    seq = sorted(range(g.n), key=lambda v: (-deg[v], v))
    perm = np.empty(g.n, dtype=np.int64)
    for pos, v in enumerate(seq):
        perm[v] = pos
    return perm


def random_order(g: Graph, seed: int) -> np.ndarray:
    """Uniformly random position map, deterministic per seed."""
    return np.random.default_rng(seed).permutation(g.n)


# -- features -----------------------------------------------------------------

def features(g: Graph) -> VertexFeatures:
    deg = np.array(g.degrees, dtype=np.int64)
    dens = np.zeros(g.n, dtype=np.float64)
    for v in range(g.n):
        d = deg[v]
        if d < 2:
            continue
        mask = g.adj_bits[v]
        among = 0
        row = mask
        while row:
            low = row & -row
            u = low.bit_length() - 1
            row ^= low
            among += (g.adj_bits[u] & mask).bit_count()
        dens[v] = (among // 2) / (d * (d - 1) / 2)
    return VertexFeatures(degree=deg, local_density=dens)

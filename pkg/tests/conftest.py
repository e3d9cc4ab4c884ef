import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for reference_data

from reference_data import REF6_EDGES, REF6_N

from cliqueorder import Graph


@pytest.fixture(scope="session")
def ref6() -> Graph:
    """Six-vertex reference graph with unique maximum clique {0, 2, 4, 5}."""
    return Graph.from_edges(REF6_N, REF6_EDGES)


def planted_clique_graph(n: int, members: list[int]) -> Graph:
    """Complete graph on `members`, all other vertices isolated."""
    edges = [
        (members[i], members[j])
        for i in range(len(members))
        for j in range(i + 1, len(members))
    ]
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def k6_plus_isolated() -> Graph:
    """K6 on vertices 0..5 plus six isolated vertices (n = 12)."""
    return planted_clique_graph(12, list(range(6)))

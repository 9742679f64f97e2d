import numpy as np
import pytest

from hyperstate.hypergraph import Hypergraph

# The published four-vertex example: an edge (0,3) plus two 3-vertex
# hyperedges; its state has signs -1 exactly at n = 7, 9, 13, 15.
EXAMPLE_EDGES = ((0, 3), (0, 2, 3), (1, 2, 3))


@pytest.fixture
def example_hypergraph() -> Hypergraph:
    return Hypergraph(4, EXAMPLE_EDGES)


def random_hypergraph(rng: np.random.Generator, d: int) -> Hypergraph:
    """Deterministic random hypergraph: each nonempty vertex subset with p=1/4."""
    edges = []
    n_edges = int(rng.integers(0, 5))
    for _ in range(n_edges):
        size = int(rng.integers(1, d + 1))
        edges.append(tuple(sorted(rng.choice(d, size=size, replace=False).tolist())))
    return Hypergraph(d, edges)

"""
Graph cut functions and named graphs.

The model-4 spectrum of a cut is s^({i}) = weighted degree of i and
s^({i, j}) = -2 w_ij; s^(empty) = 0, so every cut vanishes on the empty
set and on the full vertex set.
"""

from collections import defaultdict
from typing import Dict, Optional

import numpy as np

from core import InvalidInputError, ModelId, SetFunctionOracle, SparseFT, make_rng
from models import GraphSpec


class CutOracle(SetFunctionOracle):
    """Total weight of edges with exactly one endpoint in A."""

    def __init__(self, graph: GraphSpec):
        super().__init__(graph.n)
        self.graph = graph
        self._edges = [(i - 1, j - 1, float(w)) for i, j, w in graph.edges]
        self._heads = np.array([e[0] for e in self._edges], dtype=np.int64)
        self._tails = np.array([e[1] for e in self._edges], dtype=np.int64)
        self._weights = np.array([e[2] for e in self._edges], dtype=float)

    def _evaluate(self, bits: int) -> float:
        return float(sum(w for i, j, w in self._edges if (bits >> i ^ bits >> j) & 1))

    def _evaluate_many(self, indicators: np.ndarray) -> np.ndarray:
        if not self._edges:
            return np.zeros(indicators.shape[0])
        crossing = indicators[:, self._heads] ^ indicators[:, self._tails]
        return crossing @ self._weights


def graph_cut_oracle(graph: GraphSpec) -> CutOracle:
    return CutOracle(graph)


def graph_cut_exact_ft(graph: GraphSpec) -> SparseFT:
    coefficients: Dict[int, float] = defaultdict(float)
    for i, j, w in graph.edges:
        coefficients[1 << (i - 1)] += w
        coefficients[1 << (j - 1)] += w
        coefficients[(1 << (i - 1)) | (1 << (j - 1))] -= 2.0 * w
    return SparseFT.from_coefficients(graph.n, ModelId.UNION, coefficients)


def path_graph(n: int, weight: float = 1.0) -> GraphSpec:
    """Path x_1 - x_2 - ... - x_n."""
    return GraphSpec(n=n, edges=[(i, i + 1, weight) for i in range(1, n)], name=f"path{n}")


def star_graph(n: int, weight: float = 1.0) -> GraphSpec:
    """Star with centre x_1."""
    return GraphSpec(n=n, edges=[(1, j, weight) for j in range(2, n + 1)], name=f"star{n}")


def cycle_graph(n: int, weight: float = 1.0) -> GraphSpec:
    if n < 3:
        raise InvalidInputError(f"A cycle needs at least 3 vertices, got {n}")
    edges = [(i, i + 1, weight) for i in range(1, n)] + [(1, n, weight)]
    return GraphSpec(n=n, edges=edges, name=f"cycle{n}")


def complete_graph(n: int, weight: float = 1.0) -> GraphSpec:
    edges = [(i, j, weight) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return GraphSpec(n=n, edges=edges, name=f"complete{n}")


def random_graph(n: int, p: float, seed: Optional[int] = None, weighted: bool = False) -> GraphSpec:
    """Erdos-Renyi G(n, p); unit weights unless weighted (then U[0, 1))."""
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"Edge probability must lie in [0, 1], got {p}")
    rng = make_rng(seed)
    edges = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if rng.random() < p:
                edges.append((i, j, float(rng.random()) if weighted else 1.0))
    return GraphSpec(n=n, edges=edges, name=f"random{n}")


NAMED_GRAPHS = {
    "path": path_graph,
    "star": star_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
}

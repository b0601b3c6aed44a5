"""
Greedy maximisation under a cardinality constraint |A| <= d.
"""

import heapq
import logging
from typing import Callable, List, Optional, Union

from core import InvalidInputError, SetFunctionOracle, SparseFT, make_rng
from models import GreedyResult
from transforms import SparseOracle

logger = logging.getLogger(__name__)

Objective = Union[SetFunctionOracle, SparseFT]


def _as_oracle(s: Objective) -> SetFunctionOracle:
    if isinstance(s, SparseFT):
        return SparseOracle(s)
    return s


def _plain_greedy(value: Callable[[int], float], n: int, d: int) -> List[int]:
    selected = 0
    picks: List[int] = []
    current = value(selected)
    for _ in range(d):
        best_gain, best_element = None, None
        for i in range(n):
            if selected >> i & 1:
                continue
            gain = value(selected | 1 << i) - current
            # strict > keeps the smallest index on ties
            if best_gain is None or gain > best_gain:
                best_gain, best_element = gain, i
        selected |= 1 << best_element
        current += best_gain
        picks.append(best_element)
    return picks


def _lazy_greedy(value: Callable[[int], float], n: int, d: int) -> List[int]:
    """Stale upper bounds in a max-heap; exact for submodular objectives."""
    selected = 0
    picks: List[int] = []
    current = value(selected)
    # entries are (-gain, element, round the gain was computed in)
    heap = [(-(value(1 << i) - current), i, 0) for i in range(n)]
    heapq.heapify(heap)
    for round_index in range(d):
        while True:
            negative_gain, i, stamp = heapq.heappop(heap)
            if stamp == round_index:
                break
            gain = value(selected | 1 << i) - current
            heapq.heappush(heap, (-gain, i, round_index))
        selected |= 1 << i
        current -= negative_gain
        picks.append(i)
    return picks


def greedy_maximize(s: Objective, d: int, lazy: bool = False) -> GreedyResult:
    """
    d rounds, each adding the element of largest marginal gain (ties to the
    smallest index). Returns the 1-based selection in pick order.
    """
    oracle = _as_oracle(s)
    n = oracle.n
    if not 1 <= d <= n:
        raise InvalidInputError(f"Need 1 <= d <= n={n}, got d={d}")

    start = oracle.query_count
    picks = (_lazy_greedy if lazy else _plain_greedy)(oracle.eval, n, d)
    selected = sum(1 << i for i in picks)
    value = oracle.eval(selected)
    evaluations = oracle.query_count - start
    logger.debug(f"Greedy d={d}{' (lazy)' if lazy else ''}: {evaluations} evaluations, value {value:.6g}")
    return GreedyResult(selection=[i + 1 for i in picks], value=value, evaluations=evaluations, lazy=lazy)


def random_placement(n: int, d: int, seed: Optional[int] = None) -> int:
    """Uniformly random d-subset as a raw mask."""
    if not 1 <= d <= n:
        raise InvalidInputError(f"Need 1 <= d <= n={n}, got d={d}")
    chosen = make_rng(seed).choice(n, size=d, replace=False)
    return sum(1 << int(i) for i in chosen)

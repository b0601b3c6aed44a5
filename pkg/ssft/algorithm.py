"""
Sparse set function Fourier transform (SSFT) and its filtered variant SSFT+.

SSFT walks the restriction chain M_0 = {}, ..., M_n = N. Step i expands the
previous support B_(i-1) to candidates B_(i-1) | (B_(i-1) + x_i) and solves
for their coefficients:

  models 3/4: a block-triangular system built from the previous matrix T.
              Only |B_(i-1)| new queries are needed, the other half reuses
              the queries of step i-1.
              model 4: [[T, 0], [T, T]]  -> low = T^-1 q_new,
                                            high = T^-1 (q_old - q_new)
              model 3: [[T, 0], [T, -T]] -> low = T^-1 q_new,
                                            high = T^-1 (q_new - q_old)
  model 5:    a least-squares fit on every subset of M_i queried so far,
              topped up with random subsets of M_i.

Coefficients with |c| < epsilon are dropped and at most k_max survive
each step.
"""

import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import ssft_settings
from core import (
    DegenerateFilterError,
    InvalidInputError,
    ModelId,
    SetFunctionOracle,
    SparseFT,
    full_bits,
    lex_rank,
    make_rng,
    order_key,
    resolve_seed,
)
from filtering import FilteredOracle, frequency_response_many, sample_one_hop
from models import SsftConfig, SsftReport, query_bound
from .known_support import solve_triangular_system, solve_wht_least_squares, triangular_system
from .propagation import support_propagate

logger = logging.getLogger(__name__)

# (frequency bits, coefficient, query value at the frequency's query set)
Entry = Tuple[int, float, float]


def _prune(entries: List[Entry], cfg: SsftConfig, n: int) -> Tuple[List[Entry], bool]:
    """Drop small coefficients, cap at k_max, and restore (cardinality, rank) order."""
    kept = [e for e in entries if abs(e[1]) >= cfg.epsilon and e[1] != 0.0]
    truncated = len(kept) > cfg.k_max
    if truncated:
        kept.sort(key=lambda e: (-abs(e[1]), lex_rank(e[0], n)))
        kept = kept[:cfg.k_max]
    kept.sort(key=lambda e: order_key(e[0], n))
    return kept, truncated


def _root(value: float, cfg: SsftConfig) -> List[Entry]:
    if cfg.keep_root or (abs(value) >= cfg.epsilon and value != 0.0):
        return [(0, value, value)]
    return []


class _ChainRun:
    """Mutable accounting for one pass over the chain."""

    def __init__(self, n: int):
        self.n = n
        self.sizes: List[int] = []
        self.truncated = False
        self.work = 0

    def record(self, entries: List[Entry], truncated: bool = False) -> None:
        self.sizes.append(len(entries))
        self.truncated = self.truncated or truncated


def _triangular_chain(s: SetFunctionOracle, n: int, cfg: SsftConfig, run: _ChainRun) -> List[Entry]:
    model = cfg.model
    root_query = 0 if model == ModelId.UNION else full_bits(n)
    entries = _root(s.eval(root_query), cfg)
    run.record(entries)

    for i in range(1, n + 1):
        if not entries:
            run.record(entries)
            continue
        support = [e[0] for e in entries]
        previous = np.array([e[2] for e in entries])
        k = len(support)

        step = support_propagate(support, i, model, n)
        fresh = np.array([s.eval(a) for a in step.queries[:k]])
        matrix = triangular_system(support, n, model)
        low = solve_triangular_system(matrix, fresh, model, step.candidates)
        rhs = previous - fresh if model == ModelId.UNION else fresh - previous
        high = solve_triangular_system(matrix, rhs, model, step.candidates)
        run.work += 2 * k * k

        candidates = list(zip(step.candidates, np.concatenate([low, high]), np.concatenate([fresh, previous])))
        entries, cut = _prune(candidates, cfg, n)
        run.record(entries, cut)
        if cut:
            logger.warning(f"Support truncated to k_max={cfg.k_max} at step {i}")
        logger.debug(f"Step {i}: {2 * k} candidates -> {len(entries)} kept")
    return entries


def _wht_chain(s: SetFunctionOracle, n: int, cfg: SsftConfig, run: _ChainRun, rng: np.random.Generator) -> List[Entry]:
    cache: Dict[int, float] = {}

    def query(bits: int) -> float:
        if bits not in cache:
            cache[bits] = s.eval(bits)
        return cache[bits]

    entries = _root(query(0), cfg)
    run.record(entries)

    for i in range(1, n + 1):
        if not entries:
            run.record(entries)
            continue
        k = len(entries)
        step = support_propagate([e[0] for e in entries], i, ModelId.WHT)
        coefs = solve_wht_least_squares(
            query, step.candidates, i, n, cfg.ls_oversampling, rng, known_rows=list(cache)
        )
        run.work += 2 * k * k

        entries, cut = _prune([(b, c, 0.0) for b, c in zip(step.candidates, coefs)], cfg, n)
        run.record(entries, cut)
        if cut:
            logger.warning(f"Support truncated to k_max={cfg.k_max} at step {i}")
        logger.debug(f"Step {i}: {2 * k} candidates -> {len(entries)} kept ({len(cache)} distinct queries)")
    return entries


def _report(
    n: int,
    cfg: SsftConfig,
    result: SparseFT,
    queries: int,
    run: _ChainRun,
    seed: Optional[int],
    bound_factor: int = 1,
) -> SsftReport:
    loose = query_bound(n, result.k, slack=2)
    main = query_bound(n, result.k, slack=1)
    return SsftReport(
        result=result,
        queries_used=queries,
        support_sizes_per_step=run.sizes,
        truncated=run.truncated,
        seed_used=seed,
        model=cfg.model,
        epsilon=cfg.epsilon,
        k_max=cfg.k_max,
        solve_ops_estimate=run.work,
        query_bound=None if loose is None else bound_factor * loose,
        query_bound_main=None if main is None else bound_factor * main,
    )


def ssft(s: SetFunctionOracle, n: int, cfg: Optional[SsftConfig] = None) -> SsftReport:
    """Learn the sparse spectrum of s from queries."""
    cfg = cfg or SsftConfig()
    if s.n != n:
        raise InvalidInputError(f"Oracle is over n={s.n}, expected n={n}")

    start_time = time.time()
    start_queries = s.query_count
    run = _ChainRun(n)
    seed = None
    if cfg.model == ModelId.WHT:
        seed = resolve_seed(cfg.seed)
        entries = _wht_chain(s, n, cfg, run, make_rng(seed))
    else:
        entries = _triangular_chain(s, n, cfg, run)

    result = SparseFT.from_coefficients(n, cfg.model, {b: c for b, c, _ in entries})
    queries = s.query_count - start_queries
    elapsed_ms = (time.time() - start_time) * 1000
    logger.info(
        f"SSFT model {int(cfg.model)} n={n}: k={result.k}, {queries} queries, "
        f"{elapsed_ms:.1f}ms{' (truncated)' if run.truncated else ''}"
    )
    return _report(n, cfg, result, queries, run, seed)


def ssft_plus(s: SetFunctionOracle, n: int, cfg: Optional[SsftConfig] = None) -> SsftReport:
    """
    SSFT on a randomly filtered copy of s, then undo the filter per frequency.

    The one-hop filter is drawn from cfg.seed (a fresh seed is drawn and
    recorded if unset). queries_used counts queries to s itself.
    """
    cfg = cfg or SsftConfig()
    if s.n != n:
        raise InvalidInputError(f"Oracle is over n={s.n}, expected n={n}")

    seed = resolve_seed(cfg.seed)
    h = sample_one_hop(n, seed)
    start_queries = s.query_count
    inner_cfg = cfg.model_copy(update={"seed": seed})
    inner = ssft(FilteredOracle(h, s, cfg.model), n, inner_cfg)

    support = inner.result.support
    responses = frequency_response_many(h, support, cfg.model)
    for b, response in zip(support, responses):
        if abs(response) < cfg.frequency_guard:
            logger.warning(f"Degenerate filter response at {b:#x} for seed {seed}")
            raise DegenerateFilterError(b, float(response), seed)

    coefs = {b: inner.result.entries[b] / response for b, response in zip(support, responses)}
    result = SparseFT.from_coefficients(n, cfg.model, coefs)
    queries = s.query_count - start_queries

    run = _ChainRun(n)
    run.sizes = list(inner.support_sizes_per_step)
    run.truncated = inner.truncated
    run.work = inner.solve_ops_estimate
    logger.info(f"SSFT+ model {int(cfg.model)} n={n} seed={seed}: k={result.k}, {queries} queries")
    return _report(n, cfg, result, queries, run, seed, bound_factor=n + 1)

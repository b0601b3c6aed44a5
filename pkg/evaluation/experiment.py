"""
Experiment harness: generate -> learn -> error / greedy, per repetition.

Repetition r uses seed task.seed + r for the function instance, the SSFT+
filter, the error samples and the random placement baseline. Learners run
with the experiment zero threshold unless the task sets one, and keep the
empty set for the families that vanish there.
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Sequence

from core import RecoveryError, UndefinedErrorEstimate
from generators import default_keep_root, exact_ft, resolve_oracle
from models import ExperimentRow, ExperimentSummary, ExperimentTask, ValidationStatus
from ssft import ssft, ssft_plus
from validation.recovery import RecoveryValidator

from .greedy import greedy_maximize, random_placement
from .metrics import relative_error

logger = logging.getLogger(__name__)


def run_repetition(task: ExperimentTask, rep: int) -> ExperimentRow:
    seed = task.seed + rep
    row = ExperimentRow(rep=rep, seed=seed)
    spec, oracle = resolve_oracle(task.oracle, seed)
    truth = oracle.clone()
    learner = ssft_plus if task.learner == "ssft_plus" else ssft

    start_time = time.time()
    start_queries = oracle.query_count
    try:
        report = learner(oracle, spec.n, task.ssft_config(seed, default_keep_root(spec)))
    except RecoveryError as e:
        logger.error(f"Repetition {rep} (seed {seed}) failed: {e}")
        row.time_ms = (time.time() - start_time) * 1000
        row.queries = oracle.query_count - start_queries
        row.rel_error = math.nan
        row.error = str(e)
        row.validation_flag = ValidationStatus.FLAG
        return row

    row.time_ms = (time.time() - start_time) * 1000
    row.queries = oracle.query_count - start_queries
    row.k = report.k
    row.truncated = report.truncated

    reference = exact_ft(spec)
    if reference is not None and reference.model != report.model:
        reference = None
    RecoveryValidator().validate(report, reference, row=row, run_id=f"rep-{rep}")

    try:
        row.rel_error = relative_error(truth, report.result, task.num_samples, seed).relative_error
    except UndefinedErrorEstimate as e:
        row.notes = f"{row.notes}; {e}" if row.notes else str(e)

    if task.greedy_d is not None:
        d = min(task.greedy_d, spec.n)
        on_truth = greedy_maximize(truth.clone(), d, lazy=task.lazy_greedy)
        on_surrogate = greedy_maximize(report.result, d, lazy=task.lazy_greedy)
        judge = truth.clone()
        row.greedy_true = on_truth.value
        row.greedy_surrogate = judge.eval(sum(1 << (i - 1) for i in on_surrogate.selection))
        row.greedy_random = judge.eval(random_placement(spec.n, d, seed))

    logger.info(
        f"Repetition {rep} (seed {seed}): k={row.k}, {row.queries} queries, "
        f"{row.time_ms:.0f}ms, rel_error={row.rel_error}"
    )
    return row


def _run_one(args) -> ExperimentRow:
    task, rep = args
    return run_repetition(task, rep)


def run_experiment(task: ExperimentTask) -> List[ExperimentRow]:
    """One row per repetition; fans out over processes when task.workers > 1."""
    logger.info(
        f"Experiment {task.oracle} with {task.learner} (model {int(task.model)}), "
        f"{task.repetitions} repetitions from seed {task.seed}"
    )
    jobs = [(task, rep) for rep in range(task.repetitions)]
    if task.workers > 1 and task.repetitions > 1:
        with ProcessPoolExecutor(max_workers=min(task.workers, task.repetitions)) as executor:
            rows = list(executor.map(_run_one, jobs))
    else:
        rows = [_run_one(job) for job in jobs]

    failures = sum(1 for row in rows if not row.succeeded)
    if failures:
        logger.warning(f"{failures} of {len(rows)} repetitions failed")
    return rows


def _mean(values: Sequence[Optional[float]]) -> Optional[float]:
    present = [v for v in values if v is not None and not math.isnan(v)]
    if not present:
        return None
    return sum(present) / len(present)


def summarize_rows(rows: Sequence[ExperimentRow]) -> ExperimentSummary:
    """Means over successful repetitions."""
    ok = [row for row in rows if row.succeeded]
    return ExperimentSummary(
        repetitions=len(rows),
        failures=len(rows) - len(ok),
        mean_queries=_mean([row.queries for row in ok]),
        mean_time_ms=_mean([row.time_ms for row in ok]),
        mean_k=_mean([row.k for row in ok]),
        mean_rel_error=_mean([row.rel_error for row in ok]),
        mean_greedy_true=_mean([row.greedy_true for row in ok]),
        mean_greedy_surrogate=_mean([row.greedy_surrogate for row in ok]),
        mean_greedy_random=_mean([row.greedy_random for row in ok]),
    )

"""
Command-line front end.

  generate  FAMILY -p key=value ...   write a function spec
  transform --oracle/--in ...         dense forward or inverse transform
  ssft      --oracle ... [--plus]     learn a sparse spectrum (--report for the run report)
  eval      --oracle --spectrum       sampled relative error
  maximize  --oracle [--spectrum]     greedy maximisation
  bench     --oracle ...              repeated experiment, results table

Diagnostics go to standard error; machine output goes to --out (or to
standard output when --out is omitted).
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
from pydantic import ValidationError

from config import app_config, evaluation_config
from core import (
    CapacityError,
    InvalidInputError,
    ModelId,
    RecoveryError,
    UndefinedErrorEstimate,
    densify,
)
from evaluation import greedy_maximize, relative_error, run_experiment, summarize_rows
from export import (
    read_dense,
    read_sparse_ft,
    report_document,
    sparse_ft_document,
    write_dense,
    write_results,
    write_sparse_ft,
    write_spec,
)
from generators import default_keep_root, parse_oracle_spec, resolve_oracle
from models import FAMILIES, ExperimentTask, SsftConfig
from ssft import ssft, ssft_plus
from transforms import dense_ft, dense_ift, dense_to_sparse

logger = logging.getLogger(__name__)

MODEL_CHOICE = click.Choice(["3", "4", "5"])


def _emit(document: Dict[str, Any], out: Optional[Path]) -> None:
    text = json.dumps(document, indent=2) + "\n"
    if out is None:
        click.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info(f"Wrote {out}")


def _spec_text(family: str, params: Sequence[str]) -> str:
    pairs = dict(item.split("=", 1) if "=" in item else (item, "") for item in params)
    if family == "cut":
        graph = pairs.pop("graph", "path3")
        rest = ",".join(f"{k}={v}" for k, v in pairs.items())
        return f"cut:{graph}:{rest}" if graph == "random" else f"cut:{graph}"
    return f"{family}:" + ",".join(f"{k}={v}" for k, v in pairs.items())


@click.group()
@click.version_option(
    version=app_config.schema_version,
    prog_name="setfourier",
    message="%(prog)s schema version %(version)s",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=app_config.log_level,
    show_default=True,
    help="Diagnostics level (standard error)",
)
def cli(log_level: str) -> None:
    """Fourier transforms and sparse learning for set functions."""
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.option("-p", "--param", "params", multiple=True, help="Family parameter key=value (repeatable)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Spec JSON path")
def generate(family: str, params: List[str], seed: int, out: Optional[Path]) -> None:
    """Write a function spec, e.g. `generate facility -p n=20 -p L=10`."""
    spec = parse_oracle_spec(_spec_text(family, params), seed)
    if out is None:
        _emit({"schema_version": app_config.schema_version, "spec": spec.model_dump(mode="json")}, None)
    else:
        write_spec(spec, out)
        logger.info(f"Wrote {family} spec with n={spec.n} to {out}")


@cli.command()
@click.option("--model", type=MODEL_CHOICE, default="4", show_default=True)
@click.option("--direction", type=click.Choice(["fwd", "inv"]), default="fwd", show_default=True)
@click.option("--oracle", default=None, help="Oracle spec to densify")
@click.option("--in", "--input", "input_path", type=click.Path(path_type=Path), default=None,
              help="Dense CSV or binary file")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None,
              help=".csv/.bin for dense output; .json for a spectrum (fwd only)")
def transform(model: str, direction: str, oracle: Optional[str], input_path: Optional[Path],
              seed: int, out: Optional[Path]) -> None:
    """Dense transform of a function given by an oracle spec or a dense file."""
    if (oracle is None) == (input_path is None):
        raise click.UsageError("Give exactly one of --oracle and --in")
    model_id = ModelId.parse(model)
    if oracle is not None:
        _, source = resolve_oracle(oracle, seed)
        function = densify(source)
    else:
        function = read_dense(input_path)

    result = dense_ft(function, model_id) if direction == "fwd" else dense_ift(function, model_id)
    if out is not None and out.suffix.lower() == ".json":
        if direction != "fwd":
            raise click.UsageError("Spectrum JSON output needs --direction fwd")
        write_sparse_ft(dense_to_sparse(result, model_id), out)
    elif out is not None:
        write_dense(result, out)
    else:
        _emit({"n": result.n, "model": int(model_id), "direction": direction, "values": result.values.tolist()}, None)


@cli.command(name="ssft")
@click.option("--model", type=MODEL_CHOICE, default="4", show_default=True)
@click.option("--oracle", required=True, help="Oracle spec, e.g. cut:path3 or @spec.json")
@click.option("--plus", is_flag=True, help="Run SSFT+ (random one-hop filter)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--eps", "--epsilon", "epsilon", type=float, default=None, help="Coefficient zero threshold")
@click.option("--kmax", "--k-max", "k_max", type=int, default=None, help="Support-size cap per step")
@click.option("--keep-root/--no-keep-root", default=None,
              help="Keep the empty set at step 0 (default: chosen by the oracle family)")
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Recovered spectrum JSON path")
@click.option("--report", "report_path", type=click.Path(path_type=Path), default=None, help="Run report JSON path")
def ssft_command(model: str, oracle: str, plus: bool, seed: int, epsilon: Optional[float],
                 k_max: Optional[int], keep_root: Optional[bool], out: Optional[Path],
                 report_path: Optional[Path]) -> None:
    """Learn the sparse spectrum of an oracle."""
    spec, source = resolve_oracle(oracle, seed)
    overrides = {key: value for key, value in {"epsilon": epsilon, "k_max": k_max}.items() if value is not None}
    overrides["keep_root"] = default_keep_root(spec) if keep_root is None else keep_root
    cfg = SsftConfig(model=ModelId.parse(model), seed=seed, **overrides)
    report = (ssft_plus if plus else ssft)(source, spec.n, cfg)
    logger.info(f"Recovered k={report.k} with {report.queries_used} queries")
    if report_path is not None:
        _emit(report_document(report), report_path)
    if out is not None or report_path is None:
        _emit(sparse_ft_document(report.result), out)


@cli.command(name="eval")
@click.option("--oracle", required=True)
@click.option("--spectrum", type=click.Path(path_type=Path), required=True, help="Spectrum or report JSON")
@click.option("--samples", type=int, default=evaluation_config.num_samples, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def eval_command(oracle: str, spectrum: Path, samples: int, seed: int, out: Optional[Path]) -> None:
    """Sampled relative error of a learned spectrum against an oracle."""
    _, truth = resolve_oracle(oracle, seed)
    estimate = relative_error(truth, read_sparse_ft(spectrum), samples, seed)
    logger.info(f"Relative error {estimate.relative_error:.3e} over {samples} samples")
    _emit(estimate.model_dump(mode="json"), out)


@cli.command()
@click.option("--oracle", required=True, help="True objective")
@click.option("--spectrum", type=click.Path(path_type=Path), default=None,
              help="Maximise this learned spectrum instead and judge it on the oracle")
@click.option("--d", "d", type=int, required=True, help="Cardinality budget")
@click.option("--lazy", is_flag=True, default=evaluation_config.lazy_greedy)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None)
def maximize(oracle: str, spectrum: Optional[Path], d: int, lazy: bool, seed: int, out: Optional[Path]) -> None:
    """Greedy maximisation under |A| <= d."""
    _, truth = resolve_oracle(oracle, seed)
    objective = read_sparse_ft(spectrum) if spectrum is not None else truth.clone()
    result = greedy_maximize(objective, d, lazy=lazy)
    document = result.model_dump(mode="json")
    document["true_value"] = truth.eval(sum(1 << (i - 1) for i in result.selection))
    _emit(document, out)


@cli.command()
@click.option("--oracle", required=True)
@click.option("--learner", type=click.Choice(["ssft", "ssft_plus"]), default="ssft", show_default=True)
@click.option("--model", type=MODEL_CHOICE, default="4", show_default=True)
@click.option("--repetitions", type=int, default=1, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=evaluation_config.num_samples, show_default=True)
@click.option("--eps", "--epsilon", "epsilon", type=float, default=None, help="Zero threshold (default: experiment mode)")
@click.option("--kmax", "--k-max", "k_max", type=int, default=None)
@click.option("--keep-root/--no-keep-root", default=None, help="Default: chosen by the oracle family")
@click.option("--greedy-d", type=int, default=None)
@click.option("--lazy", is_flag=True, default=evaluation_config.lazy_greedy)
@click.option("--workers", type=int, default=evaluation_config.max_workers, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Results .csv, .json or .xlsx")
def bench(oracle: str, learner: str, model: str, repetitions: int, seed: int, samples: int,
          epsilon: Optional[float], k_max: Optional[int], keep_root: Optional[bool], greedy_d: Optional[int],
          lazy: bool, workers: int, out: Optional[Path]) -> None:
    """Repeated generate -> learn -> evaluate runs."""
    task = ExperimentTask(
        oracle=oracle,
        learner=learner,
        model=ModelId.parse(model),
        repetitions=repetitions,
        seed=seed,
        num_samples=samples,
        epsilon=epsilon,
        k_max=k_max,
        keep_root=keep_root,
        greedy_d=greedy_d,
        lazy_greedy=lazy,
        workers=workers,
    )
    rows = run_experiment(task)
    summary = summarize_rows(rows)
    logger.info(
        f"{summary.repetitions} repetitions, {summary.failures} failed; "
        f"mean queries {summary.mean_queries}, mean rel_error {summary.mean_rel_error}"
    )
    if out is not None:
        write_results(rows, out, summary)
    else:
        _emit({
            "schema_version": app_config.schema_version,
            "rows": [row.model_dump(mode="json") for row in rows],
            "summary": summary.model_dump(mode="json"),
        }, None)


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI and return an exit code: 0 success, 1 recovery failure,
    2 invalid input.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        code = cli.main(args=args, prog_name="setfourier", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted", err=True)
        return 1
    except RecoveryError as e:
        logger.error(f"Recovery failed: {e}")
        click.echo(f"Error: {e}", err=True)
        return 1
    except (InvalidInputError, ValidationError, FileNotFoundError, CapacityError, UndefinedErrorEstimate) as e:
        logger.error(f"Invalid input: {e}")
        click.echo(f"Error: {e}", err=True)
        return 2
    return code if isinstance(code, int) else 0

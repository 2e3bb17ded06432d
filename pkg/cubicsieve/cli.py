"""
Command-line front end.

    cubicsieve moments --weight Q --count 6 --format json
    cubicsieve gammas --n 4 --format plain
    cubicsieve verify conjecture --n 20
    cubicsieve verify mapping --n 10
    cubicsieve verify orthogonality --n 8 --tol 1e-9
    cubicsieve verify weights
    cubicsieve serve --port 8000

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from pydantic import ValidationError

from .api.config import RunConfig, SieveConfig
from .api.manager import CONFIG_PATH_ENV, ConfigManager
from .api.validator import FORMATS, TARGETS, RunConfigValidator
from .errors import ConfigError, SieveError
from .logging_config import configure_logging
from .pipeline import Pipeline
from .reporting import Section, emit, render, to_document

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, default=None, help=f"YAML or JSON settings file (or ${CONFIG_PATH_ENV})")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (or $CUBICSIEVE_LOG_LEVEL)")
    common.add_argument("--format", dest="output_format", choices=FORMATS, default=None, help="report format")
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--tol", type=float, default=None, help="tolerance for numeric checks (default 1e-10)")
    return common


def _depth_option(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument("--n", "--count", dest="depth", type=int, default=None, help=help_text)


def _corruption_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corrupt-moment", type=int, default=None, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="cubicsieve",
        description="Exact verification of the cubic-sieve orthogonal polynomial system.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    moments = commands.add_parser("moments", parents=[common], help="exact moments of w_P or w_Q")
    moments.add_argument("--weight", choices=("P", "Q"), default="Q")
    _depth_option(moments, "table depth: emit mu_0..mu_{2 count}")

    gammas = commands.add_parser("gammas", parents=[common], help="Hankel ledger and both gamma routes")
    _depth_option(gammas, "number of triples N (gamma up to index 3N+2)")
    _corruption_option(gammas)

    verify = commands.add_parser("verify", parents=[common], help="run one verification suite")
    verify.add_argument("target", choices=TARGETS)
    _depth_option(verify, "depth of the check (triples for conjecture and mapping, degree for orthogonality)")
    _corruption_option(verify)

    serve = commands.add_parser("serve", help="run the HTTP report service")
    serve.add_argument("--config", type=Path, default=None)
    serve.add_argument("--log-level", default=None)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def build_run_config(args: argparse.Namespace, settings: SieveConfig) -> RunConfig:
    """Flags over settings (which already merged file and environment)."""

    return RunConfig(
        command=args.command,
        target=getattr(args, "target", None),
        depth=args.depth if args.depth is not None else settings.depth,
        weight=getattr(args, "weight", "Q"),
        tolerance=args.tol if args.tol is not None else settings.tolerance,
        output_format=args.output_format or settings.output_format,
        out=args.out,
        corrupt_moment=getattr(args, "corrupt_moment", None),
    )


def _finish(run: RunConfig, title: str, report: Any, sections: List[Section], passed: Optional[bool]) -> int:
    emit(render(run.output_format, title, to_document(report), sections, passed), run.out)
    if passed is False:
        logger.warning("%s: checks failed", title)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _dump_rows(rows: Sequence[Any]) -> List[Dict[str, Any]]:
    return [row.model_dump(mode="json", by_alias=True) for row in rows]


def cmd_moments(run: RunConfig, pipeline: Optional[Pipeline] = None) -> int:
    """The moment table mu_0..mu_{2 count}; csv and plain rows carry the index k."""

    pipeline = pipeline or Pipeline()
    document = pipeline.moment_table(run.weight, run.depth).to_json()
    rows = [{"k": k, **mu} for k, mu in enumerate(document["moments"])]
    return _finish(run, f"moments of w_{run.weight}", document, [("moments", rows)], None)


def cmd_gammas(run: RunConfig, pipeline: Optional[Pipeline] = None) -> int:
    pipeline = pipeline or Pipeline()
    report = pipeline.gammas_both_routes(run.depth, run.corrupt_moment)
    sections: List[Section] = [
        ("ledger", report.ledger),
        ("gamma", _dump_rows(report.comparison.rows)),
    ]
    return _finish(run, f"recurrence coefficients, N = {run.depth}", report, sections, report.passed)


def _verify_conjecture(run: RunConfig, pipeline: Pipeline) -> int:
    report = pipeline.conjecture_report(run.depth, run.corrupt_moment)
    sections: List[Section] = [
        ("chain route", _dump_rows(report.chain.checks)),
        ("direct route", _dump_rows(report.direct.checks)),
        ("routes", _dump_rows(report.routes.rows)),
    ]
    return _finish(run, f"conjecture pattern, N = {run.depth}", report, sections, report.passed)


def _verify_mapping(run: RunConfig, pipeline: Pipeline) -> int:
    report = pipeline.mapping_report(run.depth, run.corrupt_moment)
    return _finish(run, f"cubic decomposition, N = {run.depth}", report, [("identities", _dump_rows(report.rows))], report.passed)


def _verify_orthogonality(run: RunConfig, pipeline: Pipeline) -> int:
    report = pipeline.orthogonality_report(run.depth, run.tolerance, run.corrupt_moment)
    sections: List[Section] = [
        ("exact", _dump_rows(report.exact.checks)),
        ("numeric", _dump_rows(report.numeric.rows)),
    ]
    return _finish(run, f"orthogonality of P_0..P_{run.depth}", report, sections, report.passed)


def _verify_weights(run: RunConfig, pipeline: Pipeline) -> int:
    report = pipeline.weights_report(run.tolerance)
    return _finish(run, "weight closed forms and oracle", report, [("sweeps", _dump_rows(report.sweeps))], report.passed)


VERIFY: Dict[str, Callable[[RunConfig, Pipeline], int]] = {
    "conjecture": _verify_conjecture,
    "mapping": _verify_mapping,
    "orthogonality": _verify_orthogonality,
    "weights": _verify_weights,
}


def cmd_verify(run: RunConfig, pipeline: Optional[Pipeline] = None) -> int:
    return VERIFY[run.target or ""](run, pipeline or Pipeline())


COMMANDS: Dict[str, Callable[[RunConfig, Optional[Pipeline]], int]] = {
    "moments": cmd_moments,
    "gammas": cmd_gammas,
    "verify": cmd_verify,
}


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    if args.config is not None:
        os.environ[CONFIG_PATH_ENV] = str(args.config.resolve())
    uvicorn.run("cubicsieve.main:app", host=args.host, port=args.port, log_level=(args.log_level or "info").lower())
    return EXIT_OK


def _usage_error(message: str) -> int:
    sys.stderr.write(f"cubicsieve: error: {message}\n")
    return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        configure_logging(args.log_level)
    except ValueError as exc:
        return _usage_error(str(exc))

    if args.command == "serve":
        return cmd_serve(args)

    manager = ConfigManager(args.config)
    try:
        settings = manager.load(strict=True)
        run = build_run_config(args, settings)
    except (ConfigError, ValidationError) as exc:
        return _usage_error(str(exc))

    validation = RunConfigValidator().validate(run, settings)
    for issue in validation.errors:
        if issue.severity != "error":
            logger.warning("%s: %s", issue.field, issue.message)
    if not validation.is_valid:
        return _usage_error(validation.summary())

    try:
        return COMMANDS[run.command](run, manager.pipeline)
    except SieveError as exc:
        logger.error("%s failed: %s", run.command, exc)
        sys.stderr.write(f"cubicsieve: check failed: {exc}\n")
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())

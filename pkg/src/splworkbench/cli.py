"""Command-line entry point.

    splworkbench run CONFIG        run an experiment
    splworkbench validate CONFIG   check a configuration only
    splworkbench rerun ARCHIVE     re-execute an archived experiment
    splworkbench components        list built-in components
    splworkbench CONFIG            same as ``run CONFIG``

Exit codes: 0 success, 1 configuration or usage error, 2 runtime error,
3 reproduction mismatch. Standard output carries only result file paths
(or the component listing).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .errors import ConfigError, ReproductionMismatch, WorkbenchError
from .pipeline import load_config, rerun_archive, run_experiment, validate_config
from .pipeline.plan import LOG_LEVELS
from .pipeline.registry import describe

EXIT_OK, EXIT_CONFIG, EXIT_RUNTIME, EXIT_MISMATCH = 0, 1, 2, 3
COMMANDS = ("run", "validate", "rerun", "components")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="splworkbench", description="Variability extraction and analysis runner.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def flags(p, archive=True):
        p.add_argument("--output-dir", help="override output_dir")
        p.add_argument("--force-sequential", action="store_true", help="run pipeline stages one at a time")
        p.add_argument("--log-level", choices=LOG_LEVELS, help="override log.level")
        if archive:
            p.add_argument("--no-archive", action="store_true", help="skip archive creation")

    run = sub.add_parser("run", help="run an experiment")
    run.add_argument("config", type=Path)
    flags(run)
    validate = sub.add_parser("validate", help="validate a configuration")
    validate.add_argument("config", type=Path)
    flags(validate)
    rerun = sub.add_parser("rerun", help="re-execute an archived experiment")
    rerun.add_argument("archive", type=Path)
    rerun.add_argument("--workdir", type=Path, help="directory for the re-execution (default: a new temp dir)")
    flags(rerun, archive=False)
    sub.add_parser("components", help="list built-in components")
    return parser


def _overrides(args) -> dict[str, str]:
    out = {}
    if getattr(args, "output_dir", None):
        out["output_dir"] = str(Path(args.output_dir).resolve())
    if getattr(args, "force_sequential", False):
        out["analysis.force_sequential"] = "true"
    if getattr(args, "log_level", None):
        out["log.level"] = args.log_level
    if getattr(args, "no_archive", False):
        out["archive"] = "false"
    return out


def _configured(path: Path, args):
    cfg = load_config(path)
    extra = _overrides(args)
    return cfg.with_overrides(extra) if extra else cfg


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] not in COMMANDS and not argv[0].startswith("-"):
        argv.insert(0, "run")
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "components":
        for line in describe():
            print(line)
        return EXIT_OK

    try:
        if args.command == "validate":
            plan = validate_config(_configured(args.config, args))
            for message in plan.config.warnings:
                print(f"warning: {message}", file=sys.stderr)
            print(f"{args.config}: valid ({plan.root})", file=sys.stderr)
            return EXIT_OK
        if args.command == "run":
            result = run_experiment(_configured(args.config, args))
        else:
            result = rerun_archive(args.archive, args.workdir, _overrides(args))
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ReproductionMismatch as exc:
        print(f"reproduction mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # anything unexpected is still a runtime failure
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    for path in result.outputs:
        print(path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

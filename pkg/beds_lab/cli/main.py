"""beds-lab command line: run one scenario config and write its artifacts.

Exit status: 0 success, 2 config error, 3 numeric failure, 4 I/O error.
"""
import argparse
import json
import sys
from dataclasses import replace
from typing import Optional, Sequence

from ..pipeline.pipeline import run_scenario
from ..utils.errors import ArtifactIOError, ConfigError
from ..utils.logger import get_logger, set_quiet
from .config import load_config

logger = get_logger("cli")

EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="beds-lab", description="Run a BEDS scenario from a config file.")
    parser.add_argument("--config", required=True, help="scenario config file ([kind] header + key = value lines)")
    parser.add_argument("--out-dir", default=None, help="output directory (overrides out_dir in the config)")
    parser.add_argument("--seed", type=int, default=None, help="run seed (overrides seed in the config)")
    parser.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    return parser


def _print_error(kind: str, message: str, exit_code: int, context: dict) -> None:
    entry = {"type": kind, "message": message, "exit_code": exit_code, "context": context}
    print(json.dumps({"status": "error", "error": entry}, ensure_ascii=False), file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    set_quiet(args.quiet)

    try:
        cfg, text = load_config(args.config)
    except ConfigError as e:
        for issue in e.issues:
            logger.error(f"❌ {issue}")
        _print_error(type(e).__name__, str(e), e.exit_code, e.context())
        return e.exit_code
    except OSError as e:
        logger.error(f"❌ cannot read config {args.config}: {e}")
        _print_error("ArtifactIOError", str(e), EXIT_IO, {"path": str(args.config)})
        return EXIT_IO

    if args.out_dir is not None:
        cfg = replace(cfg, out_dir=args.out_dir)
    if args.seed is not None:
        cfg = replace(cfg, seed=args.seed)

    try:
        report = run_scenario(cfg, text)
    except ArtifactIOError as e:
        logger.error(f"❌ {e}")
        _print_error(type(e).__name__, str(e), e.exit_code, e.context())
        return e.exit_code

    if report.error is not None:
        _print_error(report.error.type, report.error.message, report.error.exit_code, report.error.context)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

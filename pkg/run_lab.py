#!/usr/bin/env python3
"""
Convenience script to run every bundled scenario under scenarios/
Usage: uv run python run_lab.py [--out-dir runs] [--seed N]
"""

import argparse
import pathlib
import sys

SCENARIO_DIR = pathlib.Path(__file__).resolve().parent / "scenarios"


def main():
    parser = argparse.ArgumentParser(description="Run all bundled BEDS scenarios")
    parser.add_argument("--out-dir", default=None, help="Root directory; each scenario writes to <out-dir>/<name>")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--quiet", action="store_true")
    args = parser.parse_args()

    from beds_lab.cli.main import main as run_one
    from beds_lab.utils.cache import clear_cache

    print("🌟 Running bundled scenarios...")
    clear_cache()

    results = {}
    for cfg in sorted(SCENARIO_DIR.glob("*.cfg")):
        argv = ["--config", str(cfg)]
        if args.out_dir is not None:
            argv += ["--out-dir", str(pathlib.Path(args.out_dir) / cfg.stem)]
        if args.seed is not None:
            argv += ["--seed", str(args.seed)]
        if args.quiet:
            argv.append("--quiet")
        results[cfg.stem] = run_one(argv)

    print("\n📊 SCENARIO SUMMARY")
    for name, code in results.items():
        status = "✅ OK" if code == 0 else f"❌ exit {code}"
        print(f"{status} {name}")
    return 0 if all(code == 0 for code in results.values()) else 1


if __name__ == "__main__":
    sys.exit(main())

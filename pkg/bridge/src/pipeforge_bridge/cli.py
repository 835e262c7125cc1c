"""The ``pipeforge-bridge`` command.

Exit codes: 0 at least one skeleton scored, 1 all skeletons failed,
2 schema or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .runner import run_all

EXIT_OK = 0
EXIT_ALL_FAILED = 1
EXIT_SCHEMA = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipeforge-bridge",
        description="Hyperparameter-search the skeletons in a pipeforge "
                    "skeleton file against a prepared dataset.")
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run")
    p_run.add_argument("--skeletons", required=True,
                       help="skeleton JSON (schema v1)")
    p_run.add_argument("--prepared", required=True,
                       help="prepared-dataset manifest JSON")
    p_run.add_argument("--out", required=True, help="results JSON path")
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--system-name", default=None)
    p_run.add_argument("-v", "--verbose", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr)
    try:
        doc = run_all(Path(args.skeletons), Path(args.prepared),
                      seed=args.seed, system_name=args.system_name)
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        logging.getLogger("pipeforge_bridge").error("%s", exc)
        return EXIT_SCHEMA
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    if doc["best"] is None:
        return EXIT_ALL_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run every named verification sweep and print one line per result."""

import argparse
import sys
import time

from pathlab.verify import SUITES, run_suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max", type=int, default=6, help="sweep size knob")
    parser.add_argument("--suite", default="all")
    args = parser.parse_args()
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        start = time.monotonic()
        result = SUITES[name](args.max)
        elapsed = time.monotonic() - start
        print(f"{result.line()}  ({elapsed:.1f}s)")
        failed = failed or not result.ok
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

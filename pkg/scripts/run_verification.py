#!/usr/bin/env python3
"""Run the complete claim suite over every universe size and report.

The report body is deterministic; timing goes to stderr so that two runs
stay byte-identical on stdout. Exits nonzero if any positive claim fails.

    python scripts/run_verification.py            # text report, n = 1..4
    python scripts/run_verification.py --max-n 3
    python scripts/run_verification.py --json > report.json
"""

import argparse
import json
import sys
import time

from covgran.cli import _render_results
from covgran.verify import MAX_COVERING_N, run_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=MAX_COVERING_N,
                        choices=range(1, MAX_COVERING_N + 1))
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args()

    all_ok = True
    documents = []
    for n in range(1, args.max_n + 1):
        start = time.monotonic()
        results = run_suite(n)
        elapsed = time.monotonic() - start
        all_ok = all_ok and all(r.ok for r in results)
        if args.json:
            documents.append({"n": n, "claims": [r.to_dict() for r in results]})
        else:
            print(_render_results(n, results))
            print()
        print(f"[n={n}] {elapsed:.1f}s", file=sys.stderr)

    if args.json:
        print(json.dumps(documents, indent=2))
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())

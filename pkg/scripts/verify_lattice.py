#!/usr/bin/env python3
"""Exhaustively verify the bounded-lattice laws of the implication relation.

Enumerates all 2^(2^n) truth-table classes for each requested universe size
and checks reflexivity, anti-symmetry, transitivity, meet, join, and the
bottom/top bounds, timing each run.

    python scripts/verify_lattice.py [n ...]     # default: 1 2 3
"""

import sys
import time

from logicrel.relation import verify_lattice


def main() -> None:
    sizes = [int(arg) for arg in sys.argv[1:]] or [1, 2, 3]
    for n in sizes:
        t0 = time.monotonic()
        report = verify_lattice(n)
        elapsed = time.monotonic() - t0
        status = "ok" if report.ok else f"{len(report.failures)} FAILURES"
        print(f"n={n}: {report.class_count} classes, {status}, {elapsed:.3f}s")
        for name, witnesses in report.failures[:20]:
            print(f"  {name}: {witnesses}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Regenerate every embedded golden value and report per-target results.

Runs the five reproduction targets (closed-form idempotents over
F_3[x]/(x^125 - 1), the 18-entry permutation table, the 6 inverse pairs over
F_{3^25}, the 8 involutions over F_{11^9}, and the binomial classification
over F_{8^11}) and exits nonzero if any check fails.
"""

import sys

from linperm.cli import main

TARGETS = ["example1", "table1", "table2", "table3", "f8n11"]


def run() -> int:
    worst = 0
    for target in TARGETS:
        print(f"== {target} ==")
        code = main(["reproduce", "--target", target])
        worst = max(worst, code)
    print("all targets ok" if worst == 0 else "FAILURES above")
    return worst


if __name__ == "__main__":
    sys.exit(run())

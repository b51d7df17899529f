#!/usr/bin/env python3
"""Re-derive the complete evidence behind the classification of groups in
which every Lagrange subset is a factor.

The embedded catalog carries 76 explicit factorizations and 18 explicit
non-factor witnesses; this script re-checks all of them from scratch,
along with the hereditary lifts and the case-list completeness counts.
"""

import time

from subsetfactor import verify_paper, witness_catalog


def main() -> None:
    cat = witness_catalog()
    pos = sum(1 for e in cat if e.claim == "positive_factorization")
    neg = len(cat) - pos
    print(f"catalog: {pos} positive factorizations, {neg} non-factor witnesses\n")

    t0 = time.perf_counter()
    report = verify_paper()
    for item in report.items:
        mark = "PASS" if item.passed else "FAIL"
        print(f"[{mark}] {item.id}: {item.description}")
        for failure in item.failures:
            print(f"       {failure}")
        if item.detail:
            print(f"       {item.detail}")
    print()
    verdict = "all checks passed" if report.passed else "CHECKS FAILED"
    print(f"{verdict} in {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()

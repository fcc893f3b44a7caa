#!/usr/bin/env python3
"""Re-verify every shipped realization and print a summary table.

Each entry is checked two ways where possible: the stored certificate is
validated in exact arithmetic, and the superbridge number is recomputed
from scratch by cell enumeration.
"""

import time

from superbridge import corpus_entries, verify_entry


def main() -> int:
    entries = corpus_entries()
    print(f"{'knot':>8} {'n':>3} {'claimed':>8} {'exact':>6} {'method':>24} {'ms':>6}")
    failures = 0
    for entry in entries:
        t0 = time.perf_counter()
        report = verify_entry(entry)
        ms = (time.perf_counter() - t0) * 1000
        status = "ok" if report.verified else "FAIL"
        print(
            f"{report.name:>8} {entry.knot.n:>3} {report.claimed_sb:>8} "
            f"{report.exact_value:>6} {report.method:>24} {ms:>6.0f} {status}"
        )
        failures += not report.verified
    print(f"\n{len(entries)} entries, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Regenerate the golden interval tables from the shipped metadata CSVs.

Maintenance utility: run after editing the metadata, then review the diff
of data/golden/ before committing.
"""

from pathlib import Path

from superbridge import load_metadata_csv, render_table
from superbridge.corpus import data_root


def main() -> int:
    root = Path(str(data_root()))
    rolfsen = load_metadata_csv(root / "metadata" / "rolfsen.csv")
    exact = load_metadata_csv(root / "metadata" / "exact_values.csv")
    (root / "golden" / "rolfsen_intervals.txt").write_text(
        render_table(rolfsen, fmt="text"), encoding="utf-8"
    )
    (root / "golden" / "known_exact.txt").write_text(
        render_table(exact, fmt="text", exact_only=True), encoding="utf-8"
    )
    print("rewrote", root / "golden")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

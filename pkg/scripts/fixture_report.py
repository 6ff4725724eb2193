#!/usr/bin/env python3
"""Print Delta, block determinants and the rank profile for matrix files.

Defaults to every matrix under fixtures/.
"""

import argparse
import sys
from pathlib import Path

from blseifert.polyparse import print_poly
from blseifert.seifert import SeifertValidationError, alexander, load
from blseifert.sequiv import block_determinants, rank_profile

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def describe(path: Path) -> str:
    try:
        a = load(path)
    except SeifertValidationError as exc:
        return f"{path.name}: not a Seifert matrix ({exc})"
    ranks = ", ".join(f"{p['row_rank']}/{p['column_rank']} of {p['size']}" for p in rank_profile(a))
    return "\n".join([
        f"{path.name}: sizes {list(a.sizes)}",
        f"  delta       {print_poly(alexander(a))}",
        f"  block dets  {block_determinants(a)}",
        f"  row/col rk  {ranks}",
    ])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("files", nargs="*", type=Path)
    args = ap.parse_args(argv)
    files = args.files or sorted(p for p in FIXTURES.iterdir() if p.suffix in (".json", ".txt"))
    for f in files:
        print(describe(f))
    return 0


if __name__ == "__main__":
    sys.exit(main())

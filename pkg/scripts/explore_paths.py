#!/usr/bin/env python3
"""Tabulate every admissible path for a polynomial: length, sizes, block
determinants and irreducibility of the assembled matrix.

    python3 scripts/explore_paths.py "3*t1*t2 + 3*t1^-1*t2^-1 - 5" --extra 2
"""

from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass

from blseifert.assemble import build
from blseifert.pathplan import enumerate_paths
from blseifert.polyparse import parse_poly
from blseifert.seifert import decompose
from blseifert.sequiv import block_determinants, is_irreducible


@dataclass
class ExploreConfig:
    poly: str
    extra: int = 0
    max_paths: int = 2000


def explore(cfg: ExploreConfig) -> list[dict]:
    poly = parse_poly(cfg.poly)
    pres = decompose(poly)
    rows = []
    for path in enumerate_paths(pres.m, [a for a, _ in pres.pairs], cfg.extra, cfg.max_paths):
        asm = build(poly, path_override=path)
        rows.append({
            "path": str(path) or "(empty)",
            "l": path.l,
            "sizes": asm.sizes,
            "block_dets": tuple(block_determinants(asm.A)),
            "irreducible": is_irreducible(asm.A),
        })
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("poly")
    ap.add_argument("--extra", type=int, default=0)
    ap.add_argument("--max-paths", type=int, default=2000)
    cfg = ExploreConfig(**vars(ap.parse_args()))
    rows = explore(cfg)
    for r in rows:
        flag = "irreducible" if r["irreducible"] else "reducible"
        print(f"{r['path']:<30} l={r['l']:<3} sizes={r['sizes']} dets={r['block_dets']} {flag}")
    classes = Counter((r["sizes"], r["block_dets"]) for r in rows)
    print(f"\n{len(rows)} paths, {len(classes)} distinct (sizes, block det) signatures")


if __name__ == "__main__":
    main()

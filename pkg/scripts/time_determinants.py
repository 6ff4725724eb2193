#!/usr/bin/env python3
"""Time both determinant strategies on twisted ladder matrices of growing size."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from blseifert.ladder import LadderParams, twisted_det, twisted_det_formula


@dataclass
class TimingConfig:
    max_l: int = 8
    seed: int = 0
    cofactor_max_l: int = 3  # cofactor expansion is exponential; keep it small


def run(cfg: TimingConfig) -> None:
    rng = random.Random(cfg.seed)
    print(f"{'l':>3} {'fraction_free':>14} {'cofactor':>10}  identity")
    for l in range(1, cfg.max_l + 1):
        params = LadderParams([rng.randint(-5, 5) for _ in range(l)], [rng.choice((1, -1)) for _ in range(l - 1)])
        t0 = time.perf_counter()
        ff = twisted_det(params, "fraction_free")
        t_ff = time.perf_counter() - t0
        cf = "-"
        if l <= cfg.cofactor_max_l:
            t0 = time.perf_counter()
            assert twisted_det(params, "cofactor") == ff
            cf = f"{time.perf_counter() - t0:.4f}s"
        ok = ff == twisted_det_formula(params)
        print(f"{l:>3} {t_ff:>13.4f}s {cf:>10}  {'holds' if ok else 'FAILS'}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-l", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cofactor-max-l", type=int, default=3)
    run(TimingConfig(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()

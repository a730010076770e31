"""Round-trip and Parseval sweep over every shipped wavelet and D = 1, 2, 3.

    python scripts/pr_sweep.py [--trials 5] [--seed 0]
"""
import argparse
import time

import numpy as np

from wavetx import dwt, idwt, lookup, names
from wavetx.verify import random_shape


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"{'wavelet':<9} {'L':>3} {'D':>2} {'max |x - idwt(dwt(x))|':>24} {'max parseval dev':>18}")
    start = time.perf_counter()
    for name in names():
        spec = lookup(name)
        for d in (1, 2, 3):
            pr, energy = 0.0, 0.0
            for _ in range(args.trials):
                x = rng.standard_normal(random_shape(rng, d, spec))
                q = dwt(x, spec)
                pr = max(pr, float(np.max(np.abs(idwt(q) - x))))
                energy = max(energy, abs(np.linalg.norm(q.tensor) / np.linalg.norm(x) - 1))
            parseval = f"{energy:.3e}" if spec.orthogonal else "n/a"
            print(f"{name:<9} {spec.filter_length:>3} {d:>2} {pr:>24.3e} {parseval:>18}")
    print(f"elapsed {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()

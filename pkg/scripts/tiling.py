"""Print the level-J DWT and WPT tilings of a sequence and an image.

Shows block sizes per level and, for the packet tree, where a pure tone's
energy lands in natural vs frequency order.

    python scripts/tiling.py [--wavelet db4] [--levels 4] [--n 64]
"""
import argparse

import numpy as np

from wavetx import multilevel_dwt, wpt
from wavetx.multilevel import frequency_order


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--wavelet", default="haar")
    ap.add_argument("--levels", type=int, default=4)
    ap.add_argument("--n", type=int, default=16)
    args = ap.parse_args()

    seq = np.random.default_rng(0).standard_normal((1, args.n, 1))
    p = multilevel_dwt(seq, args.wavelet, args.levels)
    print(f"1D DWT, N={args.n}, J={p.levels}: {len(p.blocks)} blocks")
    for b in p.blocks:
        print(f"  level {b.level}  {b.name:<12} length {b.data.shape[1]}")

    img = np.random.default_rng(1).standard_normal((1, args.n, args.n, 1))
    p2 = multilevel_dwt(img, args.wavelet, args.levels)
    print(f"2D DWT, {args.n}x{args.n}, J={p2.levels}: {len(p2.blocks)} tiles")

    t = np.arange(max(args.n, 256))
    tone = np.cos(2 * np.pi * 0.3 * t)[None, :, None]
    packets = wpt(tone, args.wavelet, 3)
    print("WPT J=3, tone at 0.3 cycles/sample (band edges every 1/16):")
    for rank, b in enumerate(frequency_order(packets)):
        energy = float(np.sum(b.data ** 2))
        print(f"  freq slot {rank}  {b.name:<8} energy {energy:10.3f}")


if __name__ == "__main__":
    main()

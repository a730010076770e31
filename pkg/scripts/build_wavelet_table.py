"""Regenerate ``src/wavetx/data/wavelets.json`` from PyWavelets.

PyWavelets and mpmath are only needed here, never at runtime. Orthogonal entries
store the published scaling filter (``rec_lo``); the highpass is derived on load.
PyWavelets tabulates symlets to ~1e-12 only, so those are polished by Newton
iteration on the Daubechies conditions (orthonormal shifts + vanishing moments).
Biorthogonal entries store all four filters in convolution orientation so that
the synthesis matrix built from (g_tilde, h_tilde) inverts the analysis matrix.

    python scripts/build_wavelet_table.py
"""
import json
from pathlib import Path

import mpmath as mp
import pywt

ORTHOGONAL = (
    ["haar"]
    + [f"db{i}" for i in range(1, 9)]
    + [f"sym{i}" for i in range(2, 9)]
    + [f"coif{i}" for i in range(1, 4)]
)
BIORTHOGONAL = ["bior1.1", "bior1.3", "bior2.2", "bior3.1", "bior3.3", "bior4.4"]
FAMILY = {"haar": "haar", "db": "daubechies", "sym": "symlet", "coif": "coiflet", "bior": "bior"}

OUT = Path(__file__).resolve().parents[1] / "src" / "wavetx" / "data" / "wavelets.json"


def family_of(name):
    for prefix, fam in FAMILY.items():
        if name.startswith(prefix):
            return fam
    raise KeyError(name)


def polish_daubechies(g0, dps=50):
    """Solve the 2N Daubechies equations in high precision, starting from g0."""
    mp.mp.dps = dps
    L = len(g0)
    N = L // 2

    def equations(*g):
        eqs = []
        for k in range(N):
            eqs.append(mp.fsum(g[n] * g[n + 2 * k] for n in range(L - 2 * k)) - (1 if k == 0 else 0))
        for p in range(N):
            eqs.append(mp.fsum((-1) ** m * mp.mpf(m) ** p * g[m] for m in range(L)))
        return eqs

    root = mp.findroot(equations, [mp.mpf(float(x)) for x in g0])
    g = [float(x) for x in root]
    assert max(abs(a - b) for a, b in zip(g, g0)) < 1e-10, "Newton left the neighbourhood"
    return g


def main():
    entries = {}
    for name in ORTHOGONAL:
        w = pywt.Wavelet(name)
        g = list(w.rec_lo)
        if name.startswith("sym"):
            g = polish_daubechies(g)
        entries[name] = {"family": family_of(name), "orthogonal": True, "g": g}
    for name in BIORTHOGONAL:
        w = pywt.Wavelet(name)
        entries[name] = {
            "family": "bior",
            "orthogonal": False,
            "g": list(w.dec_lo[::-1]),
            "h": list(w.dec_hi[::-1]),
            "g_tilde": list(w.rec_lo),
            "h_tilde": list(w.rec_hi),
        }
    table = {"version": 1, "source": f"PyWavelets {pywt.__version__}", "wavelets": entries}
    OUT.write_text(json.dumps(table, indent=1) + "\n")
    print(f"wrote {len(entries)} wavelets to {OUT}")


if __name__ == "__main__":
    main()

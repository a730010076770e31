"""Invariant suite run by ``wavetx verify``.

Every check reports its worst deviation against a fixed tolerance. Checks that
do not apply to a biorthogonal wavelet are reported as skipped.
"""
from __future__ import annotations

import numpy as np

from .filterbank import bank_cache, build_analysis, build_synthesis, oracle_dwt1d
from .multilevel import iwpt, multilevel_dwt, multilevel_idwt, wpt
from .transform import dwt, idwt
from .wavelet_db import Check, lookup, names, validate

ORTHOGONAL_TOL = 1e-10
BIORTHOGONAL_TOL = 1e-8
MATRIX_TOL = 1e-12
ORACLE_TOL = 1e-12


def round_trip_tolerance(spec) -> float:
    return ORTHOGONAL_TOL if spec.orthogonal else BIORTHOGONAL_TOL


def min_length(spec) -> int:
    L = spec.filter_length
    return L + L % 2


def random_shape(rng, d: int, spec, lo: int = 8, hi: int = 32) -> tuple[int, ...]:
    """Batch 1-3, channels 1-4, even spatial lengths in [max(lo, L), max(hi, L)]."""
    start = max(lo, min_length(spec))
    hi = max(hi, start)
    spatial = tuple(int(2 * rng.integers(start // 2, hi // 2 + 1)) for _ in range(d))
    return (int(rng.integers(1, 4)),) + spatial + (int(rng.integers(1, 5)),)


def _max(values) -> float:
    return float(max(values, default=0.0))


def check_wavelet(name, seed: int = 0, shapes_per_dim: int = 2) -> list[Check]:
    spec = lookup(name)
    rng = np.random.default_rng(seed)
    checks = [Check(f"table: {c.name}", c.passed, c.deviation, c.tolerance) for c in validate(spec).checks]
    L = min_length(spec)
    lengths = range(max(L, 2), 65, 2)

    dev = _max(np.max(np.abs(build_synthesis(spec, n) @ build_analysis(spec, n) - np.eye(n))) for n in lengths)
    checks.append(Check("S.A = I, n in L..64", dev < 1e-10, dev, 1e-10))

    if spec.orthogonal:
        dev = _max(np.max(np.abs(build_analysis(spec, n) @ build_analysis(spec, n).T - np.eye(n))) for n in lengths)
        checks.append(Check("A.A^T = I, n in L..64", dev < MATRIX_TOL, dev, MATRIX_TOL))
        dev = _max(np.max(np.abs(build_synthesis(spec, n) - build_analysis(spec, n).T)) for n in lengths)
        checks.append(Check("S == A^T exactly", dev == 0.0, dev, 0.0))
    else:
        checks.append(Check("A.A^T = I, n in L..64", None))
        checks.append(Check("S == A^T exactly", None))

    devs = []
    for n in (8, 16, 24, 32):
        if n < L:
            continue
        x = rng.standard_normal((50, n))
        devs.append(np.max(np.abs(oracle_dwt1d(x, spec) - x @ bank_cache(spec, n).analysis.T)))
    dev = _max(devs)
    checks.append(Check("oracle == matrix (1D)", dev < ORACLE_TOL, dev, ORACLE_TOL))

    tol = round_trip_tolerance(spec)
    for d in (1, 2, 3):
        pr, energy, ratio_ok = [], [], True
        for _ in range(shapes_per_dim):
            x = rng.standard_normal(random_shape(rng, d, spec, hi=16 if d == 3 else 32))
            q = dwt(x, spec)
            ratio_ok &= q.tensor.shape[-1] == 2 ** d * x.shape[-1]
            pr.append(np.max(np.abs(idwt(q) - x)))
            energy.append(abs(np.linalg.norm(q.tensor) - np.linalg.norm(x)) / np.linalg.norm(x))
        dev = _max(pr)
        checks.append(Check(f"round trip {d}D", dev < tol, dev, tol))
        if spec.orthogonal:
            dev = _max(energy)
            checks.append(Check(f"Parseval {d}D", dev < ORTHOGONAL_TOL, dev, ORTHOGONAL_TOL))
        else:
            checks.append(Check(f"Parseval {d}D", None))
        checks.append(Check(f"subbands per channel {d}D == {2 ** d}", bool(ratio_ok)))

    n = 4 * L
    x = rng.standard_normal((2, n, 2))
    p = multilevel_dwt(x, spec, levels=3)
    dev = float(np.max(np.abs(multilevel_idwt(p) - x)))
    mtol = tol * np.sqrt(3)
    checks.append(Check("multilevel DWT round trip J=3", dev < mtol, dev, mtol))
    checks.append(Check("multilevel DWT critical sampling", p.scalar_count() == x.size and len(p.blocks) == 4))
    p = wpt(x, spec, levels=3)
    dev = float(np.max(np.abs(iwpt(p) - x)))
    checks.append(Check("WPT round trip J=3", dev < mtol, dev, mtol))
    checks.append(Check("WPT leaf count 2^(D*J)", len(p.blocks) == 8 and p.scalar_count() == x.size))
    return checks


def format_table(name: str, checks: list[Check]) -> list[str]:
    lines = []
    for c in checks:
        dev = "-" if c.passed is None else f"{c.deviation:.17g}"
        lines.append(f"{name:<9} {c.name:<40} {dev:>24} {c.tolerance:>8.0e} {c.status}")
    return lines


def run(wavelets=None, out=print) -> bool:
    """Run the suite for ``wavelets`` (all shipped ones by default); True iff all pass."""
    wavelets = names() if not wavelets else [lookup(w).name for w in wavelets]
    ok = True
    out(f"{'wavelet':<9} {'check':<40} {'max deviation':>24} {'tol':>8} status")
    for name in wavelets:
        checks = check_wavelet(name)
        for line in format_table(name, checks):
            out(line)
        ok &= all(c.passed is not False for c in checks)
    out("ALL PASS" if ok else "FAILURES PRESENT")
    return ok

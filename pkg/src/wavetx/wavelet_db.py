"""Filter coefficient database.

Coefficients live in ``data/wavelets.json`` (regenerated by
``scripts/build_wavelet_table.py``). Orthogonal entries carry only the
scaling filter ``g``; the highpass is its quadrature mirror and the synthesis
bank aliases the analysis bank. ``rbioX.Y`` is ``biorX.Y`` with the two banks
swapped.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import OddFilterLength, UnknownWavelet

FAMILIES = ("haar", "daubechies", "symlet", "coiflet", "bior", "rbio")


@dataclass(frozen=True, eq=False)
class WaveletSpec:
    name: str
    family: str
    orthogonal: bool
    g: np.ndarray
    h: np.ndarray
    g_tilde: np.ndarray
    h_tilde: np.ndarray

    @property
    def analysis_length(self) -> int:
        return len(self.g)

    @property
    def synthesis_length(self) -> int:
        return len(self.g_tilde)

    @property
    def filter_length(self) -> int:
        """Longest of the four filters; the minimum admissible signal length."""
        return max(len(self.g), len(self.h), len(self.g_tilde), len(self.h_tilde))

    def __repr__(self):
        return f"WaveletSpec({self.name!r}, family={self.family!r}, orthogonal={self.orthogonal}, L={self.filter_length})"


def _frozen(taps) -> np.ndarray:
    a = np.array(taps, dtype=np.float64)
    a.setflags(write=False)
    return a


def derive_qmf_highpass(g) -> np.ndarray:
    """Quadrature-mirror highpass ``h[n] = (-1)**n * g[L-1-n]``."""
    g = np.asarray(g, dtype=np.float64)
    L = len(g)
    if L % 2:
        raise OddFilterLength(f"filter length must be even, got {L}")
    signs = np.where(np.arange(L) % 2 == 0, 1.0, -1.0)
    return signs * g[::-1]


@lru_cache(maxsize=None)
def _table() -> dict:
    text = resources.files("wavetx").joinpath("data/wavelets.json").read_text()
    return json.loads(text)


def _build(name: str, entry: dict) -> WaveletSpec:
    if entry["orthogonal"]:
        g = _frozen(entry["g"])
        h = _frozen(derive_qmf_highpass(g))
        return WaveletSpec(name, entry["family"], True, g, h, g, h)
    return WaveletSpec(
        name,
        entry["family"],
        False,
        _frozen(entry["g"]),
        _frozen(entry["h"]),
        _frozen(entry["g_tilde"]),
        _frozen(entry["h_tilde"]),
    )


@lru_cache(maxsize=None)
def _registry() -> dict[str, WaveletSpec]:
    specs = {}
    for name, entry in _table()["wavelets"].items():
        specs[name] = _build(name, entry)
    for name, spec in list(specs.items()):
        if spec.family == "bior":
            dual = "rbio" + name[len("bior"):]
            specs[dual] = WaveletSpec(
                dual, "rbio", False, spec.g_tilde, spec.h_tilde, spec.g, spec.h
            )
    return specs


def table_version() -> int:
    return _table()["version"]


def names() -> list[str]:
    return list(_registry())


def lookup(name) -> WaveletSpec:
    """Return the spec for ``name`` (case-insensitive). Specs pass through."""
    if isinstance(name, WaveletSpec):
        return name
    registry = _registry()
    key = str(name).strip().lower()
    try:
        return registry[key]
    except KeyError:
        raise UnknownWavelet(name, registry) from None


# ---------------------------------------------------------------------------
# validation

@dataclass
class Check:
    name: str
    passed: bool | None  # None means skipped
    deviation: float = 0.0
    tolerance: float = 0.0

    @property
    def status(self) -> str:
        return {True: "pass", False: "FAIL", None: "skipped"}[self.passed]


@dataclass
class ValidationReport:
    wavelet: str
    checks: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.passed is False]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def max_deviation(self) -> float:
        return max((c.deviation for c in self.checks if c.passed is not None), default=0.0)

    def lines(self) -> list[str]:
        return [
            f"{c.name:<28} {c.status:<8} dev={c.deviation:.3e} tol={c.tolerance:.0e}"
            for c in self.checks
        ]


def _shift_products(a, b):
    """``sum_n a[n] b[n-2k]`` and the matching k, for every overlapping even shift."""
    full = np.correlate(a, b, mode="full")
    centre = len(b) - 1
    # full[centre + lag] is the product at that lag; keep even lags only
    idx = np.arange(centre % 2, len(full), 2)
    return full[idx], (idx - centre) // 2


def validation_length(spec: WaveletSpec) -> int:
    n = spec.analysis_length + spec.synthesis_length
    return max(16, n + n % 2)


def validate(spec: WaveletSpec) -> ValidationReport:
    """Check the filter invariants plus perfect reconstruction of the matrix pair."""
    from .filterbank import build_analysis, build_synthesis

    report = ValidationReport(spec.name)
    add = report.checks.append

    lengths = [len(spec.g), len(spec.h), len(spec.g_tilde), len(spec.h_tilde)]
    add(Check("even filter lengths >= 2", all(L >= 2 and L % 2 == 0 for L in lengths)))

    hp = max(abs(float(np.sum(spec.h))), abs(float(np.sum(spec.h_tilde))))
    add(Check("highpass sums to zero", hp < 1e-10, hp, 1e-10))

    if spec.orthogonal:
        alias = max(
            float(np.max(np.abs(spec.g - spec.g_tilde))) if len(spec.g) == len(spec.g_tilde) else math.inf,
            float(np.max(np.abs(spec.h - spec.h_tilde))) if len(spec.h) == len(spec.h_tilde) else math.inf,
        )
        add(Check("synthesis equals analysis", alias == 0.0, alias, 0.0))
        dc = abs(float(np.sum(spec.g)) - math.sqrt(2.0))
        add(Check("lowpass sums to sqrt(2)", dc < 1e-12, dc, 1e-12))
        products, shifts = _shift_products(spec.g, spec.g)
        dev = float(np.max(np.abs(products - (shifts == 0))))
        add(Check("orthonormal even shifts", dev < 1e-12, dev, 1e-12))
    else:
        for name in ("synthesis equals analysis", "lowpass sums to sqrt(2)", "orthonormal even shifts"):
            add(Check(name, None))

    if report.checks[0].passed:
        n = validation_length(spec)
        A = build_analysis(spec, n)
        S = build_synthesis(spec, n)
        dev = float(np.max(np.abs(S @ A - np.eye(n))))
        tol = 1e-10
        add(Check(f"perfect reconstruction n={n}", dev < tol, dev, tol))
    else:
        add(Check("perfect reconstruction", False, math.inf, 1e-10))
    return report

"""Decimated circulant analysis/synthesis matrices.

Row ``i`` of the lowpass half of the analysis matrix holds the circularly
shifted taps ``g[(2i+1-j) mod n]``: the circular convolution with ``g``
sampled at the odd outputs 1, 3, ..., n-1. The highpass half does the same
with ``h``. The synthesis matrix is the same construction applied to the
synthesis filters, transposed.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .errors import LengthTooSmall, OddLength
from .tensor_core import resolve_dtype
from .wavelet_db import WaveletSpec, lookup


def _check_length(spec: WaveletSpec, n: int):
    if n < 2 or n % 2:
        raise OddLength(n)
    L = max(spec.analysis_length, spec.synthesis_length)
    if n < L:
        raise LengthTooSmall(n, L)


def _decimated_rows(taps: np.ndarray, n: int) -> np.ndarray:
    padded = np.zeros(n)
    padded[: len(taps)] = taps
    rows = np.arange(n // 2)[:, None]
    cols = np.arange(n)[None, :]
    return padded[(2 * rows + 1 - cols) % n]


def _stack(lo, hi, n) -> np.ndarray:
    return np.vstack([_decimated_rows(lo, n), _decimated_rows(hi, n)])


def build_analysis(wavelet, n: int, dtype="f64") -> np.ndarray:
    spec = lookup(wavelet)
    _check_length(spec, n)
    return _stack(spec.g, spec.h, n).astype(resolve_dtype(dtype))


def build_synthesis(wavelet, n: int, dtype="f64") -> np.ndarray:
    spec = lookup(wavelet)
    _check_length(spec, n)
    return np.ascontiguousarray(_stack(spec.g_tilde, spec.h_tilde, n).T).astype(resolve_dtype(dtype))


def oracle_dwt1d(x, wavelet) -> np.ndarray:
    """Reference transform by direct circular convolution, no matrices.

    Loops over output positions and taps one scalar product at a time. Leading
    axes of ``x`` are treated as independent signals along the last axis.
    Returns ``[lowpass | highpass]`` concatenated along the last axis.
    """
    spec = lookup(wavelet)
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[-1]
    _check_length(spec, n)
    out = np.zeros(x.shape[:-1] + (n,))
    half = n // 2
    for band, taps in enumerate((spec.g, spec.h)):
        for i in range(half):
            m = 2 * i + 1
            acc = np.zeros(x.shape[:-1])
            for k in range(len(taps)):
                acc = acc + taps[k] * x[..., (m - k) % n]
            out[..., band * half + i] = acc
    return out


@dataclass(frozen=True, eq=False)
class FilterBankPair:
    wavelet: WaveletSpec
    n: int
    analysis: np.ndarray
    synthesis: np.ndarray

    @property
    def dtype(self) -> np.dtype:
        return self.analysis.dtype


class BankCache:
    """Memoized matrix pairs keyed by (wavelet name, n, dtype).

    Each key is built at most once even under concurrent first access.
    """

    def __init__(self):
        self._pairs: dict[tuple, FilterBankPair] = {}
        self._key_locks: dict[tuple, threading.Lock] = {}
        self._lock = threading.Lock()
        self.builds = 0

    def get(self, wavelet, n: int, dtype="f64") -> FilterBankPair:
        spec = lookup(wavelet)
        dt = resolve_dtype(dtype)
        key = (spec.name, int(n), dt.str)
        pair = self._pairs.get(key)
        if pair is not None:
            return pair
        with self._lock:
            key_lock = self._key_locks.setdefault(key, threading.Lock())
        with key_lock:
            pair = self._pairs.get(key)
            if pair is None:
                A = build_analysis(spec, n, dt)
                S = build_synthesis(spec, n, dt)
                A.setflags(write=False)
                S.setflags(write=False)
                pair = FilterBankPair(spec, int(n), A, S)
                self._pairs[key] = pair
                self.builds += 1
        return pair

    def clear(self):
        with self._lock:
            self._pairs.clear()
            self._key_locks.clear()
            self.builds = 0

    def __len__(self):
        return len(self._pairs)


_default_cache = BankCache()


def bank_cache(wavelet, n: int, dtype="f64") -> FilterBankPair:
    return _default_cache.get(wavelet, n, dtype)

"""Forward and inverse single-level DWT for 1D, 2D and 3D tensors.

Inputs are ``(batch, spatial..., channels)``. The forward transform applies
the analysis matrix along every spatial axis, leaving the lowpass half of each
axis in its leading half, then cuts the result into ``2**D`` blocks that are
concatenated along channels in the order of :data:`SUBBAND_LABELS`.

Label orientation: in 2D the first letter describes the width axis and the
second the height axis (``LH`` is high along height, low along width). In 3D
letter ``k`` describes spatial axis ``k`` (height, width, depth).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadChannelMultiple, LengthTooSmall, OddLength, WrongRank
from .filterbank import bank_cache
from .tensor_core import (
    as_tensor,
    contract_leading_spatial,
    split_concat_channelwise,
    unsplit_concat_channelwise,
)
from .wavelet_db import lookup

SUBBAND_LABELS = {
    1: ("L", "H"),
    2: ("LL", "LH", "HL", "HH"),
    3: ("LLL", "LLH", "LHL", "LHH", "HLL", "HLH", "HHL", "HHH"),
}

# per block, which half (0 low, 1 high) of each spatial axis it occupies
SELECTIONS = {
    1: [(0,), (1,)],
    2: [(0, 0), (1, 0), (0, 1), (1, 1)],
    3: [tuple(0 if c == "L" else 1 for c in label) for label in SUBBAND_LABELS[3]],
}

# forward contraction order: rows (width), columns (height), then depth
_AXIS_ORDER = {1: (1,), 2: (2, 1), 3: (2, 1, 3)}


@dataclass(frozen=True, eq=False)
class GroupedSubbands:
    tensor: np.ndarray
    d: int
    base_channels: int
    wavelet: str

    @property
    def order(self) -> tuple[str, ...]:
        return SUBBAND_LABELS[self.d]

    @property
    def shape(self):
        return self.tensor.shape

    def subband(self, label: str) -> np.ndarray:
        i = self.order.index(label)
        c = self.base_channels
        return self.tensor[..., i * c:(i + 1) * c]

    def blocks(self) -> dict[str, np.ndarray]:
        return {label: self.subband(label) for label in self.order}

    @classmethod
    def from_blocks(cls, blocks, d: int, wavelet) -> "GroupedSubbands":
        labels = SUBBAND_LABELS[d]
        parts = [np.asarray(blocks[label]) for label in labels]
        return cls(np.concatenate(parts, axis=-1), d, parts[0].shape[-1], lookup(wavelet).name)


def check_spatial(shape, spec):
    L = spec.filter_length
    for axis, n in enumerate(shape[1:-1], start=1):
        if n % 2:
            raise OddLength(n, axis)
        if n < L:
            raise LengthTooSmall(n, L)


def dwt(x, wavelet="haar", *, d: int | None = None, dtype=None) -> GroupedSubbands:
    """Single-level DWT of a batched channel-last tensor; ``d`` inferred from rank."""
    spec = lookup(wavelet)
    x = as_tensor(x, dtype, d=d)
    d = x.ndim - 2
    check_spatial(x.shape, spec)
    q = x
    for axis in _AXIS_ORDER[d]:
        A = bank_cache(spec, x.shape[axis], x.dtype).analysis
        q = contract_leading_spatial(A, q, axis)
    grouped = split_concat_channelwise(q, SELECTIONS[d])
    return GroupedSubbands(grouped, d, x.shape[-1], spec.name)


def idwt(q, wavelet=None, *, d: int | None = None, dtype=None) -> np.ndarray:
    """Inverse of :func:`dwt`. ``q`` is a GroupedSubbands or a raw grouped tensor."""
    if isinstance(q, GroupedSubbands):
        if d is not None and q.d != d:
            raise WrongRank(f"expected {d}D subbands, got {q.d}D")
        wavelet = q.wavelet if wavelet is None else wavelet
        q = q.tensor
    if wavelet is None:
        raise ValueError("wavelet required for a raw grouped tensor")
    spec = lookup(wavelet)
    t = as_tensor(q, dtype, d=d)
    d = t.ndim - 2
    k = 2 ** d
    if t.shape[-1] % k:
        raise BadChannelMultiple(f"{d}D inverse needs channels divisible by {k}, got {t.shape[-1]}")
    full = (t.shape[0],) + tuple(2 * n for n in t.shape[1:-1]) + (t.shape[-1] // k,)
    check_spatial(full, spec)
    x = unsplit_concat_channelwise(t, SELECTIONS[d])
    for axis in reversed(_AXIS_ORDER[d]):
        S = bank_cache(spec, x.shape[axis], x.dtype).synthesis
        x = contract_leading_spatial(S, x, axis)
    return x


def dwt1d(x, wavelet="haar", dtype=None) -> GroupedSubbands:
    return dwt(x, wavelet, d=1, dtype=dtype)


def idwt1d(q, wavelet=None, dtype=None) -> np.ndarray:
    return idwt(q, wavelet, d=1, dtype=dtype)


def dwt2d(x, wavelet="haar", dtype=None) -> GroupedSubbands:
    return dwt(x, wavelet, d=2, dtype=dtype)


def idwt2d(q, wavelet=None, dtype=None) -> np.ndarray:
    return idwt(q, wavelet, d=2, dtype=dtype)


def dwt3d(x, wavelet="haar", dtype=None) -> GroupedSubbands:
    return dwt(x, wavelet, d=3, dtype=dtype)


def idwt3d(q, wavelet=None, dtype=None) -> np.ndarray:
    return idwt(q, wavelet, d=3, dtype=dtype)

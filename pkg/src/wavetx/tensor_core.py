"""Dense channel-last tensors and the few data movements the transforms need.

Tensors are plain C-contiguous numpy arrays shaped
``(batch, spatial..., channels)`` with one to three spatial axes. NPY v1.0 is
the on-disk format.
"""
from __future__ import annotations

import io
import os
from itertools import product

import numpy as np
from numpy.lib import format as npy_format

from .errors import DimensionMismatch, InvalidPermutation, OddLength, WrongRank

DTYPES = {"f64": np.float64, "f32": np.float32}
_DESCR = {np.dtype(np.float64): "<f8", np.dtype(np.float32): "<f4"}


def resolve_dtype(dtype) -> np.dtype:
    if isinstance(dtype, str) and dtype in DTYPES:
        return np.dtype(DTYPES[dtype])
    dt = np.dtype(dtype)
    if dt not in _DESCR:
        raise TypeError(f"unsupported dtype {dt}; use f64 or f32")
    return dt


def as_tensor(x, dtype=None, *, d: int | None = None) -> np.ndarray:
    """Coerce ``x`` to a contiguous real tensor, checking the rank.

    ``d`` pins the number of spatial axes; otherwise any of 1..3 is accepted.
    """
    arr = np.asarray(x)
    if dtype is None:
        dtype = arr.dtype if arr.dtype in _DESCR else np.float64
    arr = np.ascontiguousarray(arr, dtype=resolve_dtype(dtype))
    spatial = arr.ndim - 2
    if d is not None and spatial != d:
        raise WrongRank(f"expected rank {d + 2} (batch, {d} spatial, channels), got shape {arr.shape}")
    if spatial not in (1, 2, 3):
        raise WrongRank(f"tensor rank must be 3, 4 or 5, got shape {arr.shape}")
    return arr


def spatial_dims(t: np.ndarray) -> int:
    return t.ndim - 2


def parse_perm(perm) -> tuple[int, ...]:
    """Accept ``(0, 2, 1)`` or the compact string form ``"021"``."""
    if isinstance(perm, str):
        perm = [int(c) for c in perm]
    return tuple(int(p) for p in perm)


def transpose(t: np.ndarray, perm) -> np.ndarray:
    """Materialized axis permutation: ``out.shape[k] == t.shape[perm[k]]``."""
    perm = parse_perm(perm)
    if sorted(perm) != list(range(t.ndim)):
        raise InvalidPermutation(f"{perm} is not a permutation of 0..{t.ndim - 1}")
    return np.ascontiguousarray(np.transpose(t, perm))


def contract_leading_spatial(M: np.ndarray, t: np.ndarray, axis: int = 1) -> np.ndarray:
    """Apply ``M`` to every vector of ``t`` along ``axis``.

    ``out[..., i, ...] = sum_j M[i, j] * t[..., j, ...]``, i.e. the
    ``ij,bjk->bik`` pattern with the contracted axis at ``axis``.
    """
    n = t.shape[axis]
    if M.shape != (n, n):
        raise DimensionMismatch(M.shape[1], n)
    moved = np.moveaxis(t, axis, -1)
    out = np.matmul(moved, M.T)
    return np.ascontiguousarray(np.moveaxis(out, -1, axis))


def half_selections(d: int) -> list[tuple[int, ...]]:
    """All 2**d low/high half choices in row-major order (0 = low half)."""
    return list(product((0, 1), repeat=d))


def _check_even(t: np.ndarray):
    for axis in range(1, t.ndim - 1):
        if t.shape[axis] % 2:
            raise OddLength(t.shape[axis], axis)


def _block(t: np.ndarray, halves) -> tuple[slice, ...]:
    index = [slice(None)]
    for axis, half in enumerate(halves, start=1):
        mid = t.shape[axis] // 2
        index.append(slice(None, mid) if half == 0 else slice(mid, None))
    index.append(slice(None))
    return tuple(index)


def split_concat_channelwise(t: np.ndarray, selections) -> np.ndarray:
    """Cut ``t`` into half-blocks and concatenate them along channels.

    ``selections`` lists, per output block, which half (0 low / 1 high) to take
    on each spatial axis. Blocks appear along the channel axis in that order.
    """
    _check_even(t)
    return np.concatenate([t[_block(t, s)] for s in selections], axis=-1)


def unsplit_concat_channelwise(q: np.ndarray, selections) -> np.ndarray:
    """Exact inverse of :func:`split_concat_channelwise`."""
    k = len(selections)
    if q.shape[-1] % k:
        raise DimensionMismatch(f"channels divisible by {k}", q.shape[-1])
    c = q.shape[-1] // k
    full = (q.shape[0],) + tuple(2 * n for n in q.shape[1:-1]) + (c,)
    out = np.empty(full, dtype=q.dtype)
    for i, s in enumerate(selections):
        out[_block(out, s)] = q[..., i * c:(i + 1) * c]
    return out


# ---------------------------------------------------------------------------
# NPY v1.0

class NpyFormatError(OSError):
    pass


def write_npy(target, arr: np.ndarray):
    """Write ``arr`` as NPY 1.0, little-endian, C order."""
    arr = np.asarray(arr)
    dt = resolve_dtype(arr.dtype)
    data = np.ascontiguousarray(arr, dtype=np.dtype(_DESCR[dt]))
    header = {"descr": _DESCR[dt], "fortran_order": False, "shape": data.shape}
    if isinstance(target, (str, os.PathLike)):
        with open(target, "wb") as fh:
            _write(fh, header, data)
    else:
        _write(target, header, data)


def _write(fh, header, data):
    npy_format.write_array_header_1_0(fh, header)
    fh.write(data.tobytes(order="C"))


def read_npy(source) -> np.ndarray:
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return _read(fh, str(source))
    if isinstance(source, (bytes, bytearray)):
        return _read(io.BytesIO(source), "<bytes>")
    return _read(source, getattr(source, "name", "<stream>"))


def _read(fh, label) -> np.ndarray:
    try:
        version = npy_format.read_magic(fh)
    except ValueError as exc:
        raise NpyFormatError(f"{label}: not an NPY file ({exc})") from None
    if version != (1, 0):
        raise NpyFormatError(f"{label}: NPY version {version} unsupported, need 1.0")
    try:
        shape, fortran_order, dtype = npy_format.read_array_header_1_0(fh)
    except ValueError as exc:
        raise NpyFormatError(f"{label}: bad NPY header ({exc})") from None
    if fortran_order:
        raise NpyFormatError(f"{label}: fortran_order arrays are not supported")
    if dtype.str not in ("<f8", "<f4"):
        raise NpyFormatError(f"{label}: dtype {dtype.str} unsupported, need <f8 or <f4")
    count = int(np.prod(shape, dtype=np.int64))
    raw = fh.read(count * dtype.itemsize)
    if len(raw) != count * dtype.itemsize:
        raise NpyFormatError(f"{label}: truncated data")
    return np.frombuffer(raw, dtype=dtype).reshape(shape).astype(dtype.newbyteorder("="))

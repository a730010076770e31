"""Multilevel DWT pyramids and wavelet packet trees.

Blocks are stored un-grouped, one tensor per subband, each tagged with the
subband path that produced it (a tuple of labels, one per level). In DWT mode
the list is ``[details of level 1, ..., details of level J, approximation J]``;
in WPT mode it is the ``2**(D*J)`` leaves in natural path order (lexicographic,
L before H).
"""
from __future__ import annotations

import io
import json
import zipfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InconsistentPyramid, TooManyLevels
from .tensor_core import as_tensor, read_npy, write_npy
from .transform import SUBBAND_LABELS, GroupedSubbands, check_spatial, dwt, idwt
from .wavelet_db import lookup

MODES = ("dwt", "wpt")
MANIFEST = "manifest.json"


@dataclass(frozen=True, eq=False)
class Block:
    level: int
    path: tuple[str, ...]
    data: np.ndarray

    @property
    def label(self) -> str:
        return self.path[-1]

    @property
    def name(self) -> str:
        return "-".join(self.path)


@dataclass(eq=False)
class Pyramid:
    mode: str
    levels: int
    wavelet: str
    d: int
    original_shape: tuple[int, ...]
    blocks: list[Block] = field(default_factory=list)

    @property
    def approx(self) -> np.ndarray:
        if self.mode != "dwt":
            raise InconsistentPyramid("only DWT pyramids have a single approximation block")
        return self.blocks[-1].data

    def details(self, level: int) -> dict[str, np.ndarray]:
        """Detail blocks of one level, keyed by their last label."""
        return {b.label: b.data for b in self.blocks[:-1] if b.level == level}

    @property
    def leaves(self) -> dict[str, np.ndarray]:
        return {b.name: b.data for b in self.blocks}

    def scalar_count(self) -> int:
        return sum(b.data.size for b in self.blocks)

    def file_name(self, block: Block) -> str:
        return f"{self.mode}_{block.level}_{block.name}.npy"


def max_levels(shape, wavelet) -> int:
    """Deepest J such that every spatial length splits J times and the last
    level still sees at least one full filter length."""
    L = lookup(wavelet).filter_length
    spatial = tuple(shape[1:-1])
    J = 0
    while all(n % 2 ** (J + 1) == 0 and n // 2 ** J >= L for n in spatial):
        J += 1
    return J


def _resolve_levels(shape, spec, levels: int) -> int:
    # plain shape errors (odd, too short) take precedence over level errors
    check_spatial(shape, spec)
    deepest = max_levels(shape, spec)
    if levels == 0:
        levels = deepest
    if levels < 1 or levels > deepest:
        raise TooManyLevels(levels, deepest)
    return levels


def multilevel_dwt(x, wavelet="haar", levels: int = 1, dtype=None) -> Pyramid:
    """Recursively split the approximation band; ``levels=0`` goes as deep as possible."""
    spec = lookup(wavelet)
    x = as_tensor(x, dtype)
    d = x.ndim - 2
    levels = _resolve_levels(x.shape, spec, levels)
    approx_label = SUBBAND_LABELS[d][0]
    pyr = Pyramid("dwt", levels, spec.name, d, tuple(x.shape))
    current, prefix = x, ()
    for level in range(1, levels + 1):
        bands = dwt(current, spec).blocks()
        for label, data in bands.items():
            if label != approx_label:
                pyr.blocks.append(Block(level, prefix + (label,), np.ascontiguousarray(data)))
        prefix += (approx_label,)
        current = np.ascontiguousarray(bands[approx_label])
    pyr.blocks.append(Block(levels, prefix, current))
    return pyr


def _expected_shape(p: Pyramid, level: int) -> tuple[int, ...]:
    s = p.original_shape
    return (s[0],) + tuple(n // 2 ** level for n in s[1:-1]) + (s[-1],)


def _check_blocks(p: Pyramid, expected_count: int):
    if p.mode not in MODES:
        raise InconsistentPyramid(f"unknown mode {p.mode!r}")
    if len(p.blocks) != expected_count:
        raise InconsistentPyramid(f"{p.mode} pyramid of {p.levels} levels needs {expected_count} blocks, has {len(p.blocks)}")
    for b in p.blocks:
        if b.data.shape != _expected_shape(p, b.level):
            raise InconsistentPyramid(
                f"block {b.name} at level {b.level} has shape {b.data.shape}, expected {_expected_shape(p, b.level)}"
            )


def multilevel_idwt(p: Pyramid) -> np.ndarray:
    if p.mode != "dwt":
        raise InconsistentPyramid(f"expected a dwt pyramid, got {p.mode}")
    labels = SUBBAND_LABELS[p.d]
    _check_blocks(p, p.levels * (len(labels) - 1) + 1)
    current = p.blocks[-1].data
    for level in range(p.levels, 0, -1):
        bands = p.details(level)
        if set(bands) != set(labels[1:]):
            raise InconsistentPyramid(f"level {level} details are {sorted(bands)}, expected {list(labels[1:])}")
        bands[labels[0]] = current
        current = idwt(GroupedSubbands.from_blocks(bands, p.d, p.wavelet))
    return current


def wpt(x, wavelet="haar", levels: int = 1, dtype=None) -> Pyramid:
    """Wavelet packet tree: every band is split again at each level."""
    spec = lookup(wavelet)
    x = as_tensor(x, dtype)
    d = x.ndim - 2
    levels = _resolve_levels(x.shape, spec, levels)
    leaves = [((), x)]
    for _ in range(levels):
        leaves = [
            (path + (label,), np.ascontiguousarray(data))
            for path, parent in leaves
            for label, data in dwt(parent, spec).blocks().items()
        ]
    blocks = [Block(levels, path, data) for path, data in leaves]
    return Pyramid("wpt", levels, spec.name, d, tuple(x.shape), blocks)


def iwpt(p: Pyramid) -> np.ndarray:
    if p.mode != "wpt":
        raise InconsistentPyramid(f"expected a wpt pyramid, got {p.mode}")
    labels = SUBBAND_LABELS[p.d]
    _check_blocks(p, len(labels) ** p.levels)
    nodes = {b.path: b.data for b in p.blocks}
    if any(len(path) != p.levels or not set(path) <= set(labels) for path in nodes):
        raise InconsistentPyramid("leaf paths do not match the pyramid depth")
    for _ in range(p.levels):
        parents: dict[tuple, dict] = {}
        for path, data in nodes.items():
            parents.setdefault(path[:-1], {})[path[-1]] = data
        nodes = {}
        for parent, bands in parents.items():
            if len(bands) != len(labels):
                raise InconsistentPyramid(f"node {'-'.join(parent) or '<root>'} is missing children")
            nodes[parent] = idwt(GroupedSubbands.from_blocks(bands, p.d, p.wavelet))
    return nodes[()]


def frequency_order(p: Pyramid) -> list[Block]:
    """Blocks of a WPT pyramid sorted by frequency instead of filter path.

    Each label position is an independent axis; along it the sequence of
    L/H choices is a Gray code of the frequency index.
    """
    def key(block):
        positions = len(block.path[0])
        out = []
        for pos in range(positions):
            bit = index = 0
            for label in block.path:
                bit ^= label[pos] == "H"
                index = 2 * index + bit
            out.append(index)
        return tuple(out)

    return sorted(p.blocks, key=key)


# ---------------------------------------------------------------------------
# serialization: directory or .zip of NPY files plus manifest.json

def _manifest(p: Pyramid) -> dict:
    return {
        "mode": p.mode,
        "levels": p.levels,
        "wavelet": p.wavelet,
        "d": p.d,
        "original_shape": list(p.original_shape),
        "nodes": [p.file_name(b) for b in p.blocks],
    }


def save_pyramid(p: Pyramid, path):
    path = Path(path)
    manifest = json.dumps(_manifest(p), indent=2)
    if path.suffix == ".zip":
        with zipfile.ZipFile(path, "w") as zf:
            zf.writestr(MANIFEST, manifest)
            for b in p.blocks:
                buf = io.BytesIO()
                write_npy(buf, b.data)
                zf.writestr(p.file_name(b), buf.getvalue())
        return
    path.mkdir(parents=True, exist_ok=True)
    (path / MANIFEST).write_text(manifest)
    for b in p.blocks:
        write_npy(path / p.file_name(b), b.data)


def _parse_node(name: str, mode: str) -> tuple[int, tuple[str, ...]]:
    stem = name[: -len(".npy")] if name.endswith(".npy") else name
    node_mode, level, path = stem.split("_", 2)
    if node_mode != mode:
        raise InconsistentPyramid(f"node {name} does not belong to a {mode} pyramid")
    return int(level), tuple(path.split("-"))


def load_pyramid(path) -> Pyramid:
    path = Path(path)
    if path.is_file() and zipfile.is_zipfile(path):
        with zipfile.ZipFile(path) as zf:
            meta = json.loads(zf.read(MANIFEST))
            arrays = {name: read_npy(zf.read(name)) for name in meta["nodes"]}
    else:
        meta = json.loads((path / MANIFEST).read_text())
        arrays = {name: read_npy(path / name) for name in meta["nodes"]}
    try:
        p = Pyramid(meta["mode"], int(meta["levels"]), meta["wavelet"], int(meta["d"]), tuple(meta["original_shape"]))
        for name in meta["nodes"]:
            level, node_path = _parse_node(name, p.mode)
            p.blocks.append(Block(level, node_path, arrays[name]))
    except (KeyError, ValueError) as exc:
        if isinstance(exc, InconsistentPyramid):
            raise
        raise InconsistentPyramid(f"malformed manifest: {exc}") from None
    return p

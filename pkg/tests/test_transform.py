import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wavetx import (
    BadChannelMultiple,
    GroupedSubbands,
    LengthTooSmall,
    OddLength,
    WrongRank,
    dwt,
    dwt1d,
    dwt2d,
    dwt3d,
    idwt,
    idwt1d,
    idwt2d,
    idwt3d,
    lookup,
)

from conftest import ALL_WAVELETS, ORTHOGONAL, even_at_least, oracle_along, oracle_grouped

SQRT2 = math.sqrt(2)


def test_shapes():
    assert dwt1d(np.zeros((4, 16, 3)), "db2").tensor.shape == (4, 8, 6)
    assert dwt2d(np.zeros((2, 8, 8, 1)), "haar").tensor.shape == (2, 4, 4, 4)
    assert dwt3d(np.zeros((1, 8, 8, 8, 2)), "haar").tensor.shape == (1, 4, 4, 4, 16)
    assert dwt2d(np.zeros((1, 8, 12, 1)), "db2").tensor.shape == (1, 4, 6, 4)


def test_labels():
    assert dwt1d(np.zeros((1, 4, 1))).order == ("L", "H")
    assert dwt2d(np.zeros((1, 4, 4, 1))).order == ("LL", "LH", "HL", "HH")
    q = dwt3d(np.zeros((1, 4, 4, 4, 1)))
    assert len(q.order) == 8 and q.order[0] == "LLL" and q.order[-1] == "HHH"


def test_constant_1d():
    q = dwt1d(np.ones((2, 8, 3)), "haar")
    np.testing.assert_allclose(q.subband("L"), SQRT2, atol=1e-14)
    np.testing.assert_allclose(q.subband("H"), 0, atol=1e-14)


@pytest.mark.parametrize("name", ["haar", "db3", "bior2.2"])
def test_constant_2d(name):
    q = dwt2d(np.full((1, 16, 16, 2), 1.5), name)
    np.testing.assert_allclose(q.subband("LL"), 2 * 1.5, atol=1e-12)
    for label in ("LH", "HL", "HH"):
        np.testing.assert_allclose(q.subband(label), 0, atol=1e-12)


def test_constant_3d():
    q = dwt3d(np.full((1, 8, 8, 8, 1), -0.5), "db2")
    for label, block in q.blocks().items():
        expected = 2 * SQRT2 * -0.5 if label == "LLL" else 0.0
        np.testing.assert_allclose(block, expected, atol=1e-12)


def test_2d_quadrant_orientation():
    # varies along height only: energy must land in LH (high along height, low along width)
    x = np.zeros((1, 8, 8, 1))
    x[:, ::2] = 1.0
    x[:, 1::2] = -1.0
    q = dwt2d(x, "haar")
    energies = {k: float(np.sum(v ** 2)) for k, v in q.blocks().items()}
    assert max(energies, key=energies.get) == "LH"


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("name", ["haar", "db2", "sym4", "coif1", "bior3.1", "rbio2.2"])
def test_matches_oracle_composition(d, name, rng):
    n = even_at_least(8, lookup(name).filter_length)
    shape = (2,) + tuple(n + 2 * i for i in range(d)) + (2,)
    x = rng.standard_normal(shape)
    assert np.max(np.abs(dwt(x, name).tensor - oracle_grouped(x, name))) < 1e-12


def test_separability_by_axes(rng):
    x = rng.standard_normal((1, 8, 12, 1))
    q = dwt2d(x, "db2")
    along_w = oracle_along(x, "db2", 2)
    both = oracle_along(along_w, "db2", 1)
    np.testing.assert_allclose(q.subband("HL"), both[:, :4, 6:], atol=1e-12)


def test_round_trips_examples(rng):
    x = rng.standard_normal((2, 32, 5))
    assert np.max(np.abs(idwt1d(dwt1d(x, "sym4")) - x)) < 1e-10
    assert np.max(np.abs(idwt1d(dwt1d(x, "bior3.1")) - x)) < 1e-8
    x = rng.standard_normal((1, 16, 24, 3))
    assert np.max(np.abs(idwt2d(dwt2d(x, "db4")) - x)) < 1e-10
    x = rng.standard_normal((2, 8, 8, 1))
    assert np.max(np.abs(idwt2d(dwt2d(x, "haar")) - x)) < 1e-12
    x = rng.standard_normal((1, 16, 8, 12, 2))
    assert np.max(np.abs(idwt3d(dwt3d(x, "coif1")) - x)) < 1e-10
    x = rng.standard_normal((1, 4, 4, 4, 1))
    assert np.max(np.abs(idwt3d(dwt3d(x, "haar")) - x)) < 1e-12


@pytest.mark.parametrize("d", [1, 2, 3])
def test_zeros_invert_to_zeros(d):
    shape = (1,) + (4,) * d + (2 ** d,)
    q = GroupedSubbands(np.zeros(shape), d, 1, "haar")
    np.testing.assert_array_equal(idwt(q), 0.0)


def test_raw_grouped_tensor_needs_wavelet(rng):
    x = rng.standard_normal((1, 8, 2))
    raw = dwt1d(x, "db2").tensor
    np.testing.assert_allclose(idwt(raw, "db2"), x, atol=1e-12)
    with pytest.raises(ValueError):
        idwt(raw)


def test_errors():
    with pytest.raises(OddLength) as info:
        dwt1d(np.zeros((1, 7, 1)))
    assert "even" in str(info.value)
    with pytest.raises(OddLength):
        dwt2d(np.zeros((1, 8, 9, 1)))
    with pytest.raises(LengthTooSmall):
        dwt1d(np.zeros((1, 4, 1)), "db4")
    with pytest.raises(WrongRank):
        dwt1d(np.zeros((1, 8, 8, 1)))
    with pytest.raises(WrongRank):
        idwt2d(dwt1d(np.zeros((1, 8, 1))))
    with pytest.raises(BadChannelMultiple):
        idwt2d(np.zeros((1, 4, 4, 6)), "haar")


def test_channel_independence(rng):
    x = rng.standard_normal((2, 8, 8, 3))
    perm = [2, 0, 1]
    q, qp = dwt2d(x, "db2"), dwt2d(x[..., perm], "db2")
    for label in q.order:
        np.testing.assert_array_equal(qp.subband(label), q.subband(label)[..., perm])


def test_f32(rng):
    x = rng.standard_normal((1, 16, 16, 2)).astype(np.float32)
    q = dwt2d(x, "db2")
    assert q.tensor.dtype == np.float32
    assert np.max(np.abs(idwt2d(q) - x)) < 1e-4
    assert dwt1d(rng.standard_normal((1, 8, 1)), "haar", dtype="f32").tensor.dtype == np.float32


spatial = st.sampled_from([4, 8, 12, 16])


@st.composite
def tensors(draw):
    d = draw(st.integers(1, 3))
    shape = (draw(st.integers(1, 3)),) + tuple(draw(spatial) for _ in range(d)) + (draw(st.integers(1, 4)),)
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return np.random.default_rng(seed).standard_normal(shape)


short = [w for w in ALL_WAVELETS if lookup(w).filter_length <= 4]


@given(tensors(), st.sampled_from(short))
def test_round_trip_property(x, name):
    tol = 1e-10 if lookup(name).orthogonal else 1e-8
    q = dwt(x, name)
    assert q.tensor.shape[-1] == 2 ** q.d * x.shape[-1]
    assert np.max(np.abs(idwt(q) - x)) < tol


@given(tensors(), st.sampled_from([w for w in short if w in ORTHOGONAL]))
def test_parseval_property(x, name):
    q = dwt(x, name)
    assert abs(np.linalg.norm(q.tensor) - np.linalg.norm(x)) / np.linalg.norm(x) < 1e-10


@given(tensors(), st.floats(-10, 10), st.floats(-10, 10))
def test_linearity_property(x, a, b):
    y = np.roll(x, 1, axis=1) + 0.5
    lhs = dwt(a * x + b * y, "db2").tensor
    rhs = a * dwt(x, "db2").tensor + b * dwt(y, "db2").tensor
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))

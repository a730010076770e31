import dataclasses
import math

import numpy as np
import pytest

from wavetx import OddFilterLength, UnknownWavelet, derive_qmf_highpass, lookup, names, validate
from wavetx.wavelet_db import table_version

from conftest import ALL_WAVELETS, BIORTHOGONAL, ORTHOGONAL

SQ = 1 / math.sqrt(2)


def test_coverage():
    expected = (
        ["haar"]
        + [f"db{i}" for i in range(1, 9)]
        + [f"sym{i}" for i in range(2, 9)]
        + [f"coif{i}" for i in range(1, 4)]
        + [f"{f}{v}" for f in ("bior", "rbio") for v in ("1.1", "1.3", "2.2", "3.1", "3.3", "4.4")]
    )
    assert sorted(names()) == sorted(expected)
    assert table_version() == 1


def test_haar_taps():
    w = lookup("haar")
    np.testing.assert_allclose(w.g, [SQ, SQ], atol=1e-15)
    np.testing.assert_allclose(w.h, [SQ, -SQ], atol=1e-15)
    assert w.orthogonal


def test_lookup_case_insensitive():
    assert lookup("DB2") is lookup("db2")


def test_unknown():
    with pytest.raises(UnknownWavelet) as info:
        lookup("db99")
    assert "haar" in str(info.value)


def test_bior31_distinct_banks():
    w = lookup("bior3.1")
    assert not w.orthogonal
    assert not np.array_equal(w.g, w.g_tilde)


@pytest.mark.parametrize("v", ["1.1", "1.3", "2.2", "3.1", "3.3", "4.4"])
def test_rbio_is_swapped_bior(v):
    b, r = lookup("bior" + v), lookup("rbio" + v)
    assert np.array_equal(r.g, b.g_tilde) and np.array_equal(r.h, b.h_tilde)
    assert np.array_equal(r.g_tilde, b.g) and np.array_equal(r.h_tilde, b.h)
    assert r.family == "rbio"


def test_qmf():
    np.testing.assert_array_equal(derive_qmf_highpass([SQ, SQ]), [SQ, -SQ])
    g = np.array([1.0, 2.0, 3.0, 4.0])
    np.testing.assert_array_equal(derive_qmf_highpass(g), [4.0, -3.0, 2.0, -1.0])
    with pytest.raises(OddFilterLength):
        derive_qmf_highpass([1.0, 2.0, 3.0])


@pytest.mark.parametrize("name", ORTHOGONAL)
def test_orthogonal_invariants(name):
    w = lookup(name)
    assert w.g_tilde is w.g and w.h_tilde is w.h
    assert abs(w.g.sum() - math.sqrt(2)) < 1e-12
    L = len(w.g)
    for k in range(-(L // 2), L // 2 + 1):
        s = sum(w.g[n] * w.g[n - 2 * k] for n in range(L) if 0 <= n - 2 * k < L)
        assert abs(s - (k == 0)) < 1e-12, (name, k, s)


@pytest.mark.parametrize("name", ALL_WAVELETS)
def test_all_invariants(name):
    w = lookup(name)
    assert abs(w.h.sum()) < 1e-10 and abs(w.h_tilde.sum()) < 1e-10
    for taps in (w.g, w.h, w.g_tilde, w.h_tilde):
        assert len(taps) >= 2 and len(taps) % 2 == 0
        assert not taps.flags.writeable
    report = validate(w)
    assert report.ok, report.lines()


def test_validate_haar_deviation():
    report = validate(lookup("haar"))
    assert report.ok and report.max_deviation < 1e-12


def test_validate_scaled_lowpass_fails():
    w = lookup("haar")
    bad = dataclasses.replace(w, name="bad", g=2 * w.g, g_tilde=2 * w.g)
    failed = {c.name for c in validate(bad).failures}
    assert "orthonormal even shifts" in failed
    assert "lowpass sums to sqrt(2)" in failed


@pytest.mark.parametrize("name", BIORTHOGONAL)
def test_validate_biorthogonal_skips(name):
    report = validate(lookup(name))
    statuses = {c.name: c.status for c in report.checks}
    assert statuses["orthonormal even shifts"] == "skipped"
    assert any(k.startswith("perfect reconstruction") and v == "pass" for k, v in statuses.items())

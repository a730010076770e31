import numpy as np
import pytest
from hypothesis import settings

from wavetx import lookup, names, oracle_dwt1d

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

ALL_WAVELETS = names()
ORTHOGONAL = [w for w in ALL_WAVELETS if lookup(w).orthogonal]
BIORTHOGONAL = [w for w in ALL_WAVELETS if not lookup(w).orthogonal]

ACCEPTANCE_LOG = []


def even_at_least(n, L):
    n = max(n, L)
    return n + n % 2


def oracle_along(x, wavelet, axis):
    """Scalar-loop 1D oracle applied along one axis of ``x``."""
    moved = np.moveaxis(np.asarray(x, dtype=np.float64), axis, -1)
    return np.moveaxis(oracle_dwt1d(moved, wavelet), -1, axis)


def oracle_grouped(x, wavelet):
    """Separable transform composed from the 1D oracle, grouped by hand.

    Quadrant and octant tables written out explicitly; independent of the
    selection tables in the library.
    """
    d = x.ndim - 2
    q = x
    for axis in range(1, d + 1):
        q = oracle_along(q, wavelet, axis)
    lo = lambda n: slice(None, n // 2)  # noqa: E731
    hi = lambda n: slice(n // 2, None)  # noqa: E731
    if d == 1:
        n = q.shape[1]
        parts = [q[:, lo(n)], q[:, hi(n)]]
    elif d == 2:
        h, w = q.shape[1:3]
        parts = [
            q[:, lo(h), lo(w)],  # LL
            q[:, hi(h), lo(w)],  # LH
            q[:, lo(h), hi(w)],  # HL
            q[:, hi(h), hi(w)],  # HH
        ]
    else:
        h, w, z = q.shape[1:4]
        parts = []
        for a in (lo(h), hi(h)):
            for b in (lo(w), hi(w)):
                for c in (lo(z), hi(z)):
                    parts.append(q[:, a, b, c])
    return np.concatenate(parts, axis=-1)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)

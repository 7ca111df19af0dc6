import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from burgerslab.exact_solutions import (
    Box,
    Cone,
    InverseSqrt,
    NWave,
    Rescaled,
    n_wave,
    n_wave_lp_norm,
    profile_from_json,
    riemann_burgers_1d,
    truncate_data,
)


def test_n_wave_examples():
    assert n_wave(1, 0, 0.5) == 0.5
    assert n_wave(1, 0, 2) == 0.0
    assert n_wave(1, 3, 1) == 0.25
    with pytest.raises(ValueError):
        n_wave(0, 0, 0.1)


def test_n_wave_norm_examples():
    for t in (0.0, 2.0, 50.0):
        assert n_wave_lp_norm(1.5, t, 1) == pytest.approx(1.5**2 / 2, rel=1e-15)
    assert n_wave_lp_norm(1, 0, 2) == pytest.approx(math.sqrt(1 / 3), rel=1e-15)
    for t in (1.0, 7.0):
        assert n_wave_lp_norm(1, t, 4) / n_wave_lp_norm(1, 0, 4) == pytest.approx((1 + t) ** -0.375, rel=1e-14)
    assert n_wave_lp_norm(2, 3, math.inf) == pytest.approx(1.0)


@pytest.mark.parametrize("p", [1, 2, 4])
@pytest.mark.parametrize("t", [0, 1, 10])
def test_n_wave_norm_vs_quadrature(p, t):
    L = 1.3
    end = L * math.sqrt(1 + t)
    val = integrate.quad(lambda y: abs(n_wave(L, t, y)) ** p, 0, end, epsabs=0, epsrel=1e-13)[0]
    assert n_wave_lp_norm(L, t, p) == pytest.approx(val ** (1 / p), rel=1e-10)


def test_riemann_examples():
    y = np.array([0.4, 0.6])
    np.testing.assert_array_equal(riemann_burgers_1d(1, 0, 1.0, y), [1.0, 0.0])
    assert riemann_burgers_1d(0, 1, 2, 1) == 0.5
    assert riemann_burgers_1d(0.7, 0.7, 1, -3) == 0.7
    with pytest.raises(ValueError):
        riemann_burgers_1d(0, 1, 0, 1)


def test_truncate_examples():
    box = Box(3.0, (0.0,), (1.0,))
    tr = truncate_data(box, 5)
    y = np.linspace(-0.5, 1.5, 9)
    np.testing.assert_array_equal(tr(y), box(y))
    cone = Cone(10.0, (0.0, 0.0), 1.0)
    assert truncate_data(cone, 2)(0.1, 0.1) == 2.0
    assert truncate_data(cone, 2)(0.95, 0.0) == pytest.approx(0.5)


def test_truncation_l1_distance_monotone():
    prof = InverseSqrt()

    def dist(m):
        gap = lambda y: float(prof(y) - truncate_data(prof, m)(y))
        return 2 * integrate.quad(gap, 0, 1, points=[1 / m**2], epsabs=1e-12, limit=200)[0]

    d = [dist(m) for m in (2, 4, 8, 16, 32)]
    assert all(b < a for a, b in zip(d, d[1:]))
    # closed form: int (|y|^{-1/2} - m)_+ dy = 2/m
    np.testing.assert_allclose(d, [2 / m for m in (2, 4, 8, 16, 32)], rtol=1e-8)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.floats(-5, 5), min_size=5, max_size=5), st.lists(st.floats(-5, 5), min_size=5, max_size=5), st.floats(0.1, 4))
def test_clip_nonexpansive(u, v, m):
    u, v = np.array(u), np.array(v)
    cu, cv = np.clip(u, -m, m), np.clip(v, -m, m)
    assert np.sum(np.abs(cu - cv)) <= np.sum(np.abs(u - v)) + 1e-12


def test_profiles_l1_and_json():
    profs = [
        NWave(1.0),
        Box(2.0, (0.0, 1.0), (1.0, 0.5)),
        Cone(1.0, (0.0, 0.0), 0.5),
        InverseSqrt(1.0),
        Box(1.0, (0.0,), (1.0,)) + Box(1.0, (2.0,), (1.0,)),
        -Box(1.0, (0.0,), (1.0,)),
        truncate_data(InverseSqrt(), 3.0),
        Rescaled(Box(1.0, (0.0, 0.0), (1.0, 1.0)), 2.0),
    ]
    for p in profs:
        assert profile_from_json(p.to_json()) == p
    assert Cone(1.0, (0.0, 0.0), 0.5).l1_norm() == pytest.approx(math.pi * 0.25 / 3)
    # rescaled box mass picks up lam^{-1-2-3} = 1/64 at lam = 2
    assert profs[-1].l1_norm() == pytest.approx(1 / 64)
    assert Rescaled(NWave(1.0), 2.0)(0.1) == pytest.approx(n_wave(1.0, 0, 0.4) / 2)


def test_cone_l1_quadrature():
    cone = Cone(2.0, (0.3, -0.2), 0.7)
    val = integrate.dblquad(lambda y, x: cone(x, y), 0.3 - 0.7, 1.0, -0.9, 0.5, epsabs=1e-10)[0]
    assert val == pytest.approx(cone.l1_norm(), rel=1e-6)

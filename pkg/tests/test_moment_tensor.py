import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burgerslab.flux_models import FluxSpec
from burgerslab.moment_tensor import (
    DegenerateFluxError,
    bareiss_det,
    capital_delta,
    det_identity_check,
    det_polynomial,
    delta_function,
    general_moment,
    hilbert_det,
    is_degenerate,
    vandermonde_moment,
)


def cofactor_det(m):
    """Independent oracle: Laplace expansion along the first row."""
    if len(m) == 1:
        return m[0][0]
    total = Fraction(0)
    for j, x in enumerate(m[0]):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * x * cofactor_det(minor)
    return total


def test_vandermonde_examples():
    F = Fraction
    assert vandermonde_moment(1, 2).entries == ((1, F(1, 2)), (F(1, 2), F(1, 3)))
    assert all(x == 0 for row in vandermonde_moment(0, 4).entries for x in row)
    m = vandermonde_moment(2, 2)
    assert m.entries == ((2, 2), (2, F(8, 3)))
    assert m.det() == F(4, 3)
    with pytest.raises(ValueError):
        vandermonde_moment(1, 1)


def test_hilbert_examples():
    assert hilbert_det(1) == 1
    assert hilbert_det(2) == Fraction(1, 12)
    assert hilbert_det(3) == Fraction(1, 2160)
    for d in range(1, 8):
        h = [[Fraction(1, i + j + 1) for j in range(d)] for i in range(d)]
        assert hilbert_det(d) == cofactor_det(h)
    assert hilbert_det(12) > 0
    for bad in (0, 13):
        with pytest.raises(ValueError):
            hilbert_det(bad)


def test_det_identity_examples():
    assert det_identity_check(1, 3)
    assert det_identity_check(0, 4)
    assert det_identity_check(Fraction(2, 3), 2)
    assert vandermonde_moment(Fraction(2, 3), 2).det() == Fraction(4, 243)


@pytest.mark.parametrize("d", range(2, 7))
@pytest.mark.parametrize("a", [Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(1), Fraction(5)])
def test_det_identity_grid(a, d):
    assert det_identity_check(a, d)


def test_bareiss_pivoting_and_singular():
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0
    m = [[Fraction(3, 7), 2, -1], [0, 0, 5], [1, Fraction(1, 2), 4]]
    assert bareiss_det(m) == cofactor_det([[Fraction(x) for x in r] for r in m])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_cofactor(rows):
    assert bareiss_det(rows) == cofactor_det(rows)


def test_general_moment_examples():
    F = Fraction
    assert general_moment(FluxSpec.burgers(1), 1) == vandermonde_moment(1, 2)
    cubic = FluxSpec.polynomial([[0, 0, 0, F(1, 3)]])
    assert general_moment(cubic, 1).entries == ((1, F(1, 3)), (F(1, 3), F(1, 5)))
    assert all(x == 0 for row in general_moment(cubic, 0).entries for x in row)
    for n in range(1, 5):
        for a in (F(-3, 2), F(1, 3), F(7)):
            assert general_moment(FluxSpec.burgers(n), a) == vandermonde_moment(a, n + 1)


def test_capital_delta_examples():
    assert capital_delta(FluxSpec.burgers(1), 2) == pytest.approx(4 / 3, rel=1e-15)
    assert capital_delta(FluxSpec.burgers(2), 0) == 0.0
    assert capital_delta(FluxSpec.burgers(2), 1) == pytest.approx(math.sqrt(1 / 2160), rel=1e-14)
    with pytest.raises(ValueError):
        capital_delta(FluxSpec.burgers(1), -1)


def test_monomial_det_closed_form():
    # sympy oracle: det of int_0^a (1, s, s^3)(x)(1, s, s^3) = 3 a^11 / 2800
    spec = FluxSpec.monomial([2, 4])
    coeffs = det_polynomial(spec)
    assert coeffs[11] == Fraction(3, 2800) and sum(c != 0 for c in coeffs) == 1
    delta = delta_function(spec)
    assert delta(2.0) == pytest.approx(math.sqrt(3 / 2800 * 2.0**11), rel=1e-13)
    assert capital_delta(spec, 2.0) == pytest.approx(delta(2.0), rel=1e-13)


def test_delta_function_polynomial_path():
    spec = FluxSpec.polynomial([[0, 0, 1, -1], [0, 0, 0, 1, 1]])
    u = np.array([0.0, 0.3, 1.1, 2.0])
    np.testing.assert_allclose(delta_function(spec)(u), [capital_delta(spec, float(x)) for x in u], rtol=1e-10)


def test_degenerate_flux_reported():
    spec = FluxSpec.polynomial([[0, 0, 1], [0, 0, 2]])
    assert is_degenerate(spec)
    assert capital_delta(spec, 1.5) == 0.0
    assert not is_degenerate(FluxSpec.burgers(2))
    assert issubclass(DegenerateFluxError, ValueError)


def test_str_grid():
    text = str(vandermonde_moment(1, 2))
    assert text.splitlines()[0].strip().startswith("[") and "1/3" in text


def test_psd_cholesky():
    rng = np.random.default_rng(5)
    for _ in range(100):
        a = float(rng.uniform(0.05, 3.0))
        d = int(rng.integers(2, 7))
        m = vandermonde_moment(a, d).to_numpy()
        np.linalg.cholesky(m + 1e-13 * np.abs(m).max() * np.eye(d))


def test_monotone_in_a():
    rng = np.random.default_rng(6)
    spec = FluxSpec.polynomial([[0, 0, 1, -1], [0, 0, 0, 1, 1]])
    for _ in range(50):
        a, b = sorted(rng.uniform(0, 2, 2))
        for mb, ma in (
            (general_moment(spec, b).to_numpy(), general_moment(spec, a).to_numpy()),
            (vandermonde_moment(b, 4).to_numpy(), vandermonde_moment(a, 4).to_numpy()),
        ):
            assert np.linalg.eigvalsh(mb - ma).min() >= -1e-12 * np.linalg.norm(mb)

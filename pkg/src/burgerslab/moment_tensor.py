"""Moment matrices ``M(a) = int_0^a F'(s) (x) F'(s) ds`` and their determinants.

``F(s) = (s, f_1(s), ..., f_n(s))``. For the multi-d Burgers flux
``F' = (1, s, ..., s**n)`` and ``M(a)`` has entries ``a**(i+j+1)/(i+j+1)``,
whose determinant is ``H_d * a**(d*d)`` with ``H_d`` the Hilbert determinant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Sequence

import numpy as np

from .flux_models import FluxSpec, _deriv_coeffs

__all__ = [
    "MomentMatrix",
    "DegenerateFluxError",
    "bareiss_det",
    "vandermonde_moment",
    "hilbert_det",
    "det_identity_check",
    "general_moment",
    "capital_delta",
    "det_polynomial",
    "delta_function",
]

HILBERT_MAX_DIM = 12


class DegenerateFluxError(ValueError):
    """Raised when ``det M(a)`` is negative beyond round-off."""


def _exact(a) -> bool:
    return isinstance(a, Rational) and not isinstance(a, bool)


def bareiss_det(rows: Sequence[Sequence]) -> Fraction | int:
    """Fraction-free determinant (Bareiss) with row pivoting.

    Integer input stays in the integers; rational input is first scaled to
    integers by the common denominator of each row.
    """
    d = len(rows)
    if d == 0:
        return 1
    scale = Fraction(1)
    m = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = math.lcm(*(x.denominator for x in row))
        scale /= den
        m.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for k in range(d - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, d) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, d):
            for j in range(k + 1, d):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    det = sign * m[-1][-1] * scale
    return det.numerator if det.denominator == 1 else det


@dataclass(frozen=True)
class MomentMatrix:
    """Symmetric ``d x d`` moment matrix, exact (Fraction) or float."""

    entries: tuple[tuple, ...]
    exact: bool

    @property
    def d(self) -> int:
        return len(self.entries)

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries])

    def det(self):
        if self.exact:
            return Fraction(bareiss_det(self.entries))
        return float(np.linalg.det(self.to_numpy()))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, MomentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


def vandermonde_moment(a, d: int) -> MomentMatrix:
    """``M(a)_{ij} = a**(i+j+1)/(i+j+1)`` for ``0 <= i, j < d``."""
    if d < 2:
        raise ValueError("d must be at least 2")
    exact = _exact(a)
    a = Fraction(a) if exact else float(a)
    rows = tuple(
        tuple((a ** (i + j + 1)) / (i + j + 1) for j in range(d)) for i in range(d)
    )
    return MomentMatrix(rows, exact)


@lru_cache(maxsize=None)
def hilbert_det(d: int) -> Fraction:
    """Exact determinant of the ``d x d`` Hilbert matrix ``1/(i+j+1)``."""
    if not 1 <= d <= HILBERT_MAX_DIM:
        raise ValueError(f"Hilbert dimension must lie in [1, {HILBERT_MAX_DIM}], got {d}")
    L = math.lcm(*range(1, 2 * d))
    ints = [[L // (i + j + 1) for j in range(d)] for i in range(d)]
    return Fraction(bareiss_det(ints), L**d)


def det_identity_check(a, d: int) -> bool:
    a = Fraction(a)
    lhs = vandermonde_moment(a, d).det()
    return lhs == hilbert_det(d) * a ** (d * d)


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_add(p, q, sign=1):
    n = max(len(p), len(q))
    p = list(p) + [Fraction(0)] * (n - len(p))
    q = list(q) + [Fraction(0)] * (n - len(q))
    return [x + sign * y for x, y in zip(p, q)]


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


@lru_cache(maxsize=None)
def moment_polynomials(spec: FluxSpec) -> tuple[tuple[tuple[Fraction, ...], ...], ...]:
    """Exact coefficients (in ``a``) of every entry of ``M(a)``."""
    fprime = [(Fraction(1),)] + [_deriv_coeffs(c) for c in spec.poly]
    d = len(fprime)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            prod = _poly_mul(fprime[i], fprime[j])
            integ = [Fraction(0)] + [c / (k + 1) for k, c in enumerate(prod)]
            row.append(_trim(integ))
        rows.append(tuple(row))
    return tuple(rows)


def _eval_entry(coeffs, a):
    if isinstance(a, Fraction):
        return sum((c * a**k for k, c in enumerate(coeffs) if c), Fraction(0))
    return math.fsum(float(c) * a**k for k, c in enumerate(coeffs) if c)


def general_moment(spec: FluxSpec, a) -> MomentMatrix:
    """``M(a) = int_0^a F' (x) F'`` by exact polynomial integration.

    Rational ``a`` gives exact entries; float ``a`` sums the polynomial terms
    with ``math.fsum``.
    """
    exact = _exact(a)
    a = Fraction(a) if exact else float(a)
    rows = tuple(tuple(_eval_entry(c, a) for c in row) for row in moment_polynomials(spec))
    return MomentMatrix(rows, exact)


@lru_cache(maxsize=None)
def det_polynomial(spec: FluxSpec) -> tuple[Fraction, ...]:
    """Exact coefficients of ``a -> det M(a)`` (cofactor expansion with memo)."""
    entries = moment_polynomials(spec)
    d = len(entries)
    memo: dict[tuple[int, ...], list[Fraction]] = {}

    def minor(cols: tuple[int, ...]) -> list[Fraction]:
        # determinant of the rows d-len(cols).. against the given columns
        if not cols:
            return [Fraction(1)]
        if cols in memo:
            return memo[cols]
        r = d - len(cols)
        acc = [Fraction(0)]
        for pos, c in enumerate(cols):
            rest = cols[:pos] + cols[pos + 1:]
            term = _poly_mul(entries[r][c], minor(rest))
            acc = _poly_add(acc, term, 1 if pos % 2 == 0 else -1)
        memo[cols] = acc
        return acc

    return _trim(minor(tuple(range(d))))


def _monomial_det(spec: FluxSpec) -> tuple[Fraction, int]:
    """``det M(a) = C * a**E`` for monomial fluxes (Cauchy-type constant)."""
    ks = (1,) + spec.exponents
    C = Fraction(bareiss_det([[Fraction(1, ki + kj - 1) for kj in ks] for ki in ks]))
    E = sum(2 * k - 1 for k in ks)
    return C, E


def capital_delta(spec: FluxSpec, a) -> float:
    """``Delta(a) = (det M(a))**(1/n)`` for ``a >= 0``."""
    if a < 0:
        raise ValueError("Delta is defined for a >= 0")
    if a == 0:
        return 0.0
    coeffs = det_polynomial(spec)
    if _exact(a):
        det = float(sum((c * Fraction(a) ** k for k, c in enumerate(coeffs)), Fraction(0)))
    else:
        det = math.fsum(float(c) * float(a) ** k for k, c in enumerate(coeffs) if c)
    diag_scale = math.prod(abs(float(_eval_entry(row[i], float(a)))) for i, row in enumerate(moment_polynomials(spec)))
    if det < -1e-12 * max(diag_scale, 1e-300):
        raise DegenerateFluxError(f"det M({a}) = {det} < 0")
    return max(det, 0.0) ** (1.0 / spec.n)


def is_degenerate(spec: FluxSpec) -> bool:
    """True when ``det M`` vanishes identically (affinely dependent ``F``)."""
    return all(c == 0 for c in det_polynomial(spec))


@lru_cache(maxsize=None)
def delta_function(spec: FluxSpec):
    """Vectorized ``u -> |det M(u)|**(1/n)`` for field diagnostics.

    Monomial fluxes use the closed form ``C**(1/n) |u|**(E/n)``; for the
    Burgers flux this is ``H_d**(1/n) |u|**(d^2/(d-1))``.
    """
    n = spec.n
    if spec.kind == "monomial":
        C, E = _monomial_det(spec)
        const = float(C) ** (1.0 / n)
        expo = E / n

        def delta(u):
            return const * np.abs(u) ** expo

        return delta

    coeffs = np.array([float(c) for c in det_polynomial(spec)])

    def delta(u):
        u = np.asarray(u, dtype=float)
        acc = np.zeros_like(u)
        for c in coeffs[::-1]:
            acc = acc * u + c
        return np.abs(acc) ** (1.0 / n)

    return delta

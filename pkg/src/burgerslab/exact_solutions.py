"""Closed-form reference solutions and initial-data profiles.

Profiles are evaluable pointwise (``profile(y1, ..., yn)`` on broadcastable
arrays) so cell averages can be taken by quadrature instead of sampling.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DataProfile",
    "NWave",
    "Box",
    "Cone",
    "InverseSqrt",
    "Sum",
    "Negated",
    "Truncated",
    "Rescaled",
    "n_wave",
    "n_wave_lp_norm",
    "riemann_burgers_1d",
    "truncate_data",
    "profile_from_json",
]


class DataProfile:
    """Compactly supported initial datum ``u0``."""

    n: int

    def __call__(self, *coords):
        raise NotImplementedError

    def support(self) -> list[tuple[float, float]]:
        """Bounding box ``[(lo_1, hi_1), ...]`` of the support."""
        raise NotImplementedError

    def bounds(self) -> tuple[float, float]:
        """Lower and upper bound of the values (may be infinite)."""
        raise NotImplementedError

    def l1_norm(self) -> float | None:
        """Closed-form L1 norm when available."""
        return None

    def to_json(self) -> dict:
        raise NotImplementedError

    def __add__(self, other: "DataProfile") -> "Sum":
        return Sum((self, other))

    def __neg__(self) -> "Negated":
        return Negated(self)


@dataclass(frozen=True)
class NWave(DataProfile):
    """1-D N-wave at time zero: ``y`` on ``(0, L)``."""

    L: float

    def __post_init__(self):
        if self.L <= 0:
            raise ValueError("L must be positive")

    @property
    def n(self) -> int:
        return 1

    def __call__(self, y):
        return n_wave(self.L, 0.0, y)

    def support(self):
        return [(0.0, float(self.L))]

    def bounds(self):
        return 0.0, float(self.L)

    def l1_norm(self):
        return self.L**2 / 2

    def to_json(self):
        return {"type": "n_wave", "L": self.L}


@dataclass(frozen=True)
class Box(DataProfile):
    height: float
    corner: tuple[float, ...]
    widths: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "corner", tuple(float(c) for c in self.corner))
        object.__setattr__(self, "widths", tuple(float(w) for w in self.widths))
        if len(self.corner) != len(self.widths) or any(w <= 0 for w in self.widths):
            raise ValueError("box needs matching corner/widths with positive widths")

    @property
    def n(self) -> int:
        return len(self.corner)

    def __call__(self, *coords):
        inside = True
        for y, c, w in zip(coords, self.corner, self.widths):
            y = np.asarray(y, dtype=float)
            inside = inside & (y >= c) & (y <= c + w)
        return np.where(inside, float(self.height), 0.0)

    def support(self):
        return [(c, c + w) for c, w in zip(self.corner, self.widths)]

    def bounds(self):
        return min(0.0, self.height), max(0.0, self.height)

    def l1_norm(self):
        return abs(self.height) * math.prod(self.widths)

    def to_json(self):
        return {"type": "box", "height": self.height, "corner": list(self.corner), "widths": list(self.widths)}


@dataclass(frozen=True)
class Cone(DataProfile):
    """``height * (1 - |y - center| / radius)_+``."""

    height: float
    center: tuple[float, ...]
    radius: float

    def __post_init__(self):
        object.__setattr__(self, "center", tuple(float(c) for c in self.center))
        if self.radius <= 0:
            raise ValueError("radius must be positive")

    @property
    def n(self) -> int:
        return len(self.center)

    def __call__(self, *coords):
        r2 = 0.0
        for y, c in zip(coords, self.center):
            r2 = r2 + (np.asarray(y, dtype=float) - c) ** 2
        return float(self.height) * np.maximum(1.0 - np.sqrt(r2) / self.radius, 0.0)

    def support(self):
        return [(c - self.radius, c + self.radius) for c in self.center]

    def bounds(self):
        return min(0.0, self.height), max(0.0, self.height)

    def l1_norm(self):
        n = self.n
        ball = math.pi ** (n / 2) / math.gamma(n / 2 + 1) * self.radius**n
        return abs(self.height) * ball / (n + 1)

    def to_json(self):
        return {"type": "cone", "height": self.height, "center": list(self.center), "radius": self.radius}


@dataclass(frozen=True)
class InverseSqrt(DataProfile):
    """Integrable unbounded 1-D datum ``|y|**(-1/2)`` on ``|y| < radius``."""

    radius: float = 1.0

    @property
    def n(self) -> int:
        return 1

    def __call__(self, y):
        y = np.abs(np.asarray(y, dtype=float))
        with np.errstate(divide="ignore"):
            return np.where(y < self.radius, 1.0 / np.sqrt(y), 0.0)

    def support(self):
        return [(-self.radius, self.radius)]

    def bounds(self):
        return 0.0, math.inf

    def l1_norm(self):
        return 4.0 * math.sqrt(self.radius)

    def to_json(self):
        return {"type": "inverse_sqrt", "radius": self.radius}


@dataclass(frozen=True)
class Sum(DataProfile):
    parts: tuple[DataProfile, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts or len({p.n for p in self.parts}) != 1:
            raise ValueError("sum needs profiles of one common dimension")

    @property
    def n(self) -> int:
        return self.parts[0].n

    def __call__(self, *coords):
        return sum(p(*coords) for p in self.parts)

    def support(self):
        boxes = [p.support() for p in self.parts]
        return [(min(b[j][0] for b in boxes), max(b[j][1] for b in boxes)) for j in range(self.n)]

    def bounds(self):
        lo = sum(min(p.bounds()[0], 0.0) for p in self.parts)
        hi = sum(max(p.bounds()[1], 0.0) for p in self.parts)
        return lo, hi

    def to_json(self):
        return {"type": "sum", "parts": [p.to_json() for p in self.parts]}


@dataclass(frozen=True)
class Negated(DataProfile):
    base: DataProfile

    @property
    def n(self) -> int:
        return self.base.n

    def __call__(self, *coords):
        return -self.base(*coords)

    def support(self):
        return self.base.support()

    def bounds(self):
        lo, hi = self.base.bounds()
        return -hi, -lo

    def l1_norm(self):
        return self.base.l1_norm()

    def to_json(self):
        return {"type": "negated", "base": self.base.to_json()}


@dataclass(frozen=True)
class Truncated(DataProfile):
    """Pointwise clipping ``max(-m, min(u0, m))``."""

    base: DataProfile
    m: float

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError("truncation level must be positive")

    @property
    def n(self) -> int:
        return self.base.n

    def __call__(self, *coords):
        return np.clip(self.base(*coords), -self.m, self.m)

    def support(self):
        return self.base.support()

    def bounds(self):
        lo, hi = self.base.bounds()
        return max(lo, -self.m), min(hi, self.m)

    def l1_norm(self):
        lo, hi = self.base.bounds()
        if -self.m <= lo and hi <= self.m:
            return self.base.l1_norm()
        return None

    def to_json(self):
        return {"type": "truncated", "base": self.base.to_json(), "m": self.m}


@dataclass(frozen=True)
class Rescaled(DataProfile):
    """``lam**-1 * u0(lam**2 y_1, ..., lam**d y_n)`` (Burgers scaling)."""

    base: DataProfile
    lam: float

    def __post_init__(self):
        if not self.lam > 0:
            raise ValueError("lambda must be positive")

    @property
    def n(self) -> int:
        return self.base.n

    def __call__(self, *coords):
        scaled = [np.asarray(y, dtype=float) * self.lam ** (j + 2) for j, y in enumerate(coords)]
        return self.base(*scaled) / self.lam

    def support(self):
        return [(lo / self.lam ** (j + 2), hi / self.lam ** (j + 2)) for j, (lo, hi) in enumerate(self.base.support())]

    def bounds(self):
        lo, hi = self.base.bounds()
        return lo / self.lam, hi / self.lam

    def l1_norm(self):
        base = self.base.l1_norm()
        if base is None:
            return None
        return base / self.lam ** (1 + sum(j + 2 for j in range(self.n)))

    def to_json(self):
        return {"type": "rescaled", "base": self.base.to_json(), "lam": self.lam}


def profile_from_json(obj: dict | str) -> DataProfile:
    if isinstance(obj, str):
        obj = json.loads(obj)
    kind = obj["type"]
    if kind == "n_wave":
        return NWave(float(obj["L"]))
    if kind == "box":
        return Box(float(obj["height"]), tuple(obj["corner"]), tuple(obj["widths"]))
    if kind == "cone":
        return Cone(float(obj["height"]), tuple(obj["center"]), float(obj["radius"]))
    if kind == "inverse_sqrt":
        return InverseSqrt(float(obj.get("radius", 1.0)))
    if kind == "sum":
        return Sum(tuple(profile_from_json(p) for p in obj["parts"]))
    if kind == "negated":
        return Negated(profile_from_json(obj["base"]))
    if kind == "truncated":
        return Truncated(profile_from_json(obj["base"]), float(obj["m"]))
    if kind == "rescaled":
        return Rescaled(profile_from_json(obj["base"]), float(obj["lam"]))
    raise ValueError(f"unknown profile type {kind!r}")


def n_wave(L: float, t: float, y):
    """``y/(1+t)`` for ``0 < y < L sqrt(1+t)``, zero elsewhere."""
    if L <= 0:
        raise ValueError("L must be positive")
    y = np.asarray(y, dtype=float)
    out = np.where((y > 0) & (y < L * math.sqrt(1.0 + t)), y / (1.0 + t), 0.0)
    return float(out) if out.ndim == 0 else out


def n_wave_lp_norm(L: float, t: float, p: float) -> float:
    """``||N_L(t)||_p = (L**(p+1)/(p+1))**(1/p) (1+t)**((1-p)/(2p))``."""
    if p == math.inf:
        return L / math.sqrt(1.0 + t)
    if p < 1:
        raise ValueError("p must be >= 1")
    return (L ** (p + 1) / (p + 1)) ** (1.0 / p) * (1.0 + t) ** ((1.0 - p) / (2.0 * p))


def riemann_burgers_1d(uL: float, uR: float, t: float, y):
    """Entropy solution of ``u_t + (u^2/2)_y = 0`` with a jump at ``y = 0``."""
    if t <= 0:
        raise ValueError("t must be positive")
    y = np.asarray(y, dtype=float)
    if uL > uR:
        out = np.where(y < 0.5 * (uL + uR) * t, uL, uR)
    elif uL < uR:
        out = np.clip(y / t, uL, uR)
    else:
        out = np.full_like(y, uL)
    return float(out) if out.ndim == 0 else out


def truncate_data(profile: DataProfile, m: float) -> Truncated:
    return Truncated(profile, m)

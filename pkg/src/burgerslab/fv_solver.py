"""First-order unsplit Godunov finite volumes on rectangular grids.

The computational box is surrounded by a halo fixed at zero. A run aborts as
soon as a boundary cell carries a nonzero value, so mass and norm accounting
always refer to the whole space.
"""

from __future__ import annotations

import csv
import itertools
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .exact_solutions import DataProfile
from .flux_models import (
    EntropyId,
    FluxSpec,
    entropy_component_flux,
    entropy_value,
    godunov_state,
    max_wave_speed,
    phi_build,
    real_roots,
)
from .moment_tensor import delta_function

__all__ = [
    "GridSpec",
    "CellField",
    "SolverConfig",
    "RunDiagnostics",
    "SolverError",
    "CFLViolation",
    "SupportReachedBoundary",
    "SupportOutsideGrid",
    "initialize",
    "stable_dt",
    "step",
    "evolve",
    "run",
    "entropy_residual",
    "lp_norm",
    "linf_norm",
    "tv_of_square_1d",
    "total_mass",
    "auto_grid",
    "save_snapshot",
    "load_snapshot",
]

SNAPSHOT_FORMAT = "burgerslab-snapshot/1"
GAUSS_NODES = (-math.sqrt(0.6), 0.0, math.sqrt(0.6))
GAUSS_WEIGHTS = (5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0)


class SolverError(RuntimeError):
    pass


class CFLViolation(SolverError):
    pass


class SupportReachedBoundary(SolverError):
    pass


class SupportOutsideGrid(ValueError):
    pass


@dataclass(frozen=True)
class GridSpec:
    origin: tuple[float, ...]
    widths: tuple[float, ...]
    counts: tuple[int, ...]
    max_cells: int = 10**8

    def __post_init__(self):
        object.__setattr__(self, "origin", tuple(float(x) for x in self.origin))
        object.__setattr__(self, "widths", tuple(float(x) for x in self.widths))
        object.__setattr__(self, "counts", tuple(int(x) for x in self.counts))
        if not (len(self.origin) == len(self.widths) == len(self.counts) >= 1):
            raise ValueError("origin, widths and counts must share one positive length")
        if any(h <= 0 for h in self.widths) or any(c <= 0 for c in self.counts):
            raise ValueError("cell widths and counts must be positive")
        if self.size > self.max_cells:
            raise ValueError(f"{self.size} cells exceed the cap of {self.max_cells}")

    @classmethod
    def uniform(cls, lo: Sequence[float], hi: Sequence[float], counts: Sequence[int]) -> "GridSpec":
        widths = [(b - a) / c for a, b, c in zip(lo, hi, counts)]
        return cls(tuple(lo), tuple(widths), tuple(counts))

    @property
    def n(self) -> int:
        return len(self.counts)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.counts

    @property
    def size(self) -> int:
        return math.prod(self.counts)

    @property
    def cell_volume(self) -> float:
        return math.prod(self.widths)

    def upper(self, axis: int) -> float:
        return self.origin[axis] + self.counts[axis] * self.widths[axis]

    def centers(self, axis: int) -> np.ndarray:
        return self.origin[axis] + self.widths[axis] * (np.arange(self.counts[axis]) + 0.5)

    def rescaled(self, lam: float) -> "GridSpec":
        """Grid matched to the Burgers scaling ``y_j -> y_j / lam**(j+1)``."""
        fac = [lam ** (j + 2) for j in range(self.n)]
        return GridSpec(
            tuple(o / f for o, f in zip(self.origin, fac)),
            tuple(h / f for h, f in zip(self.widths, fac)),
            self.counts,
            self.max_cells,
        )

    def to_json(self) -> dict:
        return {"origin": list(self.origin), "widths": list(self.widths), "counts": list(self.counts)}

    @classmethod
    def from_json(cls, obj: dict) -> "GridSpec":
        if "lo" in obj:
            return cls.uniform(obj["lo"], obj["hi"], obj["counts"])
        return cls(tuple(obj["origin"]), tuple(obj["widths"]), tuple(obj["counts"]), obj.get("max_cells", 10**8))


@dataclass
class CellField:
    """Cell averages of ``u(t, .)``; ``values`` has shape ``grid.shape``."""

    grid: GridSpec
    values: np.ndarray
    t: float = 0.0

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float).reshape(self.grid.shape)
        if not np.all(np.isfinite(self.values)):
            raise ValueError("cell values must be finite")

    @property
    def flat(self) -> np.ndarray:
        return self.values.ravel()

    def copy(self) -> "CellField":
        return CellField(self.grid, self.values.copy(), self.t)


@dataclass
class SolverConfig:
    t_end: float
    output_times: tuple[float, ...] = ()
    cfl_fraction: float = 0.9
    boundary: str = "zero_halo"
    entropy_diagnostics: tuple[EntropyId, ...] = ()
    p_list: tuple[float, ...] = (1.0, 2.0)
    record_steps: bool = True
    store_snapshots: bool = False
    max_steps: int = 10_000_000

    def __post_init__(self):
        if not 0 < self.cfl_fraction <= 1:
            raise ValueError("cfl_fraction must lie in (0, 1]")
        if self.t_end < 0:
            raise ValueError("t_end must be nonnegative")
        if self.boundary != "zero_halo":
            raise ValueError("only the fixed zero halo boundary is supported")
        times = tuple(float(t) for t in self.output_times)
        if any(b < a for a, b in zip(times, times[1:])):
            raise ValueError("output_times must be sorted")
        if any(t < 0 or t > self.t_end for t in times):
            raise ValueError("output_times must lie in [0, t_end]")
        self.output_times = times
        self.entropy_diagnostics = tuple(self.entropy_diagnostics)
        if any(p < 1 for p in self.p_list):
            raise ValueError("norm exponents must be >= 1")
        self.p_list = tuple(float(p) for p in self.p_list)

    def stops(self) -> list[float]:
        return sorted(set((0.0,) + self.output_times + (float(self.t_end),)))

    def to_json(self) -> dict:
        return {
            "t_end": self.t_end,
            "output_times": list(self.output_times),
            "cfl_fraction": self.cfl_fraction,
            "boundary": self.boundary,
            "entropy_diagnostics": [e.to_json() for e in self.entropy_diagnostics],
            "p_list": list(self.p_list),
            "record_steps": self.record_steps,
            "store_snapshots": self.store_snapshots,
            "max_steps": self.max_steps,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SolverConfig":
        obj = dict(obj)
        obj["output_times"] = tuple(obj.get("output_times", ()))
        obj["entropy_diagnostics"] = tuple(EntropyId.from_json(e) for e in obj.get("entropy_diagnostics", ()))
        obj["p_list"] = tuple(obj.get("p_list", (1.0, 2.0)))
        return cls(**obj)


def _fsum(arr) -> float:
    return math.fsum(np.asarray(arr, dtype=float).ravel().tolist())


def total_mass(field: CellField) -> float:
    return _fsum(field.values) * field.grid.cell_volume


def lp_norm(field: CellField, p: float) -> float:
    if p == math.inf:
        return linf_norm(field)
    if p < 1:
        raise ValueError("p must be >= 1")
    a = np.abs(field.values)
    powered = a if p == 1 else (a * a if p == 2 else a**p)
    return (_fsum(powered) * field.grid.cell_volume) ** (1.0 / p)


def linf_norm(field: CellField) -> float:
    return float(np.max(np.abs(field.values))) if field.values.size else 0.0


def tv_of_square_1d(field: CellField) -> float:
    """Total variation of ``u**2/2`` including the zero halo."""
    if field.grid.n != 1:
        raise ValueError("tv_of_square_1d is defined for one space dimension only")
    v = np.concatenate([[0.0], 0.5 * field.values**2, [0.0]])
    return _fsum(np.abs(np.diff(v)))


def _check_inside(grid: GridSpec, support: Sequence[tuple[float, float]]) -> None:
    for j, (lo, hi) in enumerate(support):
        a = grid.origin[j] + grid.widths[j]
        b = grid.upper(j) - grid.widths[j]
        if lo < a or hi > b:
            need_lo = min(grid.origin[j], lo - grid.widths[j])
            need_hi = max(grid.upper(j), hi + grid.widths[j])
            raise SupportOutsideGrid(
                f"support [{lo:g}, {hi:g}] on axis {j} is not strictly inside the grid "
                f"interior [{a:g}, {b:g}]; enlarge the axis to at least [{need_lo:g}, {need_hi:g}]"
            )


def initialize(grid: GridSpec, profile: DataProfile) -> CellField:
    """Cell averages by 3-point Gauss quadrature per axis."""
    if profile.n != grid.n:
        raise ValueError(f"profile dimension {profile.n} does not match grid dimension {grid.n}")
    _check_inside(grid, profile.support())
    n = grid.n
    idx = [np.arange(c, dtype=float) for c in grid.counts]
    values = np.zeros(grid.shape)
    for combo in itertools.product(range(3), repeat=n):
        coords = []
        for j, q in enumerate(combo):
            offset = idx[j] + 0.5 * (1.0 + GAUSS_NODES[q])
            x = grid.origin[j] + grid.widths[j] * offset
            shape = [1] * n
            shape[j] = grid.counts[j]
            coords.append(x.reshape(shape))
        weight = math.prod(GAUSS_WEIGHTS[q] for q in combo) / 2**n
        values = values + weight * np.broadcast_to(profile(*coords), grid.shape)
    return CellField(grid, values, 0.0)


def _speed_bound(spec: FluxSpec, values_list: Sequence[np.ndarray]) -> np.ndarray:
    lo = min(0.0, min(float(v.min()) for v in values_list))
    hi = max(0.0, max(float(v.max()) for v in values_list))
    return max_wave_speed(spec, lo, hi)


def stable_dt(grids: GridSpec, spec: FluxSpec, values_list: Sequence[np.ndarray], cfl_fraction: float) -> float:
    """Largest ``dt`` with ``sum_j dt speed_j / h_j <= cfl_fraction``."""
    speeds = _speed_bound(spec, values_list)
    rate = sum(s / h for s, h in zip(speeds, grids.widths))
    return math.inf if rate == 0 else cfl_fraction / rate


def _interfaces(spec: FluxSpec, u: np.ndarray, axis: int):
    pad = [(0, 0)] * u.ndim
    pad[axis] = (1, 1)
    padded = np.pad(u, pad)
    n = padded.shape[axis]
    left = np.take(padded, np.arange(0, n - 1), axis=axis)
    right = np.take(padded, np.arange(1, n), axis=axis)
    flux, state = godunov_state(spec, axis, left, right)
    return flux, state


def _diff(a: np.ndarray, axis: int) -> np.ndarray:
    return np.diff(a, axis=axis)


def _boundary_touched(u: np.ndarray) -> int | None:
    for axis in range(u.ndim):
        first = np.take(u, 0, axis=axis)
        last = np.take(u, -1, axis=axis)
        if np.any(first != 0.0) or np.any(last != 0.0):
            return axis
    return None


def _advance(grid: GridSpec, spec: FluxSpec, u: np.ndarray, dt: float):
    new = u.copy()
    states = []
    for axis in range(grid.n):
        flux, state = _interfaces(spec, u, axis)
        new = new - (dt / grid.widths[axis]) * _diff(flux, axis)
        states.append(state)
    return new, states


def _check_cfl(grid: GridSpec, spec: FluxSpec, u: np.ndarray, dt: float, cfl_fraction: float) -> None:
    speeds = _speed_bound(spec, [u])
    number = sum(dt * s / h for s, h in zip(speeds, grid.widths))
    if number > cfl_fraction * (1.0 + 1e-12):
        raise CFLViolation(f"CFL number {number:.6g} exceeds {cfl_fraction:g} (dt={dt:g})")


def step(field: CellField, spec: FluxSpec, dt: float, cfl_fraction: float = 0.9) -> CellField:
    """One explicit Godunov step; halo fixed at zero."""
    if spec.n != field.grid.n:
        raise ValueError("flux and grid dimensions differ")
    _check_cfl(field.grid, spec, field.values, dt, cfl_fraction)
    new, _ = _advance(field.grid, spec, field.values, dt)
    axis = _boundary_touched(new)
    if axis is not None:
        raise SupportReachedBoundary(
            f"support reached the boundary on axis {axis} at t={field.t + dt:g}; enlarge the grid"
        )
    return CellField(field.grid, new, field.t + dt)


def _residual_sum(grid, spec, e, u_old, u_new, states, dt):
    """Per-cell ``residual * dt`` and its volume-weighted compensated total."""
    r = -(entropy_value(spec, e, u_new) - entropy_value(spec, e, u_old))
    for axis, state in enumerate(states):
        q = entropy_component_flux(spec, e, axis, state)
        r = r - (dt / grid.widths[axis]) * _diff(q, axis)
    return r, _fsum(r) * grid.cell_volume


def entropy_residual(before: CellField, after: CellField, spec: FluxSpec, e: EntropyId, dt: float):
    """Discrete entropy production ``-(d_t eta + div Q)`` of one step.

    Returns the per-cell residual field and its total mass
    ``sum residual * volume * dt``.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    states = [_interfaces(spec, before.values, axis)[1] for axis in range(before.grid.n)]
    r_dt, total = _residual_sum(before.grid, spec, e, before.values, after.values, states, dt)
    return CellField(before.grid, r_dt / dt, after.t), total


@dataclass
class StepEvent:
    t: float
    dt: float
    old: list[np.ndarray]
    new: list[np.ndarray]
    states: list[list[np.ndarray]]


def evolve(
    fields: Sequence[CellField],
    spec: FluxSpec,
    stops: Sequence[float],
    cfl_fraction: float = 0.9,
    max_steps: int = 10_000_000,
) -> Iterator[StepEvent]:
    """Advance several fields on one grid with a common ``dt`` sequence.

    ``dt`` is the largest admissible step for all fields, clipped so every
    time in ``stops`` is hit exactly. Yields one event per step; the fields
    are updated in place (values replaced, ``t`` advanced).
    """
    grid = fields[0].grid
    if any(f.grid != grid for f in fields):
        raise ValueError("lockstep fields must share one grid")
    if spec.n != grid.n:
        raise ValueError("flux and grid dimensions differ")
    t = fields[0].t
    targets = [s for s in sorted(set(float(s) for s in stops)) if s > t]
    count = 0
    for target in targets:
        while t < target:
            dt = stable_dt(grid, spec, [f.values for f in fields], cfl_fraction)
            if t + dt >= target:
                dt = target - t
            if dt <= 0:
                raise SolverError(f"time step collapsed at t={t:g}")
            old = [f.values for f in fields]
            new, states = [], []
            for u in old:
                un, st = _advance(grid, spec, u, dt)
                new.append(un)
                states.append(st)
            for un in new:
                axis = _boundary_touched(un)
                if axis is not None:
                    speed = max_wave_speed(spec, min(0.0, float(un.min())), max(0.0, float(un.max())))[axis]
                    raise SupportReachedBoundary(
                        f"support reached the boundary on axis {axis} at t={t + dt:g}; "
                        f"enlarge that axis by at least {speed * (stops[-1] - t):g} (max wave speed x remaining time)"
                    )
            t = target if t + dt >= target else t + dt
            for f, un in zip(fields, new):
                f.values = un
                f.t = t
            count += 1
            if count > max_steps:
                raise SolverError(f"exceeded {max_steps} steps")
            yield StepEvent(t, dt, old, new, states)


@dataclass
class RunDiagnostics:
    """Time series and accumulators of one run.

    ``times`` are the output times; every other series in ``series`` is
    aligned with it. ``acc_main`` is the space-time integral of
    ``|u|**(d^2/(d-1))`` and ``acc_delta`` that of ``Delta(u)``, both by the
    left-endpoint rectangle rule. ``step_t``/``step_x`` hold the dense
    ``X(t) = ||u(t)||_{p*}^{p*}`` samples.
    """

    n: int
    flux: dict
    grid: dict
    p_list: tuple[float, ...]
    entropy_labels: tuple[str, ...]
    times: list[float] = field(default_factory=list)
    series: dict[str, list[float]] = field(default_factory=dict)
    step_t: list[float] = field(default_factory=list)
    step_x: list[float] = field(default_factory=list)
    step_delta: list[float] = field(default_factory=list)
    initial: dict = field(default_factory=dict)
    snapshots: list[CellField] = field(default_factory=list)

    @property
    def d(self) -> int:
        return self.n + 1

    @property
    def p_star(self) -> float:
        return self.d**2 / (self.d - 1)

    def column(self, name: str) -> np.ndarray:
        return np.asarray(self.series[name], dtype=float)

    def norm_series(self, p: float) -> np.ndarray:
        return self.column(norm_column(p))

    def columns(self) -> list[str]:
        cols = ["t", "mass"] + [norm_column(p) for p in self.p_list] + ["lp_main", "linf"]
        if self.n == 1:
            cols.append("tv_sq")
        cols += [f"diss[{lab}]" for lab in self.entropy_labels]
        cols += ["acc_main", "acc_delta"]
        return cols

    def to_csv(self, path) -> None:
        cols = self.columns()
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(cols)
            for i, t in enumerate(self.times):
                w.writerow([repr(float(t))] + [repr(float(self.series[c][i])) for c in cols[1:]])

    def steps_to_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["t", "X", "delta_int"])
            for row in zip(self.step_t, self.step_x, self.step_delta):
                w.writerow([repr(float(x)) for x in row])

    def meta(self) -> dict:
        return {
            "n": self.n,
            "flux": self.flux,
            "grid": self.grid,
            "p_list": list(self.p_list),
            "entropy_labels": list(self.entropy_labels),
            "initial": self.initial,
        }

    def save(self, directory) -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        self.to_csv(directory / "diagnostics.csv")
        self.steps_to_csv(directory / "steps.csv")
        (directory / "diagnostics_meta.json").write_text(json.dumps(self.meta(), indent=2, sort_keys=True))

    @classmethod
    def load(cls, directory) -> "RunDiagnostics":
        """Read a saved run; raises ``ValueError`` on malformed files."""
        directory = Path(directory)
        try:
            meta = json.loads((directory / "diagnostics_meta.json").read_text())
            diag = cls(
                int(meta["n"]), meta["flux"], meta["grid"], tuple(meta["p_list"]),
                tuple(meta["entropy_labels"]), initial=meta["initial"],
            )
            cols = diag.columns()
            with open(directory / "diagnostics.csv", newline="") as fh:
                rows = list(csv.reader(fh))
            if not rows or rows[0] != cols:
                raise ValueError(f"unexpected diagnostics header {rows[:1]}")
            data = [[float(x) for x in row] for row in rows[1:]]
            if any(len(r) != len(cols) for r in data):
                raise ValueError("ragged diagnostics rows")
            diag.times = [r[0] for r in data]
            diag.series = {c: [r[i] for r in data] for i, c in enumerate(cols) if i > 0}
            steps_path = directory / "steps.csv"
            if steps_path.exists():
                with open(steps_path, newline="") as fh:
                    srows = list(csv.reader(fh))
                if not srows or srows[0] != ["t", "X", "delta_int"]:
                    raise ValueError("unexpected steps header")
                vals = [[float(x) for x in r] for r in srows[1:]]
                if any(len(r) != 3 for r in vals):
                    raise ValueError("ragged steps rows")
                diag.step_t = [r[0] for r in vals]
                diag.step_x = [r[1] for r in vals]
                diag.step_delta = [r[2] for r in vals]
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise ValueError(f"corrupted run record: {exc}") from exc
        return diag


def norm_column(p: float) -> str:
    return f"l{p:g}"


def _moments(values: np.ndarray, vol: float, top: int) -> dict[str, float]:
    a = np.abs(values)
    out = {}
    power = np.ones_like(a)
    for j in range(1, top + 1):
        power = power * a
        out[str(j)] = _fsum(power) * vol
    return out


def run(grid: GridSpec, profile: DataProfile, spec: FluxSpec, config: SolverConfig, field0: CellField | None = None) -> RunDiagnostics:
    """Advance ``profile`` to ``config.t_end`` and record diagnostics.

    ``field0`` overrides the quadrature initialization (used for already
    gridded data).
    """
    field_ = initialize(grid, profile) if field0 is None else field0.copy()
    grid = field_.grid
    n = grid.n
    vol = grid.cell_volume
    d = n + 1
    p_star = d * d / (d - 1)
    delta = delta_function(spec)
    entropies = config.entropy_diagnostics
    diag = RunDiagnostics(
        n, spec.to_json(), grid.to_json(), config.p_list, tuple(e.label for e in entropies)
    )
    u0 = field_.values
    diag.initial = {
        "mass": total_mass(field_),
        "l1": lp_norm(field_, 1),
        "linf": linf_norm(field_),
        "moments": _moments(u0, vol, d + 1),
        "nonnegative": bool(np.all(u0 >= 0)),
        "entropy": {e.label: _fsum(entropy_value(spec, e, u0)) * vol for e in entropies},
    }
    diag.initial["phi_integral"] = phi_build(spec).integrate(u0, vol)

    acc_main = 0.0
    acc_delta = 0.0
    dissipation = {e.label: 0.0 for e in entropies}

    def x_of(u):
        return _fsum(np.abs(u) ** p_star) * vol

    def delta_of(u):
        return _fsum(delta(u)) * vol

    def record(f: CellField):
        diag.times.append(f.t)
        s = diag.series
        s.setdefault("mass", []).append(total_mass(f))
        for p in config.p_list:
            s.setdefault(norm_column(p), []).append(lp_norm(f, p))
        s.setdefault("lp_main", []).append(lp_norm(f, p_star))
        s.setdefault("linf", []).append(linf_norm(f))
        if n == 1:
            s.setdefault("tv_sq", []).append(tv_of_square_1d(f))
        for e in entropies:
            s.setdefault(f"diss[{e.label}]", []).append(dissipation[e.label])
        s.setdefault("acc_main", []).append(acc_main)
        s.setdefault("acc_delta", []).append(acc_delta)
        if config.store_snapshots:
            diag.snapshots.append(f.copy())

    stops = config.stops()
    record(field_)
    x_now = x_of(field_.values)
    d_now = delta_of(field_.values)
    if config.record_steps:
        diag.step_t.append(field_.t)
        diag.step_x.append(x_now)
        diag.step_delta.append(d_now)
    out_set = set(stops[1:])
    for ev in evolve([field_], spec, stops, config.cfl_fraction, config.max_steps):
        acc_main += x_now * ev.dt
        acc_delta += d_now * ev.dt
        for e in entropies:
            _, total = _residual_sum(grid, spec, e, ev.old[0], ev.new[0], ev.states[0], ev.dt)
            dissipation[e.label] += total
        x_now = x_of(field_.values)
        d_now = delta_of(field_.values)
        if config.record_steps:
            diag.step_t.append(ev.t)
            diag.step_x.append(x_now)
            diag.step_delta.append(d_now)
        if ev.t in out_set:
            record(field_)
    return diag


def wave_speed_range(spec: FluxSpec, lo: float, hi: float) -> list[tuple[float, float]]:
    """Signed range ``[min f_j', max f_j']`` over ``[lo, hi]`` per direction."""
    out = []
    for j in range(spec.n):
        c2 = spec._float_poly[j][2]
        cands = [lo, hi] + [c for c in real_roots(c2) if lo < c < hi]
        vals = spec.component(j, np.array(cands, dtype=float), 1)
        out.append((float(vals.min()), float(vals.max())))
    return out


def auto_grid(
    profile: DataProfile,
    spec: FluxSpec,
    t_end: float,
    h: float | Sequence[float],
    margin: float = 0.1,
    margin_cells: int = 4,
) -> GridSpec:
    """Box covering the support swept by the extreme wave speeds up to ``t_end``.

    Each side is widened by ``margin`` (relative) plus ``margin_cells`` cells.
    """
    lo_v, hi_v = profile.bounds()
    if not (math.isfinite(lo_v) and math.isfinite(hi_v)):
        raise ValueError("auto sizing needs bounded data; truncate the profile first")
    n = profile.n
    hs = [float(h)] * n if np.isscalar(h) else [float(x) for x in h]
    origin, counts = [], []
    for j, ((a, b), (smin, smax)) in enumerate(zip(profile.support(), wave_speed_range(spec, min(lo_v, 0.0), max(hi_v, 0.0)))):
        left = a + min(smin, 0.0) * t_end
        right = b + max(smax, 0.0) * t_end
        pad = margin * (right - left) + margin_cells * hs[j]
        left -= pad
        right += pad
        origin.append(left)
        counts.append(int(math.ceil((right - left) / hs[j])))
    return GridSpec(tuple(origin), tuple(hs), tuple(counts))


def save_snapshot(field: CellField, path) -> None:
    np.savez(
        path,
        format=np.array(SNAPSHOT_FORMAT),
        origin=np.array(field.grid.origin),
        widths=np.array(field.grid.widths),
        counts=np.array(field.grid.counts),
        values=field.values,
        t=np.array(field.t),
    )


def load_snapshot(path) -> CellField:
    with np.load(path) as data:
        if str(data["format"]) != SNAPSHOT_FORMAT:
            raise ValueError(f"unsupported snapshot format {data['format']}")
        grid = GridSpec(tuple(data["origin"]), tuple(data["widths"]), tuple(int(c) for c in data["counts"]))
        return CellField(grid, data["values"], float(data["t"]))

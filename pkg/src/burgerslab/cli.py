"""Command-line front end: ``run``, ``verify``, ``exact`` and ``sweep``.

An experiment is one JSON document::

    {
      "run_id": "nwave",
      "flux": {"kind": "burgers", "n": 1},
      "data": {"type": "n_wave", "L": 1.0},
      "grid": {"auto": {"h": 0.0025, "margin": 0.1}},
      "solver": {"t_end": 80.0, "output_times": [1, 2, 4]},
      "checks": [{"estimate": "decay", "window": [5, 80], "time_shift": 1.0}]
    }

Exit codes: 0 pass, 1 a check failed or was inconclusive, 2 configuration
error, 3 runtime abort.
"""

from __future__ import annotations

import argparse
import copy
import csv
import json
import math
import os
import platform
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np
import scipy

from . import estimate_lab as el
from .exact_solutions import n_wave_lp_norm, profile_from_json, riemann_burgers_1d
from .flux_models import FluxSpec
from .fv_solver import (
    GridSpec,
    RunDiagnostics,
    SolverConfig,
    SolverError,
    SupportOutsideGrid,
    SupportReachedBoundary,
    auto_grid,
    initialize,
    load_snapshot,
    norm_column,
    run,
    save_snapshot,
)
from .moment_tensor import hilbert_det

EXIT_OK, EXIT_CHECK, EXIT_CONFIG, EXIT_ABORT = 0, 1, 2, 3
OUT_ENV = "BURGERSLAB_OUT"
DEFAULT_OUT = "runs"

ONE_D_CHECKS = {"daf_tv", "heat_linf"}
BURGERS_CHECKS = {"estfond", "nonhom", "decay", "gendec", "xtau", "daf_tv", "heat_linf"}
KNOWN_CHECKS = BURGERS_CHECKS | {"cigen", "grongen_diag"}


class ConfigError(ValueError):
    pass


@dataclass
class ExperimentConfig:
    run_id: str
    flux: FluxSpec
    data: object
    grid: GridSpec | None
    auto: dict | None
    solver: SolverConfig
    checks: list[dict] = field(default_factory=list)

    @classmethod
    def from_json(cls, obj: dict) -> "ExperimentConfig":
        try:
            spec = FluxSpec.from_json(obj["flux"])
            data = profile_from_json(obj["data"])
            g = obj.get("grid", {"auto": {}})
            if "auto" in g:
                auto = {"h": 1 / 400, "margin": 0.1, "margin_cells": 4, **g["auto"]}
                grid = None
            else:
                grid, auto = GridSpec.from_json(g), None
            solver = SolverConfig.from_json(obj["solver"])
            checks = [dict(c) for c in obj.get("checks", [])]
            cfg = cls(str(obj.get("run_id", "run")), spec, data, grid, auto, solver, checks)
        except ConfigError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid config: {exc!r}") from exc
        cfg.validate()
        return cfg

    def validate(self) -> None:
        n = self.flux.n
        if self.data.n != n:
            raise ConfigError(f"data has dimension {self.data.n}, flux has {n}")
        if self.grid is not None and self.grid.n != n:
            raise ConfigError("grid and flux dimensions differ")
        for c in self.checks:
            name = c.get("estimate")
            if name not in KNOWN_CHECKS:
                raise ConfigError(f"unknown check {name!r}")
            if name in ONE_D_CHECKS and n != 1:
                raise ConfigError(f"check {name} applies to n=1 only")
            if name in BURGERS_CHECKS and not self.flux.is_burgers:
                raise ConfigError(f"check {name} needs the multi-d Burgers flux")
            if name == "gendec" and "q" not in c:
                raise ConfigError("gendec needs a q")
            if name == "gendec" and norm_column(float(c["q"])) not in [norm_column(p) for p in self.solver.p_list]:
                raise ConfigError(f"gendec q={c['q']} needs that norm in solver.p_list")

    def resolve_grid(self) -> GridSpec:
        if self.grid is not None:
            return self.grid
        a = self.auto
        return auto_grid(self.data, self.flux, self.solver.t_end, a["h"], a["margin"], a["margin_cells"])

    def to_json(self) -> dict:
        grid = {"auto": self.auto} if self.grid is None else self.grid.to_json()
        return {
            "run_id": self.run_id,
            "flux": self.flux.to_json(),
            "data": self.data.to_json(),
            "grid": grid,
            "solver": self.solver.to_json(),
            "checks": self.checks,
        }


def load_config(path) -> ExperimentConfig:
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return ExperimentConfig.from_json(obj)


def _versions() -> dict:
    from . import __version__

    return {
        "burgerslab": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "scipy": scipy.__version__,
    }


def _out_root(arg: str | None) -> Path:
    return Path(arg or os.environ.get(OUT_ENV, DEFAULT_OUT))


def execute(cfg: ExperimentConfig, out_dir: Path) -> tuple[int, dict]:
    """Run one experiment into ``out_dir``; returns ``(exit code, manifest)``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = {"config": cfg.to_json(), "versions": _versions(), "status": "ok"}
    start = time.perf_counter()
    code = EXIT_OK
    try:
        grid = cfg.resolve_grid()
        manifest["grid"] = grid.to_json()
        solver = cfg.solver
        field0 = initialize(grid, cfg.data)
        diag = run(grid, cfg.data, cfg.flux, solver, field0=field0)
        diag.save(out_dir)
        if diag.snapshots:
            snap_dir = out_dir / "snapshots"
            snap_dir.mkdir(exist_ok=True)
            for i, snap in enumerate(diag.snapshots):
                save_snapshot(snap, snap_dir / f"snap_{i:04d}.npz")
    except (SupportOutsideGrid, SupportReachedBoundary) as exc:
        manifest["status"] = "aborted"
        manifest["error"] = f"{exc}; {_domain_hint(cfg)}"
        code = EXIT_ABORT
    except ValueError as exc:
        manifest["status"] = "config_error"
        manifest["error"] = str(exc)
        code = EXIT_CONFIG
    except SolverError as exc:
        manifest["status"] = "aborted"
        manifest["error"] = str(exc)
        code = EXIT_ABORT
    manifest["wall_time_s"] = time.perf_counter() - start
    (out_dir / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True))
    return code, manifest


def _domain_hint(cfg: ExperimentConfig) -> str:
    """Smallest box the data can reach by ``t_end`` (max wave speed times time)."""
    try:
        h = cfg.grid.widths if cfg.grid is not None else cfg.auto["h"]
        g = auto_grid(cfg.data, cfg.flux, cfg.solver.t_end, h, margin=0.0, margin_cells=1)
    except ValueError as exc:
        return f"no domain hint: {exc}"
    box = ", ".join(f"[{o:g}, {o + w * c:g}]" for o, w, c in zip(g.origin, g.widths, g.counts))
    return f"required domain at least {box}"


def _parse_window(text: str | None):
    if not text:
        return None
    try:
        a, b = (float(x) for x in text.split(":"))
    except ValueError as exc:
        raise ConfigError(f"window must look like T0:T1, got {text!r}") from exc
    if not 0 <= a < b:
        raise ConfigError("window needs 0 <= T0 < T1")
    return (a, b)


def run_check(diag: RunDiagnostics, spec: FluxSpec, check: dict, run_id: str, field0=None, window=None) -> el.EstimateReport:
    """Dispatch one configured check; data-dependent failures become ``inconclusive``."""
    c = dict(check)
    name = c.pop("estimate")
    if window is not None:
        c["window"] = window
    win = tuple(c["window"]) if c.get("window") else None
    try:
        if name == "estfond":
            return el.check_estfond(diag, ratio_cap=c.get("ratio_cap"), run_id=run_id)
        if name == "nonhom":
            return el.check_nonhom(diag, ratio_cap=c.get("ratio_cap"), run_id=run_id)
        if name == "decay":
            return el.check_decay(diag, window=win, time_shift=c.get("time_shift", 0.0),
                                  slope_tol=c.get("slope_tol"), growth_cap=c.get("growth_cap", 1.1), run_id=run_id)
        if name == "gendec":
            return el.check_gendec(diag, float(c["q"]), window=win, time_shift=c.get("time_shift", 0.0),
                                   slope_tol=c.get("slope_tol"), growth_cap=c.get("growth_cap", 1.1), run_id=run_id)
        if name == "daf_tv":
            return el.check_daf_tv(diag, window=win or (0.5, 50.0), tol=c.get("tol", 5e-2), run_id=run_id)
        if name == "heat_linf":
            return el.check_heat_linf(diag, window=win or (0.5, 50.0), tol=c.get("tol", 5e-2), run_id=run_id)
        if name == "xtau":
            return el.check_xtau(diag, c.get("taus", [1.0, 2.0, 4.0]), tail_window=win, time_shift=c.get("time_shift", 0.0),
                                 growth_cap=c.get("growth_cap", 1.1), run_id=run_id)
        if name == "cigen":
            return el.check_cigen(diag, spec, ratio_cap=c.get("ratio_cap"), run_id=run_id)
        if name == "grongen_diag":
            if field0 is None:
                raise ValueError("initial field unavailable")
            return el.check_grongen_diagonal(diag, spec, field0, decades=c.get("decades", 2.0),
                                             per_decade=c.get("per_decade", 5), ratio_cap=c.get("ratio_cap"), run_id=run_id)
    except (ValueError, KeyError) as exc:
        return el.EstimateReport(name, math.nan, math.nan, math.nan, "inconclusive", run_id=run_id,
                                 details={"reason": str(exc)})
    raise ConfigError(f"unknown check {name!r}")


def write_reports(reports, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "reports.json").write_text(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    rows = el.report_rows(reports)
    with open(out_dir / "reports.csv", "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(REPORT_COLUMNS))
        w.writeheader()
        for r in rows:
            w.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in r.items()})


REPORT_COLUMNS = ("run_id", "estimate", "lhs", "rhs", "ratio", "slope", "status", "pass")


def verify_dir(run_dir: Path, names: list[str] | None, window=None) -> tuple[int, list]:
    manifest = json.loads((run_dir / "manifest.json").read_text())
    cfg = ExperimentConfig.from_json(manifest["config"])
    diag = RunDiagnostics.load(run_dir)
    checks = cfg.checks
    if names is not None:
        by_name = {c["estimate"]: c for c in checks}
        checks = []
        for nm in names:
            if nm not in KNOWN_CHECKS:
                raise ConfigError(f"unknown check {nm!r}")
            checks.append(by_name.get(nm, {"estimate": nm}))
        probe = copy.copy(cfg)
        probe.checks = checks
        probe.validate()
    field0 = None
    if any(c["estimate"] == "grongen_diag" for c in checks):
        field0 = initialize(GridSpec.from_json(manifest["grid"]), cfg.data)
    reports = [run_check(diag, cfg.flux, c, cfg.run_id, field0, window) for c in checks]
    write_reports(reports, run_dir)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK
    return code, reports


def cmd_run(args) -> int:
    cfg = load_config(args.config)
    out = _out_root(args.out) / cfg.run_id
    code, manifest = execute(cfg, out)
    if code:
        print(f"{cfg.run_id}: {manifest['status']}: {manifest.get('error', '')}", file=sys.stderr)
    else:
        print(f"{cfg.run_id}: wrote {out}")
    return code


def cmd_verify(args) -> int:
    run_dir = Path(args.run_dir)
    names = None if args.checks is None else [x for x in args.checks.split(",") if x]
    try:
        code, reports = verify_dir(run_dir, names, _parse_window(args.window))
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"cannot verify {run_dir}: {exc}") from exc
    for r in reports:
        slope = "" if r.slope is None else f" slope={r.slope:.6g}"
        print(f"{r.estimate:14s} {r.status:12s} ratio={r.ratio:.6g}{slope}")
    return code


def _floats(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x]


def _print_table(header, rows, out):
    if out:
        with open(out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)
    else:
        print("\t".join(header))
        for r in rows:
            print("\t".join(str(x) for x in r))


def cmd_exact(args) -> int:
    what = args.what
    if what == "constants":
        ex = el.burgers_exponents(args.d)
        rows = [(k, str(getattr(ex, k))) for k in ("gamma", "delta", "kappa", "nu", "theta", "alpha", "beta", "p_star")]
        _print_table(("name", "value"), rows, args.out)
    elif what == "monomial":
        mc = el.monomial_constants([int(x) for x in args.k.split(",")])
        rows = [(k, str(getattr(mc, k))) for k in ("K", "N", "admissible", "theta", "gamma", "delta", "p_star")]
        _print_table(("name", "value"), rows, args.out)
    elif what == "hilbert":
        _print_table(("d", "H_d"), [(args.d, str(hilbert_det(args.d)))], args.out)
    elif what == "n_wave":
        ps = _floats(args.p)
        rows = [[repr(t)] + [repr(n_wave_lp_norm(args.L, t, p)) for p in ps] for t in _floats(args.t)]
        _print_table(["t"] + [f"l{p:g}" for p in ps], rows, args.out)
    elif what == "riemann":
        t = _floats(args.t)[0]
        rows = [(repr(y), repr(float(riemann_burgers_1d(args.uL, args.uR, t, y)))) for y in _floats(args.y)]
        _print_table(("y", "u"), rows, args.out)
    return EXIT_OK


# sweeps

SWEEP_AXES = ("h", "lam", "m", "k")


def sweep_point(base: dict, axis: str, value) -> dict:
    """Config for one sweep point; grids are derived deterministically."""
    cfg = copy.deepcopy(base)
    tag = str(value).replace("/", "_").replace(",", "-")
    cfg["run_id"] = f"{base.get('run_id', 'sweep')}_{axis}{tag}"
    if axis == "h":
        h = float(value)
        g = cfg.get("grid", {"auto": {}})
        if "auto" in g:
            g["auto"] = {**g["auto"], "h": h}
        else:
            gs = GridSpec.from_json(g)
            counts = [int(round(gs.counts[j] * gs.widths[j] / h)) for j in range(gs.n)]
            g = GridSpec(gs.origin, tuple(h for _ in counts), tuple(counts)).to_json()
        cfg["grid"] = g
    elif axis == "lam":
        lam = float(value)
        cfg["data"] = {"type": "rescaled", "base": base["data"], "lam": lam}
        g = cfg.get("grid", {"auto": {}})
        if "auto" in g:
            raise ConfigError("lambda sweeps need an explicit grid (matched scaling)")
        cfg["grid"] = GridSpec.from_json(g).rescaled(lam).to_json()
        s = cfg["solver"]
        s["t_end"] = s["t_end"] / lam
        s["output_times"] = [t / lam for t in s.get("output_times", [])]
    elif axis == "m":
        if "auto" in cfg.get("grid", {"auto": {}}):
            raise ConfigError("truncation sweeps need an explicit grid (fields are compared cell by cell)")
        cfg["data"] = {"type": "truncated", "base": base["data"], "m": float(value)}
        cfg["solver"]["store_snapshots"] = True
    elif axis == "k":
        ks = [int(x) for x in str(value).split("-")]
        cfg["flux"] = {"n": len(ks), "kind": "monomial", "exponents": ks}
    else:
        raise ConfigError(f"unknown sweep axis {axis!r}")
    return cfg


def _sweep_worker(job):
    cfg_json, out_dir = job
    cfg = ExperimentConfig.from_json(cfg_json)
    code, manifest = execute(cfg, Path(out_dir))
    row = {"run_id": cfg.run_id, "status": manifest["status"], "error": manifest.get("error", "")}
    if code == EXIT_OK:
        diag = RunDiagnostics.load(out_dir)
        reports = [run_check(diag, cfg.flux, c, cfg.run_id) for c in cfg.checks]
        write_reports(reports, Path(out_dir))
        row["mass"] = diag.column("mass")[-1]
        row["l1_final"] = float(diag.column("l1")[-1]) if "l1" in diag.series else math.nan
        row["checks"] = {r.estimate: (r.status, r.ratio, r.slope) for r in reports}
        if cfg_json["data"].get("type") == "n_wave" and cfg.flux.n == 1:
            row["oracle_l1_error"] = _n_wave_error(cfg, out_dir)
    return row


def _n_wave_error(cfg: ExperimentConfig, out_dir) -> float:
    f = load_snapshot_last(out_dir)
    if f is None:
        return math.nan
    exact = _cell_average_n_wave(cfg.data.L, f.t, f.grid)
    return float(math.fsum(np.abs(f.values - exact).ravel().tolist()) * f.grid.cell_volume)


def _cell_average_n_wave(L, t, grid: GridSpec) -> np.ndarray:
    """Exact cell averages of the N-wave at time ``t`` (1-D)."""
    edges = grid.origin[0] + grid.widths[0] * np.arange(grid.counts[0] + 1)
    lo, hi = 0.0, L * math.sqrt(1 + t)
    a = np.clip(edges[:-1], lo, hi)
    b = np.clip(edges[1:], lo, hi)
    return (b * b - a * a) / (2 * (1 + t)) / grid.widths[0]


def cmd_sweep(args) -> int:
    try:
        base = json.loads(Path(args.config).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    if args.axis not in SWEEP_AXES:
        raise ConfigError(f"axis must be one of {SWEEP_AXES}")
    values = [v for v in args.values.split(",") if v] if args.axis != "k" else [v for v in args.values.split(";") if v]
    if args.axis == "h":
        values = [str(float(Fraction(v))) for v in values]
    if args.axis in ("h", "m"):
        base.setdefault("solver", {})["store_snapshots"] = True
    points = [sweep_point(base, args.axis, v) for v in values]
    for p in points:
        ExperimentConfig.from_json(p)
    root = _out_root(args.out) / f"{base.get('run_id', 'sweep')}_sweep_{args.axis}"
    jobs = [(p, str(root / p["run_id"])) for p in points]
    if args.threads > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as ex:
            rows = list(ex.map(_sweep_worker, jobs))
    else:
        rows = [_sweep_worker(j) for j in jobs]
    summary = aggregate_sweep(args.axis, values, rows, [j[1] for j in jobs])
    root.mkdir(parents=True, exist_ok=True)
    with open(root / "sweep.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SWEEP_COLUMNS)
        for r in summary["rows"]:
            w.writerow([_fmt(r.get(c, "")) for c in SWEEP_COLUMNS])
    (root / "sweep_summary.json").write_text(json.dumps(
        {k: v for k, v in summary.items() if k != "rows"}, indent=2, sort_keys=True, default=str))
    for r in summary["rows"]:
        print(f"{r['value']:>12} {r['status']:12s} {_fmt(r.get('metric', ''))}")
    if "order" in summary:
        print(f"orders: {summary['order']}")
    return EXIT_ABORT if any(r["status"] != "ok" for r in rows) else EXIT_OK


SWEEP_COLUMNS = ("index", "value", "run_id", "status", "mass", "l1_final", "metric", "order", "checks", "error")


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, default=str)
    return v


def aggregate_sweep(axis: str, values, rows, dirs) -> dict:
    """Per-point metric and pairwise orders, in sweep order.

    ``h``: L1 error against the N-wave oracle when available, else the L1
    difference of successive solutions; ``m``: ``||u_m - u_next||_1`` at the
    final time; ``lam``: the estfond ratio.
    """
    out_rows = []
    metrics = []
    for i, (v, r) in enumerate(zip(values, rows)):
        row = {"index": i, "value": v, **{k: r.get(k, "") for k in ("run_id", "status", "mass", "l1_final", "error")}}
        row["checks"] = r.get("checks", {})
        metric = math.nan
        if r["status"] == "ok":
            if axis == "h" and "oracle_l1_error" in r:
                metric = r["oracle_l1_error"]
            elif axis == "lam":
                metric = r.get("checks", {}).get("estfond", (None, math.nan))[1]
        metrics.append(metric)
        out_rows.append(row)
    if axis == "m" or (axis == "h" and all(math.isnan(m) for m in metrics)):
        fields = [load_snapshot_last(d) for d in dirs]
        metrics = []
        for a, b in zip(fields, fields[1:]):
            if a is None or b is None or a.grid != b.grid:
                metrics.append(math.nan)
            else:
                metrics.append(math.fsum(np.abs(a.values - b.values).ravel().tolist()) * a.grid.cell_volume)
        metrics.append(math.nan)
    summary = {"axis": axis, "values": list(values)}
    for row, m in zip(out_rows, metrics):
        row["metric"] = m
    if axis == "h":
        hs = [float(v) for v in values]
        orders = [
            math.log(metrics[i] / metrics[i + 1]) / math.log(hs[i] / hs[i + 1])
            if metrics[i] > 0 and metrics[i + 1] > 0 else math.nan
            for i in range(len(hs) - 1)
        ]
        for row, o in zip(out_rows, orders):
            row["order"] = o
        summary["order"] = orders
    if axis == "lam":
        good = [m for m in metrics if math.isfinite(m)]
        if good:
            summary["ratio_spread"] = (max(good) - min(good)) / max(good)
    if axis == "m":
        good = [m for m in metrics if math.isfinite(m)]
        summary["decreasing"] = len(good) >= 2 and all(b < a for a, b in zip(good, good[1:]))
    summary["rows"] = out_rows
    return summary


def load_snapshot_last(run_dir) -> object:
    snaps = sorted(Path(run_dir, "snapshots").glob("snap_*.npz"))
    return load_snapshot(snaps[-1]) if snaps else None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="burgerslab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run one experiment")
    p.add_argument("--config", required=True)
    p.add_argument("--out", help=f"output root (default ${OUT_ENV} or ./{DEFAULT_OUT})")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("verify", help="evaluate estimate checks on a stored run")
    p.add_argument("run_dir")
    p.add_argument("--checks", help="comma-separated check names (default: those in the config)")
    p.add_argument("--window", help="fit/evaluation window T0:T1")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("exact", help="print closed-form values")
    p.add_argument("what", choices=("constants", "monomial", "hilbert", "n_wave", "riemann"))
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--k", default="2,3")
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--t", default="0,1,3")
    p.add_argument("--p", default="1,2,4")
    p.add_argument("--uL", type=float, default=1.0)
    p.add_argument("--uR", type=float, default=0.0)
    p.add_argument("--y", default="-1,0,0.25,0.5,1")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("sweep", help="run a config template over one parameter axis")
    p.add_argument("--config", required=True)
    p.add_argument("--axis", required=True, choices=SWEEP_AXES)
    p.add_argument("--values", required=True, help="comma-separated values (k axis: '2-3;2-4')")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SolverError as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return EXIT_ABORT
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

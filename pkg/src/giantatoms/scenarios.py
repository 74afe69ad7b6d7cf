"""
Scenario configs, figure presets, parameter sweeps and their text outputs.

A scenario is one geometry + one set of physical parameters + one run mode
(``evolve``, ``steady`` or ``sweep``). All energies are in units of the
resonator hopping ``xi`` (fixed to 1). Config files are INI-style::

    [geometry]
    flavor = giant
    num_A = 1
    num_B = 1
    t_A = 1
    t_B = 3

    [physics]
    g = 0.05
    eta = 0.002

    [run]
    mode = sweep
    axis = detuning
    axis_unit = J
    start = -3
    stop = 3
    points = 121
    metrics = concurrence
"""
from __future__ import annotations

import configparser
import csv
import dataclasses
import io
import json
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .coefficients import assemble_model, coefficient_rows
from .dynamics import (InvariantViolation, NoUniqueSteadyState, all_excited, evolve, ground,
                       steady_state, uniform_grid)
from .geometry import ArrayGeometry, GeometryError, build_giant_array, build_small_array
from .liouvillian import DriveSpec, liouvillian
from .observables import (basis_labels, excited_average, pair_concurrence, partial_trace,
                          populations, tomography)

MODES = ("evolve", "steady", "sweep")
AXES = ("detuning", "eta", "phi", "g")
BASE_METRICS = ("pe", "populations", "concurrence", "purity")
SIG_DIGITS = 12


class ConfigError(ValueError):
    pass


@dataclass
class GeometryConfig:
    flavor: str = "giant"
    num_A: int = 1
    num_B: int = 1
    t_A: int | None = None
    t_B: int | None = None
    t_I: int = 1
    t_J: int = 1

    def build(self) -> ArrayGeometry:
        try:
            if self.flavor == "giant":
                return build_giant_array(self.num_A, self.num_B, self.t_A, self.t_B,
                                         self.t_I, self.t_J)
            return build_small_array(self.num_A, self.num_B, self.t_I, self.t_J)
        except GeometryError as exc:
            raise ConfigError(f"[geometry] {exc}") from exc


@dataclass
class PhysicsConfig:
    g: float = 0.05
    f: float | None = None
    detuning: float = 0.0
    eta: float = 0.0
    phi: float = 0.0
    xi: float = 1.0

    @property
    def f_value(self) -> float:
        return self.g if self.f is None else self.f

    @property
    def J(self) -> float:
        return self.g ** 2 / self.xi


@dataclass
class RunConfig:
    mode: str = "steady"
    t_final: float = 100.0
    dt: float = 0.05
    sample_every: int = 1
    axis: str | None = None
    axis_unit: str = "xi"
    start: float | None = None
    stop: float | None = None
    points: int | None = None
    metrics: tuple[str, ...] = ("pe", "populations", "concurrence")
    initial_state: str = "all_excited"
    initial_state_file: str | None = None


@dataclass
class ScenarioConfig:
    name: str = "scenario"
    geometry: GeometryConfig = field(default_factory=GeometryConfig)
    physics: PhysicsConfig = field(default_factory=PhysicsConfig)
    run: RunConfig = field(default_factory=RunConfig)
    output: str = "out"

    def axis_values(self) -> np.ndarray:
        run = self.run
        scale = self.physics.J if run.axis_unit == "J" else 1.0
        return np.linspace(run.start * scale, run.stop * scale, run.points)

    def to_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["run"]["metrics"] = list(self.run.metrics)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ScenarioConfig":
        try:
            run = dict(d["run"])
            run["metrics"] = tuple(run["metrics"])
            cfg = cls(name=d["name"],
                      geometry=GeometryConfig(**d["geometry"]),
                      physics=PhysicsConfig(**d["physics"]),
                      run=RunConfig(**run),
                      output=d.get("output", "out"))
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"malformed config mapping: {exc}") from exc
        validate(cfg)
        return cfg


_SECTIONS = {
    "geometry": GeometryConfig,
    "physics": PhysicsConfig,
    "run": RunConfig,
}
_SCENARIO_KEYS = ("name", "output")


def _field_types(cls) -> dict[str, str]:
    return {f.name: str(f.type) for f in dataclasses.fields(cls)}


def _coerce(section: str, key: str, raw: str, where: str):
    kind = _field_types(_SECTIONS[section])[key]
    raw = raw.strip()
    if key == "metrics":
        return tuple(m.strip() for m in raw.split(",") if m.strip())
    if "None" in kind and raw.lower() in ("", "none"):
        return None
    try:
        if kind.startswith("int"):
            value = float(raw)
            if value != int(value):
                raise ValueError
            return int(value)
        if kind.startswith("float"):
            return _parse_float(raw)
    except ValueError:
        expected = "an integer" if kind.startswith("int") else "a number"
        raise ConfigError(f"{where}: [{section}] {key} = {raw!r} is not {expected}") from None
    return raw


def _parse_float(raw: str) -> float:
    """Numbers, optionally with ``pi`` factors such as ``2*pi`` or ``pi/2``."""
    text = raw.replace(" ", "").lower()
    if re.fullmatch(r"[0-9.e+\-*/]*pi[0-9.e+\-*/]*", text):
        try:
            value = eval(text.replace("pi", repr(math.pi)), {"__builtins__": {}})  # noqa: S307
        except Exception:
            raise ValueError(raw) from None
        return float(value)
    return float(text)


def _line_numbers(text: str) -> dict[tuple[str, str], int]:
    lines = {}
    section = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        m = re.fullmatch(r"\[([^\]]+)\]", stripped)
        if m:
            section = m.group(1).strip()
        elif section and "=" in stripped and not stripped.startswith(("#", ";")):
            lines[(section, stripped.split("=", 1)[0].strip())] = lineno
    return lines


def parse_config(text: str, source: str = "<config>") -> ScenarioConfig:
    """Parse and validate an INI-style scenario config."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    lines = _line_numbers(text)
    cfg = ScenarioConfig()
    for section in parser.sections():
        if section == "scenario":
            for key, raw in parser.items(section):
                if key not in _SCENARIO_KEYS:
                    raise ConfigError(f"{source}:{lines.get((section, key), '?')}: "
                                      f"unknown key {key!r} in [scenario]")
                setattr(cfg, key, raw.strip())
            continue
        if section not in _SECTIONS:
            raise ConfigError(f"{source}: unknown section [{section}]")
        target = getattr(cfg, section)
        known = _field_types(_SECTIONS[section])
        for key, raw in parser.items(section):
            where = f"{source}:{lines.get((section, key), '?')}"
            if key not in known:
                raise ConfigError(f"{where}: unknown key {key!r} in [{section}]")
            setattr(target, key, _coerce(section, key, raw, where))
    if not parser.has_section("geometry"):
        raise ConfigError(f"{source}: missing [geometry] section")
    if not parser.has_option("physics", "g"):
        raise ConfigError(f"{source}: missing required key 'g' in [physics]")
    validate(cfg)
    return cfg


def validate(cfg: ScenarioConfig) -> None:
    geo, phys, run = cfg.geometry, cfg.physics, cfg.run
    if geo.flavor not in ("giant", "small"):
        raise ConfigError(f"[geometry] flavor must be 'giant' or 'small', got {geo.flavor!r}")
    if geo.flavor == "giant" and (geo.t_A is None or geo.t_B is None):
        raise ConfigError("[geometry] giant arrays need t_A and t_B")
    if geo.flavor == "small" and (geo.t_A is not None or geo.t_B is not None):
        raise ConfigError("[geometry] small atoms have no size; drop t_A/t_B")
    geo.build()
    if phys.xi != 1.0:
        raise ConfigError("[physics] energies are in units of xi; xi must be 1")
    for name in ("g", "eta"):
        if getattr(phys, name) < 0:
            raise ConfigError(f"[physics] {name} must be non-negative")
    if phys.f is not None and phys.f < 0:
        raise ConfigError("[physics] f must be non-negative")
    if run.mode not in MODES:
        raise ConfigError(f"[run] mode must be one of {MODES}, got {run.mode!r}")
    if run.dt <= 0 or run.t_final < 0 or run.sample_every < 1:
        raise ConfigError("[run] need dt > 0, t_final >= 0, sample_every >= 1")
    if run.axis_unit not in ("xi", "J"):
        raise ConfigError("[run] axis_unit must be 'xi' or 'J'")
    if run.mode == "sweep":
        if run.axis not in AXES:
            raise ConfigError(f"[run] sweep axis must be one of {AXES}, got {run.axis!r}")
        if run.start is None or run.stop is None or run.points is None:
            raise ConfigError("[run] sweeps need start, stop and points")
        if run.points < 2 or run.start == run.stop:
            raise ConfigError("[run] sweep range is degenerate")
        if run.axis in ("eta", "g") and min(run.start, run.stop) < 0:
            raise ConfigError(f"[run] {run.axis} sweep must stay non-negative")
    if run.initial_state not in ("all_excited", "ground", "file"):
        raise ConfigError("[run] initial_state must be all_excited, ground or file")
    if run.initial_state == "file" and not run.initial_state_file:
        raise ConfigError("[run] initial_state = file needs initial_state_file")
    n = geo.build().n_atoms
    for metric in run.metrics:
        _check_metric(metric, n)


def _check_metric(metric: str, n_atoms: int) -> None:
    if metric in BASE_METRICS:
        if metric == "concurrence" and n_atoms < 2:
            raise ConfigError("[run] concurrence needs at least two atoms")
        return
    if metric.startswith("coherence:") and metric.count("/") == 1:
        return
    raise ConfigError(f"[run] unknown metric {metric!r}")


def apply_overrides(cfg: ScenarioConfig, overrides) -> ScenarioConfig:
    """
    Return a copy with ``key=value`` overrides applied. Keys are either
    ``section.key`` or a bare key that names a unique field.
    """
    cfg = ScenarioConfig.from_dict(cfg.to_dict()) if overrides else cfg
    for item in overrides or ():
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not key=value")
        key, raw = (s.strip() for s in item.split("=", 1))
        if "." in key:
            section, key = key.split(".", 1)
        else:
            owners = [s for s, cls in _SECTIONS.items() if key in _field_types(cls)]
            if key in _SCENARIO_KEYS:
                owners.append("scenario")
            if len(owners) != 1:
                raise ConfigError(f"override key {key!r} is unknown or ambiguous")
            section = owners[0]
        if section == "scenario":
            if key not in _SCENARIO_KEYS:
                raise ConfigError(f"unknown key {key!r} in [scenario]")
            setattr(cfg, key, raw)
            continue
        if section not in _SECTIONS or key not in _field_types(_SECTIONS[section]):
            raise ConfigError(f"unknown override key {section}.{key}")
        setattr(getattr(cfg, section), key, _coerce(section, key, raw, "override"))
    validate(cfg)
    return cfg


# ---------------------------------------------------------------- metrics

def metric_columns(metrics, labels) -> list[str]:
    cols = []
    n = len(labels)
    for metric in metrics:
        if metric == "pe":
            cols.append("P_e")
        elif metric == "purity":
            cols.append("purity")
        elif metric == "populations":
            cols += [f"pop_{b}" for b in basis_labels(labels)]
        elif metric == "concurrence":
            cols += [f"C_{labels[i]}{labels[j]}" for i in range(n) for j in range(i + 1, n)]
        else:
            row, col = metric.split(":", 1)[1].split("/")
            cols.append(f"coh[{row}|{col}]")
    return cols


def evaluate_metrics(rho: np.ndarray, metrics, labels) -> list[float]:
    values: list[float] = []
    n = len(labels)
    basis = basis_labels(labels)
    for metric in metrics:
        if metric == "pe":
            values.append(excited_average(rho))
        elif metric == "purity":
            values.append(float(np.real(np.einsum("ij,ji->", rho, rho))))
        elif metric == "populations":
            values += list(populations(rho))
        elif metric == "concurrence":
            values += [pair_concurrence(rho, i, j) for i in range(n) for j in range(i + 1, n)]
        else:
            row, col = metric.split(":", 1)[1].split("/")
            try:
                values.append(float(abs(rho[basis.index(row), basis.index(col)])))
            except ValueError:
                raise ConfigError(f"coherence labels {row}/{col} not in basis {basis}") from None
    return values


# ---------------------------------------------------------------- runs

@dataclass
class SweepResult:
    axis: str
    values: np.ndarray
    columns: list[str]
    rows: list[list]
    status: list[str]

    def column(self, name: str) -> np.ndarray:
        k = self.columns.index(name)
        return np.array([np.nan if r[k] is None else r[k] for r in self.rows], dtype=float)

    @property
    def header(self) -> list[str]:
        return [self.axis, "status"] + self.columns

    def records(self) -> list[list]:
        return [[v, s] + r for v, s, r in zip(self.values, self.status, self.rows)]


@dataclass
class EvolveResult:
    times: np.ndarray
    columns: list[str]
    rows: list[list]
    final_state: np.ndarray
    labels: tuple[str, ...]

    @property
    def header(self) -> list[str]:
        return ["time"] + self.columns

    def records(self) -> list[list]:
        return [[t] + r for t, r in zip(self.times, self.rows)]


@dataclass
class SteadyResult:
    state: np.ndarray | None
    columns: list[str]
    values: list | None
    status: str
    labels: tuple[str, ...]
    detail: str = ""


def _drive(phys: PhysicsConfig) -> DriveSpec:
    return DriveSpec(phys.eta, phys.phi, phys.detuning)


def initial_state(cfg: ScenarioConfig, n_atoms: int) -> np.ndarray:
    kind = cfg.run.initial_state
    if kind == "all_excited":
        return all_excited(n_atoms)
    if kind == "ground":
        return ground(n_atoms)
    rho = read_density_json(Path(cfg.run.initial_state_file))
    if rho.shape != (2 ** n_atoms, 2 ** n_atoms):
        raise ConfigError(f"initial state file has dimension {rho.shape[0]}, "
                          f"expected {2 ** n_atoms}")
    return rho


def run_evolve(cfg: ScenarioConfig) -> EvolveResult:
    geom = cfg.geometry.build()
    model = assemble_model(geom, cfg.physics.g, cfg.physics.f_value, cfg.physics.xi)
    gen = liouvillian(model, _drive(cfg.physics))
    times = uniform_grid(cfg.run.t_final, cfg.run.dt)
    traj = evolve(gen, initial_state(cfg, geom.n_atoms), times)
    labels = geom.labels
    keep = slice(None, None, cfg.run.sample_every)
    rows = [evaluate_metrics(rho, cfg.run.metrics, labels) for rho in traj.states[keep]]
    return EvolveResult(traj.times[keep], metric_columns(cfg.run.metrics, labels), rows,
                        traj.final, labels)


def run_steady(cfg: ScenarioConfig) -> SteadyResult:
    geom = cfg.geometry.build()
    model = assemble_model(geom, cfg.physics.g, cfg.physics.f_value, cfg.physics.xi)
    gen = liouvillian(model, _drive(cfg.physics))
    cols = metric_columns(cfg.run.metrics, geom.labels)
    try:
        rho = steady_state(gen)
    except NoUniqueSteadyState as exc:
        return SteadyResult(None, cols, None, "no_unique_steady_state", geom.labels, str(exc))
    return SteadyResult(rho, cols, evaluate_metrics(rho, cfg.run.metrics, geom.labels),
                        "ok", geom.labels)


def _sweep_point(cfg: ScenarioConfig, geom: ArrayGeometry, value: float):
    phys = dataclasses.replace(cfg.physics)
    if cfg.run.axis == "g":
        phys.g = value
        phys.f = value
    else:
        setattr(phys, cfg.run.axis, value)
    model = assemble_model(geom, phys.g, phys.f_value, phys.xi)
    gen = liouvillian(model, _drive(phys))
    try:
        rho = steady_state(gen)
    except NoUniqueSteadyState:
        return "no_unique_steady_state", None
    except InvariantViolation:
        return "invariant_violation", None
    return "ok", evaluate_metrics(rho, cfg.run.metrics, geom.labels)


def sweep(cfg: ScenarioConfig, threads: int = 1) -> SweepResult:
    """
    Steady-state metrics along one parameter axis.

    Points without a unique steady state keep empty metric cells and a
    status flag; rows stay in axis order whatever the thread count.
    """
    if cfg.run.mode != "sweep":
        raise ConfigError("sweep() needs run.mode = sweep")
    geom = cfg.geometry.build()
    values = cfg.axis_values()
    cols = metric_columns(cfg.run.metrics, geom.labels)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda v: _sweep_point(cfg, geom, v), values))
    else:
        results = [_sweep_point(cfg, geom, v) for v in values]
    rows = [r if r is not None else [None] * len(cols) for _, r in results]
    return SweepResult(cfg.run.axis, values, cols, rows, [s for s, _ in results])


# ---------------------------------------------------------------- output

def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if value == 0:
            return "0"
        return format(value, f".{SIG_DIGITS}g")
    return str(value)


def csv_text(header, records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow([fmt(v) for v in rec])
    return buf.getvalue()


def density_json(rho: np.ndarray, labels=None) -> dict:
    d = rho.shape[0]
    out = {"dim": d}
    if labels is not None:
        out["basis"] = basis_labels(labels)
    out["entries"] = [{"row": i, "col": j,
                       "re": float(fmt(rho[i, j].real)), "im": float(fmt(rho[i, j].imag))}
                      for i in range(d) for j in range(d)]
    return out


def read_density_json(path: Path) -> np.ndarray:
    try:
        data = json.loads(Path(path).read_text())
        d = int(data["dim"])
        rho = np.zeros((d, d), dtype=complex)
        for e in data["entries"]:
            rho[e["row"], e["col"]] = complex(e["re"], e["im"])
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise ConfigError(f"cannot read density matrix from {path}: {exc}") from exc
    return rho


def tomography_csv(rho: np.ndarray, labels) -> str:
    table = tomography(rho, labels)
    return csv_text(["row_label", "col_label", "re", "im"], table.rows())


def manifest(cfg: ScenarioConfig, outputs: list[str], status: str = "ok", **extra) -> dict:
    return {"tool": "giantatoms", "version": __version__, "config": cfg.to_dict(),
            "outputs": outputs, "status": status, **extra}


def load_manifest(path) -> ScenarioConfig:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise ConfigError(f"cannot read manifest {path}: {exc}") from exc
    if "config" not in data:
        raise ConfigError(f"{path} is not a run manifest")
    return ScenarioConfig.from_dict(data["config"])


def load_config(path) -> ScenarioConfig:
    """Read an INI config, or a JSON run manifest to replay a previous run."""
    path = Path(path)
    if path.suffix == ".json":
        return load_manifest(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, source=str(path))


def _write(path: Path, text: str) -> str:
    path.write_text(text, encoding="utf-8")
    return path.name


def write_coefficients(cfg: ScenarioConfig, out_dir: Path) -> list[str]:
    geom = cfg.geometry.build()
    model = assemble_model(geom, cfg.physics.g, cfg.physics.f_value, cfg.physics.xi)
    rows = coefficient_rows(model)
    header = ["n", "m", "re_2xiA", "im_2xiA", "h_over_J", "gamma_over_J"]
    out_dir.mkdir(parents=True, exist_ok=True)
    name = _write(out_dir / f"{cfg.name}_coeffs.csv",
                  csv_text(header, [[r[k] for k in header] for r in rows]))
    _write(out_dir / f"{cfg.name}_coeffs.manifest.json",
           json.dumps(manifest(cfg, [name], case=_case_label(geom)), indent=2) + "\n")
    return [name]


def _case_label(geom: ArrayGeometry) -> str | None:
    return geom.case().value if geom.t_A is not None else None


def run_scenario(cfg: ScenarioConfig, out_dir=None, threads: int = 1):
    """
    Run ``cfg`` in its configured mode and write CSV/JSON outputs plus a
    manifest to ``out_dir`` (defaults to ``cfg.output``).

    Returns ``(result, manifest_dict)``.
    """
    out = Path(out_dir if out_dir is not None else cfg.output)
    out.mkdir(parents=True, exist_ok=True)
    mode = cfg.run.mode
    outputs: list[str] = []
    status = "ok"
    extra = {}
    if mode == "evolve":
        result = run_evolve(cfg)
        outputs.append(_write(out / f"{cfg.name}.csv", csv_text(result.header, result.records())))
        outputs.append(_write(out / f"{cfg.name}_final_state.json",
                              json.dumps(density_json(result.final_state, result.labels),
                                         indent=1) + "\n"))
        outputs.append(_write(out / f"{cfg.name}_final_tomography.csv",
                              tomography_csv(result.final_state, result.labels)))
    elif mode == "steady":
        result = run_steady(cfg)
        status = result.status
        if result.state is not None:
            outputs.append(_write(out / f"{cfg.name}.csv",
                                  csv_text(result.columns, [result.values])))
            outputs.append(_write(out / f"{cfg.name}_steady_state.json",
                                  json.dumps(density_json(result.state, result.labels),
                                             indent=1) + "\n"))
            outputs.append(_write(out / f"{cfg.name}_tomography.csv",
                                  tomography_csv(result.state, result.labels)))
            for i, lab in enumerate(result.labels):
                if len(result.labels) > 1:
                    outputs.append(_write(
                        out / f"{cfg.name}_tomography_{lab}.csv",
                        tomography_csv(partial_trace(result.state, [i]), [lab])))
        else:
            extra["detail"] = result.detail
    else:
        result = sweep(cfg, threads=threads)
        outputs.append(_write(out / f"{cfg.name}.csv", csv_text(result.header, result.records())))
        bad = sum(s != "ok" for s in result.status)
        if bad:
            extra["points_without_steady_state"] = bad
    geom = cfg.geometry.build()
    man = manifest(cfg, outputs, status, case=_case_label(geom), **extra)
    _write(out / f"{cfg.name}.manifest.json", json.dumps(man, indent=2) + "\n")
    return result, man


# ---------------------------------------------------------------- presets

def _giant(num_A, num_B, t_A, t_B):
    return GeometryConfig("giant", num_A, num_B, t_A, t_B, 1, 1)


def _small(num_a, num_b, t_j):
    return GeometryConfig("small", num_a, num_b, None, None, 1, t_j)


# canonical representatives: Case I/II/III = t_B 2/3/4 with t_A = 1;
# small Case I/II = t_j 2/3 with t_i = 1
_TWO_GIANT = {"caseII": _giant(1, 1, 1, 3), "caseIII": _giant(1, 1, 1, 4)}
_THREE_GIANT = {"caseII": _giant(2, 1, 1, 3), "caseIII": _giant(2, 1, 1, 4)}
_TWO_SMALL = {"small_caseI": _small(1, 1, 2), "small_caseII": _small(1, 1, 3)}
_THREE_SMALL = {"small_caseI": _small(2, 1, 2), "small_caseII": _small(2, 1, 3)}


def _sweep_cfg(name, geo, g, axis, start, stop, points, unit="xi", **phys):
    run = RunConfig(mode="sweep", axis=axis, axis_unit=unit, start=start, stop=stop,
                    points=points, metrics=("concurrence",))
    return ScenarioConfig(name, dataclasses.replace(geo), PhysicsConfig(g=g, **phys), run)


def _fig3():
    run = RunConfig(mode="evolve", t_final=650.0, dt=0.05,
                    metrics=("pe", "populations", "coherence:e_Ag_B/e_Ae_B"))
    return [ScenarioConfig("fig3_caseI", _giant(1, 1, 1, 2),
                           PhysicsConfig(g=0.08, eta=0.2), run)]


def _fig4():
    out = []
    for case, geo in _TWO_GIANT.items():
        phys = PhysicsConfig(g=0.08, eta=0.2)
        out.append(ScenarioConfig(f"fig4_{case}_evolve", dataclasses.replace(geo), phys,
                                  RunConfig(mode="evolve", t_final=1000.0, dt=0.05,
                                            sample_every=10, metrics=("pe", "populations"))))
        out.append(ScenarioConfig(f"fig4_{case}_steady", dataclasses.replace(geo),
                                  dataclasses.replace(phys),
                                  RunConfig(mode="steady", metrics=("pe", "populations",
                                                                    "concurrence"))))
    return out


def _fig5():
    # detuning axis: atom minus drive frequency in the rotating frame
    return [_sweep_cfg(f"fig5_{case}_eta{eta:g}", geo, 0.05, "detuning", -3.0, 3.0, 121,
                       unit="J", eta=eta)
            for case, geo in _TWO_GIANT.items() for eta in (0.002, 0.004)]


def _eta_sweeps(geos):
    return [_sweep_cfg(f"fig6_{case}", geo, 0.05, "eta", 0.0, 10.0, 101, unit="J")
            for case, geo in geos.items()]


def _phi_sweeps(prefix, geos, g):
    return [_sweep_cfg(f"{prefix}_{case}", geo, g, "phi", 0.0, 2 * math.pi, 73, eta=0.002)
            for case, geo in geos.items()]


PRESETS = {
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
    "fig6": lambda: _eta_sweeps({**_THREE_GIANT, **_THREE_SMALL}),
    "fig7": lambda: _phi_sweeps("fig7", {**_TWO_GIANT, **_TWO_SMALL}, 0.06),
    "fig8": lambda: _phi_sweeps("fig8", {**_THREE_GIANT, **_THREE_SMALL}, 0.08),
    "figB6_small": lambda: _eta_sweeps(_THREE_SMALL),
    "figB7_small": lambda: _phi_sweeps("fig7", _TWO_SMALL, 0.06),
    "figB8_small": lambda: _phi_sweeps("fig8", _THREE_SMALL, 0.08),
}


def preset_configs(name: str, overrides=()) -> list[ScenarioConfig]:
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}")
    configs = PRESETS[name]()
    for cfg in configs:
        validate(cfg)
    return [apply_overrides(cfg, overrides) for cfg in configs]


def run_preset(name: str, out_dir, overrides=(), threads: int = 1) -> dict:
    """Run every scenario of a preset; returns ``{scenario name: result}``."""
    out = Path(out_dir)
    results = {}
    index = []
    for cfg in preset_configs(name, overrides):
        result, man = run_scenario(cfg, out, threads=threads)
        results[cfg.name] = result
        index.append({"scenario": cfg.name, "manifest": f"{cfg.name}.manifest.json",
                      "status": man["status"]})
    _write(out / f"{name}.preset.json",
           json.dumps({"preset": name, "overrides": list(overrides), "scenarios": index},
                      indent=2) + "\n")
    return results

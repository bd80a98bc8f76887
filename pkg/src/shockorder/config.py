"""Flat key-value scenario files.

One ``key = value`` per line, ``#`` starts a comment, dotted prefixes group
related keys. Parsing is strict: unknown or repeated keys are errors, and
every error names the key and line. Example::

    structure = parallel
    family.kind = exponential_mean
    gen_x.family = amh
    gen_x.theta = 0.2
    gen_y.family = amh
    gen_y.theta = 0.75
    alpha = 10, 3, 1
    beta = 3, 2, 1
    shocks = 0.8, 0.3, 0.2
    grid.points = 512
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import generators as g
from . import lifetimes as lt
from . import theorems as th
from .errors import ConfigError, DomainError
from .system import Structure

REQUIRED = (
    "structure", "family.kind", "gen_x.family", "gen_x.theta",
    "gen_y.family", "gen_y.theta", "alpha", "beta", "shocks",
)
OPTIONAL = (
    "family.shape", "grid.x_min", "grid.x_max", "grid.points", "grid.spacing",
    "tol.order", "tol.additivity", "tol.finite_difference", "mc.samples", "mc.seed",
)

DEFAULT_SAMPLES = 100_000
DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class GridSpec:
    x_min: Optional[float] = None
    x_max: Optional[float] = None
    points: int = 512
    spacing: str = "log"

    def resolve(self, scn: th.Scenario) -> np.ndarray:
        lo, hi = self.x_min, self.x_max
        if lo is None or hi is None:
            auto = th.default_grid(scn, 2)
            lo = auto[0] if lo is None else lo
            hi = auto[-1] if hi is None else hi
        if self.spacing == "log":
            return np.geomspace(lo, hi, self.points)
        return np.linspace(lo, hi, self.points)


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: th.Scenario
    grid: GridSpec = field(default_factory=GridSpec)
    order_tol: float = 1e-10
    tolerances: th.Tolerances = field(default_factory=th.Tolerances)
    mc_samples: int = DEFAULT_SAMPLES
    mc_seed: int = DEFAULT_SEED


def _floats(text):
    return [float(v) for v in text.replace(",", " ").split()]


def parse(text: str) -> ScenarioConfig:
    raw, lines = {}, {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in REQUIRED and key not in OPTIONAL:
            raise ConfigError("unknown key", lineno, key)
        if key in raw:
            raise ConfigError(f"duplicate key (first set on line {lines[key]})", lineno, key)
        if not value:
            raise ConfigError("empty value", lineno, key)
        raw[key], lines[key] = value, lineno
    for key in REQUIRED:
        if key not in raw:
            raise ConfigError("missing required key", key=key)

    def get(key, conv, default=None):
        if key not in raw:
            return default
        try:
            return conv(raw[key])
        except (ValueError, DomainError) as exc:
            raise ConfigError(str(exc), lines[key], key) from None

    def vector(key):
        v = get(key, _floats)
        if not v:
            raise ConfigError("empty vector", lines[key], key)
        for i, x in enumerate(v):
            if key == "shocks" and not 0 < x <= 1:
                raise ConfigError(f"{key}[{i}] outside (0,1]", lines[key], key)
            if key != "shocks" and not (np.isfinite(x) and x > 0):
                raise ConfigError(f"{key}[{i}] must be > 0", lines[key], key)
        return v

    def gen(prefix):
        fam = get(f"{prefix}.family", g.Family)
        theta = get(f"{prefix}.theta", float)
        try:
            return g.ArchimedeanGenerator(fam, theta)
        except DomainError as exc:
            raise ConfigError(str(exc), lines[f"{prefix}.theta"], f"{prefix}.theta") from None

    structure = get("structure", Structure)
    kind = get("family.kind", lt.SurvivalKind)
    shape = get("family.shape", float)
    try:
        family = lt.SurvivalFamily(kind, shape)
    except DomainError as exc:
        raise ConfigError(str(exc), lines.get("family.shape", lines["family.kind"]), "family") from None
    alpha, beta, shocks = vector("alpha"), vector("beta"), vector("shocks")
    for key, v in (("beta", beta), ("shocks", shocks)):
        if len(v) != len(alpha):
            raise ConfigError(f"length {len(v)} differs from alpha ({len(alpha)})", lines[key], key)
    scn = th.Scenario(gen("gen_x"), gen("gen_y"), family, alpha, beta, shocks, structure)

    spacing = get("grid.spacing", str, "log")
    if spacing not in ("log", "linear"):
        raise ConfigError("spacing must be 'log' or 'linear'", lines["grid.spacing"], "grid.spacing")
    grid = GridSpec(get("grid.x_min", float), get("grid.x_max", float),
                    get("grid.points", int, 512), spacing)
    if grid.points < 2:
        raise ConfigError("need at least 2 points", lines["grid.points"], "grid.points")
    for key, v in (("grid.x_min", grid.x_min), ("grid.x_max", grid.x_max)):
        if v is not None and not v > 0:
            raise ConfigError("must be > 0", lines[key], key)
    if grid.x_min is not None and grid.x_max is not None and grid.x_max <= grid.x_min:
        raise ConfigError("must exceed grid.x_min", lines["grid.x_max"], "grid.x_max")

    tol = th.Tolerances(
        get("tol.additivity", float, th.Tolerances.additivity),
        get("tol.finite_difference", float, th.Tolerances.finite_difference),
    )
    samples = get("mc.samples", int, DEFAULT_SAMPLES)
    if samples < 1:
        raise ConfigError("must be >= 1", lines["mc.samples"], "mc.samples")
    return ScenarioConfig(scn, grid, get("tol.order", float, 1e-10), tol,
                          samples, get("mc.seed", int, DEFAULT_SEED))


def load(path) -> ScenarioConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _vec(v):
    return ", ".join(repr(float(x)) for x in v)


def dump(cfg: ScenarioConfig) -> str:
    s = cfg.scenario
    out = [
        f"structure = {s.structure.value}",
        f"family.kind = {s.family.kind.value}",
    ]
    if s.family.fixed_shape is not None:
        out.append(f"family.shape = {s.family.fixed_shape!r}")
    for name, gen in (("gen_x", s.gen_x), ("gen_y", s.gen_y)):
        out += [f"{name}.family = {gen.family.value}", f"{name}.theta = {gen.theta!r}"]
    out += [f"alpha = {_vec(s.alpha)}", f"beta = {_vec(s.beta)}", f"shocks = {_vec(s.shocks)}"]
    if cfg.grid.x_min is not None:
        out.append(f"grid.x_min = {float(cfg.grid.x_min)!r}")
    if cfg.grid.x_max is not None:
        out.append(f"grid.x_max = {float(cfg.grid.x_max)!r}")
    out += [
        f"grid.points = {cfg.grid.points}",
        f"grid.spacing = {cfg.grid.spacing}",
        f"tol.order = {cfg.order_tol!r}",
        f"tol.additivity = {cfg.tolerances.additivity!r}",
        f"tol.finite_difference = {cfg.tolerances.finite_difference!r}",
        f"mc.samples = {cfg.mc_samples}",
        f"mc.seed = {cfg.mc_seed}",
    ]
    return "\n".join(out) + "\n"

"""Scenario configuration: schema, defaults, TOML parsing, echo files.

Configs are TOML with a top-level ``schema_version`` plus ``scenario``
and ``formulation`` tags and the sections [geometry], [materials],
[interaction], [mesh], [loading], [continuation], [output]. Every key
is optional except ``scenario``; missing keys take the scenario's
defaults below. Unknown keys anywhere are rejected with their full
key path. All defaults are repo-defined dimensionless values, not
taken from any external source.

Geometry convention: the shell occupies [0, shell_length] x
[0, shell_width] at z = 0 with its parameterization chosen so the unit
normal points along +z; the beam must sit on that side (z > 0), which
both scenario builders guarantee.
"""

import dataclasses
import math
import sys
from dataclasses import dataclass, field

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from .laws import LJParams, SurrogateLaw
from .solver import ContinuationConfig

SCHEMA_VERSION = 1
SCENARIOS = ("peeling", "bending")
FORMULATION_CHOICES = ("FF", "RF1", "RF2")


class ConfigError(ValueError):
    """Schema violation; the message names the offending key path."""


@dataclass(frozen=True)
class GeometrySpec:
    """Reference layout. z_init = 0 means: start at the interaction
    law's equilibrium separation (computed from the law).

    beam_offset shifts the beam along the shell's first axis; the
    peeling default deliberately breaks the left/right mirror symmetry
    so the two peeling fronts meet different boundary distances and the
    end reactions differ."""

    beam_length: float = 10.0
    beam_radius: float = 0.1
    beam_offset: float = 0.25
    shell_length: float = 10.0
    shell_width: float = 5.0
    thickness: float = 0.1
    z_init: float = 0.0


@dataclass(frozen=True)
class MaterialSpec:
    E_beam: float = 1.0e5
    nu_beam: float = 0.3
    E_shell: float = 1.0e4
    nu_shell: float = 0.3


@dataclass(frozen=True)
class InteractionSpec:
    """Lennard-Jones pair parameters with a strength multiplier s
    that scales the number-density product (both attraction and
    repulsion)."""

    eps: float = 5.0
    sigma: float = 0.5
    strength: float = 1.0


@dataclass(frozen=True)
class MeshSpec:
    """Element counts for the full model; the bending builder halves
    them for its symmetry-reduced quarter/half discretization."""

    n_el_beam: int = 50
    n_el_shell_1: int = 10
    n_el_shell_2: int = 5
    degree: int = 3


@dataclass(frozen=True)
class LoadingSpec:
    """pull_rate: prescribed end displacement u_z = pull_rate * t
    (peeling). moment_turns: end moment sized so a free beam would
    turn by moment_turns full circles at t = 1 (bending)."""

    pull_rate: float = 4.0
    moment_turns: float = 0.75


@dataclass(frozen=True)
class OutputSpec:
    """times: quasi-times for interaction and shell-field snapshots;
    the continuation lands on them exactly."""

    times: tuple = ()


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    formulation: str
    geometry: GeometrySpec
    materials: MaterialSpec
    interaction: InteractionSpec
    mesh: MeshSpec
    loading: LoadingSpec
    continuation: ContinuationConfig
    output: OutputSpec

    def law(self) -> SurrogateLaw:
        return SurrogateLaw(
            R_B=self.geometry.beam_radius, h=self.geometry.thickness,
            beta_B=1.0, beta_S=self.interaction.strength,
            lj=LJParams(eps=self.interaction.eps,
                        sigma=self.interaction.sigma))

    def z_init(self) -> float:
        if self.geometry.z_init > 0.0:
            return self.geometry.z_init
        return self.law().equilibrium_distance()


_CONT_DEFAULTS = {
    "peeling": dict(t_end=0.15, dt=2e-4, dt_min=1e-10, dt_max=2e-3,
                    rel_tol=1e-8, max_iter=20),
    "bending": dict(t_end=1.0, dt=5e-3, dt_min=1e-10, dt_max=2e-2,
                    rel_tol=1e-8, max_iter=20),
}

_SCENARIO_DEFAULTS = {
    "peeling": dict(
        formulation="FF",
        geometry=GeometrySpec(),
        materials=MaterialSpec(),
        interaction=InteractionSpec(),
        mesh=MeshSpec(),
        loading=LoadingSpec(),
    ),
    "bending": dict(
        formulation="RF2",
        geometry=GeometrySpec(beam_offset=0.0, shell_length=12.0,
                              shell_width=12.0),
        materials=MaterialSpec(E_shell=1.0e3),
        interaction=InteractionSpec(strength=10.0),
        mesh=MeshSpec(n_el_beam=100, n_el_shell_1=50, n_el_shell_2=50),
        loading=LoadingSpec(),
    ),
}


def default_config(scenario: str) -> ScenarioConfig:
    if scenario not in SCENARIOS:
        raise ConfigError(
            f"scenario: must be one of {', '.join(SCENARIOS)}, "
            f"got {scenario!r}")
    d = _SCENARIO_DEFAULTS[scenario]
    return ScenarioConfig(
        scenario=scenario, formulation=d["formulation"],
        geometry=d["geometry"], materials=d["materials"],
        interaction=d["interaction"], mesh=d["mesh"],
        loading=d["loading"],
        continuation=ContinuationConfig(**_CONT_DEFAULTS[scenario]),
        output=OutputSpec())


def _coerce(path, value, want):
    if want is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{path}: expected a number, got {value!r}")
        return float(value)
    if want is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{path}: expected an integer, got {value!r}")
        return value
    if want is str:
        if not isinstance(value, str):
            raise ConfigError(f"{path}: expected a string, got {value!r}")
        return value
    raise AssertionError(want)


def _merge_section(name, section, spec):
    if not isinstance(section, dict):
        raise ConfigError(f"{name}: expected a table")
    named = {"float": float, "int": int, "str": str}
    fields = {f.name: f.type if isinstance(f.type, type) else named[f.type]
              for f in dataclasses.fields(spec)}
    out = {}
    for key, value in section.items():
        if key not in fields:
            raise ConfigError(f"{name}.{key}: unknown key")
        out[key] = _coerce(f"{name}.{key}", value, fields[key])
    return dataclasses.replace(spec, **out)


def _positive(path, value):
    if not (value > 0.0) or not math.isfinite(value):
        raise ConfigError(f"{path}: must be positive, got {value!r}")


def _validate(cfg: ScenarioConfig):
    g, m, i, me, lo = (cfg.geometry, cfg.materials, cfg.interaction,
                       cfg.mesh, cfg.loading)
    _positive("geometry.beam_length", g.beam_length)
    _positive("geometry.beam_radius", g.beam_radius)
    _positive("geometry.shell_length", g.shell_length)
    _positive("geometry.shell_width", g.shell_width)
    _positive("geometry.thickness", g.thickness)
    if g.z_init < 0.0:
        raise ConfigError(
            f"geometry.z_init: must be >= 0 (0 selects the equilibrium "
            f"separation), got {g.z_init!r}")
    _positive("materials.E_beam", m.E_beam)
    _positive("materials.E_shell", m.E_shell)
    for path, nu in (("materials.nu_beam", m.nu_beam),
                     ("materials.nu_shell", m.nu_shell)):
        if not (0.0 <= nu < 0.5):
            raise ConfigError(f"{path}: must lie in [0, 0.5), got {nu!r}")
    _positive("interaction.eps", i.eps)
    _positive("interaction.sigma", i.sigma)
    _positive("interaction.strength", i.strength)
    for path, n in (("mesh.n_el_beam", me.n_el_beam),
                    ("mesh.n_el_shell_1", me.n_el_shell_1),
                    ("mesh.n_el_shell_2", me.n_el_shell_2)):
        if n < 1:
            raise ConfigError(f"{path}: must be at least 1, got {n}")
    if not (2 <= me.degree <= 6):
        raise ConfigError(
            f"mesh.degree: must lie in [2, 6], got {me.degree}")
    _positive("loading.pull_rate", lo.pull_rate)
    _positive("loading.moment_turns", lo.moment_turns)
    c = cfg.continuation
    for t in cfg.output.times:
        if not (0.0 < t <= c.t_end):
            raise ConfigError(
                f"output.times: entries must lie in (0, t_end], got {t!r}")


def from_dict(raw: dict) -> ScenarioConfig:
    """Build a validated config from a parsed TOML mapping."""
    raw = dict(raw)
    version = raw.pop("schema_version", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ConfigError(
            f"schema_version: this build reads version {SCHEMA_VERSION}, "
            f"got {version!r}")
    scenario = raw.pop("scenario", None)
    if scenario is None:
        raise ConfigError("scenario: required key is missing")
    cfg = default_config(_coerce("scenario", scenario, str))
    formulation = raw.pop("formulation", cfg.formulation)
    if formulation not in FORMULATION_CHOICES:
        raise ConfigError(
            f"formulation: must be one of "
            f"{', '.join(FORMULATION_CHOICES)}, got {formulation!r}")
    sections = {}
    for name, spec in (("geometry", cfg.geometry),
                       ("materials", cfg.materials),
                       ("interaction", cfg.interaction),
                       ("mesh", cfg.mesh),
                       ("loading", cfg.loading)):
        sections[name] = _merge_section(name, raw.pop(name, {}), spec)
    cont = dict(_CONT_DEFAULTS[cfg.scenario])
    cont_raw = raw.pop("continuation", {})
    if not isinstance(cont_raw, dict):
        raise ConfigError("continuation: expected a table")
    cont_fields = {f.name: f.type for f in
                   dataclasses.fields(ContinuationConfig)}
    for key, value in cont_raw.items():
        if key not in cont_fields:
            raise ConfigError(f"continuation.{key}: unknown key")
        want = int if key in ("max_iter", "fast_iters") else float
        cont[key] = _coerce(f"continuation.{key}", value, want)
    out_raw = raw.pop("output", {})
    if not isinstance(out_raw, dict):
        raise ConfigError("output: expected a table")
    times = ()
    for key, value in out_raw.items():
        if key != "times":
            raise ConfigError(f"output.{key}: unknown key")
        if not isinstance(value, list):
            raise ConfigError("output.times: expected an array of numbers")
        times = tuple(_coerce(f"output.times[{k}]", v, float)
                      for k, v in enumerate(value))
    for key in raw:
        raise ConfigError(f"{key}: unknown key")
    try:
        continuation = ContinuationConfig(**cont)
    except ValueError as e:
        raise ConfigError(f"continuation: {e}") from None
    cfg = ScenarioConfig(
        scenario=cfg.scenario, formulation=formulation,
        geometry=sections["geometry"], materials=sections["materials"],
        interaction=sections["interaction"], mesh=sections["mesh"],
        loading=sections["loading"], continuation=continuation,
        output=OutputSpec(times=tuple(sorted(times))))
    _validate(cfg)
    return cfg


def parse_config(path) -> ScenarioConfig:
    """Read and validate a TOML scenario file."""
    with open(path, "rb") as f:
        try:
            raw = tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"{path}: {e}") from None
    return from_dict(raw)


def _fmt(value):
    if isinstance(value, str):
        return f'"{value}"'
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (tuple, list)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def resolved_toml(cfg: ScenarioConfig) -> str:
    """Render the fully resolved config (defaults filled in) as TOML."""
    lines = [f"schema_version = {SCHEMA_VERSION}",
             f'scenario = "{cfg.scenario}"',
             f'formulation = "{cfg.formulation}"']
    for name in ("geometry", "materials", "interaction", "mesh",
                 "loading", "continuation", "output"):
        lines.append("")
        lines.append(f"[{name}]")
        section = getattr(cfg, name)
        for f in dataclasses.fields(section):
            lines.append(f"{f.name} = {_fmt(getattr(section, f.name))}")
    return "\n".join(lines) + "\n"


def write_echo(cfg: ScenarioConfig, out_dir) -> str:
    """Write the resolved config next to the outputs; returns the path."""
    import os

    path = os.path.join(out_dir, "resolved_config.toml")
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(resolved_toml(cfg))
    return path

"""Declarative game definitions: parse, validate, sample, interpolate, serialize.

A game is defined by a JSON document with the sections below. Any number or
color field may hold a distribution (see params) instead of a literal;
``sample`` resolves all of them for one episode.

The element-backed sections (opponent_settings, ball_settings,
blocks_settings, static_barrier_settings) may be empty ``{}`` only when the
matching game_elements flag is off; they parse to None in that case.
"""
from __future__ import annotations

import copy
import json
import random
from dataclasses import dataclass, field, fields
from typing import Optional

from .params import (
    ColorParam,
    ConfigError,
    InterpolationError,
    NumberParam,
    check_color_param,
    check_number_param,
    color_param_to_json,
    is_static,
    lerp_color_param,
    lerp_number_param,
    number_param_to_json,
    parse_color_param,
    parse_number_param,
    sample_color,
    sample_number,
)

# Gaussian draws for sizes/speeds are clamped here so a sampled entity can
# never be degenerate or larger than the play area.
GEOMETRY_CLAMP = (0.01, 1.0)

ORIENTATIONS = ("bottom", "left")
BEHAVIORS = ("paddle_track", "shooter", "chaser")
BLOCK_MODES = ("static", "weave", "fall")
GOALS = ("cross", "clear_blocks", "defeat_opponent", "survive")
ROTATIONS = (0, 90, 180, 270)

DEFAULT_MAX_STEPS = 8000


@dataclass
class Meta:
    description: str = ""


@dataclass
class Actions:
    up: bool = False
    down: bool = False
    left: bool = False
    right: bool = False
    fire: bool = False


@dataclass
class GameElements:
    top_wall: bool = False
    bottom_wall: bool = False
    ball: bool = False
    opponent: bool = False
    blocks: bool = False
    static_barriers: bool = False


@dataclass
class DisplaySettings:
    background_color: ColorParam = (0, 0, 0)
    ui_color: ColorParam = (80, 80, 80)
    indicator_color_1: ColorParam = (200, 200, 160)
    indicator_color_2: ColorParam = (0, 0, 0)


@dataclass
class PlayerSettings:
    width: NumberParam = 0.15
    height: NumberParam = 0.05
    speed: NumberParam = 0.012
    steering: NumberParam = 0.0
    color: ColorParam = (255, 255, 255)
    orientation: str = "bottom"


@dataclass
class OpponentSettings:
    speed: NumberParam = 0.01
    width: NumberParam = 0.05
    height: NumberParam = 0.15
    color: ColorParam = (255, 255, 255)
    fire_cooldown: NumberParam = 60
    behavior: str = "paddle_track"


@dataclass
class BallSettings:
    speed: NumberParam = 0.01
    radius: NumberParam = 0.02
    color: ColorParam = (255, 255, 255)


@dataclass
class BlocksSettings:
    creation_area: tuple = (0.05, 0.05, 0.9, 0.4)
    rows: NumberParam = 1
    cols: NumberParam = 1
    per_row: NumberParam = 1
    spacing: NumberParam = 0.1
    color: ColorParam = (200, 200, 200)
    static_weave_fall: str = "static"
    speed: NumberParam = 0.0
    harmful: bool = False
    points: NumberParam = 1


@dataclass
class BarrierSettings:
    color: ColorParam = (38, 101, 209)
    layout: tuple = ()  # tuple of (x, y, w, h) rects, normalized


@dataclass
class ImageSettings:
    color_inversion: bool = False
    rotation: int = 0
    hue_shift: NumberParam = 0.0
    saturation_shift: NumberParam = 0.0
    value_shift: NumberParam = 0.0


@dataclass
class Episode:
    max_steps: NumberParam = DEFAULT_MAX_STEPS
    goal: str = "clear_blocks"
    required_count: NumberParam = 20  # survive goal: catches/returns needed to win


@dataclass
class GameConfig:
    meta: Meta = field(default_factory=Meta)
    actions: Actions = field(default_factory=Actions)
    game_elements: GameElements = field(default_factory=GameElements)
    display_settings: DisplaySettings = field(default_factory=DisplaySettings)
    player_settings: PlayerSettings = field(default_factory=PlayerSettings)
    opponent_settings: Optional[OpponentSettings] = None
    ball_settings: Optional[BallSettings] = None
    blocks_settings: Optional[BlocksSettings] = None
    static_barrier_settings: Optional[BarrierSettings] = None
    image_settings: ImageSettings = field(default_factory=ImageSettings)
    episode: Episode = field(default_factory=Episode)
    parse_warnings: list = field(default_factory=list, compare=False, repr=False)


class ConcreteConfig(GameConfig):
    """A GameConfig with every parameter resolved to a static value."""


@dataclass
class ValidationReport:
    ok: bool
    issues: list  # (path, severity, message) triples

    def errors(self) -> list:
        return [i for i in self.issues if i[1] == "error"]

    def __str__(self) -> str:
        if not self.issues:
            return "ok"
        return "\n".join(f"[{sev}] {path}: {msg}" for path, sev, msg in self.issues)


# ---------------------------------------------------------------------------
# Field schema. Drives parsing, validation, sampling, interpolation and
# serialization so the five operations cannot drift apart.
# kinds: text | bool | number | int | color | enum | rect | rects
# ---------------------------------------------------------------------------

#   (section_key, field_name, kind, extra)
# extra: enum choices for "enum", True for geometry-clamped numbers.
FIELD_SCHEMA = (
    ("meta", "description", "text", None),
    ("actions", "up", "bool", None),
    ("actions", "down", "bool", None),
    ("actions", "left", "bool", None),
    ("actions", "right", "bool", None),
    ("actions", "fire", "bool", None),
    ("game_elements", "top_wall", "bool", None),
    ("game_elements", "bottom_wall", "bool", None),
    ("game_elements", "ball", "bool", None),
    ("game_elements", "opponent", "bool", None),
    ("game_elements", "blocks", "bool", None),
    ("game_elements", "static_barriers", "bool", None),
    ("display_settings", "background_color", "color", None),
    ("display_settings", "ui_color", "color", None),
    ("display_settings", "indicator_color_1", "color", None),
    ("display_settings", "indicator_color_2", "color", None),
    ("player_settings", "width", "number", True),
    ("player_settings", "height", "number", True),
    ("player_settings", "speed", "number", True),
    ("player_settings", "steering", "number", None),
    ("player_settings", "color", "color", None),
    ("player_settings", "orientation", "enum", ORIENTATIONS),
    ("opponent_settings", "speed", "number", True),
    ("opponent_settings", "width", "number", True),
    ("opponent_settings", "height", "number", True),
    ("opponent_settings", "color", "color", None),
    ("opponent_settings", "fire_cooldown", "int", None),
    ("opponent_settings", "behavior", "enum", BEHAVIORS),
    ("ball_settings", "speed", "number", True),
    ("ball_settings", "radius", "number", True),
    ("ball_settings", "color", "color", None),
    ("blocks_settings", "creation_area", "rect", None),
    ("blocks_settings", "rows", "int", None),
    ("blocks_settings", "cols", "int", None),
    ("blocks_settings", "per_row", "int", None),
    ("blocks_settings", "spacing", "number", None),
    ("blocks_settings", "color", "color", None),
    ("blocks_settings", "static_weave_fall", "enum", BLOCK_MODES),
    ("blocks_settings", "speed", "number", None),
    ("blocks_settings", "harmful", "bool", None),
    ("blocks_settings", "points", "int", None),
    ("static_barrier_settings", "color", "color", None),
    ("static_barrier_settings", "layout", "rects", None),
    ("image_settings", "color_inversion", "bool", None),
    ("image_settings", "rotation", "enum", ROTATIONS),
    ("image_settings", "hue_shift", "number", None),
    ("image_settings", "saturation_shift", "number", None),
    ("image_settings", "value_shift", "number", None),
    ("episode", "max_steps", "int", None),
    ("episode", "goal", "enum", GOALS),
    ("episode", "required_count", "int", None),
)

SECTION_CLASSES = {
    "meta": Meta,
    "actions": Actions,
    "game_elements": GameElements,
    "display_settings": DisplaySettings,
    "player_settings": PlayerSettings,
    "opponent_settings": OpponentSettings,
    "ball_settings": BallSettings,
    "blocks_settings": BlocksSettings,
    "static_barrier_settings": BarrierSettings,
    "image_settings": ImageSettings,
    "episode": Episode,
}

# Sections tied to a game_elements flag; they may be absent/empty.
OPTIONAL_SECTIONS = {
    "opponent_settings": "opponent",
    "ball_settings": "ball",
    "blocks_settings": "blocks",
    "static_barrier_settings": "static_barriers",
}

SECTION_ORDER = tuple(SECTION_CLASSES)


# ---------------------------------------------------------------------------
# parse
# ---------------------------------------------------------------------------

def _parse_rect(raw, path: str) -> tuple:
    if (not isinstance(raw, (list, tuple)) or len(raw) != 4
            or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in raw)):
        raise ConfigError(path, f"expected [x, y, w, h], got {raw!r}")
    return tuple(float(v) for v in raw)


def _parse_field(kind, extra, raw, path: str):
    if kind == "text":
        if not isinstance(raw, str):
            raise ConfigError(path, f"expected a string, got {type(raw).__name__}")
        return raw
    if kind == "bool":
        if not isinstance(raw, bool):
            raise ConfigError(path, f"expected a boolean, got {raw!r}")
        return raw
    if kind == "number":
        return parse_number_param(raw, path)
    if kind == "int":
        return parse_number_param(raw, path, integer=True)
    if kind == "color":
        return parse_color_param(raw, path)
    if kind == "enum":
        if raw not in extra:
            raise ConfigError(path, f"illegal value {raw!r}, expected one of {list(extra)}")
        return raw
    if kind == "rect":
        return _parse_rect(raw, path)
    if kind == "rects":
        if not isinstance(raw, list):
            raise ConfigError(path, f"expected a list of rects, got {type(raw).__name__}")
        return tuple(_parse_rect(r, f"{path}[{i}]") for i, r in enumerate(raw))
    raise AssertionError(kind)


def parse_game_config(text: str) -> GameConfig:
    """Parse a JSON game definition. Unknown fields become warnings."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"line {e.lineno}, col {e.colno}", e.msg) from e
    if not isinstance(doc, dict):
        raise ConfigError("$", "top level must be an object")

    warnings = []
    cfg = GameConfig()
    schema_by_section: dict[str, list] = {}
    for section, name, kind, extra in FIELD_SCHEMA:
        schema_by_section.setdefault(section, []).append((name, kind, extra))

    for key in doc:
        if key not in SECTION_CLASSES:
            warnings.append(f"unknown section {key!r}")
    for section, entries in schema_by_section.items():
        raw_section = doc.get(section)
        if raw_section is None or raw_section == {}:
            if section in OPTIONAL_SECTIONS:
                setattr(cfg, section, None)
            continue
        if not isinstance(raw_section, dict):
            raise ConfigError(section, "expected an object")
        known = {name for name, _, _ in entries}
        for key in raw_section:
            if key not in known:
                warnings.append(f"unknown field {section}.{key!r}")
        obj = SECTION_CLASSES[section]()
        for name, kind, extra in entries:
            if name in raw_section:
                setattr(obj, name, _parse_field(kind, extra, raw_section[name], f"{section}.{name}"))
        setattr(cfg, section, obj)
    cfg.parse_warnings = warnings
    return cfg


def load_config(path) -> GameConfig:
    with open(path, "r", encoding="utf-8") as f:
        return parse_game_config(f.read())


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

GEOMETRY_RANGE = (-1.0, 2.0)


def _check_rect(rect, path, issues):
    for v in rect:
        if v < GEOMETRY_RANGE[0] or v > GEOMETRY_RANGE[1]:
            issues.append((path, "error",
                           f"geometry outside [{GEOMETRY_RANGE[0]}, {GEOMETRY_RANGE[1]}]: {list(rect)}"))
            return


def validate(cfg: GameConfig) -> ValidationReport:
    issues = [("$", "warning", w) for w in cfg.parse_warnings]

    for flag, section in (("ball", "ball_settings"), ("opponent", "opponent_settings"),
                          ("blocks", "blocks_settings"), ("static_barriers", "static_barrier_settings")):
        enabled = getattr(cfg.game_elements, flag)
        if enabled and getattr(cfg, section) is None:
            issues.append((section, "error", f"missing {flag} settings (game_elements.{flag} is true)"))

    for section, name, kind, extra in FIELD_SCHEMA:
        obj = getattr(cfg, section)
        if obj is None:
            continue
        value = getattr(obj, name)
        path = f"{section}.{name}"
        if kind in ("number", "int"):
            check_number_param(value, path, issues)
        elif kind == "color":
            check_color_param(value, path, issues)
        elif kind == "enum":
            if value not in extra:
                issues.append((path, "error", f"illegal value {value!r}"))
        elif kind == "rect":
            _check_rect(value, path, issues)
        elif kind == "rects":
            for i, r in enumerate(value):
                _check_rect(r, f"{path}[{i}]", issues)

    if cfg.blocks_settings is not None:
        b = cfg.blocks_settings
        if is_static(b.points) and b.points < 0:
            issues.append(("blocks_settings.points", "error", "points must be >= 0"))
        for name in ("rows", "cols", "per_row"):
            v = getattr(b, name)
            if is_static(v) and v < 1:
                issues.append((f"blocks_settings.{name}", "error", "must be >= 1"))
    if is_static(cfg.episode.max_steps) and cfg.episode.max_steps < 1:
        issues.append(("episode.max_steps", "error", "must be >= 1"))

    ok = not any(sev == "error" for _, sev, _ in issues)
    return ValidationReport(ok=ok, issues=issues)


# ---------------------------------------------------------------------------
# sample
# ---------------------------------------------------------------------------

def sample(cfg: GameConfig, rng: random.Random) -> ConcreteConfig:
    """Resolve every distribution-valued field for one episode."""
    out = ConcreteConfig()
    out.parse_warnings = []
    for section in SECTION_ORDER:
        src = getattr(cfg, section)
        if src is None:
            setattr(out, section, None)
            continue
        dst = SECTION_CLASSES[section]()
        for f in fields(src):
            setattr(dst, f.name, getattr(src, f.name))
        setattr(out, section, dst)

    for section, name, kind, extra in FIELD_SCHEMA:
        obj = getattr(out, section)
        if obj is None:
            continue
        value = getattr(obj, name)
        if kind == "number":
            clamp = GEOMETRY_CLAMP if extra else None
            setattr(obj, name, sample_number(value, rng, clamp=clamp))
        elif kind == "int":
            setattr(obj, name, sample_number(value, rng, integer=True))
        elif kind == "color":
            setattr(obj, name, sample_color(value, rng))
    return out


def is_concrete(cfg: GameConfig) -> bool:
    for section, name, kind, _ in FIELD_SCHEMA:
        obj = getattr(cfg, section)
        if obj is not None and kind in ("number", "int", "color"):
            if not is_static(getattr(obj, name)):
                return False
    return True


# ---------------------------------------------------------------------------
# interpolate
# ---------------------------------------------------------------------------

def interpolate(a: GameConfig, b: GameConfig, t: float) -> GameConfig:
    """Linear interpolation between two structurally identical configs.

    Scalars lerp; integer fields lerp then round half up; colors lerp per
    channel; distribution parameters lerp pairwise. Booleans, enums and text
    must match exactly, as must section presence.
    """
    if not 0.0 <= t <= 1.0:
        raise InterpolationError("$", f"t must be in [0, 1], got {t}")
    out = GameConfig()
    out.parse_warnings = []
    for section in SECTION_ORDER:
        sa, sb = getattr(a, section), getattr(b, section)
        if (sa is None) != (sb is None):
            raise InterpolationError(section, "section present in one config but not the other")
        if sa is None:
            setattr(out, section, None)
            continue
        dst = SECTION_CLASSES[section]()
        for f in fields(sa):
            setattr(dst, f.name, getattr(sa, f.name))
        setattr(out, section, dst)

    for section, name, kind, _ in FIELD_SCHEMA:
        sa, sb = getattr(a, section), getattr(b, section)
        if sa is None:
            continue
        va, vb = getattr(sa, name), getattr(sb, name)
        path = f"{section}.{name}"
        obj = getattr(out, section)
        if kind == "number":
            setattr(obj, name, lerp_number_param(va, vb, t, path))
        elif kind == "int":
            setattr(obj, name, lerp_number_param(va, vb, t, path, integer=True))
        elif kind == "color":
            setattr(obj, name, lerp_color_param(va, vb, t, path))
        else:
            if va != vb:
                raise InterpolationError(path, f"non-interpolable field differs: {va!r} vs {vb!r}")
    return out


# ---------------------------------------------------------------------------
# serialize
# ---------------------------------------------------------------------------

def _field_to_json(kind, value):
    if kind == "number" or kind == "int":
        return number_param_to_json(value)
    if kind == "color":
        return color_param_to_json(value)
    if kind == "rect":
        return list(value)
    if kind == "rects":
        return [list(r) for r in value]
    return value


def config_to_dict(cfg: GameConfig) -> dict:
    doc: dict = {}
    for section in SECTION_ORDER:
        obj = getattr(cfg, section)
        if obj is None:
            doc[section] = {}
            continue
        sec: dict = {}
        for s, name, kind, _ in FIELD_SCHEMA:
            if s == section:
                sec[name] = _field_to_json(kind, getattr(obj, name))
        doc[section] = sec
    return doc


def serialize(cfg: GameConfig) -> str:
    """Canonical JSON form: fixed section and key order, 2-space indent."""
    return json.dumps(config_to_dict(cfg), indent=2) + "\n"


def config_digest(cfg: GameConfig) -> str:
    import hashlib
    return hashlib.sha256(serialize(cfg).encode("utf-8")).hexdigest()


def copy_config(cfg: GameConfig) -> GameConfig:
    return copy.deepcopy(cfg)

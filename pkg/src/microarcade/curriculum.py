"""Training schedules over game configs: fixed repeats, pools, interpolation.

A curriculum file is JSON:

    {
      "unit": "episodes" | "steps",
      "stages": [
        {"kind": "fixed", "game": <ref>, "duration": 10},
        {"kind": "pool", "games": [<ref>, ...], "weights": [..], "duration": 10},
        {"kind": "interpolate", "from": <ref>, "to": <ref>, "duration": 10}
      ]
    }

A game <ref> is a registry name, a path to a definition file, or an inline
definition object. Stage boundaries are only crossed at reset: in step
units, steps are accumulated via notify_steps but a new stage's config is
first handed out by the next next_config call, never mid-episode.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from typing import Optional

from . import library
from .config import (
    FIELD_SCHEMA,
    ConcreteConfig,
    GameConfig,
    copy_config,
    interpolate,
    parse_game_config,
    sample,
)
from .params import ColorSet, ColorUniform, Gaussian, Uniform, is_static


class CurriculumError(ValueError):
    pass


class CurriculumFinished(Exception):
    """Raised by next_config once every stage's duration is consumed."""


@dataclass
class FixedStage:
    game: GameConfig
    duration: int
    kind: str = "fixed"


@dataclass
class PoolStage:
    games: list
    weights: Optional[list]
    duration: int
    kind: str = "pool"


@dataclass
class InterpolateStage:
    frm: GameConfig
    to: GameConfig
    duration: int
    kind: str = "interpolate"


@dataclass
class CurriculumSpec:
    stages: list
    unit: str = "episodes"  # "episodes" | "steps"


@dataclass
class SchedulerState:
    stage_index: int = 0
    units_consumed_in_stage: int = 0
    finished: bool = False
    total_units: int = 0


def _resolve_game(ref, base_dir: Optional[str]) -> GameConfig:
    if isinstance(ref, dict):
        return parse_game_config(json.dumps(ref))
    if not isinstance(ref, str):
        raise CurriculumError(f"game reference must be a name, path, or object, got {ref!r}")
    candidates = [ref]
    if base_dir is not None:
        candidates.append(os.path.join(base_dir, ref))
    for path in candidates:
        if os.path.isfile(path):
            with open(path, "r", encoding="utf-8") as f:
                return parse_game_config(f.read())
    try:
        return library.load_game(ref)
    except library.UnknownGameError as e:
        raise CurriculumError(f"unresolvable game reference {ref!r}: {e}") from e


def _duration(raw, where: str) -> int:
    if isinstance(raw, bool) or not isinstance(raw, int) or raw < 1:
        raise CurriculumError(f"{where}: duration must be a positive integer, got {raw!r}")
    return raw


def parse_curriculum(text: str, base_dir: Optional[str] = None) -> CurriculumSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise CurriculumError(f"syntax error at line {e.lineno}: {e.msg}") from e
    unit = doc.get("unit", "episodes")
    if unit not in ("episodes", "steps"):
        raise CurriculumError(f"unit must be 'episodes' or 'steps', got {unit!r}")
    raw_stages = doc.get("stages")
    if not isinstance(raw_stages, list) or not raw_stages:
        raise CurriculumError("a curriculum needs at least one stage")

    stages = []
    for i, raw in enumerate(raw_stages):
        where = f"stages[{i}]"
        kind = raw.get("kind")
        duration = _duration(raw.get("duration"), where)
        if kind == "fixed":
            stages.append(FixedStage(_resolve_game(raw.get("game"), base_dir), duration))
        elif kind == "pool":
            games = [_resolve_game(g, base_dir) for g in raw.get("games", [])]
            if not games:
                raise CurriculumError(f"{where}: pool needs at least one game")
            weights = raw.get("weights")
            if weights is not None:
                if len(weights) != len(games):
                    raise CurriculumError(f"{where}: weights length must match games")
                if any(w < 0 for w in weights) or sum(weights) <= 0:
                    raise CurriculumError(f"{where}: weights must be nonnegative and not all zero")
            stages.append(PoolStage(games, weights, duration))
        elif kind == "interpolate":
            frm = _resolve_game(raw.get("from"), base_dir)
            to = _resolve_game(raw.get("to"), base_dir)
            try:
                interpolate(frm, to, 0.0)  # fail incompatible endpoints at parse time
            except ValueError as e:
                raise CurriculumError(f"{where}: incompatible interpolation endpoints: {e}") from e
            stages.append(InterpolateStage(frm, to, duration))
        else:
            raise CurriculumError(f"{where}: unknown stage kind {kind!r}")
    return CurriculumSpec(stages=stages, unit=unit)


def load_curriculum(path) -> CurriculumSpec:
    with open(path, "r", encoding="utf-8") as f:
        return parse_curriculum(f.read(), base_dir=os.path.dirname(os.path.abspath(path)))


class CurriculumScheduler:
    """Walks a CurriculumSpec, handing out one concrete config per reset."""

    def __init__(self, spec: CurriculumSpec, seed: int = 0):
        self.spec = spec
        self.rng = random.Random(seed)
        self.state = SchedulerState()

    @property
    def finished(self) -> bool:
        return self.state.finished

    def _advance_stages(self) -> None:
        s = self.state
        while not s.finished and s.units_consumed_in_stage >= self.spec.stages[s.stage_index].duration:
            s.units_consumed_in_stage -= self.spec.stages[s.stage_index].duration
            s.stage_index += 1
            if s.stage_index >= len(self.spec.stages):
                s.finished = True

    def next_config(self) -> tuple:
        """Sample the next episode's concrete config. Returns (config, info)."""
        self._advance_stages()
        s = self.state
        if s.finished:
            raise CurriculumFinished
        stage = self.spec.stages[s.stage_index]
        if stage.kind == "fixed":
            cfg = stage.game
        elif stage.kind == "pool":
            if stage.weights is None:
                cfg = stage.games[self.rng.randrange(len(stage.games))]
            else:
                cfg = self.rng.choices(stage.games, weights=stage.weights, k=1)[0]
        else:
            if stage.duration > 1:
                t = min(s.units_consumed_in_stage / (stage.duration - 1), 1.0)
            else:
                t = 0.0
            cfg = interpolate(stage.frm, stage.to, t)
        concrete: ConcreteConfig = sample(cfg, self.rng)
        info = {"stage_index": s.stage_index, "kind": stage.kind,
                "units_consumed_in_stage": s.units_consumed_in_stage}
        if self.spec.unit == "episodes":
            s.units_consumed_in_stage += 1
            s.total_units += 1
        return concrete, info

    def notify_steps(self, n: int) -> None:
        """Report simulated steps (step-unit curricula only)."""
        if self.spec.unit != "steps":
            raise CurriculumError("notify_steps is only valid for step-unit curricula")
        if n < 0:
            raise CurriculumError("step count must be >= 0")
        self.state.units_consumed_in_stage += n
        self.state.total_units += n


# ---------------------------------------------------------------------------
# envelope curricula: widen the sampling range around an easy config, then
# narrow onto the full game.
# ---------------------------------------------------------------------------

def _envelope_number(easy, base, path: str, integer: bool):
    if is_static(easy) and is_static(base):
        if easy == base:
            return easy, easy, base
        env = Uniform(min(easy, base), max(easy, base))
        return Uniform(easy, easy), env, Uniform(base, base)
    def as_uniform(p):
        if is_static(p):
            return Uniform(p, p)
        if isinstance(p, Uniform):
            return p
        return None
    ue, ub = as_uniform(easy), as_uniform(base)
    if ue is not None and ub is not None:
        env = Uniform(min(ue.low, ub.low), max(ue.high, ub.high))
        return ue, env, ub
    def as_gaussian(p):
        if is_static(p):
            return Gaussian(p, 0.0)
        if isinstance(p, Gaussian):
            return p
        return None
    ge, gb = as_gaussian(easy), as_gaussian(base)
    if ge is not None and gb is not None:
        env = Gaussian((ge.mean + gb.mean) / 2, max(ge.std, gb.std) + abs(ge.mean - gb.mean) / 2)
        return ge, env, gb
    raise CurriculumError(f"{path}: cannot build an envelope over {type(easy).__name__} "
                          f"and {type(base).__name__}")


def _envelope_color(easy, base, path: str):
    if isinstance(easy, tuple) and isinstance(base, tuple):
        if easy == base:
            return easy, easy, base
        lo = tuple(min(a, b) for a, b in zip(easy, base))
        hi = tuple(max(a, b) for a, b in zip(easy, base))
        return ColorUniform(easy, easy), ColorUniform(lo, hi), ColorUniform(base, base)
    def as_box(p):
        if isinstance(p, tuple):
            return ColorUniform(p, p)
        if isinstance(p, ColorUniform):
            return p
        return None
    be, bb = as_box(easy), as_box(base)
    if be is not None and bb is not None:
        lo = tuple(min(a, b) for a, b in zip(be.low, bb.low))
        hi = tuple(max(a, b) for a, b in zip(be.high, bb.high))
        return be, ColorUniform(lo, hi), bb
    if isinstance(easy, ColorSet) and easy == base:
        return easy, easy, base
    raise CurriculumError(f"{path}: cannot build a color envelope over differing variants")


def envelope_schedule(base: GameConfig, easy: GameConfig, widen: int, narrow: int,
                      tail: int) -> CurriculumSpec:
    """Three-stage schedule: interpolate easy -> union envelope, envelope ->
    base, then the unaltered base game. The envelope's uniform bounds span
    both endpoints per field, so hard settings appear without dropping the
    easy ones."""
    easy_l = copy_config(easy)
    env = copy_config(easy)
    base_l = copy_config(base)
    for section, name, kind, _ in FIELD_SCHEMA:
        se, sb = getattr(easy, section), getattr(base, section)
        if (se is None) != (sb is None):
            raise CurriculumError(f"{section}: section present in only one config")
        if se is None:
            continue
        ve, vb = getattr(se, name), getattr(sb, name)
        path = f"{section}.{name}"
        if kind in ("number", "int"):
            le, lv, lb = _envelope_number(ve, vb, path, kind == "int")
        elif kind == "color":
            le, lv, lb = _envelope_color(ve, vb, path)
        else:
            if ve != vb:
                raise CurriculumError(f"{path}: non-interpolable field differs: {ve!r} vs {vb!r}")
            continue
        setattr(getattr(easy_l, section), name, le)
        setattr(getattr(env, section), name, lv)
        setattr(getattr(base_l, section), name, lb)
    return CurriculumSpec(stages=[
        InterpolateStage(easy_l, env, _duration(widen, "widen")),
        InterpolateStage(env, base_l, _duration(narrow, "narrow")),
        FixedStage(base, _duration(tail, "tail")),
    ])

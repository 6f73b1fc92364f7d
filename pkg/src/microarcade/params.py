"""Config parameter values: static scalars/colors or per-episode distributions.

A parameter in a game definition file is either a bare literal (number or
``[r, g, b]`` color) or a mapping of the form ``{"dist": <kind>, ...}``.
Supported distribution kinds:

    {"dist": "gaussian", "mean": m, "std": s}
    {"dist": "uniform", "low": a, "high": b}
    {"dist": "color_uniform", "low": [r,g,b], "high": [r,g,b]}
    {"dist": "color_set", "choices": [[r,g,b], ...]}
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Union

Color = tuple[int, int, int]


class ConfigError(ValueError):
    """Raised on malformed config documents. Carries the offending path."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Gaussian:
    mean: float
    std: float


@dataclass(frozen=True)
class Uniform:
    low: float
    high: float


@dataclass(frozen=True)
class ColorUniform:
    low: Color
    high: Color


@dataclass(frozen=True)
class ColorSet:
    choices: tuple[Color, ...]


NumberParam = Union[float, int, Gaussian, Uniform]
ColorParam = Union[tuple, ColorUniform, ColorSet]


def round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def is_static(p) -> bool:
    return not isinstance(p, (Gaussian, Uniform, ColorUniform, ColorSet))


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def _as_number(raw, path: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ConfigError(path, f"expected a number, got {type(raw).__name__}")
    return raw


def _as_color(raw, path: str) -> Color:
    if (not isinstance(raw, (list, tuple)) or len(raw) != 3
            or any(isinstance(c, bool) or not isinstance(c, int) for c in raw)):
        raise ConfigError(path, f"expected an [r, g, b] integer triple, got {raw!r}")
    return tuple(raw)


def parse_number_param(raw, path: str, integer: bool = False) -> NumberParam:
    if isinstance(raw, dict):
        kind = raw.get("dist")
        if kind == "gaussian":
            return Gaussian(_as_number(raw.get("mean"), path + ".mean"),
                            _as_number(raw.get("std"), path + ".std"))
        if kind == "uniform":
            return Uniform(_as_number(raw.get("low"), path + ".low"),
                           _as_number(raw.get("high"), path + ".high"))
        raise ConfigError(path, f"unknown distribution kind {kind!r} for a number field")
    value = _as_number(raw, path)
    if integer and not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    return value


def parse_color_param(raw, path: str) -> ColorParam:
    if isinstance(raw, dict):
        kind = raw.get("dist")
        if kind == "color_uniform":
            return ColorUniform(_as_color(raw.get("low"), path + ".low"),
                                _as_color(raw.get("high"), path + ".high"))
        if kind == "color_set":
            choices = raw.get("choices")
            if not isinstance(choices, list) or not choices:
                raise ConfigError(path + ".choices", "expected a non-empty list of colors")
            return ColorSet(tuple(_as_color(c, f"{path}.choices[{i}]")
                                  for i, c in enumerate(choices)))
        raise ConfigError(path, f"unknown distribution kind {kind!r} for a color field")
    return _as_color(raw, path)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def check_number_param(p: NumberParam, path: str, issues: list) -> None:
    if isinstance(p, Gaussian) and p.std < 0:
        issues.append((path, "error", f"gaussian std must be >= 0, got {p.std}"))
    if isinstance(p, Uniform) and p.low > p.high:
        issues.append((path, "error", f"uniform bounds inverted: low {p.low} > high {p.high}"))


def _check_channels(rgb, path: str, issues: list) -> None:
    if any(c < 0 or c > 255 for c in rgb):
        issues.append((path, "error", f"color channels must be in [0, 255], got {list(rgb)}"))


def check_color_param(p: ColorParam, path: str, issues: list) -> None:
    if isinstance(p, ColorUniform):
        _check_channels(p.low, path + ".low", issues)
        _check_channels(p.high, path + ".high", issues)
        if any(lo > hi for lo, hi in zip(p.low, p.high)):
            issues.append((path, "error", "color_uniform bounds inverted per channel"))
    elif isinstance(p, ColorSet):
        for i, c in enumerate(p.choices):
            _check_channels(c, f"{path}.choices[{i}]", issues)
    else:
        _check_channels(p, path, issues)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def sample_number(p: NumberParam, rng: random.Random, integer: bool = False,
                  clamp: Optional[tuple[float, float]] = None) -> Union[int, float]:
    """Resolve a number parameter to a static value.

    Integer fields round half up after a continuous draw, except uniform
    distributions, which draw an integer uniformly over [low, high] so every
    value in the support is equally likely. Gaussian draws are clamped to
    ``clamp`` when given (geometric safety range).
    """
    if isinstance(p, Gaussian):
        value = rng.gauss(p.mean, p.std) if p.std > 0 else p.mean
        if clamp is not None:
            value = min(max(value, clamp[0]), clamp[1])
        return round_half_up(value) if integer else value
    if isinstance(p, Uniform):
        if integer:
            return rng.randint(round_half_up(p.low), round_half_up(p.high))
        return rng.uniform(p.low, p.high)
    return p


def sample_color(p: ColorParam, rng: random.Random) -> Color:
    if isinstance(p, ColorUniform):
        return tuple(rng.randint(lo, hi) for lo, hi in zip(p.low, p.high))
    if isinstance(p, ColorSet):
        return p.choices[rng.randrange(len(p.choices))]
    return tuple(p)


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------

class InterpolationError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _lerp(a: float, b: float, t: float) -> float:
    # endpoints are exact; a + (b - a) would drift in the last ulp
    if t == 0.0:
        return a
    if t == 1.0:
        return b
    return a + (b - a) * t


def lerp_number_param(a: NumberParam, b: NumberParam, t: float, path: str,
                      integer: bool = False) -> NumberParam:
    if isinstance(a, Gaussian) and isinstance(b, Gaussian):
        return Gaussian(_lerp(a.mean, b.mean, t), _lerp(a.std, b.std, t))
    if isinstance(a, Uniform) and isinstance(b, Uniform):
        return Uniform(_lerp(a.low, b.low, t), _lerp(a.high, b.high, t))
    if is_static(a) and is_static(b):
        value = _lerp(a, b, t)
        return round_half_up(value) if integer else value
    raise InterpolationError(path, f"variant mismatch: {type(a).__name__} vs {type(b).__name__}")


def _lerp_color(a: Color, b: Color, t: float) -> Color:
    return tuple(round_half_up(_lerp(ca, cb, t)) for ca, cb in zip(a, b))


def lerp_color_param(a: ColorParam, b: ColorParam, t: float, path: str) -> ColorParam:
    if isinstance(a, ColorUniform) and isinstance(b, ColorUniform):
        return ColorUniform(_lerp_color(a.low, b.low, t), _lerp_color(a.high, b.high, t))
    if isinstance(a, ColorSet) and isinstance(b, ColorSet):
        if len(a.choices) != len(b.choices):
            raise InterpolationError(path, "color_set choice counts differ")
        return ColorSet(tuple(_lerp_color(ca, cb, t) for ca, cb in zip(a.choices, b.choices)))
    if isinstance(a, tuple) and isinstance(b, tuple):
        return _lerp_color(a, b, t)
    raise InterpolationError(path, f"variant mismatch: {type(a).__name__} vs {type(b).__name__}")


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def number_param_to_json(p: NumberParam):
    if isinstance(p, Gaussian):
        return {"dist": "gaussian", "mean": p.mean, "std": p.std}
    if isinstance(p, Uniform):
        return {"dist": "uniform", "low": p.low, "high": p.high}
    return p


def color_param_to_json(p: ColorParam):
    if isinstance(p, ColorUniform):
        return {"dist": "color_uniform", "low": list(p.low), "high": list(p.high)}
    if isinstance(p, ColorSet):
        return {"dist": "color_set", "choices": [list(c) for c in p.choices]}
    return list(p)

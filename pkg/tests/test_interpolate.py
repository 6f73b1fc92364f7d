"""Config interpolation: endpoint exactness, linearity, structural checks."""
import random

import pytest

from microarcade.config import (
    FIELD_SCHEMA,
    GameConfig,
    copy_config,
    interpolate,
    parse_game_config,
    serialize,
)
from microarcade.params import ColorSet, ColorUniform, Gaussian, InterpolationError, Uniform


def base_config():
    return parse_game_config("""
    {
        "actions": {"left": true, "right": true},
        "game_elements": {"top_wall": true, "ball": true, "blocks": true},
        "player_settings": {"width": 0.1, "height": 0.03, "speed": 0.01,
                            "steering": 0.0, "color": [10, 20, 30]},
        "ball_settings": {"speed": 0.01, "radius": 0.01, "color": [200, 0, 0]},
        "blocks_settings": {"creation_area": [0.1, 0.1, 0.8, 0.3], "rows": 2, "cols": 4,
                            "per_row": 4, "spacing": 0.2, "color": [0, 0, 200],
                            "static_weave_fall": "static", "speed": 0.0,
                            "harmful": false, "points": 10},
        "episode": {"max_steps": 1000, "goal": "clear_blocks"}
    }
    """)


def shifted_config():
    cfg = copy_config(base_config())
    cfg.player_settings.width = 0.3
    cfg.player_settings.speed = 0.02
    cfg.player_settings.color = (110, 220, 130)
    cfg.ball_settings.speed = 0.03
    cfg.blocks_settings.points = 20
    cfg.episode.max_steps = 2000
    return cfg


def test_endpoints_exact():
    a, b = base_config(), shifted_config()
    assert serialize(interpolate(a, b, 0.0)) == serialize(a)
    assert serialize(interpolate(a, b, 1.0)) == serialize(b)


def test_midpoint_values():
    a, b = base_config(), shifted_config()
    mid = interpolate(a, b, 0.5)
    assert abs(mid.player_settings.width - 0.2) < 1e-12
    assert abs(mid.ball_settings.speed - 0.02) < 1e-12
    assert mid.blocks_settings.points == 15
    assert mid.episode.max_steps == 1500
    assert mid.player_settings.color == (60, 120, 80)


def test_monotone_in_t():
    a, b = base_config(), shifted_config()
    widths = [interpolate(a, b, t).player_settings.width for t in
              (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)]
    assert widths == sorted(widths)


def test_t_outside_unit_interval_rejected():
    a, b = base_config(), shifted_config()
    for t in (-0.01, 1.01, 2.0):
        with pytest.raises(InterpolationError):
            interpolate(a, b, t)


def test_integer_fields_round_half_up():
    a, b = base_config(), shifted_config()
    a.blocks_settings.rows, b.blocks_settings.rows = 1, 2
    assert interpolate(a, b, 0.5).blocks_settings.rows == 2  # 1.5 rounds up


def test_distribution_params_interpolate_pairwise():
    a, b = base_config(), shifted_config()
    a.player_settings.width = Uniform(0.1, 0.2)
    b.player_settings.width = Uniform(0.3, 0.6)
    a.ball_settings.speed = Gaussian(0.01, 0.001)
    b.ball_settings.speed = Gaussian(0.03, 0.003)
    mid = interpolate(a, b, 0.5)
    w = mid.player_settings.width
    assert (w.low, w.high) == pytest.approx((0.2, 0.4))
    s = mid.ball_settings.speed
    assert (s.mean, s.std) == pytest.approx((0.02, 0.002))


def test_structure_mismatches_are_hard_errors():
    a, b = base_config(), shifted_config()
    b.actions.fire = True
    with pytest.raises(InterpolationError):
        interpolate(a, b, 0.5)
    a, b = base_config(), shifted_config()
    b.blocks_settings.static_weave_fall = "weave"
    with pytest.raises(InterpolationError):
        interpolate(a, b, 0.5)
    a, b = base_config(), shifted_config()
    b.player_settings.width = Uniform(0.1, 0.2)
    with pytest.raises(InterpolationError):
        interpolate(a, b, 0.5)
    a, b = base_config(), shifted_config()
    b.ball_settings = None
    b.game_elements.ball = False
    with pytest.raises(InterpolationError):
        interpolate(a, b, 0.5)


NUMBER_VARIANTS = (
    lambda r: round(r.uniform(0.01, 1.0), 4),
    lambda r: Uniform(round(r.uniform(0.01, 0.4), 4), round(r.uniform(0.5, 1.0), 4)),
    lambda r: Gaussian(round(r.uniform(0.1, 0.5), 4), round(r.uniform(0.0, 0.1), 4)),
)

COLOR_VARIANTS = (
    lambda r: tuple(r.randrange(256) for _ in range(3)),
    lambda r: ColorUniform(tuple(r.randrange(100) for _ in range(3)),
                           tuple(r.randrange(100, 256) for _ in range(3))),
    lambda r: ColorSet(tuple(tuple(r.randrange(256) for _ in range(3)) for _ in range(3))),
)


def random_compatible_pair(rng):
    """Two configs sharing structure and per-field variants, random values."""
    a, b = GameConfig(), GameConfig()
    for cfg in (a, b):
        cfg.actions.left = cfg.actions.right = True
        cfg.game_elements.ball = True
        cfg.ball_settings = parse_game_config(
            '{"game_elements": {"ball": true}, "ball_settings": {"speed": 0.01}}'
        ).ball_settings
    for section, name, kind, _ in FIELD_SCHEMA:
        if getattr(a, section) is None:
            continue
        if kind == "number":
            make = NUMBER_VARIANTS[rng.randrange(len(NUMBER_VARIANTS))]
        elif kind == "color":
            make = COLOR_VARIANTS[rng.randrange(len(COLOR_VARIANTS))]
        elif kind == "int":
            make = lambda r: r.randrange(1, 50)
        else:
            continue
        va, vb = make(rng), make(rng)
        if isinstance(va, ColorSet) and len(va.choices) != len(vb.choices):
            vb = va
        setattr(getattr(a, section), name, va)
        setattr(getattr(b, section), name, vb)
    return a, b


def _flat_numbers(cfg):
    out = []
    for section, name, kind, _ in FIELD_SCHEMA:
        obj = getattr(cfg, section)
        if obj is None or kind not in ("number",):
            continue
        v = getattr(obj, name)
        if isinstance(v, Uniform):
            out.extend([v.low, v.high])
        elif isinstance(v, Gaussian):
            out.extend([v.mean, v.std])
        else:
            out.append(v)
    return out


def test_hundred_random_pairs_linear():
    rng = random.Random(2024)
    for _ in range(100):
        a, b = random_compatible_pair(rng)
        assert serialize(interpolate(a, b, 0.0)) == serialize(a)
        assert serialize(interpolate(a, b, 1.0)) == serialize(b)
        fa, fb = _flat_numbers(a), _flat_numbers(b)
        fm = _flat_numbers(interpolate(a, b, 0.5))
        for va, vb, vm in zip(fa, fb, fm):
            assert abs(vm - (va + vb) / 2) < 1e-12

"""The 6-action space shared by every game, and the no-op mapping.

Discrete indices: 0 No-op, 1 Up, 2 Down, 3 Left, 4 Right, 5 Shoot.
Continuous actions carry a move vector in [-1, 1]^2 and a fire level in
[0, 1] thresholded at 0.5.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .config import ConcreteConfig

NOOP, UP, DOWN, LEFT, RIGHT, SHOOT = range(6)
ACTION_NAMES = ("noop", "up", "down", "left", "right", "shoot")
NUM_ACTIONS = 6


@dataclass(frozen=True)
class Continuous:
    move: tuple[float, float]  # (x, y), y positive is down
    fire: float = 0.0


Action = Union[int, Continuous]


@dataclass(frozen=True)
class EffectiveAction:
    """Canonical movement intent after disabled actions collapse to no-op."""
    move_x: float = 0.0
    move_y: float = 0.0
    fire: bool = False


_DISCRETE_MOVES = {
    UP: (0.0, -1.0),
    DOWN: (0.0, 1.0),
    LEFT: (-1.0, 0.0),
    RIGHT: (1.0, 0.0),
}


def apply_action(cfg: ConcreteConfig, a: Action) -> EffectiveAction:
    """Project an action onto the axes this game enables."""
    acts = cfg.actions
    if isinstance(a, Continuous):
        mx, my = a.move
        mx = max(-1.0, min(1.0, mx))
        my = max(-1.0, min(1.0, my))
        if mx < 0 and not acts.left:
            mx = 0.0
        if mx > 0 and not acts.right:
            mx = 0.0
        if my < 0 and not acts.up:
            my = 0.0
        if my > 0 and not acts.down:
            my = 0.0
        return EffectiveAction(mx, my, bool(acts.fire and a.fire >= 0.5))

    if not isinstance(a, int) or isinstance(a, bool) or not 0 <= a < NUM_ACTIONS:
        raise ValueError(f"discrete action index must be in 0..5, got {a!r}")
    if a == SHOOT:
        return EffectiveAction(fire=bool(acts.fire))
    if a == NOOP:
        return EffectiveAction()
    if not getattr(acts, ACTION_NAMES[a]):
        return EffectiveAction()  # disabled direction maps to no-op
    mx, my = _DISCRETE_MOVES[a]
    return EffectiveAction(mx, my, False)

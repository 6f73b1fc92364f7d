"""Scripted debug policies: enough play skill to exercise the games without
any learning. All act on world state, not pixels, and are deterministic
under a seed."""
from __future__ import annotations

import random

from .actions import DOWN, LEFT, NOOP, NUM_ACTIONS, RIGHT, SHOOT, UP
from .world import WorldState

AGENT_KINDS = ("random", "paddle_tracker", "crosser")


class IncompatibleAgentError(ValueError):
    pass


class RandomAgent:
    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)

    def __call__(self, w: WorldState) -> int:
        return self.rng.randrange(NUM_ACTIONS)


class PaddleTracker:
    """Moves the paddle toward the ball's coordinate each frame."""

    def __init__(self, seed: int = 0):
        pass

    def __call__(self, w: WorldState) -> int:
        if w.ball is None:
            return NOOP
        if w.cfg.player_settings.orientation == "left":
            dy = w.ball.y - w.player.cy
            if abs(dy) < w.cfg.player_settings.speed / 2:
                return NOOP
            return DOWN if dy > 0 else UP
        dx = w.ball.x - w.player.cx
        if abs(dx) < w.cfg.player_settings.speed / 2:
            return NOOP
        return RIGHT if dx > 0 else LEFT


class Crosser:
    """Heads for the opposite edge, sidestepping hazards directly ahead."""

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)
        self.sidestep = 0  # frames left in the current dodge, signed by direction

    def _obstacle_ahead(self, w: WorldState) -> bool:
        p = w.player
        look = 4 * w.cfg.player_settings.speed + p.h
        ahead_y0 = p.y - look
        for blk in w.blocks:
            if not blk.harmful:
                continue
            margin = 2 * w.cfg.player_settings.speed
            if (blk.rect.x - margin < p.x + p.w and p.x < blk.rect.x + blk.rect.w + margin
                    and blk.rect.y + blk.rect.h > ahead_y0 and blk.rect.y < p.y):
                return True
        for b in w.barriers:
            if b.x < p.x + p.w and p.x < b.x + b.w and b.y + b.h > ahead_y0 and b.y < p.y:
                return True
        return False

    def __call__(self, w: WorldState) -> int:
        forward = UP if w.cfg.player_settings.orientation == "bottom" else RIGHT
        if self.sidestep != 0:
            action = RIGHT if self.sidestep > 0 else LEFT
            self.sidestep -= 1 if self.sidestep > 0 else -1
            return action
        if self._obstacle_ahead(w):
            direction = 1 if self.rng.random() < 0.5 else -1
            self.sidestep = direction * 10
            return RIGHT if direction > 0 else LEFT
        return forward


def scripted_agent(kind: str, seed: int = 0):
    """Build a policy callable: WorldState -> discrete action index."""
    if kind == "random":
        return RandomAgent(seed)
    if kind == "paddle_tracker":
        return PaddleTracker(seed)
    if kind == "crosser":
        return Crosser(seed)
    raise IncompatibleAgentError(f"unknown agent kind {kind!r}; expected one of {AGENT_KINDS}")

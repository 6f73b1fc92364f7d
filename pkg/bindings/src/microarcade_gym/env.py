"""Gym-style environment wrapper and factory over the core engine.

The wrapper is deliberately thin: frames come straight from the core with
no copying or transformation, actions pass through one-to-one, and seeding
is handled entirely by the core. Optional behavior (action repeat, reward
normalization) lives in explicit wrapper classes, never in the base env.
"""
from __future__ import annotations

import os
from typing import Optional

import numpy as np

from microarcade import (
    ArcadeEnv,
    CurriculumFinished,
    GameConfig,
    NUM_ACTIONS,
    list_games,
    load_config,
    load_curriculum,
    load_game,
)

from .spaces import Box, Discrete

__all__ = ["WrappedEnv", "ActionRepeat", "ScoreNormalize", "make", "registry",
           "CurriculumFinished"]

OBSERVATION_SPACE = Box(low=0, high=255, shape=(84, 84, 3))
ACTION_SPACE = Discrete(NUM_ACTIONS)


class WrappedEnv:
    """The standard reset/step loop over one core environment.

    ``step`` returns the classic 4-tuple (observation, reward, done, info).
    Observations are the core engine's frames, element-wise identical.
    """

    observation_space = OBSERVATION_SPACE
    action_space = ACTION_SPACE

    def __init__(self, core: ArcadeEnv):
        self._core = core
        self._last_obs: Optional[np.ndarray] = None

    @property
    def unwrapped(self) -> ArcadeEnv:
        return self._core

    def reset(self, seed: Optional[int] = None) -> np.ndarray:
        self._last_obs = self._core.reset(seed=seed)
        return self._last_obs

    def step(self, action):
        if not self.action_space.contains(action):
            raise ValueError(f"action must be an integer in [0, {NUM_ACTIONS}), got {action!r}")
        obs, reward, done, info = self._core.step(int(action))
        self._last_obs = obs
        return obs, reward, done, info

    def render(self) -> Optional[np.ndarray]:
        return self._last_obs

    def close(self) -> None:
        self._last_obs = None

    @property
    def done(self) -> bool:
        return self._core.done


class _Wrapper(WrappedEnv):
    def __init__(self, env: WrappedEnv):
        self.env = env

    @property
    def unwrapped(self) -> ArcadeEnv:
        return self.env.unwrapped

    def reset(self, seed: Optional[int] = None) -> np.ndarray:
        return self.env.reset(seed=seed)

    def step(self, action):
        return self.env.step(action)

    def render(self):
        return self.env.render()

    def close(self) -> None:
        self.env.close()

    @property
    def done(self) -> bool:
        return self.env.done


class ActionRepeat(_Wrapper):
    """Repeat each action ``repeat`` frames (a frame-skip), summing rewards
    and returning the last frame. Stops early when the episode ends."""

    def __init__(self, env: WrappedEnv, repeat: int):
        if repeat < 1:
            raise ValueError("repeat must be >= 1")
        super().__init__(env)
        self.repeat = repeat

    def step(self, action):
        total = 0
        obs = reward = info = None
        done = False
        for _ in range(self.repeat):
            obs, reward, done, info = self.env.step(action)
            total += reward
            if done:
                break
        return obs, total, done, info


class ScoreNormalize(_Wrapper):
    """Scale rewards into [-1, 1] by dividing by the score bound (100)."""

    SCALE = 100.0

    def step(self, action):
        obs, reward, done, info = self.env.step(action)
        return obs, reward / self.SCALE, done, info


def registry() -> list:
    """Names of every game the factory can build, in index order."""
    return [entry.name for entry in list_games()]


def make(name_or_path: str, seed: int = 0, curriculum: Optional[str] = None) -> WrappedEnv:
    """Build a wrapped environment from a game name, a config file path, or
    (exclusively) a curriculum file."""
    if curriculum is not None:
        if name_or_path:
            raise ValueError("pass either a game or a curriculum, not both")
        return WrappedEnv(ArcadeEnv(load_curriculum(curriculum), seed=seed))
    if isinstance(name_or_path, GameConfig):
        return WrappedEnv(ArcadeEnv(name_or_path, seed=seed))
    if os.path.isfile(name_or_path):
        return WrappedEnv(ArcadeEnv(load_config(name_or_path), seed=seed))
    return WrappedEnv(ArcadeEnv(load_game(name_or_path), seed=seed))

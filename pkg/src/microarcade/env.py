"""Environment facade: the reset/step/render/seed loop over one game or a
curriculum.

Observations are the rendered frame with the config's image post-processing
applied. Per-episode seeds derive from the master seed and the episode
index via a stable hash, so any episode is reproducible without replaying
the ones before it.
"""
from __future__ import annotations

import hashlib
from typing import Optional, Union

import numpy as np

from .actions import Action
from .config import ConcreteConfig, GameConfig, config_digest, sample, validate
from .curriculum import CurriculumFinished, CurriculumScheduler, CurriculumSpec
from .postfx import postprocess
from .render import render
from .world import RUNNING, WorldState, init_world, step_world

import random


def derive_episode_seed(master_seed: int, episode_index: int) -> int:
    """Stable per-episode seed: sha256 over (master_seed, episode_index)."""
    digest = hashlib.sha256(f"{master_seed}:{episode_index}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "little")


class EpisodeNotActiveError(RuntimeError):
    pass


class ArcadeEnv:
    """A single game instance (or a curriculum of them).

    The source may be a GameConfig (sampled fresh each reset) or a
    CurriculumSpec (the scheduler picks each episode's config).
    """

    def __init__(self, source: Union[GameConfig, CurriculumSpec], seed: int = 0,
                 render_mode: str = "headless"):
        if isinstance(source, GameConfig):
            report = validate(source)
            if not report.ok:
                raise ValueError(f"invalid game config:\n{report}")
            self.game: Optional[GameConfig] = source
            self.scheduler: Optional[CurriculumScheduler] = None
        elif isinstance(source, CurriculumSpec):
            self.game = None
            self.scheduler = CurriculumScheduler(source, seed=seed)
        else:
            raise TypeError(f"source must be a GameConfig or CurriculumSpec, got {type(source)}")
        self.master_seed = seed
        self.render_mode = render_mode
        self.episode_index = -1
        self.world: Optional[WorldState] = None
        self.concrete: Optional[ConcreteConfig] = None
        self.last_stage_info: Optional[dict] = None

    # -- core loop ---------------------------------------------------------

    def reset(self, seed: Optional[int] = None) -> np.ndarray:
        """Start a new episode; returns the first observation.

        Raises CurriculumFinished when a curriculum source is exhausted.
        """
        self.episode_index += 1
        episode_seed = seed if seed is not None else derive_episode_seed(
            self.master_seed, self.episode_index)
        if self.scheduler is not None:
            self.concrete, self.last_stage_info = self.scheduler.next_config()
        else:
            self.concrete = sample(self.game, random.Random(episode_seed))
        self.world = init_world(self.concrete, episode_seed)
        return self._observe()

    def step(self, action: Action):
        """Advance one frame. Returns (observation, reward, done, info)."""
        if self.world is None:
            raise EpisodeNotActiveError("call reset() before step()")
        if self.world.status != RUNNING:
            raise EpisodeNotActiveError("episode is over; call reset()")
        outcome = step_world(self.world, action)
        if self.scheduler is not None and self.scheduler.spec.unit == "steps":
            self.scheduler.notify_steps(1)
        return self._observe(), outcome.reward, outcome.terminal, outcome.info

    def _observe(self) -> np.ndarray:
        frame = render(self.world)
        return postprocess(frame, self.concrete.image_settings)

    # -- inspection --------------------------------------------------------

    @property
    def score(self) -> int:
        return 0 if self.world is None else self.world.score

    @property
    def done(self) -> bool:
        return self.world is None or self.world.status != RUNNING

    @property
    def status(self) -> str:
        return "idle" if self.world is None else self.world.status

    def current_config_digest(self) -> str:
        return config_digest(self.concrete)


def make_env(name_or_config, seed: int = 0) -> ArcadeEnv:
    """Convenience factory: registry name, config path, or GameConfig."""
    from . import library
    from .config import load_config
    import os

    if isinstance(name_or_config, GameConfig):
        return ArcadeEnv(name_or_config, seed=seed)
    if isinstance(name_or_config, CurriculumSpec):
        return ArcadeEnv(name_or_config, seed=seed)
    if os.path.isfile(name_or_config):
        return ArcadeEnv(load_config(name_or_config), seed=seed)
    return ArcadeEnv(library.load_game(name_or_config), seed=seed)

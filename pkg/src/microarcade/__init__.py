"""microarcade: configurable, deterministic 2D arcade games for RL research."""

from .actions import Action, Continuous, EffectiveAction, NUM_ACTIONS, apply_action
from .config import (
    ConcreteConfig,
    GameConfig,
    ValidationReport,
    config_digest,
    interpolate,
    load_config,
    parse_game_config,
    sample,
    serialize,
    validate,
)
from .curriculum import (
    CurriculumFinished,
    CurriculumScheduler,
    CurriculumSpec,
    envelope_schedule,
    load_curriculum,
    parse_curriculum,
)
from .env import ArcadeEnv, derive_episode_seed, make_env
from .library import GameEntry, UnknownGameError, game_names, list_games, load_game
from .params import ColorSet, ColorUniform, ConfigError, Gaussian, Uniform
from .physics import reflect_ball
from .postfx import postprocess
from .render import FRAME_SIZE, render
from .world import (
    ScoreEvent,
    StepOutcome,
    WorldState,
    init_world,
    step_world,
    update_blocks,
    update_opponent,
    world_digest,
)
from .agents import scripted_agent

__version__ = "0.1.0"

"""Gym-style bindings for the microarcade engine."""

from .env import (
    ActionRepeat,
    CurriculumFinished,
    ScoreNormalize,
    WrappedEnv,
    make,
    registry,
)
from .spaces import Box, Discrete

__version__ = "0.1.0"

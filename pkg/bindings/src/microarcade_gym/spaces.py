"""Minimal space descriptors matching the common gym conventions.

Only what the wrapper needs: a Box for the pixel observations and a
Discrete for the 6-action space. No dependency on any RL framework.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Box:
    low: int
    high: int
    shape: tuple
    dtype: type = np.uint8

    def contains(self, x) -> bool:
        arr = np.asarray(x)
        return (arr.shape == self.shape and arr.dtype == np.dtype(self.dtype)
                and bool((arr >= self.low).all()) and bool((arr <= self.high).all()))

    def sample(self, rng: random.Random | None = None) -> np.ndarray:
        seed = (rng or random).randrange(2 ** 32)
        return np.random.default_rng(seed).integers(
            self.low, self.high + 1, size=self.shape, dtype=self.dtype)


@dataclass(frozen=True)
class Discrete:
    n: int

    def contains(self, x) -> bool:
        return isinstance(x, (int, np.integer)) and not isinstance(x, bool) and 0 <= int(x) < self.n

    def sample(self, rng: random.Random | None = None) -> int:
        return (rng or random).randrange(self.n)

"""The 24 predefined games: registry, lookup, and element summaries.

Definitions live as individual JSON files under ``games/data/``; the index
file maps name -> file -> provenance ("paper" for games whose rules are
anchored in published material, "reconstructed" for games composed from the
shared mechanics by name).
"""
from __future__ import annotations

import difflib
import json
from dataclasses import dataclass
from importlib import resources

from .config import GameConfig, parse_game_config

CHALLENGE_GAMES = ("dungeon", "freeway", "haunted_hallway", "invasion", "lava_maze", "tunneler")

# One-flag common palette for multi-game transfer studies.
COMMON_PALETTE = {
    "background_color": (0, 0, 0),
    "ui_color": (80, 80, 80),
    "indicator_color_1": (200, 200, 160),
    "indicator_color_2": (0, 0, 0),
    "player": (255, 255, 255),
    "opponent": (255, 80, 80),
    "ball": (220, 220, 80),
    "blocks": (66, 158, 244),
    "barriers": (38, 101, 209),
}


class UnknownGameError(KeyError):
    def __init__(self, name: str, suggestion: str | None):
        self.name = name
        self.suggestion = suggestion
        msg = f"unknown game {name!r}"
        if suggestion:
            msg += f" (did you mean {suggestion!r}?)"
        super().__init__(msg)

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class GameEntry:
    name: str
    display_name: str
    file: str
    provenance: str  # "paper" | "reconstructed"
    difficulty: str  # "solvable-by-baseline" | "challenge"
    elements: frozenset


def _games_root():
    return resources.files(__package__) / "games"


def _load_index() -> list:
    with (_games_root() / "index.json").open("r", encoding="utf-8") as f:
        return json.load(f)


def _element_flags(cfg: GameConfig) -> frozenset:
    flags = {"paddle"}
    if cfg.game_elements.ball:
        flags.add("ball")
    if cfg.game_elements.blocks:
        flags.add("blocks")
        if cfg.blocks_settings is not None and cfg.blocks_settings.harmful:
            flags.add("hazards")
    if cfg.game_elements.opponent:
        flags.add("opponent")
        if cfg.opponent_settings is not None and cfg.opponent_settings.fire_cooldown > 0:
            flags.add("bullets")
        if cfg.opponent_settings is not None and cfg.opponent_settings.behavior == "chaser":
            flags.add("hazards")
    if cfg.actions.fire:
        flags.add("bullets")
    if cfg.game_elements.static_barriers:
        flags.add("barriers")
    if cfg.episode.goal == "cross":
        flags.add("traversal-goal")
    return frozenset(flags)


def _read_config(filename: str) -> GameConfig:
    with (_games_root() / "data" / filename).open("r", encoding="utf-8") as f:
        return parse_game_config(f.read())


def game_names() -> list:
    return [entry["name"] for entry in _load_index()]


def list_games(challenge_only: bool = False) -> list:
    """All registered games as GameEntry summaries, in stable index order."""
    entries = []
    for raw in _load_index():
        if challenge_only and raw["difficulty"] != "challenge":
            continue
        cfg = _read_config(raw["file"])
        entries.append(GameEntry(name=raw["name"], display_name=raw["display_name"],
                                 file=raw["file"], provenance=raw["provenance"],
                                 difficulty=raw["difficulty"],
                                 elements=_element_flags(cfg)))
    return entries


def load_game(name: str, common_colors: bool = False) -> GameConfig:
    """Look up a predefined game by name (case-insensitive).

    ``common_colors`` swaps in the shared palette used for cross-game
    transfer studies.
    """
    key = name.strip().lower().replace(" ", "_").replace("-", "_")
    index = {entry["name"]: entry for entry in _load_index()}
    if key not in index:
        close = difflib.get_close_matches(key, index, n=1)
        raise UnknownGameError(name, close[0] if close else None)
    cfg = _read_config(index[key]["file"])
    if common_colors:
        _apply_common_palette(cfg)
    return cfg


def _apply_common_palette(cfg: GameConfig) -> None:
    d = cfg.display_settings
    d.background_color = COMMON_PALETTE["background_color"]
    d.ui_color = COMMON_PALETTE["ui_color"]
    d.indicator_color_1 = COMMON_PALETTE["indicator_color_1"]
    d.indicator_color_2 = COMMON_PALETTE["indicator_color_2"]
    cfg.player_settings.color = COMMON_PALETTE["player"]
    if cfg.opponent_settings is not None:
        cfg.opponent_settings.color = COMMON_PALETTE["opponent"]
    if cfg.ball_settings is not None:
        cfg.ball_settings.color = COMMON_PALETTE["ball"]
    if cfg.blocks_settings is not None:
        cfg.blocks_settings.color = COMMON_PALETTE["blocks"]
    if cfg.static_barrier_settings is not None:
        cfg.static_barrier_settings.color = COMMON_PALETTE["barriers"]

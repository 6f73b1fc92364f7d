"""Regenerate the sample curricula under src/microarcade/curricula/.

The interpolation stages need endpoints with identical structure, so the
easy variants are built by tweaking the serialized registry game rather
than written out by hand.

    python3 tools/generate_curricula.py
"""
from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from microarcade.config import serialize  # noqa: E402
from microarcade.curriculum import parse_curriculum  # noqa: E402
from microarcade.library import load_game  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "microarcade", "curricula")


def variant(name, **tweaks):
    doc = json.loads(serialize(load_game(name)))
    for path, value in tweaks.items():
        section, field = path.split(".")
        doc[section][field] = value
    return doc


def main():
    os.makedirs(OUT, exist_ok=True)

    easy_breakout = variant("breakout", **{
        "player_settings.width": 0.3,
        "player_settings.speed": 0.022,
        "ball_settings.speed": 0.008,
    })
    paddle_progression = {
        "unit": "episodes",
        "stages": [
            {"kind": "fixed", "game": "avalanche", "duration": 10},
            {"kind": "interpolate", "from": easy_breakout, "to": "breakout",
             "duration": 20},
            {"kind": "pool", "games": ["pong", "battle_pong", "pong_breakout"],
             "weights": [2, 1, 1], "duration": 10},
        ],
    }

    step_mix = {
        "unit": "steps",
        "stages": [
            {"kind": "fixed", "game": "collect_five", "duration": 20000},
            {"kind": "pool", "games": ["sweeper", "hedge_maze"], "duration": 20000},
        ],
    }

    for name, doc in (("paddle_progression", paddle_progression), ("step_mix", step_mix)):
        text = json.dumps(doc, indent=2) + "\n"
        parse_curriculum(text)  # fail fast on a bad schedule
        with open(os.path.join(OUT, f"{name}.json"), "w", encoding="utf-8") as f:
            f.write(text)
        print(f"wrote {name}.json")


if __name__ == "__main__":
    main()

"""Regenerate the predefined game library under src/microarcade/games/.

Each game is declared as a plain dict here, parsed through the config
schema, validated, and written in canonical serialized form. Run after any
schema or game-design change:

    python3 tools/generate_games.py
"""
from __future__ import annotations

import json
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from microarcade.config import parse_game_config, serialize, validate  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "microarcade", "games")


def game(description, actions=(), elements=(), player=None, opponent=None, ball=None,
         blocks=None, barriers=None, display=None, image=None, episode=None):
    doc = {
        "meta": {"description": description},
        "actions": {k: (k in actions) for k in ("up", "down", "left", "right", "fire")},
        "game_elements": {k: (k in elements) for k in
                          ("top_wall", "bottom_wall", "ball", "opponent", "blocks",
                           "static_barriers")},
        "display_settings": display or {},
        "player_settings": player or {},
        "opponent_settings": opponent or {},
        "ball_settings": ball or {},
        "blocks_settings": blocks or {},
        "static_barrier_settings": barriers or {},
        "image_settings": image or {},
    }
    if episode:
        doc["episode"] = episode
    return doc


WHITE = [255, 255, 255]

GAMES = {}


def register(name, display_name, provenance, difficulty, doc):
    GAMES[name] = (display_name, provenance, difficulty, doc)


# --- paddle + falling blocks ------------------------------------------------

register("avalanche", "Avalanche", "paper", "solvable-by-baseline", {
    # verbatim parameter set of the published Avalanche definition
    "meta": {"description": "Catch 50 falling blocks in a row."},
    "actions": {"up": False, "down": False, "left": True, "right": True, "fire": False},
    "game_elements": {"top_wall": False, "bottom_wall": False, "ball": False,
                      "opponent": False, "blocks": True, "static_barriers": False},
    "display_settings": {"background_color": [0, 0, 0], "ui_color": [80, 80, 80],
                         "indicator_color_1": [200, 200, 160], "indicator_color_2": [0, 0, 0]},
    "player_settings": {"width": 0.15, "height": 0.05, "speed": 0.012,
                        "color": [255, 255, 255], "steering": 0.5},
    "opponent_settings": {},
    "ball_settings": {},
    "blocks_settings": {"creation_area": [0.05, -1.0, 0.9, 1.0], "rows": 6, "cols": 6,
                        "per_row": 1, "spacing": 0.4, "color": [162, 219, 252],
                        "static_weave_fall": "fall", "speed": 0.003, "harmful": False,
                        "points": 2},
    "static_barrier_settings": {"color": [38, 101, 209]},
    "image_settings": {"color_inversion": False, "rotation": 0, "hue_shift": 0.0,
                       "saturation_shift": 0.0, "value_shift": 0.0},
})

register("invasion", "Invasion", "paper", "challenge", game(
    "Dodge 50 harmful falling blocks.",
    actions=("left", "right"), elements=("blocks",),
    player={"width": 0.1, "height": 0.05, "speed": 0.014, "color": WHITE},
    blocks={"creation_area": [0.05, -0.3, 0.9, 0.3], "rows": 3, "cols": 6, "per_row": 2,
            "spacing": 0.25, "color": [220, 80, 80], "static_weave_fall": "fall",
            "speed": 0.006, "harmful": True, "points": 2},
    episode={"goal": "survive", "required_count": 50, "max_steps": 8000},
))

# --- paddle + ball ----------------------------------------------------------

register("breakout", "Breakout", "paper", "solvable-by-baseline", game(
    "Clear 20 blocks with a bouncing ball.",
    actions=("left", "right"), elements=("top_wall", "ball", "blocks"),
    player={"width": 0.15, "height": 0.03, "speed": 0.015, "steering": 0.5, "color": WHITE},
    ball={"speed": 0.012, "radius": 0.015, "color": [200, 72, 72]},
    blocks={"creation_area": [0.05, 0.1, 0.9, 0.25], "rows": 4, "cols": 5, "per_row": 5,
            "spacing": 0.15, "color": [66, 158, 244], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 5},
    episode={"goal": "clear_blocks", "max_steps": 8000},
))

register("interference", "Interference", "reconstructed", "solvable-by-baseline", game(
    "Clear 20 weaving blocks with a bouncing ball.",
    actions=("left", "right"), elements=("top_wall", "ball", "blocks"),
    player={"width": 0.15, "height": 0.03, "speed": 0.015, "steering": 0.5, "color": WHITE},
    ball={"speed": 0.012, "radius": 0.015, "color": [200, 72, 72]},
    blocks={"creation_area": [0.05, 0.1, 0.9, 0.25], "rows": 4, "cols": 5, "per_row": 5,
            "spacing": 0.3, "color": [170, 110, 240], "static_weave_fall": "weave",
            "speed": 0.004, "harmful": False, "points": 5},
    episode={"goal": "clear_blocks", "max_steps": 8000},
))

register("juggling", "Juggling", "reconstructed", "solvable-by-baseline", game(
    "Return the ball 8 times without dropping it.",
    actions=("left", "right"), elements=("top_wall", "ball"),
    player={"width": 0.15, "height": 0.03, "speed": 0.016, "steering": 0.6, "color": WHITE},
    ball={"speed": 0.014, "radius": 0.018, "color": [220, 220, 80]},
    episode={"goal": "survive", "required_count": 8, "max_steps": 8000},
))

register("keep_ups", "Keep Ups", "reconstructed", "solvable-by-baseline", game(
    "Return a fast ball 15 times with a short paddle.",
    actions=("left", "right"), elements=("top_wall", "ball"),
    player={"width": 0.12, "height": 0.03, "speed": 0.018, "steering": 0.6, "color": WHITE},
    ball={"speed": 0.016, "radius": 0.015, "color": [220, 220, 80]},
    episode={"goal": "survive", "required_count": 15, "max_steps": 8000},
))

# --- pong family ------------------------------------------------------------

register("pong", "Pong", "paper", "solvable-by-baseline", game(
    "Get the ball past the opposing paddle.",
    actions=("up", "down"), elements=("top_wall", "bottom_wall", "ball", "opponent"),
    player={"width": 0.03, "height": 0.2, "speed": 0.02, "steering": 0.5, "color": WHITE,
            "orientation": "left"},
    opponent={"behavior": "paddle_track", "speed": 0.011, "width": 0.03, "height": 0.2,
              "color": [120, 200, 120], "fire_cooldown": 0},
    ball={"speed": 0.016, "radius": 0.02, "color": [220, 220, 80]},
    episode={"goal": "defeat_opponent", "max_steps": 8000},
))

register("battle_pong", "Battle Pong", "paper", "solvable-by-baseline", game(
    "Pong where both paddles can also shoot.",
    actions=("up", "down", "fire"),
    elements=("top_wall", "bottom_wall", "ball", "opponent"),
    player={"width": 0.03, "height": 0.2, "speed": 0.02, "steering": 0.5, "color": WHITE,
            "orientation": "left"},
    opponent={"behavior": "paddle_track", "speed": 0.011, "width": 0.03, "height": 0.2,
              "color": [220, 120, 120], "fire_cooldown": 180},
    ball={"speed": 0.016, "radius": 0.02, "color": [220, 220, 80]},
    episode={"goal": "defeat_opponent", "max_steps": 8000},
))

register("pong_breakout", "Pong Breakout", "paper", "solvable-by-baseline", game(
    "Pong with a wall of collectable blocks between the paddles.",
    actions=("up", "down"), elements=("top_wall", "bottom_wall", "ball", "opponent", "blocks"),
    player={"width": 0.03, "height": 0.2, "speed": 0.02, "steering": 0.5, "color": WHITE,
            "orientation": "left"},
    opponent={"behavior": "paddle_track", "speed": 0.011, "width": 0.03, "height": 0.2,
              "color": [120, 200, 120], "fire_cooldown": 0},
    ball={"speed": 0.016, "radius": 0.02, "color": [220, 220, 80]},
    blocks={"creation_area": [0.42, 0.05, 0.16, 0.9], "rows": 5, "cols": 4, "per_row": 4,
            "spacing": 0.25, "color": [66, 158, 244], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 5},
    episode={"goal": "defeat_opponent", "max_steps": 8000},
))

# --- shooting games ---------------------------------------------------------

register("duel", "Duel", "reconstructed", "solvable-by-baseline", game(
    "Shoot the strafing opponent before it shoots you.",
    actions=("left", "right", "fire"), elements=("opponent",),
    player={"width": 0.08, "height": 0.04, "speed": 0.015, "color": WHITE},
    opponent={"behavior": "shooter", "speed": 0.01, "width": 0.08, "height": 0.04,
              "color": [220, 120, 120], "fire_cooldown": 90},
    episode={"goal": "defeat_opponent", "max_steps": 5000},
))

register("dodgeball_duel", "Dodgeball Duel", "reconstructed", "solvable-by-baseline", game(
    "A duel with free movement and a faster-firing opponent.",
    actions=("up", "down", "left", "right", "fire"), elements=("opponent",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    opponent={"behavior": "shooter", "speed": 0.013, "width": 0.08, "height": 0.05,
              "color": [220, 120, 120], "fire_cooldown": 60},
    episode={"goal": "defeat_opponent", "max_steps": 5000},
))

register("shootout", "Shootout", "reconstructed", "solvable-by-baseline", game(
    "A duel fought around bullet-absorbing cover walls.",
    actions=("left", "right", "fire"), elements=("opponent", "static_barriers"),
    player={"width": 0.08, "height": 0.04, "speed": 0.015, "color": WHITE},
    opponent={"behavior": "shooter", "speed": 0.01, "width": 0.08, "height": 0.04,
              "color": [220, 120, 120], "fire_cooldown": 70},
    barriers={"color": [38, 101, 209],
              "layout": [[0.15, 0.45, 0.2, 0.04], [0.65, 0.45, 0.2, 0.04]]},
    episode={"goal": "defeat_opponent", "max_steps": 5000},
))

register("erosion", "Erosion", "paper", "solvable-by-baseline", game(
    "Shoot away a field of 20 blocks.",
    actions=("left", "right", "fire"), elements=("blocks",),
    player={"width": 0.08, "height": 0.04, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.05, 0.08, 0.9, 0.3], "rows": 4, "cols": 5, "per_row": 5,
            "spacing": 0.2, "color": [200, 160, 90], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 5},
    episode={"goal": "clear_blocks", "max_steps": 8000},
))

register("target_practice", "Target Practice", "reconstructed", "solvable-by-baseline", game(
    "Shoot 10 stationary targets.",
    actions=("left", "right", "fire"), elements=("blocks",),
    player={"width": 0.08, "height": 0.04, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.05, 0.1, 0.9, 0.16], "rows": 2, "cols": 5, "per_row": 5,
            "spacing": 0.3, "color": [220, 200, 90], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 10},
    episode={"goal": "clear_blocks", "max_steps": 6000},
))

register("seek_destroy", "Seek Destroy", "reconstructed", "solvable-by-baseline", game(
    "Hunt down a chasing opponent; its touch is lethal.",
    actions=("up", "down", "left", "right", "fire"), elements=("opponent",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    opponent={"behavior": "chaser", "speed": 0.006, "width": 0.07, "height": 0.07,
              "color": [220, 120, 120], "fire_cooldown": 0},
    episode={"goal": "defeat_opponent", "max_steps": 6000},
))

# --- collection / traversal games ------------------------------------------

register("collect_five", "Collect Five", "paper", "solvable-by-baseline", game(
    "Walk over five collectable blocks.",
    actions=("up", "down", "left", "right"), elements=("blocks",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.1, 0.15, 0.8, 0.5], "rows": 1, "cols": 5, "per_row": 5,
            "spacing": 0.5, "color": [90, 220, 120], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 20},
    episode={"goal": "clear_blocks", "max_steps": 4000},
))

register("sweeper", "Sweeper", "reconstructed", "solvable-by-baseline", game(
    "Sweep up a 5x5 field of collectable blocks.",
    actions=("up", "down", "left", "right"), elements=("blocks",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.1, 0.1, 0.8, 0.55], "rows": 5, "cols": 5, "per_row": 5,
            "spacing": 0.45, "color": [90, 220, 120], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 4},
    episode={"goal": "clear_blocks", "max_steps": 6000},
))

register("last_block", "Last Block", "reconstructed", "solvable-by-baseline", game(
    "Catch the single weaving block worth everything.",
    actions=("up", "down", "left", "right"), elements=("blocks",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.4, 0.2, 0.2, 0.1], "rows": 1, "cols": 1, "per_row": 1,
            "spacing": 0.2, "color": [90, 220, 120], "static_weave_fall": "weave",
            "speed": 0.008, "harmful": False, "points": 100},
    episode={"goal": "clear_blocks", "max_steps": 4000},
))

register("hedge_maze", "Hedge Maze", "paper", "solvable-by-baseline", game(
    "Cross the maze to the far side.",
    actions=("up", "down", "left", "right"), elements=("static_barriers",),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    barriers={"color": [38, 140, 60],
              "layout": [[0.0, 0.35, 0.6, 0.05], [0.4, 0.65, 0.6, 0.05]]},
    episode={"goal": "cross", "max_steps": 3000},
))

register("freeway", "Freeway", "paper", "challenge", game(
    "Cross upward through lanes of weaving hazards.",
    actions=("up", "down"), elements=("blocks",),
    player={"width": 0.05, "height": 0.05, "speed": 0.012, "color": WHITE},
    blocks={"creation_area": [0.0, 0.15, 1.0, 0.6], "rows": 5, "cols": 4, "per_row": 2,
            "spacing": 0.35, "color": [220, 80, 80], "static_weave_fall": "weave",
            "speed": 0.008, "harmful": True, "points": 0},
    episode={"goal": "cross", "max_steps": 4000},
))

register("lava_maze", "Lava Maze", "reconstructed", "challenge", game(
    "Cross a walled field dotted with lethal lava patches.",
    actions=("up", "down", "left", "right"), elements=("blocks", "static_barriers"),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    blocks={"creation_area": [0.1, 0.3, 0.8, 0.4], "rows": 2, "cols": 3, "per_row": 2,
            "spacing": 0.4, "color": [240, 90, 30], "static_weave_fall": "static",
            "speed": 0.0, "harmful": True, "points": 0},
    barriers={"color": [38, 101, 209],
              "layout": [[0.0, 0.5, 0.3, 0.05], [0.7, 0.5, 0.3, 0.05]]},
    episode={"goal": "cross", "max_steps": 4000},
))

register("haunted_hallway", "Haunted Hallway", "reconstructed", "challenge", game(
    "Cross a near-dark corridor stalked by a chaser.",
    actions=("up", "down", "left", "right"), elements=("opponent", "static_barriers"),
    display={"background_color": [8, 8, 8], "ui_color": [30, 30, 34]},
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": [40, 40, 46]},
    opponent={"behavior": "chaser", "speed": 0.005, "width": 0.07, "height": 0.07,
              "color": [16, 16, 18], "fire_cooldown": 0},
    barriers={"color": [20, 20, 24],
              "layout": [[0.0, 0.0, 0.35, 0.75], [0.65, 0.25, 0.35, 0.75]]},
    episode={"goal": "cross", "max_steps": 4000},
))

register("dungeon", "Dungeon", "paper", "challenge", game(
    "Collect the treasure while a chaser closes in.",
    actions=("up", "down", "left", "right"), elements=("blocks", "opponent", "static_barriers"),
    player={"width": 0.06, "height": 0.06, "speed": 0.015, "color": WHITE},
    opponent={"behavior": "chaser", "speed": 0.007, "width": 0.07, "height": 0.07,
              "color": [220, 120, 120], "fire_cooldown": 0},
    blocks={"creation_area": [0.1, 0.12, 0.8, 0.25], "rows": 1, "cols": 5, "per_row": 5,
            "spacing": 0.5, "color": [230, 200, 80], "static_weave_fall": "static",
            "speed": 0.0, "harmful": False, "points": 20},
    barriers={"color": [38, 101, 209],
              "layout": [[0.2, 0.45, 0.25, 0.05], [0.55, 0.45, 0.25, 0.05]]},
    episode={"goal": "clear_blocks", "max_steps": 5000},
))

register("tunneler", "Tunneler", "paper", "challenge", game(
    "Shoot a tunnel through the lethal wall, then cross.",
    actions=("up", "down", "left", "right", "fire"), elements=("blocks",),
    player={"width": 0.06, "height": 0.06, "speed": 0.012, "color": WHITE},
    blocks={"creation_area": [0.0, 0.35, 1.0, 0.2], "rows": 3, "cols": 8, "per_row": 8,
            "spacing": 0.1, "color": [160, 120, 70], "static_weave_fall": "static",
            "speed": 0.0, "harmful": True, "points": 0},
    episode={"goal": "cross", "max_steps": 6000},
))


def main():
    data_dir = os.path.join(OUT, "data")
    os.makedirs(data_dir, exist_ok=True)
    index = []
    challenge = {"dungeon", "freeway", "haunted_hallway", "invasion", "lava_maze", "tunneler"}
    assert {n for n, (_, _, d, _) in GAMES.items() if d == "challenge"} == challenge
    assert len(GAMES) == 24, len(GAMES)
    for name in sorted(GAMES):
        display_name, provenance, difficulty, doc = GAMES[name]
        cfg = parse_game_config(json.dumps(doc))
        report = validate(cfg)
        if not report.ok:
            raise SystemExit(f"{name}: invalid config\n{report}")
        filename = f"{name}.json"
        with open(os.path.join(data_dir, filename), "w", encoding="utf-8") as f:
            f.write(serialize(cfg))
        index.append({"name": name, "display_name": display_name, "file": filename,
                      "provenance": provenance, "difficulty": difficulty})
    with open(os.path.join(OUT, "index.json"), "w", encoding="utf-8") as f:
        json.dump(index, f, indent=2)
        f.write("\n")
    print(f"wrote {len(index)} game definitions")


if __name__ == "__main__":
    main()

"""Render a WorldState to the fixed 84x84x3 RGB observation.

Layout (pixel coordinates, row-major):
  rows 2-4            score indicator bar (fill = (score + 100) / 200)
  rows 79-81          step indicator bar (fill = step_count / max_steps)
  ring at 6..8/76..78 UI border framing the play area
  [8, 76) x [8, 76)   the play area; world [0, 1]^2 maps onto its 68 px

Entities are flat-filled rectangles (discs for the ball); static barriers
get a fixed two-color checker texture. Rendering is a pure function of the
world state and display settings. No anti-aliasing: edges snap to pixels.
"""
from __future__ import annotations

import struct

import numpy as np

from .world import WorldState

FRAME_SIZE = 84
PLAY_PX0 = 8
PLAY_PX1 = 76
PLAY_PX = PLAY_PX1 - PLAY_PX0  # 68
BORDER_PX0 = 6
BORDER_PX1 = 78
BAR_X0, BAR_X1 = PLAY_PX0, PLAY_PX1
SCORE_BAR_ROWS = (2, 5)
TIME_BAR_ROWS = (79, 82)

RAW_MAGIC = b"MARC"


def _px(u: float) -> int:
    return PLAY_PX0 + int(round(u * PLAY_PX))


def _fill_rect(frame: np.ndarray, x: float, y: float, w: float, h: float, color) -> None:
    x0 = max(_px(x), PLAY_PX0)
    x1 = min(_px(x + w), PLAY_PX1)
    y0 = max(_px(y), PLAY_PX0)
    y1 = min(_px(y + h), PLAY_PX1)
    if x1 > x0 and y1 > y0:
        frame[y0:y1, x0:x1] = color


def _fill_checker(frame: np.ndarray, x: float, y: float, w: float, h: float, color) -> None:
    x0 = max(_px(x), PLAY_PX0)
    x1 = min(_px(x + w), PLAY_PX1)
    y0 = max(_px(y), PLAY_PX0)
    y1 = min(_px(y + h), PLAY_PX1)
    if x1 <= x0 or y1 <= y0:
        return
    dark = tuple(int(c * 0.55) for c in color)
    ys, xs = np.mgrid[y0:y1, x0:x1]
    mask = ((xs // 2) + (ys // 2)) % 2 == 0
    region = frame[y0:y1, x0:x1]
    region[mask] = color
    region[~mask] = dark


def _fill_disc(frame: np.ndarray, cx: float, cy: float, r: float, color) -> None:
    pcx, pcy = _px(cx), _px(cy)
    pr = max(1, int(round(r * PLAY_PX)))
    y0 = max(pcy - pr, PLAY_PX0)
    y1 = min(pcy + pr + 1, PLAY_PX1)
    x0 = max(pcx - pr, PLAY_PX0)
    x1 = min(pcx + pr + 1, PLAY_PX1)
    if x1 <= x0 or y1 <= y0:
        return
    ys, xs = np.mgrid[y0:y1, x0:x1]
    mask = (xs - pcx) ** 2 + (ys - pcy) ** 2 <= pr * pr
    frame[y0:y1, x0:x1][mask] = color


def render(w: WorldState, display=None) -> np.ndarray:
    """Render the world with the given display settings (defaults to the
    world's own config). Returns a fresh 84x84x3 uint8 array."""
    if display is None:
        display = w.cfg.display_settings
    frame = np.empty((FRAME_SIZE, FRAME_SIZE, 3), dtype=np.uint8)
    frame[:] = display.background_color

    # UI border ring around the play area
    frame[BORDER_PX0:BORDER_PX1, BORDER_PX0:BORDER_PX1] = display.ui_color
    frame[PLAY_PX0:PLAY_PX1, PLAY_PX0:PLAY_PX1] = display.background_color

    # indicator bars: score on top, elapsed steps on the bottom
    max_steps = max(1, w.cfg.episode.max_steps)
    score_fill = int(round(PLAY_PX * (w.score + 100) / 200))
    time_fill = int(round(PLAY_PX * min(w.step_count, max_steps) / max_steps))
    frame[SCORE_BAR_ROWS[0]:SCORE_BAR_ROWS[1], BAR_X0:BAR_X1] = display.indicator_color_2
    frame[SCORE_BAR_ROWS[0]:SCORE_BAR_ROWS[1], BAR_X0:BAR_X0 + score_fill] = display.indicator_color_1
    frame[TIME_BAR_ROWS[0]:TIME_BAR_ROWS[1], BAR_X0:BAR_X1] = display.indicator_color_2
    frame[TIME_BAR_ROWS[0]:TIME_BAR_ROWS[1], BAR_X0:BAR_X0 + time_fill] = display.indicator_color_1

    cfg = w.cfg
    if cfg.static_barrier_settings is not None:
        for b in w.barriers:
            _fill_checker(frame, b.x, b.y, b.w, b.h, cfg.static_barrier_settings.color)
    if cfg.blocks_settings is not None:
        for blk in w.blocks:
            _fill_rect(frame, blk.rect.x, blk.rect.y, blk.rect.w, blk.rect.h,
                       cfg.blocks_settings.color)
    for bullet in w.bullets:
        color = cfg.player_settings.color if bullet.owner == "player" else (
            cfg.opponent_settings.color if cfg.opponent_settings is not None else (255, 255, 255))
        _fill_rect(frame, bullet.rect.x, bullet.rect.y, bullet.rect.w, bullet.rect.h, color)
    if w.opponent is not None and cfg.opponent_settings is not None:
        o = w.opponent.rect
        _fill_rect(frame, o.x, o.y, o.w, o.h, cfg.opponent_settings.color)
    if w.ball is not None and cfg.ball_settings is not None:
        _fill_disc(frame, w.ball.x, w.ball.y, w.ball.r, cfg.ball_settings.color)
    p = w.player
    _fill_rect(frame, p.x, p.y, p.w, p.h, cfg.player_settings.color)
    return frame


# ---------------------------------------------------------------------------
# frame export
# ---------------------------------------------------------------------------

def save_png(frame: np.ndarray, path) -> None:
    from PIL import Image
    Image.fromarray(frame, mode="RGB").save(path)


def write_raw(frames, path) -> None:
    """Raw byte dump: 20-byte header (magic, width, height, channels, count,
    little-endian uint32) followed by the frames, contiguous uint8."""
    frames = list(frames)
    with open(path, "wb") as f:
        f.write(RAW_MAGIC)
        f.write(struct.pack("<IIII", FRAME_SIZE, FRAME_SIZE, 3, len(frames)))
        for fr in frames:
            f.write(np.ascontiguousarray(fr, dtype=np.uint8).tobytes())


def read_raw(path) -> np.ndarray:
    with open(path, "rb") as f:
        magic = f.read(4)
        if magic != RAW_MAGIC:
            raise ValueError("not a raw frame dump")
        width, height, channels, count = struct.unpack("<IIII", f.read(16))
        data = np.frombuffer(f.read(), dtype=np.uint8)
    return data.reshape(count, height, width, channels)

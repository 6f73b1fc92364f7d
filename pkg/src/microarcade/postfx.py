"""Image post-processing: HSV shifts, color inversion, quarter-turn rotation.

Applied in fixed order: hue/saturation/value shift, then inversion, then
rotation. Hue shifts wrap around the hue circle; saturation and value
shifts clamp to [0, 1]. HSV uses the standard hexcone model with hue in
[0, 1).
"""
from __future__ import annotations

import numpy as np

ALLOWED_ROTATIONS = (0, 90, 180, 270)


def rgb_to_hsv(rgb: np.ndarray) -> np.ndarray:
    """Vectorized hexcone RGB -> HSV. Input and output are floats in [0, 1]."""
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    maxc = np.max(rgb, axis=-1)
    minc = np.min(rgb, axis=-1)
    delta = maxc - minc
    v = maxc
    s = np.where(maxc > 0, delta / np.where(maxc > 0, maxc, 1), 0.0)
    # avoid divide-by-zero; hue is irrelevant where delta == 0
    d = np.where(delta > 0, delta, 1.0)
    h = np.where(maxc == r, (g - b) / d,
                 np.where(maxc == g, 2.0 + (b - r) / d, 4.0 + (r - g) / d))
    h = np.where(delta > 0, (h / 6.0) % 1.0, 0.0)
    return np.stack([h, s, v], axis=-1)


def hsv_to_rgb(hsv: np.ndarray) -> np.ndarray:
    h, s, v = hsv[..., 0], hsv[..., 1], hsv[..., 2]
    i = np.floor(h * 6.0).astype(np.int64) % 6
    f = h * 6.0 - np.floor(h * 6.0)
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    r = np.choose(i, [v, q, p, p, t, v])
    g = np.choose(i, [t, v, v, q, p, p])
    b = np.choose(i, [p, p, t, v, v, q])
    return np.stack([r, g, b], axis=-1)


def invert(frame: np.ndarray) -> np.ndarray:
    return (255 - frame).astype(np.uint8)


def rotate(frame: np.ndarray, degrees: int) -> np.ndarray:
    if degrees not in ALLOWED_ROTATIONS:
        raise ValueError(f"rotation must be one of {ALLOWED_ROTATIONS}, got {degrees}")
    if degrees == 0:
        return frame
    return np.ascontiguousarray(np.rot90(frame, k=degrees // 90))


def hsv_shift(frame: np.ndarray, hue: float, saturation: float, value: float) -> np.ndarray:
    hsv = rgb_to_hsv(frame.astype(np.float64) / 255.0)
    hsv[..., 0] = (hsv[..., 0] + hue) % 1.0
    hsv[..., 1] = np.clip(hsv[..., 1] + saturation, 0.0, 1.0)
    hsv[..., 2] = np.clip(hsv[..., 2] + value, 0.0, 1.0)
    rgb = hsv_to_rgb(hsv)
    return np.clip(np.round(rgb * 255.0), 0, 255).astype(np.uint8)


def postprocess(frame: np.ndarray, settings) -> np.ndarray:
    """Apply an ImageSettings (concrete, static values) to a frame."""
    out = frame
    if settings.hue_shift != 0.0 or settings.saturation_shift != 0.0 or settings.value_shift != 0.0:
        out = hsv_shift(out, settings.hue_shift, settings.saturation_shift, settings.value_shift)
    if settings.color_inversion:
        out = invert(out)
    out = rotate(out, settings.rotation)
    return out

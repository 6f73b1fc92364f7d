"""AABB geometry and ball reflection."""
from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass
class Rect:
    x: float  # top-left; y grows downward
    y: float
    w: float
    h: float

    @property
    def cx(self) -> float:
        return self.x + self.w / 2

    @property
    def cy(self) -> float:
        return self.y + self.h / 2

    def overlaps(self, other: "Rect") -> bool:
        return (self.x < other.x + other.w and other.x < self.x + self.w
                and self.y < other.y + other.h and other.y < self.y + self.h)

    def contains_point(self, px: float, py: float) -> bool:
        return self.x <= px <= self.x + self.w and self.y <= py <= self.y + self.h


def reflect_ball(velocity: tuple[float, float], surface_normal: tuple[float, float],
                 hit_offset: float = 0.0, steering: float = 0.0) -> tuple[float, float]:
    """Specular reflection with a paddle-steering bias, preserving speed.

    ``hit_offset`` is where the ball struck the surface, -1 (one end) to +1
    (other end). The outgoing tangential component is the specular one plus
    ``steering * hit_offset * speed``, then the vector is renormalized to the
    incoming speed. With offset 0 or steering 0 this is a pure specular
    bounce.
    """
    vx, vy = velocity
    nx, ny = surface_normal
    speed = math.hypot(vx, vy)
    if speed == 0.0:
        raise ValueError("cannot reflect a zero velocity")
    vdotn = vx * nx + vy * ny
    sx, sy = vx - 2 * vdotn * nx, vy - 2 * vdotn * ny  # specular
    if steering == 0.0 or hit_offset == 0.0:
        return (sx, sy)
    tx, ty = -ny, nx  # tangent unit vector
    t_comp = sx * tx + sy * ty + steering * hit_offset * speed
    # keep a minimum normal component so the ball always leaves the surface
    t_comp = max(-0.98 * speed, min(0.98 * speed, t_comp))
    n_comp = sx * nx + sy * ny
    n_sign = 1.0 if n_comp >= 0 else -1.0
    n_comp = n_sign * math.sqrt(speed * speed - t_comp * t_comp)
    return (t_comp * tx + n_comp * nx, t_comp * ty + n_comp * ny)


def penetration_normal(ball_cx: float, ball_cy: float, r: float, rect: Rect) -> tuple[float, float]:
    """Outward normal of the rect face the ball penetrated least through."""
    left = (ball_cx + r) - rect.x
    right = (rect.x + rect.w) - (ball_cx - r)
    top = (ball_cy + r) - rect.y
    bottom = (rect.y + rect.h) - (ball_cy - r)
    m = min(left, right, top, bottom)
    if m == left:
        return (-1.0, 0.0)
    if m == right:
        return (1.0, 0.0)
    if m == top:
        return (0.0, -1.0)
    return (0.0, 1.0)

"""Deterministic fixed-step episode simulation.

Coordinate system: the play area is the unit square [0, 1] x [0, 1], x to
the right, y downward. Speeds are in play-area units per frame. Update
order within one step is fixed for determinism: player, opponent, bullets,
ball, blocks, collision resolution, scoring, termination.
"""
from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from typing import Optional

from .actions import Action, EffectiveAction, apply_action
from .config import ConcreteConfig
from .params import round_half_up
from .physics import Rect, penetration_normal, reflect_ball

RUNNING = "running"
WON = "won"
LOST = "lost"
TIMED_OUT = "timed_out"

# Bullet geometry and pacing are engine constants (normalized units/frames).
BULLET_W = 0.01
BULLET_H = 0.03
BULLET_SPEED = 0.03
PLAYER_FIRE_COOLDOWN = 15

# Score event kinds and their fixed deltas. None = the block's point value.
EVENT_DELTAS = {
    "player_passed_opposite_side": 100,
    "player_hit_collectable": None,
    "player_hit_hazard": -100,
    "ball_passed_opponent_side": 100,
    "ball_passed_player_side": -100,
    "ball_hit_collectable": None,
    "bullet_hit_collectable": None,
    "bullet_hit_opponent": 100,
    "bullet_hit_player": -100,
    "block_fell_past_player": -100,
    "timeout": 0,
    "survive_complete": 100,
}

WIN_EVENTS = frozenset({"player_passed_opposite_side", "ball_passed_opponent_side",
                        "bullet_hit_opponent", "survive_complete"})
LOSS_EVENTS = frozenset({"player_hit_hazard", "ball_passed_player_side",
                         "bullet_hit_player", "block_fell_past_player"})


@dataclass(frozen=True)
class ScoreEvent:
    kind: str
    delta: int


@dataclass
class StepOutcome:
    reward: int
    events: list
    terminal: bool
    info: dict


@dataclass
class BallState:
    x: float
    y: float
    vx: float
    vy: float
    r: float

    def rect(self) -> Rect:
        return Rect(self.x - self.r, self.y - self.r, 2 * self.r, 2 * self.r)


@dataclass
class Block:
    rect: Rect
    points: int
    harmful: bool
    mode: str
    dir: float = 1.0


@dataclass
class Bullet:
    rect: Rect
    vx: float
    vy: float
    owner: str  # "player" | "opponent"


@dataclass
class OpponentState:
    rect: Rect
    behavior: str
    speed: float
    fire_cooldown: int  # frames between shots; 0 disables firing
    cooldown: int = 0
    strafe_dir: float = 1.0


@dataclass
class FallSpawner:
    remaining: int
    interval: int
    timer: int
    cols: int
    per_row: int
    cell_w: float
    area_x: float
    spawn_y: float
    block_w: float
    block_h: float


@dataclass
class WorldState:
    cfg: ConcreteConfig
    rng: random.Random
    player: Rect
    opponent: Optional[OpponentState] = None
    ball: Optional[BallState] = None
    blocks: list = field(default_factory=list)
    bullets: list = field(default_factory=list)
    barriers: list = field(default_factory=list)
    spawner: Optional[FallSpawner] = None
    score: int = 0
    step_count: int = 0
    status: str = RUNNING
    player_cooldown: int = 0
    return_count: int = 0
    survived_count: int = 0


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _block_geometry(b) -> tuple:
    ax, ay, aw, ah = b.creation_area
    spacing = min(max(b.spacing, 0.0), 0.9)
    cell_w = aw / b.cols
    cell_h = ah / b.rows
    return ax, ay, aw, ah, cell_w, cell_h, cell_w * (1 - spacing), cell_h * (1 - spacing)


def _grid_columns(cols: int, per_row: int, row: int) -> list:
    if per_row >= cols:
        return list(range(cols))
    base = [math.floor((i + 0.5) * cols / per_row) for i in range(per_row)]
    return sorted({(c + row) % cols for c in base})


def fall_budget(cfg: ConcreteConfig) -> int:
    """Total blocks a fall spawner will emit: the 100-point budget."""
    b = cfg.blocks_settings
    if b.points > 0:
        return max(1, round_half_up(100 / b.points))
    return max(1, cfg.episode.required_count)


def init_world(cfg: ConcreteConfig, seed: int) -> WorldState:
    rng = random.Random(seed)
    p = cfg.player_settings
    if p.orientation == "bottom":
        player = Rect(0.5 - p.width / 2, 1.0 - p.height, p.width, p.height)
    else:  # left
        player = Rect(0.0, 0.5 - p.height / 2, p.width, p.height)
    w = WorldState(cfg=cfg, rng=rng, player=player)

    if cfg.game_elements.static_barriers and cfg.static_barrier_settings is not None:
        w.barriers = [Rect(*r) for r in cfg.static_barrier_settings.layout]

    if cfg.game_elements.opponent:
        o = cfg.opponent_settings
        if p.orientation == "bottom":
            rect = Rect(0.5 - o.width / 2, 0.02, o.width, o.height)
        else:
            rect = Rect(1.0 - o.width, 0.5 - o.height / 2, o.width, o.height)
        if o.behavior == "chaser":
            rect.y = 0.1 if p.orientation == "bottom" else rect.y
        w.opponent = OpponentState(rect=rect, behavior=o.behavior, speed=o.speed,
                                   fire_cooldown=int(o.fire_cooldown),
                                   cooldown=int(o.fire_cooldown))

    if cfg.game_elements.ball:
        b = cfg.ball_settings
        angle = rng.uniform(0.25, 0.85) * (1 if rng.random() < 0.5 else -1)
        if p.orientation == "bottom":  # launch down toward the player
            vx, vy = b.speed * math.sin(angle), b.speed * math.cos(angle)
        else:  # launch left toward the player
            vx, vy = -b.speed * math.cos(angle), b.speed * math.sin(angle)
        w.ball = BallState(0.5, 0.5, vx, vy, b.radius)

    if cfg.game_elements.blocks:
        b = cfg.blocks_settings
        ax, ay, aw, ah, cell_w, cell_h, bw, bh = _block_geometry(b)
        if b.static_weave_fall == "fall":
            speed = max(b.speed, 1e-6)
            interval = max(1, round_half_up(b.spacing / speed))
            w.spawner = FallSpawner(remaining=fall_budget(cfg), interval=interval,
                                    timer=0, cols=b.cols, per_row=b.per_row,
                                    cell_w=cell_w, area_x=ax,
                                    spawn_y=ay + ah - bh, block_w=bw, block_h=bh)
        else:
            for r in range(b.rows):
                for c in _grid_columns(b.cols, b.per_row, r):
                    rect = Rect(ax + c * cell_w + (cell_w - bw) / 2,
                                ay + r * cell_h + (cell_h - bh) / 2, bw, bh)
                    w.blocks.append(Block(rect=rect, points=b.points, harmful=b.harmful,
                                          mode=b.static_weave_fall,
                                          dir=1.0 if r % 2 == 0 else -1.0))
    return w


# ---------------------------------------------------------------------------
# per-step subsystem updates
# ---------------------------------------------------------------------------

def _resolve_barriers_axis(rect: Rect, barriers, dx: float, dy: float) -> None:
    for b in barriers:
        if rect.overlaps(b):
            if dx > 0:
                rect.x = b.x - rect.w
            elif dx < 0:
                rect.x = b.x + b.w
            if dy > 0:
                rect.y = b.y - rect.h
            elif dy < 0:
                rect.y = b.y + b.h


def _move_actor(rect: Rect, dx: float, dy: float, barriers) -> None:
    if dx:
        rect.x += dx
        _resolve_barriers_axis(rect, barriers, dx, 0.0)
        rect.x = min(max(rect.x, 0.0), 1.0 - rect.w)
    if dy:
        rect.y += dy
        _resolve_barriers_axis(rect, barriers, 0.0, dy)
        rect.y = min(max(rect.y, 0.0), 1.0 - rect.h)


def _move_player(w: WorldState, eff: EffectiveAction, events: list) -> None:
    cfg = w.cfg
    speed = cfg.player_settings.speed
    _move_actor(w.player, eff.move_x * speed, eff.move_y * speed, w.barriers)
    if cfg.episode.goal == "cross":
        if cfg.player_settings.orientation == "bottom":
            if w.player.y <= 0.0:
                events.append(ScoreEvent("player_passed_opposite_side", 100))
        elif w.player.x + w.player.w >= 1.0:
            events.append(ScoreEvent("player_passed_opposite_side", 100))


def _spawn_bullet(w: WorldState, shooter: Rect, owner: str) -> None:
    toward_opponent = owner == "player"
    if w.cfg.player_settings.orientation == "bottom":
        vy = -BULLET_SPEED if toward_opponent else BULLET_SPEED
        y = shooter.y - BULLET_H if toward_opponent else shooter.y + shooter.h
        rect = Rect(shooter.cx - BULLET_W / 2, y, BULLET_W, BULLET_H)
        w.bullets.append(Bullet(rect, 0.0, vy, owner))
    else:
        vx = BULLET_SPEED if toward_opponent else -BULLET_SPEED
        x = shooter.x + shooter.w if toward_opponent else shooter.x - BULLET_W
        rect = Rect(x, shooter.cy - BULLET_H / 2, BULLET_W, BULLET_H)
        w.bullets.append(Bullet(rect, vx, 0.0, owner))


def _player_fire(w: WorldState, eff: EffectiveAction) -> None:
    if w.player_cooldown > 0:
        w.player_cooldown -= 1
    if not eff.fire or w.player_cooldown > 0:
        return
    if any(b.owner == "player" for b in w.bullets):
        return  # one player bullet airborne at a time
    _spawn_bullet(w, w.player, "player")
    w.player_cooldown = PLAYER_FIRE_COOLDOWN


def _cap(delta: float, speed: float) -> float:
    return max(-speed, min(speed, delta))


def update_opponent(opponent: OpponentState, w: WorldState, rng: random.Random) -> OpponentState:
    """Advance the opponent one frame: movement by behavior, then firing."""
    o = opponent
    vertical = w.cfg.player_settings.orientation == "left"
    if o.behavior == "paddle_track":
        target = w.ball if w.ball is not None else None
        if target is not None:
            if vertical:
                o.rect.y += _cap(target.y - o.rect.cy, o.speed)
            else:
                o.rect.x += _cap(target.x - o.rect.cx, o.speed)
    elif o.behavior == "shooter":
        if vertical:
            o.rect.y += o.strafe_dir * o.speed
            if o.rect.y <= 0.0 or o.rect.y + o.rect.h >= 1.0:
                o.strafe_dir *= -1
        else:
            o.rect.x += o.strafe_dir * o.speed
            if o.rect.x <= 0.0 or o.rect.x + o.rect.w >= 1.0:
                o.strafe_dir *= -1
    elif o.behavior == "chaser":
        dx = _cap(w.player.cx - o.rect.cx, o.speed)
        dy = _cap(w.player.cy - o.rect.cy, o.speed)
        _move_actor(o.rect, dx, dy, w.barriers)
    o.rect.x = min(max(o.rect.x, 0.0), 1.0 - o.rect.w)
    o.rect.y = min(max(o.rect.y, 0.0), 1.0 - o.rect.h)

    if o.fire_cooldown > 0:
        o.cooldown -= 1
        if o.cooldown <= 0:
            _spawn_bullet(w, o.rect, "opponent")
            o.cooldown = o.fire_cooldown + rng.randint(0, max(1, o.fire_cooldown // 2))
    return o


def _update_bullets(w: WorldState) -> None:
    kept = []
    for b in w.bullets:
        b.rect.x += b.vx
        b.rect.y += b.vy
        if b.rect.y + b.rect.h < -0.1 or b.rect.y > 1.1 or b.rect.x + b.rect.w < -0.1 or b.rect.x > 1.1:
            continue
        if any(b.rect.overlaps(r) for r in w.barriers):
            continue  # barriers absorb bullets
        kept.append(b)
    w.bullets = kept


def _paddle_bounce(w: WorldState, paddle: Rect, normal, steering: float, is_player: bool) -> None:
    ball = w.ball
    if normal == (0.0, -1.0):
        offset = (ball.x - paddle.cx) / (paddle.w / 2 + ball.r)
        ball.y = paddle.y - ball.r
    elif normal == (0.0, 1.0):
        offset = (ball.x - paddle.cx) / (paddle.w / 2 + ball.r)
        ball.y = paddle.y + paddle.h + ball.r
    elif normal == (1.0, 0.0):
        offset = (ball.y - paddle.cy) / (paddle.h / 2 + ball.r)
        ball.x = paddle.x + paddle.w + ball.r
    else:
        offset = (ball.y - paddle.cy) / (paddle.h / 2 + ball.r)
        ball.x = paddle.x - ball.r
    offset = max(-1.0, min(1.0, offset))
    ball.vx, ball.vy = reflect_ball((ball.vx, ball.vy), normal, offset, steering)
    if is_player:
        w.return_count += 1


def _update_ball(w: WorldState, events: list) -> None:
    ball = w.ball
    if ball is None:
        return
    cfg = w.cfg
    ball.x += ball.vx
    ball.y += ball.vy
    orientation = cfg.player_settings.orientation
    goal = cfg.episode.goal
    r = ball.r

    if orientation == "bottom":
        # side walls always reflect
        if ball.x - r < 0.0:
            ball.x = 2 * r - ball.x
            ball.vx = abs(ball.vx)
        elif ball.x + r > 1.0:
            ball.x = 2 * (1.0 - r) - ball.x
            ball.vx = -abs(ball.vx)
        top_open = not cfg.game_elements.top_wall and goal == "defeat_opponent"
        if ball.y - r < 0.0:
            if top_open:
                if ball.y + r < 0.0:
                    events.append(ScoreEvent("ball_passed_opponent_side", 100))
                    w.ball = None
                    return
            else:
                ball.y = 2 * r - ball.y
                ball.vy = abs(ball.vy)
        if w.ball is not None and ball.y + r > 1.0:
            if cfg.game_elements.bottom_wall:
                ball.y = 2 * (1.0 - r) - ball.y
                ball.vy = -abs(ball.vy)
            elif ball.y - r > 1.0:
                events.append(ScoreEvent("ball_passed_player_side", -100))
                w.ball = None
                return
    else:  # left orientation: top/bottom reflect, left/right are scoring edges
        if ball.y - r < 0.0:
            ball.y = 2 * r - ball.y
            ball.vy = abs(ball.vy)
        elif ball.y + r > 1.0:
            ball.y = 2 * (1.0 - r) - ball.y
            ball.vy = -abs(ball.vy)
        if ball.x + r < 0.0:
            events.append(ScoreEvent("ball_passed_player_side", -100))
            w.ball = None
            return
        if ball.x - r > 1.0:
            if goal == "defeat_opponent":
                events.append(ScoreEvent("ball_passed_opponent_side", 100))
            w.ball = None
            return

    steering = cfg.player_settings.steering
    brect = ball.rect()
    if brect.overlaps(w.player):
        if orientation == "bottom" and ball.vy > 0:
            _paddle_bounce(w, w.player, (0.0, -1.0), steering, True)
        elif orientation == "left" and ball.vx < 0:
            _paddle_bounce(w, w.player, (1.0, 0.0), steering, True)
    if w.opponent is not None and brect.overlaps(w.opponent.rect):
        if orientation == "bottom" and ball.vy < 0:
            _paddle_bounce(w, w.opponent.rect, (0.0, 1.0), steering, False)
        elif orientation == "left" and ball.vx > 0:
            _paddle_bounce(w, w.opponent.rect, (-1.0, 0.0), steering, False)
    for barrier in w.barriers:
        if ball.rect().overlaps(barrier):
            normal = penetration_normal(ball.x, ball.y, r, barrier)
            ball.vx, ball.vy = reflect_ball((ball.vx, ball.vy), normal)
            if normal[0] < 0:
                ball.x = barrier.x - r
            elif normal[0] > 0:
                ball.x = barrier.x + barrier.w + r
            elif normal[1] < 0:
                ball.y = barrier.y - r
            else:
                ball.y = barrier.y + barrier.h + r


def update_blocks(blocks: list, mode: str, speed: float, rng: random.Random) -> list:
    """Advance block motion one frame (no spawning or scoring)."""
    if mode == "static":
        return blocks
    for b in blocks:
        if mode == "fall":
            b.rect.y += speed
        else:  # weave: horizontal oscillation, reversing at play-area edges
            b.rect.x += b.dir * speed
            if b.rect.x <= 0.0:
                b.rect.x = 0.0
                b.dir = 1.0
            elif b.rect.x + b.rect.w >= 1.0:
                b.rect.x = 1.0 - b.rect.w
                b.dir = -1.0
    return blocks


def _update_blocks_world(w: WorldState, events: list) -> None:
    b = w.cfg.blocks_settings
    if b is None:
        return
    update_blocks(w.blocks, b.static_weave_fall, b.speed, w.rng)
    sp = w.spawner
    if sp is not None and sp.remaining > 0:
        sp.timer -= 1
        if sp.timer <= 0:
            n = min(sp.per_row, sp.remaining, sp.cols)
            cols = sorted(w.rng.sample(range(sp.cols), n))
            for c in cols:
                rect = Rect(sp.area_x + c * sp.cell_w + (sp.cell_w - sp.block_w) / 2,
                            sp.spawn_y, sp.block_w, sp.block_h)
                w.blocks.append(Block(rect=rect, points=b.points, harmful=b.harmful, mode="fall"))
            sp.remaining -= n
            sp.timer = sp.interval
    # despawn blocks that fell past the bottom edge
    kept = []
    for blk in w.blocks:
        if blk.mode == "fall" and blk.rect.y > 1.0:
            if blk.harmful:
                w.survived_count += 1
            else:
                events.append(ScoreEvent("block_fell_past_player", -100))
        else:
            kept.append(blk)
    w.blocks = kept


def _resolve_collisions(w: WorldState, events: list) -> None:
    # player vs blocks
    kept = []
    for blk in w.blocks:
        if blk.rect.overlaps(w.player):
            if blk.harmful:
                events.append(ScoreEvent("player_hit_hazard", -100))
                kept.append(blk)
            else:
                events.append(ScoreEvent("player_hit_collectable", blk.points))
        else:
            kept.append(blk)
    w.blocks = kept

    # ball vs blocks
    if w.ball is not None:
        brect = w.ball.rect()
        for blk in list(w.blocks):
            if brect.overlaps(blk.rect):
                normal = penetration_normal(w.ball.x, w.ball.y, w.ball.r, blk.rect)
                w.ball.vx, w.ball.vy = reflect_ball((w.ball.vx, w.ball.vy), normal)
                if not blk.harmful:
                    events.append(ScoreEvent("ball_hit_collectable", blk.points))
                    w.blocks.remove(blk)
                break  # at most one block bounce per frame

    # bullets vs blocks / opponent / player
    remaining_bullets = []
    for bullet in w.bullets:
        hit = False
        for blk in list(w.blocks):
            if bullet.rect.overlaps(blk.rect):
                w.blocks.remove(blk)
                if not blk.harmful:
                    events.append(ScoreEvent("bullet_hit_collectable", blk.points))
                hit = True
                break
        if hit:
            continue
        if bullet.owner == "player" and w.opponent is not None and bullet.rect.overlaps(w.opponent.rect):
            events.append(ScoreEvent("bullet_hit_opponent", 100))
            continue
        if bullet.owner == "opponent" and bullet.rect.overlaps(w.player):
            events.append(ScoreEvent("bullet_hit_player", -100))
            continue
        remaining_bullets.append(bullet)
    w.bullets = remaining_bullets

    # touching the opponent is always a hazard
    if w.opponent is not None and w.opponent.rect.overlaps(w.player):
        events.append(ScoreEvent("player_hit_hazard", -100))


def _check_survive(w: WorldState, events: list) -> None:
    if w.cfg.episode.goal != "survive":
        return
    required = w.cfg.episode.required_count
    if w.return_count >= required or w.survived_count >= required:
        events.append(ScoreEvent("survive_complete", 100))


# ---------------------------------------------------------------------------
# the step function
# ---------------------------------------------------------------------------

def step_world(w: WorldState, a: Action) -> StepOutcome:
    """Advance the world by one fixed timestep. Mutates ``w`` in place."""
    if w.status != RUNNING:
        raise RuntimeError(f"cannot step a world with status {w.status!r}")
    cfg = w.cfg
    events: list = []
    eff = apply_action(cfg, a)

    _move_player(w, eff, events)
    _player_fire(w, eff)
    if w.opponent is not None:
        update_opponent(w.opponent, w, w.rng)
    _update_bullets(w)
    _update_ball(w, events)
    _update_blocks_world(w, events)
    _resolve_collisions(w, events)
    _check_survive(w, events)

    reward = 0
    for ev in events:
        new_score = min(100, max(-100, w.score + ev.delta))
        reward += new_score - w.score
        w.score = new_score
    for ev in events:  # win/loss events take precedence over collects
        if ev.kind in WIN_EVENTS:
            w.status = WON
            break
        if ev.kind in LOSS_EVENTS:
            w.status = LOST
            break
    if w.status == RUNNING and cfg.episode.goal == "clear_blocks" and w.score >= 100:
        w.status = WON

    w.step_count += 1
    if w.status == RUNNING and w.step_count >= cfg.episode.max_steps:
        events.append(ScoreEvent("timeout", 0))
        w.status = TIMED_OUT

    terminal = w.status != RUNNING
    info = {"score": w.score, "step_count": w.step_count, "status": w.status,
            "events": [ev.kind for ev in events]}
    return StepOutcome(reward=reward, events=events, terminal=terminal, info=info)


# ---------------------------------------------------------------------------
# hashing for determinism checks
# ---------------------------------------------------------------------------

def _rect_tuple(r: Rect) -> tuple:
    return (r.x, r.y, r.w, r.h)


def world_digest(w: WorldState) -> str:
    """Stable hash of the dynamic world state."""
    parts = [
        _rect_tuple(w.player), w.score, w.step_count, w.status,
        w.player_cooldown, w.return_count, w.survived_count,
        None if w.ball is None else (w.ball.x, w.ball.y, w.ball.vx, w.ball.vy, w.ball.r),
        None if w.opponent is None else (_rect_tuple(w.opponent.rect), w.opponent.cooldown,
                                         w.opponent.strafe_dir),
        tuple((_rect_tuple(b.rect), b.points, b.harmful, b.dir) for b in w.blocks),
        tuple((_rect_tuple(b.rect), b.vx, b.vy, b.owner) for b in w.bullets),
        None if w.spawner is None else (w.spawner.remaining, w.spawner.timer),
    ]
    return hashlib.sha256(repr(parts).encode("utf-8")).hexdigest()

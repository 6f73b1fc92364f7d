"""Interactive debug play: arrows + space mapped to the 6 actions, 30 Hz.

Needs pygame (``pip install microarcade[play]``); the rest of the package
stays free of any windowing dependency. The displayed image is the exact
84x84 observation, scaled up for visibility.
"""
from __future__ import annotations

import numpy as np

from .actions import DOWN, LEFT, NOOP, RIGHT, SHOOT, UP
from .env import ArcadeEnv

SCALE = 6
TICK_HZ = 30


def play(env: ArcadeEnv, episodes: int = 0) -> None:
    """Run interactive episodes until the window closes (or ``episodes``
    many have finished, if nonzero)."""
    try:
        import pygame
    except ImportError as e:
        raise RuntimeError("interactive play needs pygame; install the 'play' extra") from e

    pygame.init()
    size = env.reset().shape[0] * SCALE
    screen = pygame.display.set_mode((size, size))
    pygame.display.set_caption("microarcade")
    clock = pygame.time.Clock()
    frame = env.reset()
    finished = 0
    running = True
    while running:
        for event in pygame.event.get():
            if event.type == pygame.QUIT:
                running = False
        keys = pygame.key.get_pressed()
        if keys[pygame.K_SPACE]:
            action = SHOOT
        elif keys[pygame.K_UP]:
            action = UP
        elif keys[pygame.K_DOWN]:
            action = DOWN
        elif keys[pygame.K_LEFT]:
            action = LEFT
        elif keys[pygame.K_RIGHT]:
            action = RIGHT
        else:
            action = NOOP
        frame, _, done, info = env.step(action)
        surf = pygame.surfarray.make_surface(np.transpose(frame, (1, 0, 2)))
        surf = pygame.transform.scale(surf, (size, size))
        screen.blit(surf, (0, 0))
        pygame.display.flip()
        clock.tick(TICK_HZ)
        if done:
            print(f"episode over: score {info['score']} status {info['status']}")
            finished += 1
            if episodes and finished >= episodes:
                break
            frame = env.reset()
    pygame.quit()

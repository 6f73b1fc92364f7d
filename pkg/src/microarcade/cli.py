"""Command-line entry point.

Subcommands: games, validate, rollout, frames, bench, curriculum-run, play.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from . import library
from .agents import scripted_agent
from .config import config_digest, load_config, validate
from .curriculum import CurriculumFinished, load_curriculum
from .env import ArcadeEnv, make_env
from .record import RecordWriter
from .render import save_png, write_raw


def _resolve_source(ref: str):
    if os.path.isfile(ref):
        return load_config(ref)
    return library.load_game(ref)


def cmd_games(args) -> int:
    for entry in library.list_games(challenge_only=args.challenge):
        elements = ", ".join(sorted(entry.elements))
        print(f"{entry.name:18s} [{entry.difficulty}] ({entry.provenance}) {elements}")
    return 0


def cmd_validate(args) -> int:
    cfg = load_config(args.config)
    report = validate(cfg)
    print(report)
    return 0 if report.ok else 1


def cmd_rollout(args) -> int:
    cfg = _resolve_source(args.game)
    env = ArcadeEnv(cfg, seed=args.seed)
    policy = scripted_agent(args.policy, seed=args.seed)
    writer = None
    out = None
    if args.record:
        out = open(args.record, "w", encoding="utf-8")
        writer = RecordWriter(out)
    scores = []
    try:
        for episode in range(args.episodes):
            env.reset()
            if writer is not None:
                writer.header(env.current_config_digest(), args.seed,
                              episode=episode, policy=args.policy)
            step = 0
            done = False
            while not done:
                action = policy(env.world)
                _, reward, done, info = env.step(action)
                if writer is not None:
                    writer.step(episode, step, action, reward, info["events"])
                step += 1
            scores.append(info["score"])
            if writer is not None:
                writer.episode_end(episode, info["score"], step, info["status"])
    finally:
        if out is not None:
            out.close()
    mean = sum(scores) / len(scores)
    print(f"{args.episodes} episodes, mean score {mean:.2f}, "
          f"min {min(scores)}, max {max(scores)}")
    return 0


def cmd_frames(args) -> int:
    cfg = _resolve_source(args.game)
    env = ArcadeEnv(cfg, seed=args.seed)
    policy = scripted_agent(args.policy, seed=args.seed)
    os.makedirs(args.out, exist_ok=True)
    frames = [env.reset()]
    for _ in range(args.steps):
        frame, _, done, _ = env.step(policy(env.world))
        frames.append(frame)
        if done:
            frames.append(env.reset())
    for i, frame in enumerate(frames):
        save_png(frame, os.path.join(args.out, f"frame_{i:05d}.png"))
    write_raw(frames, os.path.join(args.out, "frames.raw"))
    print(f"wrote {len(frames)} frames to {args.out}")
    return 0


def cmd_bench(args) -> int:
    cfg = _resolve_source(args.game)
    env = ArcadeEnv(cfg, seed=args.seed)
    policy = scripted_agent("random", seed=args.seed)
    env.reset()
    start = time.perf_counter()
    for _ in range(args.steps):
        _, _, done, _ = env.step(policy(env.world))
        if done:
            env.reset()
    elapsed = time.perf_counter() - start
    print(f"{args.steps} steps in {elapsed:.3f}s -> {args.steps / elapsed:.0f} steps/sec")
    return 0


def cmd_curriculum_run(args) -> int:
    spec = load_curriculum(args.spec)
    env = ArcadeEnv(spec, seed=args.seed)
    policy = scripted_agent(args.policy, seed=args.seed)
    episode = 0
    while True:
        try:
            env.reset()
        except CurriculumFinished:
            break
        done = False
        while not done:
            _, _, done, info = env.step(policy(env.world))
        stage = env.last_stage_info
        print(f"episode {episode}: stage {stage['stage_index']} ({stage['kind']}), "
              f"score {info['score']}, {info['step_count']} steps, {info['status']}")
        episode += 1
    print(f"curriculum finished after {episode} episodes")
    return 0


def cmd_play(args) -> int:
    from .play import play
    env = make_env(args.game, seed=args.seed)
    play(env)
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="microarcade",
                                     description="configurable 2D arcade games for RL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("games", help="list the predefined games")
    p.add_argument("--challenge", action="store_true", help="only the challenge set")
    p.set_defaults(func=cmd_games)

    p = sub.add_parser("validate", help="validate a game definition file")
    p.add_argument("config")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("rollout", help="run scripted-policy episodes")
    p.add_argument("game")
    p.add_argument("--policy", default="random", choices=("random", "paddle_tracker", "crosser"))
    p.add_argument("--episodes", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--record", help="write an .ndrec episode record")
    p.set_defaults(func=cmd_rollout)

    p = sub.add_parser("frames", help="export observation frames")
    p.add_argument("game")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", default="random", choices=("random", "paddle_tracker", "crosser"))
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_frames)

    p = sub.add_parser("bench", help="measure headless stepping throughput")
    p.add_argument("game")
    p.add_argument("--steps", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("curriculum-run", help="drive a curriculum end to end")
    p.add_argument("spec")
    p.add_argument("--policy", default="random", choices=("random", "paddle_tracker", "crosser"))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_curriculum_run)

    p = sub.add_parser("play", help="interactive debug play (needs pygame)")
    p.add_argument("game")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_play)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

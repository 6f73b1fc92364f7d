"""Line-delimited episode records (.ndrec).

One JSON object per line, keys sorted, compact separators, so output is
bit-exact across platforms. The first line is a header with the config
digest and seed; step and episode_end lines follow.
"""
from __future__ import annotations

import json
from typing import IO


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class RecordWriter:
    def __init__(self, stream: IO[str]):
        self.stream = stream

    def header(self, config_digest: str, seed: int, **extra) -> None:
        self.stream.write(_dump({"type": "header", "config_digest": config_digest,
                                 "seed": seed, **extra}) + "\n")

    def step(self, episode: int, step: int, action: int, reward: int, events: list) -> None:
        self.stream.write(_dump({"type": "step", "episode": episode, "step": step,
                                 "action": action, "reward": reward,
                                 "events": list(events)}) + "\n")

    def episode_end(self, episode: int, score: int, length: int, status: str) -> None:
        self.stream.write(_dump({"type": "episode_end", "episode": episode, "score": score,
                                 "length": length, "status": status}) + "\n")


def read_records(path) -> list:
    with open(path, "r", encoding="utf-8") as f:
        return [json.loads(line) for line in f if line.strip()]

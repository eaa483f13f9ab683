"""Distribution of the block-diagonal composition offset for the flow shop.

Draws random block lists, composes them and tabulates
``delta_min(composed) - sum(delta_min(block))`` against the number of
nonempty blocks.
"""
from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from domatic_lab.cfsp import composition_offset, random_matrix


@dataclass
class Config:
    seed: int = 0
    trials: int = 300
    max_blocks: int = 4
    max_side: int = 3
    density: float = 0.5


def run(cfg: Config) -> Counter:
    rng = random.Random(cfg.seed)
    table: Counter = Counter()
    for _ in range(cfg.trials):
        blocks = [
            random_matrix(rng.randint(1, cfg.max_side), rng.randint(1, cfg.max_side), cfg.density, rng)
            for _ in range(rng.randint(1, cfg.max_blocks))
        ]
        nonempty = sum(1 for b in blocks if b.tasks())
        table[(nonempty, composition_offset(blocks))] += 1
    return table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=type(default), default=default)
    table = run(Config(**vars(ap.parse_args())))
    print("nonempty  offset  count")
    for (nonempty, offset), count in sorted(table.items()):
        print(f"{nonempty:8d}  {offset:6d}  {count:5d}")
    off = [k for k in table if k[1] != max(k[0] - 1, 0)]
    print("all offsets equal nonempty-1" if not off else f"unexpected: {off}")
    return 0 if not off else 1


if __name__ == "__main__":
    raise SystemExit(main())

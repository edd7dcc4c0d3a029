#!/usr/bin/env python3
"""Differential run of the ring cipher against the table-driven reference, with timings."""
import argparse
import time
from dataclasses import dataclass

from aespoly import verify


@dataclass
class DifferentialConfig:
    count: int = 10_000
    seed: int = 2002
    variants: tuple[str, ...] = ("aes128", "aes192", "aes256")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=DifferentialConfig.count)
    parser.add_argument("--seed", type=int, default=DifferentialConfig.seed)
    args = parser.parse_args()
    cfg = DifferentialConfig(count=args.count, seed=args.seed)

    failed = False
    for offset, name in enumerate(cfg.variants):
        start = time.perf_counter()
        ok, detail = verify.differential(name, cfg.count, cfg.seed + offset)
        failed |= not ok
        print(f"{name}: {detail} ({time.perf_counter() - start:.2f}s)")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()

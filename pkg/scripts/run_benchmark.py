"""Generate a seeded suite and compare all solvers against the oracle.

    python3 scripts/run_benchmark.py --count 20 --n 5 --seed 1
"""

import argparse
import tempfile
from pathlib import Path

from mmsm import io
from mmsm.cli import main as cli_main
from mmsm.generate import GeneratorConfig, generate


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--barrier", type=float, default=15.0)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--integer", action="store_true")
    p.add_argument("--suite", help="keep instances here instead of a temp dir")
    args = p.parse_args()

    with tempfile.TemporaryDirectory() as tmp:
        suite = Path(args.suite or tmp)
        suite.mkdir(parents=True, exist_ok=True)
        for k in range(args.count):
            cfg = GeneratorConfig(n=args.n, barrier=args.barrier, integer=args.integer, seed=args.seed * 10_000 + k)
            inst = generate(cfg)
            if inst.capacity < inst.barrier_length:
                continue
            io.dump_instance(inst, suite / f"inst_{k:03d}.json")
        cli_main(["bench", "--suite", str(suite)])


if __name__ == "__main__":
    main()

"""Command line entry point.

Exit codes: 0 success, 1 infeasible / uncovered, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .factor2 import MAX_1D_SENSORS, factor2_solve
from .generate import GeneratorConfig, generate
from .model import Infeasible, Instance, SearchResult, verify_solution
from .oracle import MAX_ORACLE_SENSORS, exact_2d
from .render import render_svg
from .search import KINDS, decision, slack_for, solve, solve_best


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _is_integral(inst: Instance) -> bool:
    vals = [inst.barrier_length] + [2 * s.r for s in inst.sensors]
    return all(abs(v - round(v)) < 1e-9 for v in vals)


def cmd_decide(args) -> int:
    inst = io.load_instance(args.instance)
    out = decision(args.algo, args.scale)(inst, args.d)
    if not out:
        print("infeasible")
        _err(out.reason)
        return 1
    print("feasible")
    sol = out.solution
    if args.output:
        sol = io.dump_solution(inst, sol, args.d, args.d + slack_for(args.algo, inst), args.output)
    print(f"max_move {sol.max_move:.12g}")
    return 0


def cmd_solve(args) -> int:
    inst = io.load_instance(args.instance)
    if args.algo == "factor2":
        res = factor2_solve(inst, min(args.resolution, 1e-6))
        if res is None:
            res = Infeasible("not enough sensors to cover the barrier")
    elif args.algo == "best":
        res = solve_best(inst, args.resolution)
    else:
        res = solve(inst, args.algo, args.resolution, args.scale)
    if not isinstance(res, SearchResult):
        print("infeasible")
        _err(res.reason)
        return 1
    sol = res.solution
    if args.output:
        sol = io.dump_solution(inst, sol, res.base_D, res.reported_D, args.output)
    print(f"kind {res.kind}")
    print(f"base_D {res.base_D:.12g}")
    print(f"reported_D {res.reported_D:.12g}")
    print(f"max_move {sol.max_move:.12g}")
    return 0


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(
        n=args.n,
        barrier=args.barrier,
        radius_min=args.radius_min,
        radius_max=args.radius_max,
        spread=args.spread,
        integer=args.integer,
        seed=args.seed,
    )
    io.dump_instance(generate(cfg), args.output)
    return 0


def cmd_verify(args) -> int:
    inst = io.load_instance(args.instance)
    sol, _ = io.load_solution(inst, args.solution)
    v = verify_solution(inst, sol)
    print(f"covered {str(v.covered).lower()}")
    print(f"max_move {v.max_move:.12g}")
    for a, b in v.gaps:
        print(f"gap {a:.12g} {b:.12g}")
    return 0 if v.covered else 1


def cmd_oracle(args) -> int:
    inst = io.load_instance(args.instance)
    if inst.n > MAX_ORACLE_SENSORS:
        _err(f"oracle handles at most {MAX_ORACLE_SENSORS} sensors")
        return 2
    d = exact_2d(inst, args.precision)
    if d is None:
        print("infeasible")
        return 1
    print(f"{d:.12g}")
    return 0


def _bench_row(inst: Instance, name: str, resolution: float) -> list[tuple]:
    opt = exact_2d(inst, 1e-6) if inst.n <= MAX_ORACLE_SENSORS else None
    rows = []
    algos = ["greedy", "lp"] + (["matching"] if _is_integral(inst) else [])
    for algo in algos:
        res = solve(inst, algo, resolution)
        rows.append((name, algo, res, opt))
    if inst.n <= MAX_1D_SENSORS:
        rows.append((name, "factor2", factor2_solve(inst), opt))
    return rows


def cmd_bench(args) -> int:
    files = sorted(Path(args.suite).glob("*.json"))
    if not files:
        _err(f"no instance files in {args.suite}")
        return 2
    print(f"{'instance':<24}{'algo':<10}{'reported_D':>12}{'max_move':>12}{'oracle':>10}{'ratio':>8}")
    for f in files:
        inst = io.load_instance(f)
        for name, algo, res, opt in _bench_row(inst, f.stem, args.resolution):
            if not isinstance(res, SearchResult):
                print(f"{name:<24}{algo:<10}{'infeasible':>12}")
                continue
            opt_s = "-" if opt is None else f"{opt:.4f}"
            ratio = "-" if not opt else f"{res.max_move / opt:.3f}"
            if opt == 0:
                ratio = "1.000" if res.max_move < 1e-9 else "inf"
            print(f"{name:<24}{algo:<10}{res.reported_D:>12.4f}{res.max_move:>12.4f}{opt_s:>10}{ratio:>8}")
    return 0


def cmd_render(args) -> int:
    inst = io.load_instance(args.instance)
    sol = io.load_solution(inst, args.solution)[0] if args.solution else None
    Path(args.output).write_text(render_svg(inst, sol))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mmsm", description="Barrier coverage by minimum max sensor movement.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide feasibility at a fixed movement bound")
    d.add_argument("--algo", choices=KINDS, required=True)
    d.add_argument("--d", type=float, required=True)
    d.add_argument("-i", "--instance", required=True)
    d.add_argument("-o", "--output")
    d.add_argument("--scale", type=int, default=1, help="integer scale for the matching decision")
    d.set_defaults(func=cmd_decide)

    s = sub.add_parser("solve", help="search for a small movement bound")
    s.add_argument("--algo", choices=KINDS + ("factor2", "best"), default="best")
    s.add_argument("--resolution", type=float, default=1.0)
    s.add_argument("-i", "--instance", required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--scale", type=int, default=1)
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("gen", help="write a seeded random instance")
    g.add_argument("--n", type=int, default=6)
    g.add_argument("--barrier", type=float, default=20.0)
    g.add_argument("--radius-min", type=float, default=1.0)
    g.add_argument("--radius-max", type=float, default=4.0)
    g.add_argument("--spread", type=float, default=5.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--integer", action="store_true", help="integer coordinates and radii")
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check a solution file against an instance")
    v.add_argument("-i", "--instance", required=True)
    v.add_argument("-s", "--solution", required=True)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="brute-force optimum for small instances")
    o.add_argument("-i", "--instance", required=True)
    o.add_argument("--precision", type=float, default=1e-6)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", help="compare algorithms on a directory of instances")
    b.add_argument("--suite", required=True)
    b.add_argument("--resolution", type=float, default=1e-3)
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("render", help="draw an instance and optional solution as SVG")
    r.add_argument("-i", "--instance", required=True)
    r.add_argument("-s", "--solution")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_render)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except io.InputError as exc:
        _err(str(exc))
        return 2
    except ValueError as exc:
        _err(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())

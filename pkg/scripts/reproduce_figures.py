"""Recompute the three worked examples and write SVG drawings of each.

    python3 scripts/reproduce_figures.py [outdir]
"""

import sys
from pathlib import Path

from mmsm.greedy import decide_greedy
from mmsm.lp_round import decide_lp, round_solution
from mmsm.model import Instance
from mmsm.oracle import exact_2d
from mmsm.render import render_svg

TIGHT = Instance.from_tuples(10, [(9, 0, 1), (6, 0, 4)])
GAP = Instance.from_tuples(10, [(5, 0, 1), (5, 0, 4)])
ORI = Instance.from_tuples(6, [(3, 0, 1), (3, -1.2, 1), (3, 2, 1)])


def main(outdir: str = "figures") -> None:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)

    opt = exact_2d(TIGHT)
    g = decide_greedy(TIGHT, 2)
    print(f"tight greedy: D* = {opt:.6f}, greedy at D=2 moves {g.solution.max_move:g} (bound {2 + 2 * TIGHT.r_max:g})")
    (out / "tight_greedy.svg").write_text(render_svg(TIGHT, g.solution))

    opt = exact_2d(GAP)
    rd = round_solution(GAP, opt)
    print(f"lp gap: LP feasible at D=1: {decide_lp(GAP, 1)}, D* = {opt:.6f}, rounded max move {rd.solution.max_move:g}")
    (out / "lp_gap.svg").write_text(render_svg(GAP, rd.solution))

    rd = round_solution(ORI, 2)
    print(f"rounding at D=2: positions {rd.solution.positions}, max move {rd.solution.max_move:.4f} (bound 3)")
    (out / "rounding.svg").write_text(render_svg(ORI, rd.solution))
    print(f"wrote figures to {out}/")


if __name__ == "__main__":
    main(*sys.argv[1:2])

"""Fractional cover LP over the barrier graph and its rounding to a
relocation whose max movement is at most D + r_max.

The LP is a transportation problem (sensor supplies 2r, edge demands |e|,
arcs along each sensor's edge window), so it is solved exactly as a maximum
flow. A simplex backend is kept for cross-checking.

Rounding works on sub-edges: each edge is cut into pieces of length x[i, j]
owned by sensor i. The swap phase removes interleavings A..B..A..B between
two owners, the exchange phase then slides nested pieces so every owner ends
with one contiguous block.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .dmmsm import BarrierGraph, transfer
from .flow import FlowNetwork
from .model import EPS, Feasible, Infeasible, Instance, Solution

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpModel:
    graph: BarrierGraph
    supplies: tuple[float, ...]
    variables: tuple[tuple[int, int], ...]

    @property
    def edge_lengths(self) -> list[float]:
        return [self.graph.length(j) for j in range(self.graph.n_edges)]


@dataclass(frozen=True)
class FractionalCover:
    values: dict[tuple[int, int], float]
    objective: float


def build_lp(g: BarrierGraph, inst: Instance) -> LpModel:
    variables = tuple((i, j) for i in range(inst.n) for j in g.window_edges(i))
    return LpModel(g, tuple(2 * s.r for s in inst.sensors), variables)


def _solve_flow(m: LpModel) -> FractionalCover:
    n, k = len(m.supplies), m.graph.n_edges
    src, sink = n + k, n + k + 1
    net = FlowNetwork(n + k + 2)
    for i, cap in enumerate(m.supplies):
        net.add_edge(src, i, cap)
    lengths = m.edge_lengths
    for j, length in enumerate(lengths):
        net.add_edge(n + j, sink, length)
    arcs = {(i, j): net.add_edge(i, n + j, lengths[j]) for i, j in m.variables}
    objective = net.max_flow(src, sink)
    values = {v: max(0.0, net.flow_on(a)) for v, a in arcs.items()}
    return FractionalCover(values, objective)


def _solve_simplex(m: LpModel) -> FractionalCover:
    import numpy as np
    from scipy.optimize import linprog

    if not m.variables:
        return FractionalCover({}, 0.0)
    n, k = len(m.supplies), m.graph.n_edges
    nv = len(m.variables)
    A = np.zeros((n + k, nv))
    for col, (i, j) in enumerate(m.variables):
        A[i, col] = 1.0
        A[n + j, col] = 1.0
    lengths = m.edge_lengths
    b = np.array(list(m.supplies) + lengths)
    bounds = [(0.0, lengths[j]) for _, j in m.variables]
    res = linprog(-np.ones(nv), A_ub=A, b_ub=b, bounds=bounds, method="highs")
    if res.status != 0:
        raise RuntimeError(f"simplex backend failed: {res.message}")
    values = {v: float(max(0.0, x)) for v, x in zip(m.variables, res.x)}
    return FractionalCover(values, float(-res.fun))


def solve_lp(m: LpModel, backend: str = "flow") -> FractionalCover:
    if backend == "flow":
        return _solve_flow(m)
    if backend == "simplex":
        return _solve_simplex(m)
    raise ValueError(f"unknown LP backend {backend!r}")


def _full_cover(objective: float, M: float) -> bool:
    return objective >= M - EPS * max(1.0, M)


def decide_lp(inst: Instance, D: float, backend: str = "flow") -> bool:
    g = transfer(inst, D)
    cover = solve_lp(build_lp(g, inst), backend)
    return _full_cover(cover.objective, inst.barrier_length)


# ---------------------------------------------------------------- sub-edges


@dataclass
class SubEdge:
    a: float
    b: float
    owner: int

    @property
    def length(self) -> float:
        return self.b - self.a


def merge_adjacent(pieces: list[SubEdge]) -> list[SubEdge]:
    out: list[SubEdge] = []
    for p in pieces:
        if p.b - p.a <= 0:
            continue
        if out and out[-1].owner == p.owner:
            out[-1].b = p.b
        else:
            out.append(SubEdge(p.a, p.b, p.owner))
    return out


def owner_lengths(pieces: list[SubEdge]) -> dict[int, float]:
    total: dict[int, float] = {}
    for p in pieces:
        total[p.owner] = total.get(p.owner, 0.0) + p.length
    return total


def pre_aggregate(cover: FractionalCover, g: BarrierGraph) -> list[SubEdge]:
    M = g.vertices[-1]
    if not _full_cover(cover.objective, M):
        raise ValueError(f"cover objective {cover.objective} is short of barrier length {M}")
    per_edge: dict[int, list[tuple[int, float]]] = {}
    for (i, j), x in sorted(cover.values.items()):
        if x > 0:
            per_edge.setdefault(j, []).append((i, x))
    pieces = []
    for j in range(g.n_edges):
        a, b = g.edge(j)
        cursor = a
        parts = per_edge.get(j, [])
        for k, (i, x) in enumerate(parts):
            # the last piece absorbs rounding noise so pieces tile the edge
            end = b if k == len(parts) - 1 else min(cursor + x, b)
            pieces.append(SubEdge(cursor, end, i))
            cursor = end
        if cursor < b - EPS * max(1.0, M):
            raise ValueError(f"edge {j} not fully covered by the fractional cover")
    return pieces


def interleavings(pieces: list[SubEdge]) -> list[tuple[int, int]]:
    """Owner pairs (i, k) with pieces ordered i, k, i, k along the barrier."""
    seq = [p.owner for p in pieces]
    found = []
    owners = sorted(set(seq))
    for i in owners:
        for k in owners:
            if i == k:
                continue
            state = 0
            pattern = (i, k, i, k)
            for o in seq:
                if o == pattern[state]:
                    state += 1
                    if state == 4:
                        found.append((i, k))
                        break
    return found


def _swap_pieces(pieces: list[SubEdge], u: int, j: int) -> None:
    """Trade ownership between piece u (inside a gap of the owner of j) and
    piece j, moving min(|u|, |j|) of j's owner leftwards onto u."""
    pu, pj = pieces[u], pieces[j]
    mine, theirs = pj.owner, pu.owner
    if pu.length >= pj.length:
        p = pu.a + pj.length
        pieces[j] = SubEdge(pj.a, pj.b, theirs)
        pieces[u : u + 1] = [SubEdge(pu.a, p, mine), SubEdge(p, pu.b, theirs)]
    else:
        p = pj.b - pu.length
        pieces[j : j + 1] = [SubEdge(pj.a, p, mine), SubEdge(p, pj.b, theirs)]
        pieces[u] = SubEdge(pu.a, pu.b, mine)


def swap_phase(pieces: list[SubEdge]) -> list[SubEdge]:
    pieces = merge_adjacent([SubEdge(p.a, p.b, p.owner) for p in pieces])
    pending = {p.owner for p in pieces}
    while pending:
        i = next(p.owner for p in pieces if p.owner in pending)
        h = 0
        while True:
            idx = [k for k, p in enumerate(pieces) if p.owner == i]
            if h >= len(idx) - 1:
                break
            lo, hi = idx[h], idx[h + 1]
            beyond = {p.owner for p in pieces[hi + 1 :]}
            crossing = [k for k in range(lo + 1, hi) if pieces[k].owner in beyond]
            if not crossing:
                h += 1
                continue
            _swap_pieces(pieces, crossing[-1], hi)
            pieces = merge_adjacent(pieces)
        pending.discard(i)
    return pieces


# ---------------------------------------------------------------- exchange


@dataclass
class Component:
    owner: int
    length: float
    offset: float = 0.0


@dataclass(frozen=True)
class BlockAssignment:
    blocks: tuple[tuple[int, float, float], ...]  # (owner, a, b), left to right
    max_abs_offset: float = 0.0
    offset_trace: tuple[float, ...] = field(default=(), compare=False)

    def block_of(self, owner: int) -> tuple[float, float]:
        for o, a, b in self.blocks:
            if o == owner:
                return a, b
        raise KeyError(owner)


def mover(comps: list[Component], i: int, delta: int) -> list[Component]:
    """Glue C[i+delta] onto C[i] (or C[i] onto C[i+delta]), sliding the
    components in between and charging the slide to their offsets."""
    if delta <= 1 or i + delta >= len(comps):
        raise ValueError("mover needs 1 < delta within range")
    owner = comps[i].owner
    if comps[i + delta].owner != owner or any(c.owner == owner for c in comps[i + 1 : i + delta]):
        raise ValueError("C[i] and C[i+delta] must be the nearest pair with a common owner")
    comps = [Component(c.owner, c.length, c.offset) for c in comps]
    ci = comps[i]
    rest = sum(c.length for k, c in enumerate(comps) if c.owner == owner and k != i)
    if ci.length - ci.offset >= rest + ci.offset:
        moved = comps.pop(i + delta)
        for c in comps[i + 1 : i + delta]:
            c.offset += moved.length
        ci.length += moved.length
    else:
        comps.pop(i)
        for c in comps[i : i + delta - 1]:
            c.offset -= ci.length
        comps[i + delta - 1].length += ci.length
    return comps


def _next_pair(comps: list[Component]) -> tuple[int, int] | None:
    last: dict[int, int] = {}
    best = None
    # smallest i having a later same-owner component beyond its neighbour
    for k, c in enumerate(comps):
        if c.owner in last:
            i = last[c.owner]
            if k - i > 1 and (best is None or i < best[0]):
                best = (i, k - i)
        last[c.owner] = k
    return best


def _merge_components(comps: list[Component]) -> list[Component]:
    out: list[Component] = []
    for c in comps:
        if out and out[-1].owner == c.owner:
            out[-1].length += c.length
        else:
            out.append(c)
    return out


def exchange_phase(pieces: list[SubEdge]) -> BlockAssignment:
    pieces = merge_adjacent(pieces)
    if not pieces:
        return BlockAssignment(())
    start = pieces[0].a
    comps = [Component(p.owner, p.length) for p in pieces]
    trace = []
    while (pair := _next_pair(comps)) is not None:
        comps = _merge_components(mover(comps, *pair))
        trace.extend(c.offset for c in comps)
    blocks = []
    cursor = start
    for c in comps:
        blocks.append((c.owner, cursor, cursor + c.length))
        cursor += c.length
    # pin the right end to the last piece's end; only rounding noise moves
    if blocks:
        o, a, _ = blocks[-1]
        blocks[-1] = (o, a, pieces[-1].b)
    max_off = max((abs(o) for o in trace), default=0.0)
    return BlockAssignment(tuple(blocks), max_off, tuple(trace))


def finalize_positions(inst: Instance, D: float, blocks: BlockAssignment) -> Solution:
    positions: list[float | None] = [None] * inst.n
    tol = EPS * max(1.0, inst.barrier_length)
    for owner, a, b in blocks.blocks:
        s = inst.sensors[owner]
        if b - a > 2 * s.r + tol:
            raise ValueError(f"block [{a}, {b}] longer than diameter of sensor {owner}")
        lo, hi = b - s.r, a + s.r
        if lo > hi:
            lo = hi = (lo + hi) / 2
        positions[owner] = min(max(s.x, lo), hi)
    sol = Solution.build(inst, positions)
    if sol.max_move > D + inst.r_max + tol:
        log.warning("rounded movement %.6g exceeds D + r_max = %.6g", sol.max_move, D + inst.r_max)
    return sol


def round_pieces(inst: Instance, D: float, pieces: list[SubEdge]) -> Feasible:
    swapped = swap_phase(pieces)
    blocks = exchange_phase(swapped)
    return Feasible(finalize_positions(inst, D, blocks))


def round_solution(inst: Instance, D: float, backend: str = "flow") -> Feasible | Infeasible:
    g = transfer(inst, D)
    cover = solve_lp(build_lp(g, inst), backend)
    if not _full_cover(cover.objective, inst.barrier_length):
        return Infeasible(f"LP covers {cover.objective:.6g} of {inst.barrier_length:.6g}")
    return round_pieces(inst, D, pre_aggregate(cover, g))

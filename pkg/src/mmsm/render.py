"""Static SVG drawing of an instance and, optionally, a relocation."""

from __future__ import annotations

from typing import Optional

from .model import Instance, Solution

WIDTH = 800
MARGIN = 40


def render_svg(inst: Instance, sol: Optional[Solution] = None) -> str:
    xs = [s.x - s.r for s in inst.sensors] + [s.x + s.r for s in inst.sensors] + [0.0, inst.barrier_length]
    ys = [s.y - s.r for s in inst.sensors] + [s.y + s.r for s in inst.sensors] + [0.0]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    k = (WIDTH - 2 * MARGIN) / max(x1 - x0, 1e-9)
    height = int((y1 - y0) * k + 2 * MARGIN)

    def px(x: float) -> float:
        return MARGIN + (x - x0) * k

    def py(y: float) -> float:
        # svg y grows downwards
        return MARGIN + (y1 - y) * k

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" '
        f'viewBox="0 0 {WIDTH} {height}">',
        '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="6" refY="3" orient="auto">'
        '<path d="M0,0 L6,3 L0,6 z" fill="#c0392b"/></marker></defs>',
        f'<line x1="{px(0):.2f}" y1="{py(0):.2f}" x2="{px(inst.barrier_length):.2f}" y2="{py(0):.2f}" '
        'stroke="black" stroke-width="3"/>',
    ]
    for i, s in enumerate(inst.sensors):
        out.append(
            f'<circle cx="{px(s.x):.2f}" cy="{py(s.y):.2f}" r="{s.r * k:.2f}" '
            'fill="#3498db" fill-opacity="0.15" stroke="#2c3e50" stroke-dasharray="4 3"/>'
        )
        out.append(f'<text x="{px(s.x):.2f}" y="{py(s.y):.2f}" font-size="12" text-anchor="middle">{i + 1}</text>')
    if sol is not None:
        for s, p in zip(inst.sensors, sol.positions):
            if p is None:
                continue
            out.append(
                f'<circle cx="{px(p):.2f}" cy="{py(0):.2f}" r="{s.r * k:.2f}" '
                'fill="#27ae60" fill-opacity="0.25" stroke="#27ae60"/>'
            )
            out.append(
                f'<line x1="{px(s.x):.2f}" y1="{py(s.y):.2f}" x2="{px(p):.2f}" y2="{py(0):.2f}" '
                'stroke="#c0392b" marker-end="url(#arrow)"/>'
            )
        out.append(
            f'<text x="{MARGIN}" y="{height - 10}" font-size="13">max movement {sol.max_move:.4g}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"

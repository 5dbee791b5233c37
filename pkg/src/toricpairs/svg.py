"""Deterministic SVG figures of a fan and, optionally, a divisor polygon.

Only integer coordinates are written, so identical input gives
byte-identical output.
"""
from __future__ import annotations

from typing import Optional

from .fan import CompleteSmoothFan
from .polytope import DivisorPolytope

SCALE = 40
MARGIN = 2  # lattice units around the drawn content
PANEL_GAP = 1
FONT = "sans-serif"

HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
    "<defs>\n"
    '  <marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="8" '
    'markerHeight="8" orient="auto-start-reverse">\n'
    '    <path d="M 0 0 L 10 5 L 0 10 z" fill="black"/>\n'
    "  </marker>\n"
    "</defs>\n"
    '<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>\n'
)


def _bbox(points) -> tuple[int, int, int, int]:
    xs = [p[0] for p in points] + [0]
    ys = [p[1] for p in points] + [0]
    return min(xs) - MARGIN, max(xs) + MARGIN, min(ys) - MARGIN, max(ys) + MARGIN


class _Panel:
    """Maps lattice coordinates of one panel to canvas pixels (y axis flipped)."""

    def __init__(self, box, x_offset: int):
        self.xmin, self.xmax, self.ymin, self.ymax = box
        self.x_offset = x_offset

    @property
    def width(self) -> int:
        return (self.xmax - self.xmin) * SCALE

    @property
    def height(self) -> int:
        return (self.ymax - self.ymin) * SCALE

    def px(self, x: int, y: int) -> tuple[int, int]:
        return self.x_offset + (x - self.xmin) * SCALE, (self.ymax - y) * SCALE

    def reach(self, u) -> int:
        """Largest k with k*u inside the panel box."""
        limits = []
        for c, lo, hi in ((u[0], self.xmin, self.xmax), (u[1], self.ymin, self.ymax)):
            if c > 0:
                limits.append(hi // c)
            elif c < 0:
                limits.append(lo // c)
        return min(limits)

    def grid(self) -> list[str]:
        out = []
        for x in range(self.xmin, self.xmax + 1):
            for y in range(self.ymin, self.ymax + 1):
                cx, cy = self.px(x, y)
                out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="#bbbbbb"/>')
        return out


def _text(x: int, y: int, label: str, sub: str) -> str:
    return (
        f'<text x="{x}" y="{y}" font-family="{FONT}" font-size="14">'
        f'{label}<tspan font-size="10" dy="4">{sub}</tspan></text>'
    )


def _fan_panel(fan: CompleteSmoothFan, panel: _Panel) -> list[str]:
    out = ['<g id="fan">'] + panel.grid()
    ox, oy = panel.px(0, 0)
    for i, u in enumerate(fan.rays):
        ex, ey = panel.px(u.x, u.y)
        # ray extended to the panel edge, then the generator as an arrow
        k = panel.reach(u)
        fx, fy = panel.px(u.x * k, u.y * k)
        out.append(f'<line x1="{ox}" y1="{oy}" x2="{fx}" y2="{fy}" stroke="#888888" stroke-dasharray="4 3"/>')
        out.append(
            f'<line class="ray" x1="{ox}" y1="{oy}" x2="{ex}" y2="{ey}" stroke="black" '
            f'stroke-width="2" marker-end="url(#arrow)"/>'
        )
        out.append(_text(ex + 6, ey - 6, "u", str(i)))
    out.append("</g>")
    return out


def _polytope_panel(P: DivisorPolytope, panel: _Panel) -> list[str]:
    out = ['<g id="polytope">'] + panel.grid()
    pts = " ".join("{},{}".format(*panel.px(m.x, m.y)) for m in P.vertices)
    out.append(f'<polygon points="{pts}" fill="#cfe3f7" stroke="black" stroke-width="2"/>')
    for i, m in enumerate(P.vertices):
        cx, cy = panel.px(m.x, m.y)
        out.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="4" fill="black"/>')
        out.append(_text(cx + 6, cy - 6, "m", str(i)))
    out.append("</g>")
    return out


def render(fan: CompleteSmoothFan, polytope: Optional[DivisorPolytope] = None) -> str:
    fan_panel = _Panel(_bbox(fan.rays), 0)
    panels = [(fan_panel, _fan_panel)]
    width, height = fan_panel.width, fan_panel.height
    if polytope is not None:
        poly_panel = _Panel(_bbox(polytope.vertices), width + PANEL_GAP * SCALE)
        panels.append((poly_panel, lambda _f, p: _polytope_panel(polytope, p)))
        width = poly_panel.x_offset + poly_panel.width
        height = max(height, poly_panel.height)
    body: list[str] = []
    for panel, draw in panels:
        body += draw(fan, panel)
    return HEADER.format(w=width, h=height) + "\n".join(body) + "\n</svg>\n"

"""Static SVG pictures of diagrams, trees and dissections.

Geometry here is presentational only.  Every drawn primitive carries a
``class`` attribute (point, leg, center, node, edge, outline, diagonal, ...)
so tests and tooling can count elements.
"""
import math
from dataclasses import dataclass
from typing import Optional

from .codec import kind_of
from .diagrams import Diagram
from .dissections import Dissection
from .errors import DomainError
from .trees import FullKAryTree, format_word, word_table

STROKE = "#222"


@dataclass
class RenderOptions:
    width: int = 480
    height: int = 480
    kind: Optional[str] = None
    labels: bool = True

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise DomainError(f"render size must be positive, got {self.width}x{self.height}")


class _Svg:
    def __init__(self, width, height):
        self.width, self.height = width, height
        self.parts = []

    def add(self, tag, **attrs):
        text = attrs.pop("text", None)
        rendered = " ".join(f'{k.rstrip("_").replace("_", "-")}="{_fmt(v)}"' for k, v in attrs.items())
        if text is None:
            self.parts.append(f"<{tag} {rendered}/>")
        else:
            self.parts.append(f"<{tag} {rendered}>{text}</{tag}>")

    def document(self):
        head = (
            '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{self.width}" '
            f'height="{self.height}" viewBox="0 0 {self.width} {self.height}">'
        )
        return "\n".join([head, *self.parts, "</svg>"]) + "\n"


def _fmt(v):
    return f"{v:.2f}" if isinstance(v, float) else str(v)


def _ring(count, cx, cy, r, start=math.pi):
    # counterclockwise on screen (y grows downwards)
    return [
        (cx + r * math.cos(start + 2 * math.pi * i / count), cy - r * math.sin(start + 2 * math.pi * i / count))
        for i in range(count)
    ]


def _render_diagram(d: Diagram, opts: RenderOptions, svg: _Svg):
    cx, cy = opts.width / 2, opts.height / 2
    r = 0.4 * min(opts.width, opts.height)
    pts = _ring(d.size, cx, cy, r, start=0.0)
    svg.add("circle", class_="disc", cx=cx, cy=cy, r=r, fill="none", stroke="#888", stroke_dasharray="4 3")
    for star in d.stars:
        mx = sum(pts[x - 1][0] for x in star) / d.k
        my = sum(pts[x - 1][1] for x in star) / d.k
        for x in star:
            px, py = pts[x - 1]
            svg.add("line", class_="leg", x1=px, y1=py, x2=mx, y2=my, stroke=STROKE, stroke_width=2)
        svg.add("circle", class_="center", cx=mx, cy=my, r=3, fill=STROKE)
    for i, (px, py) in enumerate(pts, start=1):
        svg.add("circle", class_="point", cx=px, cy=py, r=4, fill="#fff", stroke=STROKE)
        if opts.labels:
            lx, ly = cx + (px - cx) * 1.12, cy + (py - cy) * 1.12
            svg.add("text", class_="label", x=lx, y=ly, text_anchor="middle", dominant_baseline="middle",
                    font_size=12, text=str(i))


def _render_tree(t: FullKAryTree, opts: RenderOptions, svg: _Svg):
    kids = t.children()
    depth = [0] * t.size
    for node, cs in enumerate(kids):
        for c in cs:
            depth[c] = depth[node] + 1
    leaves = [i for i, bit in enumerate(t.preorder) if not bit]
    x = [0.0] * t.size
    for slot, leaf in enumerate(leaves):
        x[leaf] = slot
    for node in reversed(range(t.size)):
        if kids[node]:
            x[node] = sum(x[c] for c in kids[node]) / len(kids[node])
    margin = 30
    span_x = max(len(leaves) - 1, 1)
    span_y = max(max(depth), 1)
    px = [margin + (opts.width - 2 * margin) * xi / span_x for xi in x]
    py = [margin + (opts.height - 2 * margin) * di / span_y for di in depth]
    for node, cs in enumerate(kids):
        for c in cs:
            svg.add("line", class_="edge", x1=px[node], y1=py[node], x2=px[c], y2=py[c], stroke=STROKE)
    words = {pos: w for w, pos in word_table(t)} if t.n else {}
    for node in range(t.size):
        svg.add("circle", class_="node", cx=px[node], cy=py[node], r=5, fill="#555", stroke=STROKE)
        if opts.labels and node in words:
            svg.add("text", class_="label", x=px[node] + 7, y=py[node] - 7, font_size=10,
                    text=format_word(words[node], t.k))


def _render_dissection(p: Dissection, opts: RenderOptions, svg: _Svg):
    cx, cy = opts.width / 2, opts.height / 2
    r = 0.4 * min(opts.width, opts.height)
    # base edge {N, 1} sits at the bottom
    start = -math.pi / 2 - math.pi / p.sides
    pts = _ring(p.sides, cx, cy, r, start=start)
    outline = " ".join(f"{a:.2f},{b:.2f}" for a, b in pts)
    svg.add("polygon", class_="outline", points=outline, fill="#eee", stroke=STROKE, stroke_width=2)
    for a, b in p.diagonals():
        (x1, y1), (x2, y2) = pts[a - 1], pts[b - 1]
        svg.add("line", class_="diagonal", x1=x1, y1=y1, x2=x2, y2=y2, stroke="#a22", stroke_dasharray="6 3")
    for i, (vx, vy) in enumerate(pts, start=1):
        svg.add("circle", class_="vertex", cx=vx, cy=vy, r=3, fill=STROKE)
        if opts.labels:
            lx, ly = cx + (vx - cx) * 1.1, cy + (vy - cy) * 1.1
            svg.add("text", class_="label", x=lx, y=ly, text_anchor="middle", dominant_baseline="middle",
                    font_size=12, text=str(i))


_RENDERERS = {"diagram": _render_diagram, "tree": _render_tree, "dissection": _render_dissection}


def render_svg(obj, opts: Optional[RenderOptions] = None) -> str:
    opts = opts or RenderOptions()
    kind = kind_of(obj)
    if opts.kind is not None and opts.kind != kind:
        raise DomainError(f"asked to render a {opts.kind} but got a {kind}")
    svg = _Svg(opts.width, opts.height)
    _RENDERERS[kind](obj, opts, svg)
    return svg.document()

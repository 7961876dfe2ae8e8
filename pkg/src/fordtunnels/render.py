"""Deterministic SVG renderings of Ford-domain footprints.

Only the projection to the boundary plane is drawn: one circle per isometric
sphere (solid when visible, dashed otherwise), the fundamental parallelogram
and optional projected geodesic lifts.  The imaginary axis points up.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from .ford import FordFootprint
from .geometry import Geodesic
from .group import Parallelogram
from .moebius import is_inf

DEFAULT_STYLE = (
    ("background", "white"),
    ("circle_stroke", "#1f4e79"),
    ("label_color", "#333333"),
    ("parallelogram_stroke", "#888888"),
    ("segment_stroke", "#c0392b"),
    ("width_px", 800),
)


@dataclass(frozen=True)
class SceneCircle:
    center: complex
    radius: float
    label: str
    visible: bool


@dataclass(frozen=True)
class SceneSegment:
    """Projection of a geodesic: a chord between feet, or a marked foot for a vertical lift."""

    start: complex
    end: Optional[complex]
    label: str


@dataclass(frozen=True)
class SceneDocument:
    circles: tuple[SceneCircle, ...]
    parallelogram: Parallelogram
    segments: tuple[SceneSegment, ...] = ()
    style: tuple = field(default=DEFAULT_STYLE)

    def __post_init__(self):
        vals = [self.parallelogram.base, self.parallelogram.v1, self.parallelogram.v2]
        vals += [c.center for c in self.circles] + [s.start for s in self.segments]
        vals += [s.end for s in self.segments if s.end is not None]
        for z in vals:
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("scene geometry must be finite")
        for c in self.circles:
            if not (math.isfinite(c.radius) and c.radius > 0):
                raise ValueError("circle radius must be positive and finite")


def segment_from_geodesic(g: Geodesic, label: str = "") -> SceneSegment:
    if is_inf(g.endpoint2):
        return SceneSegment(g.endpoint1, None, label)
    return SceneSegment(g.endpoint1, g.endpoint2, label)


def scene_from_footprint(fp: FordFootprint, geodesics=(), visible_only: bool = False) -> SceneDocument:
    circles = []
    for e in fp.spheres:
        if visible_only and e.visibility != "visible":
            continue
        owner = "" if e.sphere.owner is None else str(e.sphere.owner)
        circles.append(SceneCircle(e.sphere.center, e.sphere.radius, owner, e.visibility == "visible"))
    segs = tuple(segment_from_geodesic(g, label) for g, label in geodesics)
    return SceneDocument(tuple(circles), fp.parallelogram, segs)


def _num(x: float) -> str:
    s = format(x, ".12g")
    return "0" if s in ("-0", "0") else s


def _xy(z: complex) -> tuple[str, str]:
    return _num(z.real), _num(-z.imag)


def _bounds(scene: SceneDocument):
    xs, ys = [], []
    for z in scene.parallelogram.corners():
        xs.append(z.real)
        ys.append(z.imag)
    for c in scene.circles:
        xs += [c.center.real - c.radius, c.center.real + c.radius]
        ys += [c.center.imag - c.radius, c.center.imag + c.radius]
    for s in scene.segments:
        for z in (s.start, s.end):
            if z is not None:
                xs.append(z.real)
                ys.append(z.imag)
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0, 1e-9)
    pad = 0.05 * span
    return x0 - pad, x1 + pad, y0 - pad, y1 + pad, span


def render_svg(scene: SceneDocument) -> str:
    """SVG text for ``scene``; identical scenes give identical bytes."""
    style = dict(scene.style)
    x0, x1, y0, y1, span = _bounds(scene)
    w, h = x1 - x0, y1 - y0
    stroke = span / 400
    font = span / 60
    width_px = int(style["width_px"])
    height_px = max(1, round(width_px * h / w))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
        f'viewBox="{_num(x0)} {_num(-y1)} {_num(w)} {_num(h)}">',
        f'<rect x="{_num(x0)}" y="{_num(-y1)}" width="{_num(w)}" height="{_num(h)}" fill="{style["background"]}"/>',
    ]
    pts = " ".join(",".join(_xy(z)) for z in scene.parallelogram.corners())
    out.append(f'<polygon class="parallelogram" points="{pts}" fill="none" '
               f'stroke="{style["parallelogram_stroke"]}" stroke-width="{_num(stroke)}"/>')
    circles = sorted(scene.circles, key=lambda c: (c.center.real, c.center.imag, c.radius, c.label, c.visible))
    for c in circles:
        cx, cy = _xy(c.center)
        dash = "" if c.visible else f' stroke-dasharray="{_num(4 * stroke)} {_num(3 * stroke)}"'
        kind = "visible" if c.visible else "invisible"
        out.append(f'<circle class="{kind}" cx="{cx}" cy="{cy}" r="{_num(c.radius)}" fill="none" '
                   f'stroke="{style["circle_stroke"]}" stroke-width="{_num(stroke)}"'
                   f'{dash}/>')
    for s in scene.segments:
        sx, sy = _xy(s.start)
        if s.end is None:
            out.append(f'<circle class="foot" cx="{sx}" cy="{sy}" r="{_num(3 * stroke)}" '
                       f'fill="{style["segment_stroke"]}"/>')
        else:
            ex, ey = _xy(s.end)
            out.append(f'<line class="lift" x1="{sx}" y1="{sy}" x2="{ex}" y2="{ey}" '
                       f'stroke="{style["segment_stroke"]}" stroke-width="{_num(stroke)}"/>')
    for c in circles:
        if c.label:
            cx, cy = _xy(c.center)
            out.append(f'<text x="{cx}" y="{cy}" font-size="{_num(font)}" text-anchor="middle" '
                       f'fill="{style["label_color"]}">{escape(c.label)}</text>')
    for s in scene.segments:
        if s.label:
            sx, sy = _xy(s.start)
            out.append(f'<text x="{sx}" y="{sy}" font-size="{_num(font)}" '
                       f'fill="{style["segment_stroke"]}">{escape(s.label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

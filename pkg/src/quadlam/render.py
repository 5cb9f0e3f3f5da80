"""SVG pictures of laminations in the unit disk.

Floats appear only here.  Leaves are drawn as hyperbolic geodesics: the chord
{a, b} of angular length D becomes the arc of radius tan(pi D) centred at
distance sec(pi D) in the direction of the midpoint, orthogonal to the unit
circle.  Diameters are straight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from xml.sax.saxutils import quoteattr

from .lamination import Chord, Lamination, chord_length

GEODESIC = "hyperbolic-geodesic"
STRAIGHT = "straight-chord"

PALETTE = ("#1f3b73", "#c0392b", "#1e8449", "#b9770e", "#6c3483", "#117a8b")
MARGIN = 1.05


@dataclass(frozen=True)
class RenderStyle:
    image_size_px: int = 800
    stroke_width: float = 0.6
    color_map: dict = field(default_factory=dict)
    arc_mode: str = GEODESIC
    circle_color: str = "#000000"

    def __post_init__(self):
        if self.image_size_px <= 0:
            raise ValueError("image_size_px must be positive")
        if self.arc_mode not in (GEODESIC, STRAIGHT):
            raise ValueError(f"unknown arc mode {self.arc_mode!r}")

    def color(self, label: str, index: int) -> str:
        return self.color_map.get(label, PALETTE[index % len(PALETTE)])


def _num(x: float) -> str:
    s = f"{x:.12f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def point(t) -> tuple:
    """Screen coordinates (y pointing down) of the angle t on the unit circle."""
    th = 2 * math.pi * float(t)
    return math.cos(th), -math.sin(th)


def leaf_path(c: Chord, mode: str = GEODESIC) -> str:
    x1, y1 = point(c.a)
    x2, y2 = point(c.b)
    start = f"M {_num(x1)} {_num(y1)} "
    delta = chord_length(c)
    if mode == STRAIGHT or delta == Fraction(1, 2):
        return start + f"L {_num(x2)} {_num(y2)}"
    r = math.tan(math.pi * float(delta))
    # the centre lies beyond the midpoint of the shorter arc
    mid = (c.a if c.b - c.a == delta else c.b) + delta / 2
    cx, cy = point(mid)
    d = 1 / math.cos(math.pi * float(delta))
    cx, cy = cx * d, cy * d
    cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx)
    sweep = 1 if cross > 0 else 0
    return start + f"A {_num(r)} {_num(r)} 0 0 {sweep} {_num(x2)} {_num(y2)}"


def _layers(obj) -> list:
    if isinstance(obj, Lamination):
        return [(obj.label, list(obj))]
    items = list(obj)
    if items and all(isinstance(x, Chord) for x in items):
        return [("", items)]
    out = []
    for x in items:
        if isinstance(x, Lamination):
            out.append((x.label, list(x)))
        else:
            label, chords = x
            out.append((label, list(chords)))
    return out


def render_svg(lam, style: RenderStyle | None = None, zoom=None) -> str:
    """SVG text: the unit circle as one path, then one path per leaf.

    ``lam`` is a Lamination, a list of chords, or a list of laminations or
    (label, chords) pairs, drawn in order with one colour per label.
    ``zoom`` = (cx, cy, scale) moves the viewport to the disk point
    (cx, cy) and magnifies by ``scale``.
    """
    style = style or RenderStyle()
    size = style.image_size_px
    cx, cy, scale = zoom if zoom is not None else (0.0, 0.0, 1.0)
    if scale <= 0:
        raise ValueError("zoom scale must be positive")
    half = MARGIN / scale
    box = f"{_num(cx - half)} {_num(-cy - half)} {_num(2 * half)} {_num(2 * half)}"
    width = _num(style.stroke_width * 2 * half / size)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="{box}">',
        f'<path d="M 1 0 A 1 1 0 1 0 -1 0 A 1 1 0 1 0 1 0 Z" fill="none" '
        f'stroke="{style.circle_color}" stroke-width="{width}"/>',
    ]
    for index, (label, chords) in enumerate(_layers(lam)):
        color = style.color(label, index)
        attr = f" data-label={quoteattr(label)}" if label else ""
        out.append(f'<g fill="none" stroke="{color}" stroke-width="{width}"{attr}>')
        for c in sorted(chords):
            if not c.is_degenerate:
                out.append(f'<path d="{leaf_path(c, style.arc_mode)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

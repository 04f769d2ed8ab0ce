"""Standalone SVG figures of witnesses and families.

The only place where exact coordinates are converted to floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence
from xml.sax.saxutils import escape

from .coloring import Coloring, coloring_from_spec
from .errors import EmptyPayload, GallaiError, InputError
from .geometry import Point

BACKGROUND = ["#f2f2f2", "#c9d6e8", "#f0d9b5", "#d5e8c9", "#e8c9e0", "#e8e3c9", "#c9e8e6", "#dcdcdc"]
STROKES = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"]

Window = tuple[float, float, float, float]  # xmin, ymin, xmax, ymax


def _xy(p: Point) -> tuple[float, float]:
    x = float(p[0])
    y = float(p[1]) if p.dim > 1 else 0.0
    return x, y


def member_point_lists(doc) -> list[list[Point]]:
    """Point lists of every copy in a geometric document."""
    kind = doc.kind
    payload = doc.payload()
    if kind == "threshold":
        raise InputError("threshold results have no geometry to render")
    if kind == "witness":
        return [] if payload is None else [[Point(p) for p in payload.points]]
    if kind == "family":
        return [list(m.points) for m in payload.members]
    if kind == "multifamily":
        return [list(m.points) for _, fam in payload.families for m in fam.members]
    raise InputError(f"cannot render a {kind!r} document")


def _window(members: Sequence[Sequence[Point]]) -> Window:
    xs = [_xy(p)[0] for m in members for p in m]
    ys = [_xy(p)[1] for m in members for p in m]
    w = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    pad = 0.1 * w
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def _background(chi: Coloring, window: Window, dim: int, samples: int) -> list[str]:
    xmin, ymin, xmax, ymax = window
    dx = (xmax - xmin) / samples
    rows = samples if dim > 1 else 1
    dy = (ymax - ymin) / rows
    out = []
    for i in range(samples):
        for j in range(rows):
            cx = Fraction(xmin + (i + 0.5) * dx).limit_denominator(10**6)
            cy = Fraction(ymin + (j + 0.5) * dy).limit_denominator(10**6)
            coords = [cx, cy] if dim > 1 else [cx]
            try:
                c = chi(coords)
            except GallaiError:
                # colorings defined on the integer lattice only
                return []
            x, y = xmin + i * dx, ymin + j * dy
            out.append(
                f'<rect class="bg" x="{x:.6g}" y="{y:.6g}" width="{dx:.6g}" height="{dy:.6g}" '
                f'fill="{BACKGROUND[c % len(BACKGROUND)]}"/>'
            )
    return out


def render_svg(doc, window: Window | None = None, samples: int = 40, coloring: Coloring | None = None) -> str:
    """SVG text for a witness/family/multifamily document.

    Background cells sample the coloring echoed in the document; each copy is
    drawn as connected markers in its own stroke color.
    """
    members = member_point_lists(doc)
    if not members or not any(members):
        raise EmptyPayload("nothing to render")
    dim = members[0][0].dim
    if window is None:
        window = _window(members)
    xmin, ymin, xmax, ymax = window
    if dim == 1:
        half = 0.15 * (xmax - xmin)
        ymin, ymax = -half, half
        window = (xmin, ymin, xmax, ymax)
    width, height = xmax - xmin, ymax - ymin
    unit = max(width, height)
    r = unit / 120
    stroke = unit / 300

    if coloring is None and doc.input.get("coloring") is not None:
        coloring = coloring_from_spec(doc.input["coloring"])
    parts = [
        '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="600" height="{600 * height / width:.6g}" viewBox="{xmin:.6g} {ymin:.6g} {width:.6g} {height:.6g}">',
        f"<title>{escape(doc.kind)}: {len(members)} copies</title>",
        # flip y so the figure reads with y upward
        f'<g transform="translate(0 {ymin + ymax:.6g}) scale(1 -1)">',
    ]
    if coloring is not None:
        parts.append('<g class="background">')
        parts.extend(_background(coloring, window, dim, samples))
        parts.append("</g>")
    for i, pts in enumerate(members):
        color = STROKES[i % len(STROKES)]
        xy = [_xy(p) for p in pts]
        path = " ".join(f"{x:.6g},{y:.6g}" for x, y in xy + xy[:1])
        parts.append(f'<g class="member" stroke="{color}">')
        parts.append(f'<polyline points="{path}" fill="none" stroke-width="{stroke:.6g}"/>')
        for x, y in xy:
            parts.append(f'<circle class="marker" cx="{x:.6g}" cy="{y:.6g}" r="{r:.6g}" fill="{color}"/>')
        parts.append("</g>")
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"

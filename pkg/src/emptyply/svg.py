"""SVG rendering of drawings, their ply-disks and quarter stubs.

Disks are the only ``<circle>`` elements (15% fill opacity, so overlaps
darken); vertices are small squares.  The view box is the bounding box of
all disks and vertices padded by 5% on every side.
"""
from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .drawing import Drawing, ply_disks

PAD = 0.05
DISK_OPACITY = 0.15


def _fmt(v: float) -> str:
    return f"{v:.6g}"


def render(drawing: Drawing, disks: str = "full", stubs=None, title: str | None = None) -> str:
    """SVG document text.  ``disks`` is ``full``, ``half`` or ``none``; ``stubs``
    optionally replaces the edges with a :class:`~emptyply.plycore.StubSet`."""
    if disks not in ("full", "half", "none"):
        raise ValueError("disks must be full, half or none")
    pd = ply_disks(drawing)
    pos = drawing.positions * np.array([1.0, -1.0])  # SVG y grows downwards
    r = pd.radii * (0.5 if disks == "half" else 1.0)
    shown = r > 0 if disks != "none" else np.zeros(len(r), dtype=bool)
    lo = pos.min(axis=0)
    hi = pos.max(axis=0)
    if shown.any():
        lo = np.minimum(lo, (pos[shown] - r[shown, None]).min(axis=0))
        hi = np.maximum(hi, (pos[shown] + r[shown, None]).max(axis=0))
    span = np.maximum(hi - lo, 1e-12)
    lo = lo - PAD * span
    size = span * (1 + 2 * PAD)
    unit = float(size.max())
    stroke = unit / 400
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(lo[0])} {_fmt(lo[1])} {_fmt(size[0])} {_fmt(size[1])}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<g class="disks" fill="steelblue" fill-opacity="{DISK_OPACITY}" stroke="steelblue" '
               f'stroke-width="{_fmt(stroke / 2)}">')
    for v in np.flatnonzero(shown):
        out.append(f'<circle cx="{_fmt(pos[v, 0])}" cy="{_fmt(pos[v, 1])}" r="{_fmt(r[v])}"/>')
    out.append("</g>")
    if stubs is None:
        e = drawing.graph.edge_array()
        segs = zip(pos[e[:, 0]], pos[e[:, 1]]) if len(e) else []
    else:
        flip = np.array([1.0, -1.0])
        segs = zip(stubs.starts * flip, stubs.ends * flip)
    out.append(f'<g class="edges" stroke="black" stroke-width="{_fmt(stroke)}">')
    for a, b in segs:
        out.append(f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}"/>')
    out.append("</g>")
    side = 3 * stroke
    out.append('<g class="vertices" fill="black">')
    for x, y in pos:
        out.append(f'<rect x="{_fmt(x - side / 2)}" y="{_fmt(y - side / 2)}" '
                   f'width="{_fmt(side)}" height="{_fmt(side)}"/>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"

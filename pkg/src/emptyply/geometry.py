"""Predicates and constructions on points, open disks, circles and segments.

Every boundary-coincidence decision goes through one relative tolerance,
``EPS``, scaled by the local feature size (the largest radius or length
involved in the decision).  Open disks never contain their boundary, so a
point within tolerance of a circle is *not* inside it.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from .errors import DomainError

EPS = 1e-9


class GeometryError(DomainError):
    """Raised for inputs outside an operation's domain."""


class EmptyRegionError(GeometryError):
    """Raised when a constraint set admits no feasible sample."""


class Point(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Disk:
    """Open disk.  A zero radius denotes the empty disk."""

    center: Point
    radius: float

    def __post_init__(self):
        cx, cy = self.center
        if not (math.isfinite(cx) and math.isfinite(cy)):
            raise GeometryError(f"non-finite disk center {self.center!r}")
        if not math.isfinite(self.radius) or self.radius < 0:
            raise GeometryError(f"invalid disk radius {self.radius!r}")
        object.__setattr__(self, "center", Point(float(cx), float(cy)))


class Segment(NamedTuple):
    a: Point
    b: Point


class CrossingKind(enum.Enum):
    NONE = "none"
    PROPER = "proper"
    ENDPOINT_SHARED = "endpoint_shared"
    COLLINEAR_OVERLAP = "collinear_overlap"


def distance(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def strictly_inside(p, d: Disk) -> bool:
    """True iff ``p`` lies in the open disk, away from its boundary."""
    if d.radius <= 0:
        return False
    return distance(p, d.center) < d.radius * (1.0 - EPS)


def on_boundary(p, d: Disk) -> bool:
    return abs(distance(p, d.center) - d.radius) <= EPS * d.radius


# ---------------------------------------------------------------------------
# circles
# ---------------------------------------------------------------------------


def circle_relation(d1: Disk, d2: Disk) -> str:
    """Classify two circles: transversal, tangent, disjoint, nested or identical."""
    r1, r2 = d1.radius, d2.radius
    sep = distance(d1.center, d2.center)
    tol = EPS * max(r1, r2)
    if sep <= tol and abs(r1 - r2) <= tol:
        return "identical"
    if abs(sep - (r1 + r2)) <= tol or abs(sep - abs(r1 - r2)) <= tol:
        return "tangent"
    if sep > r1 + r2:
        return "disjoint"
    if sep < abs(r1 - r2):
        return "nested"
    return "transversal"


def circle_intersections(d1: Disk, d2: Disk, *, with_status: bool = False):
    """Transversal intersection points of two boundary circles.

    Tangent, disjoint, nested and identical circles give no points.  With
    ``with_status=True`` the return value is ``(points, status)`` where status
    is the :func:`circle_relation` tag, so identical circles can be told
    apart from disjoint ones.
    """
    if d1.radius <= 0 or d2.radius <= 0:
        raise GeometryError("circle_intersections needs positive radii")
    status = circle_relation(d1, d2)
    points: list[Point] = []
    if status == "transversal":
        (x1, y1), (x2, y2) = d1.center, d2.center
        r1, r2 = d1.radius, d2.radius
        dx, dy = x2 - x1, y2 - y1
        sep = math.hypot(dx, dy)
        a = (r1 * r1 - r2 * r2 + sep * sep) / (2 * sep)
        h = math.sqrt(max(r1 * r1 - a * a, 0.0))
        mx, my = x1 + a * dx / sep, y1 + a * dy / sep
        points = [
            Point(mx - h * dy / sep, my + h * dx / sep),
            Point(mx + h * dy / sep, my - h * dx / sep),
        ]
        points.sort()
    return (points, status) if with_status else points


def pairwise_circle_intersections(centers: np.ndarray, radii: np.ndarray):
    """Vectorised transversal intersections for all circle pairs.

    Returns ``(points, i, j)``: an ``(m, 2)`` array of intersection points and
    the indices of the two circles producing each point.
    """
    centers = np.asarray(centers, dtype=float)
    radii = np.asarray(radii, dtype=float)
    n = len(radii)
    if n < 2:
        return np.empty((0, 2)), np.empty(0, dtype=int), np.empty(0, dtype=int)
    i, j = np.triu_indices(n, 1)
    delta = centers[j] - centers[i]
    sep = np.hypot(delta[:, 0], delta[:, 1])
    r1, r2 = radii[i], radii[j]
    tol = EPS * np.maximum(r1, r2)
    ok = (sep > np.abs(r1 - r2) + tol) & (sep < r1 + r2 - tol)
    i, j, delta, sep, r1, r2 = i[ok], j[ok], delta[ok], sep[ok], r1[ok], r2[ok]
    a = (r1 * r1 - r2 * r2 + sep * sep) / (2 * sep)
    h = np.sqrt(np.maximum(r1 * r1 - a * a, 0.0))
    ux, uy = delta[:, 0] / sep, delta[:, 1] / sep
    mx = centers[i, 0] + a * ux
    my = centers[i, 1] + a * uy
    p = np.stack([mx - h * uy, my + h * ux], axis=1)
    q = np.stack([mx + h * uy, my - h * ux], axis=1)
    points = np.concatenate([p, q])
    return points, np.concatenate([i, i]), np.concatenate([j, j])


def apollonius_circle(a, c, k: float) -> Disk:
    """Circle of points ``x`` with ``|a x| = k |c x|``."""
    if not k > 0:
        raise GeometryError("ratio must be positive")
    if k == 1:
        raise GeometryError("ratio 1 gives the perpendicular bisector, not a circle")
    ax, ay = a
    cx, cy = c
    sep = math.hypot(ax - cx, ay - cy)
    if sep == 0:
        raise GeometryError("foci coincide")
    k2 = k * k
    center = Point((k2 * cx - ax) / (k2 - 1), (k2 * cy - ay) / (k2 - 1))
    return Disk(center, k * sep / abs(k2 - 1))


# ---------------------------------------------------------------------------
# segments
# ---------------------------------------------------------------------------

_NONE, _PROPER, _SHARED, _OVERLAP = 0, 1, 2, 3
_KINDS = {
    _NONE: CrossingKind.NONE,
    _PROPER: CrossingKind.PROPER,
    _SHARED: CrossingKind.ENDPOINT_SHARED,
    _OVERLAP: CrossingKind.COLLINEAR_OVERLAP,
}


def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def classify_segment_pairs(a, b, c, d) -> np.ndarray:
    """Vectorised :func:`segment_relation` over arrays of segment pairs.

    ``a, b`` are ``(m, 2)`` endpoint arrays of the first segments and
    ``c, d`` of the second.  Returns integer codes (see ``KIND_CODES``).
    """
    a, b, c, d = (np.atleast_2d(np.asarray(v, dtype=float)) for v in (a, b, c, d))
    ab = b - a
    cd = d - c
    len1 = np.hypot(ab[:, 0], ab[:, 1])
    len2 = np.hypot(cd[:, 0], cd[:, 1])
    scale = np.maximum(len1, len2)
    tol_len = EPS * scale

    o1 = _cross(a[:, 0], a[:, 1], b[:, 0], b[:, 1], c[:, 0], c[:, 1])
    o2 = _cross(a[:, 0], a[:, 1], b[:, 0], b[:, 1], d[:, 0], d[:, 1])
    o3 = _cross(c[:, 0], c[:, 1], d[:, 0], d[:, 1], a[:, 0], a[:, 1])
    o4 = _cross(c[:, 0], c[:, 1], d[:, 0], d[:, 1], b[:, 0], b[:, 1])
    # |cross| / |segment| is the distance of the probe point to the line
    z1 = np.abs(o1) <= tol_len * len1
    z2 = np.abs(o2) <= tol_len * len1
    z3 = np.abs(o3) <= tol_len * len2
    z4 = np.abs(o4) <= tol_len * len2

    def close(p, q):
        return np.hypot(p[:, 0] - q[:, 0], p[:, 1] - q[:, 1]) <= tol_len

    shared = close(a, c) | close(a, d) | close(b, c) | close(b, d)

    proper = (~z1 & ~z2 & ~z3 & ~z4) & (np.sign(o1) != np.sign(o2)) & (
        np.sign(o3) != np.sign(o4)
    )

    collinear = z1 & z2 & z3 & z4
    safe = np.where(len1 > 0, len1, 1.0)
    ux, uy = ab[:, 0] / safe, ab[:, 1] / safe
    tc = (c[:, 0] - a[:, 0]) * ux + (c[:, 1] - a[:, 1]) * uy
    td = (d[:, 0] - a[:, 0]) * ux + (d[:, 1] - a[:, 1]) * uy
    lo = np.maximum(0.0, np.minimum(tc, td))
    hi = np.minimum(len1, np.maximum(tc, td))
    overlap = collinear & (hi - lo > tol_len)

    out = np.full(len(a), _NONE, dtype=np.int8)
    out[shared] = _SHARED
    out[proper] = _PROPER
    out[overlap] = _OVERLAP
    return out


KIND_CODES = {kind: code for code, kind in _KINDS.items()}


def segment_relation(s1: Segment, s2: Segment) -> CrossingKind:
    """Relation between two closed segments.

    ``PROPER`` means the open interiors meet in one transversal point.  A
    T-junction (an endpoint touching the other segment's interior) is
    ``NONE``: neither open interior contains that endpoint.
    """
    code = classify_segment_pairs([s1[0]], [s1[1]], [s2[0]], [s2[1]])[0]
    return _KINDS[int(code)]


# ---------------------------------------------------------------------------
# regions bounded by circles and lines
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Annulus:
    """Closed band ``lo <= |center x| <= hi``."""

    center: Point
    lo: float
    hi: float

    def contains(self, pts, tol):
        r = np.hypot(pts[:, 0] - self.center[0], pts[:, 1] - self.center[1])
        return (r >= self.lo - tol * max(self.hi, 1e-300)) & (r <= self.hi * (1 + tol))

    def curves(self):
        out = [("circle", self.center, self.hi)]
        if self.lo > 0:
            out.append(("circle", self.center, self.lo))
        return out

    def bbox(self):
        cx, cy = self.center
        return (cx - self.hi, cy - self.hi, cx + self.hi, cy + self.hi)


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane ``(x - point) . normal >= 0``."""

    point: Point
    normal: Point

    def contains(self, pts, tol):
        nx, ny = self.normal
        s = (pts[:, 0] - self.point[0]) * nx + (pts[:, 1] - self.point[1]) * ny
        return s >= -tol * math.hypot(nx, ny) * np.maximum(1.0, np.abs(pts).max(axis=1))

    def curves(self):
        return [("line", self.point, self.normal)]

    def bbox(self):
        return None


@dataclass(frozen=True)
class ApolloniusRegion:
    """Closed inside (or outside) of the circle ``|a x| = k |c x|``."""

    a: Point
    c: Point
    k: float
    inside: bool = True

    @property
    def disk(self) -> Disk:
        return apollonius_circle(self.a, self.c, self.k)

    def contains(self, pts, tol):
        d = self.disk
        r = np.hypot(pts[:, 0] - d.center[0], pts[:, 1] - d.center[1])
        if self.inside:
            return r <= d.radius * (1 + tol)
        return r >= d.radius * (1 - tol)

    def curves(self):
        d = self.disk
        return [("circle", d.center, d.radius)]

    def bbox(self):
        if not self.inside:
            return None
        d = self.disk
        cx, cy = d.center
        return (cx - d.radius, cy - d.radius, cx + d.radius, cy + d.radius)


def _curve_intersections(c1, c2) -> list[tuple[float, float]]:
    kind1, kind2 = c1[0], c2[0]
    if kind1 == "line" and kind2 == "line":
        (px, py), (nx, ny) = c1[1], c1[2]
        (qx, qy), (mx, my) = c2[1], c2[2]
        det = nx * my - ny * mx
        if abs(det) < 1e-15:
            return []
        b1 = nx * px + ny * py
        b2 = mx * qx + my * qy
        return [((b1 * my - ny * b2) / det, (nx * b2 - b1 * mx) / det)]
    if kind1 == "line" or kind2 == "line":
        line, circ = (c1, c2) if kind1 == "line" else (c2, c1)
        (px, py), (nx, ny) = line[1], line[2]
        (cx, cy), r = circ[1], circ[2]
        nn = math.hypot(nx, ny)
        nx, ny = nx / nn, ny / nn
        dist = (cx - px) * nx + (cy - py) * ny
        if abs(dist) > r:
            return []
        fx, fy = cx - dist * nx, cy - dist * ny
        h = math.sqrt(max(r * r - dist * dist, 0.0))
        return [(fx - h * ny, fy + h * nx), (fx + h * ny, fy - h * nx)]
    try:
        pts = circle_intersections(Disk(c1[1], c1[2]), Disk(c2[1], c2[2]))
    except GeometryError:
        return []
    return [tuple(p) for p in pts]


def _sample_curve(curve, samples: int, box) -> np.ndarray:
    if curve[0] == "circle":
        (cx, cy), r = curve[1], curve[2]
        t = 2 * np.pi * np.arange(samples) / samples
        return np.stack([cx + r * np.cos(t), cy + r * np.sin(t)], axis=1)
    (px, py), (nx, ny) = curve[1], curve[2]
    nn = math.hypot(nx, ny)
    dx, dy = -ny / nn, nx / nn
    x0, y0, x1, y1 = box
    half = math.hypot(x1 - x0, y1 - y0) + math.hypot(px - (x0 + x1) / 2, py - (y0 + y1) / 2)
    t = -half + 2 * half * np.arange(samples + 1) / samples
    return np.stack([px + t * dx, py + t * dy], axis=1)


def _polar_grid(ann: Annulus, m: int) -> np.ndarray:
    rad = ann.lo + (ann.hi - ann.lo) * np.arange(m + 1) / m
    ang = 2 * np.pi * np.arange(4 * m) / (4 * m)
    rr, aa = np.meshgrid(rad, ang)
    return np.stack(
        [ann.center[0] + (rr * np.cos(aa)).ravel(), ann.center[1] + (rr * np.sin(aa)).ravel()],
        axis=1,
    )


def _diameter(points: np.ndarray) -> float:
    if len(points) < 2:
        return 0.0
    try:
        hull = points[ConvexHull(points).vertices]
    except QhullError:
        hull = points  # collinear or tiny point sets
        if len(hull) > 2000:
            order = np.lexsort((hull[:, 1], hull[:, 0]))
            hull = hull[[order[0], order[-1]]]
    if len(hull) <= 2000:
        diff = hull[:, None, :] - hull[None, :, :]
        return float(np.sqrt((diff**2).sum(-1)).max())
    return _calipers(hull)


def _calipers(hull: np.ndarray) -> float:
    """Diameter of a convex polygon (counter-clockwise vertices) by rotating calipers."""
    n = len(hull)
    best = 0.0
    j = 1
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        ex, ey = b - a
        while True:
            c, d = hull[j], hull[(j + 1) % n]
            if ex * (d[1] - c[1]) - ey * (d[0] - c[0]) > 0:
                j = (j + 1) % n
            else:
                break
        best = max(best, math.dist(a, hull[j]), math.dist(b, hull[j]))
    return best


def region_points(constraints: Sequence, samples: int = 100_000) -> np.ndarray:
    """Feasible sample points of a region: boundary samples, corners and a
    coarse interior polar grid.  Sample sets for ``s`` and ``4 s`` are nested."""
    if not constraints:
        raise GeometryError("at least one constraint is required")
    boxes = [c.bbox() for c in constraints if c.bbox() is not None]
    if not boxes:
        raise GeometryError("region must be bounded by an annulus or an inside-Apollonius constraint")
    box = (
        max(b[0] for b in boxes),
        max(b[1] for b in boxes),
        min(b[2] for b in boxes),
        min(b[3] for b in boxes),
    )
    curves = [cv for c in constraints for cv in c.curves()]
    chunks = [_sample_curve(cv, samples, box) for cv in curves]
    corners = [p for i in range(len(curves)) for j in range(i + 1, len(curves))
               for p in _curve_intersections(curves[i], curves[j])]
    if corners:
        chunks.append(np.array(corners, dtype=float))
    # doubles exactly when samples quadruples, keeping grids nested
    level = 0
    while 4 ** (level + 1) <= samples:
        level += 1
    m = 2 ** max(1, level - 2)
    for c in constraints:
        if isinstance(c, Annulus):
            chunks.append(_polar_grid(c, m))
    pts = np.concatenate(chunks)
    keep = np.ones(len(pts), dtype=bool)
    for c in constraints:
        keep &= c.contains(pts, EPS)
    return pts[keep]


def region_diameter(constraints: Sequence, samples: int = 100_000) -> float:
    """Approximate diameter of the closed region cut out by ``constraints``.

    The diameter of a compact set is attained on its boundary, so the
    estimate uses dense samples of every constraint curve plus all pairwise
    curve crossings (the region's corners).
    """
    pts = region_points(constraints, samples)
    if len(pts) == 0:
        raise EmptyRegionError("no feasible sample in region")
    return _diameter(pts)

"""Closed-form bounds and their numeric checks.

Covers the degree-24 quadratic, the shrink-factor limit for ternary
orthogonal trees, the K_8 region partition with its recurrence, and the
sector counting behind the K_{2,m} bound.  Angles are radians unless a
name ends in ``_deg``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import (
    Annulus,
    Disk,
    HalfPlane,
    Point,
    apollonius_circle,
    region_diameter,
    region_points,
)

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


# --- degree bound ---------------------------------------------------------

@dataclass(frozen=True)
class QuadraticBounds:
    """Roots, scaled by 3, of ``3q^2/4 - 2q cos(alpha) + 1 = 0``.

    A leaf at relative distance ``q`` from its angular neighbour is allowed
    when ``3q <= lower`` or ``3q >= upper``; the edge-ratio bound confines
    ``3q`` to ``[3, 3*sqrt(2)]``.
    """

    alpha: float
    lower: float | None
    upper: float | None
    discriminant: float
    feasible: bool
    low_threshold: float = 3.0
    high_threshold: float = 3 * SQRT2

    @property
    def real_roots(self) -> bool:
        return self.discriminant >= 0


def k25_bounds(alpha: float) -> QuadraticBounds:
    """Evaluate ``4 cos(a) -/+ sqrt(16 cos^2(a) - 12)`` against 3 and 3*sqrt(2).

    With a negative discriminant the inequality holds for every ``q``, so the
    angle is feasible.
    """
    if not 0 <= alpha < math.pi / 2:
        raise DomainError("alpha must lie in [0, pi/2)")
    c = math.cos(alpha)
    disc = 16 * c * c - 12
    if disc < 0:
        return QuadraticBounds(alpha, None, None, disc, True)
    root = math.sqrt(disc)
    lower, upper = 4 * c - root, 4 * c + root
    feasible = lower >= 3.0 or upper <= 3 * SQRT2
    return QuadraticBounds(alpha, lower, upper, disc, feasible)


# --- shrink factor --------------------------------------------------------

@dataclass(frozen=True)
class ShrinkLimit:
    q: float
    f: float
    dist_v1_w: float
    dist_v3_w: float


def shrink_limit(q: float) -> ShrinkLimit:
    """Distances to the limit point ``w`` of the staircase of shrinking edges.

    ``f(q) = |v1 w| - 1/2``; negative ``f`` puts ``w`` inside the disk of
    ``v1``.  For ``q`` above about 0.786 the bracket changes sign and
    ``dist_v1_w`` is a signed value, as in the printed formula.
    """
    if not 0 < q < 1:
        raise DomainError("q must lie in (0, 1)")
    s = math.sqrt(1 + q * q)
    v3w = q**3 / (1 - q * q) * s
    v1w = (q - q**3 / (1 - q * q)) * s
    return ShrinkLimit(q, v1w - 0.5, v1w, v3w)


def shrink_grid_max(points: int = 9999) -> tuple[float, float]:
    """Largest ``f(q)`` on the open uniform grid ``q = j/(points+1)``; returns ``(q, f)``."""
    q = np.arange(1, points + 1) / (points + 1)
    f = (q - q**3 / (1 - q**2)) * np.sqrt(1 + q**2) - 0.5
    k = int(np.argmax(f))
    return float(q[k]), float(f[k])


# --- K_8 regions ------------------------------------------------------------

X1 = Point(0.0, 0.0)
X2 = Point(2.0, 0.0)

# closed distance bands (to x1, to x2) of each region, tried in this order
_BANDS = {
    "A": ((SQRT2, 2.0), (SQRT2, 2.0)),
    "B": ((1.0, SQRT2), (SQRT2, 2.0)),
    "C": ((SQRT2, 2.0), (1.0, SQRT2)),
    "D": ((1.0, SQRT2), (1.0, SQRT2)),
}
# the named subregions whose diameters the case analysis uses
_SUBBANDS = {
    "B+_1": ((1.0, SQRT2), (SQRT2, SQRT3)),
    "B+_2": ((1.0, SQRT2), (SQRT3, 2.0)),
    "A+_1": ((SQRT3, 2.0), (SQRT3, 2.0)),
    "A+_2": ((SQRT2, SQRT3), (SQRT3, 2.0)),
    "A+_3": ((SQRT3, 2.0), (SQRT2, SQRT3)),
    "A+_4": ((SQRT2, SQRT3), (SQRT2, SQRT3)),
}


@dataclass(frozen=True)
class RegionLabel:
    letter: str | None  # A, B, C, D, or None outside the band
    sign: str = ""  # "+" for y >= 0, "-" below

    @property
    def outside(self) -> bool:
        return self.letter is None

    def __str__(self):
        return "outside" if self.letter is None else self.letter + self.sign


def k8_region(p) -> RegionLabel:
    """Region of ``p`` relative to the longest edge ``x1=(0,0)``, ``x2=(2,0)``.

    Bands are closed and tried in the order A, B, C, D.  Points on the
    edge's line count as ``+``.
    """
    x, y = float(p[0]), float(p[1])
    d1 = math.hypot(x - X1.x, y - X1.y)
    d2 = math.hypot(x - X2.x, y - X2.y)
    for letter, ((lo1, hi1), (lo2, hi2)) in _BANDS.items():
        if lo1 <= d1 <= hi1 and lo2 <= d2 <= hi2:
            return RegionLabel(letter, "+" if y >= 0 else "-")
    return RegionLabel(None)


def k8_region_constraints(name: str) -> list:
    """Constraint list for ``region_diameter``: e.g. ``"B+"``, ``"A+_4"``, ``"D-"``."""
    if name in _SUBBANDS:
        bands, sign = _SUBBANDS[name], "+"
    elif len(name) == 2 and name[0] in _BANDS and name[1] in "+-":
        bands, sign = _BANDS[name[0]], name[1]
    else:
        raise DomainError(f"unknown K_8 region {name!r}")
    (lo1, hi1), (lo2, hi2) = bands
    normal = Point(0.0, 1.0 if sign == "+" else -1.0)
    return [Annulus(X1, lo1, hi1), Annulus(X2, lo2, hi2), HalfPlane(X1, normal)]


def k8_region_diameter(name: str, samples: int = 100_000) -> float:
    return region_diameter(k8_region_constraints(name), samples)


def d_plus_cover() -> tuple[Disk, float]:
    """Cover circle for D+ when A- holds a vertex at its highest point.

    The vertex sits at ``a = c - (0, 1)`` with ``c`` the midpoint of the
    edge; the locus ``|a x| = 2 |c x|`` is the returned circle.  The second
    value is the largest distance from its center to a sample of D+
    divided by its radius (at most 1 means D+ is covered).
    """
    c = Point(1.0, 0.0)
    disk = apollonius_circle(Point(1.0, -1.0), c, 2.0)
    pts = region_points(k8_region_constraints("D+"), 20_000)
    far = float(np.hypot(pts[:, 0] - disk.center.x, pts[:, 1] - disk.center.y).max())
    return disk, far / disk.radius


def fn_recurrence(n: int) -> float:
    """``f(n)`` of the A+_2 distance recurrence: ``f(1) = sqrt(3)``, limit 2."""
    return float(fn_sequence(n)[-1])


def fn_sequence(n: int) -> np.ndarray:
    """``f(1), ..., f(n)``."""
    if n < 1:
        raise DomainError("n must be >= 1")
    out = np.empty(n)
    out[0] = SQRT3
    for j in range(1, n):
        cos_a = (4 + 2 - (out[j - 1] / 2) ** 2) / (4 * SQRT2)
        sin_a = math.sqrt(max(0.0, 1 - cos_a * cos_a))
        inner = 0.75 * cos_a - math.sqrt(7) / 4 * sin_a
        out[j] = math.sqrt(4 + 2 - 4 * SQRT2 * inner)
    return out


# --- K_{2,m} sectors --------------------------------------------------------

BETA1_DEG = 41.41  # inner-range angle, the stated value (cos is 3/4)
# inner capacity when the outer range is full, or holds one fewer vertex
INNER_IF_OUTER_FULL = 4
INNER_IF_OUTER_LESS_ONE = 5


@dataclass(frozen=True)
class SectorAnalysis:
    alpha_d: float
    beta1: float
    beta2: float
    outer_capacity: int
    inner_capacity_half: int
    combined_bound: int

    @property
    def alpha_d_deg(self) -> float:
        return math.degrees(self.alpha_d)

    @property
    def beta1_deg(self) -> float:
        return math.degrees(self.beta1)

    @property
    def beta2_deg(self) -> float:
        return math.degrees(self.beta2)

    @property
    def inner_capacity(self) -> int:
        return 2 * self.inner_capacity_half

    @property
    def naive_bound(self) -> int:
        return self.outer_capacity + self.inner_capacity


def k2m_analysis() -> SectorAnalysis:
    """Angular capacities for K_{2,m} with the two hubs at unit distance.

    ``alpha_d`` is the smallest angle at a hub between two leaves at
    distances ``sqrt(2)`` and 2 that are themselves at distance 1.  ``beta2``
    is the angle at a hub subtending the two points of the bisector at
    distance 2 from both hubs.
    """
    alpha_d = math.acos((4 + 2 - 1) / (4 * SQRT2))
    beta2 = 2 * math.atan2(math.sqrt(4 - 0.25), 0.5)
    beta1 = math.radians(BETA1_DEG)
    outer = math.floor(2 * beta2 / alpha_d)
    inner_half = math.ceil(2 * beta1 / alpha_d)
    combined = max(outer + INNER_IF_OUTER_FULL, outer - 1 + INNER_IF_OUTER_LESS_ONE)
    return SectorAnalysis(alpha_d, beta1, beta2, outer, inner_half, combined)

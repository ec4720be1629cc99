"""Seeded instance generators shared by the test modules."""
from __future__ import annotations

import functools
import itertools
import math

import numpy as np

from emptyply import Drawing, Graph

SEPARATION = 0.1
MIN_CROSSING_ANGLE = math.radians(20)


def _well_separated(centers, radii, sep=SEPARATION, min_angle=MIN_CROSSING_ANGLE) -> bool:
    """No near-tangencies, shallow crossings, or near-coincident arrangement vertices.

    Under these conditions every face of the arrangement contains a disk
    far wider than the oracle's grid pitch, so the grid cannot miss it.
    """
    pts = []
    for i, j in itertools.combinations(range(len(radii)), 2):
        d = math.dist(centers[i], centers[j])
        ri, rj = radii[i], radii[j]
        if abs(d - (ri + rj)) < sep or abs(d - abs(ri - rj)) < sep:
            return False
        if abs(ri - rj) < d < ri + rj:
            cos_t = (ri * ri + rj * rj - d * d) / (2 * ri * rj)
            t = math.acos(max(-1.0, min(1.0, cos_t)))
            if not min_angle < t < math.pi - min_angle:
                return False
            a = (ri * ri - rj * rj + d * d) / (2 * d)
            h = math.sqrt(max(ri * ri - a * a, 0.0))
            ux, uy = (centers[j] - centers[i]) / d
            bx, by = centers[i] + a * np.array([ux, uy])
            for s in (1, -1):
                pts.append((bx - s * h * uy, by + s * h * ux, i, j))
    for x, y, i, j in pts:
        others = np.ones(len(radii), dtype=bool)
        others[[i, j]] = False
        gap = np.abs(np.hypot(centers[others, 0] - x, centers[others, 1] - y) - radii[others])
        if len(gap) and gap.min() < sep:
            return False
    return True


def separated_disk_instance(rng, max_disks=30, tries=200):
    """``(centers, radii, resolution)`` passing :func:`_well_separated`.

    Centers lie in ``[0, 5]^2`` and radii in ``[0.1, 1]``.  Disks are added
    one at a time; a candidate that breaks the separation is redrawn (up to
    ``tries`` times each), so large instances stay reachable instead of
    being rejected wholesale.  The grid pitch is an eighth of the closest
    center pair, capped at a tenth of the separation.
    """
    n = int(rng.integers(1, max_disks + 1))
    centers = np.empty((0, 2))
    radii = np.empty(0)
    for _ in range(n):
        for _ in range(tries):
            c = np.vstack([centers, rng.uniform(0, 5, (1, 2))])
            r = np.append(radii, rng.uniform(0.1, 1.0))
            if _well_separated(c, r):
                centers, radii = c, r
                break
    res = SEPARATION / 10
    if len(radii) > 1:
        gap = np.hypot(*(centers[:, None] - centers[None]).transpose(2, 0, 1))
        res = min(res, gap[np.triu_indices(len(radii), 1)].min() / 8)
    return centers, radii, res


def random_drawing(rng, max_n=20, p=None) -> Drawing:
    """Random positions in the unit square with a random connected-ish edge set."""
    n = int(rng.integers(2, max_n + 1))
    pos = rng.random((n, 2))
    p = rng.uniform(0.1, 0.6) if p is None else p
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    if not edges:
        edges = [(0, 1)]
    return Drawing(Graph(n, edges), pos)


@functools.lru_cache(maxsize=None)
def bundled() -> dict:
    """The bundled empty-ply corpus, built once per test session."""
    from emptyply.constructions import bundled_empty_ply

    return bundled_empty_ply()

"""Maximum depth of an arrangement of open disks.

The deepest face of the arrangement either has a circle-circle vertex on
its closure, or is bounded by one full circle and then contains that
circle's center.  So it suffices to evaluate disk centers and the
transversal intersection points.  At a point where only the two generating
circles pass, the lens-side sector gains both disks; at degenerate points
(three or more boundaries within tolerance) every angular sector between
the tangent lines is evaluated to first order.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from ..errors import DomainError
from ..geometry import EPS, Disk, Point, pairwise_circle_intersections

_CHUNK = 4096


def _as_arrays(disks):
    if isinstance(disks, tuple) and len(disks) == 2 and isinstance(disks[0], np.ndarray):
        centers, radii = disks
    else:
        disks = list(disks)
        centers = np.array([d.center for d in disks], dtype=float).reshape(-1, 2)
        radii = np.array([d.radius for d in disks], dtype=float)
    return np.asarray(centers, dtype=float), np.asarray(radii, dtype=float)


def _sector_gain(p, through: np.ndarray):
    """Best number of through-``p`` circles covering a direction, and that direction."""
    normals = through - p
    normals /= np.hypot(normals[:, 0], normals[:, 1])[:, None]
    base = np.arctan2(normals[:, 1], normals[:, 0])
    cuts = np.sort(np.concatenate([base + np.pi / 2, base - np.pi / 2]) % (2 * np.pi))
    gaps = np.diff(np.concatenate([cuts, cuts[:1] + 2 * np.pi]))
    # zero-width sectors come from tangent circle pairs; skip them
    mids = (cuts + gaps / 2)[gaps > 1e-12]
    if len(mids) == 0:
        mids = cuts[:1] + np.pi / 2
    dirs = np.stack([np.cos(mids), np.sin(mids)], axis=1)
    gain = (dirs @ normals.T > 0).sum(axis=1)
    k = int(np.argmax(gain))
    return int(gain[k]), dirs[k]


def _plain_count(p, centers, radii) -> int:
    d = np.hypot(centers[:, 0] - p[0], centers[:, 1] - p[1])
    return int((d < radii).sum())


def _resolve_witness(p, direction, depth, centers, radii):
    if direction is None:
        return Point(float(p[0]), float(p[1]))
    step = 1e-6 * float(radii.max())
    for _ in range(60):
        q = p + step * direction
        if _plain_count(q, centers, radii) == depth:
            return Point(float(q[0]), float(q[1]))
        step /= 2
    return Point(float(p[0]), float(p[1]))


def max_depth(disks) -> tuple[int, Point]:
    """Exact maximum number of open disks sharing a point, with a witness.

    ``disks`` is a sequence of :class:`Disk` or a ``(centers, radii)`` pair
    of arrays.  Ties between equally deep candidates go to the
    lexicographically smallest candidate point; the witness is that point
    nudged into the deepest adjacent face when the candidate lies on
    circles.
    """
    centers, radii = _as_arrays(disks)
    if len(radii) == 0:
        raise DomainError("max_depth needs at least one disk")
    if (radii <= 0).any():
        raise DomainError("zero-radius disks must be excluded before max_depth")
    n = len(radii)
    pts, gi, gj = pairwise_circle_intersections(centers, radii)
    cand = np.concatenate([centers, pts])
    owner = np.concatenate([np.arange(n), np.full(len(pts), -1)])
    gen_i = np.concatenate([np.full(n, -1), gi])
    gen_j = np.concatenate([np.full(n, -1), gj])
    tol = EPS * radii

    best_depth = -1
    best_key = None
    best = None
    for start in range(0, len(cand), _CHUNK):
        sl = slice(start, start + _CHUNK)
        P = cand[sl]
        rows = np.arange(len(P))
        D = np.hypot(P[:, None, 0] - centers[None, :, 0], P[:, None, 1] - centers[None, :, 1])
        inside = D < radii - tol
        bnd = np.abs(D - radii) <= tol
        own, a, b = owner[sl], gen_i[sl], gen_j[sl]
        is_c = own >= 0
        inside[rows[is_c], own[is_c]] = True
        bnd[rows[is_c], own[is_c]] = False
        is_x = ~is_c
        for g in (a, b):
            bnd[rows[is_x], g[is_x]] = True
            inside[rows[is_x], g[is_x]] = False
        base = inside.sum(axis=1)
        nb = bnd.sum(axis=1)
        depth = base.copy()
        simple_x = is_x & (nb == 2)
        depth[simple_x] += 2
        degenerate = np.flatnonzero((is_c & (nb > 0)) | (is_x & (nb > 2)))
        directions = {}
        for r in degenerate:
            gain, u = _sector_gain(P[r], centers[bnd[r]])
            depth[r] = base[r] + gain
            directions[r] = u
        top = depth.max()
        if top < best_depth:
            continue
        for r in np.flatnonzero(depth == top):
            key = (int(top) * -1, float(P[r, 0]), float(P[r, 1]))
            if best_key is None or key < best_key:
                best_key = key
                if r in directions:
                    u = directions[r]
                elif simple_x[r]:
                    nrm = centers[[a[r], b[r]]] - P[r]
                    nrm /= np.hypot(nrm[:, 0], nrm[:, 1])[:, None]
                    u = nrm.sum(axis=0)
                    u = u / np.hypot(*u)
                else:
                    u = None
                best = (int(top), P[r].copy(), u)
        best_depth = max(best_depth, int(top))
    depth, p, u = best
    return depth, _resolve_witness(p, u, depth, centers, radii)


def depth_oracle(disks, resolution: float) -> int:
    """Largest strict coverage count found on a regular grid of pitch ``resolution``.

    A brute-force cross-check for :func:`max_depth`; it can only
    underestimate, since every grid point is a point of the plane.
    """
    if not resolution > 0:
        raise DomainError("resolution must be positive")
    centers, radii = _as_arrays(disks)
    keep = radii > 0
    centers, radii = centers[keep], radii[keep]
    if len(radii) == 0:
        return 0
    lo = (centers - radii[:, None]).min(axis=0)
    hi = (centers + radii[:, None]).max(axis=0)
    xs = np.arange(lo[0], hi[0] + resolution, resolution)
    ys = np.arange(lo[1], hi[1] + resolution, resolution)
    r2 = radii**2
    best = 0
    rows = max(1, int(2_000_000 // max(len(xs) * len(radii), 1)))
    for start in range(0, len(ys), rows):
        gy = ys[start:start + rows]
        count = np.zeros((len(gy), len(xs)), dtype=np.int32)
        for (cx, cy), rr in zip(centers, r2):
            count += ((xs[None, :] - cx) ** 2 + (gy[:, None] - cy) ** 2) < rr
        best = max(best, int(count.max()))
    return best


def strict_count(p, disks: Sequence[Disk]) -> int:
    """Number of disks strictly containing ``p`` (no tolerance)."""
    centers, radii = _as_arrays(disks)
    return _plain_count(np.asarray(p, dtype=float), centers, radii)

"""Ply, vertex-ply and the empty-ply test for drawings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from ..drawing import Drawing, ply_disks
from ..errors import DomainError
from ..geometry import EPS, Point
from .crossings import count_crossings
from .depth import max_depth


def _require_edge(drawing: Drawing):
    if drawing.graph.m == 0:
        raise DomainError("drawing has no edges")


def containment_pairs(drawing: Drawing, radii=None) -> np.ndarray:
    """``(k, 2)`` array of pairs ``(u, v)``, ``u != v``, with ``u`` strictly inside ``D_v``.

    Rows are sorted by ``u`` then ``v``.
    """
    if radii is None:
        radii = ply_disks(drawing).radii
    pos = drawing.positions
    owners = np.flatnonzero(radii > 0)
    if len(owners) == 0:
        return np.empty((0, 2), dtype=np.int64)
    tree = cKDTree(pos)
    hits = tree.query_ball_point(pos[owners], radii[owners])
    v = np.repeat(owners, [len(h) for h in hits])
    u = np.fromiter((x for h in hits for x in h), dtype=np.int64, count=len(v))
    keep = u != v
    u, v = u[keep], v[keep]
    d = np.hypot(*(pos[u] - pos[v]).T)
    keep = d < radii[v] * (1 - EPS)
    pairs = np.stack([u[keep], v[keep]], axis=1)
    return pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]


def coverage_counts(drawing: Drawing, radii=None) -> np.ndarray:
    """Number of ply-disks strictly containing each vertex, its own included."""
    if radii is None:
        radii = ply_disks(drawing).radii
    counts = (radii > 0).astype(np.int64)
    pairs = containment_pairs(drawing, radii)
    np.add.at(counts, pairs[:, 0], 1)
    return counts


def ply(drawing: Drawing) -> tuple[int, Point]:
    """Maximum number of ply-disks sharing a point of the plane, with a witness."""
    _require_edge(drawing)
    disks = ply_disks(drawing)
    act = disks.active
    return max_depth((disks.centers[act], disks.radii[act]))


def vertex_ply(drawing: Drawing) -> tuple[int, int]:
    """Maximum coverage over vertex points; the witness is the lowest such vertex."""
    _require_edge(drawing)
    counts = coverage_counts(drawing)
    v = int(np.argmax(counts))
    return int(counts[v]), v


@dataclass(frozen=True)
class EmptyPlyCheck:
    empty: bool
    witness: tuple[int, int] | None = None  # (u, v): u lies inside D_v

    def __bool__(self):
        return self.empty


def is_empty_ply(drawing: Drawing) -> EmptyPlyCheck:
    """Whether every ply-disk contains only its own vertex."""
    _require_edge(drawing)
    pairs = containment_pairs(drawing)
    if len(pairs) == 0:
        return EmptyPlyCheck(True)
    u, v = pairs[0]
    return EmptyPlyCheck(False, (int(u), int(v)))


@dataclass(frozen=True, eq=False)
class PlyReport:
    ply: int
    ply_witness: Point
    vertex_ply: int
    vertex_ply_witness: int
    coverage: np.ndarray
    crossings: int

    def as_dict(self) -> dict:
        return {
            "ply": self.ply,
            "ply_witness": [self.ply_witness.x, self.ply_witness.y],
            "vertex_ply": self.vertex_ply,
            "vertex_ply_witness": self.vertex_ply_witness,
            "coverage": self.coverage.tolist(),
            "crossings": self.crossings,
        }


def ply_report(drawing: Drawing) -> PlyReport:
    k, p = ply(drawing)
    counts = coverage_counts(drawing)
    v = int(np.argmax(counts))
    return PlyReport(k, p, int(counts[v]), v, counts, count_crossings(drawing))

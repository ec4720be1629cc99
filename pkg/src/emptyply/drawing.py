"""Straight-line drawings, their ply-disks and validation."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geometry import Disk, Point


class ValidationError(ValueError):
    """A drawing failed :func:`validate`; ``violations`` lists why."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    kind: str  # coincident_vertices | self_loop | duplicate_edge | non_finite | bad_endpoint
    items: tuple

    def __str__(self):
        return f"{self.kind}: {self.items}"


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Construction does not enforce simplicity; :func:`validate` reports
    self-loops, duplicates and out-of-range endpoints instead.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        object.__setattr__(self, "n", int(n))
        norm = tuple((int(min(u, v)), int(max(u, v))) for u, v in edges)
        object.__setattr__(self, "edges", norm)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_array(self) -> np.ndarray:
        return np.array(self.edges, dtype=np.int64).reshape(-1, 2)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in set(self.edges):
            if u != v:
                deg[u] += 1
                deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(set(self.edges)):
            if u != v:
                adj[u].append(v)
                adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return len(set(self.edges)) == self.n - 1 and self.is_connected()


@dataclass(frozen=True, eq=False)
class Drawing:
    """A graph with one position per vertex.  Positions are read-only."""

    graph: Graph
    positions: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        pos = np.array(self.positions, dtype=float).reshape(-1, 2)
        pos.setflags(write=False)
        object.__setattr__(self, "positions", pos)

    @classmethod
    def from_edges(cls, positions, edges, metadata=None) -> "Drawing":
        positions = np.asarray(positions, dtype=float).reshape(-1, 2)
        return cls(Graph(len(positions), edges), positions, dict(metadata or {}))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges

    def point(self, v: int) -> Point:
        return Point(*map(float, self.positions[v]))

    def edge_lengths(self) -> np.ndarray:
        e = self.graph.edge_array()
        if len(e) == 0:
            return np.empty(0)
        d = self.positions[e[:, 0]] - self.positions[e[:, 1]]
        return np.hypot(d[:, 0], d[:, 1])

    def transformed(self, scale=1.0, angle=0.0, shift=(0.0, 0.0)) -> "Drawing":
        """Image under the similarity ``x -> scale * R(angle) x + shift``."""
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        pos = scale * self.positions @ rot.T + np.asarray(shift, dtype=float)
        return Drawing(self.graph, pos, dict(self.metadata))

    def with_edges(self, edges) -> "Drawing":
        return Drawing(Graph(self.n, edges), self.positions, dict(self.metadata))

    def __eq__(self, other):
        if not isinstance(other, Drawing):
            return NotImplemented
        return (
            self.graph == other.graph
            and np.array_equal(self.positions, other.positions)
            and self.metadata == other.metadata
        )

    __hash__ = None


def validate(drawing: Drawing) -> list[Violation]:
    """All reasons the drawing is unusable; an empty list means it is fine."""
    out: list[Violation] = []
    pos = drawing.positions
    n = drawing.n
    if len(pos) != n:
        out.append(Violation("bad_endpoint", ("positions", len(pos), n)))
        return out
    bad = np.flatnonzero(~np.isfinite(pos).all(axis=1))
    out.extend(Violation("non_finite", (int(v),)) for v in bad)
    seen: set[tuple[int, int]] = set()
    for u, v in drawing.edges:
        if u < 0 or v >= n:
            out.append(Violation("bad_endpoint", (u, v)))
        elif u == v:
            out.append(Violation("self_loop", (u, v)))
        elif (u, v) in seen:
            out.append(Violation("duplicate_edge", (u, v)))
        seen.add((u, v))
    if n > 1 and len(bad) == 0:
        order = np.lexsort((pos[:, 1], pos[:, 0]))
        srt = pos[order]
        same = np.flatnonzero((srt[1:] == srt[:-1]).all(axis=1))
        for k in same:
            a, b = sorted((int(order[k]), int(order[k + 1])))
            out.append(Violation("coincident_vertices", (a, b)))
    return out


def check(drawing: Drawing) -> Drawing:
    problems = validate(drawing)
    if problems:
        raise ValidationError(problems)
    return drawing


@dataclass(frozen=True, eq=False)
class PlyDiskSet:
    """Ply-disk radii of a drawing: half the longest incident edge."""

    centers: np.ndarray
    radii: np.ndarray

    @property
    def active(self) -> np.ndarray:
        """Indices of vertices with a non-empty disk."""
        return np.flatnonzero(self.radii > 0)

    def disk(self, v: int) -> Disk:
        return Disk(Point(*self.centers[v]), float(self.radii[v]))

    def shrunk(self, v: int) -> Disk:
        return Disk(Point(*self.centers[v]), float(self.radii[v]) / 2)

    def disks(self) -> list[Disk]:
        return [self.disk(int(v)) for v in self.active]

    def shrunk_disks(self) -> list[Disk]:
        return [self.shrunk(int(v)) for v in self.active]


def radii(drawing: Drawing) -> np.ndarray:
    """``r_v`` for every vertex without validating the drawing."""
    r = np.zeros(drawing.n)
    e = drawing.graph.edge_array()
    if len(e):
        half = drawing.edge_lengths() / 2
        np.maximum.at(r, e[:, 0], half)
        np.maximum.at(r, e[:, 1], half)
    return r


def ply_disks(drawing: Drawing) -> PlyDiskSet:
    check(drawing)
    r = radii(drawing)
    r.setflags(write=False)
    return PlyDiskSet(drawing.positions, r)

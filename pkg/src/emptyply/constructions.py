"""Generators for the graph families and concrete drawings.

Every generator returns a :class:`~emptyply.drawing.Drawing` (or a bare
:class:`~emptyply.drawing.Graph` for :func:`abstract_family`) whose
``metadata`` records the family and parameters.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from importlib import resources

import numpy as np

from .drawing import Drawing, Graph
from .errors import DomainError, NotAvailableError

SQRT3 = math.sqrt(3.0)

# two-ring layout of K_{1,24}: 12 leaves on each ring, the outer ring
# rotated by half a step; margins checked in the test suite
STAR_INNER = 1.0
STAR_OUTER = 1.9

# ratio of consecutive circumradii for the planar ply-4 nested triangles;
# same-level disks stay tangent while rho - 1 <= sqrt(3), and levels i, i+3
# stop overlapping, found by sweeping rho over [1.8, 3]
NESTED_PLANAR_RHO = 2.2
# overlapping layout: each level rotated by 60 degrees and scaled by 1.75
NESTED_OVERLAP_RHO = 1.75
NESTED_OVERLAP_TWIST = math.pi / 3

# first hop of the exponential paths in the non-planar theta drawing.
# u's disk reaches x1's disk but not x1 itself; any value in [0.3, 0.6]
# gives the same ply figures
THETA_FIRST_HOP = 0.5

# tree levels whose edges fall below this fraction of the root edge are not
# generated: the vertices would no longer be distinct in double precision
TREE_LENGTH_FLOOR = 1e-9
TREE_MAX_VERTICES = 200_000

SMALL_LAYOUTS = ("K7", "K2_12", "K3_9", "K4_6")
_NOT_AVAILABLE = {
    "K8": "K_n admits an empty-ply drawing if and only if n <= 7",
    "K2_15": "K_{2,m} has no empty-ply drawing for m >= 15",
}


def _meta(family, **params):
    return {"family": family, "params": params}


def star24() -> Drawing:
    """K_{1,24} with leaves on two concentric rings; empty-ply."""
    k = np.arange(12)
    inner = STAR_INNER * np.stack([np.cos(k * np.pi / 6), np.sin(k * np.pi / 6)], axis=1)
    a = k * np.pi / 6 + np.pi / 12
    outer = STAR_OUTER * np.stack([np.cos(a), np.sin(a)], axis=1)
    pos = np.concatenate([[[0.0, 0.0]], inner, outer])
    return Drawing.from_edges(pos, [(0, v) for v in range(1, 25)],
                              _meta("star24", inner=STAR_INNER, outer=STAR_OUTER))


# --- triangular lattice layouts -----------------------------------------

def _lattice(radius: int = 4):
    ij = [(i, j) for j in range(-radius, radius + 1) for i in range(-radius, radius + 1)]
    pos = np.array([(i + 0.5 * j, j * SQRT3 / 2) for i, j in ij])
    keep = np.hypot(pos[:, 0], pos[:, 1]) <= radius + 1e-9
    return pos[keep]


def lattice_layout(name: str) -> Drawing:
    """Rebuild a small layout from the unit triangular lattice.

    All pairwise distances are at least 1 and all edges at most 2, so every
    ply-disk has radius at most 1 and holds no other vertex.  ``K7`` is a
    hexagon with its center; ``Ka_b`` picks the ``a``-set (containing the
    origin, first in lexicographic order) with the most common neighbours
    within distance 2.
    """
    pos = _lattice()
    d = np.hypot(*(pos[:, None] - pos[None]).transpose(2, 0, 1))
    near = d <= 2 + 1e-9
    origin = int(np.argmin(np.hypot(pos[:, 0], pos[:, 1])))
    if name == "K7":
        ring = np.flatnonzero(np.abs(d[origin] - 1) < 1e-9)
        pts = pos[np.concatenate([[origin], ring])]
        edges = list(itertools.combinations(range(7), 2))
        return Drawing.from_edges(pts, edges, _meta("small_complete", n=7, source="lattice"))
    try:
        a, b = map(int, name[1:].split("_"))
    except ValueError:
        raise NotAvailableError(f"no lattice layout for {name!r}") from None
    others = [k for k in np.flatnonzero(near[origin]) if k != origin]
    best, best_a = -1, None
    for comb in itertools.combinations(others, a - 1):
        aset = [origin, *comb]
        common = near[aset].all(axis=0)
        common[aset] = False
        if common.sum() > best:
            best, best_a = int(common.sum()), aset
    if best < b:
        raise NotAvailableError(f"lattice has no {name} layout")
    common = near[best_a].all(axis=0)
    common[best_a] = False
    bset = np.flatnonzero(common)[:b]
    pts = np.concatenate([pos[best_a], pos[bset]])
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    return Drawing.from_edges(pts, edges, _meta("small_bipartite", n=a, m=b, source="lattice"))


def small_layout(name: str) -> Drawing:
    """A frozen empty-ply layout: ``K7``, ``K2_12``, ``K3_9`` or ``K4_6``."""
    if name not in SMALL_LAYOUTS:
        if name in _NOT_AVAILABLE:
            raise NotAvailableError(f"{name} has no empty-ply drawing", theorem=_NOT_AVAILABLE[name])
        raise NotAvailableError(f"{name} is not in the catalog {', '.join(SMALL_LAYOUTS)}")
    from .io import loads

    text = resources.files("emptyply.data").joinpath(f"{name}.json").read_text()
    return loads(text)


# --- nested triangles -----------------------------------------------------

def _nested(levels: int, radius, twist: float, meta) -> Drawing:
    pos, edges = [], []
    for i in range(levels):
        a = np.pi / 2 + 2 * np.pi * np.arange(3) / 3 + twist * i
        pos.extend(radius(i) * np.stack([np.cos(a), np.sin(a)], axis=1))
        b = 3 * i
        edges += [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
        if i:
            edges += [(b - 3 + c, b + c) for c in range(3)]
    return Drawing.from_edges(pos, edges, meta)


def nested_triangles(levels: int, variant: str = "natural", *, rho=None, twist=None) -> Drawing:
    """Concentric triangles, corresponding corners of consecutive levels joined.

    ``natural`` puts level ``i`` on circumradius ``i + 1``.  ``planar_ply4``
    uses geometric radii ``rho**i`` (ply 4, crossing-free).  ``nonplanar_ply5``
    also rotates each level by ``twist``, which creates crossings and holds
    the ply at 5 from five levels on.
    """
    if levels < 2:
        raise DomainError("nested_triangles needs levels >= 2")
    if variant == "natural":
        return _nested(levels, lambda i: i + 1.0, 0.0, _meta("nested_triangles", levels=levels, variant=variant))
    if variant == "planar_ply4":
        rho = NESTED_PLANAR_RHO if rho is None else float(rho)
        twist = 0.0 if twist is None else float(twist)
    elif variant == "nonplanar_ply5":
        rho = NESTED_OVERLAP_RHO if rho is None else float(rho)
        twist = NESTED_OVERLAP_TWIST if twist is None else float(twist)
    else:
        raise DomainError(f"unknown nested_triangles variant {variant!r}")
    if rho <= 1:
        raise DomainError("rho must exceed 1")
    meta = _meta("nested_triangles", levels=levels, variant=variant, rho=rho, twist=twist)
    return _nested(levels, lambda i: rho**i, twist, meta)


# --- theta graph ------------------------------------------------------------

def theta_graph(m: int, variant: str = "nonplanar", *, first_hop: float = THETA_FIRST_HOP) -> Drawing:
    """Outer triangle v1 v2 v3, hub u, and three paths of ``m`` vertices.

    Vertex order: u, v1, v2, v3, x_1..x_m, y_1..y_m, z_1..z_m.  The x path
    hangs off side v1v2, y off v2v3, z off v1v3; u is joined to the first
    vertex of each path and every path vertex to both ends of its side.

    ``nonplanar`` uses a unit equilateral triangle around u and places the
    path vertices outside, on the side's perpendicular bisector, at
    distances ``first_hop * 2**i`` from u.  ``planar`` spaces them evenly on
    the segment from u to the side's midpoint.
    """
    if m < 1:
        raise DomainError("theta_graph needs m >= 1")
    if variant not in ("planar", "nonplanar"):
        raise DomainError(f"unknown theta_graph variant {variant!r}")
    ang = np.pi / 2 + 2 * np.pi * np.arange(3) / 3
    outer = np.stack([np.cos(ang), np.sin(ang)], axis=1) / SQRT3
    pos = [np.zeros(2), *outer]
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (1, 3)]
    for a, b in [(1, 2), (2, 3), (1, 3)]:
        mid = (outer[a - 1] + outer[b - 1]) / 2
        if variant == "nonplanar":
            steps = first_hop * 2.0 ** np.arange(m)
            path = np.outer(steps, mid / np.hypot(*mid))
        else:
            path = np.outer(np.arange(1, m + 1) / (m + 1), mid)
        base = len(pos)
        pos.extend(path)
        for i in range(m):
            k = base + i
            edges += [(k - 1 if i else 0, k), (k, a), (k, b)]
    params = dict(m=m, variant=variant)
    if variant == "nonplanar":
        params["first_hop"] = first_hop
    return Drawing.from_edges(np.array(pos), edges, _meta("theta", **params))


# --- orthogonal trees -----------------------------------------------------

_DIRS = np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]])  # E N W S
STRAIGHT, LEFT, RIGHT = 0, 1, 3  # turns, added to a direction index mod 4


def _child_moves(d: int, state) -> list[tuple[int, int]]:
    """``(direction, turn)`` of each child of a vertex reached by ``state``.

    Ternary vertices use all three directions except back to the parent.
    Binary vertices never repeat the turn that produced them, which rules
    out the spirals that would otherwise reach back into an ancestor's disk.
    The root counts as reached by going straight east.
    """
    if state is None:
        if d == 2:
            return [(0, STRAIGHT), (2, STRAIGHT)]
        return [(0, STRAIGHT), (1, STRAIGHT), (2, STRAIGHT)]
    direction, last = state
    turns = (LEFT, STRAIGHT, RIGHT) if d == 3 else tuple(t for t in (LEFT, STRAIGHT, RIGHT) if t != last)
    return [((direction + t) % 4, t) for t in turns]


def _spine_turns(d: int, k: int) -> list[list[int]]:
    """Turn sequences of the long paths kept by a pruned tree.

    Ternary: the square spiral (always left), whose vertex four steps ahead
    lands in the current disk, and the staircase (right, left, left, then
    alternating) that converges to the limit point of the shrink-factor
    argument.  Binary: the alternating zigzag.
    """
    if d == 3:
        stairs = [RIGHT, LEFT, LEFT] + [RIGHT if t % 2 else LEFT for t in range(max(0, k - 4))]
        return [[LEFT] * (k - 1), stairs[: k - 1]]
    return [[LEFT if t % 2 == 0 else RIGHT for t in range(k - 1)]]


def orthogonal_tree(d: int, q: float, k: int, *, max_vertices: int = TREE_MAX_VERTICES) -> Drawing:
    """Complete ``d``-ary tree with ``k`` levels, drawn with axis-parallel edges.

    The root's edges have unit length and every further level is ``q`` times
    shorter; see :func:`_child_moves` for the child directions.

    A non-root vertex's disk radius is half its parent edge whatever lies
    below it, so any ancestor-closed subtree carries exactly the radii of the
    full tree.  When the complete tree would exceed ``max_vertices`` only a
    few long paths (see :func:`_spine_turns`) plus every child of their
    vertices are built, and ``metadata["complete"]`` is false.  Levels
    shorter than ``TREE_LENGTH_FLOOR`` are never generated.
    """
    if d not in (2, 3):
        raise DomainError("orthogonal_tree supports d in {2, 3}")
    if not 0 < q < 1:
        raise DomainError("shrink factor q must lie in (0, 1)")
    if k < 1:
        raise DomainError("orthogonal_tree needs k >= 1")
    depth = k
    if q ** (k - 1) < TREE_LENGTH_FLOOR:
        depth = 1 + int(math.floor(math.log(TREE_LENGTH_FLOOR) / math.log(q)))
    size = (d ** (depth + 1) - 1) // (d - 1)
    complete = size <= max_vertices

    pos = [np.zeros(2)]
    state = [None]
    level = [0]
    edges = []

    def add(p, move):
        pos.append(pos[p] + q ** level[p] * _DIRS[move[0]])
        state.append(move)
        level.append(level[p] + 1)
        edges.append((p, len(pos) - 1))
        return len(pos) - 1

    if complete:
        frontier = [0]
        for _ in range(depth):
            frontier = [add(p, mv) for p in frontier for mv in _child_moves(d, state[p])]
    else:
        # walk each spine from the root's first child, adding all siblings
        kept = {}
        for turns in _spine_turns(d, depth):
            key = ()
            p = 0
            moves = _child_moves(d, None)
            for j in range(depth):
                for i, mv in enumerate(moves):
                    if key + (i,) not in kept:
                        kept[key + (i,)] = add(p, mv)
                pick = 0 if j == 0 else next(i for i, mv in enumerate(moves) if mv[1] == turns[j - 1])
                key += (pick,)
                p = kept[key]
                moves = _child_moves(d, state[p])
    meta = _meta("orthogonal_tree", d=d, q=q, k=k)
    meta.update(complete=complete, levels_generated=depth)
    return Drawing.from_edges(np.array(pos), edges, meta)


# --- graph squares ----------------------------------------------------------

def graph_square(drawing: Drawing) -> Drawing:
    """Same positions, plus an edge for every pair at graph distance 2."""
    adj = [set(a) for a in drawing.graph.adjacency()]
    extra = set()
    for w in range(drawing.n):
        for u, v in itertools.combinations(sorted(adj[w]), 2):
            if v not in adj[u]:
                extra.add((u, v))
    meta = dict(drawing.metadata)
    meta["squared"] = True
    return Drawing(Graph(drawing.n, list(drawing.edges) + sorted(extra)), drawing.positions, meta)


def tiling_square(rows: int, cols: int) -> tuple[Drawing, Drawing]:
    """A ``rows x cols`` parallelogram of the unit triangular tiling and its square."""
    if rows < 1 or cols < 1:
        raise DomainError("tiling_square needs rows, cols >= 1")
    idx = {}
    pos = []
    for j in range(rows):
        for i in range(cols):
            idx[i, j] = len(pos)
            pos.append((i + 0.5 * j, j * SQRT3 / 2))
    edges = []
    for (i, j), v in idx.items():
        for di, dj in ((1, 0), (0, 1), (-1, 1)):
            w = idx.get((i + di, j + dj))
            if w is not None:
                edges.append((v, w))
    base = Drawing.from_edges(pos, edges, _meta("tiling_square", rows=rows, cols=cols))
    return base, graph_square(base)


# --- abstract families ------------------------------------------------------

def abstract_family(family: str, **params) -> Graph:
    """``complete`` (n), ``complete_bipartite`` (n, m) or ``dary_tree`` (d, k)."""
    for key, val in params.items():
        if int(val) < 1:
            raise DomainError(f"{key} must be >= 1")
    if family == "complete":
        n = int(params["n"])
        return Graph(n, itertools.combinations(range(n), 2))
    if family == "complete_bipartite":
        n, m = int(params["n"]), int(params["m"])
        return Graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])
    if family == "dary_tree":
        d, k = int(params["d"]), int(params["k"])
        size = (d ** (k + 1) - 1) // (d - 1) if d > 1 else k + 1
        return Graph(size, [((v - 1) // d, v) for v in range(1, size)])
    raise DomainError(f"unknown family {family!r}")


@dataclass(frozen=True)
class FamilySpec:
    """A family tag plus parameters; :meth:`build` calls the generator."""

    family: str
    n: int | None = None
    m: int | None = None
    levels: int | None = None
    d: int | None = None
    k: int | None = None
    q: float | None = None
    rho: float | None = None
    variant: str | None = None
    rows: int | None = None
    cols: int | None = None

    def params(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None and k != "family"}

    def build(self):
        f = self.family
        if f == "star24":
            return star24()
        if f == "small":
            return small_layout(self.variant)
        if f == "small_complete":
            return small_layout(f"K{self.n}")
        if f == "small_bipartite":
            return small_layout(f"K{self.n}_{self.m}")
        if f == "nested_triangles":
            return nested_triangles(self.levels, self.variant or "natural", rho=self.rho)
        if f == "theta":
            return theta_graph(self.m, self.variant or "nonplanar")
        if f == "orthogonal_tree":
            return orthogonal_tree(self.d, self.q, self.k)
        if f == "tiling_square":
            base, squared = tiling_square(self.rows, self.cols)
            return base if self.variant == "base" else squared
        if f in ("complete", "complete_bipartite"):
            return abstract_family(f, **{k: v for k, v in (("n", self.n), ("m", self.m)) if v is not None})
        if f == "dary_tree":
            return abstract_family(f, d=self.d, k=self.k)
        raise DomainError(f"unknown family {f!r}")


def bundled_empty_ply() -> dict[str, Drawing]:
    """Every shipped drawing that is empty-ply by construction."""
    out = {"star24": star24()}
    out.update({name: small_layout(name) for name in SMALL_LAYOUTS})
    for r, c in ((3, 3), (4, 5)):
        out[f"tiling_square_{r}x{c}"] = tiling_square(r, c)[1]
    for k in (4, 8, 10):
        out[f"orthogonal_tree_2_0.5_{k}"] = orthogonal_tree(2, 0.5, k)
    return out


def write_table(name: str, path) -> None:
    """Regenerate one frozen small-layout file from :func:`lattice_layout`."""
    from .io import dumps

    drawing = lattice_layout(name)
    with open(path, "w") as fh:
        fh.write(dumps(drawing) + "\n")

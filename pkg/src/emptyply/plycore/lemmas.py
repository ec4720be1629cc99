"""Structural checks that every empty-ply drawing must pass.

For an empty-ply input the edge-ratio, radius-ratio, shrunk-disk, degree
and ply-versus-vertex-ply checks are theorems.  On arbitrary drawings the
report is only diagnostic.  Every failed check carries a witness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np
from scipy.spatial import cKDTree
from scipy.stats import qmc

from ..drawing import Drawing, ply_disks
from ..errors import DomainError
from ..geometry import EPS
from .ply import coverage_counts, ply

MAX_DEGREE = 24
AREA_SAMPLES_LOG2 = 20
AREA_TOL = 0.01


@dataclass(frozen=True)
class Check:
    ok: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class LemmaReport:
    edge_ratio_ok: Check
    radius_ratio_ok: Check
    shrunk_disjoint_ok: Check
    area_bound_ok: Check
    degree_ok: Check
    five_h_ok: Check
    claims_ab_ok: Check | None = None

    def checks(self) -> dict[str, Check]:
        out = {f.name: getattr(self, f.name) for f in fields(self)}
        return {k: v for k, v in out.items() if v is not None}

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks().values())


def edge_ratio_check(drawing: Drawing) -> Check:
    """Edges sharing a vertex differ in length by at most a factor of two."""
    lengths = drawing.edge_lengths()
    e = drawing.graph.edge_array()
    n = drawing.n
    longest = np.zeros(n)
    shortest = np.full(n, np.inf)
    for col in (0, 1):
        np.maximum.at(longest, e[:, col], lengths)
        np.minimum.at(shortest, e[:, col], lengths)
    bad = np.flatnonzero(longest > 2 * shortest * (1 + EPS))
    if len(bad) == 0:
        return Check(True)
    v = int(bad[0])
    inc = np.flatnonzero((e[:, 0] == v) | (e[:, 1] == v))
    lo, hi = inc[np.argmin(lengths[inc])], inc[np.argmax(lengths[inc])]
    other = lambda k: int(e[k, 1] if e[k, 0] == v else e[k, 0])  # noqa: E731
    ratio = lengths[hi] / lengths[lo]
    return Check(False, (v, other(lo), other(hi)), f"edge ratio {ratio:.6g} at vertex {v}")


def radius_ratio_check(drawing: Drawing, radii=None) -> Check:
    """Adjacent ply-disk radii differ by at most a factor of two."""
    if radii is None:
        radii = ply_disks(drawing).radii
    e = drawing.graph.edge_array()
    big = np.maximum(radii[e[:, 0]], radii[e[:, 1]])
    small = np.minimum(radii[e[:, 0]], radii[e[:, 1]])
    bad = np.flatnonzero(big > 2 * small * (1 + EPS))
    if len(bad) == 0:
        return Check(True)
    u, v = map(int, e[bad[0]])
    return Check(False, (u, v), f"radius ratio {big[bad[0]] / small[bad[0]]:.6g}")


def shrunk_disjoint_check(drawing: Drawing, radii=None) -> Check:
    """Half-radius disks have pairwise disjoint interiors."""
    if radii is None:
        radii = ply_disks(drawing).radii
    pos = drawing.positions
    rmax = float(radii.max()) if len(radii) else 0.0
    if rmax == 0:
        return Check(True)
    pairs = cKDTree(pos).query_pairs(rmax, output_type="ndarray")
    if len(pairs) == 0:
        return Check(True)
    u, v = pairs[:, 0], pairs[:, 1]
    d = np.hypot(*(pos[u] - pos[v]).T)
    reach = (radii[u] + radii[v]) / 2
    bad = np.flatnonzero((d < reach * (1 - EPS)) & (radii[u] > 0) & (radii[v] > 0))
    if len(bad) == 0:
        return Check(True)
    order = np.lexsort((np.maximum(u[bad], v[bad]), np.minimum(u[bad], v[bad])))
    k = bad[order[0]]
    a, b = sorted((int(u[k]), int(v[k])))
    return Check(False, (a, b), f"shrunk disks overlap by {reach[k] - d[k]:.6g}")


def union_area(centers: np.ndarray, radii: np.ndarray, log2_samples: int = AREA_SAMPLES_LOG2) -> float:
    """Quasi-Monte-Carlo area of a union of disks (unscrambled Sobol points)."""
    keep = radii > 0
    centers, radii = centers[keep], radii[keep]
    if len(radii) == 0:
        return 0.0
    lo = (centers - radii[:, None]).min(axis=0)
    hi = (centers + radii[:, None]).max(axis=0)
    u = qmc.Sobol(d=2, scramble=False).random_base2(log2_samples)
    pts = lo + u * (hi - lo)
    covered = np.zeros(len(pts), dtype=bool)
    tree = cKDTree(pts)
    for hits in tree.query_ball_point(centers, radii):
        covered[hits] = True
    return float(covered.mean() * np.prod(hi - lo))


def area_bound_check(drawing: Drawing, radii=None, tol: float = AREA_TOL) -> Check:
    """Total ply-disk area is at most four times the area of the union."""
    if radii is None:
        radii = ply_disks(drawing).radii
    total = float(np.pi * (radii**2).sum())
    union = union_area(drawing.positions, radii)
    ok = total <= 4 * union * (1 + tol)
    return Check(ok, None if ok else (total, union), f"sum {total:.6g} vs union {union:.6g}")


def degree_check(drawing: Drawing) -> Check:
    deg = drawing.graph.degrees()
    v = int(np.argmax(deg))
    ok = int(deg[v]) <= MAX_DEGREE
    return Check(ok, None if ok else v, f"max degree {int(deg[v])}")


def five_h_check(drawing: Drawing) -> Check:
    """Ply is at most five times the vertex-ply."""
    k, p = ply(drawing)
    h = int(coverage_counts(drawing).max())
    ok = k <= 5 * h
    return Check(ok, None if ok else (p, k, h), f"ply {k}, vertex-ply {h}")


def _tree_levels(drawing: Drawing, root: int):
    adj = drawing.graph.adjacency()
    parent = np.full(drawing.n, -1)
    depth = np.zeros(drawing.n, dtype=np.int64)
    order = [root]
    parent[root] = root
    for v in order:
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
    parent[root] = -1
    return parent, depth, order, adj


def claims_ab_check(drawing: Drawing, root: int, radii=None) -> Check:
    """Radius and distance claims along root-leaf paths of a rooted tree.

    The drawing is rescaled so the root disk has unit radius and ``k`` is the
    largest leaf depth.  Claim A: if ``r_u >= 2**i`` then every leaf below
    ``u`` has radius ``>= 2**(2i - k)``.  Claim B: a leaf with radius in
    ``(2**(2i-k), 2**(2i-k+2)]``, ``0 <= i <= k-1``, is within ``2**(i+2)``
    of the root.
    """
    if not drawing.graph.is_tree():
        raise DomainError("Claims A/B need a tree drawing")
    if not 0 <= root < drawing.n:
        raise DomainError(f"root {root} out of range")
    if radii is None:
        radii = ply_disks(drawing).radii
    if radii[root] <= 0:
        raise DomainError("root has no incident edge")
    scale = 1.0 / radii[root]
    r = radii * scale
    parent, depth, order, adj = _tree_levels(drawing, root)
    leaves = [v for v in range(drawing.n) if v != root and len(adj[v]) == 1]
    k = int(depth[leaves].max()) if leaves else 0

    # smallest leaf radius (and that leaf) in every subtree
    min_leaf = np.full(drawing.n, np.inf)
    arg_leaf = np.full(drawing.n, -1)
    for v in leaves:
        min_leaf[v], arg_leaf[v] = r[v], v
    for v in reversed(order):
        p = parent[v]
        if p >= 0 and min_leaf[v] < min_leaf[p]:
            min_leaf[p], arg_leaf[p] = min_leaf[v], arg_leaf[v]

    for u in order:
        if arg_leaf[u] < 0 or u in leaves:
            continue
        i = math.floor(math.log2(r[u] * (1 + EPS)))
        bound = 2.0 ** (2 * i - k)
        if min_leaf[u] < bound * (1 - EPS):
            return Check(False, ("A", int(u), int(arg_leaf[u]), i),
                         f"leaf radius {min_leaf[u]:.6g} < 2^{2 * i - k}")

    pos = drawing.positions * scale
    for v in leaves:
        i = math.ceil((math.log2(r[v]) + k - 2) / 2 - EPS)
        if 0 <= i <= k - 1:
            dist = float(np.hypot(*(pos[v] - pos[root])))
            if dist > 2.0 ** (i + 2) * (1 + EPS):
                return Check(False, ("B", int(v), i),
                             f"leaf distance {dist:.6g} > 2^{i + 2}")
    return Check(True)


def lemma_report(drawing: Drawing, tree_root: int | None = None) -> LemmaReport:
    if drawing.graph.m == 0:
        raise DomainError("drawing has no edges")
    radii = ply_disks(drawing).radii
    claims = None
    if tree_root is not None:
        claims = claims_ab_check(drawing, tree_root, radii)
    return LemmaReport(
        edge_ratio_ok=edge_ratio_check(drawing),
        radius_ratio_ok=radius_ratio_check(drawing, radii),
        shrunk_disjoint_ok=shrunk_disjoint_check(drawing, radii),
        area_bound_ok=area_bound_check(drawing, radii),
        degree_ok=degree_check(drawing),
        five_h_ok=five_h_check(drawing),
        claims_ab_ok=claims,
    )

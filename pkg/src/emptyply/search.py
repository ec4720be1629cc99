"""Penalty-driven search for empty-ply layouts.

All restarts run as one batch of simulated-annealing chains.  Every
``check_every`` iterations, chains whose objective is small are handed to a
least-squares polish and then to :func:`~emptyply.plycore.is_empty_ply`;
success is only ever declared by that verifier.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from .drawing import Drawing, Graph, check, radii
from .errors import DomainError, InfeasibleByTheorem
from .geometry import EPS
from .plycore import is_empty_ply

MARGIN_FACTOR = 1e-7
MAX_EMPTY_PLY_DEGREE = 24


def penalty(drawing: Drawing, margin: float | None = None) -> float:
    """Sum over ordered pairs ``(u, v)`` of ``max(0, r_v - |uv| + margin)**2``.

    The default margin is ``1e-7`` times the longest edge, so exact
    tangencies cost a tiny positive amount; pass ``margin=0`` for the bare
    violation measure.
    """
    check(drawing)
    if drawing.graph.m == 0:
        raise DomainError("drawing has no edges")
    if margin is None:
        margin = MARGIN_FACTOR * float(drawing.edge_lengths().max())
    r = radii(drawing)
    pos = drawing.positions
    d = np.hypot(pos[:, None, 0] - pos[None, :, 0], pos[:, None, 1] - pos[None, :, 1])
    # row u, column v: vertex u against disk v
    over = np.maximum(0.0, r[None, :] - d + margin)
    over[:, r == 0] = 0.0
    np.fill_diagonal(over, 0.0)
    return float((over**2).sum())


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    restarts: int = 64
    iterations: int = 200_000
    t0: float = 0.05
    cooling: float = 0.99988
    move_scale: float = 0.1
    check_every: int = 2_000
    polish_below: float = 1e-3

    def __post_init__(self):
        if self.restarts < 1 or self.iterations < 1 or self.check_every < 1:
            raise DomainError("counts must be >= 1")
        if not 0 < self.cooling < 1:
            raise DomainError("cooling must lie in (0, 1)")
        if self.t0 <= 0 or self.move_scale <= 0:
            raise DomainError("t0 and move_scale must be positive")


@dataclass(frozen=True, eq=False)
class SearchResult:
    """``penalty`` is the margin-free penalty divided by the squared longest edge."""

    drawing: Drawing
    penalty: float
    status: str  # success | budget_exhausted
    restart: int
    iterations: int
    trace: list = field(default_factory=list)  # (iteration, best objective)

    @property
    def success(self) -> bool:
        return self.status == "success"


class _Batch:
    """Scale-free objective for a batch of layouts of one graph."""

    def __init__(self, graph: Graph):
        n = graph.n
        self.adj = np.zeros((n, n), dtype=bool)
        e = graph.edge_array()
        self.adj[e[:, 0], e[:, 1]] = True
        self.adj[e[:, 1], e[:, 0]] = True
        self.off = ~np.eye(n, dtype=bool)

    def objective(self, X: np.ndarray, margin_factor: float = MARGIN_FACTOR) -> np.ndarray:
        diff = X[:, :, None, :] - X[:, None, :, :]
        D = np.sqrt((diff**2).sum(-1))
        r = np.where(self.adj, D, 0.0).max(axis=2) / 2
        L = 2 * r.max(axis=1)
        over = np.maximum(0.0, r[:, None, :] - D + (margin_factor * L)[:, None, None])
        over *= self.off
        return (over**2).sum(axis=(1, 2)) / L**2


class _PairGeometry:
    """Signed violations ``(r_v - |uv|) / scale`` over ordered pairs, with Jacobian."""

    def __init__(self, graph: Graph, scale: float):
        self.e = graph.edge_array()
        self.n = graph.n
        self.iu, self.iv = np.nonzero(~np.eye(self.n, dtype=bool))
        self.ends = np.concatenate([self.e[:, 0], self.e[:, 1]])
        self.edge_ids = np.concatenate([np.arange(len(self.e))] * 2)
        self.scale = scale

    def _parts(self, z):
        P = z.reshape(self.n, 2)
        vec = P[self.e[:, 0]] - P[self.e[:, 1]]
        length = np.hypot(vec[:, 0], vec[:, 1])
        # longest incident edge of each vertex (a connected graph has one)
        order = np.lexsort((-length[self.edge_ids], self.ends))
        first = np.unique(self.ends[order], return_index=True)[1]
        far = self.edge_ids[order[first]]
        dv = P[self.iu] - P[self.iv]
        return vec, length, far, dv, np.hypot(dv[:, 0], dv[:, 1])

    def values(self, z, shrink=1.0):
        _, length, far, _, d = self._parts(z)
        return (length[far][self.iv] / 2 * shrink - d) / self.scale

    def jacobian(self, z, rows, shrink=1.0):
        vec, length, far, dv, d = self._parts(z)
        J = np.zeros((len(rows), self.n, 2))
        k = np.arange(len(rows))
        u, v = self.iu[rows], self.iv[rows]
        g = -dv[rows] / d[rows, None]
        np.add.at(J, (k, u), g)
        np.add.at(J, (k, v), -g)
        ed = far[v]
        gr = shrink * vec[ed] / (2 * length[ed, None])
        np.add.at(J, (k, self.e[ed, 0]), gr)
        np.add.at(J, (k, self.e[ed, 1]), -gr)
        return J.reshape(len(rows), 2 * self.n) / self.scale


def _polish(graph: Graph, X: np.ndarray, tight: float = 1e-5) -> list[np.ndarray]:
    """Candidate layouts near ``X`` that push vertices out of foreign disks.

    First a least-squares solve of the one-sided violations
    ``max(0, r_v (1 - EPS/2) - |uv|)``; the slack makes an exactly feasible
    point exist even for layouts held by tangencies.  That can stall when
    every constraint is tight at the optimum, so a second candidate solves
    ``r_v = |uv|`` for all pairs within ``tight`` of tangency (signed
    Gauss-Newton, consistent at a tangent layout).  Jacobians are analytic;
    finite differences stall on residuals this small.
    """
    e = graph.edge_array()
    geo = _PairGeometry(graph, float(np.hypot(*(X[e[:, 0]] - X[e[:, 1]]).T).max()))
    shrink = 1 - EPS / 2
    every = np.arange(len(geo.iu))

    def one_sided(z):
        return np.maximum(0.0, geo.values(z, shrink))

    def one_sided_jac(z):
        J = geo.jacobian(z, every, shrink)
        J[geo.values(z, shrink) <= 0] = 0.0
        return J

    opts = dict(xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=100 * graph.n)
    first = least_squares(one_sided, X.ravel(), jac=one_sided_jac, **opts).x
    out = [first.reshape(-1, 2)]
    rows = np.flatnonzero(geo.values(first) > -tight)
    if len(rows):
        second = least_squares(lambda z: geo.values(z)[rows], first,
                               jac=lambda z: geo.jacobian(z, rows),
                               xtol=1e-15, ftol=1e-15, gtol=1e-15, max_nfev=100 * graph.n).x
        out.append(second.reshape(-1, 2))
    return out


def _verified(graph: Graph, X: np.ndarray) -> Drawing | None:
    drawing = Drawing(graph, X)
    try:
        return drawing if is_empty_ply(drawing) else None
    except ValueError:  # coincident or non-finite positions
        return None


def _normalized(X: np.ndarray) -> np.ndarray:
    """Centered copy with unit diameter."""
    X = X - X.mean(axis=0)
    return X / np.sqrt(((X[:, None] - X[None]) ** 2).sum(-1)).max()


def optimize_empty_ply(graph: Graph, config: SearchConfig | None = None) -> SearchResult:
    """Simulated annealing for an empty-ply layout of ``graph``.

    Each restart starts from uniform positions in the unit square drawn
    from its own stream ``default_rng([seed, restart])``.  A move shifts one
    vertex by a Gaussian step of ``move_scale * sqrt(T / t0)`` times the
    current longest edge and is accepted by the Metropolis rule.  The
    result is the first verified success (lowest restart at the earliest
    check), else the lowest objective, ties to the lowest restart.
    """
    config = config or SearchConfig()
    if graph.m == 0 or not graph.is_connected():
        raise DomainError("search needs a connected graph with at least one edge")
    deg = graph.degrees()
    if deg.max() > MAX_EMPTY_PLY_DEGREE:
        v = int(np.argmax(deg))
        raise InfeasibleByTheorem(
            f"vertex {v} has degree {int(deg[v])}",
            "no vertex of an empty-ply drawing has degree greater than 24",
        )
    n, R = graph.n, config.restarts
    gens = [np.random.default_rng([config.seed, r]) for r in range(R)]
    X = np.stack([g.random((n, 2)) for g in gens])
    batch = _Batch(graph)
    J = batch.objective(X)
    best_J = J.copy()
    best_X = X.copy()
    rows = np.arange(R)
    T = config.t0
    trace = []
    it = 0
    while it < config.iterations:
        steps = min(config.check_every, config.iterations - it)
        pick = np.stack([g.integers(0, n, steps) for g in gens], axis=1)
        kick = np.stack([g.standard_normal((steps, 2)) for g in gens], axis=1)
        coin = np.stack([g.random(steps) for g in gens], axis=1)
        for s in range(steps):
            L = np.sqrt(((X[:, :, None, :] - X[:, None, :, :]) ** 2).sum(-1)).max(axis=(1, 2))
            sigma = config.move_scale * np.sqrt(T / config.t0) * L
            Y = X.copy()
            Y[rows, pick[s]] += sigma[:, None] * kick[s]
            JY = batch.objective(Y)
            accept = (JY <= J) | (coin[s] < np.exp(-(JY - J) / T))
            X[accept] = Y[accept]
            J[accept] = JY[accept]
            better = J < best_J
            best_J[better] = J[better]
            best_X[better] = X[better]
            T *= config.cooling
        it += steps
        # steps scale with the layout, so its size random-walks; reset it
        X = np.stack([_normalized(x) for x in X])
        best_X = np.stack([_normalized(x) for x in best_X])
        trace.append((it, float(best_J.min())))
        for r in np.flatnonzero(best_J <= config.polish_below):
            for cand in (best_X[r], *_polish(graph, best_X[r])):
                drawing = _verified(graph, cand)
                if drawing is not None:
                    return _result(graph, drawing, "success", int(r), it, trace)
    r = int(np.lexsort((np.arange(R), best_J))[0])
    drawing = Drawing(graph, best_X[r])
    for cand in _polish(graph, best_X[r]):
        found = _verified(graph, cand)
        if found is not None:
            return _result(graph, found, "success", r, it, trace)
    return _result(graph, drawing, "budget_exhausted", r, it, trace)


def _result(graph, drawing, status, restart, it, trace) -> SearchResult:
    scale = float(drawing.edge_lengths().max()) ** 2
    meta = {"family": "search", "params": {"restart": restart, "iterations": it}}
    drawing = Drawing(graph, drawing.positions, meta)
    return SearchResult(drawing, penalty(drawing, margin=0.0) / scale, status, restart, it, trace)

"""Acceptance suite: one test per criterion, at the stated tolerances.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""
import math
import time

import numpy as np
import pytest
from support import bundled, random_drawing, separated_disk_instance

from emptyply.analysis import (
    fn_recurrence,
    k2m_analysis,
    k8_region_diameter,
    k25_bounds,
    shrink_grid_max,
)
from emptyply.constructions import (
    SMALL_LAYOUTS,
    nested_triangles,
    orthogonal_tree,
    star24,
    theta_graph,
    tiling_square,
)
from emptyply.constructions import abstract_family
from emptyply.geometry import EPS, apollonius_circle
from emptyply.plycore import (
    count_crossings,
    depth_oracle,
    is_empty_ply,
    lemma_report,
    max_depth,
    ply,
    quarter_shped,
    vertex_ply,
)
from emptyply.search import SearchConfig, optimize_empty_ply

criterion = pytest.mark.criterion

REQUIRED_CORPUS = ("star24", *SMALL_LAYOUTS, "tiling_square", "orthogonal_tree_2")


@criterion(1, "exact depth agrees with the grid oracle on 200 separated instances")
def test_oracle_equivalence():
    start = time.perf_counter()
    mismatches = []
    for i in range(200):
        centers, radii, res = separated_disk_instance(np.random.default_rng([1, i]), max_disks=30)
        exact = max_depth((centers, radii))[0]
        grid = depth_oracle((centers, radii), res)
        if exact != grid:
            mismatches.append((i, exact, grid))
    elapsed = time.perf_counter() - start
    assert mismatches == []
    assert elapsed < 30


@criterion(2, "ply <= 5 * vertex-ply on 1000 random drawings")
def test_ply_at_most_five_times_vertex_ply():
    start = time.perf_counter()
    bad = []
    for i in range(1000):
        d = random_drawing(np.random.default_rng([2, i]), max_n=20)
        k = ply(d)[0]
        h = vertex_ply(d)[0]
        if k > 5 * h:
            bad.append((i, k, h))
    assert bad == []
    assert time.perf_counter() - start < 60


@criterion(3, "every bundled empty-ply drawing has ply <= 5")
def test_bundled_ply_at_most_five():
    corpus = bundled()
    for prefix in REQUIRED_CORPUS:
        assert any(name.startswith(prefix) for name in corpus), prefix
    over = {name: ply(d)[0] for name, d in corpus.items() if ply(d)[0] > 5}
    assert over == {}
    assert all(is_empty_ply(d) for d in corpus.values())


@criterion(4, "theta graph: ply 5 / vertex-ply 4 / 3 crossings, planar vertex-ply grows linearly")
def test_theta_graph():
    start = time.perf_counter()
    d = theta_graph(5, "nonplanar")
    assert (ply(d)[0], vertex_ply(d)[0], count_crossings(d)) == (5, 4, 3)
    h = {}
    for m in (84, 168):
        h[m] = vertex_ply(theta_graph(m, "planar"))[0]
        assert h[m] >= math.ceil(m / 28)
    assert 1.4 <= h[168] / h[84] <= 2.6
    assert time.perf_counter() - start < 60


@criterion(5, "nested triangles: planar ply 4 layout, natural ply grows")
def test_nested_triangles():
    d = nested_triangles(5, "planar_ply4")
    assert ply(d)[0] == 4
    assert count_crossings(d) == 0
    natural = [ply(nested_triangles(L, "natural"))[0] for L in (4, 8, 16)]
    assert natural[0] < natural[1] < natural[2]


@criterion(6, "degree-24 quadratic bounds and the two-ring star")
def test_degree_bound_numerics():
    b = k25_bounds(2 * math.pi / 13)
    assert 2.79 <= b.lower <= 2.81
    assert 4.26 <= b.upper <= 4.28
    s = star24()
    assert s.graph.degrees()[0] == 24
    lengths = np.sort(s.edge_lengths())
    groups = [lengths[0]]
    for x in lengths[1:]:
        if abs(x - groups[-1]) > 1e-9 * groups[-1]:
            groups.append(x)
    assert len(groups) == 2
    assert is_empty_ply(s)


@criterion(7, "shrink function negative; ternary trees fail, binary tree passes")
def test_orthogonal_trees():
    start = time.perf_counter()
    assert shrink_grid_max(9999)[1] < 0
    for q in (0.3, 0.5, 0.7, 0.9):
        assert not is_empty_ply(orthogonal_tree(3, q, 40)), q
    assert is_empty_ply(orthogonal_tree(2, 0.5, 8))
    assert time.perf_counter() - start < 30


@criterion(8, "K_8 region diameters, distance recurrence, Apollonius circle")
def test_k8_numerics():
    for name, value in (("B+", 0.75), ("A+_4", 0.50), ("B+_1", 0.54)):
        assert abs(k8_region_diameter(name) - value) <= 0.01, name
    assert fn_recurrence(1) == math.sqrt(3)
    assert abs(fn_recurrence(200) - 2) < 1e-6
    c = apollonius_circle((0, -1), (0, 0), 2)
    assert abs(c.center.x) <= 1e-12
    assert abs(c.center.y - 1 / 3) <= 1e-12
    assert abs(c.radius - 2 / 3) <= 1e-12


@criterion(9, "K_{2,m} sector angles and capacities")
def test_k2m_numerics():
    s = k2m_analysis()
    assert abs(s.alpha_d_deg - 27.89) <= 0.01
    assert abs(s.beta2_deg - 151.04) <= 0.01
    assert s.outer_capacity == 10
    assert s.combined_bound == 14


@criterion(10, "square of the triangular tiling is empty-ply with ply <= 4")
def test_tiling_square():
    base, squared = tiling_square(3, 3)
    assert ply(base)[0] == 1
    assert is_empty_ply(squared)
    assert ply(squared)[0] <= 4


@criterion(11, "quarter stubs never cross on bundled empty-ply drawings")
def test_quarter_stubs():
    counts = {name: quarter_shped(d)[1] for name, d in bundled().items()}
    assert all(v == 0 for v in counts.values()), counts


@criterion(12, "search finds K_3..K_7 and exhausts its budget on K_8")
def test_search():
    cfg = SearchConfig()  # default budget, seed 0
    for n in range(3, 8):
        start = time.perf_counter()
        res = optimize_empty_ply(abstract_family("complete", n=n), cfg)
        assert res.success, (n, res.penalty)
        assert is_empty_ply(res.drawing)
        assert time.perf_counter() - start < 300, n
    start = time.perf_counter()
    res = optimize_empty_ply(abstract_family("complete", n=8), cfg)
    assert res.status == "budget_exhausted"
    assert res.penalty > 0
    assert time.perf_counter() - start < 300


@criterion(13, "structural checks pass on every bundled empty-ply drawing")
def test_lemma_suite():
    failures = {}
    for name, d in bundled().items():
        root = 0 if d.graph.is_tree() else None
        rep = lemma_report(d, tree_root=root)
        if root is not None:
            assert rep.claims_ab_ok is not None
        bad = [k for k, c in rep.checks().items() if not c]
        if bad:
            failures[name] = bad
    assert failures == {}
    assert EPS == 1e-9

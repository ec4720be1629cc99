import json
import math
from importlib import resources

import numpy as np
import pytest
from support import bundled

from emptyply import DomainError, NotAvailableError, validate
from emptyply.constructions import (
    SMALL_LAYOUTS,
    STAR_INNER,
    STAR_OUTER,
    abstract_family,
    graph_square,
    lattice_layout,
    nested_triangles,
    orthogonal_tree,
    small_layout,
    star24,
    theta_graph,
    tiling_square,
)
from emptyply.drawing import Drawing, ply_disks
from emptyply.io import from_document
from emptyply.plycore import count_crossings, count_overlaps, is_empty_ply, ply, vertex_ply


def test_star24_shape():
    d = star24()
    assert d.n == 25 and d.graph.degrees()[0] == 24
    lengths = np.sort(d.edge_lengths())
    assert lengths[:12] == pytest.approx(STAR_INNER, rel=1e-9)
    assert lengths[12:] == pytest.approx(STAR_OUTER, rel=1e-9)
    assert is_empty_ply(d)


def test_star24_margins():
    # every leaf stays clear of the other disks by a visible margin
    d = star24()
    r = ply_disks(d).radii
    dist = np.hypot(*(d.positions[:, None] - d.positions[None]).transpose(2, 0, 1))
    np.fill_diagonal(dist, np.inf)
    assert (dist / r[None, :]).min() > 1.01


@pytest.mark.parametrize("name, n, m", [("K7", 7, 21), ("K2_12", 14, 24), ("K3_9", 12, 27), ("K4_6", 10, 24)])
def test_small_layouts(name, n, m):
    d = small_layout(name)
    assert (d.n, d.graph.m) == (n, m)
    assert is_empty_ply(d)


def test_k4_6_has_collinear_edges():
    assert count_overlaps(small_layout("K4_6")) > 0


@pytest.mark.parametrize("name, source", [("K8", "n <= 7"), ("K2_15", "m >= 15"), ("K9_9", "")])
def test_unavailable_layouts(name, source):
    with pytest.raises(NotAvailableError) as info:
        small_layout(name)
    assert source in info.value.theorem


@pytest.mark.parametrize("name", SMALL_LAYOUTS)
def test_frozen_tables_match_their_generator(name):
    text = resources.files("emptyply").joinpath(f"data/{name}.json").read_text()
    frozen = from_document(json.loads(text))
    fresh = lattice_layout(name)
    assert frozen.positions.tobytes() == fresh.positions.tobytes()
    assert frozen.edges == fresh.edges


def test_nested_triangles_figures():
    planar = nested_triangles(5, "planar_ply4")
    assert ply(planar)[0] == 4 and count_crossings(planar) == 0
    assert ply(nested_triangles(5, "nonplanar_ply5"))[0] == 5
    natural = [ply(nested_triangles(L, "natural"))[0] for L in (4, 8, 16)]
    assert natural[0] < natural[1] < natural[2]


def test_nested_triangles_domain():
    with pytest.raises(DomainError):
        nested_triangles(1)
    with pytest.raises(DomainError):
        nested_triangles(3, "other")


@pytest.mark.parametrize("levels", [4, 6, 9, 12])
def test_planar_nested_keeps_ply_four(levels):
    d = nested_triangles(levels, "planar_ply4")
    assert ply(d)[0] == 4 and count_crossings(d) == 0


@pytest.mark.parametrize("m", [1, 2, 5, 9])
def test_theta_vertex_count(m):
    for variant in ("planar", "nonplanar"):
        d = theta_graph(m, variant)
        assert d.n == 3 * m + 4
        assert not validate(d)


def test_theta_planar_small():
    d = theta_graph(1, "planar")
    assert d.n == 7 and count_crossings(d) == 0 and vertex_ply(d)[0] <= 4


def test_binary_trees_are_empty_ply():
    for k in range(1, 11):
        assert is_empty_ply(orthogonal_tree(2, 0.5, k)), k


def test_ternary_tree_fails_on_the_spiral():
    d = orthogonal_tree(3, 0.5, 20)
    assert not d.metadata["complete"]
    res = is_empty_ply(d)
    # the spiral spine is built first: root, then vertices 1, 4, 7, ...
    spiral = {0} | {1 + 3 * j for j in range(20)}
    assert not res and set(res.witness) <= spiral


def test_tree_edges_are_axis_parallel_and_shrink():
    d = orthogonal_tree(3, 0.7, 5)
    e = d.graph.edge_array()
    vec = d.positions[e[:, 1]] - d.positions[e[:, 0]]
    assert (np.min(np.abs(vec), axis=1) == 0).all()
    lengths = np.sort(np.unique(np.round(d.edge_lengths(), 12)))
    assert lengths == pytest.approx(0.7 ** np.arange(5)[::-1])


def test_tree_domain():
    for args in ((4, 0.5, 3), (2, 1.0, 3), (2, 0.5, 0)):
        with pytest.raises(DomainError):
            orthogonal_tree(*args)


def test_tiling_square():
    base, squared = tiling_square(3, 3)
    assert ply(base)[0] == 1
    assert is_empty_ply(squared) and ply(squared)[0] <= 4
    assert set(base.edges) < set(squared.edges)


def test_square_of_unit_path():
    p3 = Drawing.from_edges([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)])
    sq = graph_square(p3)
    assert (0, 2) in sq.edges
    # the middle vertex keeps only unit edges
    assert ply_disks(sq).radii.tolist() == [1, 0.5, 1]
    assert is_empty_ply(sq)


def test_abstract_families():
    assert abstract_family("complete", n=7).m == 21
    assert abstract_family("complete_bipartite", n=2, m=12).m == 24
    for k in range(1, 4):
        assert abstract_family("dary_tree", d=4, k=k).n == (4 ** (k + 1) - 1) // 3
    with pytest.raises(DomainError):
        abstract_family("complete", n=0)


@pytest.mark.parametrize("name", sorted(bundled()))
def test_bundled_outputs_validate(name):
    d = bundled()[name]
    assert not validate(d)
    assert is_empty_ply(d)
    assert ply(d)[0] <= 5
    assert math.isfinite(d.positions.max())

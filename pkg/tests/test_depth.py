import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from support import separated_disk_instance

from emptyply.errors import DomainError
from emptyply.geometry import Disk, Point
from emptyply.plycore import depth_oracle, max_depth, strict_count


def test_single_and_empty():
    with pytest.raises(DomainError):
        max_depth([])
    with pytest.raises(DomainError):
        max_depth([Disk(Point(0, 0), 0)])
    k, p = max_depth([Disk(Point(3, 4), 1)])
    assert k == 1 and p == Point(3, 4)


def test_tangent_disks_do_not_share_points():
    disks = [Disk(Point(0, 0), 1), Disk(Point(2, 0), 1)]
    assert max_depth(disks)[0] == 1


def test_lens_has_depth_two():
    disks = [Disk(Point(0, 0), 1), Disk(Point(1.5, 0), 1)]
    k, p = max_depth(disks)
    assert k == 2 and strict_count(p, disks) == 2


def test_identical_disks_stack():
    disks = [Disk(Point(0, 0), 1)] * 3
    assert max_depth(disks)[0] == 3


def test_three_circles_through_one_point():
    # unit circles centered at 120 degree spacing, all passing through the origin
    disks = [Disk(Point(math.cos(t), math.sin(t)), 1) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
    k, p = max_depth(disks)
    assert k == 2
    assert strict_count(p, disks) == 2


def test_no_center_inside_but_deep_lens():
    # four disks whose common part avoids every center
    disks = [Disk(Point(x, y), 1.2) for x, y in ((1, 0), (-1, 0), (0, 1), (0, -1))]
    k, p = max_depth(disks)
    assert k == 4 and strict_count(p, disks) == 4


def test_oracle_rejects_bad_resolution():
    with pytest.raises(DomainError):
        depth_oracle([Disk(Point(0, 0), 1)], 0)


@given(st.integers(0, 2**32 - 1))
def test_exact_depth_matches_grid_oracle(seed):
    centers, radii, res = separated_disk_instance(np.random.default_rng(seed), max_disks=12)
    assert max_depth((centers, radii))[0] == depth_oracle((centers, radii), res)


@given(st.integers(0, 2**32 - 1))
def test_witness_attains_depth(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 25))
    centers, radii = rng.uniform(0, 5, (n, 2)), rng.uniform(0.1, 2, n)
    k, p = max_depth((centers, radii))
    assert strict_count(p, [Disk(Point(*c), r) for c, r in zip(centers, radii)]) == k
    assert k >= depth_oracle((centers, radii), 0.05)

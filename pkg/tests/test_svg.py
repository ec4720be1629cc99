import re
import xml.etree.ElementTree as ET

import pytest
from support import bundled

from emptyply import Drawing
from emptyply.drawing import ply_disks
from emptyply.plycore import quarter_shped
from emptyply.svg import DISK_OPACITY, render

NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("name", sorted(bundled()))
def test_one_circle_per_positive_disk(name):
    d = bundled()[name]
    root = ET.fromstring(render(d, disks="full"))
    circles = root.findall(f".//{NS}circle")
    assert len(circles) == len(ply_disks(d).active)


def test_isolated_vertices_draw_no_disk():
    d = Drawing.from_edges([(0, 0), (1, 0), (3, 3)], [(0, 1)])
    root = ET.fromstring(render(d))
    assert len(root.findall(f".//{NS}circle")) == 2
    assert len(root.findall(f".//{NS}rect")) == 3


def test_viewbox_pads_the_disks():
    d = Drawing.from_edges([(0, 0), (2, 0)], [(0, 1)])
    root = ET.fromstring(render(d))
    x, y, w, h = map(float, root.get("viewBox").split())
    # disks of radius 1 span [-1, 3] x [-1, 1]
    assert (x, w) == pytest.approx((-1 - 0.2, 4 * 1.1))
    assert (y, h) == pytest.approx((-1 - 0.1, 2 * 1.1))
    assert root.find(f"{NS}g").get("fill-opacity") == str(DISK_OPACITY)


def test_half_and_none():
    d = Drawing.from_edges([(0, 0), (2, 0)], [(0, 1)])
    radii = re.findall(r'<circle[^>]* r="([^"]+)"', render(d, disks="half"))
    assert radii == ["0.5", "0.5"]
    assert "<circle" not in render(d, disks="none")
    with pytest.raises(ValueError):
        render(d, disks="some")


def test_stub_rendering():
    d = bundled()["K7"]
    stubs, _ = quarter_shped(d)
    root = ET.fromstring(render(d, disks="none", stubs=stubs))
    assert len(root.findall(f".//{NS}line")) == 42

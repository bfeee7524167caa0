import xml.etree.ElementTree as ET

from hypothesis import given, settings

from orthology_lab.constructions import complementary_triangle
from orthology_lab.geometry import Point2, Triangle2
from orthology_lab.orthology import Correspondence, TrianglePair
from orthology_lab.render import render_pair

from strategies import pairs

NS = "{http://www.w3.org/2000/svg}"
WORKED = Triangle2(Point2(0, 0), Point2(4, 0), Point2(1, 3))


def classes(svg: str):
    root = ET.fromstring(svg.encode())
    return root, [el.get("class") for el in root.iter() if el.get("class")]


def test_worked_diagram_elements():
    svg = render_pair(TrianglePair(WORKED, complementary_triangle(WORKED)))
    root, cls = classes(svg)
    assert cls.count("vertex") == 6
    assert cls.count("perpendicular") == 3
    assert cls.count("center") == 1
    center = next(el for el in root.iter(NS + "circle") if el.get("class") == "center")
    # y axis is flipped in SVG
    assert (center.get("cx"), center.get("cy")) == ("1", "-1")
    assert svg == render_pair(TrianglePair(WORKED, complementary_triangle(WORKED)))


def test_non_orthologic_has_no_center():
    t1 = Triangle2(Point2(0, 0), Point2(1, 0), Point2(0, 1))
    t2 = Triangle2(Point2(2, 1), Point2(5, 3), Point2(5, 7))
    _, cls = classes(render_pair(TrianglePair(t1, t2)))
    assert "center" not in cls
    assert cls.count("perpendicular") == 3


def test_viewbox_margin():
    root, _ = classes(render_pair(TrianglePair(WORKED, complementary_triangle(WORKED))))
    x, y, w, h = (float(v) for v in root.get("viewBox").split())
    # extent 4 in x, margin 0.4 each side
    assert (x, w) == (-0.4, 4.8)
    assert (y, h) == (-3.4, 3.8)


@settings(max_examples=40)
@given(pairs)
def test_always_well_formed(pair):
    for corr in (Correspondence.SIGMA0, Correspondence.TAU2):
        root, cls = classes(render_pair(pair, corr))
        assert cls.count("triangle1") == 1 and cls.count("triangle2") == 1

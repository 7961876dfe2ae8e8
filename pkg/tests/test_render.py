from __future__ import annotations

import re
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fordtunnels.ford import ford_footprint
from fordtunnels.geometry import Geodesic
from fordtunnels.group import Parallelogram, example_simple_ford, prop42_family
from fordtunnels.moebius import INF
from fordtunnels.render import SceneCircle, SceneDocument, render_svg, scene_from_footprint
from fordtunnels.tunnels import lift_pair_distance

NS = "{http://www.w3.org/2000/svg}"


def parse(svg: str):
    return ET.fromstring(svg.split("\n", 1)[1])


def circles(root, kind=None):
    out = root.findall(f"{NS}circle")
    return [c for c in out if kind is None or c.get("class") == kind]


def test_empty_scene_has_only_parallelogram():
    svg = render_svg(SceneDocument((), Parallelogram(0j, 10, 10j)))
    root = parse(svg)
    assert [el.tag for el in root] == [f"{NS}rect", f"{NS}polygon"]
    assert root.find(f"{NS}polygon").get("points") == "0,0 10,0 10,-10 0,-10"


def test_simple_ford_scene():
    scene = scene_from_footprint(ford_footprint(example_simple_ford(), 1, 1))
    root = parse(render_svg(scene))
    solid = circles(root, "visible")
    assert len(solid) == 4 and not circles(root, "invisible")
    assert all(c.get("stroke-dasharray") is None and c.get("r") == "1" for c in solid)
    centers = sorted((float(c.get("cx")), -float(c.get("cy"))) for c in solid)
    assert centers == [(-5, -5), (-5, 0), (0, -5), (0, 0)]
    labels = sorted(t.text for t in root.findall(f"{NS}text"))
    assert labels == ["g1", "g1^-1", "g2", "g2^-1"]


@pytest.mark.parametrize("t,y", [(0.0, -2.0), (4.0, 2.0)])
def test_prop42_moving_circle(t, y):
    scene = scene_from_footprint(ford_footprint(prop42_family(t), 1, 0))
    root = parse(render_svg(scene))
    moved = [c for c in circles(root) if c.get("cx") == "5"]
    assert len(moved) == 1 and -float(moved[0].get("cy")) == pytest.approx(y)


def test_invisible_circles_dashed():
    scene = scene_from_footprint(ford_footprint(prop42_family(1.0), 2, 0))
    root = parse(render_svg(scene))
    hidden = circles(root, "invisible")
    assert hidden and all(c.get("stroke-dasharray") for c in hidden)
    only = parse(render_svg(scene_from_footprint(ford_footprint(prop42_family(1.0), 2, 0), visible_only=True)))
    assert not circles(only, "invisible")


def test_geodesic_overlay():
    lp = lift_pair_distance(prop42_family(2.0))
    fp = ford_footprint(prop42_family(2.0), 1, 0)
    root = parse(render_svg(scene_from_footprint(fp, [(lp.lift_a, "a"), (lp.lift_b, "b")])))
    line = root.find(f"{NS}line")
    assert (line.get("x1"), line.get("x2")) == ("0", "10")
    feet = circles(root, "foot")
    assert len(feet) == 1 and feet[0].get("cx") == "4.9"


def test_byte_identical():
    fp = ford_footprint(example_simple_ford(), 2, 1)
    geos = [(Geodesic(0, INF), "v")]
    assert render_svg(scene_from_footprint(fp, geos)) == render_svg(scene_from_footprint(fp, geos))


@settings(max_examples=100)
@given(st.lists(st.tuples(st.complex_numbers(max_magnitude=50, allow_nan=False, allow_infinity=False),
                          st.floats(0.01, 10), st.booleans()), max_size=6))
def test_circle_order_does_not_matter(circle_data):
    cs = tuple(SceneCircle(c, r, "", v) for c, r, v in circle_data)
    p = Parallelogram(0j, 10, 10j)
    a = render_svg(SceneDocument(cs, p))
    b = render_svg(SceneDocument(tuple(reversed(cs)), p))
    assert a == b
    assert len(re.findall("<circle", a)) == len(cs)


def test_viewbox_covers_scene():
    scene = scene_from_footprint(ford_footprint(example_simple_ford(), 1, 1))
    x, y, w, h = map(float, parse(render_svg(scene)).get("viewBox").split())
    for c in scene.circles:
        assert x <= c.center.real - c.radius and c.center.real + c.radius <= x + w
        assert y <= -c.center.imag - c.radius and -c.center.imag + c.radius <= y + h


def test_non_finite_scene_rejected():
    with pytest.raises(ValueError):
        SceneDocument((SceneCircle(complex(float("inf"), 0), 1.0, "", True),), Parallelogram(0j, 1, 1j))
    with pytest.raises(ValueError):
        SceneDocument((SceneCircle(0j, 0.0, "", True),), Parallelogram(0j, 1, 1j))

from __future__ import annotations

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fordtunnels.errors import CoincidentHoroballs, FixesInfinity, OutsideFootprint
from fordtunnels.geometry import (
    Geodesic,
    GeodesicSegment,
    IsometricSphere,
    VerticalPlane,
    closest_points,
    dual_geodesic,
    equidistant_surface,
    geodesic_distance,
    geodesic_meet_sphere,
    hyperbolic_distance,
    isometric_sphere,
    point_geodesic_distance,
    same_sphere,
    sphere_equals,
    transform_geodesic,
    transform_sphere,
    vertical_meet_sphere,
)
from fordtunnels.group import prop42_family, thm43_family
from fordtunnels.moebius import INF, HalfSpacePoint, MoebiusMap, apply_boundary, compose, inverse
from oracles import oracle_distance, oracle_point_distance
from strategies import complexes, moebius_maps, separated_points

GAMMA = MoebiusMap(0, 1, -1, -5j)
DELTA = MoebiusMap(-5 - 5j, -26 - 25j, 1, 5)


# --- spheres and duals --------------------------------------------------------

def test_isometric_sphere_examples():
    s = isometric_sphere(GAMMA)
    assert abs(s.center + 5j) < 1e-12 and abs(s.radius - 1) < 1e-12
    s = isometric_sphere(DELTA)
    assert abs(s.center + 5) < 1e-12 and abs(s.radius - 1) < 1e-12
    with pytest.raises(FixesInfinity):
        isometric_sphere(MoebiusMap(1, 20, 0, 1))


def test_dual_geodesic_examples():
    g = dual_geodesic(GAMMA)
    assert g.is_vertical and abs(g.endpoint1 + 5j) < 1e-12
    rep = thm43_family(4, (1, 3, 0.5, 2))
    for k, gk in enumerate(rep.gammas, start=1):
        g = dual_geodesic(inverse(gk))
        assert abs(g.endpoint1 - 10 * (k - 1)) < 1e-9
    with pytest.raises(FixesInfinity):
        dual_geodesic(MoebiusMap.identity())


def test_geodesic_canonical_form():
    g = Geodesic(INF, 3)
    assert g.endpoint1 == 3 and g.endpoint2 is INF
    with pytest.raises(ValueError):
        Geodesic(1, 1)
    with pytest.raises(ValueError):
        Geodesic(INF, INF)


def test_segment_points_must_lie_on_carrier():
    g = Geodesic(0, INF)
    GeodesicSegment(g, INF, HalfSpacePoint(0, 2.0))
    with pytest.raises(ValueError):
        GeodesicSegment(g, INF, HalfSpacePoint(1, 2.0))


def test_transform_sphere_translation():
    s = transform_sphere(MoebiusMap.translation(3 + 4j), IsometricSphere(1j, 2.0))
    assert same_sphere(s, IsometricSphere(3 + 5j, 2.0))


def test_transform_sphere_face_pairing_example():
    image = transform_sphere(GAMMA, isometric_sphere(GAMMA))
    assert same_sphere(image, IsometricSphere(0, 1.0), 1e-12)


def test_transform_sphere_rim_through_pole():
    m = MoebiusMap(0, -1, 1, -1)  # pole at 1
    s = IsometricSphere(0, 1.0)
    image = transform_sphere(m, s)
    assert isinstance(image, VerticalPlane)
    pts = [apply_boundary(m, complex(math.cos(a), math.sin(a))) for a in (0.5, 2.0, 4.0)]
    w = (pts[2] - pts[0]) / (pts[1] - pts[0])
    assert abs(w.imag) < 1e-9
    for z in pts:
        assert abs(((z - image.point) * image.direction.conjugate()).imag) < 1e-9


def test_vertical_meet_sphere_examples():
    s = IsometricSphere(2 + 1j, 1.5)
    assert vertical_meet_sphere(2 + 1j, s).h == pytest.approx(1.5, abs=1e-15)
    p = vertical_meet_sphere(15.1 - 2j, IsometricSphere(15 - 2j, 1.0))
    assert p.h == pytest.approx(math.sqrt(0.99), abs=1e-12)
    with pytest.raises(OutsideFootprint):
        vertical_meet_sphere(2, IsometricSphere(0, 1.0))


@settings(max_examples=500)
@given(complexes, st.floats(0.01, 5), st.floats(0, 0.999), st.floats(0, 2 * math.pi))
def test_vertical_meet_sphere_on_sphere(c, r, frac, ang):
    foot = c + frac * r * complex(math.cos(ang), math.sin(ang))
    p = vertical_meet_sphere(foot, IsometricSphere(c, r))
    assert abs(abs(p.z - c) ** 2 + p.h ** 2 - r * r) <= 1e-12 * max(1.0, r * r)


def test_geodesic_meet_sphere_examples():
    pts = geodesic_meet_sphere(Geodesic(3, INF), IsometricSphere(3, 2.0))
    assert len(pts) == 1 and pts[0].h == pytest.approx(2.0)
    pts = geodesic_meet_sphere(Geodesic(0, 10), IsometricSphere(0, 1.0))
    assert len(pts) == 1
    assert abs(pts[0].z - 0.1) < 1e-12 and pts[0].h == pytest.approx(math.sqrt(0.99), abs=1e-12)
    assert geodesic_meet_sphere(Geodesic(20, 30), IsometricSphere(0, 1.0)) == []
    assert geodesic_meet_sphere(Geodesic(5, INF), IsometricSphere(0, 1.0)) == []


# --- distances ----------------------------------------------------------------

def test_geodesic_distance_examples():
    g = Geodesic(0, 10)
    assert geodesic_distance(g, Geodesic(10, 0)) == (0.0, "equal")
    d = geodesic_distance(Geodesic(-1, 1), Geodesic(-2, 2))
    assert d.flag == "disjoint" and d.dist == pytest.approx(math.log(2), abs=1e-12)
    assert geodesic_distance(g, Geodesic(4.9, INF)) == (0.0, "intersecting")
    assert geodesic_distance(g, Geodesic(10, 20)).flag == "asymptotic"
    d = geodesic_distance(Geodesic(0, INF), Geodesic(1, 4))
    assert d.dist == pytest.approx(math.log(3), abs=1e-12)


def test_oracle_agrees_on_known_values():
    assert oracle_distance(Geodesic(-1, 1), Geodesic(-2, 2)) == pytest.approx(math.log(2), abs=1e-7)
    assert oracle_distance(Geodesic(0, INF), Geodesic(1, 4)) == pytest.approx(math.log(3), abs=1e-7)


@st.composite
def geodesic_pairs(draw):
    pts = draw(separated_points(4, sep=0.3))
    ends = list(pts)
    slot = draw(st.sampled_from([None, 1, 3]))
    if slot is not None:
        ends[slot] = INF
    return Geodesic(ends[0], ends[1]), Geodesic(ends[2], ends[3])


@settings(max_examples=1000)
@given(geodesic_pairs())
def test_geodesic_distance_matches_oracle(pair):
    g1, g2 = pair
    ours = geodesic_distance(g1, g2)
    ref = oracle_distance(g1, g2)
    assert abs(ours.dist - ref) <= 1e-6 * max(1.0, ref), (g1, g2, ours, ref)
    assert (ours.flag == "intersecting") == (ours.dist == 0.0)


@settings(max_examples=1000)
@given(geodesic_pairs(), moebius_maps())
def test_geodesic_distance_moebius_invariant(pair, m):
    g1, g2 = pair
    ends = [apply_boundary(m, e) for g in pair for e in g.endpoints]
    finite = [e for e in ends if e is not INF]
    assume(all(abs(e) < 1e3 for e in finite))
    assume(all(abs(a - b) > 1e-3 for i, a in enumerate(finite) for b in finite[i + 1:]))
    before = geodesic_distance(g1, g2)
    after = geodesic_distance(transform_geodesic(m, g1), transform_geodesic(m, g2))
    assert abs(before.dist - after.dist) <= 1e-6 * max(1.0, before.dist)


@settings(max_examples=200)
@given(geodesic_pairs(), complexes, st.floats(0.05, 5))
def test_point_geodesic_distance_matches_oracle(pair, z, h):
    g = pair[0]
    p = HalfSpacePoint(z, h)
    assert point_geodesic_distance(p, g) == pytest.approx(oracle_point_distance(p, g), abs=1e-6)


def test_hyperbolic_distance_vertical():
    assert hyperbolic_distance(HalfSpacePoint(0, 1), HalfSpacePoint(0, math.e)) == pytest.approx(1.0)


@settings(max_examples=300)
@given(geodesic_pairs())
def test_closest_points_realise_distance(pair):
    g1, g2 = pair
    d = geodesic_distance(g1, g2)
    p, q, mid = closest_points(g1, g2)
    assert point_geodesic_distance(p, g1) <= 1e-7
    assert point_geodesic_distance(q, g2) <= 1e-7
    if d.flag == "intersecting":
        assert point_geodesic_distance(p, g2) <= 1e-7
    else:
        assert hyperbolic_distance(p, q) == pytest.approx(d.dist, abs=1e-7)
        assert hyperbolic_distance(p, mid) == pytest.approx(d.dist / 2, abs=1e-7)
        assert hyperbolic_distance(q, mid) == pytest.approx(d.dist / 2, abs=1e-7)


def test_closest_points_rejects_asymptotic():
    with pytest.raises(ValueError):
        closest_points(Geodesic(0, 1), Geodesic(1, 2))


# --- equidistant surfaces -----------------------------------------------------

def test_equidistant_surface_coincident():
    with pytest.raises(CoincidentHoroballs):
        equidistant_surface(GAMMA, GAMMA)


def test_equidistant_surface_symmetric():
    a = equidistant_surface(DELTA, GAMMA)
    b = equidistant_surface(GAMMA, DELTA)
    assert sphere_equals(a, b, 1e-9)


def test_equidistant_surface_prop_configuration():
    rep = prop42_family(1.3)
    g1, g2 = rep.gammas
    gamma = compose(inverse(g2), g1)
    surface = equidistant_surface(g1, gamma)
    expected = transform_sphere(inverse(g1), isometric_sphere(inverse(g2)))
    assert sphere_equals(surface, expected, 1e-9)


@settings(max_examples=1000)
@given(moebius_maps(min_abs_c=0.05))
def test_face_pairing_equivariance(m):
    image = transform_sphere(m, isometric_sphere(m))
    target = isometric_sphere(inverse(m))
    assert isinstance(image, IsometricSphere)
    scale = max(1.0, target.radius, abs(target.center))
    assert abs(image.center - target.center) <= 1e-8 * scale
    assert abs(image.radius - target.radius) <= 1e-8 * scale

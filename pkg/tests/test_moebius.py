from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fordtunnels.errors import DegenerateHeight, NonFiniteValue, NotUpperParabolic, SingularMatrix
from fordtunnels.moebius import (
    INF,
    HalfSpacePoint,
    MoebiusMap,
    apply_boundary,
    apply_interior,
    classify,
    compose,
    equal,
    inverse,
    normalize,
    parabolic_translation,
)
from strategies import complexes, moebius_maps

GAMMA = MoebiusMap(0, 1, -1, -5j)
DELTA = MoebiusMap(-5 - 5j, -26 - 25j, 1, 5)
B = MoebiusMap(1, 10, 0, 1)


def close(z, w, tol=1e-12):
    return abs(z - w) <= tol


def test_normalize_scalar_identity():
    assert equal(normalize([[2, 0], [0, 2]]), MoebiusMap.identity())


def test_normalize_keeps_det_one_map_up_to_sign():
    n = normalize([[0, 1], [-1, -5j]])
    assert equal(n, GAMMA)
    assert abs(n.det - 1) <= 1e-12


def test_normalize_sign_convention():
    assert normalize(MoebiusMap(-2, -1, -1, -1)).trace.real > 0
    assert normalize(MoebiusMap(-1j, -1, 1, 0)).trace.imag > 0
    # zero trace falls back to the first nonzero entry
    n = normalize(MoebiusMap(0, -1, 1, 0))
    assert n.b.real > 0


def test_normalize_singular():
    with pytest.raises(SingularMatrix):
        normalize([[1, 2], [2, 4]])


def test_non_finite_entries_rejected():
    with pytest.raises(NonFiniteValue):
        MoebiusMap(float("nan"), 0, 0, 1)


def test_compose_translations():
    assert equal(compose(B, B), MoebiusMap(1, 20, 0, 1))


def test_conjugated_generator():
    m = compose(compose(B, MoebiusMap(0, 1, -1, 5 - 2j)), inverse(B))
    assert equal(m, MoebiusMap(-10, 151 - 20j, -1, 15 - 2j))


def test_inverse_examples():
    assert equal(inverse(MoebiusMap.identity()), MoebiusMap.identity())
    assert equal(inverse(GAMMA), MoebiusMap(-5j, -1, 1, 0))
    assert equal(inverse(DELTA), MoebiusMap(5, 26 + 25j, -1, -5 - 5j))


def test_apply_boundary_examples():
    assert apply_boundary(MoebiusMap.identity(), 7) == 7
    assert close(apply_boundary(GAMMA, INF), 0)
    g1_inv = MoebiusMap(15 - 2j, -151 + 20j, 1, -10)
    assert close(apply_boundary(g1_inv, 0), 15.1 - 2j)


def test_apply_boundary_infinity_conventions():
    assert apply_boundary(B, INF) is INF
    assert apply_boundary(GAMMA, -GAMMA.d / GAMMA.c) is INF


def test_apply_interior_translation():
    p = apply_interior(MoebiusMap.translation(3 - 1j), HalfSpacePoint(1 + 1j, 2.0))
    assert close(p.z, 4) and close(p.h, 2.0)


def test_apply_interior_hand_value():
    g1 = MoebiusMap(-10, 151 - 20j, -1, 15 - 2j)
    p = apply_interior(g1, HalfSpacePoint(15.1 - 2j, math.sqrt(0.99)))
    assert close(p.z, 9.9, 1e-12) and close(p.h, math.sqrt(0.99), 1e-12)


def test_degenerate_height():
    with pytest.raises(DegenerateHeight):
        HalfSpacePoint(0, 0.0)
    with pytest.raises(DegenerateHeight):
        apply_interior(MoebiusMap(0, -1, 1, 0), HalfSpacePoint(1e200, 1.0))
    with pytest.raises(DegenerateHeight):
        apply_interior(MoebiusMap(1e-200, 0, 1e200, 1e-200), HalfSpacePoint(1e10, 1e-300))


def test_classify_examples():
    assert classify(MoebiusMap(1, 1, 0, 1)) == "parabolic"
    assert classify(GAMMA) == "loxodromic"
    assert classify(MoebiusMap.identity()) == "identity"
    assert classify(MoebiusMap(0, 1, -1, 0)) == "elliptic"


def test_parabolic_translation():
    assert close(parabolic_translation(MoebiusMap(1, 20, 0, 1)), 20)
    assert close(parabolic_translation(MoebiusMap(1, 10j, 0, 1)), 10j)
    assert close(parabolic_translation(MoebiusMap(-1, -10j, 0, -1)), 10j)
    with pytest.raises(NotUpperParabolic):
        parabolic_translation(GAMMA)


@settings(max_examples=1000)
@given(moebius_maps(), moebius_maps(), moebius_maps())
def test_group_laws(a, b, c):
    assert equal(compose(compose(a, b), c), compose(a, compose(b, c)), 1e-10)
    assert equal(compose(a, inverse(a)), MoebiusMap.identity(), 1e-10)
    assert equal(compose(inverse(a), a), MoebiusMap.identity(), 1e-10)
    assert abs(compose(a, b).det - 1) <= 1e-10


@settings(max_examples=300)
@given(moebius_maps(), complexes)
def test_interior_tends_to_boundary(m, z):
    pole = -m.d / m.c if m.c != 0 else None
    if pole is not None and abs(z - pole) < 0.1:
        return
    w = apply_boundary(m, z)
    p = apply_interior(m, HalfSpacePoint(z, 1e-4))
    assert abs(p.z - w) <= 1e-6 * max(1.0, abs(w)) ** 2 * 10


@settings(max_examples=1000)
@given(moebius_maps(min_abs_c=0.05), st.floats(0, 0.999), st.floats(0, 2 * math.pi))
def test_height_preserved_on_isometric_sphere(m, frac, angle):
    r = 1 / abs(m.c)
    center = -m.d / m.c
    z = center + frac * r * complex(math.cos(angle), math.sin(angle))
    h = math.sqrt(r * r - abs(z - center) ** 2)
    p = apply_interior(m, HalfSpacePoint(z, h))
    assert abs(p.h - h) <= 1e-9 * max(1.0, r)


@settings(max_examples=300)
@given(moebius_maps())
def test_sign_quotient(m):
    assert classify(m) == classify(-m)
    assert equal(m, -m)
    assert m == -m

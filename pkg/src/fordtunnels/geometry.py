"""Isometric spheres, geodesics and distances in the upper half-space model."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import CoincidentHoroballs, FixesInfinity, OutsideFootprint
from .moebius import (
    DEFAULT_TOL,
    INF,
    SINGULAR_TOL,
    Boundary,
    HalfSpacePoint,
    MoebiusMap,
    apply_boundary,
    apply_interior,
    as_complex,
    boundary_close,
    compose,
    inverse,
    is_inf,
    normalize,
)

SPHERE_TOL = 1e-9


@dataclass(frozen=True)
class IsometricSphere:
    """Euclidean hemisphere over the disk ``|z - center| < radius``.

    ``owner`` is an optional tag (usually a Word) naming the group element.
    """

    center: complex
    radius: float
    owner: object = None

    def __post_init__(self):
        object.__setattr__(self, "center", as_complex(self.center))
        r = float(self.radius)
        if not math.isfinite(r) or r <= 0:
            raise ValueError(f"sphere radius must be positive, got {r!r}")
        object.__setattr__(self, "radius", r)

    def translated(self, t: complex, owner=None) -> IsometricSphere:
        return IsometricSphere(self.center + t, self.radius, owner)

    def height_at(self, z: complex) -> float:
        """Height of the hemisphere above ``z`` (0 outside the footprint)."""
        q = self.radius ** 2 - abs(z - self.center) ** 2
        return math.sqrt(q) if q > 0 else 0.0


@dataclass(frozen=True)
class VerticalPlane:
    """Vertical half-plane over the line ``point + s * direction``."""

    point: complex
    direction: complex


@dataclass(frozen=True, eq=False)
class Geodesic:
    """Complete geodesic with two distinct ideal endpoints.

    An infinite endpoint is always stored as ``endpoint2``.
    """

    endpoint1: Boundary
    endpoint2: Boundary

    def __post_init__(self):
        e1, e2 = self.endpoint1, self.endpoint2
        if is_inf(e1) and is_inf(e2):
            raise ValueError("geodesic endpoints must be distinct")
        if is_inf(e1):
            e1, e2 = e2, e1
        e1 = as_complex(e1)
        if not is_inf(e2):
            e2 = as_complex(e2)
            if abs(e1 - e2) <= 1e-12:
                raise ValueError("geodesic endpoints must be distinct")
        object.__setattr__(self, "endpoint1", e1)
        object.__setattr__(self, "endpoint2", e2)

    @property
    def is_vertical(self) -> bool:
        return is_inf(self.endpoint2)

    @property
    def endpoints(self) -> tuple[Boundary, Boundary]:
        return (self.endpoint1, self.endpoint2)

    def same_as(self, other: Geodesic, tol: float = DEFAULT_TOL) -> bool:
        return _shared_endpoints(self, other, tol) == 2

    def __repr__(self):
        return f"Geodesic({self.endpoint1!r}, {self.endpoint2!r})"


@dataclass(frozen=True)
class GeodesicSegment:
    """Arc of ``carrier`` between two points; ideal ends are given as INF."""

    carrier: Geodesic
    start: Union[HalfSpacePoint, object]
    end: Union[HalfSpacePoint, object]

    def __post_init__(self):
        for p in (self.start, self.end):
            if isinstance(p, HalfSpacePoint) and point_geodesic_distance(p, self.carrier) > 1e-9:
                raise ValueError(f"{p!r} does not lie on {self.carrier!r}")


class GeodesicDistance(NamedTuple):
    dist: float
    flag: str  # intersecting | disjoint | asymptotic | equal


def same_sphere(s1: IsometricSphere, s2: IsometricSphere, tol: float = SPHERE_TOL) -> bool:
    return abs(s1.center - s2.center) <= tol and abs(s1.radius - s2.radius) <= tol


def isometric_sphere(m: MoebiusMap, owner=None) -> IsometricSphere:
    """Hemisphere with center ``-d/c`` and radius ``1/|c|`` (entries as stored)."""
    if abs(m.c) <= SINGULAR_TOL:
        raise FixesInfinity(f"{m!r} fixes infinity and has no isometric sphere")
    return IsometricSphere(-m.d / m.c, 1.0 / abs(m.c), owner)


def dual_geodesic(m: MoebiusMap) -> Geodesic:
    """Vertical geodesic from ``m^-1(inf)`` to infinity."""
    if abs(m.c) <= SINGULAR_TOL:
        raise FixesInfinity(f"{m!r} fixes infinity and has no dual geodesic")
    return Geodesic(-m.d / m.c, INF)


def transform_geodesic(m: MoebiusMap, g: Geodesic) -> Geodesic:
    return Geodesic(apply_boundary(m, g.endpoint1), apply_boundary(m, g.endpoint2))


def _circumcircle(z1: complex, z2: complex, z3: complex):
    w = (z3 - z1) / (z2 - z1)
    if abs(w.imag) <= 1e-12 * max(1.0, abs(w)):
        return None
    center = (z2 - z1) * (w - abs(w) ** 2) / (2j * w.imag) + z1
    return center


def transform_sphere(m: MoebiusMap, s: IsometricSphere, tol: float = DEFAULT_TOL):
    """Image of the hemisphere over ``s`` under the Poincare extension of ``m``.

    The image circle is fitted through the images of three rim points chosen
    away from the pole of ``m``.  Returns a VerticalPlane when the rim passes
    through the pole.
    """
    if abs(m.c) <= SINGULAR_TOL:
        k = m.a / m.d
        return IsometricSphere(apply_boundary(m, s.center), s.radius * abs(k))
    pole = -m.d / m.c
    offset = pole - s.center
    base = cmath.phase(offset) + math.pi if abs(offset) > 0 else 0.0
    rim = [s.center + s.radius * cmath.exp(1j * (base + k * 2 * math.pi / 3)) for k in (0, 1, 2)]
    if abs(abs(offset) - s.radius) <= tol * max(1.0, s.radius):
        # rim through the pole: image is a line
        far = [s.center + s.radius * cmath.exp(1j * (base + k * math.pi / 2)) for k in (-1, 0, 1)]
        p0, p1 = apply_boundary(m, far[0]), apply_boundary(m, far[2])
        d = p1 - p0
        return VerticalPlane(p0, d / abs(d))
    w = [apply_boundary(m, z) for z in rim]
    center = _circumcircle(*w)
    if center is None:
        d = w[1] - w[0]
        return VerticalPlane(w[0], d / abs(d))
    radius = sum(abs(x - center) for x in w) / 3.0
    return IsometricSphere(center, radius)


def vertical_meet_sphere(foot: complex, s: IsometricSphere) -> HalfSpacePoint:
    q = s.radius ** 2 - abs(foot - s.center) ** 2
    if q <= 0:
        raise OutsideFootprint(f"{foot!r} is not under the sphere {s!r}")
    return HalfSpacePoint(foot, math.sqrt(q))


def _semicircle(g: Geodesic):
    p, q = g.endpoint1, g.endpoint2
    mid = (p + q) / 2
    e = (q - p) / abs(q - p)
    return mid, abs(q - p) / 2, e


def geodesic_meet_sphere(g: Geodesic, s: IsometricSphere) -> list[HalfSpacePoint]:
    """Points where ``g`` crosses the hemisphere ``s`` (closed form)."""
    if g.is_vertical:
        try:
            return [vertical_meet_sphere(g.endpoint1, s)]
        except OutsideFootprint:
            return []
    mid, R, e = _semicircle(g)
    mc = mid - s.center
    beta = (mc * e.conjugate()).real
    const = abs(mc) ** 2 + R * R - s.radius ** 2
    if beta == 0.0:
        return []
    x = -const / (2 * beta)
    h2 = R * R - x * x
    if h2 <= 0:
        return []
    return [HalfSpacePoint(mid + x * e, math.sqrt(h2))]


def normalizing_map(g: Geodesic) -> MoebiusMap:
    """Moebius map sending ``g`` to the vertical geodesic from 0 to infinity."""
    p, q = g.endpoint1, g.endpoint2
    if is_inf(q):
        return MoebiusMap.translation(-p)
    return normalize(MoebiusMap(1, -p, 1, -q))


def _shared_endpoints(g1: Geodesic, g2: Geodesic, tol: float) -> int:
    count = 0
    for e in g1.endpoints:
        if any(boundary_close(e, f, tol) for f in g2.endpoints):
            count += 1
    return count


def _cross_ratio(a: Boundary, b: Boundary, c: Boundary, d: Boundary) -> complex:
    """(a-c)(b-d) / ((a-d)(b-c)) with factors involving INF dropped."""
    num = 1 + 0j
    den = 1 + 0j
    for x, y, target in ((a, c, "num"), (b, d, "num"), (a, d, "den"), (b, c, "den")):
        if is_inf(x) or is_inf(y):
            continue
        if target == "num":
            num *= x - y
        else:
            den *= x - y
    return num / den


def geodesic_distance(g1: Geodesic, g2: Geodesic, tol: float = DEFAULT_TOL) -> GeodesicDistance:
    """Infimum of hyperbolic distance between two complete geodesics.

    With r the cross ratio of the endpoints and s = sqrt(r), the complex
    distance satisfies tanh(delta/2) = s, so the real distance is
    |log|1+s| - log|1-s||.
    """
    shared = _shared_endpoints(g1, g2, tol)
    if shared == 2:
        return GeodesicDistance(0.0, "equal")
    if shared == 1:
        return GeodesicDistance(0.0, "asymptotic")
    r = _cross_ratio(g1.endpoint1, g1.endpoint2, g2.endpoint1, g2.endpoint2)
    s = cmath.sqrt(r)
    d = abs(math.log(abs(1 + s)) - math.log(abs(1 - s)))
    if d <= tol:
        return GeodesicDistance(0.0, "intersecting")
    return GeodesicDistance(d, "disjoint")


def hyperbolic_distance(p: HalfSpacePoint, q: HalfSpacePoint) -> float:
    num = abs(p.z - q.z) ** 2 + (p.h - q.h) ** 2
    return math.acosh(1.0 + num / (2.0 * p.h * q.h))


def point_geodesic_distance(p: HalfSpacePoint, g: Geodesic) -> float:
    n = normalizing_map(g)
    q = apply_interior(n, p)
    return math.asinh(abs(q.z) / q.h)


def closest_points(g1: Geodesic, g2: Geodesic, tol: float = DEFAULT_TOL):
    """Points ``(P, Q, M)`` on g1, g2 realising their distance, and the midpoint.

    For intersecting geodesics all three are the intersection point.  Raises
    ValueError for asymptotic or equal pairs, where no minimiser exists.
    """
    res = geodesic_distance(g1, g2, tol)
    if res.flag in ("asymptotic", "equal"):
        raise ValueError(f"no closest points for {res.flag} geodesics")
    n = normalizing_map(g1)
    n_inv = inverse(n)
    u, v = apply_boundary(n, g2.endpoint1), apply_boundary(n, g2.endpoint2)
    if is_inf(v):
        # g2 through infinity after normalisation cannot happen unless asymptotic
        raise ValueError("degenerate normalisation")
    w = cmath.sqrt(u * v)
    rho = abs(w)
    apex = HalfSpacePoint(0j, rho)
    if res.flag == "intersecting":
        x = apply_interior(n_inv, apex)
        return x, x, x
    # Scale by 1/w: g2 becomes (u', 1/u'), symmetric under z -> 1/z, so the
    # perpendicular runs over the real axis along the unit sphere.
    u1 = u / w
    v1 = 1 / u1
    lam = abs(u1) ** 2 / (abs(u1) ** 2 + 1)
    x = (u1 + lam * (v1 - u1)).real
    mid1, rad1 = (u1 + v1) / 2, abs(v1 - u1) / 2
    h2 = rad1 ** 2 - abs(x - mid1) ** 2
    if h2 <= 0 or abs(x) >= 1:
        raise ValueError("common perpendicular not found")
    unit = w / rho
    q = HalfSpacePoint(x * w, math.sqrt(h2) * rho)
    s_m = math.atanh(x) / 2.0
    mid = HalfSpacePoint(unit * rho * math.tanh(s_m), rho / math.cosh(s_m))
    return apply_interior(n_inv, apex), apply_interior(n_inv, q), apply_interior(n_inv, mid)


def equidistant_surface(delta: MoebiusMap, gamma: MoebiusMap, tol: float = DEFAULT_TOL):
    """Locus equidistant from the horoballs delta^-1(H) and gamma^-1(H)."""
    x = compose(gamma, inverse(delta))
    if abs(x.c) <= tol:
        raise CoincidentHoroballs("gamma * delta^-1 fixes infinity")
    return transform_sphere(inverse(delta), isometric_sphere(x), tol)


def sphere_equals(a, b, tol: float = 1e-8) -> bool:
    """Compare two transform results (spheres or planes) within ``tol``."""
    if isinstance(a, IsometricSphere) and isinstance(b, IsometricSphere):
        return same_sphere(a, b, tol)
    if isinstance(a, VerticalPlane) and isinstance(b, VerticalPlane):
        cross = (a.direction.conjugate() * b.direction).imag
        off = ((b.point - a.point) * a.direction.conjugate()).imag
        return abs(cross) <= tol and abs(off) <= tol
    return False

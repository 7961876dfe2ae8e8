"""Tunnel geodesics: arc decomposition, signed-area search and self-intersection witnesses.

For the built-in families a tunnel is the dual geodesic of I(tau) with
``tau = moving^-1 * anchor``:

* one-parameter family: anchor = gamma_1, moving = gamma_2 (only k = 1);
* n-parameter family: anchor = gamma_n, moving = gamma_k for 1 <= k < n.

Its quotient image has two lifts of interest: the geodesic joining the
centers of I(moving^-1) and I(anchor^-1), and the vertical geodesic over the
center of I(tau^-1).  They meet exactly when the signed area vanishes and the
vertical foot falls between the other lift's feet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from .errors import DegenerateConfiguration, HypothesisViolated, NoSignChange, OutOfRange, TooFarApart
from .ford import sphere_relation
from .geometry import (
    Geodesic,
    GeodesicSegment,
    closest_points,
    dual_geodesic,
    equidistant_surface,
    geodesic_distance,
    geodesic_meet_sphere,
    isometric_sphere,
    point_geodesic_distance,
    transform_geodesic,
    vertical_meet_sphere,
)
from .group import CompressionBodyRep, Word, enumerate_elements, rep_from_family
from .moebius import INF, HalfSpacePoint, MoebiusMap, apply_boundary, apply_interior, compose, inverse, is_inf

BISECT_TOL = 1e-12


def tunnel_roles(rep: CompressionBodyRep, k: int) -> tuple[MoebiusMap, MoebiusMap, MoebiusMap]:
    """Return ``(anchor, moving, tau)`` for tunnel ``k`` of a family rep."""
    g = rep.gammas
    if rep.family == "prop42":
        if k != 1:
            raise OutOfRange("the one-parameter family has a single tunnel, k = 1")
        anchor, moving = g[0], g[1]
    elif rep.family == "thm43":
        if not 1 <= k < rep.n:
            raise OutOfRange(f"k = {k} must satisfy 1 <= k < {rep.n}")
        anchor, moving = g[-1], g[k - 1]
    else:
        raise DegenerateConfiguration("tunnel roles are defined for the built-in families only")
    return anchor, moving, compose(inverse(moving), anchor)


@dataclass(frozen=True)
class ArcTriple:
    """Three lifts of one quotient geodesic.

    ``carriers_from`` lists the maps sending the dual of I(gamma) onto each
    arc's carrier: identity, delta and gamma.
    """

    alpha1: GeodesicSegment
    alpha2: GeodesicSegment
    alpha3: GeodesicSegment
    carriers_from: tuple[MoebiusMap, MoebiusMap, MoebiusMap]


def dual_arc_decomposition(delta: MoebiusMap, gamma: MoebiusMap) -> ArcTriple:
    """Split the dual of I(gamma) into the arcs seen above I(delta^+-1), I((delta gamma^-1)^+-1).

    Requires I(gamma) to sit inside the half-ball bounded by I(delta).
    """
    s_gamma, s_delta = isometric_sphere(gamma), isometric_sphere(delta)
    if sphere_relation(s_gamma, s_delta).relation != "s1_inside_s2":
        raise HypothesisViolated("I(gamma) is not contained in the half-ball of I(delta)")
    dual = dual_geodesic(gamma)
    p1 = vertical_meet_sphere(dual.endpoint1, s_delta)
    surface = equidistant_surface(delta, gamma)
    hits = geodesic_meet_sphere(dual, surface) if not isinstance(surface, Geodesic) else []
    if not hits:
        raise DegenerateConfiguration("dual geodesic misses the equidistant surface")
    p2 = hits[0]
    alpha1 = GeodesicSegment(dual, INF, p1)
    alpha2 = GeodesicSegment(transform_geodesic(delta, dual), apply_interior(delta, p1), apply_interior(delta, p2))
    alpha3 = GeodesicSegment(dual_geodesic(inverse(gamma)), INF, apply_interior(gamma, p2))
    return ArcTriple(alpha1, alpha2, alpha3, (MoebiusMap.identity(), delta, gamma))


@dataclass(frozen=True)
class TrianglePoints:
    p1: HalfSpacePoint  # on I(anchor^-1)
    p2: HalfSpacePoint  # on I(moving^-1)
    p3: HalfSpacePoint  # on I(moving)

    @property
    def projections(self) -> tuple[complex, complex, complex]:
        return (self.p1.z, self.p2.z, self.p3.z)


def triangle_points(rep: CompressionBodyRep, k: int = 1) -> TrianglePoints:
    """Marked points whose projections span the triangle of tunnel ``k``.

    p1 and p2 are the ends of the middle arc (on I(anchor^-1) and
    I(moving^-1)); p3 is where the vertical lift over tau(inf) meets I(moving).
    """
    anchor, _, tau = tunnel_roles(rep, k)
    try:
        arcs = dual_arc_decomposition(anchor, tau)
    except (HypothesisViolated, ValueError) as exc:
        raise DegenerateConfiguration(str(exc)) from exc
    return TrianglePoints(arcs.alpha2.start, arcs.alpha2.end, arcs.alpha3.end)


def signed_area(pts: TrianglePoints) -> float:
    """Half the planar cross product (p1 - p3) x (p2 - p3)."""
    u = pts.p1.z - pts.p3.z
    v = pts.p2.z - pts.p3.z
    return 0.5 * (u.conjugate() * v).imag


def family_rep(family: str, k: int = 1, n: int = 2, t=None, value: Optional[float] = None) -> CompressionBodyRep:
    """Family rep with the parameter of tunnel ``k`` set to ``value``."""
    if family == "prop42":
        return rep_from_family("prop42", t=value if value is not None else (2.0 if t is None else t))
    if family == "thm43":
        params = list(t) if t is not None else [2.0] * n
        if len(params) != n:
            raise OutOfRange(f"expected {n} parameters")
        if value is not None:
            if not 1 <= k < n:
                raise OutOfRange(f"k = {k} must satisfy 1 <= k < {n}")
            params[k - 1] = value
        return rep_from_family("thm43", n=n, t=params)
    raise ValueError(f"no parameter family named {family!r}")


def area_function(family: str, k: int = 1, n: int = 2, t=None) -> Callable[[float], float]:
    def area(x: float) -> float:
        return signed_area(triangle_points(family_rep(family, k, n, t, x), k))
    return area


class LiftPair(NamedTuple):
    dist: float
    flag: str
    lift_a: Geodesic  # joins the centers of I(moving^-1) and I(anchor^-1)
    lift_b: Geodesic  # vertical over the center of I(tau^-1)


def lift_pair_distance(rep: CompressionBodyRep, k: int = 1) -> LiftPair:
    anchor, moving, tau = tunnel_roles(rep, k)
    ends = (apply_boundary(moving, INF), apply_boundary(anchor, INF), apply_boundary(tau, INF))
    if any(is_inf(e) for e in ends) or abs(ends[0] - ends[1]) <= 1e-12:
        raise DegenerateConfiguration("lift endpoints coincide")
    lift_a = Geodesic(ends[0], ends[1])
    lift_b = Geodesic(ends[2], INF)
    d = geodesic_distance(lift_a, lift_b, rep.tol)
    return LiftPair(d.dist, d.flag, lift_a, lift_b)


def foot_between(lift_a: Geodesic, lift_b: Geodesic, tol: float = 1e-9) -> bool:
    """True when the vertical lift's foot lies strictly inside the other lift's span."""
    p, q = lift_a.endpoint1, lift_a.endpoint2
    f = lift_b.endpoint1
    d = q - p
    cross = (d.conjugate() * (f - p)).imag / abs(d)
    s = (d.conjugate() * (f - p)).real / abs(d) ** 2
    return abs(cross) <= tol * max(1.0, abs(d)) and 0.0 < s < 1.0


@dataclass(frozen=True)
class IntersectionFinding:
    k: int
    t0: float
    residual_area: float
    lift_distance_at_t0: float
    flag: str
    between: bool
    witness: tuple[Geodesic, Geodesic]
    interval: tuple[float, float]


def bisect_sign_change(f: Callable[[float], float], lo: float, hi: float, tol: float = BISECT_TOL) -> float:
    """Plain bisection; requires f(lo) and f(hi) of opposite sign."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoSignChange(f"f({lo}) = {flo:.6g} and f({hi}) = {fhi:.6g} have the same sign")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def find_t0(family: str = "prop42", k: int = 1, n: int = 2, interval=(0.0, 4.0),
            tol: float = BISECT_TOL, t=None) -> IntersectionFinding:
    """Locate the parameter where tunnel ``k`` self-intersects.

    The signed area of the marked triangle changes sign across ``interval``;
    bisection narrows the bracket to ``tol``.  The other parameters of the
    n-parameter family stay at ``t`` (default all 2).
    """
    lo, hi = float(interval[0]), float(interval[1])
    area = area_function(family, k, n, t)
    t0 = bisect_sign_change(area, lo, hi, tol)
    rep = family_rep(family, k, n, t, t0)
    lp = lift_pair_distance(rep, k)
    return IntersectionFinding(
        k=k, t0=t0, residual_area=area(t0), lift_distance_at_t0=lp.dist, flag=lp.flag,
        between=foot_between(lp.lift_a, lp.lift_b), witness=(lp.lift_a, lp.lift_b), interval=(lo, hi))


@dataclass(frozen=True)
class TranslateFinding:
    dist: float
    flag: Optional[str]
    word: Optional[Word]
    image: Optional[Geodesic]
    candidates: int


def min_translate_distance(rep: CompressionBodyRep, g: Geodesic, max_len: int,
                           lattice_bound: int = 0) -> TranslateFinding:
    """Closest approach between ``g`` and its images under enumerated elements.

    Images that coincide with ``g`` (stabilizer) or share exactly one ideal
    endpoint with it (both ends running into the same cusp point) are
    skipped; neither is a crossing of the quotient geodesic.
    """
    best = TranslateFinding(math.inf, None, None, None, 0)
    count = 0
    for el in enumerate_elements(rep, max_len, lattice_bound):
        image = transform_geodesic(el.map, g)
        res = geodesic_distance(g, image, rep.tol)
        if res.flag in ("equal", "asymptotic"):
            continue
        count += 1
        if res.dist < best.dist:
            best = TranslateFinding(res.dist, res.flag, el.word, image, 0)
    return TranslateFinding(best.dist, best.flag, best.word, best.image, count)


@dataclass(frozen=True)
class EpsilonBall:
    center: HalfSpacePoint
    radius: float
    dist_to_lift_a: float
    dist_to_lift_b: float
    lift_distance: float


def epsilon_ball_witness(rep: CompressionBodyRep, k: int, eps: float) -> EpsilonBall:
    """Ball of radius eps met by the tunnel in two distinct arcs.

    The center is the midpoint of the common perpendicular of the two lifts
    (their intersection point when they cross), so each lift passes within
    eps/4 of it once the lifts are eps/2 close.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    lp = lift_pair_distance(rep, k)
    if lp.dist > eps / 2:
        raise TooFarApart(f"lifts are {lp.dist:.6g} apart, more than eps/2 = {eps / 2:.6g}")
    _, _, mid = closest_points(lp.lift_a, lp.lift_b, rep.tol)
    return EpsilonBall(mid, eps, point_geodesic_distance(mid, lp.lift_a),
                       point_geodesic_distance(mid, lp.lift_b), lp.dist)

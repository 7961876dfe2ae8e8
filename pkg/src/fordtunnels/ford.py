"""Ford domains: visibility of isometric spheres and the simple-Ford test."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .geometry import IsometricSphere, isometric_sphere, same_sphere, transform_sphere
from .group import (
    CompressionBodyRep,
    GroupElement,
    Parallelogram,
    Word,
    _lattice_range,
    centered_parallelogram,
    enumerate_elements,
    minimal_translation,
    reduce_point,
    reduced_basis,
)
from .moebius import DEFAULT_TOL, MoebiusMap, adjugate, matmul, normalize

DEFAULT_GRID = 64
FACE_TOL = 1e-8


class SphereRelation(NamedTuple):
    relation: str  # disjoint | tangent | overlapping | s1_inside_s2 | s2_inside_s1 | equal
    gap: float


def sphere_relation(s1: IsometricSphere, s2: IsometricSphere, tol: float = DEFAULT_TOL) -> SphereRelation:
    """Relation of the footprint disks; ``gap = |c1 - c2| - (r1 + r2)``."""
    dist = abs(s1.center - s2.center)
    gap = dist - (s1.radius + s2.radius)
    if same_sphere(s1, s2, tol):
        return SphereRelation("equal", gap)
    if dist + s1.radius < s2.radius - tol:
        return SphereRelation("s1_inside_s2", gap)
    if dist + s2.radius < s1.radius - tol:
        return SphereRelation("s2_inside_s1", gap)
    if gap > tol:
        return SphereRelation("disjoint", gap)
    if gap >= -tol:
        return SphereRelation("tangent", gap)
    return SphereRelation("overlapping", gap)


class Visibility(NamedTuple):
    verdict: str  # visible | invisible | uncertain
    margin: float


def _hemisphere_samples(s: IsometricSphere, grid_res: int):
    rho = np.arange(grid_res) / grid_res
    theta = np.arange(4 * grid_res) * (2 * np.pi / (4 * grid_res))
    rr, tt = np.meshgrid(rho, theta, indexing="ij")
    z = s.center + s.radius * rr * np.exp(1j * tt)
    h = s.radius * np.sqrt(1.0 - rr ** 2)
    return z.ravel(), h.ravel()


def visibility(target: IsometricSphere, others, grid_res: int = DEFAULT_GRID,
               tol: float = DEFAULT_TOL) -> Visibility:
    """Decide whether ``target`` pokes out of the union of the other half-balls.

    The hemisphere is sampled on a polar grid.  The margin is the largest,
    over samples, of the smallest Euclidean clearance to the other spheres;
    positive means some sample sits outside every other half-ball.
    """
    pool = [o for o in others
            if not same_sphere(o, target) and abs(o.center - target.center) < o.radius + target.radius]
    if not pool:
        return Visibility("visible", target.radius)
    z, h = _hemisphere_samples(target, grid_res)
    centers = np.array([o.center for o in pool])
    radii = np.array([o.radius for o in pool])
    best = np.full(z.shape, np.inf)
    for start in range(0, len(pool), 64):
        c = centers[start:start + 64, None]
        r = radii[start:start + 64, None]
        clear = np.sqrt(np.abs(z[None, :] - c) ** 2 + h[None, :] ** 2) - r
        best = np.minimum(best, clear.min(axis=0))
    margin = float(best.max())
    if margin > tol:
        return Visibility("visible", margin)
    if margin < -tol:
        return Visibility("invisible", margin)
    return Visibility("uncertain", margin)


@dataclass(frozen=True)
class FootprintEntry:
    sphere: IsometricSphere
    visibility: str
    margin: float
    lattice_class: complex  # sphere center reduced into the parallelogram


@dataclass(frozen=True)
class FordFootprint:
    spheres: tuple[FootprintEntry, ...]
    parallelogram: Parallelogram
    max_len: int
    lattice_bound: int
    grid_res: int

    def visible(self) -> list[FootprintEntry]:
        return [e for e in self.spheres if e.visibility == "visible"]

    def visible_classes(self, digits: int = 9) -> list[tuple[complex, float]]:
        """Distinct (reduced center, radius) pairs among visible spheres."""
        seen = {}
        for e in self.visible():
            key = (round(e.lattice_class.real, digits), round(e.lattice_class.imag, digits),
                   round(e.sphere.radius, digits))
            seen.setdefault(key, (e.lattice_class, e.sphere.radius))
        return [seen[k] for k in sorted(seen)]


def _sphere_key(s: IsometricSphere, digits: int = 9):
    return (round(s.center.real, digits) + 0.0, round(s.center.imag, digits) + 0.0, round(s.radius, digits))


def _nearby_translates(rep: CompressionBodyRep, s: IsometricSphere, window: Parallelogram, reach: float):
    cs = window.corners()
    lo = complex(min(c.real for c in cs) - reach, min(c.imag for c in cs) - reach) - s.center
    hi = complex(max(c.real for c in cs) + reach, max(c.imag for c in cs) + reach) - s.center
    jr, kr = _lattice_range(rep, lo, hi)
    for j in jr:
        for k in kr:
            c = s.center + rep.lattice_vector(j, k)
            if window.distance_to(c) <= reach:
                owner = s.owner.right_lattice(-j, -k) if isinstance(s.owner, Word) else s.owner
                yield IsometricSphere(c, s.radius, owner)


def element_spheres(elements) -> list[IsometricSphere]:
    out = []
    for el in elements:
        m = normalize(el.map)
        if abs(m.c) <= 1e-12:
            continue
        out.append(isometric_sphere(m, owner=el.word))
    return out


def ford_footprint(rep: CompressionBodyRep, max_len: int, lattice_bound: int = 1,
                   grid_res: int = DEFAULT_GRID) -> FordFootprint:
    """Visible isometric spheres over a lattice cell.

    The cell is :func:`centered_parallelogram`, a translate of the fundamental
    parallelogram centered on the generator spheres.  Spheres of the enumerated elements are reduced to lattice classes, every
    translate near the parallelogram is generated, and each translate whose
    footprint meets the parallelogram (expanded by the largest radius) is
    tested for visibility against the whole pool.
    """
    window = centered_parallelogram(rep)
    elements = enumerate_elements(rep, max_len, lattice_bound) if max_len >= 1 else []
    classes = {}
    for s in element_spheres(elements):
        c, (j, k) = reduce_point(rep, s.center, window=window)
        owner = s.owner.right_lattice(j, k) if isinstance(s.owner, Word) else s.owner
        rs = IsometricSphere(c, s.radius, owner)
        classes.setdefault(_sphere_key(rs), rs)
    if not classes:
        return FordFootprint((), window, max_len, lattice_bound, grid_res)
    r_max = max(s.radius for s in classes.values())
    pool = {}
    for s in classes.values():
        for t in _nearby_translates(rep, s, window, s.radius + 3 * r_max):
            pool.setdefault(_sphere_key(t), t)
    pool_list = [pool[k] for k in sorted(pool)]
    entries = []
    for s in pool_list:
        if window.distance_to(s.center) > s.radius + r_max:
            continue
        vis = visibility(s, pool_list, grid_res, rep.tol)
        cls, _ = reduce_point(rep, s.center, window=window)
        entries.append(FootprintEntry(s, vis.verdict, vis.margin, cls))
    return FordFootprint(tuple(entries), window, max_len, lattice_bound, grid_res)


@dataclass(frozen=True)
class SimpleFordReport:
    verdict: str  # simple | not_simple | uncertain
    witness: Optional[tuple[IsometricSphere, IsometricSphere, str]]
    min_gap: float


def generator_spheres(rep: CompressionBodyRep) -> list[IsometricSphere]:
    """I(gamma_i) and I(gamma_i^-1) for each generator, in generator order."""
    out = []
    for i, g in enumerate(rep.gammas, start=1):
        m = normalize(g)
        out.append(isometric_sphere(m, owner=Word.letter(i)))
        out.append(isometric_sphere(adjugate(m), owner=Word.letter(-i)))
    return out


def is_simple_ford(rep: CompressionBodyRep) -> SimpleFordReport:
    """Check that generator spheres and all lattice translates are disjoint."""
    tol = rep.tol
    spheres = generator_spheres(rep)
    v1, v2 = reduced_basis(rep.t_alpha, rep.t_beta)
    cover = abs(v1) + abs(v2)
    best = None
    not_simple = uncertain = False
    for i, s1 in enumerate(spheres):
        for s2 in spheres[i:]:
            reach = s1.radius + s2.radius + cover
            diff = s1.center - s2.center
            lo, hi = diff - complex(reach, reach), diff + complex(reach, reach)
            jr, kr = _lattice_range(rep, lo, hi)
            for j in jr:
                for k in kr:
                    if s2 is s1 and (j, k) == (0, 0):
                        continue
                    lam = rep.lattice_vector(j, k)
                    if abs(diff - lam) > reach:
                        continue
                    t = s2.translated(lam, s2.owner.right_lattice(-j, -k))
                    rel = sphere_relation(s1, t, tol)
                    if rel.relation == "tangent":
                        uncertain = True
                    elif rel.relation != "disjoint":
                        not_simple = True
                    if best is None or rel.gap < best[0]:
                        best = (rel.gap, (s1, t, rel.relation))
    if best is None:
        return SimpleFordReport("simple", None, math.inf)
    verdict = "not_simple" if not_simple else ("uncertain" if uncertain else "simple")
    return SimpleFordReport(verdict, best[1], best[0])


class FacePairingResidual(NamedTuple):
    index: int
    forward: float  # gamma_i(I(gamma_i)) vs I(gamma_i^-1)
    backward: float  # gamma_i^-1(I(gamma_i^-1)) vs I(gamma_i)
    passed: bool


@dataclass(frozen=True)
class FacePairingReport:
    ok: bool
    residuals: tuple[FacePairingResidual, ...]


def _sphere_residual(image, target: IsometricSphere) -> float:
    if not isinstance(image, IsometricSphere):
        return math.inf
    return max(abs(image.center - target.center), abs(image.radius - target.radius))


def face_pairing_check(rep: CompressionBodyRep, tol: float = FACE_TOL) -> FacePairingReport:
    """Check that each gamma_i carries I(gamma_i) onto I(gamma_i^-1).

    Spheres are read off the stored matrix entries, without renormalizing, so
    a corrupted determinant shows up as a residual.
    """
    out = []
    for i, g in enumerate(rep.gammas, start=1):
        g_inv = adjugate(g)
        s, s_inv = isometric_sphere(g), isometric_sphere(g_inv)
        fwd = _sphere_residual(transform_sphere(g, s), s_inv)
        bwd = _sphere_residual(transform_sphere(g_inv, s_inv), s)
        out.append(FacePairingResidual(i, fwd, bwd, max(fwd, bwd) <= tol))
    return FacePairingReport(all(r.passed for r in out), tuple(out))


def normalize_generators(rep: CompressionBodyRep) -> CompressionBodyRep:
    """Replace gamma_i by x_i^-1 gamma_i w_i so both sphere centers lie in the fundamental parallelogram."""
    new = []
    for g in rep.gammas:
        c = -g.d / g.c
        _, (j, k) = reduce_point(rep, c)
        if (j, k) != (0, 0):
            g = matmul(g, MoebiusMap.translation(rep.lattice_vector(j, k)))
        e = g.a / g.c
        _, (j, k) = reduce_point(rep, e)
        if (j, k) != (0, 0):
            g = matmul(MoebiusMap.translation(-rep.lattice_vector(j, k)), g)
        new.append(g)
    return rep.with_gammas(new, family=None, params=())


@dataclass(frozen=True)
class AlarmReport:
    alarm: bool
    min_translation: float
    max_radius: float
    offenders: tuple[tuple[Word, float], ...]


def discreteness_alarm(rep: CompressionBodyRep, elements: list[GroupElement]) -> AlarmReport:
    """Flag elements whose isometric sphere is larger than the shortest cusp translation.

    Such a sphere is impossible for a discrete group with a rank-two cusp at
    infinity, so any offender certifies indiscreteness.
    """
    T = minimal_translation(rep)
    offenders = []
    max_r = 0.0
    for el in elements:
        m = normalize(el.map)
        if abs(m.c) <= 1e-12:
            continue
        r = 1.0 / abs(m.c)
        max_r = max(max_r, r)
        if r > T + rep.tol:
            offenders.append((el.word, r))
    return AlarmReport(bool(offenders), T, max_r, tuple(offenders))

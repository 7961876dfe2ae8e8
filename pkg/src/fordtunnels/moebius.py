"""Complex Moebius maps acting on the boundary and interior of upper half-space.

Maps are 2x2 complex matrices identified up to a global sign.  The point at
infinity of the boundary sphere is the singleton ``INF``; it is never encoded
as a large float.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .errors import DegenerateHeight, NonFiniteValue, NotUpperParabolic, SingularMatrix

DEFAULT_TOL = 1e-9
SINGULAR_TOL = 1e-12


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Boundary = Union[complex, _Infinity]


def is_inf(z) -> bool:
    return z is INF


def as_complex(x) -> complex:
    """Coerce to ``complex`` and reject NaN/inf components."""
    z = complex(x)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteValue(f"non-finite complex value {z!r}")
    return z


def boundary_close(z: Boundary, w: Boundary, tol: float = DEFAULT_TOL) -> bool:
    if is_inf(z) or is_inf(w):
        return z is w
    return abs(z - w) <= tol


@dataclass(frozen=True, eq=False)
class MoebiusMap:
    """The map z -> (az + b)/(cz + d).

    The raw constructor stores entries as given; use :func:`normalize` to get
    the determinant-1 representative.
    """

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, as_complex(getattr(self, name)))

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, t) -> MoebiusMap:
        return cls(1, t, 0, 1)

    @classmethod
    def from_rows(cls, rows) -> MoebiusMap:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> complex:
        return self.a + self.d

    def rows(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        return ((self.a, self.b), (self.c, self.d))

    def __neg__(self) -> MoebiusMap:
        return MoebiusMap(-self.a, -self.b, -self.c, -self.d)

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return compose(self, other)

    def __call__(self, z: Boundary) -> Boundary:
        return apply_boundary(self, z)

    def inverse(self) -> MoebiusMap:
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    def __repr__(self):
        return f"MoebiusMap([[{self.a}, {self.b}], [{self.c}, {self.d}]])"


@dataclass(frozen=True)
class HalfSpacePoint:
    """Point of upper half-space: horizontal coordinate ``z`` and height ``h > 0``."""

    z: complex
    h: float

    def __post_init__(self):
        object.__setattr__(self, "z", as_complex(self.z))
        h = float(self.h)
        if not math.isfinite(h) or h <= 0.0:
            raise DegenerateHeight(f"height must be positive and finite, got {h!r}")
        object.__setattr__(self, "h", h)


def _sign_key(m: MoebiusMap, tol: float) -> bool:
    """True when ``m`` is already the canonical sign representative."""
    tr = m.trace
    if abs(tr.real) > tol:
        return tr.real > 0
    if abs(tr.imag) > tol:
        return tr.imag > 0
    # trace ~ 0: fall back to the first entry that is not ~0
    for e in (m.a, m.b, m.c, m.d):
        if abs(e.real) > tol:
            return e.real > 0
        if abs(e.imag) > tol:
            return e.imag > 0
    return True


def normalize(raw, tol: float = DEFAULT_TOL) -> MoebiusMap:
    """Scale a 2x2 matrix to determinant 1 and fix the global sign.

    ``raw`` may be a MoebiusMap or anything unpackable as ``((a, b), (c, d))``.
    The sign is chosen so that the trace has nonnegative real part, with ties
    broken by the imaginary part.
    """
    m = raw if isinstance(raw, MoebiusMap) else MoebiusMap.from_rows(raw)
    det = m.det
    if abs(det) <= SINGULAR_TOL:
        raise SingularMatrix(f"determinant {det!r} is numerically zero")
    s = cmath.sqrt(det)
    n = MoebiusMap(m.a / s, m.b / s, m.c / s, m.d / s)
    return n if _sign_key(n, tol) else -n


def matmul(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Plain matrix product, no renormalization."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """Matrix product ``m1 * m2`` (apply m2 first), renormalized."""
    return normalize(matmul(m1, m2))


def adjugate(m: MoebiusMap) -> MoebiusMap:
    return MoebiusMap(m.d, -m.b, -m.c, m.a)


def inverse(m: MoebiusMap) -> MoebiusMap:
    return normalize(adjugate(m))


def equal(m1: MoebiusMap, m2: MoebiusMap, tol: float = DEFAULT_TOL) -> bool:
    """Entrywise equality up to a single global sign."""
    e1 = (m1.a, m1.b, m1.c, m1.d)
    e2 = (m2.a, m2.b, m2.c, m2.d)
    if all(abs(x - y) <= tol for x, y in zip(e1, e2)):
        return True
    return all(abs(x + y) <= tol for x, y in zip(e1, e2))


def apply_boundary(m: MoebiusMap, z: Boundary) -> Boundary:
    if is_inf(z):
        if m.c == 0:
            return INF
        return m.a / m.c
    z = as_complex(z)
    den = m.c * z + m.d
    scale = abs(m.c) * abs(z) + abs(m.d)
    if den == 0 or abs(den) <= 1e-15 * scale:
        return INF
    return (m.a * z + m.b) / den


def apply_interior(m: MoebiusMap, p: HalfSpacePoint) -> HalfSpacePoint:
    """Poincare extension of ``m`` to upper half-space."""
    z, h = p.z, p.h
    try:
        w = m.c * z + m.d
        D = abs(w) ** 2 + abs(m.c) ** 2 * h * h
        if D == 0.0 or not math.isfinite(D):
            raise DegenerateHeight(f"image of {p!r} is not representable")
        z_new = ((m.a * z + m.b) * w.conjugate() + m.a * m.c.conjugate() * h * h) / D
        h_new = abs(m.det) * h / D
    except (OverflowError, ZeroDivisionError) as exc:
        raise DegenerateHeight(f"image of {p!r} is not representable") from exc
    if h_new <= 0.0 or not math.isfinite(h_new):
        raise DegenerateHeight(f"image height underflowed for point {p!r}")
    if not (math.isfinite(z_new.real) and math.isfinite(z_new.imag)):
        raise DegenerateHeight(f"image of {p!r} is not representable")
    return HalfSpacePoint(z_new, h_new)


def classify(m: MoebiusMap, tol: float = DEFAULT_TOL) -> str:
    """One of ``identity``, ``parabolic``, ``elliptic``, ``loxodromic``."""
    n = normalize(m, tol)
    if equal(n, MoebiusMap.identity(), tol):
        return "identity"
    tr2 = n.trace ** 2
    if abs(tr2 - 4) <= tol:
        return "parabolic"
    if abs(tr2.imag) <= tol and -tol <= tr2.real < 4:
        return "elliptic"
    return "loxodromic"


def parabolic_translation(m: MoebiusMap, tol: float = DEFAULT_TOL) -> complex:
    """Translation vector t of a parabolic map z -> z + t fixing infinity."""
    n = normalize(m, tol)
    if abs(n.c) > tol or classify(n, tol) != "parabolic":
        raise NotUpperParabolic(f"{m!r} is not a parabolic fixing infinity")
    return n.b / n.a

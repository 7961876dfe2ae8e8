"""Compression-body group representations, words and the built-in families.

A representation is given by the two cusp translations ``t_alpha``,
``t_beta`` (generating the lattice Gamma_inf) and loxodromic generators
``gammas``.  Group elements are named by :class:`Word`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import BudgetExceeded, OutOfRange
from .geometry import IsometricSphere
from .moebius import DEFAULT_TOL, MoebiusMap, as_complex, classify, compose, inverse, matmul, normalize

DEFAULT_CAP = 10 ** 6
DET_TOL = 1e-9  # generators farther than this from determinant 1 are invalid


@dataclass(frozen=True, eq=False)
class CompressionBodyRep:
    t_alpha: complex
    t_beta: complex
    gammas: tuple[MoebiusMap, ...]
    tol: float = DEFAULT_TOL
    family: Optional[str] = None
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "t_alpha", as_complex(self.t_alpha))
        object.__setattr__(self, "t_beta", as_complex(self.t_beta))
        object.__setattr__(self, "gammas", tuple(self.gammas))
        object.__setattr__(self, "params", tuple(self.params))

    @property
    def n(self) -> int:
        return len(self.gammas)

    def lattice_vector(self, j: int, k: int) -> complex:
        return j * self.t_alpha + k * self.t_beta

    def generator(self, letter: int) -> MoebiusMap:
        g = self.gammas[abs(letter) - 1]
        return g if letter > 0 else inverse(g)

    def with_gammas(self, gammas, **changes) -> CompressionBodyRep:
        kw = dict(t_alpha=self.t_alpha, t_beta=self.t_beta, tol=self.tol,
                  family=self.family, params=self.params)
        kw.update(changes)
        return CompressionBodyRep(gammas=tuple(gammas), **kw)


def _letter_key(letter: int) -> tuple[int, int]:
    return (abs(letter), 0 if letter > 0 else 1)


def letter_name(letter: int) -> str:
    return f"g{abs(letter)}" if letter > 0 else f"g{abs(letter)}^-1"


@dataclass(frozen=True)
class Word:
    """Reduced word ``T(o0) g_1 T(o1) g_2 ... g_m T(om)``.

    ``letters`` holds +i for gamma_i and -i for its inverse.  ``offsets`` has
    one more entry than ``letters``; entry (j, k) is the lattice translation
    j*t_alpha + k*t_beta.  The first offset post-composes, the last
    pre-composes.
    """

    letters: tuple[int, ...]
    offsets: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        offsets = tuple((int(j), int(k)) for j, k in self.offsets) or ((0, 0),) * (len(letters) + 1)
        if len(offsets) != len(letters) + 1:
            raise ValueError("a word needs exactly one more offset than letters")
        if any(x == 0 for x in letters):
            raise ValueError("letters are nonzero generator indices")
        for i in range(len(letters) - 1):
            if letters[i] == -letters[i + 1] and offsets[i + 1] == (0, 0):
                raise ValueError("word is not freely reduced")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "offsets", offsets)

    @classmethod
    def letter(cls, letter: int) -> Word:
        return cls((letter,))

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        key = [self.offsets[0]]
        for letter, off in zip(self.letters, self.offsets[1:]):
            key.append(_letter_key(letter))
            key.append(off)
        weight = sum(abs(j) + abs(k) for j, k in self.offsets)
        return (len(self.letters), weight, tuple(key))

    def inverse(self) -> Word:
        offs = tuple((-j, -k) for j, k in reversed(self.offsets))
        return Word(tuple(-x for x in reversed(self.letters)), offs)

    def right_lattice(self, j: int, k: int) -> Word:
        """This word followed on the right by the translation (j, k)."""
        last = self.offsets[-1]
        return Word(self.letters, self.offsets[:-1] + ((last[0] + j, last[1] + k),))

    def left_lattice(self, j: int, k: int) -> Word:
        first = self.offsets[0]
        return Word(self.letters, ((first[0] + j, first[1] + k),) + self.offsets[1:])

    def evaluate(self, rep: CompressionBodyRep) -> MoebiusMap:
        m = _translation(rep, self.offsets[0])
        for letter, off in zip(self.letters, self.offsets[1:]):
            m = compose(m, rep.generator(letter))
            if off != (0, 0):
                m = compose(m, _translation(rep, off))
        return m

    def __str__(self):
        parts = []
        for i, off in enumerate(self.offsets):
            if off != (0, 0):
                parts.append(f"T({off[0]},{off[1]})")
            if i < len(self.letters):
                parts.append(letter_name(self.letters[i]))
        return "*".join(parts) if parts else "1"


def _translation(rep: CompressionBodyRep, off) -> MoebiusMap:
    return MoebiusMap.translation(rep.lattice_vector(*off))


@dataclass(frozen=True)
class GroupElement:
    word: Word
    map: MoebiusMap


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failure: Optional[str]
    checks: tuple[CheckResult, ...]


def validate(rep: CompressionBodyRep) -> ValidationReport:
    """Check the representation invariants; report-valued, never raises."""
    tol = rep.tol
    checks = []
    ratio = rep.t_beta / rep.t_alpha if rep.t_alpha != 0 else 0j
    checks.append(CheckResult(
        "lattice_independent", rep.t_alpha != 0 and abs(ratio.imag) > tol,
        f"Im(t_beta/t_alpha) = {ratio.imag:.12g}"))
    checks.append(CheckResult("has_generators", rep.n >= 1, f"n = {rep.n}"))
    for i, g in enumerate(rep.gammas, start=1):
        det = g.det
        checks.append(CheckResult(f"gamma{i}_determinant", abs(det - 1) <= DET_TOL or abs(det + 1) <= DET_TOL,
                                  f"det = {det:.12g}"))
        checks.append(CheckResult(f"gamma{i}_c_nonzero", abs(g.c) > tol, f"|c| = {abs(g.c):.12g}"))
        try:
            kind = classify(g, tol)
        except Exception as exc:  # singular matrices end up here
            kind = f"invalid ({exc})"
        checks.append(CheckResult(f"gamma{i}_loxodromic", kind == "loxodromic", kind))
    failure = next((c.name for c in checks if not c.passed), None)
    return ValidationReport(failure is None, failure, tuple(checks))


@dataclass(frozen=True)
class Parallelogram:
    """Closed region ``base + s*v1 + u*v2`` with s, u in [0, 1]."""

    base: complex
    v1: complex
    v2: complex

    @property
    def area(self) -> float:
        return abs((self.v1.conjugate() * self.v2).imag)

    @property
    def is_empty(self) -> bool:
        return self.area <= 1e-15

    def corners(self) -> tuple[complex, complex, complex, complex]:
        b = self.base
        return (b, b + self.v1, b + self.v1 + self.v2, b + self.v2)

    def coords(self, z: complex) -> tuple[float, float]:
        """Coordinates (s, u) with z = base + s*v1 + u*v2."""
        w = z - self.base
        det = (self.v1.conjugate() * self.v2).imag
        s = (w.conjugate() * self.v2).imag / det
        u = (self.v1.conjugate() * w).imag / det
        return s, u

    def contains(self, z: complex, tol: float = 0.0) -> bool:
        s, u = self.coords(z)
        return -tol <= s <= 1 + tol and -tol <= u <= 1 + tol

    def distance_to(self, z: complex) -> float:
        """Euclidean distance from z to the closed parallelogram."""
        if self.is_empty:
            return math.inf
        if self.contains(z):
            return 0.0
        cs = self.corners()
        return min(_segment_distance(z, cs[i], cs[(i + 1) % 4]) for i in range(4))


def _segment_distance(z: complex, p: complex, q: complex) -> float:
    d = q - p
    t = ((z - p) * d.conjugate()).real / abs(d) ** 2
    t = min(1.0, max(0.0, t))
    return abs(z - (p + t * d))


def fundamental_parallelogram(rep: CompressionBodyRep) -> Parallelogram:
    """The cell spanned by t_alpha and t_beta at the origin."""
    return Parallelogram(0j, rep.t_alpha, rep.t_beta)


def centered_parallelogram(rep: CompressionBodyRep) -> Parallelogram:
    """Lattice cell centered on the mean of the generator sphere centers.

    Any lattice cell is a fundamental domain for the translations; centering
    keeps the generator spheres of the built-in families at their given
    positions instead of wrapping them to the far side of the cell.
    """
    pts = [z for g in rep.gammas if abs(g.c) > 0 for z in (-g.d / g.c, g.a / g.c)]
    mid = sum(pts) / len(pts) if pts else 0j
    return Parallelogram(mid - (rep.t_alpha + rep.t_beta) / 2, rep.t_alpha, rep.t_beta)


def lattice_coords(rep: CompressionBodyRep, z: complex) -> tuple[float, float]:
    """Coordinates of z in the basis (t_alpha, t_beta)."""
    return fundamental_parallelogram(rep).coords(z)


def reduce_point(rep: CompressionBodyRep, z: complex, tol: float = 1e-9,
                 window: Optional[Parallelogram] = None):
    """Translate z into the half-open cell ``window`` (default the fundamental parallelogram).

    Returns ``(z_reduced, (j, k))`` with ``z = z_reduced + j*t_alpha + k*t_beta``.
    """
    window = window or fundamental_parallelogram(rep)
    s, u = window.coords(z)
    j, k = math.floor(s + tol), math.floor(u + tol)
    return z - rep.lattice_vector(j, k), (j, k)


def reduced_basis(v1: complex, v2: complex) -> tuple[complex, complex]:
    """Lagrange-Gauss reduction of a lattice basis in C."""
    while True:
        if abs(v1) > abs(v2):
            v1, v2 = v2, v1
        m = round((v2 * v1.conjugate()).real / abs(v1) ** 2)
        if m == 0:
            return v1, v2
        v2 = v2 - m * v1


def minimal_translation(rep: CompressionBodyRep) -> float:
    """Shortest nonzero lattice translation length."""
    v1, v2 = reduced_basis(rep.t_alpha, rep.t_beta)
    return min(abs(j * v1 + k * v2) for j in range(-2, 3) for k in range(-2, 3) if (j, k) != (0, 0))


def _lattice_range(rep: CompressionBodyRep, lo: complex, hi: complex):
    """Integer boxes of lattice coordinates covering the axis box [lo, hi]."""
    pts = [complex(lo.real, lo.imag), complex(hi.real, lo.imag),
           complex(lo.real, hi.imag), complex(hi.real, hi.imag)]
    cs = [lattice_coords(rep, p) for p in pts]
    js = [c[0] for c in cs]
    ks = [c[1] for c in cs]
    return (range(math.floor(min(js)), math.ceil(max(js)) + 1),
            range(math.floor(min(ks)), math.ceil(max(ks)) + 1))


def lattice_translates_in_window(s: IsometricSphere, rep: CompressionBodyRep,
                                 window: Parallelogram) -> list[IsometricSphere]:
    """Lattice translates of ``s`` whose footprint disk meets ``window``.

    Translating I(g) by lambda gives I(g * T(-lambda)); when the owner is a
    Word the new owner records that.
    """
    if window.is_empty:
        return []
    cs = window.corners()
    r = s.radius
    lo = complex(min(c.real for c in cs) - r, min(c.imag for c in cs) - r) - s.center
    hi = complex(max(c.real for c in cs) + r, max(c.imag for c in cs) + r) - s.center
    jr, kr = _lattice_range(rep, lo, hi)
    out = []
    for j in jr:
        for k in kr:
            c = s.center + rep.lattice_vector(j, k)
            if window.distance_to(c) <= r:
                owner = s.owner.right_lattice(-j, -k) if isinstance(s.owner, Word) else s.owner
                out.append(IsometricSphere(c, r, owner))
    return out


def _count_words(n: int, max_len: int, lattice_bound: int) -> int:
    q = (2 * lattice_bound + 1) ** 2
    step = (2 * n - 1) + (q - 1) * 2 * n
    return sum(q * q * 2 * n * step ** (m - 1) for m in range(1, max_len + 1))


def map_key(m: MoebiusMap, digits: int = 7):
    n = normalize(m)
    return tuple(round(x, digits) + 0.0 for e in (n.a, n.b, n.c, n.d) for x in (e.real, e.imag))


def _words(n: int, max_len: int, lattice_bound: int):
    rng = range(-lattice_bound, lattice_bound + 1)
    offs = [(j, k) for j in rng for k in rng]
    letters = [x for i in range(1, n + 1) for x in (i, -i)]
    for m in range(1, max_len + 1):
        for seq in itertools.product(letters, repeat=m):
            for off in itertools.product(offs, repeat=m + 1):
                ok = all(not (seq[i] == -seq[i + 1] and off[i + 1] == (0, 0)) for i in range(m - 1))
                if ok:
                    yield Word(seq, off)


def enumerate_elements(rep: CompressionBodyRep, max_len: int, lattice_bound: int = 0,
                       cap: int = DEFAULT_CAP) -> list[GroupElement]:
    """All reduced words up to ``max_len`` letters, deduplicated by their maps.

    Order is by length, then total lattice offset, then lexicographic.
    Raises BudgetExceeded when the raw word count would pass ``cap``.
    """
    if max_len < 1:
        return []
    total = _count_words(rep.n, max_len, lattice_bound)
    if total > cap:
        raise BudgetExceeded(f"{total} words exceed the cap of {cap}")
    words = sorted(_words(rep.n, max_len, lattice_bound), key=Word.sort_key)
    seen = set()
    out = []
    for w in words:
        m = w.evaluate(rep)
        key = map_key(m)
        if key in seen:
            continue
        seen.add(key)
        out.append(GroupElement(w, m))
    return out


def example_simple_ford() -> CompressionBodyRep:
    """Two-generator example with four unit spheres at 0, -5, -5i, -5-5i."""
    gamma = MoebiusMap(0, 1, -1, -5j)
    delta = MoebiusMap(-5 - 5j, -26 - 25j, 1, 5)
    return CompressionBodyRep(100, 100j, (gamma, delta), family="simple-ford")


def _conjugate_by_translation(u: complex, m: MoebiusMap) -> MoebiusMap:
    return matmul(matmul(MoebiusMap.translation(u), m), MoebiusMap.translation(-u))


def _base_generator(t: float) -> MoebiusMap:
    return MoebiusMap(0, 1, -1, 5 + (t - 2) * 1j)


def _check_param(t: float, name: str = "t"):
    if not (0.0 <= t <= 4.0):
        raise OutOfRange(f"{name} = {t!r} is outside [0, 4]")


def prop42_family(t: float) -> CompressionBodyRep:
    """One-parameter family with a moving generator gamma_2.

    The second cusp translation is z -> z + 20i.
    """
    t = float(t)
    _check_param(t)
    g1 = _conjugate_by_translation(10, MoebiusMap(0, 1, -1, 5 - 2j))
    g2 = _base_generator(t)
    return CompressionBodyRep(20, 20j, (g1, g2), family="prop42", params=(t,))


def thm43_family(n: int, t: Sequence[float]) -> CompressionBodyRep:
    """n-parameter family: gamma_k is the base generator conjugated by 10(k-1)."""
    if n < 2:
        raise OutOfRange(f"n = {n} must be at least 2")
    t = tuple(float(x) for x in t)
    if len(t) != n:
        raise OutOfRange(f"expected {n} parameters, got {len(t)}")
    for k, tk in enumerate(t[:-1], start=1):
        _check_param(tk, f"t_{k}")
    if abs(t[-1] - 2.0) > 1e-12:
        raise OutOfRange(f"t_{n} must equal 2, got {t[-1]!r}")
    gammas = tuple(_conjugate_by_translation(10 * (k - 1), _base_generator(t[k - 1]))
                   for k in range(1, n + 1))
    return CompressionBodyRep(11 * n, 10j, gammas, family="thm43", params=t)


def delta_generators(rep: CompressionBodyRep) -> list[MoebiusMap]:
    """Alternative free generators whose duals self-intersect.

    For the n-parameter family: delta_k = gamma_k^-1 gamma_n (k < n) and
    delta_n = gamma_n.  For the one-parameter family: delta_1 = gamma_1,
    delta_2 = gamma_2^-1 gamma_1.
    """
    g = rep.gammas
    if rep.family == "prop42":
        return [g[0], compose(inverse(g[1]), g[0])]
    if rep.family == "thm43":
        return [compose(inverse(gk), g[-1]) for gk in g[:-1]] + [g[-1]]
    raise ValueError("delta generators are defined for the built-in families only")


def rep_from_family(family: str, n: int = 2, t=None) -> CompressionBodyRep:
    if family == "simple-ford":
        return example_simple_ford()
    if family == "prop42":
        return prop42_family(2.0 if t is None else (t[0] if isinstance(t, (list, tuple)) else t))
    if family == "thm43":
        return thm43_family(n, [2.0] * n if t is None else t)
    raise ValueError(f"unknown family {family!r}")

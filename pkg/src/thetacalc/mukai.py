"""Mukai vectors on surfaces with trivial canonical class.

Provides the integral Neron-Severi intersection pairing, the Mukai form
<v,w> = c1(v).c1(w) - v0*w4 - v4*w0, the Euler characteristics of theta
line bundles on the moduli spaces attached to a pair of vectors (the
binomial count on a K3, and the three Albanese/Kummer variants on an
abelian surface), the cohomological Fourier-Mukai transform, and the
hypothesis checklist of the strange-duality conjecture.

Conventions fixed here once:

* chi(v (x) w) = -<v, w>, so orthogonality for the Mukai form is the same
  as the vanishing of the Euler pairing.
* The Fourier-Mukai transform acts by (v0, c1, v4) -> (v4, -c1, v0) under
  the principal-polarization identification of a surface with its dual;
  this choice preserves the Mukai form (a verified property, see tests).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import DomainError, LatticeMismatchError, NotIntegralError

BUILTIN_PRESETS: dict[str, tuple[tuple[int, ...], ...]] = {
    "k3_elliptic": ((-2, 1), (1, 0)),
    "abelian_pp": ((2,),),
}


@dataclass(frozen=True)
class NSLattice:
    """Integral lattice with a symmetric Gram matrix (divisor intersection form)."""

    gram: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.gram)
        if n == 0 or any(len(row) != n for row in self.gram):
            raise DomainError("Gram matrix must be square and non-empty")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise DomainError("Gram matrix must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def dot(self, u: tuple[int, ...], v: tuple[int, ...]) -> int:
        return sum(
            u[i] * self.gram[i][j] * v[j]
            for i in range(self.rank)
            for j in range(self.rank)
        )

    def cls(self, *coords: int) -> "NSClass":
        return NSClass(self, tuple(coords))

    def zero_class(self) -> "NSClass":
        return NSClass(self, (0,) * self.rank)


def lattice_preset(name: str, extra: dict[str, NSLattice] | None = None) -> NSLattice:
    if extra and name in extra:
        return extra[name]
    if name not in BUILTIN_PRESETS:
        raise DomainError(f"unknown lattice preset {name!r}")
    return NSLattice(BUILTIN_PRESETS[name], name=name)


def load_preset_file(path: str | Path) -> dict[str, NSLattice]:
    """Read named Gram matrices from a JSON file {name: [[...], ...]}."""
    data = json.loads(Path(path).read_text())
    presets = {}
    for name, gram in data.items():
        presets[name] = NSLattice(tuple(tuple(row) for row in gram), name=name)
    return presets


@dataclass(frozen=True)
class NSClass:
    """Integer divisor class in a fixed lattice."""

    lattice: NSLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise DomainError(
                f"class has {len(self.coords)} coordinates, "
                f"lattice rank is {self.lattice.rank}"
            )

    def _check(self, other: "NSClass") -> None:
        if self.lattice != other.lattice:
            raise LatticeMismatchError()

    def dot(self, other: "NSClass") -> int:
        self._check(other)
        return self.lattice.dot(self.coords, other.coords)

    @property
    def self_intersection(self) -> int:
        return self.dot(self)

    def __add__(self, other: "NSClass") -> "NSClass":
        self._check(other)
        return NSClass(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "NSClass") -> "NSClass":
        self._check(other)
        return NSClass(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "NSClass":
        return NSClass(self.lattice, tuple(-a for a in self.coords))

    def __mul__(self, scalar: int) -> "NSClass":
        return NSClass(self.lattice, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)


@dataclass(frozen=True)
class MukaiVector:
    """Triple (rank, c1, point coefficient) in the even cohomology of a surface."""

    rank: int
    c1: NSClass
    point: int

    @property
    def lattice(self) -> NSLattice:
        return self.c1.lattice

    def components(self) -> tuple[int, ...]:
        return (self.rank, *self.c1.coords, self.point)

    def __mul__(self, scalar: int) -> "MukaiVector":
        return MukaiVector(scalar * self.rank, scalar * self.c1, scalar * self.point)

    __rmul__ = __mul__


def _check_pair(v: MukaiVector, w: MukaiVector) -> None:
    if v.lattice != w.lattice:
        raise LatticeMismatchError()


def mukai_pairing(v: MukaiVector, w: MukaiVector) -> int:
    """<v, w> = c1(v).c1(w) - v0*w4 - v4*w0."""
    _check_pair(v, w)
    return v.c1.dot(w.c1) - v.rank * w.point - v.point * w.rank


def chi_tensor(v: MukaiVector, w: MukaiVector) -> int:
    """Euler pairing chi(v (x) w) = -<v, w> on a surface with trivial canonical class."""
    return -mukai_pairing(v, w)


def dv(v: MukaiVector) -> int:
    """Half the Mukai self-pairing plus one; the moduli space has dimension 2*dv."""
    s = mukai_pairing(v, v)
    if s % 2 != 0:
        raise DomainError(f"parity: <v,v> = {s} is odd (lattice is not even?)")
    return s // 2 + 1


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def chi_k3(v: MukaiVector, w: MukaiVector) -> int:
    """Theta-bundle Euler characteristic C(dv + dw, dv) for K3 moduli; symmetric in v, w."""
    _check_pair(v, w)
    a, b = dv(v), dv(w)
    if a < 0 or b < 0:
        raise DomainError(f"dv must be non-negative, got {a} and {b}")
    return math.comb(a + b, a)


def c1_tensor(v: MukaiVector, w: MukaiVector) -> NSClass:
    """First Chern class of the tensor product, rk(w)*c1(v) + rk(v)*c1(w)."""
    _check_pair(v, w)
    return w.rank * v.c1 + v.rank * w.c1


def c1_proportional(v: MukaiVector, w: MukaiVector) -> bool:
    """Whether c1(v) and c1(w) are proportional over Q (zero counts as proportional)."""
    a, b = v.c1.coords, w.c1.coords
    n = len(a)
    return all(a[i] * b[j] == a[j] * b[i] for i in range(n) for j in range(i + 1, n))


ABELIAN_VARIANTS = {
    "albanese_plus": "albanese_plus",
    "albanese_minus": "albanese_minus",
    "kummer": "kummer",
    "s2": "albanese_plus",
    "s3": "albanese_minus",
    "s4": "kummer",
}


def chi_abelian(v: MukaiVector, w: MukaiVector, variant: str) -> int:
    """Theta-bundle Euler characteristic on abelian-surface moduli.

    * ``albanese_plus``: c1(v(x)w)^2 / (2*(dv+dw-2)) * C(dv+dw-2, dv-1),
      computed on the fibers of the determinant morphism; symmetric in v, w.
    * ``albanese_minus``: the same expression evaluated on the Fourier-Mukai
      transforms of v and w (fibers of the dual determinant morphism).
    * ``kummer``: (dv-1)^2 / (dv+dw-2) * C(dv+dw-2, dv-1), the count on the
      Kummer fiber of v paired against the full moduli space of w.  Not
      symmetric under swapping v and w.  It was derived under the
      assumption that c1(v) and c1(w) are proportional; use
      ``c1_proportional`` to check that hypothesis.
    """
    _check_pair(v, w)
    if variant not in ABELIAN_VARIANTS:
        raise DomainError(f"unknown variant {variant!r}")
    variant = ABELIAN_VARIANTS[variant]
    if variant == "albanese_minus":
        return chi_abelian(fm_transform(v), fm_transform(w), "albanese_plus")
    a, b = dv(v), dv(w)
    if a + b < 3:
        raise DomainError(f"dv + dw must be >= 3, got {a + b}")
    binom = _binom(a + b - 2, a - 1)
    if variant == "albanese_plus":
        value = Fraction(c1_tensor(v, w).self_intersection * binom, 2 * (a + b - 2))
    else:
        value = Fraction((a - 1) ** 2 * binom, a + b - 2)
    if value.denominator != 1:
        raise NotIntegralError(value)
    return int(value)


def fm_transform(v: MukaiVector) -> MukaiVector:
    """Cohomological Fourier-Mukai transform (v0, c1, v4) -> (v4, -c1, v0).

    Only defined on abelian-surface presets, where a principal polarization
    identifies the surface with its dual; the sign on c1 is the unique
    choice (up to the c1 -> -c1 ambiguity) preserving the Mukai form.
    """
    if not v.lattice.name.startswith("abelian"):
        raise DomainError(
            f"unsupported lattice preset {v.lattice.name!r} for the Fourier-Mukai transform"
        )
    return MukaiVector(v.point, -v.c1, v.rank)


@dataclass(frozen=True)
class ConjectureVerdict:
    """Individual strange-duality hypotheses for a pair of vectors, and their conjunction."""

    orthogonal: bool
    v_primitive: bool
    w_primitive: bool
    v_positive: bool
    w_positive: bool
    slope_condition: bool
    applicable: bool


def _is_primitive(v: MukaiVector) -> bool:
    return math.gcd(*(abs(c) for c in v.components())) == 1


def _is_positive(v: MukaiVector, c1_effective: bool) -> bool:
    if v.rank > 0:
        return True
    if v.rank < 0:
        return False
    return c1_effective and mukai_pairing(v, v) not in (0, 4)


def check_conjecture(
    v: MukaiVector,
    w: MukaiVector,
    H: NSClass,
    *,
    v_c1_effective: bool = False,
    w_c1_effective: bool = False,
) -> ConjectureVerdict:
    """Check the strange-duality hypotheses for (v, w) with polarization H.

    Positivity in rank 0 requires effectivity of c1, which cannot be decided
    from the lattice alone; callers assert it through the keyword flags.
    """
    _check_pair(v, w)
    if H.lattice != v.lattice:
        raise LatticeMismatchError()
    orthogonal = mukai_pairing(v, w) == 0
    v_primitive = _is_primitive(v)
    w_primitive = _is_primitive(w)
    v_positive = _is_positive(v, v_c1_effective)
    w_positive = _is_positive(w, w_c1_effective)
    slope = c1_tensor(v, w).dot(H) > 0
    return ConjectureVerdict(
        orthogonal=orthogonal,
        v_primitive=v_primitive,
        w_primitive=w_primitive,
        v_positive=v_positive,
        w_positive=w_positive,
        slope_condition=slope,
        applicable=orthogonal and v_primitive and w_primitive and v_positive and w_positive and slope,
    )

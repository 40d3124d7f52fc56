"""Duality pairings on exterior and symmetric powers, with a point oracle.

The wedge pairing sends a k-subset basis vector e_S and an (n-k)-subset
basis vector e_T to the coefficient of e_{1..n} in e_S ^ e_T: zero unless
T is the complement of S, and then the sign of the shuffle permutation
merging S and T.  The resulting matrix is a signed permutation, hence the
pairing is a perfect duality between the k-th and (n-k)-th exterior powers.

The point oracle models an n-dimensional space of sections as bivariate
monomials over exact rationals.  For point sets Z (k points) and W (n-k
points) the theta locus "some section vanishes on all of Z union W" is
detected by the vanishing of the n x n evaluation determinant, which by
Laplace expansion along the first k rows equals the wedge pairing of the
wedged evaluation covectors of Z and W.

Subset and monomial indices are frozen (colexicographic subsets,
descending-lexicographic exponents) so matrices are reproducible
byte-for-byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import DegenerateConfigError, DomainError

Rat = int | Fraction


@lru_cache(maxsize=None)
def subsets_colex(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of {1..n} in colexicographic order."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    return tuple(sorted(combinations(range(1, n + 1), k), key=lambda s: s[::-1]))


def shuffle_sign(subset: tuple[int, ...]) -> int:
    """Sign of the permutation (1..n) -> (subset ascending, complement ascending)."""
    inversions = sum(s - i for i, s in enumerate(subset, start=1))
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class SubsetIndex:
    """A strictly increasing subset of {1..n}, the basis label e_S."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        m = self.members
        if any(not 1 <= x <= self.n for x in m) or any(
            m[i] >= m[i + 1] for i in range(len(m) - 1)
        ):
            raise DomainError(f"members must be strictly increasing within 1..{self.n}")

    @property
    def complement(self) -> tuple[int, ...]:
        inside = set(self.members)
        return tuple(x for x in range(1, self.n + 1) if x not in inside)


@dataclass(frozen=True)
class WedgeMatrix:
    """Signed-permutation matrix of the pairing between complementary exterior powers.

    Rows are indexed by k-subsets, columns by (n-k)-subsets, both in colex
    order; row i has its unique non-zero entry ``signs[i]`` in column
    ``row_to_col[i]`` (the complement of the i-th row subset).
    """

    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]
    cols: tuple[tuple[int, ...], ...]
    row_to_col: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.signs[i] if self.row_to_col[i] == j else 0

    def entry_by_subsets(self, s: tuple[int, ...], t: tuple[int, ...]) -> int:
        i = self.rows.index(tuple(s))
        j = self.cols.index(tuple(t))
        return self.entry(i, j)

    def determinant(self) -> int:
        """Exact determinant: permutation sign times the product of entry signs."""
        sign = 1
        seen = [False] * self.size
        for start in range(self.size):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.row_to_col[i]
                length += 1
            if length % 2 == 0:
                sign = -sign
        for s in self.signs:
            sign *= s
        return sign

    def dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "index_order": "colex",
            "entries": [
                [i, self.row_to_col[i], self.signs[i]] for i in range(self.size)
            ],
        }


@lru_cache(maxsize=None)
def wedge_duality_matrix(n: int, k: int) -> WedgeMatrix:
    """Matrix of e_S (x) e_T -> coefficient of e_{1..n} in e_S ^ e_T."""
    rows = subsets_colex(n, k)
    cols = subsets_colex(n, n - k)
    col_index = {t: j for j, t in enumerate(cols)}
    row_to_col = []
    signs = []
    for s in rows:
        comp = SubsetIndex(n, s).complement
        row_to_col.append(col_index[comp])
        signs.append(shuffle_sign(s))
    return WedgeMatrix(n, k, rows, cols, tuple(row_to_col), tuple(signs))


def pair_wedge(n: int, k: int, alpha, beta) -> Fraction:
    """Coefficient of e_{1..n} in alpha ^ beta for coefficient vectors in colex order."""
    matrix = wedge_duality_matrix(n, k)
    if len(alpha) != matrix.size or len(beta) != len(matrix.cols):
        raise DomainError(
            f"expected coefficient vectors of lengths {matrix.size} and {len(matrix.cols)}"
        )
    total = Fraction(0)
    for i in range(matrix.size):
        a = alpha[i]
        if a:
            total += a * matrix.signs[i] * beta[matrix.row_to_col[i]]
    return Fraction(total)


def evaluation_covector(point, model) -> tuple[Rat, ...]:
    """Values of the model monomials x^ex * y^ey at a point (x, y)."""
    x, y = point
    return tuple(_monomial(x, ex) * _monomial(y, ey) for ex, ey in model)


def _monomial(base: Rat, exponent: int) -> Rat:
    if exponent == 0:
        return 1
    return base**exponent


def evaluation_matrix(points, model) -> list[list[Rat]]:
    return [list(evaluation_covector(p, model)) for p in points]


def det_exact(rows) -> Fraction:
    """Determinant over the rationals by fraction-free-pivot Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise DomainError("determinant requires a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def wedge_coefficients(vectors, n: int, k: int) -> tuple[Fraction, ...]:
    """Coefficients over colex k-subsets of the wedge of k covectors in Q^n."""
    if len(vectors) != k:
        raise DomainError(f"expected {k} covectors, got {len(vectors)}")
    coeffs = []
    for subset in subsets_colex(n, k):
        minor = [[vec[j - 1] for j in subset] for vec in vectors]
        coeffs.append(det_exact(minor) if k else Fraction(1))
    return tuple(coeffs)


@dataclass(frozen=True)
class PointConfig:
    """Rational plane points together with a monomial section model.

    Coordinates in the JSON form may be integers or rational strings "p/q",
    keeping the whole pipeline exact.
    """

    points: tuple[tuple[Fraction, Fraction], ...]
    section_model: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise DegenerateConfigError("coincident points in the configuration")

    @classmethod
    def from_json_dict(cls, data: dict) -> "PointConfig":
        model = tuple((int(ex), int(ey)) for ex, ey in data["model"])
        points = tuple(
            (Fraction(str(x)), Fraction(str(y))) for x, y in data.get("points", ())
        )
        return cls(points, model)


def theta_vanishes(z_points, w_points, model) -> bool:
    """Whether some model section vanishes on all points of Z union W.

    True exactly when the n x n evaluation determinant at the combined
    configuration is zero; by construction this agrees with the vanishing
    of the wedge pairing of the wedged evaluation covectors.
    """
    n = len(model)
    points = list(z_points) + list(w_points)
    if len(points) != n:
        raise DomainError(
            f"|Z| + |W| = {len(points)} must equal the model size {n}"
        )
    normalized = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(set(normalized)) != len(normalized):
        raise DegenerateConfigError("coincident points in the configuration")
    return det_exact(evaluation_matrix(normalized, model)) == 0


def monomial_exponents(w_dim: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of total degree `degree` in w_dim variables, lex-descending."""
    if w_dim < 1 or degree < 0:
        raise DomainError("need w_dim >= 1 and degree >= 0")

    def gen(vars_left: int, total: int):
        if vars_left == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in gen(vars_left - 1, total - first):
                yield (first,) + rest

    return tuple(gen(w_dim, degree))


def multinomial(alpha: tuple[int, ...]) -> int:
    total = sum(alpha)
    value = math.factorial(total)
    for a in alpha:
        value //= math.factorial(a)
    return value


@dataclass(frozen=True)
class SymDualityMatrix:
    """Diagonal matrix of the perfect pairing between Sym^n(W) and Sym^n(W*).

    In monomial bases on both sides the pairing of x^alpha with xi^alpha is
    the multinomial coefficient n!/alpha!; off-diagonal entries vanish.
    """

    w_dim: int
    degree: int
    monomials: tuple[tuple[int, ...], ...]
    diagonal: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.monomials)

    def entry(self, i: int, j: int) -> int:
        return self.diagonal[i] if i == j else 0

    def dense(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.size)] for i in range(self.size)]

    @property
    def full_rank(self) -> bool:
        return all(d != 0 for d in self.diagonal)


def sym_duality_matrix(w_dim: int, n: int) -> SymDualityMatrix:
    if w_dim < 1 or n < 1:
        raise DomainError("need w_dim >= 1 and n >= 1")
    monomials = monomial_exponents(w_dim, n)
    return SymDualityMatrix(
        w_dim, n, monomials, tuple(multinomial(alpha) for alpha in monomials)
    )


def incidence_form(z_points, model) -> tuple[Fraction, ...]:
    """Coefficients, over degree-n monomials, of the product of point evaluations.

    The returned vector represents the symmetric tensor obtained by
    multiplying the evaluation covectors of the points of Z: evaluating it
    on a section t (see ``evaluate_sym_form``) gives prod_i t(z_i).
    """
    w_dim = len(model)
    n = len(z_points)
    poly: dict[tuple[int, ...], Fraction] = {(0,) * w_dim: Fraction(1)}
    for p in z_points:
        row = evaluation_covector(p, model)
        new: dict[tuple[int, ...], Fraction] = {}
        for expo, c in poly.items():
            for j, a in enumerate(row):
                if a:
                    bumped = expo[:j] + (expo[j] + 1,) + expo[j + 1 :]
                    new[bumped] = new.get(bumped, Fraction(0)) + c * a
        poly = new
    return tuple(poly.get(alpha, Fraction(0)) for alpha in monomial_exponents(w_dim, n))


def evaluate_sym_form(coeffs, w_dim: int, degree: int, t_coeffs) -> Fraction:
    """Value of a symmetric form on the section with coefficients t_coeffs."""
    monomials = monomial_exponents(w_dim, degree)
    if len(coeffs) != len(monomials) or len(t_coeffs) != w_dim:
        raise DomainError("coefficient vector lengths do not match the monomial basis")
    total = Fraction(0)
    for c, alpha in zip(coeffs, monomials):
        if c:
            term = Fraction(c)
            for t, e in zip(t_coeffs, alpha):
                if e:
                    term *= Fraction(t) ** e
            total += term
    return total

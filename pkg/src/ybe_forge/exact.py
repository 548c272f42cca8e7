"""Exact rational linear algebra: matrices, fraction-free elimination,
polynomials in the loop variable z, interpolation, and cyclotomic scalars.

All arithmetic in this module is exact.  Scalars are `fractions.Fraction`;
matrices are immutable nested tuples so they can be hashed and cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class LinearAlgebraError(Exception):
    """Base class for exact-solver failures."""


class SingularSystemError(LinearAlgebraError):
    """Square system with a rank-deficient coefficient matrix."""


class InconsistentSystemError(LinearAlgebraError):
    """No solution: elimination produced 0 = nonzero."""


class InterpolationError(Exception):
    """Samples are not consistent with a polynomial of the stated degree."""


def rat(v) -> Fraction:
    """Coerce ints, strings like '3/4' and Fractions to an exact rational."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("refusing to coerce float to exact rational: %r" % (v,))
    return Fraction(v)


# ---------------------------------------------------------------------------
# dense matrices over an exact ring (Fraction by default)
# ---------------------------------------------------------------------------

def freeze(rows) -> tuple:
    return tuple(tuple(row) for row in rows)


def mat_zero(nrows: int, ncols: int | None = None, zero=ZERO) -> tuple:
    ncols = nrows if ncols is None else ncols
    return tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows))


def mat_identity(n: int) -> tuple:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_unit(n: int, i: int, j: int) -> tuple:
    """Matrix unit e_{i,j} with 1-based indices, as in the usual basis."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("unit index out of range: (%d, %d) for n=%d" % (i, j, n))
    return tuple(
        tuple(ONE if (r == i - 1 and c == j - 1) else ZERO for c in range(n))
        for r in range(n)
    )


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_mul(a, b):
    nb = len(b)
    bt = list(zip(*b))
    return tuple(
        tuple(sum(ra[k] * col[k] for k in range(nb)) for col in bt) for ra in a
    )


def mat_bracket(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def mat_transpose(a):
    return tuple(zip(*a))


def mat_is_zero(a) -> bool:
    return all(x == 0 for row in a for x in row)


def mat_from_entries(n: int, entries: dict, zero=ZERO) -> tuple:
    """Build an n x n matrix from a {(i, j): value} dict with 1-based keys."""
    rows = [[zero] * n for _ in range(n)]
    for (i, j), v in entries.items():
        rows[i - 1][j - 1] = v
    return freeze(rows)


# ---------------------------------------------------------------------------
# fraction-free elimination (Bareiss)
# ---------------------------------------------------------------------------

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Clear denominators row by row; row scaling preserves kernels and
    solution sets of homogeneous/augmented systems."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _bareiss_echelon(m: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination.  Returns (echelon rows, pivot cols).

    Pivots are chosen per column by smallest nonzero magnitude, which keeps
    the exact integer entries small in practice.  Divisions are checked so a
    broken divisibility invariant can never truncate silently.
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        best = -1
        for i in range(r, nrows):
            if m[i][c] != 0 and (best < 0 or abs(m[i][c]) < abs(m[best][c])):
                best = i
        if best < 0:
            continue
        if best != r:
            m[r], m[best] = m[best], m[r]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            fi = m[i][c]
            row_i = m[i]
            for j in range(c, ncols):
                q, rem = divmod(piv * row_i[j] - fi * row_r[j], prev)
                if rem:
                    raise LinearAlgebraError("fraction-free division failed")
                row_i[j] = q
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return m, piv_cols


def kernel(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> list[tuple[Fraction, ...]]:
    """Exact basis of the null space of the matrix given by `rows`.

    Every returned vector is re-checked against the original rows.
    """
    rows = [list(r) for r in rows]
    if not rows:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs an explicit ncols")
        return [tuple(ONE if i == j else ZERO for j in range(ncols)) for i in range(ncols)]
    n = len(rows[0])
    m, piv_cols = _bareiss_echelon(_integer_rows(rows))
    pivset = set(piv_cols)
    free_cols = [c for c in range(n) if c not in pivset]
    basis = []
    for f in free_cols:
        v = [ZERO] * n
        v[f] = ONE
        for r in range(len(piv_cols) - 1, -1, -1):
            c = piv_cols[r]
            s = sum((Fraction(m[r][j]) * v[j] for j in range(c + 1, n)), ZERO)
            v[c] = -s / m[r][c]
        basis.append(tuple(v))
    for v in basis:
        for row in rows:
            if sum(a * b for a, b in zip(row, v)) != 0:
                raise LinearAlgebraError("kernel verification failed")
    return basis


def solve_multi(rows: Sequence[Sequence[Fraction]], rhs_cols: Sequence[Sequence[Fraction]]) -> list[tuple[Fraction, ...]]:
    """Solve A x = b for several right-hand sides at once.

    Accepts square or overdetermined-consistent systems.  Raises
    SingularSystemError if A has deficient column rank and
    InconsistentSystemError if elimination yields 0 = nonzero.
    """
    nrows = len(rows)
    ncols = len(rows[0])
    nrhs = len(rhs_cols)
    if any(len(b) != nrows for b in rhs_cols):
        raise ValueError("right-hand side length mismatch")
    aug = [list(rows[i]) + [b[i] for b in rhs_cols] for i in range(nrows)]
    m, piv_cols = _bareiss_echelon(_integer_rows(aug))
    piv_in_A = [c for c in piv_cols if c < ncols]
    if len(piv_in_A) < ncols:
        # a pivot landed in the rhs block, or the rank is deficient
        if len(piv_in_A) < len(piv_cols):
            raise InconsistentSystemError("no solution: 0 = nonzero after elimination")
        raise SingularSystemError("coefficient matrix is rank-deficient")
    rank = len(piv_in_A)
    for r in range(rank, nrows):
        if any(m[r][ncols + k] != 0 for k in range(nrhs)):
            raise InconsistentSystemError("no solution: 0 = nonzero after elimination")
    sols = []
    for k in range(nrhs):
        x = [ZERO] * ncols
        for r in range(rank - 1, -1, -1):
            c = piv_in_A[r]
            s = Fraction(m[r][ncols + k]) - sum(
                (Fraction(m[r][j]) * x[j] for j in range(c + 1, ncols)), ZERO
            )
            x[c] = s / m[r][c]
        sols.append(tuple(x))
    for k, x in enumerate(sols):
        for i in range(nrows):
            if sum(a * b for a, b in zip(rows[i], x)) != rhs_cols[k][i]:
                raise LinearAlgebraError("solve verification failed")
    return sols


@dataclass(frozen=True)
class LinSystem:
    """An exact linear system A x = b."""

    matrix: tuple
    rhs: tuple

    def __post_init__(self):
        if any(len(row) != len(self.matrix[0]) for row in self.matrix):
            raise ValueError("ragged coefficient matrix")
        if len(self.rhs) != len(self.matrix):
            raise ValueError("rhs length does not match matrix")


def solve(system: LinSystem) -> tuple[Fraction, ...]:
    """Exact solution of A x = b, verified by re-substitution."""
    return solve_multi(system.matrix, [system.rhs])[0]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    _, piv = _bareiss_echelon(_integer_rows(rows))
    return len(piv)


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant (Bareiss; row scalings tracked explicitly)."""
    n = len(rows)
    if n == 0:
        return ONE
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    scale = ONE
    m = []
    for row in rows:
        den = 1
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
        scale /= den
        m.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for c in range(n):
        best = -1
        for i in range(c, n):
            if m[i][c] != 0 and (best < 0 or abs(m[i][c]) < abs(m[best][c])):
                best = i
        if best < 0:
            return ZERO
        if best != c:
            m[c], m[best] = m[best], m[c]
            sign = -sign
        piv = m[c][c]
        for i in range(c + 1, n):
            fi = m[i][c]
            for j in range(c, n):
                q, rem = divmod(piv * m[i][j] - fi * m[c][j], prev)
                if rem:
                    raise LinearAlgebraError("fraction-free division failed")
                m[i][j] = q
        prev = piv
    return sign * scale * Fraction(m[n - 1][n - 1])


# ---------------------------------------------------------------------------
# univariate polynomials over the rationals, ascending coefficients
# ---------------------------------------------------------------------------

POLY_ZERO: tuple = ()


def poly_trim(coeffs: Iterable[Fraction]) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_const(v) -> tuple:
    v = rat(v)
    return (v,) if v != 0 else POLY_ZERO


def poly_deg(p) -> int:
    """Degree; the zero polynomial gets -1."""
    return len(p) - 1


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_sub(p, q):
    return poly_add(p, poly_scale(-ONE, q))


def poly_scale(c, p):
    c = rat(c)
    if c == 0:
        return POLY_ZERO
    return tuple(c * a for a in p)


def poly_mul(p, q):
    if not p or not q:
        return POLY_ZERO
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_shift(p, k: int):
    """Multiply by z**k."""
    if not p:
        return POLY_ZERO
    return (ZERO,) * k + tuple(p)


def poly_eval(p, x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def interpolate(samples: Sequence[tuple[Fraction, Fraction]], degree_bound: int) -> tuple:
    """Unique polynomial of degree <= degree_bound through the samples.

    Requires at least degree_bound + 2 distinct points; the points beyond the
    first degree_bound + 1 act as consistency checks and must re-validate.
    """
    xs = [s[0] for s in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    need = degree_bound + 2
    if len(samples) < need:
        raise ValueError(
            "need at least %d samples for degree bound %d" % (need, degree_bound)
        )
    base = samples[: degree_bound + 1]
    # Newton divided differences, expanded to the monomial basis
    n = len(base)
    coef = [y for _, y in base]
    pts = [x for x, _ in base]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (pts[i] - pts[i - j])
    poly = POLY_ZERO
    basis = (ONE,)
    for i in range(n):
        poly = poly_add(poly, poly_scale(coef[i], basis))
        basis = poly_mul(basis, (-pts[i], ONE))
    for x, y in samples[degree_bound + 1:]:
        if poly_eval(poly, x) != y:
            raise InterpolationError(
                "samples are not polynomial of degree <= %d" % degree_bound
            )
    return poly


# ---------------------------------------------------------------------------
# matrix polynomials in z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixPoly:
    """n x n matrix with polynomial entries in z; optionally tagged with the
    block split e + d = n used by the shaped spaces of the cuspidal pipeline."""

    n: int
    entries: tuple  # n x n nested tuple of Poly tuples
    block_split: tuple[int, int] | None = None

    def __post_init__(self):
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ValueError("entries must be an n x n grid of polynomials")
        if self.block_split is not None:
            e, d = self.block_split
            if e + d != self.n:
                raise ValueError("block split %r does not sum to n=%d" % (self.block_split, self.n))

    def coeff_matrix(self, k: int) -> tuple:
        """Matrix of z**k coefficients."""
        return tuple(
            tuple(p[k] if k < len(p) else ZERO for p in row) for row in self.entries
        )

    def degree(self) -> int:
        return max((poly_deg(p) for row in self.entries for p in row), default=-1)

    def add(self, other: "MatrixPoly") -> "MatrixPoly":
        if self.n != other.n:
            raise ValueError("size mismatch")
        return MatrixPoly(
            self.n,
            tuple(
                tuple(poly_add(p, q) for p, q in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
            self.block_split,
        )

    def sub(self, other: "MatrixPoly") -> "MatrixPoly":
        return self.add(other.scale(-ONE))

    def scale(self, c) -> "MatrixPoly":
        return MatrixPoly(
            self.n,
            tuple(tuple(poly_scale(c, p) for p in row) for row in self.entries),
            self.block_split,
        )

    def is_zero(self) -> bool:
        return all(not p for row in self.entries for p in row)


def matrix_poly_from_coeffs(coeff_mats: Sequence, block_split=None) -> MatrixPoly:
    """Build from a list of constant matrices, index = power of z."""
    n = len(coeff_mats[0])
    entries = tuple(
        tuple(
            poly_trim([coeff_mats[k][i][j] for k in range(len(coeff_mats))])
            for j in range(n)
        )
        for i in range(n)
    )
    return MatrixPoly(n, entries, block_split)


def constant_matrix_poly(mat, block_split=None) -> MatrixPoly:
    return matrix_poly_from_coeffs([mat], block_split)


def eval_matrix_poly(F: MatrixPoly, x: Fraction) -> tuple:
    """Entry-wise evaluation at z = x."""
    x = rat(x)
    return tuple(tuple(poly_eval(p, x) for p in row) for row in F.entries)


# ---------------------------------------------------------------------------
# cyclotomic rationals Q(zeta_m), used for exact root-of-unity arithmetic
# ---------------------------------------------------------------------------

def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (ascending), den monic-led."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        q, r = divmod(num[i + len(den) - 1], den[-1])
        if r != 0:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(c != 0 for c in num):
        raise ArithmeticError("non-exact polynomial division")
    return out


def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Integer coefficients (ascending) of the m-th cyclotomic polynomial."""
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    for dd in range(1, m):
        if m % dd == 0:
            num = _int_poly_divexact(num, list(cyclotomic_poly(dd)))
    return tuple(num)


@dataclass(frozen=True)
class Cyclo:
    """Element of Q(zeta_m) reduced mod the m-th cyclotomic polynomial."""

    m: int
    coeffs: tuple  # Fractions, length = deg(Phi_m)

    @staticmethod
    def zero(m: int) -> "Cyclo":
        deg = len(cyclotomic_poly(m)) - 1
        return Cyclo(m, (ZERO,) * deg)

    @staticmethod
    def from_rat(m: int, v) -> "Cyclo":
        deg = len(cyclotomic_poly(m)) - 1
        return Cyclo(m, (rat(v),) + (ZERO,) * (deg - 1))

    @staticmethod
    def zeta_pow(m: int, k: int) -> "Cyclo":
        """zeta_m ** k, reduced."""
        k %= m
        phi = cyclotomic_poly(m)
        deg = len(phi) - 1
        work = [ZERO] * (k + 1)
        work[k] = ONE
        return Cyclo(m, Cyclo._reduce(work, phi, deg))

    @staticmethod
    def _reduce(work: list, phi: tuple, deg: int) -> tuple:
        for i in range(len(work) - 1, deg - 1, -1):
            c = work[i]
            if c == 0:
                continue
            work[i] = ZERO
            for j in range(deg):
                work[i - deg + j] -= c * phi[j]
        out = work[:deg]
        out += [ZERO] * (deg - len(out))
        return tuple(out)

    def __add__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(self.m, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cyclo") -> "Cyclo":
        return Cyclo(self.m, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Cyclo":
        return Cyclo(self.m, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.m, tuple(a * other for a in self.coeffs))
        phi = cyclotomic_poly(self.m)
        deg = len(phi) - 1
        work = [ZERO] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                work[i + j] += a * b
        return Cyclo(self.m, Cyclo._reduce(work, phi, deg))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def as_rational(self) -> Fraction | None:
        """The value as a Fraction if it lies in Q, else None."""
        if all(c == 0 for c in self.coeffs[1:]):
            return self.coeffs[0]
        return None

    def to_complex(self) -> complex:
        z = math.tau / self.m
        return sum(
            float(c) * complex(math.cos(z * k), math.sin(z * k))
            for k, c in enumerate(self.coeffs)
        )

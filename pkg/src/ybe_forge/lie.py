"""Basis-indexed exact tensor algebra on gl(n)/sl(n).

Tensors are stored over the matrix-unit basis of gl(n) (x) gl(n) even though
the solutions live in sl(n) (x) sl(n); sl-membership is a checkable predicate,
not a storage constraint.  The CYBE embedding conventions (which slot carries
the bracket) are fixed here once and nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .exact import (
    ONE,
    ZERO,
    Cyclo,
    mat_from_entries,
    mat_unit,
    mat_zero,
    rank,
    solve_multi,
)

RATIONAL = "rational"
COMPLEX = "complex"

# basis labels: ("unit", i, j) for e_{i,j} with i != j, ("cartan", l) for h_l
BasisIndex = tuple


def sl_basis(n: int) -> tuple[BasisIndex, ...]:
    """Ordered basis of sl(n): h_1..h_{n-1} then the off-diagonal units."""
    labels = [("cartan", l) for l in range(1, n)]
    labels += [("unit", i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    return tuple(labels)


def basis_matrix(label: BasisIndex, n: int):
    """The matrix of a basis label: e_{i,j} or h_l = e_{l,l} - e_{l+1,l+1}."""
    if label[0] == "unit":
        _, i, j = label
        return mat_unit(n, i, j)
    _, l = label
    if not 1 <= l <= n - 1:
        raise ValueError("cartan index out of range: %d" % l)
    return mat_from_entries(n, {(l, l): ONE, (l + 1, l + 1): -ONE})


def trace_form(a, b) -> Fraction:
    """tr(a b); the invariant symmetric pairing everything here is dual to."""
    if len(a) != len(b):
        raise ValueError("trace form needs equal sizes")
    n = len(a)
    return sum(a[i][j] * b[j][i] for i in range(n) for j in range(n))


@lru_cache(maxsize=None)
def _cartan_duals(n: int) -> tuple:
    """All dual Cartan elements at once, from the Gram system of the h_l."""
    hs = [basis_matrix(("cartan", l), n) for l in range(1, n)]
    gram = [[trace_form(a, b) for b in hs] for a in hs]
    rhs = [[ONE if k == l else ZERO for k in range(n - 1)] for l in range(n - 1)]
    sols = solve_multi(gram, rhs)
    duals = []
    for coeffs in sols:
        m = mat_zero(n)
        for c, h in zip(coeffs, hs):
            m = tuple(tuple(x + c * y for x, y in zip(r1, r2)) for r1, r2 in zip(m, h))
        duals.append(m)
    return tuple(duals)


def cartan_dual(l: int, n: int):
    """The unique Cartan element with tr(dual * h_m) = delta_{l m}."""
    if not 1 <= l <= n - 1:
        raise ValueError("cartan index out of range: %d for n=%d" % (l, n))
    return _cartan_duals(n)[l - 1]


def dual_matrix(label: BasisIndex, n: int):
    """Trace-form dual of a basis element: e_{i,j} -> e_{j,i}, h_l -> its dual."""
    if label[0] == "unit":
        _, i, j = label
        return mat_unit(n, j, i)
    return cartan_dual(label[1], n)


# ---------------------------------------------------------------------------
# sparse tensors over the unit basis
# ---------------------------------------------------------------------------

def _accumulate(store: dict, key, value):
    acc = store.get(key)
    acc = value if acc is None else acc + value
    if acc == 0:
        store.pop(key, None)
    else:
        store[key] = acc


@dataclass(frozen=True)
class GlTensor2:
    """Sparse element of gl(n) (x) gl(n): terms[(i,j,k,l)] is the coefficient
    of e_{i,j} (x) e_{k,l} (1-based indices)."""

    n: int
    ring: str
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.ring not in (RATIONAL, COMPLEX):
            raise ValueError("unknown scalar ring %r" % self.ring)

    def __eq__(self, other):
        return (
            isinstance(other, GlTensor2)
            and self.n == other.n
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def norm(self) -> float:
        """Max coefficient magnitude."""
        return max((abs(v) for v in self.terms.values()), default=0.0)

    def add(self, other: "GlTensor2") -> "GlTensor2":
        self._check_compatible(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return GlTensor2(self.n, self.ring, out)

    def sub(self, other: "GlTensor2") -> "GlTensor2":
        return self.add(other.scale(-1))

    def scale(self, c) -> "GlTensor2":
        if c == 0:
            return GlTensor2(self.n, self.ring, {})
        return GlTensor2(self.n, self.ring, {k: c * v for k, v in self.terms.items()})

    def _check_compatible(self, other):
        if self.n != other.n:
            raise ValueError("tensor size mismatch: %d vs %d" % (self.n, other.n))
        if self.ring != other.ring:
            raise ValueError("scalar ring mismatch: %s vs %s" % (self.ring, other.ring))

    def to_complex(self) -> "GlTensor2":
        if self.ring == COMPLEX:
            return self
        return GlTensor2(self.n, COMPLEX, {k: complex(v) for k, v in self.terms.items()})


@dataclass(frozen=True)
class GlTensor3:
    """Sparse element of gl(n) (x) gl(n) (x) gl(n), keyed by six indices."""

    n: int
    ring: str
    terms: dict = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms

    def norm(self) -> float:
        return max((abs(v) for v in self.terms.values()), default=0.0)


def tensor_zero(n: int, ring: str = RATIONAL) -> GlTensor2:
    return GlTensor2(n, ring, {})


def tensor_from_pairs(n: int, pairs, ring: str = RATIONAL) -> GlTensor2:
    """Sum of coeff * (A (x) B) over (A, B, coeff) triples of matrices."""
    out: dict = {}
    for a, b, c in pairs:
        if c == 0:
            continue
        for i in range(n):
            for j in range(n):
                aij = a[i][j]
                if aij == 0:
                    continue
                ca = c * aij
                for k in range(n):
                    for l in range(n):
                        bkl = b[k][l]
                        if bkl == 0:
                            continue
                        _accumulate(out, (i + 1, j + 1, k + 1, l + 1), ca * bkl)
    return GlTensor2(n, ring, out)


def swap_tensor(r: GlTensor2) -> GlTensor2:
    """The flip a (x) b -> b (x) a, extended linearly."""
    return GlTensor2(r.n, r.ring, {(k, l, i, j): v for (i, j, k, l), v in r.terms.items()})


@lru_cache(maxsize=None)
def casimir(n: int) -> GlTensor2:
    """Casimir element of sl(n) for the trace form:
    sum of e_{i,j} (x) e_{j,i} over i != j plus the dual-Cartan part."""
    if n < 2:
        raise ValueError("need n >= 2")
    terms: dict = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                terms[(i, j, j, i)] = ONE
    for l in range(1, n):
        dual = cartan_dual(l, n)
        for a in range(1, n + 1):
            v = dual[a - 1][a - 1]
            if v == 0:
                continue
            _accumulate(terms, (a, a, l, l), v)
            _accumulate(terms, (a, a, l + 1, l + 1), -v)
    return GlTensor2(n, RATIONAL, terms)


def contract_first(r: GlTensor2, a) -> tuple:
    """Image of `a` under the endomorphism induced by r through the trace
    pairing in the first slot: a |-> sum tr(e_{i,j} a) coeff e_{k,l}."""
    n = r.n
    acc = [[0 if r.ring == COMPLEX else ZERO] * n for _ in range(n)]
    for (i, j, k, l), c in r.terms.items():
        v = a[j - 1][i - 1]
        if v:
            acc[k - 1][l - 1] += c * v
    return tuple(tuple(row) for row in acc)


def induced_endomorphism_rank(r: GlTensor2) -> int:
    """Rank of the induced map gl(n) -> gl(n) in unit-basis coordinates."""
    n = r.n
    rows = [[ZERO] * (n * n) for _ in range(n * n)]
    for (i, j, k, l), c in r.terms.items():
        # contributes to output coord (k,l) from input coord (j,i)
        rows[(k - 1) * n + (l - 1)][(j - 1) * n + (i - 1)] += c
    if r.ring == COMPLEX:
        return int(np.linalg.matrix_rank(np.array(rows, dtype=complex), tol=1e-9))
    return rank(rows)


def nondegenerate(r: GlTensor2) -> bool:
    """True iff the induced map sl(n) -> sl(n) is invertible."""
    return induced_endomorphism_rank(r) >= r.n * r.n - 1


def partial_traces_vanish(r: GlTensor2) -> bool:
    """sl-membership predicate: both partial traces of the tensor are zero."""
    n = r.n
    first: dict = {}
    second: dict = {}
    for (i, j, k, l), c in r.terms.items():
        if i == j:
            _accumulate(first, (k, l), c)
        if k == l:
            _accumulate(second, (i, j), c)
    return not first and not second


# ---------------------------------------------------------------------------
# the CYBE left-hand side
# ---------------------------------------------------------------------------

def _dense(r: GlTensor2, scale=None):
    n = r.n
    if r.ring == COMPLEX:
        a = np.zeros((n, n, n, n), dtype=complex)
        for (i, j, k, l), c in r.terms.items():
            a[i - 1, j - 1, k - 1, l - 1] = c
        return a
    a = np.zeros((n, n, n, n), dtype=object)
    for (i, j, k, l), c in r.terms.items():
        v = c * scale
        if v.denominator != 1:
            raise AssertionError("scaling did not clear denominators")
        a[i - 1, j - 1, k - 1, l - 1] = v.numerator
    return a


def _common_denominator(tensors) -> Fraction:
    den = 1
    for t in tensors:
        for v in t.terms.values():
            den = den * v.denominator // gcd(den, v.denominator)
    return Fraction(den)


def cybe_lhs(r12: GlTensor2, r13: GlTensor2, r23: GlTensor2) -> GlTensor3:
    """[r12, r13] + [r13, r23] + [r12, r23] in gl(n)^(x3).

    Inputs are the three pairwise evaluations of a candidate solution.  Each
    commutator acts in the shared slot and multiplies nothing in the others.
    Slot conventions are fixed here; no other module re-implements them.
    """
    r12._check_compatible(r13)
    r12._check_compatible(r23)
    n = r12.n
    ring = r12.ring
    if ring == RATIONAL:
        scale = _common_denominator((r12, r13, r23))
        a12, a13, a23 = (_dense(t, scale) for t in (r12, r13, r23))
    else:
        a12, a13, a23 = (_dense(t) for t in (r12, r13, r23))

    def td(x, y, axes):
        return np.tensordot(x, y, axes=axes)

    # [r12, r13]: bracket in slot 1
    total = td(a12, a13, ([1], [0])).transpose(0, 3, 1, 2, 4, 5)
    total = total - td(a12, a13, ([0], [1])).transpose(3, 0, 1, 2, 4, 5)
    # [r13, r23]: bracket in slot 3
    total = total + td(a13, a23, ([3], [2])).transpose(0, 1, 3, 4, 2, 5)
    total = total - td(a13, a23, ([2], [3])).transpose(0, 1, 3, 4, 5, 2)
    # [r12, r23]: bracket in slot 2
    total = total + td(a12, a23, ([3], [0]))
    total = total - td(a12, a23, ([2], [1])).transpose(0, 1, 3, 2, 4, 5)

    terms: dict = {}
    nz = np.nonzero(total)
    if ring == RATIONAL:
        s2 = scale * scale
        for idx in zip(*nz):
            terms[tuple(int(x) + 1 for x in idx)] = Fraction(int(total[idx])) / s2
    else:
        for idx in zip(*nz):
            terms[tuple(int(x) + 1 for x in idx)] = complex(total[idx])
    return GlTensor3(n, ring, terms)


def cybe_residual_two_variable(r_of, points, ring: str = RATIONAL) -> GlTensor3:
    """CYBE left-hand side for a two-variable solution r(x, y) at a triple of
    spectral points: r12 = r(x1,x2), r13 = r(x1,x3), r23 = r(x2,x3)."""
    x1, x2, x3 = points
    return cybe_lhs(r_of(x1, x2), r_of(x1, x3), r_of(x2, x3))


def cybe_residual_difference(r_of, x, y) -> GlTensor3:
    """CYBE left-hand side in the one-variable (difference) form:
    [r12(x), r13(x+y)] + [r13(x+y), r23(y)] + [r12(x), r23(y)]."""
    return cybe_lhs(r_of(x), r_of(x + y), r_of(y))


def is_unitary_pair(r_xy: GlTensor2, r_yx: GlTensor2) -> bool:
    """Exact check of r(y,x) = -swap(r(x,y))."""
    return r_yx == swap_tensor(r_xy).scale(-1)


# ---------------------------------------------------------------------------
# constant gauge transformations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearMapGl:
    """Linear endomorphism of gl(n), stored by its images of the unit basis:
    images[(i,j)] = matrix of the image of e_{i,j}."""

    n: int
    images: dict

    def apply(self, m):
        n = self.n
        acc = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                v = m[i][j]
                if v == 0:
                    continue
                img = self.images[(i + 1, j + 1)]
                for a in range(n):
                    row = img[a]
                    for b in range(n):
                        if row[b]:
                            acc[a][b] += v * row[b]
        return tuple(tuple(row) for row in acc)

    def compose(self, other: "LinearMapGl") -> "LinearMapGl":
        """self after other."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        images = {
            key: self.apply(img) for key, img in other.images.items()
        }
        return LinearMapGl(self.n, images)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMapGl)
            and self.n == other.n
            and self.images == other.images
        )


def identity_map(n: int) -> LinearMapGl:
    return LinearMapGl(
        n, {(i, j): mat_unit(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    )


def transpose_negate_map(n: int) -> LinearMapGl:
    """A |-> -A^t, the involutive automorphism relating the two rational
    pipelines."""
    return LinearMapGl(
        n,
        {
            (i, j): mat_from_entries(n, {(j, i): -ONE})
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        },
    )


def flip_map(n: int) -> LinearMapGl:
    """e_{i,j} |-> e_{n+1-i, n+1-j}, conjugation by the antidiagonal."""
    return LinearMapGl(
        n,
        {
            (i, j): mat_unit(n, n + 1 - i, n + 1 - j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
        },
    )


def apply_gauge(phi: LinearMapGl, psi: LinearMapGl, r: GlTensor2) -> GlTensor2:
    """(phi (x) psi) applied coefficient-wise."""
    if phi.n != r.n or psi.n != r.n:
        raise ValueError("gauge size mismatch")
    out: dict = {}
    for (i, j, k, l), c in r.terms.items():
        img1 = phi.images[(i, j)]
        img2 = psi.images[(k, l)]
        for a in range(r.n):
            for b in range(r.n):
                v1 = img1[a][b]
                if v1 == 0:
                    continue
                cv = c * v1
                for p in range(r.n):
                    for q in range(r.n):
                        v2 = img2[p][q]
                        if v2 == 0:
                            continue
                        _accumulate(out, (a + 1, b + 1, p + 1, q + 1), cv * v2)
    return GlTensor2(r.n, r.ring, out)


# ---------------------------------------------------------------------------
# the finite Heisenberg pair and its eigenbasis of sl(n)
# ---------------------------------------------------------------------------

def _cyclo_mat_mul(a, b, m: int):
    n = len(a)
    zero = Cyclo.zero(m)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def _cyclo_mat_eq(a, b) -> bool:
    return all(
        (x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


@dataclass(frozen=True)
class HeisenbergBasis:
    """The clock-and-shift pair (X, Y) for epsilon = exp(2 pi i d / n) with the
    eigenfamilies Z_{k,l} = Y^k X^{-l} and their trace duals, exact over the
    cyclotomic field Q(zeta_n)."""

    n: int
    d: int
    X: tuple
    Y: tuple
    index_set: tuple
    Z: dict
    Z_dual: dict

    def z_complex(self, k: int, l: int):
        return tuple(tuple(c.to_complex() for c in row) for row in self.Z[(k, l)])

    def z_dual_complex(self, k: int, l: int):
        return tuple(
            tuple(c.to_complex() for c in row) for row in self.Z_dual[(k, l)]
        )


@lru_cache(maxsize=None)
def heisenberg(n: int, d: int) -> HeisenbergBasis:
    """Construct and validate the Heisenberg eigenbasis of sl(n).

    Validates the conjugation-eigenvalue relations and the full trace-duality
    table at construction; a failure means a non-coprime pair or a bug.
    """
    if gcd(n, d) != 1 or not 0 < d < n:
        raise ValueError("need coprime 0 < d < n, got (%d, %d)" % (n, d))

    def eps_pow(p: int) -> Cyclo:
        return Cyclo.zeta_pow(n, d * p)

    zero = Cyclo.zero(n)
    X = tuple(
        tuple(eps_pow(i) if i == j else zero for j in range(n)) for i in range(n)
    )
    Y = tuple(
        tuple(Cyclo.from_rat(n, 1) if j == (i + 1) % n else zero for j in range(n))
        for i in range(n)
    )
    index_set = tuple(
        (k, l) for k in range(n) for l in range(n) if (k, l) != (0, 0)
    )
    Z = {}
    Zd = {}
    inv_n = Fraction(1, n)
    for (k, l) in index_set:
        Z[(k, l)] = tuple(
            tuple(
                eps_pow(-l * j) if j == (i + k) % n else zero for j in range(n)
            )
            for i in range(n)
        )
        Zd[(k, l)] = tuple(
            tuple(
                inv_n * eps_pow(l * i) if j == (i - k) % n else zero
                for j in range(n)
            )
            for i in range(n)
        )

    # eigenvalue relations: conjugating Z_{k,l} through X scales by eps^k,
    # through Y by eps^l
    Xinv = tuple(
        tuple(eps_pow(-i) if i == j else zero for j in range(n)) for i in range(n)
    )
    Yinv = tuple(
        tuple(Cyclo.from_rat(n, 1) if j == (i - 1) % n else zero for j in range(n))
        for i in range(n)
    )
    for (k, l) in index_set:
        zkl = Z[(k, l)]
        lhs = _cyclo_mat_mul(_cyclo_mat_mul(Xinv, zkl, n), X, n)
        rhs = tuple(tuple(eps_pow(k) * x for x in row) for row in zkl)
        if not _cyclo_mat_eq(lhs, rhs):
            raise AssertionError("clock conjugation relation failed at %r" % ((k, l),))
        lhs = _cyclo_mat_mul(_cyclo_mat_mul(Yinv, zkl, n), Y, n)
        rhs = tuple(tuple(eps_pow(l) * x for x in row) for row in zkl)
        if not _cyclo_mat_eq(lhs, rhs):
            raise AssertionError("shift conjugation relation failed at %r" % ((k, l),))

    # duality table: tr(Z^dual_{k,l} Z_{k',l'}) = delta delta
    for (k, l) in index_set:
        for (k2, l2) in index_set:
            prod = _cyclo_mat_mul(Zd[(k, l)], Z[(k2, l2)], n)
            tr = zero
            for i in range(n):
                tr = tr + prod[i][i]
            want = ONE if (k, l) == (k2, l2) else ZERO
            if tr.as_rational() != want:
                raise AssertionError("duality table failed at %r, %r" % ((k, l), (k2, l2)))

    return HeisenbergBasis(n, d, X, Y, index_set, Z, Zd)


def heisenberg_casimir(n: int, d: int) -> GlTensor2:
    """Sum of Z^dual (x) Z over the index set, as an exact rational tensor.

    Every unit-basis coefficient of the sum must be rational; this is the
    reproducing-kernel tensor and equals casimir(n)."""
    hb = heisenberg(n, d)
    acc: dict = {}
    for (k, l) in hb.index_set:
        zd = hb.Z_dual[(k, l)]
        z = hb.Z[(k, l)]
        for i in range(n):
            for j in range(n):
                a = zd[i][j]
                if a.is_zero():
                    continue
                for p in range(n):
                    for q in range(n):
                        b = z[p][q]
                        if b.is_zero():
                            continue
                        key = (i + 1, j + 1, p + 1, q + 1)
                        cur = acc.get(key)
                        acc[key] = a * b if cur is None else cur + a * b
    terms = {}
    for key, v in acc.items():
        vr = v.as_rational()
        if vr is None:
            raise AssertionError("non-rational coefficient in Heisenberg Casimir")
        if vr != 0:
            terms[key] = vr
    return GlTensor2(n, RATIONAL, terms)


__all__ = [
    "BasisIndex",
    "COMPLEX",
    "GlTensor2",
    "GlTensor3",
    "HeisenbergBasis",
    "LinearMapGl",
    "RATIONAL",
    "apply_gauge",
    "basis_matrix",
    "cartan_dual",
    "casimir",
    "contract_first",
    "cybe_lhs",
    "cybe_residual_difference",
    "cybe_residual_two_variable",
    "dual_matrix",
    "flip_map",
    "heisenberg",
    "heisenberg_casimir",
    "identity_map",
    "is_unitary_pair",
    "nondegenerate",
    "partial_traces_vanish",
    "sl_basis",
    "swap_tensor",
    "tensor_from_pairs",
    "tensor_zero",
    "trace_form",
    "transpose_negate_map",
]

"""Rational r-matrices from the geometric pipeline on the cuspidal cubic.

The construction is driven by a 0/1 matrix J built by a Euclidean recursion
from the coprime pair (e, d), a shaped space V_{e,d} of matrix polynomials in
z, and its subspace Sol((e, d), x) cut out by [F_0, J] + x F_0 + F_eps = 0.
Evaluation maps res/ev through Sol produce the tensor, whose pole part is
always the Casimir element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exact import (
    MatrixPoly,
    ONE,
    ZERO,
    constant_matrix_poly,
    eval_matrix_poly,
    interpolate,
    kernel,
    mat_is_zero,
    matrix_poly_from_coeffs,
    rat,
    solve_multi,
)
from .lie import (
    GlTensor2,
    RATIONAL,
    apply_gauge,
    basis_matrix,
    casimir,
    dual_matrix,
    sl_basis,
    tensor_from_pairs,
)


class NonCoprimeError(ValueError):
    """The pair (e, d) must be coprime positive integers."""


class ShapeError(ValueError):
    """A matrix polynomial violates the V_{e,d} degree mask."""


class SolDimensionError(RuntimeError):
    """dim Sol((e,d), x) != n^2 - 1; downstream formulas would be meaningless."""


class AnsatzError(RuntimeError):
    """The polynomial-plus-Casimir-pole Ansatz failed to certify."""


def _check_coprime(e: int, d: int):
    if e < 1 or d < 1 or gcd(e, d) != 1:
        raise NonCoprimeError("need coprime positive integers, got (%d, %d)" % (e, d))


@dataclass(frozen=True)
class JMatrix:
    """The 0/1 matrix attached to a coprime pair (e, d), block-upper-triangular
    with respect to the split e + d."""

    e: int
    d: int
    matrix: tuple

    @property
    def n(self) -> int:
        return self.e + self.d


@lru_cache(maxsize=None)
def build_j(e: int, d: int) -> JMatrix:
    """The recursively defined matrix J_(e,d).

    Descend (e,d) -> ... -> (1,1) by the Euclidean step, then extend back up
    with the two block rules (identity block on top for growth on the left,
    identity block on the right for growth on the right).
    """
    _check_coprime(e, d)
    path = [(e, d)]
    while path[-1] != (1, 1):
        a, b = path[-1]
        path.append((a - b, b) if a > b else (a, b - a))
    mat = [[0, 1], [0, 0]]
    for (p, q) in reversed(path[:-1]):
        a, b = (p - q, q) if p > q else (p, q - p)
        size = a + b
        if p == a:  # grew on the right: q = a + b
            new = [[0] * (p + q) for _ in range(p + q)]
            for i in range(a):
                new[i][a + i] = 1
            for i in range(size):
                for j in range(size):
                    new[a + i][a + j] = mat[i][j]
        else:  # q == b, grew on the left: p = a + b
            new = [[0] * (p + q) for _ in range(p + q)]
            for i in range(size):
                for j in range(size):
                    new[i][j] = mat[i][j]
            for i in range(b):
                new[a + i][size + i] = 1
        mat = new
    return JMatrix(e, d, tuple(tuple(row) for row in mat))


def flip_j(j: JMatrix) -> tuple:
    """Index-reversal of J in the form it enters the pairing tr(J^t [a,b]):
    the transpose along the antidiagonal, position (i,j) -> (n+1-j, n+1-i).
    This is the map under which J_(e,d) goes to J_(d,e); reversing both
    indices without the transpose does not (already false for (1,1))."""
    n = j.n
    m = j.matrix
    return tuple(
        tuple(m[n - 1 - c][n - 1 - r] for c in range(n)) for r in range(n)
    )


def j_support_coloring(e: int, d: int) -> tuple[int, ...]:
    """Signs s_1..s_n with s_i s_j = -1 on every unit entry (i,j) of J_(e,d).

    The support of J is a forest (each recursion step attaches a matching to
    fresh indices), so the 2-coloring always exists; components start at +1.
    """
    n = e + d
    J = build_j(e, d).matrix
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for i in range(n):
        for jj in range(n):
            if J[i][jj]:
                adj[i].append(jj)
                adj[jj].append(i)
    s = [0] * n
    for v in range(n):
        if s[v]:
            continue
        s[v] = 1
        stack = [v]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if s[w] == 0:
                    s[w] = -s[u]
                    stack.append(w)
                elif s[w] != -s[u]:
                    raise RuntimeError("J support graph is not 2-colorable")
    return tuple(s)


def region(i: int, j: int, e: int, n: int) -> str:
    """Quadrant of the (i, j) entry for the split e + (n - e):
    upper-left IV, upper-right I, lower-left III, lower-right II."""
    if i <= e:
        return "IV" if j <= e else "I"
    return "III" if j <= e else "II"


# degree caps of the shaped space: constant e x d upper-right block, linear
# diagonal blocks, quadratic d x e lower-left block
def _degree_cap(i: int, j: int, e: int, n: int) -> int:
    reg = region(i, j, e, n)
    if reg == "I":
        return 0
    if reg == "III":
        return 2
    return 1


def ved_matrix_poly(e: int, d: int, coeff_mats) -> MatrixPoly:
    """Member of V_{e,d} from constant/linear/quadratic coefficient matrices.

    Raises ShapeError on a degree-mask violation or if the constant or linear
    part fails to be traceless.
    """
    _check_coprime(e, d)
    n = e + d
    F = matrix_poly_from_coeffs(coeff_mats, block_split=(e, d))
    validate_ved_shape(F, e, d)
    return F


def validate_ved_shape(F: MatrixPoly, e: int, d: int):
    n = e + d
    if F.n != n:
        raise ShapeError("size mismatch: %d vs %d" % (F.n, n))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            p = F.entries[i - 1][j - 1]
            if len(p) - 1 > _degree_cap(i, j, e, n):
                raise ShapeError(
                    "degree %d exceeds cap at entry (%d, %d) in region %s"
                    % (len(p) - 1, i, j, region(i, j, e, n))
                )
    for k in (0, 1):
        tr = sum(
            (F.entries[a][a][k] if k < len(F.entries[a][a]) else ZERO)
            for a in range(n)
        )
        if tr != 0:
            raise ShapeError("z^%d part has nonzero trace" % k)


def extract_f0_feps(F: MatrixPoly) -> tuple[tuple, tuple]:
    """The two constant matrices read off the blocks of F in V_{e,d}:
    F_0 collects the linear diagonal parts, the constant upper-right block and
    the quadratic lower-left block; F_eps the constant diagonal parts and the
    linear lower-left block.  The constant lower-left block enters neither."""
    if F.block_split is None:
        raise ShapeError("matrix polynomial carries no block split")
    e, d = F.block_split
    n = F.n
    validate_ved_shape(F, e, d)
    f0 = [[ZERO] * n for _ in range(n)]
    feps = [[ZERO] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            p = F.entries[i - 1][j - 1]

            def coeff(k):
                return p[k] if k < len(p) else ZERO

            reg = region(i, j, e, n)
            if reg in ("IV", "II"):
                f0[i - 1][j - 1] = coeff(1)
                feps[i - 1][j - 1] = coeff(0)
            elif reg == "I":
                f0[i - 1][j - 1] = coeff(0)
            else:  # III
                f0[i - 1][j - 1] = coeff(2)
                feps[i - 1][j - 1] = coeff(1)
    return tuple(map(tuple, f0)), tuple(map(tuple, feps))


# coordinates of V_{e,d}: every (i, j, degree) allowed by the mask
@lru_cache(maxsize=None)
def _ved_coords(e: int, d: int) -> tuple:
    n = e + d
    return tuple(
        (i, j, k)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        for k in range(_degree_cap(i, j, e, n) + 1)
    )


def _coords_to_matrix_poly(e: int, d: int, vec) -> MatrixPoly:
    n = e + d
    coeffs = [[[ZERO] * n for _ in range(n)] for _ in range(3)]
    for (i, j, k), v in zip(_ved_coords(e, d), vec):
        coeffs[k][i - 1][j - 1] = v
    mats = [tuple(map(tuple, c)) for c in coeffs]
    return matrix_poly_from_coeffs(mats, block_split=(e, d))


@dataclass(frozen=True)
class SolBasis:
    """Exact basis of Sol((e,d), x) inside V_{e,d}; always n^2 - 1 members."""

    e: int
    d: int
    x: Fraction
    basis: tuple  # of MatrixPoly

    @property
    def n(self) -> int:
        return self.e + self.d


def sol_constraint_violation(F: MatrixPoly, x: Fraction) -> tuple:
    """[F_0, J] + x F_0 + F_eps as a matrix; zero iff F solves the constraint."""
    e, d = F.block_split
    J = build_j(e, d).matrix
    f0, feps = extract_f0_feps(F)
    n = F.n
    out = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            acc = x * f0[a][b] + feps[a][b]
            for c in range(n):
                acc += f0[a][c] * J[c][b] - J[a][c] * f0[c][b]
            out[a][b] = acc
    return tuple(map(tuple, out))


@lru_cache(maxsize=None)
def sol_space(e: int, d: int, x: Fraction) -> SolBasis:
    """Kernel of the defining constraint inside V_{e,d}.

    Aborts hard if the dimension differs from n^2 - 1: every downstream
    formula assumes the residue map is an isomorphism onto sl(n).
    """
    _check_coprime(e, d)
    x = rat(x)
    n = e + d
    coords = _ved_coords(e, d)
    J = build_j(e, d).matrix

    # index the F_0 / F_eps content of each coordinate
    f0_of = {}
    feps_of = {}
    for idx, (i, j, k) in enumerate(coords):
        reg = region(i, j, e, n)
        if reg in ("IV", "II"):
            if k == 1:
                f0_of[idx] = (i, j)
            else:
                feps_of[idx] = (i, j)
        elif reg == "I":
            f0_of[idx] = (i, j)
        else:
            if k == 2:
                f0_of[idx] = (i, j)
            elif k == 1:
                feps_of[idx] = (i, j)

    rows = []
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            row = [ZERO] * len(coords)
            for idx in range(len(coords)):
                pos = f0_of.get(idx)
                if pos is not None:
                    i, j = pos
                    acc = ZERO
                    if (i, j) == (a, b):
                        acc += x
                    if i == a:
                        acc += J[j - 1][b - 1]
                    if j == b:
                        acc -= J[a - 1][i - 1]
                    if acc != 0:
                        row[idx] = acc
                pos = feps_of.get(idx)
                if pos == (a, b):
                    row[idx] += ONE
            rows.append(row)
    for k in (0, 1):
        row = [ZERO] * len(coords)
        for idx, (i, j, kk) in enumerate(coords):
            if i == j and kk == k:
                row[idx] = ONE
        rows.append(row)

    vecs = kernel(rows)
    if len(vecs) != n * n - 1:
        raise SolDimensionError(
            "dim Sol((%d,%d), %s) = %d, expected %d"
            % (e, d, x, len(vecs), n * n - 1)
        )
    basis = tuple(_coords_to_matrix_poly(e, d, v) for v in vecs)
    for F in basis:
        if not mat_is_zero(sol_constraint_violation(F, x)):
            raise SolDimensionError("kernel member fails the defining constraint")
    return SolBasis(e, d, x, basis)


def res_map(F: MatrixPoly, x) -> tuple:
    """F(x)."""
    return eval_matrix_poly(F, rat(x))


def ev_map(F: MatrixPoly, x, y) -> tuple:
    """F(y) / (y - x)."""
    x, y = rat(x), rat(y)
    if x == y:
        raise ValueError("evaluation point must differ from the residue point")
    inv = ONE / (y - x)
    val = eval_matrix_poly(F, y)
    return tuple(tuple(inv * v for v in row) for row in val)


@dataclass(frozen=True)
class GElements:
    """For each sl(n) basis element B, the unique correction G in V_{e,d} with
    B + G in Sol((e,d), x) and G(x) = 0."""

    e: int
    d: int
    x: Fraction
    corrections: dict  # BasisIndex -> MatrixPoly

    @property
    def n(self) -> int:
        return self.e + self.d


@lru_cache(maxsize=None)
def g_elements(e: int, d: int, x: Fraction) -> GElements:
    """Solve the residue system res_x(F) = B over Sol((e,d), x) for every
    basis element B and return the corrections F - B."""
    x = rat(x)
    sol = sol_space(e, d, x)
    n = e + d
    labels = sl_basis(n)
    # residue matrix: columns are basis members evaluated at x, in gl coords
    cols = []
    for F in sol.basis:
        v = eval_matrix_poly(F, x)
        cols.append([v[i][j] for i in range(n) for j in range(n)])
    rows = [[cols[c][r] for c in range(len(cols))] for r in range(n * n)]
    rhs = []
    for label in labels:
        B = basis_matrix(label, n)
        rhs.append([B[i][j] for i in range(n) for j in range(n)])
    sols = solve_multi(rows, rhs)
    corrections = {}
    for label, coeffs in zip(labels, sols):
        F = None
        for c, member in zip(coeffs, sol.basis):
            if c == 0:
                continue
            piece = member.scale(c)
            F = piece if F is None else F.add(piece)
        if F is None:
            F = constant_matrix_poly(
                tuple(tuple(ZERO for _ in range(n)) for _ in range(n)), (e, d)
            )
        B = basis_matrix(label, n)
        G = F.sub(constant_matrix_poly(B, (e, d)))
        if not mat_is_zero(eval_matrix_poly(G, x)):
            raise SolDimensionError("correction fails G(x) = 0 at %r" % (label,))
        corrections[label] = G
    return GElements(e, d, x, corrections)


def assemble_r(e: int, d: int, x, y) -> GlTensor2:
    """The rational solution of the geometric pipeline at exact points:
    (1/(y-x)) [ c + sum dual(B) (x) G_B(y) ] over the sl(n) basis."""
    x, y = rat(x), rat(y)
    if x == y:
        raise ValueError("need x != y")
    _check_coprime(e, d)
    n = e + d
    g = g_elements(e, d, x)
    inv = ONE / (y - x)
    pairs = []
    for label, G in g.corrections.items():
        val = eval_matrix_poly(G, y)
        if mat_is_zero(val):
            continue
        pairs.append((dual_matrix(label, n), val, inv))
    correction = tensor_from_pairs(n, pairs)
    return casimir(n).scale(inv).add(correction)


def flip_transpose_gauge(e: int, d: int):
    """The involutive automorphism realizing r_(e,d) ~ r_(d,e):
    A |-> -D (antitranspose of A) D, with D the sign diagonal from the
    2-coloring of the support of J_(d,e).

    The antitranspose alone is an anti-automorphism that carries the shaped
    space of (e,d) onto that of (d,e) and J_(e,d) to J_(d,e); the overall
    minus makes it an automorphism and the sign twist absorbs the bracket
    sign against J.  The bare index-reversal e_{i,j} -> e_{n+1-i,n+1-j} does
    NOT transport the solutions (it does not even preserve the shape space).
    """
    from .lie import LinearMapGl

    n = e + d
    s = j_support_coloring(d, e)

    images = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            # antitranspose sends e_{i,j} to e_{n+1-j, n+1-i}
            a, b = n + 1 - j, n + 1 - i
            coeff = -ONE * s[a - 1] * s[b - 1]
            images[(i, j)] = tuple(
                tuple(coeff if (r == a - 1 and c == b - 1) else ZERO for c in range(n))
                for r in range(n)
            )
    return LinearMapGl(n, images)


def psi_transport(e: int, d: int, x, y) -> GlTensor2:
    """Image of the assembled tensor under the flip-transpose gauge in both
    slots; equals assemble_r(d, e, x, y) exactly."""
    g = flip_transpose_gauge(e, d)
    return apply_gauge(g, g, assemble_r(e, d, x, y))


# ---------------------------------------------------------------------------
# certification of the polynomial Ansatz r = c/(y-x) + s(x, y)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AnsatzResult:
    """Bivariate polynomial tail s(x,y): per tensor coefficient, an array of
    coefficients indexed by (x-degree, y-degree)."""

    e: int
    d: int
    degree_bound: int
    coefficients: dict  # (i,j,k,l) -> tuple of tuples of Fraction

    def eval_tail(self, x, y) -> GlTensor2:
        x, y = rat(x), rat(y)
        n = self.e + self.d
        terms = {}
        for key, grid in self.coefficients.items():
            acc = ZERO
            for p, row in enumerate(grid):
                xp = x**p
                for q, cpq in enumerate(row):
                    if cpq != 0:
                        acc += cpq * xp * y**q
            if acc != 0:
                terms[key] = acc
        return GlTensor2(n, RATIONAL, terms)

    def eval(self, x, y) -> GlTensor2:
        """c/(y-x) + s(x, y)."""
        x, y = rat(x), rat(y)
        n = self.e + self.d
        return casimir(n).scale(ONE / (y - x)).add(self.eval_tail(x, y))


def _tail_tensor(e: int, d: int, x: Fraction, y: Fraction) -> GlTensor2:
    n = e + d
    return assemble_r(e, d, x, y).sub(casimir(n).scale(ONE / (y - x)))


def r_ansatz(e: int, d: int, max_bound: int = 8) -> AnsatzResult:
    """Reconstruct the polynomial tail by exact interpolation, doubling the
    degree bound until the spare-point checks pass.

    An interpolation inconsistency at the maximal bound aborts loudly: the
    tail of a geometric solution must be polynomial.
    """
    _check_coprime(e, d)
    bound = 1
    while True:
        try:
            return _try_ansatz(e, d, bound)
        except AnsatzError:
            if 2 * bound > max_bound:
                raise
            bound *= 2


def _try_ansatz(e: int, d: int, bound: int) -> AnsatzResult:
    npts = bound + 2
    xs = [Fraction(p, 1) for p in range(npts)]
    ys = [Fraction(2 * npts + 3 * q, 2) for q in range(npts)]
    samples = {}
    keys = set()
    for x in xs:
        for y in ys:
            t = _tail_tensor(e, d, x, y)
            samples[(x, y)] = t
            keys.update(t.terms)
    coefficients = {}
    try:
        for key in sorted(keys):
            # interpolate in y for each x, then across x per y-degree
            per_x = []
            for x in xs:
                pts = [(y, samples[(x, y)].terms.get(key, ZERO)) for y in ys]
                per_x.append(interpolate(pts, bound))
            ydeg = max((len(p) for p in per_x), default=0)
            grid = []
            for q in range(ydeg):
                pts = [
                    (x, per_x[ix][q] if q < len(per_x[ix]) else ZERO)
                    for ix, x in enumerate(xs)
                ]
                grid.append(interpolate(pts, bound))
            xdeg = max((len(p) for p in grid), default=0)
            coefficients[key] = tuple(
                tuple(grid[q][p] if p < len(grid[q]) else ZERO for q in range(ydeg))
                for p in range(xdeg)
            )
    except Exception as exc:
        raise AnsatzError(
            "tail of ((%d,%d)) not polynomial at degree bound %d" % (e, d, bound)
        ) from exc
    result = AnsatzResult(e, d, bound, coefficients)
    # spare-point validation away from the sampling grid
    spare = (Fraction(-7, 3), Fraction(9, 4))
    if result.eval(*spare) != assemble_r(e, d, *spare):
        raise AnsatzError("spare-point validation failed for ((%d,%d))" % (e, d))
    return result

"""Exact solvers, polynomials, interpolation, cyclotomics."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybe_forge.exact import (
    Cyclo,
    InconsistentSystemError,
    InterpolationError,
    LinSystem,
    MatrixPoly,
    SingularSystemError,
    cyclotomic_poly,
    det,
    eval_matrix_poly,
    interpolate,
    kernel,
    matrix_poly_from_coeffs,
    poly_add,
    poly_eval,
    poly_mul,
    rank,
    rat,
    solve,
    solve_multi,
)

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


class TestSolve:
    def test_identity_system(self):
        b = (F(3), F(-1, 2), F(7))
        A = tuple(tuple(F(int(i == j)) for j in range(3)) for i in range(3))
        assert solve(LinSystem(A, b)) == b

    def test_two_by_two(self):
        A = ((F(1), F(1)), (F(1), F(-1)))
        assert solve(LinSystem(A, (F(2), F(0)))) == (F(1), F(1))

    def test_cartan_gram_n4(self):
        # Gram system of the simple coroot pairing for n = 4, re-verified
        from ybe_forge.lie import basis_matrix, trace_form

        hs = [basis_matrix(("cartan", l), 4) for l in range(1, 4)]
        gram = [[trace_form(a, b) for b in hs] for a in hs]
        for l in range(3):
            rhs = [F(int(m == l)) for m in range(3)]
            x = solve(LinSystem(tuple(map(tuple, gram)), tuple(rhs)))
            for m in range(3):
                got = sum(x[k] * gram[m][k] for k in range(3))
                assert got == rhs[m]

    def test_singular_reported(self):
        A = ((F(1), F(1)), (F(2), F(2)))
        with pytest.raises(SingularSystemError):
            solve(LinSystem(A, (F(0), F(0))))

    def test_inconsistent_reported(self):
        A = ((F(1), F(1)), (F(1), F(1)))
        with pytest.raises(InconsistentSystemError):
            solve(LinSystem(A, (F(0), F(1))))

    def test_overdetermined_consistent(self):
        A = ((F(1), F(0)), (F(0), F(1)), (F(1), F(1)))
        assert solve(LinSystem(A, (F(2), F(3), F(5)))) == (F(2), F(3))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3),
           st.lists(rationals, min_size=3, max_size=3))
    def test_random_systems_resubstitute(self, rows, b):
        A = tuple(tuple(r) for r in rows)
        try:
            x = solve(LinSystem(A, tuple(b)))
        except (SingularSystemError, InconsistentSystemError):
            return
        for row, bi in zip(A, b):
            assert sum(a * v for a, v in zip(row, x)) == bi


class TestKernel:
    def test_zero_matrix(self):
        vecs = kernel([[F(0)] * 4 for _ in range(4)])
        assert len(vecs) == 4

    def test_full_rank_square(self):
        A = ((F(2), F(1)), (F(1), F(1)))
        assert kernel(A) == []

    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.lists(rationals, min_size=4, max_size=4), min_size=2, max_size=3))
    def test_kernel_members_annihilate(self, rows):
        vecs = kernel(rows)
        assert len(vecs) == 4 - rank(rows)
        for v in vecs:
            for row in rows:
                assert sum(a * b for a, b in zip(row, v)) == 0


class TestDet:
    def test_known(self):
        assert det(((F(0), F(2)), (F(-2), F(0)))) == 4
        assert det(((F(1), F(2)), (F(2), F(4)))) == 0

    def test_scaled_rows(self):
        assert det(((F(1, 2), F(0)), (F(0), F(1, 3)))) == F(1, 6)


class TestPoly:
    @settings(max_examples=40, deadline=None)
    @given(st.lists(rationals, max_size=5), st.lists(rationals, max_size=5),
           st.lists(rationals, max_size=5))
    def test_ring_laws(self, a, b, c):
        a, b, c = (tuple(x) for x in (a, b, c))
        from ybe_forge.exact import poly_trim

        a, b, c = poly_trim(a), poly_trim(b), poly_trim(c)
        assert poly_mul(a, poly_mul(b, c)) == poly_mul(poly_mul(a, b), c)
        assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))

    def test_eval(self):
        p = (F(1), F(0), F(2))  # 1 + 2 z^2
        assert poly_eval(p, F(3)) == 19


class TestInterpolate:
    def test_constant(self):
        pts = [(F(k), F(5)) for k in range(4)]
        assert interpolate(pts, 0) == (F(5),)

    def test_square(self):
        pts = [(F(k), F(k * k)) for k in range(4)]
        assert interpolate(pts, 2) == (F(0), F(0), F(1))

    def test_spare_point_rejects(self):
        pts = [(F(0), F(0)), (F(1), F(1)), (F(2), F(4)), (F(3), F(10))]
        with pytest.raises(InterpolationError):
            interpolate(pts, 2)

    @settings(max_examples=30, deadline=None)
    @given(st.lists(rationals, min_size=1, max_size=4))
    def test_roundtrip(self, coeffs):
        from ybe_forge.exact import poly_trim

        p = poly_trim(coeffs)
        bound = max(len(p) - 1, 0)
        pts = [(F(k), poly_eval(p, F(k))) for k in range(bound + 3)]
        assert interpolate(pts, bound) == p


class TestMatrixPoly:
    def test_eval_constant(self):
        m = ((F(1), F(2)), (F(3), F(4)))
        F0 = matrix_poly_from_coeffs([m])
        assert eval_matrix_poly(F0, F(17)) == m

    def test_eval_quadratic_unit(self):
        z2 = ((F(0), F(0)), (F(1), F(0)))
        Fq = matrix_poly_from_coeffs([((F(0),) * 2,) * 2, ((F(0),) * 2,) * 2, z2])
        val = eval_matrix_poly(Fq, F(3))
        assert val[1][0] == 9 and val[0][1] == 0

    def test_bad_split_rejected(self):
        with pytest.raises(ValueError):
            MatrixPoly(2, ((( ), ( )), (( ), ( ))), block_split=(2, 2))


class TestCyclo:
    def test_cyclotomic_polys(self):
        assert cyclotomic_poly(1) == (-1, 1)
        assert cyclotomic_poly(2) == (1, 1)
        assert cyclotomic_poly(4) == (1, 0, 1)
        assert cyclotomic_poly(6) == (1, -1, 1)

    def test_primitive_root_relations(self):
        z = Cyclo.zeta_pow(5, 1)
        acc = Cyclo.from_rat(5, 1)
        for _ in range(5):
            acc = acc * z
        assert (acc - Cyclo.from_rat(5, 1)).is_zero()  # zeta^5 = 1
        total = Cyclo.zero(5)
        for k in range(5):
            total = total + Cyclo.zeta_pow(5, k)
        assert total.is_zero()  # full sum of 5th roots

    def test_rationality_detection(self):
        z = Cyclo.zeta_pow(3, 1)
        s = z + Cyclo.zeta_pow(3, 2)
        assert s.as_rational() == F(-1)
        assert z.as_rational() is None

    def test_to_complex(self):
        z = Cyclo.zeta_pow(8, 1)
        import cmath

        assert abs(z.to_complex() - cmath.exp(2j * cmath.pi / 8)) < 1e-12

    def test_rat_guard(self):
        with pytest.raises(TypeError):
            rat(0.5)

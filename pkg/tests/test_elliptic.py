"""Theta numerics, the elliptic kernel, the torus solution, and the zoo."""

import cmath
import random
from fractions import Fraction as F

import pytest

from ybe_forge.elliptic import (
    PoleProximityError,
    ThetaContext,
    belavin_cybe_residual,
    belavin_r,
    belavin_residue_fit,
    belavin_unitarity_residual,
    jacobi_sn_cn_dn,
    kronecker_sigma,
    kronecker_sigma_series,
    theta1,
    theta1_deriv0,
    theta3,
    theta_half_shift_identity_residual,
    v_sign_convention,
    zoo_baxter,
    zoo_cherednik,
    zoo_stolin_rat,
)
from ybe_forge.lie import (
    casimir,
    cybe_residual_difference,
    heisenberg_casimir,
    swap_tensor,
)

CTX = ThetaContext(tau=0.3 + 1j)
CTX_I = ThetaContext(tau=1j)


class TestTheta:
    def test_odd_theta_vanishes_at_zero(self):
        assert abs(theta1(0, CTX)) == 0

    def test_parity(self, rng):
        for _ in range(5):
            z = complex(rng.uniform(-1, 1), rng.uniform(-0.4, 0.4))
            assert abs(theta1(-z, CTX) + theta1(z, CTX)) < CTX.tol
            assert abs(theta3(-z, CTX) - theta3(z, CTX)) < CTX.tol

    def test_half_shift_relation(self, rng):
        for ctx in (CTX, CTX_I):
            for _ in range(10):
                z = complex(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))
                assert theta_half_shift_identity_residual(z, ctx) < 1e-12

    def test_deriv_against_finite_difference(self):
        h = 1e-6
        fd = (theta1(h, CTX) - theta1(-h, CTX)) / (2 * h)
        assert abs(theta1_deriv0(CTX) - fd) < 1e-8

    def test_deriv_deterministic_and_nonzero(self):
        assert theta1_deriv0(CTX_I) == theta1_deriv0(CTX_I)
        assert abs(theta1_deriv0(CTX_I)) > 0

    def test_bad_modulus_rejected(self):
        with pytest.raises(ValueError):
            ThetaContext(tau=0.5 - 0.1j)


class TestKernel:
    def test_simple_pole_normalization(self):
        u = 0.37 + 0.21j
        val = 1e-4 * kronecker_sigma(u, 1e-4, CTX_I)
        assert abs(val - 1) < 1e-3

    def test_symmetry(self):
        u, z = 0.37 + 0.21j, 0.3
        assert abs(kronecker_sigma(u, z, CTX) - kronecker_sigma(z, u, CTX)) < 1e-12

    def test_periodicity(self):
        u = 0.37 + 0.21j
        a = kronecker_sigma(u, 0.33 + 1, CTX)
        b = kronecker_sigma(u, 0.33, CTX)
        assert abs(a - b) < 1e-10

    def test_series_cross_check_in_strip(self):
        u = 0.37 + 0.21j
        z = 0.15 - 0.2j
        assert abs(kronecker_sigma_series(u, z, CTX) - kronecker_sigma(u, z, CTX)) < 1e-10

    def test_pole_guard(self):
        with pytest.raises(PoleProximityError):
            kronecker_sigma(0.0, 0.3, CTX)


class TestBelavin:
    def test_sign_convention_resolved(self):
        assert v_sign_convention() == "y-x"

    @pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2)])
    @pytest.mark.parametrize("tau", [1j, 0.3 + 1j])
    def test_cybe_unitarity_residue(self, n, d, tau):
        ctx = ThetaContext(tau=tau)
        assert belavin_cybe_residual(n, d, ctx, (0.11, 0.27, 0.40)) < 1e-9
        assert belavin_unitarity_residual(n, d, ctx, 0.13, 0.29) < 1e-9
        assert belavin_residue_fit(n, d, ctx) < 1e-5

    @pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2)])
    def test_dual_family_is_casimir(self, n, d):
        assert heisenberg_casimir(n, d) == casimir(n)

    def test_lattice_point_rejected(self):
        with pytest.raises(PoleProximityError):
            belavin_r(2, 1, CTX, 0.1, 0.1)

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            belavin_r(4, 2, CTX, 0.1, 0.2)

    def test_truncation_stability(self):
        c60 = ThetaContext(tau=0.3 + 1j, terms=60)
        c120 = ThetaContext(tau=0.3 + 1j, terms=120)
        drift = belavin_r(2, 1, c60, 0.1, 0.2).sub(belavin_r(2, 1, c120, 0.1, 0.2)).norm()
        assert drift < 1e-12

    def test_nondegenerate_away_from_poles(self):
        from ybe_forge.lie import nondegenerate

        assert nondegenerate(belavin_r(3, 1, CTX, 0.13, 0.37))


class TestZoo:
    def test_rational_exact(self):
        res = cybe_residual_difference(zoo_stolin_rat, F(1, 3), F(1, 5))
        assert res.is_zero()

    def test_rational_unitary_in_difference_form(self):
        r = zoo_stolin_rat(F(2, 7))
        r_neg = zoo_stolin_rat(F(-2, 7))
        assert r_neg == swap_tensor(r).scale(-1)

    def test_rational_pole(self):
        with pytest.raises(ZeroDivisionError):
            zoo_stolin_rat(F(0))

    def test_cherednik(self):
        res = cybe_residual_difference(zoo_cherednik, 0.2, 0.3).norm()
        assert res < 1e-9

    def test_cherednik_pole_guard(self):
        with pytest.raises(PoleProximityError):
            zoo_cherednik(0.0)

    def test_baxter(self):
        ctx = ThetaContext(tau=1.1j)
        rng = random.Random(5)
        for _ in range(3):
            x = rng.uniform(0.1, 0.5)
            y = rng.uniform(0.1, 0.5)
            res = cybe_residual_difference(lambda z: zoo_baxter(z, ctx), x, y).norm()
            assert res < 1e-8

    def test_jacobi_identity_sn2_cn2(self):
        ctx = ThetaContext(tau=1.1j)
        sn, cn, dn = jacobi_sn_cn_dn(0.23, ctx)
        assert abs(sn * sn + cn * cn - 1) < 1e-12

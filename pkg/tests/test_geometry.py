import math
import random

import pytest

from sympl_moduli import (BranchId, Point4, Tangent4, apply_J, contact_eval,
                          coord_functions, lambda_of_theta, omega_eval,
                          reeb_vector, theta_from_lambda)
from sympl_moduli.errors import PoleError, RangeError
from sympl_moduli.geometry import SQRT6, THETA_C

SQRT6_ = math.sqrt(6.0)


def random_points(n, seed=20260810, margin=0.01):
    rnd = random.Random(seed)
    return [Point4(s=rnd.uniform(-2, 2), t=rnd.uniform(0, 2 * math.pi),
                   theta=rnd.uniform(margin, math.pi - margin),
                   phi=rnd.uniform(0, 2 * math.pi)) for _ in range(n)]


class TestCoordFunctions:
    def test_equator(self):
        f, h, g = coord_functions(Point4(0, 0, math.pi / 2, 0))
        assert f == pytest.approx(1.0, abs=1e-15)
        assert h == pytest.approx(0.0, abs=1e-15)
        assert g == pytest.approx(SQRT6_, abs=1e-14)

    def test_north_pole(self):
        f, h, g = coord_functions(Point4(0, 0, 0.0, 0))
        assert f == pytest.approx(-2.0, abs=1e-15)
        assert h == pytest.approx(0.0, abs=1e-15)
        assert g == pytest.approx(2 * SQRT6_, abs=1e-14)

    def test_frozen_point(self):
        # Oracle: mpmath at 40 digits, f = e^{-sqrt6}(1 - 3/4) etc.
        f, h, g = coord_functions(Point4(1.0, 0, math.pi / 3, 0))
        assert f == pytest.approx(0.021584407415090509, rel=1e-14)
        assert h == pytest.approx(0.079306176850976058, rel=1e-14)
        assert g == pytest.approx(0.23045840699464624, rel=1e-14)

    def test_against_mpmath(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 40
        rnd = random.Random(1)
        for _ in range(20):
            s, th = rnd.uniform(-2, 2), rnd.uniform(0.05, math.pi - 0.05)
            f, h, g = coord_functions(Point4(s, 0, th, 0))
            e = mp.e ** (-mp.sqrt(6) * s)
            c = mp.cos(th)
            assert f == pytest.approx(float(e * (1 - 3 * c ** 2)), rel=1e-13)
            assert h == pytest.approx(
                float(mp.sqrt(6) * e * c * mp.sin(th) ** 2), rel=1e-13, abs=1e-15)
            assert g == pytest.approx(
                float(mp.sqrt(6) * e * mp.sqrt(1 + 3 * c ** 4)), rel=1e-13)

    def test_g_positive(self):
        assert all(coord_functions(p)[2] > 0 for p in random_points(100))


class TestContactForm:
    def test_equator_dt(self):
        p = Point4(0, 0, math.pi / 2, 0)
        assert contact_eval(p, Tangent4(v_t=1)) == pytest.approx(-1.0)

    def test_pole_dt(self):
        p = Point4(0, 0, 0.0, 0)
        assert contact_eval(p, Tangent4(v_t=1)) == pytest.approx(2.0)

    def test_reeb_contracts_to_one(self):
        for p in random_points(100):
            assert contact_eval(p, reeb_vector(p)) == pytest.approx(1.0, abs=1e-12)

    def test_reeb_contracts_to_one_at_poles(self):
        for theta in (0.0, math.pi):
            p = Point4(0.7, 1.0, theta, 0.0)
            assert contact_eval(p, reeb_vector(p)) == pytest.approx(1.0, abs=1e-12)


class TestReebVector:
    def test_equator_value(self):
        # alpha = -dt at the equator, so the Reeb field is -d/dt there.
        v = reeb_vector(Point4(0, 0, math.pi / 2, 0))
        assert v.v_t == pytest.approx(-1.0, abs=1e-15)
        assert v.v_s == v.v_theta == 0.0
        assert v.v_phi == pytest.approx(0.0, abs=1e-15)

    def test_pole_value(self):
        # alpha = 2 dt at theta = 0; the degenerate d/dphi term is dropped.
        v = reeb_vector(Point4(0, 0, 0.0, 0))
        assert v.v_t == pytest.approx(0.5, abs=1e-15)
        assert v.v_phi == 0.0

    def test_s_independent(self):
        a = reeb_vector(Point4(-1.5, 0, 1.0, 0))
        b = reeb_vector(Point4(2.5, 0, 1.0, 0))
        assert a == b

    def test_annihilates_dalpha(self):
        # dalpha(reeb, w) = 0 for the coordinate directions, via
        # dalpha = omega restricted plus the exponential factor:
        # omega = d(e^{-sqrt6 s} alpha) = e^{-sqrt6 s}(dalpha - sqrt6 ds ^ alpha),
        # so on vectors w with w_s = 0 and at points where alpha(w) is
        # cancelled, test omega(reeb, w) + sqrt6 e^{-sqrt6 s} alpha(w) *
        # ds(reeb) = e^{-sqrt6 s} dalpha(reeb, w); reeb has no s component.
        for p in random_points(30, seed=5):
            v = reeb_vector(p)
            e = math.exp(-SQRT6 * p.s)
            for w in (Tangent4(v_s=1), Tangent4(v_t=1), Tangent4(v_theta=1),
                      Tangent4(v_phi=1)):
                # omega(v, w) = e^{-sqrt6 s}[dalpha(v,w) - sqrt6(ds^alpha)(v,w)]
                dalpha = omega_eval(p, v, w) / e + SQRT6 * (
                    -w.v_s * contact_eval(p, v) + 0.0)
                assert dalpha == pytest.approx(0.0, abs=1e-12)


class TestOmega:
    def test_antisymmetry(self):
        rnd = random.Random(3)
        for p in random_points(50, seed=9):
            v = Tangent4(*(rnd.uniform(-1, 1) for _ in range(4)))
            w = Tangent4(*(rnd.uniform(-1, 1) for _ in range(4)))
            assert omega_eval(p, v, v) == pytest.approx(0.0, abs=1e-14)
            assert omega_eval(p, v, w) == pytest.approx(-omega_eval(p, w, v),
                                                        abs=1e-13)

    def test_ds_dt_value(self):
        # df = -sqrt6 ds at (s=0, theta=pi/2), so omega(d/ds, d/dt) = sqrt6.
        p = Point4(0, 0, math.pi / 2, 0)
        assert omega_eval(p, Tangent4(v_s=1), Tangent4(v_t=1)) == pytest.approx(SQRT6_)
        assert omega_eval(p, Tangent4(v_t=1), Tangent4(v_s=1)) == pytest.approx(-SQRT6_)

    def test_tames_J(self):
        rnd = random.Random(4)
        for p in random_points(50, seed=11):
            v = Tangent4(*(rnd.uniform(-1, 1) for _ in range(4)))
            if all(x == 0 for x in (v.v_s, v.v_t, v.v_theta, v.v_phi)):
                continue
            assert omega_eval(p, v, apply_J(p, v)) > 0.0


class TestJ:
    def test_equator_images(self):
        p = Point4(0, 0, math.pi / 2, 0)
        jt = apply_J(p, Tangent4(v_t=1))
        assert jt.v_s == pytest.approx(-1.0, abs=1e-14)
        assert (jt.v_t, jt.v_theta, jt.v_phi) == pytest.approx((0, 0, 0), abs=1e-14)
        jphi = apply_J(p, Tangent4(v_phi=1))
        assert jphi.v_theta == pytest.approx(-1.0, abs=1e-14)
        assert (jphi.v_s, jphi.v_t, jphi.v_phi) == pytest.approx((0, 0, 0), abs=1e-14)

    def test_square_is_minus_one(self):
        rnd = random.Random(6)
        for p in random_points(100, seed=13, margin=0.01):
            v = Tangent4(*(rnd.uniform(-1, 1) for _ in range(4)))
            jjv = apply_J(p, apply_J(p, v))
            for got, want in ((jjv.v_s, v.v_s), (jjv.v_t, v.v_t),
                              (jjv.v_theta, v.v_theta), (jjv.v_phi, v.v_phi)):
                assert got == pytest.approx(-want, abs=1e-10)

    def test_pole_refused(self):
        with pytest.raises(PoleError):
            apply_J(Point4(0, 0, 0.0, 0), Tangent4(v_t=1))
        with pytest.raises(PoleError):
            apply_J(Point4(0, 0, math.pi, 0), Tangent4(v_t=1))

    def test_metric_recovery(self):
        # g^{-1} omega(., J.) on the coordinate frame is the round product
        # metric diag(1, 1, 1, sin^2 theta).
        frame = [Tangent4(v_s=1), Tangent4(v_t=1), Tangent4(v_theta=1),
                 Tangent4(v_phi=1)]
        for p in random_points(100, seed=17, margin=0.05):
            g = coord_functions(p)[2]
            expected = [1.0, 1.0, 1.0, math.sin(p.theta) ** 2]
            for i, ei in enumerate(frame):
                for j, ej in enumerate(frame):
                    got = omega_eval(p, ei, apply_J(p, ej)) / g
                    want = expected[i] if i == j else 0.0
                    assert got == pytest.approx(want, abs=1e-10)


class TestThetaFromLambda:
    def test_zero_is_equator(self):
        assert theta_from_lambda(0.0, BranchId.B) == pytest.approx(
            math.pi / 2, abs=1e-12)

    def test_pi_over_three(self):
        # lambda(pi/3) = 1.5 sqrt6, verified by forward evaluation.
        lam = 1.5 * SQRT6_
        assert lambda_of_theta(math.pi / 3) == pytest.approx(lam, rel=1e-15)
        assert theta_from_lambda(lam, BranchId.B) == pytest.approx(
            math.pi / 3, abs=1e-12)

    def test_mirror(self):
        assert theta_from_lambda(-1.5 * SQRT6_, BranchId.B) == pytest.approx(
            2 * math.pi / 3, abs=1e-12)

    @pytest.mark.parametrize("branch,lo,hi", [
        (BranchId.A, 1e-3, THETA_C - 1e-3),
        (BranchId.B, THETA_C + 1e-3, math.pi - THETA_C - 1e-3),
        (BranchId.C, math.pi - THETA_C + 1e-3, math.pi - 1e-3),
    ])
    def test_round_trip(self, branch, lo, hi):
        for i in range(101):
            theta = lo + (hi - lo) * i / 100
            back = theta_from_lambda(lambda_of_theta(theta), branch)
            assert back == pytest.approx(theta, abs=1e-10)

    def test_strictly_decreasing(self):
        for lo, hi in ((1e-3, THETA_C - 1e-3),
                       (THETA_C + 1e-3, math.pi - THETA_C - 1e-3),
                       (math.pi - THETA_C + 1e-3, math.pi - 1e-3)):
            vals = [lambda_of_theta(lo + (hi - lo) * i / 1000)
                    for i in range(1001)]
            assert all(b < a for a, b in zip(vals, vals[1:]))

    def test_range_errors(self):
        with pytest.raises(RangeError):
            theta_from_lambda(0.5, BranchId.A)
        with pytest.raises(RangeError):
            theta_from_lambda(-0.5, BranchId.C)
        with pytest.raises(RangeError):
            theta_from_lambda(float("nan"), BranchId.B)


def test_tangent_phi_at_pole_rejected():
    p = Point4(0, 0, 0.0, 0)
    with pytest.raises(ValueError):
        contact_eval(p, Tangent4(v_phi=1.0))

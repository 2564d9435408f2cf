import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from szego.errors import (
    ConvergenceRegionViolated,
    DivergentProduct,
    DivisionByZeroFactor,
    InvalidArgument,
    PoleHit,
)
from szego.qseries import (
    INFINITY,
    cauchy_sum,
    psi11,
    q_gamma,
    q_pochhammer,
    q_pochhammer_ratio_identity_check,
    ramanujan_sum,
    theta_fn,
)

# reference values computed with mpmath at 40 digits (qp, qgamma)
QP_HALF_QUARTER = 0.419422441795107597709956107702974252234
QP_EIGHTH_QUARTER = 0.8388448835902151954199122154059485044679
QP_NEG3 = 0.3830793483972674724119810825013137151866  # (0.2; 0.3)_{-3}
QGAMMA_07 = 1.159774680245973889928845011741620027396  # Gamma_{0.25}(0.7)
RAMANUJAN_REF = 4.861181282170989255504945473746733662065  # (-0.5, -0.125, 0.25, 0.49)
THETA_REF = 0.1312224992299791436374494208166874611886 + 0.1119800797796679653236211767940200679941j


def brute_qpoch(alpha, q, n):
    """Independent loop over the defining factors."""
    p = 1.0 + 0j
    if n >= 0:
        for k in range(n):
            p *= 1 - alpha * q**k
        return p
    for k in range(1, -n + 1):
        p *= 1 - alpha * q ** (-k)
    return 1 / p


class TestQPochhammer:
    def test_empty_product(self):
        assert q_pochhammer(0.3, 0.25, 0) == 1

    def test_two_factors(self):
        assert q_pochhammer(0.3, 0.25, 2) == pytest.approx(0.6475, abs=1e-15)

    def test_infinite_against_reference(self):
        assert abs(q_pochhammer(0.5, 0.25) - QP_HALF_QUARTER) < 1e-15
        assert abs(q_pochhammer(0.125, 0.25, INFINITY) - QP_EIGHTH_QUARTER) < 1e-15

    def test_infinite_shift_by_one(self):
        v = q_pochhammer(0.5, 0.25)
        assert abs(v - 0.5 * q_pochhammer(0.125, 0.25)) < 1e-15

    def test_negative_order(self):
        assert abs(q_pochhammer(0.2, 0.3, -3) - QP_NEG3) < 1e-14

    def test_negative_order_zero_factor(self):
        with pytest.raises(DivisionByZeroFactor):
            q_pochhammer(0.25, 0.5, -2)  # 1 - 0.25 * 0.5**-2 = 0

    def test_divergent(self):
        with pytest.raises(DivergentProduct):
            q_pochhammer(0.3, 1.0)

    def test_vectorized_alpha(self):
        alphas = np.array([0.1, 0.2 + 0.3j, -0.7])
        out = q_pochhammer(alphas, 0.4)
        assert out.shape == (3,)
        for a, v in zip(alphas, out):
            assert abs(v - q_pochhammer(complex(a), 0.4)) < 1e-15

    @pytest.mark.parametrize("n", range(-8, 9))
    def test_finite_against_brute_force(self, n):
        assert cmath.isclose(q_pochhammer(0.3 - 0.2j, 0.45, n), brute_qpoch(0.3 - 0.2j, 0.45, n),
                             rel_tol=1e-14)

    @settings(max_examples=60, deadline=None)
    @given(
        re=st.floats(-0.9, 0.9), im=st.floats(-0.9, 0.9),
        q=st.floats(0.05, 0.8), n=st.integers(-8, 8),
    )
    def test_split_identity(self, re, im, q, n):
        alpha = complex(re, im)
        # keep away from the poles alpha q^-k = 1 of negative orders
        if any(abs(1 - alpha * q ** (-k)) < 1e-3 for k in range(1, 9)):
            return
        lhs = q_pochhammer(alpha, q, n) * q_pochhammer(alpha * q**n, q)
        rhs = q_pochhammer(alpha, q)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


class TestRatioIdentity:
    def test_order_zero(self):
        assert q_pochhammer_ratio_identity_check(0.2, 0.3, 0) == (1, 1)

    def test_order_one(self):
        lhs, rhs = q_pochhammer_ratio_identity_check(0.2, 0.3, 1)
        assert lhs == pytest.approx(0.8 / 0.94, abs=1e-15)
        assert rhs == pytest.approx(0.8 / 0.94, abs=1e-15)

    def test_negative_order(self):
        lhs, rhs = q_pochhammer_ratio_identity_check(0.2, 0.3, -3)
        # both sides equal -0.12485549132947976878... (mpmath)
        assert abs(lhs - (-0.1248554913294797687861271676300578034682)) < 1e-15
        assert abs(lhs - rhs) < 1e-14

    @pytest.mark.parametrize("n", range(-10, 11))
    def test_sweep(self, n):
        lhs, rhs = q_pochhammer_ratio_identity_check(-0.4 + 0.1j, 0.35, n)
        assert abs(lhs - rhs) < 1e-13


class TestPsi11:
    def test_matches_reference_product(self):
        s = psi11(-0.5, -0.125, 0.25, 0.49, N=80)
        assert abs(s - RAMANUJAN_REF) < 1e-12
        assert abs(ramanujan_sum(-0.5, -0.125, 0.25, 0.49) - RAMANUJAN_REF) < 1e-12

    def test_equal_parameters_rejected(self):
        with pytest.raises(ConvergenceRegionViolated):
            psi11(0.3, 0.3, 0.5, 0.9, N=10)

    def test_outside_region(self):
        with pytest.raises(ConvergenceRegionViolated):
            psi11(-0.5, -0.125, 0.25, 1.0)
        with pytest.raises(ConvergenceRegionViolated):
            ramanujan_sum(-0.5, -0.125, 0.25, 0.2)

    def test_tail_decay(self):
        s60 = psi11(-0.5, -0.03125, 0.25, 0.5, N=60)
        s50 = psi11(-0.5, -0.03125, 0.25, 0.5, N=50)
        assert abs(s60 - s50) < 1e-14

    def test_cauchy_specialization(self):
        # beta = alpha q: Ramanujan's sum over (1 - alpha) is Cauchy's formula
        alpha, q, z = -0.5, 0.25, 0.49
        lhs = ramanujan_sum(alpha, alpha * q, q, z)
        assert abs(lhs / (1 - alpha) - cauchy_sum(alpha, q, z)) < 1e-13

    def test_large_half_width_no_overflow(self):
        s = psi11(-0.5, -0.125, 0.1, 0.49, N=300)
        assert np.isfinite(s.real) and np.isfinite(s.imag)
        assert abs(s - ramanujan_sum(-0.5, -0.125, 0.1, 0.49)) < 1e-12


class TestCauchySum:
    def test_symmetry(self):
        a, z = -0.5 + 0.1j, 0.49 - 0.2j
        assert abs(cauchy_sum(a, 0.25, z) - cauchy_sum(z, 0.25, a)) < 1e-13

    def test_brute_force_series(self):
        alpha, q, z = -0.5, 0.25, 0.49
        n = np.arange(-200, 201)
        direct = np.sum(z ** n.astype(float) / (1 - alpha * q ** n.astype(float)))
        assert abs(cauchy_sum(alpha, q, z) - direct) < 1e-12

    def test_theta_form_under_inversion(self):
        # RHS = (q;q)^2 theta(alpha z)/(theta(z) theta(alpha)); z -> q/z turns
        # theta(alpha q/z) into theta(z/alpha) and leaves theta(z) unchanged
        alpha, q, z = -0.5, 0.25, 0.49 + 0.05j
        qq = q_pochhammer(q, q)
        for w, num in ((z, alpha * z), (q / z, z / alpha)):
            expected = qq**2 * theta_fn(num, q) / (theta_fn(z, q) * theta_fn(alpha, q))
            assert abs(cauchy_sum(alpha, q, w) - expected) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleHit):
            cauchy_sum(1.0, 0.25, 0.5)


class TestQGamma:
    @pytest.mark.parametrize("q", [0.1, 0.25, 0.5, 0.9])
    def test_base_cases(self, q):
        assert abs(q_gamma(1, q) - 1) < 1e-14
        assert abs(q_gamma(2, q) - 1) < 1e-13

    def test_reference(self):
        assert abs(q_gamma(0.7, 0.25) - QGAMMA_07) < 1e-14

    def test_functional_equation(self):
        x, q = 0.7, 0.25
        ratio = q_gamma(x + 1, q) / q_gamma(x, q)
        assert abs(ratio - (1 - q**x) / (1 - q)) < 1e-14

    @settings(max_examples=50, deadline=None)
    @given(re=st.floats(-3.5, 4.0), im=st.floats(-3.0, 3.0), q=st.floats(0.1, 0.7))
    def test_functional_equation_complex(self, re, im, q):
        x = complex(re, im)
        # distance to the pole lattice -k + 2 pi i m / ln q
        period = 2 * math.pi / abs(math.log(q))
        m = round(im / period)
        if re < 0.5 and abs(re - round(re)) < 0.1 and abs(im - m * period) < 0.1:
            return
        lhs = q_gamma(x + 1, q)
        rhs = (1 - cmath.exp(x * math.log(q))) / (1 - q) * q_gamma(x, q)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))

    def test_pole(self):
        with pytest.raises(PoleHit):
            q_gamma(-2, 0.25)

    def test_bad_base(self):
        with pytest.raises(InvalidArgument):
            q_gamma(0.5, 1.5)


class TestTheta:
    def test_zero_at_one(self):
        assert theta_fn(1, 0.25) == 0

    def test_reference(self):
        assert abs(theta_fn(0.3 + 0.1j, 0.25) - THETA_REF) < 1e-15

    def test_inversion_symmetry(self):
        x, q = 0.3 + 0.1j, 0.25
        assert abs(theta_fn(x, q) - theta_fn(q / x, q)) < 1e-15

    def test_quasi_periodicity(self):
        x, q = 0.3 + 0.1j, 0.25
        assert abs(theta_fn(q * x, q) + theta_fn(x, q) / x) < 1e-14

    def test_zero_argument(self):
        with pytest.raises(InvalidArgument):
            theta_fn(0, 0.25)

    def test_guard(self):
        with pytest.raises(PoleHit):
            theta_fn(0.25, 0.25, guard=True)  # (q/x; q) has factor 1 - 1

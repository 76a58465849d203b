import math

import mpmath
import pytest

from oracle_values import B_P, C_P, PI_P
from pfun.errors import ConvergenceError, DomainError
from pfun.inverse import arcsinh_p, arctan_p
from pfun.special import (
    PParam,
    as_p,
    b_p,
    b_p_hypergeometric,
    beta,
    c_p,
    digamma,
    gauss_2f1,
    pi_p,
    pi_p_beta,
)

P_SET = [1.5, 2.0, 3.0, 5.0, 10.0]


class TestPParam:
    @pytest.mark.parametrize("p", [1.0, 0.5, -3.0, math.inf, math.nan])
    def test_rejects(self, p):
        with pytest.raises(DomainError):
            PParam(p)

    def test_accepts_and_converts(self):
        assert float(PParam(2.5)) == 2.5
        assert as_p(PParam(3)) == 3.0
        assert as_p(1.1) == 1.1

    def test_rejects_non_numbers(self):
        with pytest.raises(DomainError):
            PParam("3")


class TestBeta:
    @pytest.mark.parametrize(
        "a,b,expected",
        [(1, 1, 1.0), (0.5, 0.5, math.pi), (3, 4, 1 / 60)],
    )
    def test_values(self, a, b, expected):
        assert beta(a, b) == pytest.approx(expected, rel=1e-14)

    @pytest.mark.parametrize("a,b", [(0.3, 2.7), (1 / 3, 2 / 3), (10.5, 0.01)])
    def test_symmetric(self, a, b):
        assert beta(a, b) == pytest.approx(beta(b, a), rel=1e-14)

    @pytest.mark.parametrize("a,b", [(0.2, 0.7), (5.5, 1.25), (0.01, 0.99)])
    def test_against_mpmath(self, a, b):
        assert beta(a, b) == pytest.approx(float(mpmath.beta(a, b)), rel=1e-13)

    @pytest.mark.parametrize("a,b", [(0.0, 1.0), (1.0, -2.0)])
    def test_domain(self, a, b):
        with pytest.raises(DomainError):
            beta(a, b)


class TestDigamma:
    def test_classical(self):
        gamma = 0.5772156649015329
        # the series is truncated after the B_14 term at x >= 6: about 2e-13
        assert digamma(1.0) == pytest.approx(-gamma, abs=1e-12)
        assert digamma(2.0) == pytest.approx(1 - gamma, abs=1e-12)

    def test_reflection(self):
        assert digamma(0.75) - digamma(0.25) == pytest.approx(math.pi, abs=1e-13)

    @pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 3.0, 7.0])
    def test_recurrence(self, x):
        assert digamma(x + 1) - digamma(x) == pytest.approx(1 / x, abs=1e-12)

    @pytest.mark.parametrize("x", [0.005, 0.05, 0.3, 1.7, 6.0, 42.0, 1e6])
    def test_against_mpmath(self, x):
        assert digamma(x) == pytest.approx(float(mpmath.digamma(x)), abs=1e-12, rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.5, math.inf])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            digamma(x)


class TestHypergeometric:
    def test_zero_argument(self):
        assert gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0

    def test_log_case(self):
        assert gauss_2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-15)

    def test_atanh_case(self):
        expected = math.sqrt(2) * math.atanh(1 / math.sqrt(2))
        assert expected == pytest.approx(1.2465, abs=1e-4)
        assert gauss_2f1(1, 0.5, 1.5, 0.5) == pytest.approx(expected, rel=1e-15)

    @pytest.mark.parametrize("abcz", [(0.2, 0.9, 1.3, -0.5), (2.5, -1.5, 0.7, 0.45), (1 / 7, 1 / 7, 8 / 7, 0.5)])
    def test_against_mpmath(self, abcz):
        assert gauss_2f1(*abcz) == pytest.approx(float(mpmath.hyp2f1(*abcz)), rel=1e-14)

    def test_terminating_series(self):
        # F(-2, b; c; z) is a quadratic polynomial in z
        b, c, z = 1.5, 2.0, 0.4
        assert gauss_2f1(-2, b, c, z) == pytest.approx(1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1)))

    def test_rejects_bad_c_and_z(self):
        with pytest.raises(DomainError):
            gauss_2f1(1, 1, -2, 0.1)
        with pytest.raises(DomainError):
            gauss_2f1(1, 1, 2, 0.6)

    def test_convergence_error(self):
        with pytest.raises(ConvergenceError):
            gauss_2f1(1, 1, 2, 0.5, max_iter=5)


class TestConstants:
    @pytest.mark.parametrize("p", P_SET)
    def test_pi_p(self, p):
        assert pi_p(p) == pytest.approx(PI_P[p], rel=1e-14)

    def test_pi_p_examples(self):
        assert pi_p(2) == pytest.approx(math.pi, rel=1e-15)
        assert pi_p(4) == pytest.approx(2.2214415, abs=1e-7)
        assert pi_p_beta(3) == pytest.approx(2.4184, abs=1e-4)

    @pytest.mark.parametrize("p", P_SET + [1.1, 100.0])
    def test_pi_p_routes_agree(self, p):
        assert pi_p(p) == pytest.approx(pi_p_beta(p), abs=1e-10)

    def test_pi_p_decreasing_towards_two(self):
        values = [pi_p(p) for p in [2.0, 2.5, 3.0, 5.0, 10.0, 100.0]]
        assert all(v > 2 for v in values)
        assert all(a > b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("p", P_SET)
    def test_b_p(self, p):
        assert b_p(p) == pytest.approx(B_P[p], abs=1e-12)
        assert b_p_hypergeometric(p) == pytest.approx(B_P[p], rel=1e-13)

    def test_b_2_is_quarter_pi(self):
        assert b_p(2) == pytest.approx(math.atan(1.0), abs=1e-13)

    @pytest.mark.parametrize("p", P_SET + [1.1, 100.0])
    def test_b_p_three_routes(self, p):
        digamma_route, series_route, quad_route = b_p(p), b_p_hypergeometric(p), arctan_p(p, 1.0)
        assert abs(digamma_route - series_route) < 1e-8
        assert abs(digamma_route - quad_route) < 1e-8

    @pytest.mark.parametrize("p", P_SET)
    def test_c_p(self, p):
        assert c_p(p) == pytest.approx(C_P[p], rel=1e-14)

    def test_c_2(self):
        assert c_p(2) == pytest.approx(math.log(1 + math.sqrt(2)), rel=1e-15)
        assert c_p(2) == pytest.approx(gauss_2f1(1, 0.5, 1.5, 0.5) / math.sqrt(2), rel=1e-15)

    @pytest.mark.parametrize("p", P_SET + [1.1, 100.0])
    def test_c_p_quadrature(self, p):
        assert abs(c_p(p) - arcsinh_p(p, 1.0)) < 1e-8

    @pytest.mark.parametrize("fn", [pi_p, b_p, c_p])
    def test_invalid_p(self, fn):
        with pytest.raises(DomainError):
            fn(1.0)

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle_values as ov
from pfun.errors import DomainError
from pfun.forward import (
    X_MAX,
    FunctionKind,
    cos_p,
    cosh_p,
    derivative_eval,
    forward_domain,
    forward_eval,
    plaplacian_lambda_profile,
    sin_cos_p,
    sin_p,
    sinh_p,
    tan_p,
    tanh_p,
)
from pfun.inverse import arcsin_p, arcsinh_p, arctan_p
from pfun.numerics import central_diff
from pfun.special import pi_p

P_SET = [1.5, 2.0, 3.0, 5.0, 10.0]


class TestValues:
    @pytest.mark.parametrize("p", [1.1, 2.0, 3.0, 10.0])
    def test_at_zero(self, p):
        assert sin_p(p, 0.0) == 0.0
        assert cos_p(p, 0.0) == 1.0
        assert tan_p(p, 0.0) == 0.0
        assert sinh_p(p, 0.0) == 0.0
        assert cosh_p(p, 0.0) == 1.0
        assert tanh_p(p, 0.0) == 0.0

    @pytest.mark.parametrize("p", [1.1, 1.5, 2.0, 3.0, 10.0, 100.0])
    def test_quarter_period(self, p):
        assert sin_p(p, 0.5 * pi_p(p)) == 1.0
        assert cos_p(p, 0.5 * pi_p(p)) == 0.0

    def test_classical(self):
        assert sin_p(2, math.pi / 6) == pytest.approx(0.5, abs=1e-15)
        assert tan_p(2, math.pi / 4) == pytest.approx(1.0, abs=1e-15)
        assert tanh_p(2, 1.0) == pytest.approx(math.tanh(1.0), abs=1e-15)

    @pytest.mark.parametrize(
        "kind,p,x,expected",
        [
            (FunctionKind.SIN, 3.0, 0.7, ov.SIN_3_AT_0_7),
            (FunctionKind.COS, 3.0, 0.7, ov.COS_3_AT_0_7),
            (FunctionKind.TAN, 5.0, 0.9, ov.TAN_5_AT_0_9),
            (FunctionKind.COS, 1.5, 1.5, ov.COS_1_5_AT_1_5),
            (FunctionKind.TANH, 3.0, 0.8, ov.TANH_3_AT_0_8),
            (FunctionKind.SINH, 3.0, 2.0, ov.SINH_3_AT_2),
            (FunctionKind.SINH, 1.5, 5.0, ov.SINH_1_5_AT_5),
        ],
    )
    def test_mpmath_oracles(self, kind, p, x, expected):
        assert forward_eval(kind, p, x) == pytest.approx(expected, rel=1e-13)

    def test_sin_inverts_quadrature(self):
        s = sin_p(3, 0.7)
        assert arcsin_p(3, s) == pytest.approx(0.7, abs=1e-14)

    @pytest.mark.parametrize("p", [1.5, 3.0, 10.0])
    def test_sinh_inverts_extended_arcsinh(self, p):
        for x in (0.3, 2.0, 12.0, 29.0):
            assert arcsinh_p(p, sinh_p(p, x)) == pytest.approx(x, rel=1e-13)

    def test_sin_cos_pair(self):
        s, c = sin_cos_p(3, 0.9)
        assert (s, c) == (sin_p(3, 0.9), cos_p(3, 0.9))

    @pytest.mark.parametrize("p", [1.5, 3.0])
    def test_tanh_tail(self, p):
        # beyond the cap the asymptotic form takes over; the value stays below 1
        t_in, t_out = tanh_p(p, X_MAX), tanh_p(p, X_MAX + 1.0)
        assert t_in <= t_out <= 1.0
        assert tanh_p(p, 1e6) == 1.0

    def test_near_endpoint_overshoot_snaps(self):
        h = 0.5 * pi_p(2)
        assert sin_p(2, math.nextafter(h, 4.0)) == 1.0


class TestDomain:
    @pytest.mark.parametrize(
        "kind,x",
        [
            (FunctionKind.SIN, 9.0),
            (FunctionKind.SIN, -0.1),
            (FunctionKind.COS, 2.0),
            (FunctionKind.TAN, 0.5 * math.pi),
            (FunctionKind.SINH, X_MAX + 1),
            (FunctionKind.COSH, -1.0),
            (FunctionKind.TANH, -1e-3),
            (FunctionKind.TANH, math.nan),
        ],
    )
    def test_rejects(self, kind, x):
        with pytest.raises(DomainError):
            forward_eval(kind, 2.0, x)

    def test_message_names_interval(self):
        with pytest.raises(DomainError, match=r"x must lie in \[0, 1\.5707963"):
            sin_p(2, 9.0)

    def test_domain_table(self):
        assert forward_domain(FunctionKind.TAN, 2) == (0.0, 0.5 * math.pi, False)
        assert forward_domain(FunctionKind.TANH, 2)[1] == math.inf
        assert forward_domain(FunctionKind.COSH, 2) == (0.0, X_MAX, True)


class TestIdentities:
    @pytest.mark.parametrize("p", P_SET + [1.1, 100.0])
    def test_pythagorean(self, p):
        h = 0.5 * pi_p(p)
        for i in range(1, 51):
            x = h * i / 51
            assert abs(cos_p(p, x) ** p + sin_p(p, x) ** p - 1) < 1e-10

    @pytest.mark.parametrize("p", P_SET)
    def test_hyperbolic_normalized(self, p):
        for i in range(1, 51):
            x = 5 * i / 50
            assert abs(tanh_p(p, x) ** p + cosh_p(p, x) ** -p - 1) < 1e-12

    @settings(max_examples=60, deadline=None)
    @given(p=st.floats(1.2, 12.0), u=st.floats(0.001, 0.999))
    def test_tan_relation(self, p, u):
        x = u * 0.5 * pi_p(p)
        assert tan_p(p, x) == pytest.approx(sin_p(p, x) / cos_p(p, x), rel=1e-15)

    @settings(max_examples=40, deadline=None)
    @given(p=st.floats(1.2, 12.0), u=st.floats(0.0, 0.999))
    def test_tan_matches_arctan_below_one(self, p, u):
        # arctan_p(tan_p x) = x whenever tan_p x <= 1
        x = u * arctan_p(p, 1.0)
        assert arctan_p(p, tan_p(p, x)) == pytest.approx(x, abs=1e-12)

    @pytest.mark.parametrize("p", P_SET)
    def test_bounds_and_monotone(self, p):
        h = 0.5 * pi_p(p)
        xs = [h * i / 60 for i in range(61)]
        s = [sin_p(p, x) for x in xs]
        assert all(0 <= v <= 1 for v in s)
        assert all(a < b for a, b in zip(s, s[1:]))
        th = [tanh_p(p, 0.1 * i) for i in range(1, 80)]
        assert all(0 < v <= 1 for v in th)
        assert all(a <= b for a, b in zip(th, th[1:]))
        # strictly below 1 while 1 - tanh_p is resolvable in double precision
        assert all(v < 1 for v in th if (1 - v) * p > 1e-15 or v < 0.9)
        assert tanh_p(p, 2.0) < 1


class TestDerivatives:
    def test_simple_values(self):
        assert derivative_eval(FunctionKind.SIN, 3, 0.0) == 1.0
        assert derivative_eval(FunctionKind.TAN, 3, 0.0) == 1.0
        assert derivative_eval(FunctionKind.COS, 2, math.pi / 6) == pytest.approx(-0.5, abs=1e-15)
        assert derivative_eval(FunctionKind.COS, 3, 0.0) == 0.0

    def test_tanh(self):
        t = tanh_p(3, 0.8)
        d = derivative_eval(FunctionKind.TANH, 3, 0.8)
        assert d == pytest.approx(1 - t**3, rel=1e-14)
        assert d == pytest.approx(central_diff(lambda x: tanh_p(3, x), 0.8), rel=1e-5)

    def test_cosh_corrected_form(self):
        p, x = 3.0, 1.2
        expected = cosh_p(p, x) ** (2 - p) * sinh_p(p, x) ** (p - 1)
        assert derivative_eval(FunctionKind.COSH, p, x) == expected
        # the trigonometric variant of the same formula is a different function
        trig = cos_p(p, x) ** (2 - p) * sin_p(p, x) ** (p - 1)
        assert abs(trig - central_diff(lambda t: cosh_p(p, t), x)) > 0.1

    def test_cos_singular_at_quarter_period(self):
        with pytest.raises(DomainError):
            derivative_eval(FunctionKind.COS, 3.0, 0.5 * pi_p(3.0))

    @pytest.mark.parametrize("kind", list(FunctionKind), ids=str)
    @pytest.mark.parametrize("p", [1.5, 2.5, 4.0])
    def test_against_finite_differences(self, kind, p):
        hi = {FunctionKind.SINH: 4.0, FunctionKind.COSH: 4.0, FunctionKind.TANH: 4.0}.get(kind, 0.5 * pi_p(p))
        for i in range(1, 8):
            x = hi * i / 8
            fd = central_diff(lambda t: forward_eval(kind, p, t), x)
            assert derivative_eval(kind, p, x) == pytest.approx(fd, rel=1e-5)


class TestEigenProfile:
    def test_classical(self):
        vals = plaplacian_lambda_profile(2, 16)
        assert len(vals) == 16
        assert all(v == pytest.approx(math.pi**2, rel=1e-6) for v in vals)

    def test_p3_constant(self):
        vals = plaplacian_lambda_profile(3, 32)
        mean = sum(vals) / len(vals)
        assert (max(vals) - min(vals)) / mean < 1e-4
        assert mean == pytest.approx(ov.LAMBDA_P[3.0], rel=1e-6)

    def test_needs_eight_points(self):
        with pytest.raises(DomainError):
            plaplacian_lambda_profile(3, 7)

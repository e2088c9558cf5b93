"""Gegenbauer / Chebyshev / theta checks against independent oracles."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from conformal_heat.errors import DomainError, SeriesDivergenceError
from conformal_heat.special_functions import (
    GegenbauerParam,
    ThetaArgs,
    chebyshev_t,
    chebyshev_u,
    gegenbauer_c,
    gegenbauer_tilde,
    gegenbauer_tilde_sup,
    theta,
    theta_dv,
)


def _conv_exact(a, b, order):
    res = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj and i + j <= order:
                    res[i + j] += ai * bj
    return res


def _generating_coeffs(nu: float, t: float, order: int) -> np.ndarray:
    # Expand (1 - u)^(-nu), u = 2 t xi - xi^2.  This is the defining series,
    # independent of the recurrence under test.  Exact rationals throughout:
    # float convolution cancels ~10 digits at order 25 for |t| near 1.
    nu_q, t_q = Fraction(nu), Fraction(t)
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    u = [Fraction(0)] * (order + 1)
    if order >= 1:
        u[1] = 2 * t_q
    if order >= 2:
        u[2] = Fraction(-1)
    upow = list(out)
    binom = Fraction(1)
    for k in range(1, order + 1):
        binom *= (nu_q + k - 1) / k
        upow = _conv_exact(upow, u, order)
        out = [c + binom * p for c, p in zip(out, upow)]
    return np.array([float(c) for c in out])


@pytest.mark.parametrize("nu", [0.5, 1.0, 1.5, 2.5, -0.5, 0.0])
@pytest.mark.parametrize("t", [-0.9, 0.0, 0.7])
def test_gegenbauer_matches_generating_function(nu, t):
    coeffs = _generating_coeffs(nu, t, 25)
    got = np.array([gegenbauer_c(m, nu, t) for m in range(26)])
    assert_allclose(got, coeffs, rtol=1e-10, atol=1e-10)


def test_gegenbauer_frozen_values():
    # frozen from the generating-function expansion
    assert gegenbauer_c(3, 1.0, 1.0) == pytest.approx(4.0, abs=1e-14)
    assert gegenbauer_c(2, 1.0, 0.0) == pytest.approx(-1.0, abs=1e-14)


def test_tilde_nu0_is_chebyshev_limit():
    assert gegenbauer_tilde(0, 0.0, 0.3) == 1.0
    # frozen: 2 T_2(0) = -2
    assert gegenbauer_tilde(2, 0.0, 0.0) == pytest.approx(-2.0, abs=1e-14)
    for m in range(1, 8):
        for t in (-0.8, 0.1, 0.9):
            assert gegenbauer_tilde(m, 0.0, t) == pytest.approx(2.0 * chebyshev_t(m, t), abs=1e-13)


@pytest.mark.parametrize("nu", [1e-7, -1e-7])
def test_tilde_continuous_at_nu0(nu):
    # ((m+nu)/nu) C_m^nu -> 2 T_m as nu -> 0
    for m in (1, 3, 6):
        for t in (-0.6, 0.4):
            lim = (m + nu) / nu * gegenbauer_c(m, nu, t)
            assert lim == pytest.approx(2.0 * chebyshev_t(m, t), rel=1e-5)


def test_tilde_table_nu_minus_half():
    for sign in (1.0, -1.0):
        assert gegenbauer_tilde(0, -0.5, sign) == 1.0
        assert gegenbauer_tilde(1, -0.5, sign) == sign
        for m in (2, 3, 7):
            assert gegenbauer_tilde(m, -0.5, sign) == 0.0


@pytest.mark.parametrize("nu,m", [(0.5, 3), (0.5, 8), (1.0, 5), (2.0, 8)])
def test_tilde_sup_bound(nu, m):
    grid = np.linspace(-1.0, 1.0, 1001)
    observed = max(abs(gegenbauer_tilde(m, nu, t)) for t in grid)
    bound = gegenbauer_tilde_sup(m, nu)
    assert observed == pytest.approx(bound, rel=1e-9)
    gamma_form = (m + nu) / nu * math.exp(
        math.lgamma(m + 2 * nu) - math.lgamma(m + 1) - math.lgamma(2 * nu)
    )
    assert bound == pytest.approx(gamma_form, rel=1e-12)


def test_chebyshev_cos_identities():
    for theta_ang in (0.3, 1.1, 2.7):
        t = math.cos(theta_ang)
        for m in range(9):
            assert chebyshev_t(m, t) == pytest.approx(math.cos(m * theta_ang), abs=1e-12)
            assert chebyshev_u(m, t) == pytest.approx(
                math.sin((m + 1) * theta_ang) / math.sin(theta_ang), abs=1e-11
            )


def test_chebyshev_u_at_one():
    # frozen limit value: U_m(1) = m + 1, checked against sin((m+1)x)/sin(x)
    assert chebyshev_u(3, 1.0) == pytest.approx(4.0, abs=1e-14)
    x = 1e-8
    assert chebyshev_u(3, 1.0) == pytest.approx(math.sin(4 * x) / math.sin(x), abs=1e-8)


def _direct_theta(v, tau, order=200):
    return sum(
        cmath.exp(1j * math.pi * tau * m * m + 2j * math.pi * m * v)
        for m in range(-order, order + 1)
    )


def _direct_theta_dv(v, tau, order=200):
    return sum(
        2j * math.pi * m * cmath.exp(1j * math.pi * tau * m * m + 2j * math.pi * m * v)
        for m in range(-order, order + 1)
    )


@pytest.mark.parametrize(
    "v,tau",
    [(0.0, 1j), (0.25, 1j), (0.3, 0.4 + 0.9j), (0.1 + 0.05j, 0.6j), (-0.7, 0.2 + 0.35j)],
)
def test_theta_against_direct_summation(v, tau):
    got = theta(ThetaArgs(v, tau, 1e-15))
    want = _direct_theta(v, tau)
    assert abs(got - want) < 1e-13 * max(1.0, abs(want))
    got_dv = theta_dv(ThetaArgs(v, tau, 1e-15))
    want_dv = _direct_theta_dv(v, tau)
    assert abs(got_dv - want_dv) < 1e-12 * max(1.0, abs(want_dv))


def test_theta_frozen_value_at_i():
    # frozen by direct summation of 1 + 2 sum exp(-pi m^2)
    assert abs(theta(ThetaArgs(0.0, 1j, 1e-15)) - 1.086434811213308) < 1e-12


def test_theta_cosine_form():
    partial = 1.0 + 2.0 * sum(
        math.exp(-math.pi * m * m) * math.cos(math.pi * m / 2.0) for m in range(1, 40)
    )
    assert theta(ThetaArgs(0.25, 1j, 1e-15)) == pytest.approx(partial, abs=1e-14)


@pytest.mark.parametrize("v,tau", [(0.2, 0.5j), (-0.15, 0.3j), (0.37, 0.2 + 0.8j)])
def test_theta_dv_finite_differences(v, tau):
    h = 1e-5
    d = theta_dv(ThetaArgs(v, tau, 1e-15))
    fd = (theta(ThetaArgs(v + h, tau, 1e-15)) - theta(ThetaArgs(v - h, tau, 1e-15))) / (2 * h)
    assert abs(d - fd) / abs(d) < 1e-8


def test_theta_even_and_periodic():
    for v, tau in ((0.3, 0.7j), (0.12, 0.4 + 0.5j)):
        a = theta(ThetaArgs(v, tau, 1e-15))
        assert abs(a - theta(ThetaArgs(-v, tau, 1e-15))) < 1e-14 * abs(a)
        assert abs(a - theta(ThetaArgs(v + 1.0, tau, 1e-15))) < 1e-12 * abs(a)


def test_theta_divergence_guard():
    with pytest.raises(SeriesDivergenceError):
        ThetaArgs(0.0, 1.0 + 0.0j)
    with pytest.raises(SeriesDivergenceError):
        ThetaArgs(0.0, 0.5 - 0.1j)


def test_domain_guards():
    with pytest.raises(DomainError):
        gegenbauer_c(2, 1.0, 1.5)
    with pytest.raises(DomainError):
        gegenbauer_c(-1, 1.0, 0.0)
    with pytest.raises(DomainError):
        GegenbauerParam(-1.0, 2)
    with pytest.raises(DomainError):
        gegenbauer_tilde_sup(4, -0.25)
    # a hair beyond 1 from rounding is tolerated
    assert gegenbauer_c(2, 1.0, 1.0 + 5e-13) == pytest.approx(gegenbauer_c(2, 1.0, 1.0))

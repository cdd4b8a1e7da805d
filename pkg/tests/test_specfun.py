import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hamburger.errors import DomainError, PoleProximity
from hamburger.specfun import (bernoulli_numbers, bernoulli_periodic, chi, cispi, frac1, gamma,
                               hurwitz_zeta, lerch_sum, log_gamma, periodic_zeta, riemann_zeta,
                               theta)

mpmath.mp.dps = 30


def mp_c(z):
    return mpmath.mpc(z.real, z.imag)


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


# --- helpers -------------------------------------------------------------


def test_cispi_exact_at_quarter_turns():
    assert cispi(0.0) == 1
    assert cispi(1.0) == -1
    assert cispi(0.5) == 1j
    assert cispi(-0.5) == -1j
    assert cispi(7.0) == -1
    assert abs(cispi(0.3) - np.exp(0.3j * np.pi)) < 1e-15


def test_frac1_maps_into_half_open_unit_interval():
    assert frac1(0.0) == 1.0
    assert frac1(3.0) == 1.0
    assert frac1(-0.25) == 0.75
    assert frac1(2.5) == 0.5


# --- log-Gamma and chi -----------------------------------------------------


def test_log_gamma_small_cases():
    assert abs(log_gamma(1)) < 1e-15
    assert abs(log_gamma(0.5) - 0.5 * math.log(math.pi)) < 1e-14
    assert abs(log_gamma(5) - math.log(24)) < 1e-14


def test_log_gamma_matches_mpmath_on_a_grid():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(300):
        z = complex(rng.uniform(-60, 100), rng.uniform(-100, 100))
        if abs(z) > 100:
            continue
        exact = complex(mpmath.loggamma(mp_c(z)))
        worst = max(worst, abs(log_gamma(z) - exact) / max(1.0, abs(exact)))
    assert worst < 1e-12


def test_log_gamma_principal_branch_is_continuous_across_negative_axis():
    # mpmath's loggamma is the principal branch; compare just above and below
    for x in (-3.5, -10.25, -0.7):
        for eps in (1e-6, -1e-6):
            z = complex(x, eps)
            assert abs(log_gamma(z) - complex(mpmath.loggamma(mp_c(z)))) < 1e-11


def test_gamma_and_poles():
    assert abs(gamma(5) - 24) < 1e-12
    with pytest.raises(PoleProximity):
        log_gamma(-3 + 1e-10)
    with pytest.raises(PoleProximity):
        log_gamma(0)


def test_chi_known_values():
    assert abs(chi(0.5) - 1) < 1e-15
    assert abs(chi(-1) - (-1 / (2 * math.pi**2))) < 1e-15
    v = chi(2 + 3j)
    assert abs(v * chi(1 - (2 + 3j)) - 1) < 1e-12


def test_chi_matches_gamma_quotient_from_mpmath():
    for s in (0.3 + 2j, -4.5 + 1j, 7.2 - 9j, 2.0):
        sm = mp_c(s)
        exact = complex(mpmath.pi ** (sm - 0.5) * mpmath.gamma((1 - sm) / 2) / mpmath.gamma(sm / 2))
        assert rel(chi(s), exact) < 1e-13


def test_chi_poles_and_zeros():
    for s in (1, 3, 5):
        with pytest.raises(PoleProximity):
            chi(s)
    for s in (0, -2, -4):
        value, flag = chi(s, full_output=True)
        assert value == 0 and flag
    value, flag = chi(0.5, full_output=True)
    assert not flag


# --- zeta -----------------------------------------------------------------


def test_riemann_zeta_classical_values():
    assert abs(riemann_zeta(2) - math.pi**2 / 6) < 1e-14
    assert abs(riemann_zeta(0) + 0.5) < 1e-14
    assert abs(riemann_zeta(-1) + 1 / 12) < 1e-14
    assert abs(riemann_zeta(-2)) < 1e-14


def test_riemann_zeta_two_against_partial_sum_with_tail():
    # direct summation to 10^6 terms plus the Euler-Maclaurin tail 1/N - 1/(2N^2)
    n = np.arange(1, 1_000_001, dtype=float)
    partial = math.fsum(1.0 / n**2)
    big = 1_000_000.0
    assert abs(riemann_zeta(2) - (partial + 1 / big - 1 / (2 * big**2))) < 1e-13


def test_riemann_zeta_against_mpmath_on_spec_region():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(400):
        s = complex(rng.uniform(-30, 30), rng.uniform(-50, 50))
        if abs(s - 1) < 0.05:
            continue
        worst = max(worst, rel(riemann_zeta(s), complex(mpmath.zeta(mp_c(s)))))
    assert worst < 1e-10


def test_riemann_zeta_pinned_parameters_still_converge():
    assert abs(riemann_zeta(2, terms=20, corrections=12) - math.pi**2 / 6) < 1e-13


def test_riemann_zeta_pole():
    with pytest.raises(PoleProximity):
        riemann_zeta(1 + 1e-9)


def test_hurwitz_zeta_values():
    s = 3 + 1j
    assert abs(hurwitz_zeta(s, 1.0) - riemann_zeta(s)) < 1e-14
    assert abs(hurwitz_zeta(2, 0.5) - math.pi**2 / 2) < 1e-13
    assert abs(hurwitz_zeta(0, 0.3) - 0.2) < 1e-14


def test_hurwitz_half_identity():
    # sum over odd n of n^-s = (1 - 2^-s) zeta(s), and zeta(s, 1/2) = 2^s times that
    for s in (2.5, 3 + 4j, -1.5 + 2j, -7 + 10j):
        assert rel(hurwitz_zeta(s, 0.5), (2**s - 1) * riemann_zeta(s)) < 1e-10


def test_hurwitz_zeta_against_mpmath():
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(300):
        s = complex(rng.uniform(-30, 30), rng.uniform(-50, 50))
        a = rng.uniform(0.01, 1.0)
        if abs(s - 1) < 0.05:
            continue
        worst = max(worst, rel(hurwitz_zeta(s, a), complex(mpmath.zeta(mp_c(s), a))))
    assert worst < 1e-10


def test_hurwitz_shift_identity_against_direct_sum():
    rng = np.random.default_rng(5)
    m = np.arange(1, 200_001, dtype=float)
    for _ in range(10):
        a = rng.uniform(0.05, 1.0)
        s = complex(rng.uniform(3, 6), rng.uniform(-5, 5))
        direct = complex(np.sum(np.exp(-s * np.log(m + a))))
        assert abs(hurwitz_zeta(s, a) - a**-s - direct) < 1e-10


def test_hurwitz_zeta_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0.0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 1.5)
    with pytest.raises(PoleProximity):
        hurwitz_zeta(1, 0.3)


# --- twisted sums ---------------------------------------------------------


def test_periodic_zeta_classical_values():
    assert abs(periodic_zeta(1.0, 2) - math.pi**2 / 6) < 1e-14
    assert abs(periodic_zeta(0.5, 1) + math.log(2)) < 1e-13
    assert abs(periodic_zeta(0.5, 2) + math.pi**2 / 12) < 1e-13


def test_periodic_zeta_against_direct_sum_at_re_s_3():
    n = np.arange(1, 100_001, dtype=float)
    rng = np.random.default_rng(6)
    for _ in range(10):
        e = rng.uniform(0.01, 1.0)
        s = complex(3.0, rng.uniform(-10, 10))
        direct = complex(np.sum(np.exp(2j * np.pi * e * n - s * np.log(n))))
        assert abs(periodic_zeta(e, s) - direct) < 1e-9


def test_lerch_sum_examples():
    assert abs(lerch_sum(1, 0.3, 2) - periodic_zeta(0.3, 2)) < 1e-14
    # Z(1/2, 1, 2) = sum exp(2 pi i (m + 1/2)) (m + 1/2)^-2 = -pi^2 / 2
    assert abs(lerch_sum(0.5, 1.0, 2) + math.pi**2 / 2) < 1e-13
    m = np.arange(0, 1_000_000, dtype=float) + 0.5
    direct = complex(np.sum(np.exp(1j * np.pi * m) / m**2))
    assert abs(lerch_sum(0.5, 0.5, 2) - direct) < 1e-6


def test_lerch_sum_against_mpmath_lerchphi():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(150):
        d = rng.uniform(0.01, 1.0)
        e = rng.uniform(0.01, 0.99)
        s = complex(rng.uniform(-8, 9), rng.uniform(-20, 20))
        z = mpmath.exp(2j * mpmath.pi * e)
        exact = complex(mpmath.exp(2j * mpmath.pi * e * d) * mpmath.lerchphi(z, mp_c(s), d))
        worst = max(worst, rel(lerch_sum(d, e, s), exact))
    assert worst < 1e-11


def test_lerch_sum_domain():
    with pytest.raises(DomainError):
        lerch_sum(0.0, 0.5, 2)
    with pytest.raises(DomainError):
        lerch_sum(0.5, 1.5, 2)
    with pytest.raises(PoleProximity):
        lerch_sum(0.3, 1.0, 1)


# --- Bernoulli and theta --------------------------------------------------


def test_bernoulli_numbers_convention():
    b = bernoulli_numbers(10)
    assert b[0] == 1 and b[1] == -0.5 and b[2] == pytest.approx(1 / 6)
    assert all(b[k] == 0 for k in (3, 5, 7, 9))
    assert float(b[10]) == pytest.approx(5 / 66)


def test_bernoulli_periodic_quoted_values():
    # B_0 = 1 and B_2 = x^2 - x + 1/6
    assert bernoulli_periodic(0, 7.3) == 1
    assert bernoulli_periodic(2, 0.5) == pytest.approx(-1 / 12, abs=1e-16)
    assert bernoulli_periodic(2, 1.5) == pytest.approx(-1 / 12, abs=1e-16)


def test_bernoulli_periodic_against_mpmath():
    for n in (1, 3, 6, 17, 40):
        for x in (0.1, 0.37, 2.9, -0.25):
            frac = x - math.floor(x)
            assert bernoulli_periodic(n, x) == pytest.approx(float(mpmath.bernpoly(n, frac)), rel=1e-12, abs=1e-12)


def test_bernoulli_periodic_domain():
    for bad in (-1, 41, 2.5):
        with pytest.raises(DomainError):
            bernoulli_periodic(bad, 0.3)


def test_theta_values():
    assert theta(1) == pytest.approx(1.0864348112133080, abs=1e-15)
    assert theta(4) == pytest.approx(1 + 2 * math.exp(-4 * math.pi) + 2 * math.exp(-16 * math.pi), abs=1e-16)
    assert theta(0.25) == pytest.approx(2 * theta(4), abs=1e-14)
    n = np.arange(-40, 41)
    assert theta(0.3) == pytest.approx(math.fsum(np.exp(-np.pi * n**2 * 0.3)), abs=1e-15)


def test_theta_domain():
    with pytest.raises(DomainError):
        theta(0)


# --- properties -------------------------------------------------------------

box = st.complex_numbers(min_magnitude=0, max_magnitude=25, allow_nan=False, allow_infinity=False).filter(
    lambda s: -8 <= s.real <= 9 and abs(s.imag) <= 20 and abs(s - round(s.real)) > 0.05)


@settings(max_examples=60, deadline=None)
@given(box)
def test_chi_reflection_property(s):
    assert abs(chi(s) * chi(1 - s) - 1) < 1e-11


@settings(max_examples=60, deadline=None)
@given(box)
def test_zeta_functional_equation_property(s):
    assert rel(riemann_zeta(s), chi(s) * riemann_zeta(1 - s)) < 1e-8


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 20))
def test_theta_jacobi_property(t):
    assert abs(theta(1 / t) - math.sqrt(t) * theta(t)) < 1e-12 * max(1.0, theta(1 / t))

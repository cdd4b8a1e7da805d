"""Acceptance criteria 1-10, each printing a single PASS/FAIL line.

Fixtures are seeded so the numbers in the summary are reproducible.  Where an
independent reference exists (mpmath, closed-form polynomials, direct sums)
it is used instead of a second call into the package.
"""

import cmath
import math

import mpmath
import numpy as np
import pytest

from hamburger.dirichlet import (ZetaShiftCombination, estimate_support_gap, recover_shift_coefficients,
                                 synthesize_samples, zeta_shift_g)
from hamburger.measures import decompose_prony, expand_window, gaussian_pairing_check, TdeDecomposition
from hamburger.specfun import bernoulli_periodic, chi, riemann_zeta, theta
from hamburger.tde import completed_f, contour_residue, tde_f, tde_g
from hamburger.verify import SplitMix64, compare_decompositions, random_decomposition

mpmath.mp.dps = 30


def mixed(a, b):
    return abs(a - b) / max(1.0, abs(b))


def box(rng, n, re, im, radius=0.05):
    """n seeded points in the box, kept away from the real integers (poles and zeros of chi)."""
    pts = []
    while len(pts) < n:
        s = complex(rng.uniform(*re), rng.uniform(*im))
        if abs(s - round(s.real)) > radius:
            pts.append(s)
    return pts


def test_criterion_01_chi_reflection(report):
    pts = box(np.random.default_rng(101), 200, (-8, 9), (-20, 20))
    err = max(abs(chi(s) * chi(1 - s) - 1) for s in pts)
    # chi itself against the gamma quotient in extended precision
    ref = max(mixed(chi(s), complex(mpmath.pi ** (mpmath.mpc(s) - 0.5) * mpmath.gamma((1 - mpmath.mpc(s)) / 2)
                                    / mpmath.gamma(mpmath.mpc(s) / 2))) for s in pts[:40])
    assert report(1, "chi(s) chi(1-s) = 1 on 200 points", max(err, ref), 1e-11)


def test_criterion_02_zeta_functional_equation(report):
    pts = box(np.random.default_rng(102), 200, (-8, 9), (-20, 20))
    err = max(mixed(riemann_zeta(s), chi(s) * riemann_zeta(1 - s)) for s in pts)
    oracle = max(mixed(riemann_zeta(s), complex(mpmath.zeta(mpmath.mpc(s)))) for s in pts[:40])
    zeros = 0.0
    for s in (-2, -4, -6):
        value, at_zero = chi(s, full_output=True)
        assert at_zero and value == 0
        zeros = max(zeros, abs(riemann_zeta(s)), abs(value * riemann_zeta(1 - s)))
    assert report(2, "zeta(s) = chi(s) zeta(1-s), trivial zeros exact", max(err, oracle, zeros), 1e-8)


def test_criterion_03_hurwitz_case(report):
    rng = np.random.default_rng(103)
    worst = 0.0
    for d in (0.2, 0.5, 0.8):
        for _ in range(50):
            s = complex(rng.uniform(2, 6), rng.uniform(-10, 10))
            worst = max(worst, mixed(tde_g(d, 1, s), chi(s) * tde_f(d, 1, 1 - s)))
    assert report(3, "tde_g(d,1,s) = chi(s) tde_f(d,1,1-s)", worst, 1e-7)


def test_criterion_04_residue_table(report):
    def expected(d, e):
        # closed forms written out independently of the package
        di, ei = float(d).is_integer(), float(e).is_integer()
        at0 = -cmath.exp(-1j * math.pi * d * e) if di else 0
        at1 = cmath.exp(1j * math.pi * d * e) if ei else 0
        return at0, at1

    worst = 0.0
    for d, e in ((0.3, 0.7), (1, 0.25), (0.4, 1), (1, 1), (2, 3)):
        at0, at1 = expected(d, e)
        for center, target in ((0, at0), (1, at1)):
            value = contour_residue(lambda s: completed_f(d, e, s), complex(center), nodes=64, max_nodes=512)
            worst = max(worst, abs(value - target))
    # T_{1,1} = -D_0, so its completed transform is minus the completed zeta: residues +1 at 0, -1 at 1
    completed_zeta = lambda s: -complex(mpmath.pi ** (-mpmath.mpc(s) / 2) * mpmath.gamma(mpmath.mpc(s) / 2)
                                        * mpmath.zeta(mpmath.mpc(s)))
    for center, target in ((0, 1), (1, -1)):
        worst = max(worst, abs(contour_residue(completed_zeta, complex(center)) - target))
    assert report(4, "residues by 64-512 node contour integration", worst, 1e-6)


def test_criterion_05_prony_round_trip(report):
    rng = SplitMix64(105)
    coeff = param = 0.0
    for _ in range(50):
        dec = random_decomposition(rng, max_terms=4, separation=0.05)
        c, p = compare_decompositions(dec, decompose_prony(expand_window(dec, 40), 40))
        coeff, param = max(coeff, c), max(param, p)
    ok = report(5, "Prony coefficients over 50 decompositions", coeff, 1e-8)
    ok &= report(5, "Prony parameters (d, e) over 50 decompositions", param, 1e-9)
    assert ok


def test_criterion_06_gaussian_pairing(report):
    rng = SplitMix64(106)
    decs = [random_decomposition(rng) for _ in range(20)]
    err = max(gaussian_pairing_check(dec, t, 10) for dec in decs for t in (0.5, 1.0, 2.0))
    ok = report(6, "Gaussian pairing, 20 decompositions, t in {1/2, 1, 2}", err, 1e-10)
    lattice = TdeDecomposition.from_terms([(1, 1, -1)])
    lat = 0.0
    for t in (0.25, 0.5, 1.0, 2.0, 4.0):
        lat = max(lat, abs(theta(1 / t) - math.sqrt(t) * theta(t)), gaussian_pairing_check(lattice, t, 10),
                  abs(theta(t) - float(mpmath.jtheta(3, 0, mpmath.exp(-mpmath.pi * t)))))
    ok &= report(6, "lattice case theta(1/t) = sqrt(t) theta(t)", lat, 1e-13)
    assert ok


def _gk_ratio_error():
    worst = 0.0
    for k in range(-3, 4):
        model = (-4 * math.pi**2) ** (-k) * 200.0 ** (2 * k)
        worst = max(worst, abs(zeta_shift_g(k, 200.0) / model - 1))
    return worst


@pytest.mark.xfail(strict=True, reason="g_k(200)/((-4 pi^2)^-k 200^2k) - 1 is about k(2k-1)/200 for k > 0 "
                                       "and k(2k+1)/200 for k < 0, i.e. 0.105 at k = 3 and 0.075 at k = -3")
def test_criterion_07_gk_ratio(report):
    assert report(7, "g_k(200) / ((-4 pi^2)^-k 200^2k) within 5%, |k| <= 3", _gk_ratio_error(), 0.05)


def test_criterion_07_gk_sign(report):
    bad = 0
    for k in range(-3, 4):
        value = zeta_shift_g(k, 200.0)
        bad += np.sign(value.real) != (-1) ** k
        # exact value from the rising factorial and zeta, in extended precision
        sm = mpmath.mpf(200)
        factor = mpmath.rf(sm, 2 * k) if k >= 0 else 1 / mpmath.rf(sm + 2 * k, -2 * k)
        exact = complex(factor * mpmath.zeta(sm + 2 * k) / (-4 * mpmath.pi**2) ** k)
        assert abs(value - exact) <= 1e-13 * abs(exact)
    assert report(7, "sign of g_k(200) is (-1)^k", float(bad), 0.0)


def test_criterion_08_coefficient_recovery(report):
    rng = np.random.default_rng(108)
    sigmas = range(10, 41, 2)
    worst = 0.0
    for _ in range(20):
        ks = rng.choice(np.arange(-3, 4), size=int(rng.integers(1, 5)), replace=False)
        c = ZetaShiftCombination({int(k): complex(rng.normal(), rng.normal()) for k in ks})
        fit = recover_shift_coefficients(synthesize_samples(c, sigmas), -3, 3)
        worst = max(worst, fit.max_difference(c))
    ok = report(8, "recovered shift coefficients, |k| <= 3", worst, 1e-7)
    c = 1.5 - 0.5j
    fit = recover_shift_coefficients([(x, c * complex(mpmath.zeta(x))) for x in sigmas], -3, 3).pruned()
    constant = abs(fit.coefficients[0] - c) if set(fit.coefficients) == {0} else math.inf
    ok &= report(8, "constant limit recovers {0: c}", constant, 1e-7)
    assert ok


def test_criterion_09_support_gap(report):
    sigmas = range(40, 71, 5)
    ok = report(9, "Y0 for 2^-sigma", abs(estimate_support_gap(lambda x: 2.0**-x, sigmas) - 2.0), 1e-6)
    ok &= report(9, "Y0 for zeta", abs(estimate_support_gap(lambda x: complex(mpmath.zeta(x)), sigmas) - 1.0), 1e-3)
    ok &= report(9, "Y0 for tde_g(0.3, 0.2, .)",
                 abs(estimate_support_gap(lambda x: tde_g(0.3, 0.2, x), sigmas) - 0.2), 5e-2)
    assert ok


def test_criterion_10_bernoulli_fourier(report):
    x = np.random.default_rng(110).uniform(-3, 3, 100)
    frac = x - np.floor(x)
    k = np.arange(1, 20_001, dtype=float)
    cos = np.cos(2 * np.pi * np.outer(x, k))
    b2_series = 2 * 2 / (2 * np.pi) ** 2 * (cos @ k**-2.0)
    b4_series = -2 * 24 / (2 * np.pi) ** 4 * (cos @ k**-4.0)
    b2_poly = frac**2 - frac + 1 / 6
    b4_poly = frac**4 - 2 * frac**3 + frac**2 - 1 / 30
    b2 = np.array([bernoulli_periodic(2, v) for v in x])
    b4 = np.array([bernoulli_periodic(4, v) for v in x])
    assert np.max(np.abs(b2 - b2_poly)) < 1e-12 and np.max(np.abs(b4 - b4_poly)) < 1e-12
    err = max(np.max(np.abs(b2 - b2_series)), np.max(np.abs(b4 - b4_series)))
    assert report(10, "B_2({x}), B_4({x}) vs truncated Fourier series", float(err), 1e-6)

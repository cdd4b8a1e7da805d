"""Named verification suites with reproducible seeded fixtures.

Random fixtures come from SplitMix64:

    state <- state + 0x9E3779B97F4A7C15            (mod 2^64)
    z <- state
    z <- (z xor (z >> 30)) * 0xBF58476D1CE4E5B9    (mod 2^64)
    z <- (z xor (z >> 27)) * 0x94D049BB133111EB    (mod 2^64)
    output z xor (z >> 31)

and a uniform double in [0, 1) is (output >> 11) * 2^-53.  The sequence
depends only on the seed, so reports are identical across runs.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .dirichlet import (ZetaShiftCombination, estimate_support_gap, recover_shift_coefficients,
                        synthesize_samples, zeta_shift_g)
from .errors import NumericalError, UnknownSuite
from .measures import (TdeDecomposition, annihilator_residual, decompose_prony, expand_window,
                       fourier_measure, gaussian_pairing_check)
from .specfun import bernoulli_periodic, chi, riemann_zeta, theta
from .tde import (closed_form_residues, completed_f, contour_residue, fourier_map, reduce_params,
                  tde_f, tde_g)

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = int(seed) & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0**-53)

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        return lo + self.next_u64() % (hi - lo + 1)

    def complex_in_box(self, re: tuple[float, float], im: tuple[float, float]) -> complex:
        return complex(self.uniform(*re), self.uniform(*im))


@dataclass(frozen=True)
class Check:
    label: str
    max_error: float
    tolerance: float
    count: int = 1
    note: str = ""

    @property
    def passed(self) -> bool:
        return math.isfinite(self.max_error) and self.max_error <= self.tolerance


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "seed": self.seed, "passed": self.passed, "checks": []}
        for c in self.checks:
            row = asdict(c)
            row["passed"] = c.passed
            if not math.isfinite(c.max_error):
                row["max_error"] = None
            out["checks"].append(row)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def table(self) -> str:
        lines = [f"suite {self.suite}  seed {self.seed}  checks {len(self.checks)}  "
                 f"{'PASS' if self.passed else 'FAIL'}"]
        width = max((len(c.label) for c in self.checks), default=5)
        lines.append(f"{'check':<{width}}  {'n':>4}  {'max error':>10}  {'tolerance':>9}  result")
        for c in self.checks:
            lines.append(f"{c.label:<{width}}  {c.count:>4}  {c.max_error:>10.2e}  "
                         f"{c.tolerance:>9.1e}  {'pass' if c.passed else 'FAIL'}"
                         + (f"  ({c.note})" if c.note else ""))
        return "\n".join(lines)


def mixed_error(a: complex, b: complex) -> float:
    """|a - b| / max(1, |b|): absolute near zero, relative for large values."""
    return abs(a - b) / max(1.0, abs(b))


def _guarded(fn: Callable[[], float]) -> tuple[float, str]:
    try:
        return float(fn()), ""
    except NumericalError as exc:
        return math.inf, f"{type(exc).__name__}: {exc}"


def _box_points(rng: SplitMix64, n: int, re: tuple[float, float], im: tuple[float, float],
                keep: Callable[[complex], bool]) -> list[complex]:
    pts = []
    while len(pts) < n:
        s = rng.complex_in_box(re, im)
        if keep(s):
            pts.append(s)
    return pts


def _away_from_integers(s: complex, radius: float = 0.05) -> bool:
    return abs(s - round(s.real)) > radius


# ---------------------------------------------------------------------------
# Suites


def _chi_reflection(rng: SplitMix64) -> list[Check]:
    pts = _box_points(rng, 200, (-8, 9), (-20, 20), _away_from_integers)
    err = max(abs(chi(s) * chi(1 - s) - 1) for s in pts)
    return [Check("chi(s) chi(1-s) = 1", err, 1e-11, len(pts)),
            Check("chi(1/2) = 1", abs(chi(0.5) - 1), 1e-15)]


def _zeta_fe(rng: SplitMix64) -> list[Check]:
    pts = _box_points(rng, 200, (-8, 9), (-20, 20), _away_from_integers)
    err = max(mixed_error(riemann_zeta(s), chi(s) * riemann_zeta(1 - s)) for s in pts)
    zeros = 0.0
    for s in (-2, -4, -6):
        value, flag = chi(s, full_output=True)
        zeros = max(zeros, abs(riemann_zeta(s)), abs(value) if flag else math.inf)
    return [Check("zeta(s) = chi(s) zeta(1-s)", err, 1e-8, len(pts)),
            Check("trivial zeros -2,-4,-6", zeros, 1e-8, 3)]


def _tde_fe_hurwitz(rng: SplitMix64) -> list[Check]:
    checks = []
    for d in (0.2, 0.5, 0.8):
        pts = _box_points(rng, 50, (2, 6), (-10, 10), lambda s: True)
        err = max(mixed_error(tde_g(d, 1.0, s), chi(s) * tde_f(d, 1.0, 1 - s)) for s in pts)
        checks.append(Check(f"g = chi f(1-s), d={d}, e=1", err, 1e-7, len(pts)))
    return checks


RESIDUE_CASES = ((0.3, 0.7), (1.0, 0.25), (0.4, 1.0), (1.0, 1.0), (2.0, 3.0))


def _tde_residues(rng: SplitMix64) -> list[Check]:
    checks = []
    for d, e in RESIDUE_CASES:
        def err(d=d, e=e):
            res = closed_form_residues(d, e)
            return max(abs(contour_residue(lambda s: completed_f(d, e, s), complex(center)) - (pole or 0))
                       for center, pole in ((0.0, res.pole_at_0), (1.0, res.pole_at_1)))
        value, note = _guarded(err)
        checks.append(Check(f"residues ({d:g}, {e:g})", value, 1e-6, 2, note))
    res = closed_form_residues(1.0, 1.0)
    classical = abs(res.pole_at_0 - 1) + abs(res.pole_at_1 + 1)
    checks.append(Check("T_(1,1) vs completed zeta", classical, 1e-15))
    return checks


def random_decomposition(rng: SplitMix64, max_terms: int = 4, separation: float = 0.05,
                         annulus: tuple[float, float] = (0.1, 1.0)) -> TdeDecomposition:
    """Canonical pairs with d + e < 1 separated by ``separation``; |c| in the annulus."""
    n = rng.integer(1, max_terms)
    terms: list[tuple[float, float, complex]] = []
    while len(terms) < n:
        d, e = rng.uniform(), rng.uniform()
        if d == 0 or e == 0 or d + e >= 1:
            continue
        if any(math.hypot(d - a, e - b) < separation for a, b, _ in terms):
            continue
        c = rng.uniform(*annulus) * cmath.exp(2j * math.pi * rng.uniform())
        terms.append((d, e, c))
    return TdeDecomposition.from_terms(terms)


def compare_decompositions(a: TdeDecomposition, b: TdeDecomposition) -> tuple[float, float]:
    """(max coefficient error, max parameter error); infinite if the supports differ."""
    if len(a) != len(b):
        return math.inf, math.inf
    coeff = param = 0.0
    for s, t in zip(sorted(a.terms, key=lambda u: (u.d, u.e)), sorted(b.terms, key=lambda u: (u.d, u.e))):
        coeff = max(coeff, abs(s.coefficient - t.coefficient))
        param = max(param, abs(s.d - t.d), abs(s.e - t.e))
    return coeff, param


def _prony_roundtrip(rng: SplitMix64) -> list[Check]:
    window = 40.0
    coeff = param = annihilate = 0.0
    notes = []
    for _ in range(50):
        dec = random_decomposition(rng)
        try:
            out = decompose_prony(expand_window(dec, window), window)
            c, p = compare_decompositions(dec, out)
        except NumericalError as exc:
            c = p = math.inf
            notes.append(type(exc).__name__)
        coeff, param = max(coeff, c), max(param, p)
        annihilate = max(annihilate, annihilator_residual(dec, window))
    note = ", ".join(sorted(set(notes)))
    return [Check("coefficients", coeff, 1e-8, 50, note),
            Check("parameters (d, e)", param, 1e-9, 50, note),
            Check("annihilator recurrence", annihilate, 1e-10, 50)]


def _fourier_pairing(rng: SplitMix64) -> list[Check]:
    window = 10.0
    decs = [random_decomposition(rng) for _ in range(20)]
    checks = []
    for t in (0.5, 1.0, 2.0):
        err = max(gaussian_pairing_check(dec, t, window) for dec in decs)
        checks.append(Check(f"pairing t={t:g}", err, 1e-10, len(decs)))
    lattice = TdeDecomposition.from_terms([(1.0, 1.0, -1.0)])
    err = max(gaussian_pairing_check(lattice, t, window) for t in (0.25, 0.5, 1.0, 2.0, 4.0))
    checks.append(Check("lattice pairing", err, 1e-13, 5))
    twice = 0.0
    for _ in range(100):
        d, e = rng.uniform(-3, 3), rng.uniform(-3, 3)
        # F(F(T_{d,e})) = T_{-d,-e} = T_{d,e}, so two rotations must land on
        # the reduced form of (d, e) with the same phase.
        direct = reduce_params(d, e)
        first = fourier_map(d, e)
        second = fourier_map(first.params.d, first.params.e)
        twice = max(twice, abs(first.phase * second.phase - direct.phase),
                    abs(second.params.d - direct.params.d), abs(second.params.e - direct.params.e))
    checks.append(Check("F o F = identity", twice, 1e-12, 100))
    return checks


def _theta(rng: SplitMix64) -> list[Check]:
    ts = (0.25, 0.5, 1.0, 2.0, 4.0)
    err = max(abs(theta(1 / t) - math.sqrt(t) * theta(t)) for t in ts)
    return [Check("theta(1/t) = sqrt(t) theta(t)", err, 1e-13, len(ts))]


def bernoulli_fourier(n: int, x: np.ndarray, terms: int = 10_000) -> np.ndarray:
    """Truncated cosine series of B_{2n}({x}):
    (-1)^(n+1) 2 (2n)! / (2 pi)^(2n) * sum_k cos(2 pi k x) / k^(2n)."""
    k = np.arange(1, terms + 1, dtype=float)
    series = np.cos(2 * np.pi * np.outer(x, k)) @ (k ** (-2.0 * n))
    return (-1) ** (n + 1) * 2 * math.factorial(2 * n) / (2 * math.pi) ** (2 * n) * series


def _bernoulli_fourier(rng: SplitMix64) -> list[Check]:
    j = np.arange(100)
    x = (j + 0.5) / 100 + (j % 5) - 2  # off the jump, spread over several periods
    checks = []
    for n in (1, 2):
        exact = np.array([bernoulli_periodic(2 * n, float(v)) for v in x])
        err = float(np.max(np.abs(exact - bernoulli_fourier(n, x))))
        checks.append(Check(f"B_{2 * n}({{x}}) vs cosine series", err, 1e-6, x.size))
    constant = abs(bernoulli_periodic(2, 0.0) - 2 * 2 / (2 * math.pi) ** 2 * riemann_zeta(2).real)
    checks.append(Check("normalization B_2(0) = 1/6", constant, 1e-15))
    return checks


def _gk_asymptotics(rng: SplitMix64) -> list[Check]:
    ratio = sign = 0.0
    for k in range(-3, 4):
        value = zeta_shift_g(k, 200.0)
        model = (-4 * math.pi**2) ** (-k) * 200.0 ** (2 * k)
        ratio = max(ratio, abs(value / model - 1))
        sign = max(sign, 0.0 if np.sign(value.real) == (-1) ** k else 1.0)
    closure = 0.0
    for _ in range(50):
        s = rng.complex_in_box((3, 12), (-10, 10))
        for k in range(-4, 5):
            closure = max(closure, mixed_error(zeta_shift_g(k, s), chi(s) * riemann_zeta(1 - s - 2 * k)))
    return [Check("ratio at sigma=200", ratio, 0.05, 7),
            Check("sign (-1)^k", sign, 0.0, 7),
            Check("g_k = chi zeta(1-s-2k)", closure, 1e-8, 450)]


SIGMA_GRID = tuple(range(10, 41, 2))


def _coefficient_recovery(rng: SplitMix64) -> list[Check]:
    worst = 0.0
    for _ in range(20):
        coeffs = {}
        for k in range(-3, 4):
            if rng.uniform() < 0.6:
                coeffs[k] = math.sqrt(rng.uniform()) * cmath.exp(2j * math.pi * rng.uniform())
        combo = ZetaShiftCombination(coeffs)
        fit = recover_shift_coefficients(synthesize_samples(combo, SIGMA_GRID), -3, 3)
        worst = max(worst, fit.max_difference(combo))
    example = ZetaShiftCombination({0: 2, -1: 3})
    fit = recover_shift_coefficients(synthesize_samples(example, range(10, 31, 2)), -3, 3)
    c = complex(1.5, -0.5)
    limit = recover_shift_coefficients([(x, c * riemann_zeta(x)) for x in SIGMA_GRID], -3, 3).pruned()
    limit_err = abs(limit.coefficients[0] - c) if set(limit.coefficients) == {0} else math.inf
    return [Check("random combinations |k|<=3", worst, 1e-7, 20),
            Check("{0: 2, -1: 3}", fit.max_difference(example), 1e-8),
            Check("constant limit -> {0: c}", limit_err, 1e-10)]


SUPPORT_SIGMAS = tuple(range(40, 71, 5))


def _support_gap(rng: SplitMix64) -> list[Check]:
    cases = (("2^-sigma", lambda x: 2.0**-x, 2.0, 1e-6),
             ("zeta", riemann_zeta, 1.0, 1e-3),
             ("tde_g(0.3, 0.2)", lambda x: tde_g(0.3, 0.2, x), 0.2, 5e-2))
    checks = []
    for label, g, target, tol in cases:
        value, note = _guarded(lambda: abs(estimate_support_gap(g, SUPPORT_SIGMAS) - target))
        checks.append(Check(f"Y0 for {label}", value, tol, 1, note))
    return checks


SUITES: dict[str, Callable[[SplitMix64], list[Check]]] = {
    "chi-reflection": _chi_reflection,
    "zeta-fe": _zeta_fe,
    "tde-fe-hurwitz": _tde_fe_hurwitz,
    "tde-residues": _tde_residues,
    "prony-roundtrip": _prony_roundtrip,
    "fourier-pairing": _fourier_pairing,
    "theta": _theta,
    "bernoulli-fourier": _bernoulli_fourier,
    "gk-asymptotics": _gk_asymptotics,
    "coefficient-recovery": _coefficient_recovery,
    "support-gap": _support_gap,
}


def run_suite(name: str, seed: int = 0) -> VerificationReport:
    """Run one named suite; fixtures are drawn from SplitMix64(seed)."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = SUITES[name](SplitMix64(seed))
    return VerificationReport(name, int(seed), sorted(checks, key=lambda c: c.label))

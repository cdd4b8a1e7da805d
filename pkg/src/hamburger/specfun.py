"""Complex special functions used throughout the package.

Everything here works on scalar ``complex`` values in double precision:
log-Gamma by Stirling's series with upward recursion, the gamma-factor
quotient ``chi`` of the even functional equation, Hurwitz and Riemann zeta
by Euler-Maclaurin summation, the twisted (Lerch-type) sums over residue
classes, periodic Bernoulli functions and the Jacobi theta sum.
"""

from __future__ import annotations

import cmath
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError, NonFiniteResult, PoleProximity

POLE_GUARD = 1e-8
TWO_PI = 2.0 * math.pi
LOG_PI = math.log(math.pi)
LOG_2PI = math.log(TWO_PI)


def _finite(z: complex, what: str) -> complex:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteResult(f"{what} is not finite")
    return z


def cispi(x: float) -> complex:
    """exp(i*pi*x) with the argument reduced mod 2 before scaling by pi."""
    r = math.fmod(x, 2.0)
    if r == 0.0:
        return 1.0 + 0j
    if r in (1.0, -1.0):
        return -1.0 + 0j
    if r in (0.5, -1.5):
        return 1j
    if r in (-0.5, 1.5):
        return -1j
    return cmath.exp(1j * math.pi * r)


def frac1(x: float) -> float:
    """Representative of x mod 1 in the half-open interval (0, 1]."""
    r = x - math.floor(x)
    return 1.0 if r == 0.0 else r


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials


@lru_cache(maxsize=None)
def bernoulli_numbers(n_max: int) -> tuple[Fraction, ...]:
    """Exact B_0 .. B_{n_max} (convention B_1 = -1/2)."""
    b = [Fraction(1)]
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b.append(-acc / (m + 1))
    return tuple(b)


@lru_cache(maxsize=None)
def _em_coefficients(k_max: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 1 .. k_max as floats."""
    b = bernoulli_numbers(2 * k_max)
    return np.array([float(b[2 * k] / math.factorial(2 * k)) for k in range(1, k_max + 1)])


@lru_cache(maxsize=None)
def _stirling_coefficients(k_max: int) -> tuple[float, ...]:
    b = bernoulli_numbers(2 * k_max)
    return tuple(float(b[2 * k] / (2 * k * (2 * k - 1))) for k in range(1, k_max + 1))


def bernoulli_periodic(n: int, x: float) -> float:
    """B_n({x}), the 1-periodic extension of the n-th Bernoulli polynomial.

    The polynomial is evaluated in exact rational arithmetic at the float
    value of the fractional part, so large-index cancellation is harmless.
    """
    if not (isinstance(n, (int, np.integer)) and 0 <= n <= 40):
        raise DomainError(f"Bernoulli index must be an integer in [0, 40], got {n!r}")
    n = int(n)
    t = Fraction(float(x) - math.floor(float(x)))
    b = bernoulli_numbers(n)
    acc = Fraction(0)
    binom = 1
    for k in range(n + 1):
        acc += binom * b[k] * t ** (n - k)
        binom = binom * (n - k) // (k + 1)
    return float(acc)


# ---------------------------------------------------------------------------
# Gamma and chi


def _nonpositive_integer_distance(z: complex) -> float:
    if z.real > 0.5:
        return math.inf
    return abs(z - round(z.real))


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z).

    Stirling's series is applied at z + n with Re(z + n) >= 20 and the
    shift is undone by subtracting principal logarithms one factor at a time,
    which keeps the branch continuous off the negative real axis.
    """
    z = complex(z)
    if _nonpositive_integer_distance(z) <= POLE_GUARD:
        raise PoleProximity(f"log_gamma: {z} is within {POLE_GUARD} of a pole")
    shift = 0.0j
    while z.real < 20.0:
        shift += cmath.log(z)
        z += 1.0
    inv = 1.0 / z
    inv2 = inv * inv
    series = 0.0j
    power = inv
    for c in _stirling_coefficients(12):
        term = c * power
        series += term
        if abs(term) < 1e-17 * abs(series):
            break
        power *= inv2
    value = (z - 0.5) * cmath.log(z) - z + 0.5 * LOG_2PI + series - shift
    return _finite(value, "log_gamma")


def gamma(z: complex) -> complex:
    return cmath.exp(log_gamma(z))


def chi(s: complex, *, full_output: bool = False):
    """Gamma-factor quotient chi(s) = pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2).

    Poles at s = 1, 3, 5, ... raise :class:`PoleProximity`. At the zeros
    s = 0, -2, -4, ... the value is exactly ``0j``; with ``full_output`` the
    pair ``(value, at_zero)`` is returned so callers can see the flag.
    """
    s = complex(s)
    if _nonpositive_integer_distance((1.0 - s) / 2.0) <= POLE_GUARD:
        raise PoleProximity(f"chi: {s} is within the guard radius of a pole")
    if _nonpositive_integer_distance(s / 2.0) <= POLE_GUARD:
        return (0j, True) if full_output else 0j
    value = cmath.exp((s - 0.5) * LOG_PI + log_gamma((1.0 - s) / 2.0) - log_gamma(s / 2.0))
    value = _finite(value, "chi")
    return (value, False) if full_output else value


# ---------------------------------------------------------------------------
# Hurwitz / Riemann zeta


def _em_parameters(s: complex) -> tuple[int, int]:
    # The Bernoulli terms shrink while |s + 2k| < 2 pi N, so N must exceed
    # |s| / (2 pi) comfortably.  For Re s < 0 every extra unit of N costs
    # digits to cancellation (summands ~ N^(1 - Re s)); the factor 1.2 and
    # offset 20 balance the two against mpmath on Re s in [-8.5, 1/2].
    size = abs(s)
    if s.real < 0.5:
        return max(math.ceil(1.2 * (size + 20.0) / TWO_PI), 4), 60
    return max(math.ceil(size + 20.0), 10), 30


@lru_cache(maxsize=None)
def _em_coefficients_wide(k_max: int) -> np.ndarray:
    """B_{2k}/(2k)! for k = 1 .. k_max in extended precision."""
    b = bernoulli_numbers(2 * k_max)
    out = []
    for k in range(1, k_max + 1):
        q = b[2 * k] / math.factorial(2 * k)
        with localcontext() as ctx:
            ctx.prec = 40
            out.append(np.longdouble(str(Decimal(q.numerator) / Decimal(q.denominator))))
    return np.array(out, dtype=np.longdouble)


# Left of Re s = 1/2 the summands grow like N^(1 - Re s) while the result
# does not, so the summation runs in extended precision where available.
WIDE = np.finfo(np.longdouble).eps < np.finfo(float).eps


def _hurwitz_em(s: complex, a: float, terms: int | None, corrections: int | None) -> complex:
    m_auto, k_auto = _em_parameters(s)
    m = m_auto if terms is None else int(terms)
    k_max = k_auto if corrections is None else int(corrections)
    if WIDE and s.real < 0.5:
        real, cplx = np.longdouble, np.clongdouble
        coeffs = _em_coefficients_wide(max(k_max, 1))
    else:
        real, cplx = np.float64, np.complex128
        coeffs = _em_coefficients(max(k_max, 1))
    sw = cplx(s)
    n = np.arange(m, dtype=real) + real(a)
    head = np.sum(np.exp(-sw * np.log(n)))
    big_n = real(m) + real(a)
    n_pow = np.exp(-sw * np.log(big_n))  # N^{-s}
    total = head + big_n * n_pow / (sw - 1) + n_pow / 2
    rising = sw  # s (s+1) ... (s + 2k - 2)
    power = n_pow / big_n  # N^{-s-2k+1}
    inv_n2 = 1 / (big_n * big_n)
    previous = math.inf
    for k in range(1, k_max + 1):
        term = coeffs[k - 1] * rising * power
        size = abs(term)
        if corrections is None:
            if size > previous:
                break
            previous = size
        total += term
        if corrections is None and size < 1e-18 * abs(total):
            break
        rising *= (sw + (2 * k - 1)) * (sw + 2 * k)
        power *= inv_n2
    return complex(total)


REFLECT_BELOW = -8.5


def hurwitz_zeta(s: complex, a: float, *, terms: int | None = None,
                 corrections: int | None = None) -> complex:
    """Hurwitz zeta sum_{m>=0} (m + a)^(-s), continued by Euler-Maclaurin.

    ``terms`` (direct summands M) and ``corrections`` (Bernoulli terms K)
    default to an adaptive choice; pass them to pin the method.  Left of
    Re s = -8.5 the summation loses too many digits to cancellation and the
    value is taken from Hurwitz's formula instead.
    """
    s = complex(s)
    a = float(a)
    if not 0.0 < a <= 1.0:
        raise DomainError(f"hurwitz_zeta: a must lie in (0, 1], got {a}")
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleProximity("hurwitz_zeta: s is within the guard radius of 1")
    if s.real < REFLECT_BELOW and terms is None and corrections is None:
        w = 1.0 - s
        pref = cmath.exp(log_gamma(w) - w * LOG_2PI)
        plus = lerch_sum(1.0, a, w)
        minus = plus if a == 1.0 else lerch_sum(1.0, 1.0 - a, w)
        value = pref * (cmath.exp(-0.5j * math.pi * w) * plus + cmath.exp(0.5j * math.pi * w) * minus)
        return _finite(value, "hurwitz_zeta")
    return _finite(_hurwitz_em(s, a, terms, corrections), "hurwitz_zeta")


def riemann_zeta(s: complex, *, terms: int | None = None,
                 corrections: int | None = None) -> complex:
    """Riemann zeta by Euler-Maclaurin summation.

    The functional equation is used only left of Re s = -8.5, outside the
    region where it is checked against this function.
    """
    s = complex(s)
    if abs(s - 1.0) <= POLE_GUARD:
        raise PoleProximity("riemann_zeta: s is within the guard radius of 1")
    if s.real < REFLECT_BELOW and terms is None and corrections is None:
        return _finite(chi(s) * _hurwitz_em(1.0 - s, 1.0, None, None), "riemann_zeta")
    return _finite(_hurwitz_em(s, 1.0, terms, corrections), "riemann_zeta")


# ---------------------------------------------------------------------------
# Twisted sums over a residue class


@lru_cache(maxsize=8192)
def _lattice_sum(j: int, e: float) -> float:
    """sum_{n in Z} (n + e)^(-j) for 2 <= j <= 20 and 0 < e < 1."""
    return hurwitz_zeta(j, e).real + (-1) ** j * hurwitz_zeta(j, 1.0 - e).real


def _lattice_power_sum(j: int, e: float, scale: float) -> float:
    """sum_{n in Z} ((n + e) * scale)^(-j) for j >= 2 and 0 < e < 1."""
    if j <= 20:
        return _lattice_sum(j, e) / scale**j
    n = np.arange(-21, 21, dtype=float)
    return float(np.sum((1.0 / ((n + e) * scale)) ** j))


def _twisted_series(e: float, a: float, s: complex) -> complex:
    """sum_{n>=0} exp(2 pi i e n) (n + a)^(-s) for 0 < e < 1 and Re s >= 1/2.

    The first M terms are summed directly.  The tail is the Laplace
    transform of t^(s-1) exp(-(M + a) t) / (1 - z exp(-t)); expanding the
    last factor at t = 0 (radius 2 pi min(e, 1 - e)) gives the correction
    sum_k a_k (s)_k (M + a)^(-s-k), with a_k from the lattice sums over the
    poles t = 2 pi i (n + e).
    """
    rho = TWO_PI * min(e, 1.0 - e)
    m = min(max(math.ceil(4.0 * (abs(s) + 12.0) / rho), 16), 4_000_000)
    idx = np.arange(m, dtype=float)
    phases = np.exp(2j * np.pi * np.mod(e * idx, 1.0))
    head = complex(np.sum(phases * np.exp(-s * np.log(idx + a))))

    big_n = m + a
    z = cmath.exp(2j * math.pi * e)
    corr = 1.0 / (1.0 - z)
    rising = s
    inv_i = -1j
    inv_rho_n = 1.0 / (rho * big_n)
    previous = math.inf
    for k in range(1, 200):
        # a_k N^-k = -N i^(-k-1) sum_n (2 pi N (n + e))^(-k-1); the lattice sum
        # is at most 4 (rho N)^(-k-1), which bounds the term for the stopping rule.
        bound = 4.0 * big_n * abs(rising) * inv_rho_n ** (k + 1)
        if bound > previous and k > 4:
            break
        previous = bound
        ak = -big_n * inv_i ** (k + 1) * _lattice_power_sum(k + 1, e, TWO_PI * big_n)
        corr += rising * ak
        if bound < 1e-18 * abs(corr):
            break
        rising *= s + k
    tail = cmath.exp(2j * math.pi * math.fmod(e * m, 1.0)) * cmath.exp(-s * math.log(big_n)) * corr
    return head + tail


def _lerch_l(twist: float, a: float, s: complex) -> complex:
    """L(twist, a, s) = sum_{n>=0} exp(2 pi i twist n) (n + a)^(-s), continued."""
    t = twist - math.floor(twist)
    if t < 1e-12 or t > 1.0 - 1e-12:
        return hurwitz_zeta(s, a)
    if s.real >= 0.5:
        return _twisted_series(t, a, s)
    # Lerch's transformation formula, evaluated at w = 1 - s with Re w > 1/2.
    w = 1.0 - s
    near_pole = abs(a - 1.0) < 1e-12 and abs(w - 1.0) < 0.05
    if near_pole:
        return _circle_mean(lambda x: _lerch_l(t, a, x), s, 0.25)
    pref = cmath.exp(log_gamma(w) - w * LOG_2PI)
    first = cmath.exp(1j * math.pi * w / 2) * cispi(-2.0 * a * t) * _lerch_l(-a, t, w)
    second = cmath.exp(-1j * math.pi * w / 2) * cispi(2.0 * a * (1.0 - t)) * _lerch_l(a, 1.0 - t, w)
    return pref * (first + second)


def _circle_mean(func, center: complex, radius: float, nodes: int = 48) -> complex:
    # Mean-value property of an analytic function; used only where the
    # closed form has a removable singularity at the centre.
    theta = 2.0 * np.pi * (np.arange(nodes) + 0.5) / nodes
    pts = center + radius * np.exp(1j * theta)
    return complex(np.mean([func(complex(p)) for p in pts]))


def _check_unit_param(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 < value <= 1.0:
        raise DomainError(f"{name} must lie in (0, 1], got {value}")
    return value


def lerch_sum(d: float, e: float, s: complex) -> complex:
    """Z(d, e, s) = sum_{m>=0} exp(2 pi i e (d + m)) (d + m)^(-s), continued.

    For e = 1 this is exp(2 pi i d) zeta(s, d); otherwise it is entire in s.
    """
    d = _check_unit_param("d", d)
    e = _check_unit_param("e", e)
    s = complex(s)
    if e == 1.0:
        if abs(s - 1.0) <= POLE_GUARD:
            raise PoleProximity("lerch_sum: e = 1 and s is within the guard radius of 1")
        return _finite(cispi(2.0 * d) * hurwitz_zeta(s, d), "lerch_sum")
    return _finite(cispi(2.0 * e * d) * _lerch_l(e, d, s), "lerch_sum")


def periodic_zeta(e: float, s: complex) -> complex:
    """F(e, s) = sum_{n>=1} exp(2 pi i e n) n^(-s), continued to the plane."""
    return lerch_sum(1.0, e, s)


def class_sum(d: float, e: float, s: complex) -> complex:
    """sum over x = d (mod 1), x > 0 of exp(2 pi i e x) x^(-s), any real d, e.

    Reduces (d, e) into (0, 1]^2; the integer part k of the twist contributes
    exp(2 pi i k d') on the class.
    """
    d0 = frac1(d)
    e0 = frac1(e)
    k = round(e - e0)
    return cispi(2.0 * k * d0) * lerch_sum(d0, e0, s)


# ---------------------------------------------------------------------------
# Theta


def theta(t: float) -> float:
    """Jacobi theta sum_{n in Z} exp(-pi n^2 t) for t > 0."""
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"theta: t must be positive, got {t}")
    n_max = math.ceil(math.sqrt(17.0 * math.log(10.0) / (math.pi * t))) + 1
    n = np.arange(1, n_max + 1, dtype=float)
    terms = np.exp(-math.pi * t * n * n)
    return 1.0 + 2.0 * math.fsum(terms)

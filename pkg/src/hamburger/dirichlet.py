"""Generalized Dirichlet series and the zeta(s - 2k) family.

A generalized Dirichlet series sum a_n x_n^(-s) is stored as finitely many
(frequency, coefficient) pairs.  The functions ``f_k(s) = zeta(s - 2k)``
have duals ``g_k(s) = chi(s) f_k(1 - s)`` given in closed form by rising
products times ``zeta(s + 2k)``; since ``g_k(sigma) ~ (-4 pi^2)^(-k) sigma^(2k)``
the coefficients of a finite combination can be read off from samples of
its dual on the real axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, IllConditioned, PoleProximity, ResidualTooLarge, SignalTooSmall
from .specfun import POLE_GUARD, riemann_zeta

FOUR_PI_SQ = 4.0 * math.pi**2


@dataclass(frozen=True)
class GeneralizedDirichletSeries:
    """Finite series sum a_n x_n^(-s) with strictly increasing x_n > 0."""

    frequencies: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.frequencies, dtype=float).reshape(-1)
        a = np.asarray(self.coefficients, dtype=complex).reshape(-1)
        if x.shape != a.shape:
            raise ValueError("frequencies and coefficients differ in length")
        if x.size and (x[0] <= 0 or np.any(np.diff(x) <= 0)):
            raise ValueError("frequencies must be positive and strictly increasing")
        keep = a != 0
        object.__setattr__(self, "frequencies", x[keep])
        object.__setattr__(self, "coefficients", a[keep])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[float, complex]]) -> "GeneralizedDirichletSeries":
        pairs = sorted(((float(x), complex(c)) for x, c in terms), key=lambda p: p[0])
        if not pairs:
            return cls(np.empty(0), np.empty(0, dtype=complex))
        x, a = zip(*pairs)
        return cls(np.array(x), np.array(a))

    def __len__(self) -> int:
        return self.frequencies.size

    def terms(self) -> list[tuple[float, complex]]:
        return [(float(x), complex(a)) for x, a in zip(self.frequencies, self.coefficients)]


def eval_truncated(series: GeneralizedDirichletSeries, s: complex) -> complex:
    """The finite sum sum_n a_n x_n^(-s)."""
    if len(series) == 0:
        return 0j
    s = complex(s)
    return complex(np.sum(series.coefficients * np.exp(-s * np.log(series.frequencies))))


def mellin_step_integral(series: GeneralizedDirichletSeries, s: complex) -> complex:
    """s * int C(x) x^(-s-1) dx for the step function C(x) = sum_{x_n <= x} a_n.

    Each constant piece integrates in closed form to C_i (x_i^(-s) - x_{i+1}^(-s)).
    The last piece extends to infinity, so Re s > 0 is required unless the
    total mass C vanishes there.
    """
    s = complex(s)
    if len(series) == 0:
        return 0j
    steps = np.cumsum(series.coefficients)
    scale = float(np.sum(np.abs(series.coefficients)))
    if s.real <= 0 and abs(steps[-1]) > 1e-14 * scale:
        raise DomainError("mellin_step_integral diverges for Re s <= 0 unless C is eventually 0")
    powers = np.exp(-s * np.log(series.frequencies))
    upper = np.append(powers[1:], 0.0)
    return complex(np.sum(steps * (powers - upper)))


# ---------------------------------------------------------------------------
# The zeta(s - 2k) family


@dataclass
class ZetaShiftCombination:
    """Finite combination f(s) = sum_k c_k zeta(s - 2k)."""

    coefficients: dict[int, complex] = field(default_factory=dict)

    def __post_init__(self):
        self.coefficients = {int(k): complex(c) for k, c in self.coefficients.items()}

    def pruned(self, tol: float = 1e-9) -> "ZetaShiftCombination":
        """Drop coefficients below ``tol`` times the largest one."""
        if not self.coefficients:
            return ZetaShiftCombination()
        top = max(abs(c) for c in self.coefficients.values())
        return ZetaShiftCombination({k: c for k, c in self.coefficients.items() if abs(c) > tol * top})

    def max_difference(self, other: "ZetaShiftCombination | Mapping[int, complex]") -> float:
        other = other.coefficients if isinstance(other, ZetaShiftCombination) else other
        keys = set(self.coefficients) | set(other)
        return max((abs(self.coefficients.get(k, 0) - other.get(k, 0)) for k in keys), default=0.0)


def _guard(value: complex, what: str) -> None:
    if abs(value) <= POLE_GUARD:
        raise PoleProximity(f"zeta_shift_g: {what} vanishes")


def zeta_shift_g(k: int, s: complex) -> complex:
    """g_k(s) = chi(s) zeta(1 - s - 2k) in closed form.

    k >= 0:  s (s+1) ... (s+2k-1) / (-4 pi^2)^k * zeta(s + 2k)
    k < 0:   (-4 pi^2)^(-k) / ((s+2k) (s+2k+1) ... (s-1)) * zeta(s + 2k)
    """
    k = int(k)
    s = complex(s)
    if abs(s + 2 * k - 1.0) <= POLE_GUARD:
        raise PoleProximity(f"zeta_shift_g: s + 2k = {s + 2 * k} is the pole of zeta")
    if k >= 0:
        rising = 1.0 + 0j
        for j in range(2 * k):
            rising *= s + j
        factor = rising / (-FOUR_PI_SQ) ** k
    else:
        denom = 1.0 + 0j
        for j in range(2 * k, 0):
            _guard(s + j, f"factor s + {j}")
            denom *= s + j
        factor = (-FOUR_PI_SQ) ** (-k) / denom
    return factor * riemann_zeta(s + 2 * k)


def combo_f(c: ZetaShiftCombination, s: complex) -> complex:
    """sum_k c_k zeta(s - 2k)."""
    s = complex(s)
    return sum((ck * riemann_zeta(s - 2 * k) for k, ck in c.coefficients.items()), 0j)


def combo_g(c: ZetaShiftCombination, s: complex) -> complex:
    """sum_k c_k g_k(s), the dual of :func:`combo_f`."""
    s = complex(s)
    return sum((ck * zeta_shift_g(k, s) for k, ck in c.coefficients.items()), 0j)


@dataclass(frozen=True)
class ShiftFit:
    combination: ZetaShiftCombination
    residual: float
    relative_residual: float
    condition: float


def recover_shift_coefficients(samples: Sequence[tuple[float, complex]], k_min: int, k_max: int,
                               *, full_output: bool = False):
    """Least-squares fit of samples (sigma, g(sigma)) in the basis {g_k}.

    Columns are scaled by the geometric mean of their magnitudes over the
    sample points before solving, which removes the sigma^(2k) grading.
    Returns the fitted :class:`ZetaShiftCombination`, or a :class:`ShiftFit`
    carrying residual and condition number when ``full_output`` is set.
    """
    k_min, k_max = int(k_min), int(k_max)
    if k_max < k_min:
        raise DomainError("k_max must be >= k_min")
    ks = list(range(k_min, k_max + 1))
    sigma = np.array([float(x) for x, _ in samples])
    values = np.array([complex(v) for _, v in samples])
    if sigma.size < len(ks):
        raise DomainError(f"need at least {len(ks)} samples, got {sigma.size}")
    if np.unique(sigma).size != sigma.size:
        raise DomainError("sample abscissae must be distinct")
    if np.any(sigma < 5.0):
        raise DomainError("sample abscissae must satisfy sigma >= 5")

    basis = np.array([[zeta_shift_g(k, x) for k in ks] for x in sigma])
    scale = np.exp(np.mean(np.log(np.abs(basis)), axis=0))
    scaled = basis / scale
    condition = float(np.linalg.cond(scaled))
    if not condition <= 1e12:
        raise IllConditioned(f"design matrix condition number {condition:.3e} exceeds 1e12")
    solution, *_ = np.linalg.lstsq(scaled, values, rcond=None)
    coeffs = solution / scale
    residual = float(np.linalg.norm(basis @ coeffs - values))
    norm = float(np.linalg.norm(values))
    rel = residual / norm if norm > 0 else residual
    if residual > 1e-6 * norm:
        raise ResidualTooLarge(f"fit residual {residual:.3e} exceeds 1e-6 * |samples| = {1e-6 * norm:.3e}")
    combo = ZetaShiftCombination(dict(zip(ks, coeffs)))
    if full_output:
        return ShiftFit(combo, residual, rel, condition)
    return combo


def synthesize_samples(c: ZetaShiftCombination, sigmas: Iterable[float]) -> list[tuple[float, complex]]:
    """(sigma, combo_g(c, sigma)) pairs: forward model for the fit."""
    return [(float(x), combo_g(c, x)) for x in sigmas]


def estimate_support_gap(g: Callable[[float], complex], sigmas: Sequence[float]) -> float:
    """Estimate Y0 from -log Y0 = limsup (1/sigma) log |g(sigma)|.

    The growth rate is taken as the median of the three log-differences
    (log|g(b)| - log|g(a)|) / (b - a) over the four largest abscissae, which
    removes the constant factor that (1/sigma) log|g| would carry at finite
    sigma.  Returns exp(-rate).
    """
    x = np.asarray(sigmas, dtype=float)
    if x.size < 4:
        raise DomainError("need at least four abscissae")
    if np.any(np.diff(x) <= 0):
        raise DomainError("abscissae must be increasing")
    if x[-1] < 60.0:
        raise DomainError("largest abscissa must be at least 60")
    top = x[-4:]
    logs = []
    for sigma in top:
        value = abs(complex(g(float(sigma))))
        if not math.isfinite(value) or value < 1e-300:
            raise SignalTooSmall(f"|g({sigma})| = {value} is not usable")
        logs.append(math.log(value))
    slopes = np.diff(logs) / np.diff(top)
    return math.exp(-float(np.median(slopes)))

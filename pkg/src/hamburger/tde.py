"""The even distributions T_{d,e} and their Mellin transforms.

``D_{d,e}(x) = exp(-i pi d e) exp(2 i pi e x) D_0(x - d)`` is a twisted,
translated copy of the Dirac comb, ``T_{d,e}`` its even part.  The Fourier
transform rotates the parameter plane by a quarter turn,
``F(T_{d,e}) = T_{-e,d}``, and the lattice relations

    T_{d+1,e} = exp(-i pi e) T_{d,e},  T_{d,e+1} = exp(i pi d) T_{d,e},
    T_{-d,-e} = T_{d,e}

reduce every pair to a canonical one up to a unit phase.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ContourFailure, NearDegenerate
from .specfun import LOG_PI, cispi, class_sum, frac1, lerch_sum, log_gamma

INTEGER_TOL = 1e-9
NEAR_INTEGER = 1e-4


@dataclass(frozen=True)
class TdeParams:
    d: float
    e: float


@dataclass(frozen=True)
class PhasedTde:
    """``T_{d,e} = phase * T_{params}`` with ``params`` canonical."""

    params: TdeParams
    phase: complex


def is_canonical(d: float, e: float) -> bool:
    """Membership in the fundamental domain used by :func:`reduce_params`.

    Interior points follow 0 < d + e <= 1 (tie d + e = 1 broken by d >= 1/2).
    On the lines d = 1 and e = 1, where the inversion (d, e) -> (-d, -e)
    maps the line to itself, the half 0 < e <= 1/2 (resp. 0 < d <= 1/2) is
    kept, together with the point (1, 1).
    """
    if not (0.0 < d <= 1.0 and 0.0 < e <= 1.0):
        return False
    if d == 1.0 and e == 1.0:
        return True
    if d == 1.0:
        return e <= 0.5
    if e == 1.0:
        return d <= 0.5
    total = d + e
    if total < 1.0:
        return True
    return total == 1.0 and d >= 0.5


def _shift_into_box(d: float, e: float) -> tuple[float, float, complex]:
    # T_{d0+n, e0+k} = exp(-i pi n (e0 + k)) exp(i pi k d0) T_{d0, e0}
    d0, e0 = frac1(d), frac1(e)
    n, k = round(d - d0), round(e - e0)
    phase = cispi(-n * (e0 + k)) * cispi(k * d0) if (n or k) else 1.0 + 0j
    return d0, e0, phase


def _snap(x: float) -> float:
    r = round(x)
    return float(r) if abs(x - r) <= 1e-12 else x


def reduce_params(d: float, e: float) -> PhasedTde:
    """Canonical representative of T_{d,e} and the phase relating the two."""
    d, e = _snap(float(d)), _snap(float(e))
    d0, e0, phase = _shift_into_box(d, e)
    if not is_canonical(d0, e0):
        d0, e0, extra = _shift_into_box(-d0, -e0)
        phase *= extra
    return PhasedTde(TdeParams(d0, e0), complex(phase))


def fourier_map(d: float, e: float) -> PhasedTde:
    """F(T_{d,e}) = T_{-e,d}, returned in reduced form."""
    return reduce_params(-float(e), float(d))


def _canonical_f(d: float, e: float, s: complex) -> complex:
    """Mellin transform of T_{d,e} as the two residue-class sums."""
    d1, e1 = frac1(d), frac1(e)
    d2, e2 = frac1(-d), frac1(-e)
    if (d1, e1) == (d2, e2):
        # d, e in {1/2, 1}: one class, one twist; the sums differ by a phase.
        k1, k2 = round(e - e1), round(-e - e2)
        total = (cispi(2.0 * k1 * d1) + cispi(2.0 * k2 * d1)) * lerch_sum(d1, e1, s)
    else:
        total = class_sum(d, e, s) + class_sum(-d, -e, s)
    return 0.5 * cispi(-d * e) * total


def tde_f(d: float, e: float, s: complex) -> complex:
    """Mellin transform f(s) of T_{d,e} (sum over x > 0 of its atoms)."""
    red = reduce_params(d, e)
    return red.phase * _canonical_f(red.params.d, red.params.e, complex(s))


def tde_g(d: float, e: float, s: complex) -> complex:
    """g(s) = chi(s) f(1 - s), computed as the Mellin transform of F(T_{d,e})."""
    rot = fourier_map(d, e)
    return rot.phase * _canonical_f(rot.params.d, rot.params.e, complex(s))


# ---------------------------------------------------------------------------
# Poles of the completed function pi^(-s/2) Gamma(s/2) f(s)


@dataclass(frozen=True)
class Residues:
    """Residues at s = 0 and s = 1 (``None``: no pole there).

    ``contour_at_0`` / ``contour_at_1`` hold the numerical estimates when a
    contour check was run.
    """

    pole_at_0: complex | None
    pole_at_1: complex | None
    contour_at_0: complex | None = None
    contour_at_1: complex | None = None


def _integrality(x: float, name: str) -> bool:
    dist = abs(x - round(x))
    if dist <= INTEGER_TOL:
        return True
    if dist < NEAR_INTEGER:
        warnings.warn(f"{name} = {x} is within {dist:.1e} of an integer", NearDegenerate, stacklevel=3)
    return False


def closed_form_residues(d: float, e: float) -> Residues:
    """Residues of pi^(-s/2) Gamma(s/2) f(s) at s = 0 and s = 1."""
    d_int = _integrality(d, "d")
    e_int = _integrality(e, "e")
    if d_int and e_int:
        sign = -1.0 if (round(d) * round(e)) % 2 else 1.0
        return Residues(complex(-sign), complex(sign))
    if d_int:
        return Residues(-cispi(-d * e), None)
    if e_int:
        return Residues(None, cispi(d * e))
    return Residues(None, None)


def completed_f(d: float, e: float, s: complex) -> complex:
    s = complex(s)
    return np.exp(-0.5 * s * LOG_PI + log_gamma(0.5 * s)) * tde_f(d, e, s)


def contour_residue(func, center: complex, radius: float = 0.25, nodes: int = 64,
                    max_nodes: int = 512, tol: float = 1e-9) -> complex:
    """(1 / 2 pi i) times the integral of ``func`` around a circle.

    Trapezoid rule in the angle, doubling the node count until successive
    estimates agree within ``tol``.
    """
    def estimate(n):
        theta = 2.0 * np.pi * np.arange(n) / n
        offsets = radius * np.exp(1j * theta)
        values = np.array([func(center + complex(o)) for o in offsets])
        return complex(np.mean(values * offsets))

    current = estimate(nodes)
    while nodes < max_nodes:
        nodes *= 2
        refined = estimate(nodes)
        if abs(refined - current) < tol:
            return refined
        current = refined
    raise ContourFailure(f"contour integral around {center} did not settle by {max_nodes} nodes")


def completed_residues(d: float, e: float, *, check: bool = True, tol: float = 1e-6) -> Residues:
    """Closed-form residues, cross-checked by contour integration.

    Each potential pole (s = 0 and s = 1) is integrated numerically whether
    or not the closed form predicts one; a discrepancy above ``tol`` raises
    :class:`ContourFailure`.
    """
    res = closed_form_residues(d, e)
    if not check:
        return res
    numeric = []
    for center, expected in ((0.0, res.pole_at_0), (1.0, res.pole_at_1)):
        value = contour_residue(lambda s: completed_f(d, e, s), complex(center))
        target = 0j if expected is None else expected
        if abs(value - target) > tol:
            raise ContourFailure(
                f"residue at s = {center}: contour gives {value}, closed form {target}")
        numeric.append(value)
    return Residues(res.pole_at_0, res.pole_at_1, numeric[0], numeric[1])

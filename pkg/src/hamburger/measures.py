"""Even atomic measures carried by finitely many translates of Z.

A measure ``D = c0 delta_0 + sum_n a_n (delta_{x_n} + delta_{-x_n})`` whose
support lies in finitely many classes ``d_j + Z`` is a finite combination of
the distributions ``T_{d,e}``.  Along each class the coefficients form an
exponential sum ``sum_k A_k exp(2 pi i f_k x)``; Prony's method recovers the
frequencies from the shift-invariance of a Hankel matrix and a final
least-squares solve assembles the ``T_{d,e}`` coefficients.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (DomainError, InsufficientWindow, NotFiniteCombination, OriginMismatch,
                     TooManyClasses)
from .specfun import cispi, frac1
from .tde import fourier_map, reduce_params

MERGE_TOL = 1e-9
COEFF_TOL = 1e-9
RANK_TOL = 1e-9
ROOT_TOL = 1e-6
ROUNDTRIP_TOL = 1e-8
MAX_CLASSES = 16
MAX_RANK = 8


# ---------------------------------------------------------------------------
# Types


@dataclass(frozen=True)
class AtomicEvenMeasure:
    """Atoms at strictly increasing positions x > 0 plus an origin mass.

    The mirror atoms at -x are implicit and carry the same coefficient.
    """

    positions: np.ndarray = field(default_factory=lambda: np.empty(0))
    coefficients: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=complex))
    origin: complex = 0j

    def __post_init__(self):
        x = np.asarray(self.positions, dtype=float).reshape(-1)
        a = np.asarray(self.coefficients, dtype=complex).reshape(-1)
        if x.shape != a.shape:
            raise ValueError("positions and coefficients differ in length")
        if x.size and (x[0] <= 0 or np.any(np.diff(x) <= 0)):
            raise ValueError("positions must be positive and strictly increasing")
        object.__setattr__(self, "positions", x)
        object.__setattr__(self, "coefficients", a)
        object.__setattr__(self, "origin", complex(self.origin))

    @classmethod
    def from_atoms(cls, atoms: Iterable[tuple[float, complex]], origin: complex = 0j,
                   tol: float = MERGE_TOL) -> "AtomicEvenMeasure":
        """Build from (x, a) pairs in any order; nearby positions are merged."""
        pairs = sorted(((float(x), complex(a)) for x, a in atoms), key=lambda p: p[0])
        xs: list[float] = []
        cs: list[complex] = []
        for x, a in pairs:
            if x <= 0:
                raise ValueError("atom positions must be positive; use origin for x = 0")
            if xs and x - xs[-1] <= tol:
                cs[-1] += a
            else:
                xs.append(x)
                cs.append(a)
        return cls(np.array(xs), np.array(cs, dtype=complex), origin)

    def __len__(self) -> int:
        return self.positions.size

    def atoms(self) -> list[tuple[float, complex]]:
        return [(float(x), complex(a)) for x, a in zip(self.positions, self.coefficients)]


@dataclass(frozen=True)
class ProgressionSupport:
    """Residue classes d_j in (0, 1] of the translates d_j + Z."""

    residues: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.residues)


@dataclass(frozen=True)
class TdeTerm:
    d: float
    e: float
    coefficient: complex


@dataclass(frozen=True)
class TdeDecomposition:
    """Finite combination sum c(d, e) T_{d,e} over distinct canonical pairs."""

    terms: tuple[TdeTerm, ...] = ()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[float, float, complex]]) -> "TdeDecomposition":
        """Reduce each (d, e) to canonical form, folding the phase into c, and merge."""
        merged: dict[tuple[float, float], complex] = {}
        for d, e, c in terms:
            red = reduce_params(d, e)
            key = (red.params.d, red.params.e)
            for other in merged:
                if abs(other[0] - key[0]) <= 1e-12 and abs(other[1] - key[1]) <= 1e-12:
                    key = other
                    break
            merged[key] = merged.get(key, 0j) + red.phase * complex(c)
        kept = [TdeTerm(d, e, c) for (d, e), c in sorted(merged.items()) if abs(c) > 1e-15]
        return cls(tuple(kept))

    def __len__(self) -> int:
        return len(self.terms)

    def as_tuples(self) -> list[tuple[float, float, complex]]:
        return [(t.d, t.e, t.coefficient) for t in self.terms]


# ---------------------------------------------------------------------------
# Forward model


def _class_atoms(d: float, e: float, weight: complex, window: float):
    """Positive atoms of weight * D_{d,e}: x = d + p, 0 < x <= window."""
    p0 = math.floor(-d) + 1
    p1 = math.floor(window - d + MERGE_TOL)
    for p in range(p0, p1 + 1):
        x = d + p
        if x > MERGE_TOL:
            yield x, weight * cispi(2.0 * e * x)


def expand_window(dec: TdeDecomposition, X: float) -> AtomicEvenMeasure:
    """All atoms of sum c T_{d,e} with |x| <= X.

    The atom at x from D_{d,e} carries exp(-i pi d e) exp(2 i pi e x); the
    even half at x > 0 is 1/2 D_{d,e} + 1/2 D_{-d,-e}, and the origin (only
    present when d is an integer) gets the full c exp(-i pi d e).
    """
    if X < 1:
        raise DomainError("window X must be at least 1")
    atoms: list[tuple[float, complex]] = []
    origin = 0j
    for t in dec.terms:
        norm = t.coefficient * cispi(-t.d * t.e)
        atoms.extend(_class_atoms(t.d, t.e, 0.5 * norm, X))
        atoms.extend(_class_atoms(-t.d, -t.e, 0.5 * norm, X))
        if abs(t.d - round(t.d)) <= MERGE_TOL:
            origin += norm
    m = AtomicEvenMeasure.from_atoms(atoms, origin)
    scale = float(np.max(np.abs(m.coefficients))) if len(m) else 0.0
    keep = np.abs(m.coefficients) > 1e-14 * scale
    origin = 0j if abs(origin) <= 1e-14 * max(scale, abs(origin)) and scale else origin
    return AtomicEvenMeasure(m.positions[keep], m.coefficients[keep], origin)


def mellin_of_measure(m: AtomicEvenMeasure, s: complex) -> complex:
    """sum_n a_n x_n^(-s) over the positive atoms; the origin mass is dropped."""
    if len(m) == 0:
        return 0j
    s = complex(s)
    return complex(np.sum(m.coefficients * np.exp(-s * np.log(m.positions))))


def fourier_measure(dec: TdeDecomposition) -> TdeDecomposition:
    """Apply F(T_{d,e}) = T_{-e,d} termwise and merge equal canonical pairs."""
    out = []
    for t in dec.terms:
        rot = fourier_map(t.d, t.e)
        out.append((rot.params.d, rot.params.e, rot.phase * t.coefficient))
    return TdeDecomposition.from_terms(out)


# ---------------------------------------------------------------------------
# Progressions and the annihilator


def _cluster_residues(positions: np.ndarray, tol: float) -> list[float]:
    reps: list[float] = []
    for x in positions:
        r = frac1(float(x))
        if 1.0 - r <= tol:
            r = 1.0
        for rep in reps:
            gap = abs(r - rep)
            if min(gap, 1.0 - gap) <= tol:
                break
        else:
            reps.append(r)
    return sorted(reps)


def detect_progressions(m: AtomicEvenMeasure, max_classes: int = MAX_CLASSES,
                        tol: float = MERGE_TOL) -> ProgressionSupport:
    """Residue classes mod 1 of the positive atoms, as representatives in (0, 1].

    Residues are compared on the circle, so a position within ``tol`` of an
    integer lands in the class 1.
    """
    reps = _cluster_residues(m.positions, tol)
    if len(reps) > max_classes:
        raise TooManyClasses(f"{len(reps)} residue classes exceed the bound {max_classes}")
    return ProgressionSupport(tuple(reps))


def class_sequence(m: AtomicEvenMeasure, d: float, X: float, tol: float = MERGE_TOL):
    """Coefficients at d + p, p = 0, 1, ... up to X (missing atoms read as 0).

    Returns (first position, coefficient array).
    """
    start = d
    count = int(math.floor(X - d + tol)) + 1
    seq = np.zeros(max(count, 0), dtype=complex)
    for x, a in zip(m.positions, m.coefficients):
        p = round(x - d)
        if abs(x - d - p) <= tol and 0 <= p < count:
            seq[p] += a
    return start, seq


def annihilator(residues: Sequence[float]) -> np.ndarray:
    """Coefficients q_0..q_N (lowest first) of prod_j (z - exp(2 pi i d_j))."""
    poly = np.array([1.0 + 0j])
    for d in residues:
        poly = np.convolve(poly, np.array([-cispi(2.0 * d), 1.0]))
    return poly


def apply_recurrence(q: np.ndarray, seq: np.ndarray) -> np.ndarray:
    """(prod_j (tau - z_j)) c at each admissible index: sum_i q_i c(k + i)."""
    n = len(q) - 1
    if len(seq) <= n:
        return np.empty(0, dtype=complex)
    return np.array([np.dot(q, seq[k:k + n + 1]) for k in range(len(seq) - n)])


def support_classes(dec: TdeDecomposition) -> list[float]:
    """Classes of the full (two-sided) support of sum c T_{d,e}: d and -d mod 1."""
    reps: list[float] = []
    for t in dec.terms:
        for d in (t.d, -t.d):
            r = frac1(d)
            if all(min(abs(r - q), 1 - abs(r - q)) > MERGE_TOL for q in reps):
                reps.append(r)
    return sorted(reps)


def annihilator_residual(dec: TdeDecomposition, X: float) -> float:
    """Largest |prod (tau - exp(2 pi i d_j)) c| over the dual's class sequences.

    phi(x) = prod (exp(2 pi i x) - exp(2 pi i d_j)) kills D, so the Fourier
    transform satisfies the shift recurrence along each of its progressions.
    """
    q = annihilator(support_classes(dec))
    dual = expand_window(fourier_measure(dec), X)
    worst = 0.0
    for d in detect_progressions(dual, max_classes=10**6).residues:
        _, seq = class_sequence(dual, d, X)
        res = apply_recurrence(q, seq)
        if res.size:
            worst = max(worst, float(np.max(np.abs(res))))
    return worst


# ---------------------------------------------------------------------------
# Prony decomposition


def _prony_roots(seq: np.ndarray, max_rank: int, d: float) -> np.ndarray:
    n = seq.size
    rows = n // 2
    if rows < 1:
        raise InsufficientWindow(f"class {d}: only {n} coefficients")
    hankel = np.array([seq[i:i + n - rows + 1] for i in range(rows)])
    u, sv, _ = np.linalg.svd(hankel)
    if sv[0] == 0:
        return np.empty(0, dtype=complex)
    rank = int(np.sum(sv > RANK_TOL * sv[0]))
    if rank > max_rank:
        raise NotFiniteCombination(f"class {d}: exponential rank {rank} exceeds {max_rank}")
    if n < 2 * rank + 2 or rank >= rows:
        raise InsufficientWindow(f"class {d}: {n} coefficients cannot resolve rank {rank}")
    basis = u[:, :rank]
    shift = np.linalg.lstsq(basis[:-1], basis[1:], rcond=None)[0]
    roots = np.linalg.eigvals(shift)
    off = np.abs(np.abs(roots) - 1.0)
    if np.any(off > ROOT_TOL):
        raise NotFiniteCombination(
            f"class {d}: root off the unit circle by {float(np.max(off)):.2e}")
    return roots / np.abs(roots)


def _snap_unit(x: float, tol: float = MERGE_TOL) -> float:
    x = frac1(x)
    if x <= tol or 1.0 - x <= tol:
        return 1.0
    return x


def _candidate(d: float, f: float) -> tuple[float, float]:
    d, f = _snap_unit(d), _snap_unit(f)
    if abs(d + f - 1.0) <= MERGE_TOL:
        f = 1.0 - d
    red = reduce_params(d, f)
    return red.params.d, red.params.e


def _same_pair(a: tuple[float, float], b: tuple[float, float], tol: float = 1e-7) -> bool:
    return abs(a[0] - b[0]) <= tol and abs(a[1] - b[1]) <= tol


def _atom_vector(m: AtomicEvenMeasure, grid: np.ndarray) -> np.ndarray:
    out = np.zeros(grid.size, dtype=complex)
    if len(m):
        idx = np.searchsorted(grid, m.positions - MERGE_TOL)
        for i, a in zip(idx, m.coefficients):
            out[i] += a
    return out


def decompose_prony(m: AtomicEvenMeasure, X: float, *, max_rank: int = MAX_RANK,
                    max_classes: int = MAX_CLASSES) -> TdeDecomposition:
    """Recover sum c(d, e) T_{d,e} from the atoms of ``m`` inside the window X.

    Per residue class the rank of the Hankel matrix gives the number of
    exponentials, the shift invariance of its dominant left singular
    vectors gives their roots exp(2 pi i f), and each root (class d,
    frequency f) names the canonical pair of T_{d,f}.  The coefficients
    then come from one least-squares fit of the candidate columns to the
    data, and the result is accepted only if it reproduces every atom.
    """
    if X < 1:
        raise DomainError("window X must be at least 1")
    if len(m) and m.positions[-1] > X + MERGE_TOL:
        raise DomainError(f"atom at {m.positions[-1]} lies outside the window {X}")
    if len(m) == 0:
        if abs(m.origin) > COEFF_TOL:
            warnings.warn("origin mass without positive atoms is not representable",
                          OriginMismatch, stacklevel=2)
        return TdeDecomposition()

    candidates: list[tuple[float, float]] = []
    for d in detect_progressions(m, max_classes).residues:
        _, seq = class_sequence(m, d, X)
        for root in _prony_roots(seq, max_rank, d):
            f = math.atan2(root.imag, root.real) / (2.0 * math.pi)
            pair = _candidate(d, f)
            if not any(_same_pair(pair, c) for c in candidates):
                candidates.append(pair)

    grid = m.positions
    columns = []
    kept = []
    for d, e in candidates:
        col = _atom_vector(expand_window(TdeDecomposition((TdeTerm(d, e, 1.0),)), X), grid)
        if np.linalg.norm(col) > 1e-12:
            columns.append(col)
            kept.append((d, e))
    if not kept:
        raise NotFiniteCombination("no exponential components found")
    matrix = np.column_stack(columns)
    coeffs = np.linalg.lstsq(matrix, m.coefficients, rcond=None)[0]
    dec = TdeDecomposition(tuple(TdeTerm(d, e, complex(c)) for (d, e), c in zip(kept, coeffs)
                                 if abs(c) > COEFF_TOL))

    rebuilt = expand_window(dec, X)
    residual = float(np.max(np.abs(_atom_vector(rebuilt, grid) - m.coefficients)))
    extra = [x for x in rebuilt.positions
             if np.min(np.abs(grid - x)) > MERGE_TOL] if len(rebuilt) else []
    scale = max(1.0, float(np.max(np.abs(m.coefficients))))
    if residual > ROUNDTRIP_TOL * scale or extra:
        raise NotFiniteCombination(f"round-trip residual {residual:.2e} exceeds {ROUNDTRIP_TOL:.0e}")
    if abs(rebuilt.origin - m.origin) > COEFF_TOL:
        warnings.warn(f"origin mass {m.origin} differs from the predicted {rebuilt.origin}",
                      OriginMismatch, stacklevel=2)
    return dec


# ---------------------------------------------------------------------------
# Gaussian pairing


def _pair_gaussian(m: AtomicEvenMeasure, scale: float, width: float) -> complex:
    """<m, scale * exp(-pi x^2 / width)> counting both mirror atoms."""
    total = m.origin
    if len(m):
        total += 2.0 * np.sum(m.coefficients * np.exp(-np.pi * m.positions**2 / width))
    return complex(scale * total)


def gaussian_pairing_check(dec: TdeDecomposition, t: float, X: float) -> float:
    """|<D, F psi_t> - <F D, psi_t>| for psi_t(x) = exp(-pi t x^2).

    F psi_t = t^(-1/2) psi_(1/t), and both pairings are finite atom sums over
    the windowed measures.
    """
    t = float(t)
    if t <= 0:
        raise DomainError("t must be positive")
    if math.exp(-math.pi * t * X * X) >= 1e-16 or math.exp(-math.pi * X * X / t) >= 1e-16:
        raise DomainError(f"window {X} too small for t = {t}")
    left = _pair_gaussian(expand_window(dec, X), t**-0.5, t)
    right = _pair_gaussian(expand_window(fourier_measure(dec), X), 1.0, 1.0 / t)
    return abs(left - right)

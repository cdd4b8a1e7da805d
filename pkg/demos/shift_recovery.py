"""Fit samples of g on the real axis in the basis g_k and estimate the support gap."""

import numpy as np

from hamburger.dirichlet import (ZetaShiftCombination, estimate_support_gap, recover_shift_coefficients,
                                 synthesize_samples, zeta_shift_g)
from hamburger.tde import tde_g

# g_k grows like sigma^(2k) with alternating sign
for k in (-2, -1, 0, 1, 2):
    print(f"g_{k}(50) = {zeta_shift_g(k, 50.0).real:+.6e}")

truth = ZetaShiftCombination({0: 2.0, -1: 3.0, 2: 0.5j})
samples = synthesize_samples(truth, range(10, 41, 2))
fit = recover_shift_coefficients(samples, -3, 3, full_output=True)
print("recovered:", {k: complex(np.round(v, 10)) for k, v in fit.combination.pruned().coefficients.items()})
print(f"relative residual {fit.relative_residual:.1e}, condition {fit.condition:.1e}")

# exponential decay along the real axis reveals the smallest support point
sigmas = range(40, 71, 5)
print("Y0 for 2^-sigma:", estimate_support_gap(lambda x: 2.0**-x, sigmas))
print("Y0 for tde_g(0.3, 0.2, .):", estimate_support_gap(lambda x: tde_g(0.3, 0.2, x), sigmas))

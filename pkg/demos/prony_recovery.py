"""Recover a translate-and-twist decomposition from a window of atoms."""

import numpy as np

from hamburger.measures import (TdeDecomposition, decompose_prony, expand_window, fourier_measure,
                                gaussian_pairing_check)

target = TdeDecomposition.from_terms([(0.25, 0.5, 1.0), (0.6, 0.3, 0.4 - 0.2j)])
window = 30.0

# the atoms on [0, 30]: two residue classes mod 1 on each side
m = expand_window(target, window)
print(len(m), "atoms, first few positions:", np.round(m.positions[:6], 3))

found = decompose_prony(m, window)
for term in found.terms:
    print(f"d = {term.d:.12f}  e = {term.e:.12f}  c = {term.coefficient:.12f}")

# the Fourier transform swaps the roles of d and e
dual = fourier_measure(found)
print("dual terms:", [(round(t.d, 6), round(t.e, 6)) for t in dual.terms])

# Gaussians are their own Fourier transforms, so pairing both sides must agree
for t in (0.5, 1.0, 2.0):
    print(f"pairing discrepancy at t = {t}: {gaussian_pairing_check(found, t, 10):.1e}")

"""Tour of the special functions: chi, the zeta function and its continuation."""

import numpy as np

from hamburger.specfun import chi, hurwitz_zeta, riemann_zeta, theta

# chi is the gamma-factor quotient; it is 1 at the centre of symmetry
print("chi(1/2) =", chi(0.5))

# the functional equation zeta(s) = chi(s) zeta(1-s) along a vertical line
for t in np.linspace(-20, 20, 5):
    s = complex(-3.5, t)
    lhs, rhs = riemann_zeta(s), chi(s) * riemann_zeta(1 - s)
    print(f"s = {s:.2f}   zeta(s) = {lhs:.10f}   gap = {abs(lhs - rhs):.1e}")

# trivial zeros: chi vanishes there and says so
value, at_zero = chi(-4, full_output=True)
print("chi(-4) =", value, "flagged zero:", at_zero)

# a few familiar values
print("zeta(2) * 6 / pi^2 =", (riemann_zeta(2) * 6 / np.pi**2).real)
print("hurwitz_zeta(2, 1/2) =", hurwitz_zeta(2, 0.5).real, " pi^2/2 =", np.pi**2 / 2)

# Jacobi theta and its modular identity theta(1/t) = sqrt(t) theta(t)
for t in (0.25, 1.0, 4.0):
    print(f"t = {t}: theta(1/t) - sqrt(t) theta(t) = {theta(1 / t) - np.sqrt(t) * theta(t):.1e}")

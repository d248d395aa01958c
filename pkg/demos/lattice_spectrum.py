"""Walk through the spectral side: pullback matrix, dynamical degrees, theta_1.

Run with ``python demos/lattice_spectrum.py``.
"""

from __future__ import annotations

import numpy as np

from blancert.lattice import (
    NuBasis,
    charpoly,
    curve_L,
    dynamical_degrees,
    phi_pullback,
    theta1,
    theta_dot_L,
)

# Pullback of the composition on N^1 with basis (H, E1..E3, F1..F3).
M = phi_pullback((1, 2, 3), 3)
print("pullback matrix:")
print(np.array(M.tolist()))

# The characteristic polynomial is exact; it factors as (x-1)^4 (x+1) (x^2 - 18x + 1).
print("charpoly (low to high):", charpoly(M))

l1, l2 = dynamical_degrees(M)
print(f"lambda1 = {float(l1):.12f}, lambda2 = {float(l2):.12f}")
print(f"9 + 4 sqrt(5) = {9 + 4 * np.sqrt(5):.12f}")

# theta_1 lives in the span of nu_i = 2H - 2E_i - F_i.
lam, alpha = theta1(M)
print("alpha =", [round(float(a), 9) for a in alpha])
print("nu-span action:\n", np.array(NuBasis(3).restrict(M)))

# A curve class with negative intersection against theta_1.
print("L =", curve_L(3), " theta_1 . L =", float(theta_dot_L(alpha)))

# Cross-check against floating-point linear algebra.
w, v = np.linalg.eig(np.array(M.tolist(), dtype=float))
print("numpy spectral radius:", max(abs(w)))

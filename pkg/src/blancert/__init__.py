"""Exact certificate machinery for the non-regularizability of a cubic Cremona composition on P^3."""

from __future__ import annotations

__version__ = "0.1.0"

from .polyring import Dyadic, Polynomial, Ring, STANDARD, Variable, VarKind, standard_ring
from .cubicmaps import CubicForm, SymbolicPoint, compose_F, compose_F_inverse, involution
from .reduction import mod_2I, mod_4, mod_8, split_base, split_step
from .certifier import certify_base, certify_step, orbit_sanity
from .lattice import dynamical_degrees, phi_pullback, sigma_pullback, theta1

__all__ = [
    "Dyadic", "Polynomial", "Ring", "STANDARD", "Variable", "VarKind", "standard_ring",
    "CubicForm", "SymbolicPoint", "compose_F", "compose_F_inverse", "involution",
    "mod_2I", "mod_4", "mod_8", "split_base", "split_step",
    "certify_base", "certify_step", "orbit_sanity",
    "dynamical_degrees", "phi_pullback", "sigma_pullback", "theta1",
]

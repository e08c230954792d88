"""Characteristic-equation analysis of m a - k1 a'' + k2 a'''' - ... = 0.

With a ~ exp(z tau) the equation becomes a degree-n polynomial in u = z^2,
sum_i (-1)^i k_i u^i = 0.  Bounded oscillatory motion requires every root to
be real and negative, u_i = -omega_i^2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import RootFindingFailure, UnsupportedOrder

IMAG_TOL = 1e-9
NEG_TOL = 1e-12
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    roots_z2: tuple
    frequencies: tuple
    oscillatory: bool

    @property
    def growth_rates(self):
        """Real exponents sqrt(u) for the real positive roots (diverging modes)."""
        return tuple(
            sorted(float(np.sqrt(u.real)) for u in self.roots_z2 if abs(u.imag) <= IMAG_TOL and u.real > NEG_TOL)
        )


def characteristic_coefficients(spec):
    """Coefficients of the polynomial in u = z^2, lowest degree first."""
    if spec.order_n < 1:
        raise UnsupportedOrder("the spinless Lagrangian has no characteristic equation")
    return [(-1) ** i * ki for i, ki in enumerate(spec.k)]


def spectrum(spec):
    coeffs = np.asarray(characteristic_coefficients(spec), dtype=float)
    roots = P.polyroots(coeffs)
    scale = np.linalg.norm(coeffs)
    for u in roots:
        # relative to the size of the terms, so large roots are judged fairly
        terms = np.abs(coeffs) * np.abs(u) ** np.arange(len(coeffs))
        res = abs(P.polyval(u, coeffs))
        if res > RESIDUAL_TOL * max(scale, terms.max()):
            raise RootFindingFailure(f"root {u} has residual {res:.3e}", residual=res)
    roots = tuple(sorted((complex(u) for u in roots), key=lambda u: (u.real, u.imag)))
    negative = [u for u in roots if abs(u.imag) <= IMAG_TOL and u.real <= -NEG_TOL]
    freqs = tuple(sorted(float(np.sqrt(-u.real)) for u in negative))
    return Spectrum(roots, freqs, len(negative) == len(roots))


def descartes_check(spec):
    """True iff every nonzero k_i has the sign (-1)^i."""
    return spec.is_oscillatory_signed()

"""The combined screened potential, its named limits, and the 1/r surrogates.

The interaction is

    V(r) = -V0 exp(-2 a r)/(1 - exp(-2 a r)) - A exp(-a r)/r + B/r^2 + C

with screening parameter a = alpha.  Zeroing (A, B, C) leaves the Hulthen
well, zeroing (V0, B, C) the Yukawa well, and zeroing (V0, A, C) the
inverse-quadratic barrier.  All evaluation is pointwise and pure; r must be
strictly positive because both the Hulthen denominator and 1/r^2 are
singular at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import PhysicalConstants, Molecule, hbar2_over_2mu
from .errors import DomainError


@dataclass(frozen=True)
class PotentialParams:
    """Strengths (v0, a, b, c) and screening alpha of the combined potential."""

    v0: float
    a: float
    b: float
    c: float
    alpha: float

    def __post_init__(self):
        if self.alpha <= 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")

    @classmethod
    def from_molecule(cls, mol: Molecule, v0: float = 0.0) -> "PotentialParams":
        """Molecule constants with an explicit well depth (tabulated data carry none)."""
        return cls(v0=v0, a=mol.a, b=mol.b, c=mol.c, alpha=mol.alpha)


def _check_r(r):
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise DomainError("r must be strictly positive")
    return r


def potential(r, p: PotentialParams):
    """Full combined potential at r (scalar or array)."""
    r = _check_r(r)
    e2 = np.exp(-2.0 * p.alpha * r)
    v = -p.v0 * e2 / (1.0 - e2) - p.a * np.exp(-p.alpha * r) / r + p.b / r**2 + p.c
    return v if v.ndim else float(v)


def hulthen(r, v0: float, alpha: float):
    """Screened short-range well: the A = B = C = 0 limit."""
    return potential(r, PotentialParams(v0=v0, a=0.0, b=0.0, c=0.0, alpha=alpha))


def yukawa(r, a: float, alpha: float):
    """Screened Coulomb well: the V0 = B = C = 0 limit."""
    return potential(r, PotentialParams(v0=0.0, a=a, b=0.0, c=0.0, alpha=alpha))


def inverse_quadratic(r, b: float):
    """Pure 1/r^2 term: the V0 = A = C = 0 limit (alpha drops out)."""
    r = _check_r(r)
    v = b / r**2
    return v if v.ndim else float(v)


def greene_aldrich_inv_r2(r, alpha: float):
    """Exponential-ratio surrogate for 1/r^2, valid for small alpha*r."""
    if alpha <= 0.0:
        raise DomainError("alpha must be positive")
    r = _check_r(r)
    e2 = np.exp(-2.0 * alpha * r)
    v = 4.0 * alpha**2 * e2 / (1.0 - e2) ** 2
    return v if v.ndim else float(v)


def greene_aldrich_inv_r(r, alpha: float):
    """Companion surrogate for 1/r, kept exactly in its stated mixed-exponent
    form 2a exp(-a r)/(1 - exp(-2 a r)).

    The exp(-a r) numerator over a 1 - exp(-2 a r) denominator is not the
    algebraic square root of the 1/r^2 surrogate; the difference between the
    two candidate forms is quantified by the check suites rather than
    resolved here.
    """
    if alpha <= 0.0:
        raise DomainError("alpha must be positive")
    r = _check_r(r)
    v = 2.0 * alpha * np.exp(-alpha * r) / (1.0 - np.exp(-2.0 * alpha * r))
    return v if v.ndim else float(v)


def effective_potential(r, p: PotentialParams, l: int, mu: float,
                        constants: PhysicalConstants):
    """Combined potential plus the exact centrifugal term l(l+1) hbar^2/(2 mu r^2)."""
    if l < 0:
        raise DomainError("l must be non-negative")
    r = _check_r(r)
    v = potential(r, p) + hbar2_over_2mu(mu, constants) * l * (l + 1) / r**2
    return v if np.ndim(v) else float(v)


def potential_curves(p: PotentialParams, r_min: float = 0.05, r_max: float = 10.0,
                     n_points: int = 512):
    """Plot-ready samples (r, combined, hulthen, yukawa, inverse-quadratic).

    Used for figure emission; the three partial curves use the same
    parameter values as the combined one.
    """
    r = np.linspace(r_min, r_max, n_points)
    return (
        r,
        potential(r, p),
        hulthen(r, p.v0, p.alpha),
        yukawa(r, p.a, p.alpha),
        inverse_quadratic(r, p.b),
    )

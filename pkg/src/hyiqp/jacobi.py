"""Jacobi polynomial evaluation for real, possibly negative parameters."""

import numpy as np

from .errors import DomainError


def _binom(z: float, k: int) -> float:
    """Generalized binomial coefficient C(z, k) for real z, integer k >= 0."""
    out = 1.0
    for i in range(k):
        out *= (z - i) / (k - i)
    return out


def _jacobi_sum(n: int, alpha: float, beta: float, x):
    # Explicit binomial expansion; exact for the small degrees used here but
    # cancellation-prone at large n, so it only backs up the recurrence.
    half_minus = (x - 1.0) / 2.0
    half_plus = (x + 1.0) / 2.0
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for k in range(n + 1):
        acc = acc + (_binom(n + alpha, n - k) * _binom(n + beta, k)
                     * half_minus**k * half_plus ** (n - k))
    return acc


def jacobi(n: int, alpha: float, beta: float, x):
    """P_n^(alpha, beta)(x) by the ascending three-term recurrence.

    The recurrence in the argument is preferred over factorial-ratio
    expansions for stability at moderate degree.  Parameter combinations
    that zero a recurrence denominator (2k + alpha + beta hitting 0 or 2 for
    some k <= n) fall back to the explicit binomial sum.
    """
    if n < 0 or n != int(n):
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n}")
    n = int(n)
    x = np.asarray(x, dtype=float)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p_cur = (alpha + 1.0) + (alpha + beta + 2.0) * (x - 1.0) / 2.0
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + alpha + beta) * (2.0 * k + alpha + beta - 2.0)
        if abs(c1) < 1e-300:
            return _jacobi_sum(n, alpha, beta, x)
        c2 = (2.0 * k + alpha + beta - 1.0) * (alpha**2 - beta**2)
        c3 = ((2.0 * k + alpha + beta - 2.0) * (2.0 * k + alpha + beta - 1.0)
              * (2.0 * k + alpha + beta))
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + alpha + beta)
        p_prev, p_cur = p_cur, ((c2 + c3 * x) * p_cur - c4 * p_prev) / c1
    return p_cur

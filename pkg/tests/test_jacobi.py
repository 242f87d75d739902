import numpy as np
import pytest
from scipy.special import eval_jacobi

from hyiqp.errors import DomainError
from hyiqp.jacobi import jacobi


def test_degree_zero_and_one():
    x = np.linspace(-1, 1, 7)
    assert np.all(jacobi(0, 2.3, -4.1, x) == 1.0)
    a, b = 1.7, -0.4
    expected = (a + 1) + (a + b + 2) * (x - 1) / 2
    assert np.allclose(jacobi(1, a, b, x), expected, rtol=1e-15)


def test_degree_two_against_explicit_binomials():
    a, b = -8.3, -15.4
    s = np.linspace(0.01, 0.99, 23)
    x = 1 - 2 * s
    c0 = (2 + a) * (1 + a) / 2
    c1 = (2 + a) * (2 + b)
    c2 = (2 + b) * (1 + b) / 2
    expected = c0 * (1 - s) ** 2 + c1 * (-s) * (1 - s) + c2 * s**2
    assert np.allclose(jacobi(2, a, b, x), expected, rtol=1e-12)


def _binom(z, k):
    out = 1.0
    for i in range(k):
        out *= (z - i) / (k - i)
    return out


def _jacobi_binomial(n, a, b, x):
    return sum(_binom(n + a, n - k) * _binom(n + b, k)
               * ((x - 1) / 2) ** k * ((x + 1) / 2) ** (n - k)
               for k in range(n + 1))


def test_matches_scipy_for_random_real_parameters():
    rng = np.random.default_rng(42)
    checked = 0
    for _ in range(300):
        n = int(rng.integers(0, 11))
        a = float(rng.uniform(-25, 25))
        b = float(rng.uniform(-25, 25))
        x = rng.uniform(-1, 1, size=4)
        ref = eval_jacobi(n, a, b, x)
        if not np.all(np.isfinite(ref)):
            continue  # scipy gives up on some negative-parameter combinations
        checked += 1
        mine = jacobi(n, a, b, x)
        scale = max(1.0, float(np.max(np.abs(ref))))
        assert np.allclose(mine, ref, rtol=1e-8, atol=1e-8 * scale)
    assert checked > 250


def test_degenerate_parameters_fall_back_to_sum():
    # alpha + beta = -2 zeroes the leading recurrence coefficient at k = 2;
    # scipy returns NaN here, so the binomial expansion is the referee
    a, b = 1.0, -3.0
    x = np.linspace(-0.9, 0.9, 11)
    ref = np.array([_jacobi_binomial(2, a, b, xi) for xi in x])
    assert np.allclose(jacobi(2, a, b, x), ref, rtol=1e-12, atol=1e-12)


def test_scalar_input_stays_scalar_shaped():
    val = jacobi(3, 0.5, 0.5, 0.2)
    assert np.ndim(val) == 0


def test_degree_validation():
    with pytest.raises(DomainError):
        jacobi(-1, 0.0, 0.0, 0.5)
    with pytest.raises(DomainError):
        jacobi(1.5, 0.0, 0.0, 0.5)

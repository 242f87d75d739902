import math

import numpy as np
import pytest

from hyiqp.constants import PAPER, PHYSICAL, get_molecule, hbar2_over_2mu
from hyiqp.errors import DomainError
from hyiqp.potential import (PotentialParams, effective_potential,
                             greene_aldrich_inv_r, greene_aldrich_inv_r2,
                             hulthen, inverse_quadratic, potential,
                             potential_curves, yukawa)

H2 = get_molecule("H2")
R_GRID = np.geomspace(0.03, 50.0, 80)


def test_offset_only_potential_is_constant():
    p = PotentialParams(v0=0.0, a=0.0, b=0.0, c=2.5, alpha=0.7)
    assert potential(0.17, p) == 2.5
    assert np.all(potential(R_GRID, p) == 2.5)


def test_large_r_limit_approaches_offset():
    # screened terms die exponentially, the 1/r^2 barrier polynomially
    p = PotentialParams(v0=5.0, a=H2.a, b=H2.b, c=H2.c, alpha=H2.alpha)
    assert potential(1e9, p) == pytest.approx(H2.c, abs=1e-12)
    assert potential(500.0, p) == pytest.approx(H2.c, abs=1e-4)


def test_h2_point_value_against_scalar_arithmetic():
    # independent evaluation of the defining expression at r = 1, V0 = 5
    p = PotentialParams(v0=5.0, a=H2.a, b=H2.b, c=H2.c, alpha=H2.alpha)
    e2 = math.exp(-2 * 0.20990)
    expected = (-5.0 * e2 / (1 - e2)
                - 0.7416 * math.exp(-0.20990) / 1.0
                + 1.9426 / 1.0**2
                + 1.440558)
    assert potential(1.0, p) == pytest.approx(expected, rel=1e-14)


def test_named_limits_match_zeroed_potential_pointwise():
    full = PotentialParams(v0=3.0, a=1.2, b=0.8, c=0.4, alpha=0.35)
    h = potential(R_GRID, PotentialParams(3.0, 0.0, 0.0, 0.0, 0.35))
    y = potential(R_GRID, PotentialParams(0.0, 1.2, 0.0, 0.0, 0.35))
    q = potential(R_GRID, PotentialParams(0.0, 0.0, 0.8, 0.0, 0.35))
    assert np.array_equal(hulthen(R_GRID, 3.0, 0.35), h)
    assert np.array_equal(yukawa(R_GRID, 1.2, 0.35), y)
    assert np.array_equal(inverse_quadratic(R_GRID, 0.8), q)
    # the three pieces plus the offset rebuild the full potential
    rebuilt = h + y + q + 0.4
    assert np.allclose(rebuilt, potential(R_GRID, full), rtol=1e-15, atol=1e-15)


def test_inverse_quadratic_value():
    assert inverse_quadratic(2.0, 1.9426) == pytest.approx(0.48565, abs=1e-12)


def test_greene_aldrich_small_x_limit():
    # x = 2 alpha r -> 0: r^2 * surrogate -> 1
    assert 0.001**2 * greene_aldrich_inv_r2(0.001, 0.01) == pytest.approx(1.0, abs=1e-7)


def test_greene_aldrich_at_x_02():
    # alpha r = 0.1: independent scalar evaluation of x^2 e^-x / (1-e^-x)^2
    x = 0.2
    expected = x**2 * math.exp(-x) / (1 - math.exp(-x)) ** 2
    got = 1.0**2 * greene_aldrich_inv_r2(1.0, 0.1)
    assert got == pytest.approx(expected, rel=1e-14)
    assert expected == pytest.approx(0.99667, abs=5e-6)   # ~0.33% low


def test_greene_aldrich_at_x_2():
    # alpha r = 1: golden ratio value from the same scalar oracle
    x = 2.0
    expected = x**2 * math.exp(-x) / (1 - math.exp(-x)) ** 2
    assert 1.0 * greene_aldrich_inv_r2(1.0, 1.0) == pytest.approx(expected, rel=1e-14)


def test_greene_aldrich_inv_r_keeps_stated_mixed_exponents():
    r, alpha = 0.8, 0.45
    expected = 2 * alpha * math.exp(-alpha * r) / (1 - math.exp(-2 * alpha * r))
    assert greene_aldrich_inv_r(r, alpha) == pytest.approx(expected, rel=1e-14)


def test_greene_aldrich_error_decreases_with_alpha():
    # fixed physical window [0.1, 1]; the sup error must fall monotonically
    # as the screening weakens
    r = np.linspace(0.1, 1.0, 200)
    sups = []
    for alpha in (0.8, 0.4, 0.2, 0.1, 0.05):
        sups.append(np.max(np.abs(r**2 * greene_aldrich_inv_r2(r, alpha) - 1.0)))
    assert all(a > b for a, b in zip(sups, sups[1:]))


def test_effective_potential_centrifugal_term():
    p = PotentialParams.from_molecule(H2, v0=0.0)
    r = 1.3
    assert effective_potential(r, p, 0, H2.mu, PAPER) == potential(r, p)
    # with b = 0 the l = 1 curve differs by exactly 2 h2m / r^2
    p0 = PotentialParams(v0=1.0, a=0.5, b=0.0, c=0.2, alpha=0.3)
    h2m = hbar2_over_2mu(H2.mu, PAPER)
    diff = (effective_potential(r, p0, 1, H2.mu, PAPER)
            - effective_potential(r, p0, 0, H2.mu, PAPER))
    assert diff == pytest.approx(2 * h2m / r**2, rel=1e-13)


def test_effective_potential_h2_l2_golden():
    # hand evaluation at r = 1.5 in physical mode
    p = PotentialParams.from_molecule(H2, v0=0.0)
    r = 1.5
    h2m = 1973.269804**2 / (2 * 0.5039100 * 931.49410242e6)
    e2 = math.exp(-2 * 0.20990 * r)
    expected = (-0.7416 * math.exp(-0.20990 * r) / r + 1.9426 / r**2 + 1.440558
                + h2m * 6.0 / r**2)
    assert effective_potential(r, p, 2, H2.mu, PHYSICAL) == pytest.approx(expected, rel=1e-14)


def test_potential_finite_on_closed_intervals():
    p = PotentialParams(v0=4.0, a=1.1, b=0.9, c=0.3, alpha=0.6)
    r = np.linspace(1e-3, 80.0, 20001)
    v = potential(r, p)
    assert np.all(np.isfinite(v))


@pytest.mark.parametrize("bad_r", [0.0, -1.0])
def test_r_must_be_positive(bad_r):
    p = PotentialParams(v0=1.0, a=1.0, b=1.0, c=0.0, alpha=0.5)
    for func in (lambda: potential(bad_r, p),
                 lambda: hulthen(bad_r, 1.0, 0.5),
                 lambda: yukawa(bad_r, 1.0, 0.5),
                 lambda: inverse_quadratic(bad_r, 1.0),
                 lambda: greene_aldrich_inv_r2(bad_r, 0.5),
                 lambda: greene_aldrich_inv_r(bad_r, 0.5),
                 lambda: effective_potential(bad_r, p, 1, 1.0, PAPER)):
        with pytest.raises(DomainError):
            func()


def test_alpha_validation():
    with pytest.raises(DomainError):
        PotentialParams(v0=0.0, a=0.0, b=0.0, c=0.0, alpha=0.0)
    with pytest.raises(DomainError):
        greene_aldrich_inv_r2(1.0, -0.2)


def test_potential_curves_shapes():
    p = PotentialParams.from_molecule(H2, v0=5.0)
    r, f, f1, f2, f3 = potential_curves(p, 0.05, 10.0, 512)
    assert r.shape == f.shape == f1.shape == f2.shape == f3.shape == (512,)
    assert r[0] == 0.05 and r[-1] == 10.0
    # combined = sum of parts plus offset
    assert np.allclose(f, f1 + f2 + f3 + p.c, rtol=1e-14, atol=1e-14)

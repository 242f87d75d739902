"""Independent radial-grid solver used to cross-check every closed form.

The radial equation is discretized with the exact potential (no
exponential-ratio surrogate anywhere) on a uniform grid with Dirichlet ends:

    -(hbar^2/2mu) u'' + [V(r) + (hbar^2/2mu) l(l+1)/r^2] u = E u

Two methods are provided.  ``solve_matrix`` builds the symmetric
tridiagonal second-order central-difference Hamiltonian and extracts the
lowest eigenpairs by bisection plus inverse iteration (LAPACK, via
scipy.linalg.eigh_tridiagonal).  ``solve_numerov`` integrates outward and
inward with the Numerov scheme and matches logarithmic derivatives at the
outermost classical turning point, bisecting the mismatch to locate one
eigenvalue inside a bracket.  Their disagreement measures pure
discretization error; their agreement with the closed forms measures the
surrogate approximation embedded there.

Deep Coulomb-like states are sensitive to the inner Dirichlet wall: the
eigenvalue shift scales as (hbar^2/2mu) |u'(r_min)|^2 r_min, about 1.6e-3
energy units per 1e-7 of r_min for the screened-well sanity configuration.
Tight cross-checks must therefore lower r_min below the default 1e-4.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .constants import PAPER, PhysicalConstants, hbar2_over_2mu
from .errors import ConvergenceError, DomainError
from .potential import PotentialParams, effective_potential
from .spectrum import count_sign_changes

# r_max default is the H2-scale window, rescaled with the screening length.
DEFAULT_R_MAX_TIMES_ALPHA = 40.0 * 0.20990
NODE_THRESHOLD = 1e-9


@dataclass(frozen=True)
class OracleConfig:
    """Grid and tolerance settings for one solve."""

    r_min: float = 1e-4
    r_max: float = 40.0
    n_points: int = 20000
    method: str = "matrix"
    eig_tol: float = 1e-10

    def __post_init__(self):
        if not 0.0 < self.r_min < self.r_max:
            raise DomainError("need 0 < r_min < r_max")
        if self.n_points < 1000:
            raise DomainError("n_points must be at least 1000")
        if self.eig_tol > 1e-8:
            raise DomainError("eig_tol must be at most 1e-8")
        if self.method not in ("matrix", "numerov"):
            raise DomainError(f"unknown method {self.method!r}")


def default_config(alpha: float, n_points: int = 20000) -> OracleConfig:
    """Default window scaled with the screening length 1/alpha."""
    return OracleConfig(r_min=1e-4, r_max=DEFAULT_R_MAX_TIMES_ALPHA / alpha,
                        n_points=n_points)


@dataclass
class RadialGridSolution:
    """Bound eigenpairs of one (potential, l) problem on the grid.

    grid holds the interior points; each eigenvector is trapezoid-normalized
    on it and sign-fixed (positive at its largest lobe) for determinism.
    """

    grid: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray          # shape (n_states, n_interior)
    node_counts: list[int]
    v_eff: np.ndarray
    params: PotentialParams
    l: int
    mu: float
    constants: PhysicalConstants
    asymptote: float
    diagnostics: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class NumerovResult:
    """Matched eigenvalue from the two-sided Numerov integration."""

    energy: float
    node_count: int
    iterations: int
    mismatch: float


def _interior_grid(cfg: OracleConfig):
    full = np.linspace(cfg.r_min, cfg.r_max, cfg.n_points)
    return full, full[1:-1], full[1] - full[0]


def solve_matrix(p: PotentialParams, l: int, mu: float, cfg: OracleConfig,
                 k_states: int, constants: PhysicalConstants = PAPER,
                 below_asymptote_only: bool = True) -> RadialGridSolution:
    """Lowest k_states eigenpairs of the central-difference Hamiltonian.

    States at or above the potential's asymptote C are box artifacts, not
    bound states; by default they are dropped with a diagnostic, and the
    bound subset (possibly empty) is returned.
    """
    if k_states < 1:
        raise DomainError("k_states must be at least 1")
    _full, r, h = _interior_grid(cfg)
    if k_states > r.size:
        raise DomainError("k_states exceeds the number of interior grid points")
    h2m = hbar2_over_2mu(mu, constants)
    v_eff = effective_potential(r, p, l, mu, constants)
    diag = 2.0 * h2m / h**2 + v_eff
    off = np.full(r.size - 1, -h2m / h**2)
    eigenvalues, vectors = eigh_tridiagonal(
        diag, off, select="i", select_range=(0, k_states - 1), tol=cfg.eig_tol)

    diagnostics = []
    keep = np.arange(k_states)
    if below_asymptote_only:
        bound = eigenvalues < p.c
        if not np.all(bound):
            diagnostics.append(
                f"only {int(np.sum(bound))} of {k_states} requested states lie below "
                f"the asymptote C={p.c:.6g}; unbound box states dropped"
            )
        keep = np.nonzero(bound)[0]

    vecs = []
    nodes = []
    for k in keep:
        u = vectors[:, k].astype(float)
        u /= np.sqrt(np.trapezoid(u * u, r))
        if u[int(np.argmax(np.abs(u)))] < 0.0:
            u = -u
        vecs.append(u)
        nodes.append(count_sign_changes(u, threshold_ratio=NODE_THRESHOLD))
    return RadialGridSolution(
        grid=r,
        eigenvalues=eigenvalues[keep],
        eigenvectors=np.array(vecs) if vecs else np.empty((0, r.size)),
        node_counts=nodes,
        v_eff=v_eff,
        params=p,
        l=l,
        mu=mu,
        constants=constants,
        asymptote=p.c,
        diagnostics=diagnostics,
    )


def _numerov_mismatch(g: np.ndarray, h: float, match: int):
    """Log-derivative mismatch at the match index for u'' + g u = 0.

    Integrates outward to match+1 and inward to match-1 with the Numerov
    three-point scheme and returns the difference of the centered
    logarithmic derivatives, plus both branches for state assembly.
    """
    w = 1.0 + (h * h / 12.0) * g
    n = g.size
    uo = np.zeros(match + 2)
    uo[1] = 1e-12
    for i in range(1, match + 1):
        uo[i + 1] = ((12.0 - 10.0 * w[i]) * uo[i] - w[i - 1] * uo[i - 1]) / w[i + 1]
    ui = np.zeros(n)
    ui[-2] = 1e-12
    for i in range(n - 2, match - 1, -1):
        ui[i - 1] = ((12.0 - 10.0 * w[i]) * ui[i] - w[i + 1] * ui[i + 1]) / w[i - 1]
    if uo[match] == 0.0 or ui[match] == 0.0:
        raise ConvergenceError("Numerov solution vanished at the matching point")
    dlog_out = (uo[match + 1] - uo[match - 1]) / (2.0 * h * uo[match])
    dlog_in = (ui[match + 1] - ui[match - 1]) / (2.0 * h * ui[match])
    return dlog_out - dlog_in, uo, ui


def _assemble(uo: np.ndarray, ui: np.ndarray, match: int, n: int) -> np.ndarray:
    u = np.zeros(n)
    u[: match + 1] = uo[: match + 1]
    scale = uo[match] / ui[match]
    u[match + 1:] = scale * ui[match + 1:]
    return u


def solve_numerov(p: PotentialParams, l: int, mu: float, cfg: OracleConfig,
                  e_bracket: tuple[float, float],
                  constants: PhysicalConstants = PAPER,
                  max_iterations: int = 200) -> NumerovResult:
    """One eigenvalue inside e_bracket by two-sided Numerov matching.

    The bracket must straddle a sign change of the log-derivative mismatch;
    bisection narrows it to eig_tol (relative to the energy scale) with a
    final secant polish.
    """
    full, _interior, h = _interior_grid(cfg)
    h2m = hbar2_over_2mu(mu, constants)
    v_eff = effective_potential(full, p, l, mu, constants)

    def mismatch(e):
        g = (e - v_eff) / h2m
        sign_flips = np.nonzero(np.diff(np.sign(g)) != 0)[0]
        match = int(sign_flips[-1]) + 1 if sign_flips.size else full.size // 2
        match = min(max(match, 2), full.size - 3)
        val, uo, ui = _numerov_mismatch(g, h, match)
        return val, uo, ui, match

    lo, hi = float(min(e_bracket)), float(max(e_bracket))
    f_lo, *_ = mismatch(lo)
    f_hi, *_ = mismatch(hi)
    if not (np.isfinite(f_lo) and np.isfinite(f_hi)) or f_lo * f_hi > 0.0:
        raise ConvergenceError(
            f"no sign change of the matching mismatch in bracket ({lo:.9g}, {hi:.9g})"
        )
    tol = cfg.eig_tol * max(1.0, abs(lo), abs(hi))
    iterations = 0
    while hi - lo > tol:
        iterations += 1
        if iterations > max_iterations:
            raise ConvergenceError(
                f"Numerov matching did not converge in {max_iterations} iterations")
        mid = 0.5 * (lo + hi)
        f_mid, *_ = mismatch(mid)
        if f_lo * f_mid <= 0.0:
            hi, f_hi = mid, f_mid
        else:
            lo, f_lo = mid, f_mid
    # one secant polish inside the final bracket
    e_star = lo - f_lo * (hi - lo) / (f_hi - f_lo) if f_hi != f_lo else 0.5 * (lo + hi)
    if not lo <= e_star <= hi:
        e_star = 0.5 * (lo + hi)
    f_star, uo, ui, match = mismatch(e_star)
    u = _assemble(uo, ui, match, full.size)
    nodes = count_sign_changes(u[1:-1], threshold_ratio=NODE_THRESHOLD)
    return NumerovResult(energy=e_star, node_count=nodes,
                         iterations=iterations, mismatch=f_star)


def solution_to_csv(sol: RadialGridSolution) -> str:
    """Plot-ready CSV dump of the grid and every solved eigenvector."""
    header = "r," + ",".join(f"u{k}" for k in range(len(sol.eigenvalues)))
    lines = [header]
    for i in range(sol.grid.size):
        cells = [f"{sol.grid[i]:.12g}"]
        cells += [f"{sol.eigenvectors[k][i]:.12g}" for k in range(len(sol.eigenvalues))]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def expectation_numeric(sol: RadialGridSolution, state: int, observable: str) -> float:
    """Trapezoid expectation of one observable on a solved state.

    kinetic is taken as E - <V_eff> (no differentiation of the eigenvector);
    p2 is 2 mu <T> with mu in the unit mode's energy convention.
    """
    if not 0 <= state < len(sol.eigenvalues):
        raise DomainError(
            f"state {state} out of range; solution holds {len(sol.eigenvalues)} states")
    r = sol.grid
    u = sol.eigenvectors[state]
    norm = np.trapezoid(u * u, r)
    if observable == "r_m2":
        return float(np.trapezoid(u * u / r**2, r) / norm)
    if observable == "r_m1_screened":
        return float(np.trapezoid(u * u * np.exp(-sol.params.alpha * r) / r, r) / norm)
    if observable in ("kinetic", "p2"):
        mean_v = np.trapezoid(u * u * sol.v_eff, r) / norm
        kinetic = float(sol.eigenvalues[state] - mean_v)
        if observable == "kinetic":
            return kinetic
        mu_e = sol.mu if sol.constants.mode == "paper" else sol.mu * sol.constants.amu_to_energy
        return 2.0 * mu_e * kinetic
    raise DomainError(
        f"unknown numeric observable {observable!r}; "
        "choose r_m2, r_m1_screened, kinetic or p2")

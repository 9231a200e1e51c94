"""Optical tomograms: Fock-sum definitions and closed forms.

The tomogram omega(X_theta, theta) is the probability density of the
rotated quadrature; rows (fixed theta) integrate to 1.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import NegativeTomogram
from .fock import hermite_psi_table

MAX_MATERIALIZED_ENTRIES = 10_000_000
STRAND_THRESHOLD = 0.1 / np.sqrt(np.pi)


@dataclass(frozen=True)
class QuadratureGrid:
    """Sampling grid: theta in [0, 2pi], uniform symmetric x with odd count."""

    theta_values: np.ndarray = field(repr=False)
    x_values: np.ndarray = field(repr=False)

    def __post_init__(self):
        th = np.asarray(self.theta_values, dtype=float)
        x = np.asarray(self.x_values, dtype=float)
        if th.min() < 0.0 or th.max() > 2 * np.pi + 1e-12:
            raise ValueError("theta values must lie in [0, 2pi]")
        dx = np.diff(x)
        if x.size < 3 or not np.allclose(dx, dx[0]):
            raise ValueError("x grid must be uniform")
        if abs(x[0] + x[-1]) > 1e-12 or x.size % 2 == 0:
            raise ValueError("x grid must be symmetric about 0 with odd count")
        object.__setattr__(self, "theta_values", th)
        object.__setattr__(self, "x_values", x)

    @property
    def n_theta(self):
        return self.theta_values.size

    @property
    def n_x(self):
        return self.x_values.size


def default_grid(n_theta=201, n_x=1201, x_max=12.0):
    return QuadratureGrid(np.linspace(0.0, 2 * np.pi, n_theta), np.linspace(-x_max, x_max, n_x))


@dataclass(frozen=True)
class TomogramGrid:
    grid: QuadratureGrid
    omega: np.ndarray = field(repr=False)

    def row(self, theta):
        """omega values along the row closest to theta."""
        i = int(np.argmin(np.abs(self.grid.theta_values - theta)))
        return self.omega[i]


@dataclass(frozen=True)
class TwoModeTomogramGrid:
    grid1: QuadratureGrid
    grid2: QuadratureGrid
    omega: np.ndarray = field(repr=False)  # (n_theta1, n_theta2, n_x1, n_x2)


def _phase_matrix(theta_values, n_max):
    n = np.arange(n_max + 1)
    return np.exp(-1j * np.outer(theta_values, n))


def tomogram_pure(v, grid):
    """omega = |sum_n c_n psi_n(X) e^{-i n theta}|^2."""
    psi = hermite_psi_table(v.cutoff, grid.x_values)
    phases = _phase_matrix(grid.theta_values, v.cutoff)
    amp = (phases * v.amps) @ psi
    return TomogramGrid(grid, np.abs(amp) ** 2)


def tomogram_coherent_closed(alpha, grid):
    """(1/sqrt(pi)) exp{-[X - sqrt(2|a|^2) cos(delta - theta)]^2}."""
    alpha = complex(alpha)
    delta = np.angle(alpha)
    centers = np.sqrt(2.0) * abs(alpha) * np.cos(delta - grid.theta_values)
    diff = grid.x_values[None, :] - centers[:, None]
    return TomogramGrid(grid, np.exp(-diff * diff) / np.sqrt(np.pi))


def eta_factor(x, theta, beta):
    """Exponential factor of the coherent quadrature representation.

    pi^{1/4} <X_theta, theta | beta>, so |eta|^2/sqrt(pi) is a
    single-component tomogram.
    """
    beta = complex(beta)
    x = np.asarray(x, dtype=float)
    return np.exp(
        -0.5 * x * x
        - 0.5 * abs(beta) ** 2
        - 0.5 * beta * beta * np.exp(-2j * theta)
        + np.sqrt(2.0) * beta * x * np.exp(-1j * theta)
    )


def tomogram_superposition_closed(s, grid):
    """|sum_i coeff_i eta(X, theta, label_i)|^2 / sqrt(pi)."""
    omega = np.empty((grid.n_theta, grid.n_x))
    for i, theta in enumerate(grid.theta_values):
        amp = np.zeros(grid.n_x, dtype=complex)
        for coeff, label in s.terms:
            amp += coeff * eta_factor(grid.x_values, theta, label)
        omega[i] = np.abs(amp) ** 2 / np.sqrt(np.pi)
    return TomogramGrid(grid, omega)


def tomogram_density(rho, grid):
    """omega = sum_{n,n'} rho_{n,n'} psi_n psi_n' e^{-i(n-n')theta}."""
    n_max = rho.dim - 1
    psi = hermite_psi_table(n_max, grid.x_values)
    phases = _phase_matrix(grid.theta_values, n_max)
    omega = np.empty((grid.n_theta, grid.n_x))
    for i in range(grid.n_theta):
        v = phases[i][:, None] * psi
        vals = np.einsum("nx,nm,mx->x", v, rho.elems, np.conj(v))
        if np.max(np.abs(vals.imag)) > 1e-10:
            raise NegativeTomogram("tomogram not real; invalid density matrix")
        omega[i] = vals.real
    if omega.min() < -1e-6:
        raise NegativeTomogram("tomogram value %g below tolerance" % omega.min())
    return TomogramGrid(grid, np.clip(omega, 0.0, None))


def two_mode_tomogram_slice(state, theta1, theta2, x1_values, x2_values):
    """omega(X1, X2) at one (theta1, theta2) pair, as an (n_x1, n_x2) array."""
    n1, n2 = state.n1, state.n2
    psi1 = hermite_psi_table(n1, x1_values)
    psi2 = hermite_psi_table(n2, x2_values)
    u1 = np.exp(-1j * theta1 * np.arange(n1 + 1))
    u2 = np.exp(-1j * theta2 * np.arange(n2 + 1))
    if state.is_pure:
        amp = psi1.T @ (state.amps * np.outer(u1, u2)) @ psi2
        return np.abs(amp) ** 2
    v1 = u1[:, None] * psi1
    v2 = u2[:, None] * psi2
    vals = np.einsum("ax,by,abcd,cx,dy->xy", v1, v2, state.rho, np.conj(v1), np.conj(v2))
    return np.clip(vals.real, 0.0, None)


def tomogram_two_mode(state, grids):
    """Full two-mode tomogram; refuses to materialize above 10^7 entries."""
    g1, g2 = grids
    total = g1.n_theta * g2.n_theta * g1.n_x * g2.n_x
    if total > MAX_MATERIALIZED_ENTRIES:
        raise ValueError(
            "grid too large to materialize (%d entries); use two_mode_tomogram_slice" % total
        )
    omega = np.empty((g1.n_theta, g2.n_theta, g1.n_x, g2.n_x))
    for i, t1 in enumerate(g1.theta_values):
        for j, t2 in enumerate(g2.theta_values):
            omega[i, j] = two_mode_tomogram_slice(state, t1, t2, g1.x_values, g2.x_values)
    return TwoModeTomogramGrid(g1, g2, omega)


def conditional_tomogram(state, x2, theta2, grid):
    """Tomogram of mode 1 after measuring X_{theta2} = x2 on mode 2."""
    from .beamsplitter import conditional_project

    projected = conditional_project(state, x2, theta2)
    return tomogram_pure(projected, grid)


def count_strands(row_values, threshold=STRAND_THRESHOLD):
    """Local maxima above the threshold along one tomogram row.

    A point counts when it beats both neighbours (3-point rule).
    """
    w = np.asarray(row_values, dtype=float)
    inner = w[1:-1]
    hits = (inner > threshold) & (inner > w[:-2]) & (inner > w[2:])
    return int(np.count_nonzero(hits))

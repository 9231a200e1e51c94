"""Wigner (coherent-superposition closed form) and Husimi Q functions."""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln


@dataclass(frozen=True)
class PhasePlaneGrid:
    """Uniform symmetric x/p grids; beta = (x + i p)/sqrt(2)."""

    x_values: np.ndarray = field(repr=False)
    p_values: np.ndarray = field(repr=False)

    def __post_init__(self):
        for name in ("x_values", "p_values"):
            a = np.asarray(getattr(self, name), dtype=float)
            d = np.diff(a)
            if a.size < 3 or not np.allclose(d, d[0]):
                raise ValueError("%s must be uniform" % name)
            if abs(a[0] + a[-1]) > 1e-12:
                raise ValueError("%s must be symmetric about 0" % name)
            object.__setattr__(self, name, a)

    def beta(self):
        """Complex grid of shape (n_x, n_p)."""
        return (self.x_values[:, None] + 1j * self.p_values[None, :]) / np.sqrt(2.0)


def default_phase_grid(n=481, half_width=12.0):
    axis = np.linspace(-half_width, half_width, n)
    return PhasePlaneGrid(axis, axis.copy())


def wigner_superposition(s, grid):
    """Closed-form Wigner function of a coherent superposition.

    In the complex variable, W(beta) = (2/pi) sum_{ij} c_i conj(c_j)
    exp(2|beta|^2 - |l_i|^2/2 - |l_j|^2/2 - (2 beta - l_i)(2 conj(beta) - conj(l_j))).
    The returned array carries the 1/2 Jacobian of beta = (x+ip)/sqrt(2),
    so it is a probability density over the x-p plane: the dx dp integral
    is 1 and the p-integral is the position density.
    """
    beta = grid.beta()
    common = 2.0 * np.abs(beta) ** 2
    total = np.zeros(beta.shape, dtype=complex)
    for ci, li in s.terms:
        for cj, lj in s.terms:
            expo = (
                common
                - 0.5 * abs(li) ** 2
                - 0.5 * abs(lj) ** 2
                - (2.0 * beta - li) * (2.0 * np.conj(beta) - np.conj(lj))
            )
            total += ci * np.conj(cj) * np.exp(expo)
    if np.max(np.abs(total.imag)) > 1e-10:
        raise ArithmeticError("Wigner function has imaginary residue above tolerance")
    return (1.0 / np.pi) * total.real


def husimi_q(v, grid):
    """Husimi Q via the Fock expansion of <beta|psi>.

    |<beta|psi>|^2 / pi with the same 1/2 Jacobian as the Wigner map, so
    the dx dp integral is 1.
    """
    beta_conj = np.conj(grid.beta()).ravel()
    n = np.arange(v.cutoff + 1)
    logfact = 0.5 * gammaln(n + 1.0)
    amp = np.zeros(beta_conj.size, dtype=complex)
    nonzero = beta_conj != 0
    bz = beta_conj[nonzero]
    logb = np.log(bz)
    # term_n = c_n exp(n log(conj beta) - log sqrt(n!) - |beta|^2/2)
    expo = np.outer(logb, n) - logfact[None, :] - 0.5 * (np.abs(bz) ** 2)[:, None]
    amp[nonzero] = np.exp(expo) @ v.amps
    amp[~nonzero] = v.amps[0]
    q = np.abs(amp) ** 2 / (2.0 * np.pi)
    return q.reshape(grid.x_values.size, grid.p_values.size)


def n_max_distinguishable(abs_alpha):
    """Maximum number of well-separated coherent components on the circle."""
    if abs_alpha < 0:
        raise ValueError("abs_alpha must be nonnegative")
    return 2.0 * np.pi * abs_alpha / (2.0 * np.sqrt(np.log(10.0)))


def count_peaks_2d(values, threshold):
    """Local maxima above threshold in a 3x3 neighbourhood (interior points)."""
    v = np.asarray(values, dtype=float)
    c = v[1:-1, 1:-1]
    mask = c > threshold
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            mask &= c > v[1 + di : v.shape[0] - 1 + di, 1 + dj : v.shape[1] - 1 + dj]
    return int(np.count_nonzero(mask))

"""Position/momentum densities and Renyi entropy diagnostics."""

from dataclasses import dataclass

import numpy as np

from .errors import NonNormalizedDensity
from .fock import hermite_psi_table
from .kerr import KerrParams, evolve_kerr

SHANNON_LIMIT = 1.0 + np.log(np.pi)


@dataclass(frozen=True)
class RenyiOrderPair:
    """Conjugate orders (zeta, eta) with 1/zeta + 1/eta = 2."""

    zeta: float
    eta: float

    def __post_init__(self):
        if self.zeta <= 0 or self.eta <= 0:
            raise ValueError("orders must be positive")
        if self.zeta == 1.0 or self.eta == 1.0:
            raise ValueError("order 1 is the Shannon limit; use SHANNON_LIMIT")
        if abs(1.0 / self.zeta + 1.0 / self.eta - 2.0) > 1e-12:
            raise ValueError("orders must satisfy 1/zeta + 1/eta = 2")


DEFAULT_ORDERS = RenyiOrderPair(2.0 / 3.0, 2.0)


def default_axis(n=3201, half_width=16.0):
    return np.linspace(-half_width, half_width, n)


def position_density(v, x_values):
    """|psi(x)|^2 = |sum_n c_n psi_n(x)|^2."""
    psi = hermite_psi_table(v.cutoff, x_values)
    return np.abs(v.amps @ psi) ** 2


def momentum_density(v, p_values):
    """Momentum density; the Fourier transform maps c_n to (-i)^n c_n."""
    n = np.arange(v.cutoff + 1)
    psi = hermite_psi_table(v.cutoff, p_values)
    return np.abs((v.amps * (-1j) ** n) @ psi) ** 2


def renyi_entropy(density, x_values, order):
    """(1/(1-order)) ln of the trapezoid integral of density^order."""
    if order <= 0 or order == 1.0:
        raise ValueError("order must be positive and different from 1")
    f = np.asarray(density, dtype=float)
    total = np.trapezoid(f, x_values)
    if abs(total - 1.0) > 1e-3:
        raise NonNormalizedDensity("density integrates to %g" % total)
    # negative round-off would NaN fractional powers
    f = np.maximum(f, 0.0)
    return float(np.log(np.trapezoid(f ** order, x_values)) / (1.0 - order))


def renyi_bound(orders):
    """Lower bound of the position/momentum Renyi entropy sum."""
    z, e = orders.zeta, orders.eta
    return float(-np.log(z / np.pi) / (2.0 * (1.0 - z)) - np.log(e / np.pi) / (2.0 * (1.0 - e)))


def renyi_sum_timeseries(initial, chi, times, orders=DEFAULT_ORDERS, axis=None):
    """R_pos^(zeta) + R_mom^(eta) of the Kerr-evolved state at each time."""
    if axis is None:
        axis = default_axis()
    out = np.empty(len(times))
    for i, t in enumerate(times):
        vt = evolve_kerr(initial, KerrParams(chi, t))
        rpos = renyi_entropy(position_density(vt, axis), axis, orders.zeta)
        rmom = renyi_entropy(momentum_density(vt, axis), axis, orders.eta)
        out[i] = rpos + rmom
    return out

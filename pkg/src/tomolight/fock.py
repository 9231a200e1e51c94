"""Numerically stable Fock-space primitives.

Oscillator eigenfunctions, coherent-state amplitudes and quadrature
overlaps. Everything downstream (tomograms, entropies, entanglement)
is built on these.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammainc, gammaln

from .errors import CutoffMismatch, CutoffOverflow

HARD_MAX_CUTOFF = 4096


@dataclass(frozen=True)
class TruncationPolicy:
    """Tail-probability bound controlling Fock-space truncation."""

    epsilon: float = 1e-12
    hard_max: int = HARD_MAX_CUTOFF

    def __post_init__(self):
        if not 0.0 < self.epsilon <= 1e-3:
            raise ValueError("epsilon must lie in (0, 1e-3]")


@dataclass(frozen=True)
class FockVector:
    """Truncated pure state: amplitudes c_0..c_N over photon number."""

    cutoff: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.shape != (self.cutoff + 1,):
            raise ValueError("amps length must be cutoff + 1")
        if not np.all(np.isfinite(amps)):
            raise ValueError("non-finite amplitude")
        object.__setattr__(self, "amps", amps)

    def norm(self):
        return float(np.linalg.norm(self.amps))

    def inner(self, other):
        """<self|other> over the common truncated basis."""
        if self.cutoff != other.cutoff:
            raise CutoffMismatch("cutoffs differ: %d vs %d" % (self.cutoff, other.cutoff))
        return complex(np.vdot(self.amps, other.amps))

    def normalized(self):
        return FockVector(self.cutoff, self.amps / self.norm())


def hermite_psi(n, x):
    """Normalized oscillator eigenfunction psi_n(x).

    Runs the three-term recurrence directly on psi_n so no overflow
    occurs even for n ~ 1000; raw Hermite polynomials overflow doubles
    near n = 150. Accepts scalar or array x.
    """
    x = np.asarray(x, dtype=float)
    p0 = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n == 0:
        return p0
    p1 = np.sqrt(2.0) * x * p0
    for m in range(1, n):
        p0, p1 = p1, x * np.sqrt(2.0 / (m + 1)) * p1 - np.sqrt(m / (m + 1.0)) * p0
    return p1


def hermite_psi_table(n_max, x):
    """All psi_n(x) for n = 0..n_max as an (n_max+1, len(x)) array."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((n_max + 1, x.size))
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n_max >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for m in range(1, n_max):
        out[m + 1] = x * np.sqrt(2.0 / (m + 1)) * out[m] - np.sqrt(m / (m + 1.0)) * out[m - 1]
    return out


def required_cutoff(abs_alpha_sq, policy):
    """Smallest N with Poisson tail beyond N below policy.epsilon.

    Never less than |alpha|^2 + 10*sqrt(|alpha|^2 + 1).
    """
    lam = float(abs_alpha_sq)
    floor = int(np.ceil(lam + 10.0 * np.sqrt(lam + 1.0)))
    ns = np.arange(floor, policy.hard_max + 1)
    # Poisson survival P(X > N) as the regularized lower incomplete gamma
    tails = gammainc(ns + 1.0, lam)
    below = np.nonzero(tails < policy.epsilon)[0]
    if below.size == 0:
        raise CutoffOverflow(
            "cutoff above hard maximum %d for |alpha|^2 = %g" % (policy.hard_max, lam)
        )
    return int(ns[below[0]])


def coherent_amps_at(alpha, cutoff):
    """Coherent amplitudes c_n = e^{-|a|^2/2} a^n / sqrt(n!) at a fixed cutoff."""
    alpha = complex(alpha)
    n = np.arange(cutoff + 1)
    if alpha == 0:
        amps = np.zeros(cutoff + 1, dtype=complex)
        amps[0] = 1.0
        return amps
    logmag = -0.5 * abs(alpha) ** 2 + n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1.0)
    return np.exp(logmag + 1j * n * np.angle(alpha))


def coherent_amps(alpha, policy=TruncationPolicy()):
    """Truncated coherent state |alpha> with the policy's tail bound."""
    alpha = complex(alpha)
    if abs(alpha) ** 2 > 1e4:
        raise ValueError("|alpha|^2 above supported range")
    cutoff = required_cutoff(abs(alpha) ** 2, policy)
    return FockVector(cutoff, coherent_amps_at(alpha, cutoff))


def quad_overlap_fock(x, theta, n):
    """<X_theta, theta | n> = psi_n(x) e^{-i n theta}."""
    return hermite_psi(n, x) * np.exp(-1j * n * theta)


def quad_overlap_coherent(x, theta, alpha):
    """Closed-form <X_theta, theta | alpha>."""
    alpha = complex(alpha)
    x = np.asarray(x, dtype=float)
    expo = (
        -0.5 * x * x
        - 0.5 * abs(alpha) ** 2
        - 0.5 * alpha * alpha * np.exp(-2j * theta)
        + np.sqrt(2.0) * alpha * x * np.exp(-1j * theta)
    )
    return np.pi ** -0.25 * np.exp(expo)

"""Exact solutions of the amplitude-decay and phase-damping channels.

Every formula depends on the rate and elapsed time only through the
scaled product (gamma*tau or kappa*tau), which is what DecoherenceParams
carries.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .fock import TruncationPolicy, coherent_amps_at, required_cutoff
from .states import DensityMatrix, cat_normalization
from .tomography import TomogramGrid, eta_factor


class Channel(enum.Enum):
    AMPLITUDE_DECAY = "amplitude_decay"
    PHASE_DAMPING = "phase_damping"


@dataclass(frozen=True)
class DecoherenceParams:
    model: Channel
    scaled_time: float  # gamma*tau or kappa*tau

    def __post_init__(self):
        if self.scaled_time < 0:
            raise ValueError("scaled time must be nonnegative")


def _decay_kernel(labels_i, labels_j, scaled_time):
    """Coherence suppression factor between two lists of coherent labels.

    exp[(sum_modes l_i conj(l_j) - |l_i|^2/2 - |l_j|^2/2)(1 - e^{-2 g tau})].
    """
    depletion = 1.0 - np.exp(-2.0 * scaled_time)
    expo = 0.0 + 0.0j
    for li, lj in zip(labels_i, labels_j):
        expo += li * np.conj(lj) - 0.5 * abs(li) ** 2 - 0.5 * abs(lj) ** 2
    return np.exp(expo * depletion)


def amp_decay_superposition(s, p, policy=TruncationPolicy(), cutoff=None):
    """Density of a decaying coherent superposition at scaled time gamma*tau.

    Labels shrink by e^{-gamma tau}; cross terms pick up the decay kernel.
    """
    if p.model is not Channel.AMPLITUDE_DECAY:
        raise ValueError("params must describe amplitude decay")
    shrink = np.exp(-p.scaled_time)
    if cutoff is None:
        cutoff = required_cutoff(s.max_label() ** 2, policy)
    vecs = [coherent_amps_at(lab * shrink, cutoff) for _, lab in s.terms]
    dim = cutoff + 1
    rho = np.zeros((dim, dim), dtype=complex)
    for i, (ci, li) in enumerate(s.terms):
        for j, (cj, lj) in enumerate(s.terms):
            k = _decay_kernel([li], [lj], p.scaled_time)
            rho += ci * np.conj(cj) * k * np.outer(vecs[i], np.conj(vecs[j]))
    return DensityMatrix(dim, rho)


def amp_decay_long_time(dim):
    """gamma*tau -> infinity limit: the vacuum projector."""
    rho = np.zeros((dim, dim), dtype=complex)
    rho[0, 0] = 1.0
    return DensityMatrix(dim, rho)


def phase_damp_density(rho0, p):
    """rho_{n,n'} -> e^{-kappa tau (n-n')^2} rho_{n,n'}; diagonal untouched."""
    if p.model is not Channel.PHASE_DAMPING:
        raise ValueError("params must describe phase damping")
    n = np.arange(rho0.dim)
    diff = n[:, None] - n[None, :]
    return DensityMatrix(rho0.dim, rho0.elems * np.exp(-p.scaled_time * diff.astype(float) ** 2))


def phase_damp_long_time(rho0):
    """kappa*tau -> infinity limit: only the diagonal survives."""
    return DensityMatrix(rho0.dim, np.diag(np.diag(rho0.elems)))


def amp_decay_tomogram(s, p, grid):
    """Closed-form tomogram of the decaying superposition.

    Double sum of zeta * conj(zeta) factors, where zeta is the
    eta factor evaluated at the shrunk label.
    """
    if p.model is not Channel.AMPLITUDE_DECAY:
        raise ValueError("params must describe amplitude decay")
    shrink = np.exp(-p.scaled_time)
    omega = np.empty((grid.n_theta, grid.n_x))
    kernels = [
        [
            ci * np.conj(cj) * _decay_kernel([li], [lj], p.scaled_time)
            for cj, lj in s.terms
        ]
        for ci, li in s.terms
    ]
    for it, theta in enumerate(grid.theta_values):
        zetas = [eta_factor(grid.x_values, theta, lab * shrink) for _, lab in s.terms]
        vals = np.zeros(grid.n_x, dtype=complex)
        for i, zi in enumerate(zetas):
            for j, zj in enumerate(zetas):
                vals += kernels[i][j] * zi * np.conj(zj)
        omega[it] = vals.real / np.sqrt(np.pi)
    return TomogramGrid(grid, np.clip(omega, 0.0, None))


def _two_mode_cat_terms(spec):
    """Coefficients and per-mode labels of the beam-split l=2 cat |Phi>_h."""
    if spec.l != 2:
        raise ValueError("two-mode decoherence solutions cover the l=2 cat only")
    n_h = cat_normalization(2, spec.h, abs(spec.alpha) ** 2)
    beta = complex(spec.alpha) / np.sqrt(2.0)
    return [(n_h * (-1.0) ** (r * spec.h), beta * (-1.0) ** r) for r in range(2)]


def two_mode_amp_decay(spec, p, policy=TruncationPolicy(), cutoff=None):
    """Four-index density of the decaying beam-split l=2 cat."""
    if p.model is not Channel.AMPLITUDE_DECAY:
        raise ValueError("params must describe amplitude decay")
    from .beamsplitter import TwoModeState

    terms = _two_mode_cat_terms(spec)
    shrink = np.exp(-p.scaled_time)
    if cutoff is None:
        cutoff = required_cutoff(max(abs(lab) for _, lab in terms) ** 2, policy)
    dim = cutoff + 1
    rho = np.zeros((dim, dim, dim, dim), dtype=complex)
    vecs = [coherent_amps_at(lab * shrink, cutoff) for _, lab in terms]
    for i, (ci, li) in enumerate(terms):
        for j, (cj, lj) in enumerate(terms):
            k = _decay_kernel([li, li], [lj, lj], p.scaled_time)
            u = np.outer(vecs[i], vecs[i])
            w = np.outer(vecs[j], vecs[j])
            rho += (ci * np.conj(cj) * k) * np.einsum("ab,cd->abcd", u, np.conj(w))
    return TwoModeState(cutoff, cutoff, rho=rho)


def two_mode_phase_damp(spec, p, policy=TruncationPolicy(), cutoff=None):
    """Both modes dephased at the same rate; two-mode diagonal preserved."""
    if p.model is not Channel.PHASE_DAMPING:
        raise ValueError("params must describe phase damping")
    from .beamsplitter import TwoModeState

    terms = _two_mode_cat_terms(spec)
    if cutoff is None:
        cutoff = required_cutoff(max(abs(lab) for _, lab in terms) ** 2, policy)
    dim = cutoff + 1
    rho = np.zeros((dim, dim, dim, dim), dtype=complex)
    vecs = [coherent_amps_at(lab, cutoff) for _, lab in terms]
    for i, (ci, _) in enumerate(terms):
        for j, (cj, _) in enumerate(terms):
            u = np.outer(vecs[i], vecs[i])
            w = np.outer(vecs[j], vecs[j])
            rho += (ci * np.conj(cj)) * np.einsum("ab,cd->abcd", u, np.conj(w))
    n = np.arange(dim, dtype=float)
    d1 = (n[:, None, None, None] - n[None, None, :, None]) ** 2
    d2 = (n[None, :, None, None] - n[None, None, None, :]) ** 2
    rho *= np.exp(-p.scaled_time * (d1 + d2))
    return TwoModeState(cutoff, cutoff, rho=rho)

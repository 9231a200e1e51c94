"""State constructors: coherent superpositions, order-l cat states, densities."""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import DegenerateCat
from .fock import FockVector, TruncationPolicy, required_cutoff

# Chapter-2 figures fix the coherent phase at pi/4; the conditional
# measurement scenarios use 0.2 instead.
DEFAULT_DELTA = np.pi / 4
CONDITIONAL_DELTA = 0.2


@dataclass(frozen=True)
class CatSpec:
    """Order-l superposition of coherent states on a circle; h indexes parity."""

    l: int
    h: int
    alpha: complex

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("l must be >= 1")
        if not 0 <= self.h < self.l:
            raise ValueError("h must lie in [0, l)")


@dataclass(frozen=True)
class CoherentSuperposition:
    """Finite superposition sum_i coeff_i |label_i> kept in symbolic form."""

    terms: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(
            self, "terms", tuple((complex(c), complex(lab)) for c, lab in self.terms)
        )

    def norm_sq(self):
        """<psi|psi> via pairwise coherent overlaps."""
        total = 0.0 + 0.0j
        for ci, li in self.terms:
            for cj, lj in self.terms:
                total += np.conj(cj) * ci * coherent_overlap(lj, li)
        return float(total.real)

    def max_label(self):
        return max((abs(lab) for _, lab in self.terms), default=0.0)


def coherent_overlap(beta, gamma):
    """<beta|gamma> = exp(-|beta|^2/2 - |gamma|^2/2 + conj(beta) gamma)."""
    beta, gamma = complex(beta), complex(gamma)
    return np.exp(-0.5 * abs(beta) ** 2 - 0.5 * abs(gamma) ** 2 + np.conj(beta) * gamma)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace matrix over the truncated Fock basis."""

    dim: int
    elems: np.ndarray = field(repr=False)

    def __post_init__(self):
        elems = np.asarray(self.elems, dtype=complex)
        if elems.shape != (self.dim, self.dim):
            raise ValueError("elems must be dim x dim")
        object.__setattr__(self, "elems", elems)

    def trace(self):
        return complex(np.trace(self.elems))

    def purity(self):
        return float(np.sum(np.abs(self.elems) ** 2))


def cat_normalization(l, h, abs_alpha_sq):
    """Normalization constant N_{l,h} of the order-l cat.

    Raises DegenerateCat when the component states cancel (only at
    |alpha|^2 = 0 with h > 0).
    """
    if l < 1 or not 0 <= h < l:
        raise ValueError("need l >= 1 and 0 <= h < l")
    m = np.arange(l)
    s = np.sum(np.exp(-2j * np.pi * m * h / l) * np.exp(-abs_alpha_sq * (1.0 - np.exp(2j * np.pi * m / l))))
    s = float(s.real)
    if s <= 1e-12:
        raise DegenerateCat("component coherent states cancel for l=%d, h=%d" % (l, h))
    return 1.0 / np.sqrt(l * s)


def cat_superposition_form(spec):
    """The l-term coherent-superposition form of |psi_{l,h}>."""
    n_lh = cat_normalization(spec.l, spec.h, abs(spec.alpha) ** 2)
    r = np.arange(spec.l)
    coeffs = n_lh * np.exp(-2j * np.pi * r * spec.h / spec.l)
    labels = spec.alpha * np.exp(2j * np.pi * r / spec.l)
    return CoherentSuperposition(tuple(zip(coeffs, labels)))


def make_cat(spec, policy=TruncationPolicy()):
    """Fock form of |psi_{l,h}>: support on the progression n = h, h+l, h+2l, ...

    Uses the analytic amplitudes c_n = l N_{l,h} e^{-|a|^2/2} a^n / sqrt(n!)
    directly; no renormalization after truncation.
    """
    alpha = complex(spec.alpha)
    n_lh = cat_normalization(spec.l, spec.h, abs(alpha) ** 2)
    cutoff = required_cutoff(abs(alpha) ** 2, policy)
    amps = np.zeros(cutoff + 1, dtype=complex)
    n = np.arange(spec.h, cutoff + 1, spec.l)
    if alpha == 0:
        if spec.h == 0:
            amps[0] = spec.l * n_lh
        return FockVector(cutoff, amps)
    logmag = -0.5 * abs(alpha) ** 2 + n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1.0)
    amps[n] = spec.l * n_lh * np.exp(logmag + 1j * n * np.angle(alpha))
    return FockVector(cutoff, amps)


def superposition_to_fock(s, policy=TruncationPolicy(), cutoff=None):
    """Expand a CoherentSuperposition in the truncated Fock basis."""
    from .fock import coherent_amps_at

    if cutoff is None:
        cutoff = required_cutoff(s.max_label() ** 2, policy)
    amps = np.zeros(cutoff + 1, dtype=complex)
    for coeff, label in s.terms:
        amps += coeff * coherent_amps_at(label, cutoff)
    return FockVector(cutoff, amps)


def density_from_pure(v):
    """Rank-1 density |v><v|."""
    return DensityMatrix(v.cutoff + 1, np.outer(v.amps, np.conj(v.amps)))

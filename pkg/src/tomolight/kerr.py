"""Kerr-medium evolution, fractional-revival decompositions and moments."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import CutoffMismatch
from .fock import FockVector
from .states import CoherentSuperposition, cat_normalization, cat_superposition_form


@dataclass(frozen=True)
class KerrParams:
    """Nonlinearity chi and elapsed time t; revival period is pi/chi."""

    chi: float = 1.0
    t: float = 0.0

    def __post_init__(self):
        if self.chi <= 0:
            raise ValueError("chi must be positive")
        if self.t < 0:
            raise ValueError("t must be nonnegative")

    @property
    def t_rev(self):
        return np.pi / self.chi


@dataclass(frozen=True)
class FractionalRevivalSpec:
    """Reduced fraction j/k labelling the revival time t = j T_rev / k.

    Non-coprime inputs are reduced silently; `reduced` records that it
    happened.
    """

    j: int
    k: int
    reduced: bool = False

    def __post_init__(self):
        if self.j < 1 or self.k < 1:
            raise ValueError("j and k must be positive")
        g = math.gcd(self.j, self.k)
        if g > 1:
            object.__setattr__(self, "j", self.j // g)
            object.__setattr__(self, "k", self.k // g)
            object.__setattr__(self, "reduced", True)


def evolve_kerr(v, params):
    """Phases c_n -> c_n exp(-i chi t n(n-1)); norm preserved exactly."""
    n = np.arange(v.cutoff + 1, dtype=float)
    return FockVector(v.cutoff, v.amps * np.exp(-1j * params.chi * params.t * n * (n - 1.0)))


def fractional_revival_coeffs(k):
    """Fourier coefficients of the k-subpacket decomposition at t = T_rev/k.

    Odd k uses f_s, even k uses g_s; all moduli are 1/sqrt(k).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    s = np.arange(k)
    if k % 2 == 1:
        coeffs = np.exp(1j * np.pi * s * (s + 1) / k) * np.exp(-1j * np.pi * (k * k - 1) / (4.0 * k))
    else:
        coeffs = np.exp(1j * np.pi * s * s / k) * np.exp(-1j * np.pi / 4)
    return list(coeffs / np.sqrt(k))


def _revival_labels(alpha, k):
    s = np.arange(k)
    labels = complex(alpha) * np.exp(-2j * np.pi * s / k)
    if k % 2 == 0:
        labels = labels * np.exp(1j * np.pi / k)
    return labels


def fractional_revival_state(alpha, k):
    """Coherent-superposition form of the evolved coherent state at t = T_rev/k."""
    coeffs = fractional_revival_coeffs(k)
    labels = _revival_labels(alpha, k)
    return CoherentSuperposition(tuple(zip(coeffs, labels)))


def cat_fractional_revival_state(spec, k):
    """l*k-term decomposition of the evolved order-l cat at t = T_rev/k."""
    cat = cat_superposition_form(spec)
    coeffs = fractional_revival_coeffs(k)
    terms = []
    for c_cat, label in cat.terms:
        for f_s, rotated in zip(coeffs, _revival_labels(label, k)):
            terms.append((f_s * c_cat, rotated))
    return CoherentSuperposition(tuple(terms))


def autocorrelation(v0, vt):
    """|<v0|vt>|^2; requires matching cutoffs."""
    if v0.cutoff != vt.cutoff:
        raise CutoffMismatch("cutoffs differ: %d vs %d" % (v0.cutoff, vt.cutoff))
    return float(abs(np.vdot(v0.amps, vt.amps)) ** 2)


def moment_a_power(v, m):
    """<a^m> = sum_n conj(c_n) c_{n+m} sqrt((n+m)!/n!) over the truncation."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > v.cutoff:
        return 0j
    n = np.arange(v.cutoff + 1 - m, dtype=float)
    weights = np.exp(0.5 * (gammaln(n + m + 1.0) - gammaln(n + 1.0)))
    return complex(np.sum(np.conj(v.amps[: v.cutoff + 1 - m]) * v.amps[m:] * weights))


def moment_x_power(v, m):
    """<x^m> by repeated application of the tridiagonal position matrix.

    The working space is padded by m above the state's cutoff so the
    ladder never pushes amplitude off the edge.
    """
    if not 1 <= m <= 12:
        raise ValueError("m must lie in [1, 12]")
    dim = v.cutoff + 1 + m
    off = np.sqrt(np.arange(1, dim) / 2.0)
    vec = np.zeros(dim, dtype=complex)
    vec[: v.cutoff + 1] = v.amps
    cur = vec
    for _ in range(m):
        nxt = np.zeros_like(cur)
        nxt[:-1] += off * cur[1:]
        nxt[1:] += off * cur[:-1]
        cur = nxt
    val = complex(np.vdot(vec, cur))
    if abs(val.imag) > 1e-9:
        raise ArithmeticError("moment not real: %r" % val)
    return float(val.real)


def rotated_cat_at_revival(spec, j):
    """CatSpec of the revived (rotated) cat at t = j T_rev / l^2.

    The evolved |psi_{l,h}> equals, up to a global phase, the same cat
    with alpha rotated by -pi j (l + 2h - 1) / l^2.
    """
    from .states import CatSpec

    angle = -np.pi * j * (spec.l + 2 * spec.h - 1) / (spec.l ** 2)
    return CatSpec(spec.l, spec.h, spec.alpha * np.exp(1j * angle))

"""50/50 beam splitter, reduced states and entanglement diagnostics."""

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .errors import NonPositiveDensity, ZeroProbabilitySlice
from .fock import FockVector, coherent_amps, hermite_psi_table
from .kerr import KerrParams, evolve_kerr
from .states import DensityMatrix

EIG_CLIP = 1e-14


@dataclass(frozen=True)
class TwoModeState:
    """Two-mode truncated state: pure amplitudes c_{mn} or a 4-index density."""

    n1: int
    n2: int
    amps: np.ndarray = field(default=None, repr=False)
    rho: np.ndarray = field(default=None, repr=False)

    def __post_init__(self):
        if (self.amps is None) == (self.rho is None):
            raise ValueError("exactly one of amps/rho must be given")
        d1, d2 = self.n1 + 1, self.n2 + 1
        if self.amps is not None:
            a = np.asarray(self.amps, dtype=complex)
            if a.shape != (d1, d2):
                raise ValueError("amps must be (n1+1, n2+1)")
            object.__setattr__(self, "amps", a)
        else:
            r = np.asarray(self.rho, dtype=complex)
            if r.shape != (d1, d2, d1, d2):
                raise ValueError("rho must be (n1+1, n2+1, n1+1, n2+1)")
            object.__setattr__(self, "rho", r)

    @property
    def is_pure(self):
        return self.amps is not None

    def trace(self):
        if self.is_pure:
            return float(np.sum(np.abs(self.amps) ** 2))
        return float(np.einsum("abab->", self.rho).real)


@dataclass(frozen=True)
class EntanglementResult:
    """Entanglement value in ebits plus the eigenvalue spectrum used."""

    value: float
    spectrum: np.ndarray = field(repr=False)


def bs_transform(v):
    """Send |psi>|0> through the 50/50 beam splitter.

    Output amplitudes c_{p, n-p} = c_n 2^{-n/2} sqrt(C(n, p)).
    """
    dim = v.cutoff + 1
    p = np.arange(dim)[:, None]
    q = np.arange(dim)[None, :]
    n = p + q
    amps = np.zeros((dim, dim), dtype=complex)
    valid = n <= v.cutoff
    logbin = 0.5 * (gammaln(n + 1.0) - gammaln(p + 1.0) - gammaln(q + 1.0))
    weights = np.exp(logbin - 0.5 * n * np.log(2.0))
    amps[valid] = v.amps[n[valid]] * weights[valid]
    return TwoModeState(v.cutoff, v.cutoff, amps=amps)


def reduced_density(s, mode="c"):
    """Partial trace over the other mode; 'c' is the first output port."""
    if mode not in ("c", "d"):
        raise ValueError("mode must be 'c' or 'd'")
    if s.is_pure:
        if mode == "c":
            mat = s.amps @ np.conj(s.amps.T)
        else:
            mat = s.amps.T @ np.conj(s.amps)
    else:
        mat = np.einsum("abcb->ac", s.rho) if mode == "c" else np.einsum("abad->bd", s.rho)
    return DensityMatrix(mat.shape[0], mat)


def von_neumann_entropy(rho):
    """E = -sum lambda log2 lambda over eigenvalues above the clip threshold."""
    evals = np.linalg.eigvalsh(rho.elems)
    if evals.min() < -1e-6:
        raise NonPositiveDensity("eigenvalue %g below tolerance" % evals.min())
    kept = evals[evals > EIG_CLIP]
    value = float(-np.sum(kept * np.log2(kept)))
    return EntanglementResult(value, evals)


def log_negativity(s):
    """E_N = log2 of the trace norm of the mode-1 partial transpose."""
    if s.is_pure:
        flat = s.amps.reshape(-1)
        rho4 = np.outer(flat, np.conj(flat)).reshape(
            s.n1 + 1, s.n2 + 1, s.n1 + 1, s.n2 + 1
        )
    else:
        rho4 = s.rho
    # partial transpose on mode 1: [rho]^{T1}_{m1 m2; n1 n2} = [rho]_{n1 m2; m1 n2}
    pt = np.transpose(rho4, (2, 1, 0, 3))
    d = (s.n1 + 1) * (s.n2 + 1)
    evals = np.linalg.eigvalsh(pt.reshape(d, d))
    return EntanglementResult(float(np.log2(np.sum(np.abs(evals)))), evals)


def mandel_q(v):
    """(<n^2> - <n>^2)/<n> - 1, with 0/0 := 0 for the vacuum."""
    p = np.abs(v.amps) ** 2
    n = np.arange(v.cutoff + 1)
    mean = float(np.sum(p * n))
    if mean == 0.0:
        return 0.0
    var = float(np.sum(p * n * n)) - mean * mean
    return var / mean - 1.0


def conditional_project(s, x2, theta2):
    """Mode-1 state after measuring quadrature X_{theta2} = x2 on mode 2."""
    if not s.is_pure:
        raise ValueError("conditional projection requires a pure two-mode state")
    psi2 = hermite_psi_table(s.n2, np.array([x2]))[:, 0]
    phases = np.exp(-1j * theta2 * np.arange(s.n2 + 1))
    b = s.amps @ (psi2 * phases)
    norm = np.linalg.norm(b)
    if norm ** 2 <= 1e-12:
        raise ZeroProbabilitySlice("conditional norm %g at (x2=%g, theta2=%g)" % (norm, x2, theta2))
    return FockVector(s.n1, b / norm)


def fidelity(a, b):
    """|<a|b>|^2 between normalized vectors."""
    return float(abs(a.inner(b)) ** 2)


def entanglement_timeseries(alpha, chi, times, cutoff=None):
    """E(t) of one output port for a Kerr-evolved coherent input."""
    if cutoff is None:
        v0 = coherent_amps(alpha)
    else:
        from .fock import coherent_amps_at

        v0 = FockVector(cutoff, coherent_amps_at(alpha, cutoff))
    out = np.empty(len(times))
    for i, t in enumerate(times):
        vt = evolve_kerr(v0, KerrParams(chi, t))
        rho = reduced_density(bs_transform(vt), "c")
        out[i] = von_neumann_entropy(rho).value
    return out

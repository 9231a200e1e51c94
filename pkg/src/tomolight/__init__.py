"""Truncated Fock-space simulation of nonclassical light.

Optical tomograms, Kerr-medium revivals, phase-space functions,
decoherence channels and beam-splitter entanglement diagnostics.
"""

__version__ = "0.1.0"

from .errors import (
    CutoffMismatch,
    CutoffOverflow,
    DegenerateCat,
    NegativeTomogram,
    NonNormalizedDensity,
    NonPositiveDensity,
    TomolightError,
    ZeroProbabilitySlice,
)
from .fock import (
    FockVector,
    TruncationPolicy,
    coherent_amps,
    hermite_psi,
    hermite_psi_table,
    quad_overlap_coherent,
    quad_overlap_fock,
)
from .states import (
    CatSpec,
    CoherentSuperposition,
    DensityMatrix,
    cat_normalization,
    cat_superposition_form,
    density_from_pure,
    make_cat,
    superposition_to_fock,
)
from .kerr import (
    FractionalRevivalSpec,
    KerrParams,
    autocorrelation,
    cat_fractional_revival_state,
    evolve_kerr,
    fractional_revival_coeffs,
    fractional_revival_state,
    moment_a_power,
    moment_x_power,
    rotated_cat_at_revival,
)
from .tomography import (
    QuadratureGrid,
    TomogramGrid,
    TwoModeTomogramGrid,
    conditional_tomogram,
    count_strands,
    default_grid,
    tomogram_coherent_closed,
    tomogram_density,
    tomogram_pure,
    tomogram_superposition_closed,
    tomogram_two_mode,
    two_mode_tomogram_slice,
)
from .phase_space import (
    PhasePlaneGrid,
    default_phase_grid,
    husimi_q,
    n_max_distinguishable,
    wigner_superposition,
)
from .entropy import (
    RenyiOrderPair,
    SHANNON_LIMIT,
    momentum_density,
    position_density,
    renyi_bound,
    renyi_entropy,
    renyi_sum_timeseries,
)
from .decoherence import (
    Channel,
    DecoherenceParams,
    amp_decay_long_time,
    amp_decay_superposition,
    amp_decay_tomogram,
    phase_damp_density,
    phase_damp_long_time,
    two_mode_amp_decay,
    two_mode_phase_damp,
)
from .beamsplitter import (
    EntanglementResult,
    TwoModeState,
    bs_transform,
    conditional_project,
    entanglement_timeseries,
    fidelity,
    log_negativity,
    mandel_q,
    reduced_density,
    von_neumann_entropy,
)

"""Optical tomograms: oracle equivalence, properties and two-mode slices."""

import numpy as np
import pytest

from tomolight import (
    CatSpec,
    Channel,
    DecoherenceParams,
    DensityMatrix,
    NegativeTomogram,
    QuadratureGrid,
    ZeroProbabilitySlice,
    bs_transform,
    cat_superposition_form,
    coherent_amps,
    conditional_tomogram,
    count_strands,
    default_grid,
    density_from_pure,
    evolve_kerr,
    fractional_revival_state,
    make_cat,
    tomogram_coherent_closed,
    tomogram_density,
    tomogram_pure,
    tomogram_superposition_closed,
    tomogram_two_mode,
    two_mode_tomogram_slice,
)
from tomolight.beamsplitter import TwoModeState, conditional_project
from tomolight.decoherence import phase_damp_density
from tomolight.kerr import KerrParams
from tomolight.states import DEFAULT_DELTA
from tomolight.tomography import eta_factor

from oracle_utils import psi_ref

ALPHA20 = np.sqrt(20.0) * np.exp(1j * DEFAULT_DELTA)


def small_grid(n_theta=41, n_x=301):
    return QuadratureGrid(np.linspace(0.0, 2 * np.pi, n_theta), np.linspace(-12.0, 12.0, n_x))


def test_grid_validation():
    with pytest.raises(ValueError):
        QuadratureGrid(np.array([-0.1, 0.2]), np.linspace(-1, 1, 5))
    with pytest.raises(ValueError):
        QuadratureGrid(np.array([0.0, 7.0]), np.linspace(-1, 1, 5))
    with pytest.raises(ValueError):
        QuadratureGrid(np.array([0.0, 1.0]), np.linspace(-1, 1, 4))
    with pytest.raises(ValueError):
        QuadratureGrid(np.array([0.0, 1.0]), np.array([-1.0, 0.0, 2.0]))


def test_vacuum_tomogram():
    grid = small_grid()
    tg = tomogram_pure(coherent_amps(0.0), grid)
    expected = np.exp(-grid.x_values ** 2) / np.sqrt(np.pi)
    np.testing.assert_allclose(tg.omega, np.broadcast_to(expected, tg.omega.shape), atol=1e-14)


def test_coherent_closed_form_matches_fock_sum():
    grid = small_grid()
    closed = tomogram_coherent_closed(ALPHA20, grid)
    fock = tomogram_pure(coherent_amps(ALPHA20), grid)
    np.testing.assert_allclose(fock.omega, closed.omega, atol=1e-8)


def test_cat_closed_form_matches_fock_sum():
    grid = small_grid()
    for l, h in [(2, 0), (3, 1)]:
        spec = CatSpec(l, h, ALPHA20)
        closed = tomogram_superposition_closed(cat_superposition_form(spec), grid)
        fock = tomogram_pure(make_cat(spec), grid)
        np.testing.assert_allclose(fock.omega, closed.omega, atol=1e-8)


def test_revival_closed_form_matches_fock_sum():
    grid = small_grid()
    v = evolve_kerr(coherent_amps(ALPHA20), KerrParams(1.0, np.pi / 2))
    closed = tomogram_superposition_closed(fractional_revival_state(ALPHA20, 2), grid)
    np.testing.assert_allclose(tomogram_pure(v, grid).omega, closed.omega, atol=1e-8)


def test_single_term_superposition_equals_coherent_closed():
    from tomolight.states import CoherentSuperposition

    grid = small_grid(11, 101)
    s = CoherentSuperposition(((1.0, ALPHA20),))
    np.testing.assert_allclose(
        tomogram_superposition_closed(s, grid).omega,
        tomogram_coherent_closed(ALPHA20, grid).omega,
        atol=1e-12,
    )


def test_row_normalization_default_grid():
    tg = tomogram_pure(make_cat(CatSpec(2, 0, ALPHA20)), default_grid())
    norms = np.trapezoid(tg.omega, tg.grid.x_values, axis=1)
    np.testing.assert_allclose(norms, 1.0, atol=1e-6)


def test_row_accessor():
    grid = small_grid(21, 101)
    tg = tomogram_pure(coherent_amps(1.0), grid)
    np.testing.assert_array_equal(tg.row(grid.theta_values[7]), tg.omega[7])


def test_reflection_symmetry():
    # theta grid with step pi/20 pairs row i with row i+20
    grid = small_grid(41, 301)
    tg = tomogram_pure(make_cat(CatSpec(3, 0, ALPHA20)), grid)
    for i in range(20):
        np.testing.assert_allclose(tg.omega[i + 20], tg.omega[i][::-1], atol=1e-9)


def test_nonnegativity_before_clipping():
    grid = small_grid(21, 301)
    amp = tomogram_pure(make_cat(CatSpec(2, 1, ALPHA20)), grid)
    assert amp.omega.min() >= -1e-10


def test_density_route_matches_pure_route():
    grid = small_grid(21, 301)
    v = make_cat(CatSpec(2, 0, ALPHA20))
    pure = tomogram_pure(v, grid)
    mixed = tomogram_density(density_from_pure(v), grid)
    np.testing.assert_allclose(mixed.omega, pure.omega, atol=1e-9)


def test_dephased_coherent_is_theta_independent():
    grid = small_grid(21, 201)
    rho = density_from_pure(coherent_amps(np.sqrt(5.0)))
    dephased = DensityMatrix(rho.dim, np.diag(np.diag(rho.elems)))
    tg = tomogram_density(dephased, grid)
    np.testing.assert_allclose(tg.omega, np.broadcast_to(tg.omega[0], tg.omega.shape), atol=1e-12)


def test_negative_tomogram_guards():
    grid = small_grid(5, 101)
    bad = DensityMatrix(2, np.diag([1.0, -0.5]))
    with pytest.raises(NegativeTomogram):
        tomogram_density(bad, grid)
    non_hermitian = DensityMatrix(2, np.array([[1.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NegativeTomogram):
        tomogram_density(non_hermitian, grid)


def test_phase_damped_cat_against_direct_double_sum():
    spec = CatSpec(2, 0, np.sqrt(10.0) * np.exp(1j * DEFAULT_DELTA))
    v = make_cat(spec)
    kt = 0.3
    rho = phase_damp_density(density_from_pure(v), DecoherenceParams(Channel.PHASE_DAMPING, kt))
    x = np.linspace(-8.0, 8.0, 101)
    thetas = np.array([0.3, DEFAULT_DELTA])
    grid = QuadratureGrid(thetas, x)
    got = tomogram_density(rho, grid).omega
    psi = np.array([psi_ref(n, x) for n in range(v.cutoff + 1)])
    for it, theta in enumerate(thetas):
        expected = np.zeros_like(x)
        for m in range(v.cutoff + 1):
            for n in range(v.cutoff + 1):
                c = v.amps[m] * np.conj(v.amps[n]) * np.exp(-kt * (m - n) ** 2)
                expected += (c * np.exp(-1j * (m - n) * theta)).real * psi[m] * psi[n]
        np.testing.assert_allclose(got[it], expected, atol=1e-8)


def test_strand_count_even_cat():
    tg = tomogram_pure(make_cat(CatSpec(2, 0, ALPHA20)), default_grid())
    assert count_strands(tg.row(DEFAULT_DELTA)) == 2


def test_count_strands_synthetic():
    row = np.array([0.0, 1.0, 0.0, 2.0, 0.0])
    assert count_strands(row, threshold=0.5) == 2
    assert count_strands(row, threshold=1.5) == 1


def test_two_mode_product_factorizes():
    from tomolight import FockVector
    from tomolight.fock import coherent_amps_at

    cutoff = 24
    va = FockVector(cutoff, coherent_amps_at(1.2 * np.exp(0.5j), cutoff))
    vb = FockVector(cutoff, coherent_amps_at(0.8j, cutoff))
    state = TwoModeState(cutoff, cutoff, amps=np.outer(va.amps, vb.amps))
    x = np.linspace(-6.0, 6.0, 81)
    omega = two_mode_tomogram_slice(state, 0.4, 1.1, x, x)
    grid = QuadratureGrid(np.array([0.4, 1.1]), x)
    ta = tomogram_pure(va, grid).omega[0]
    tb = tomogram_pure(vb, grid).omega[1]
    np.testing.assert_allclose(omega, np.outer(ta, tb), atol=1e-10)


def test_two_mode_vacuum():
    amps = np.zeros((5, 5))
    amps[0, 0] = 1.0
    state = TwoModeState(4, 4, amps=amps)
    x = np.linspace(-4.0, 4.0, 41)
    omega = two_mode_tomogram_slice(state, 0.0, 0.7, x, x)
    expected = np.exp(-np.add.outer(x ** 2, x ** 2)) / np.pi
    np.testing.assert_allclose(omega, expected, atol=1e-12)


def test_two_mode_density_route_matches_pure():
    v = make_cat(CatSpec(2, 0, np.sqrt(2.0)))
    state = bs_transform(v)
    flat = state.amps.reshape(-1)
    rho4 = np.outer(flat, np.conj(flat)).reshape(
        state.n1 + 1, state.n2 + 1, state.n1 + 1, state.n2 + 1
    )
    mixed = TwoModeState(state.n1, state.n2, rho=rho4)
    x = np.linspace(-5.0, 5.0, 41)
    np.testing.assert_allclose(
        two_mode_tomogram_slice(mixed, 0.2, 0.9, x, x),
        two_mode_tomogram_slice(state, 0.2, 0.9, x, x),
        atol=1e-10,
    )


def test_beam_split_cat_slice_closed_form():
    # |Phi>_0 = N(|b,b> + |-b,-b>); amplitude is a 2-term eta product sum
    from tomolight.states import cat_normalization

    alpha = np.sqrt(10.0) * np.exp(0.2j)
    state = bs_transform(make_cat(CatSpec(2, 0, alpha)))
    beta = alpha / np.sqrt(2.0)
    n0 = cat_normalization(2, 0, abs(alpha) ** 2)
    x = np.linspace(-8.0, 8.0, 81)
    theta1, theta2 = 0.5, 1.3
    amp = np.zeros((x.size, x.size), dtype=complex)
    for r in range(2):
        b = beta * (-1.0) ** r
        amp += n0 * np.outer(eta_factor(x, theta1, b), eta_factor(x, theta2, b))
    expected = np.abs(amp) ** 2 / np.pi
    got = two_mode_tomogram_slice(state, theta1, theta2, x, x)
    np.testing.assert_allclose(got, expected, atol=1e-8)


def test_two_mode_full_grid_and_cap():
    v = coherent_amps(1.0)
    state = bs_transform(v)
    g = QuadratureGrid(np.linspace(0, 2 * np.pi, 3), np.linspace(-4, 4, 21))
    tg = tomogram_two_mode(state, (g, g))
    assert tg.omega.shape == (3, 3, 21, 21)
    np.testing.assert_allclose(
        tg.omega[1, 2],
        two_mode_tomogram_slice(state, g.theta_values[1], g.theta_values[2], g.x_values, g.x_values),
        atol=1e-14,
    )
    big = default_grid()
    with pytest.raises(ValueError):
        tomogram_two_mode(state, (big, big))


def test_conditional_tomogram_matches_projection():
    state = bs_transform(make_cat(CatSpec(2, 0, np.sqrt(10.0) * np.exp(0.2j))))
    grid = small_grid(11, 101)
    tg = conditional_tomogram(state, 2.0, 0.2 - np.pi / 2, grid)
    projected = conditional_project(state, 2.0, 0.2 - np.pi / 2)
    np.testing.assert_allclose(tg.omega, tomogram_pure(projected, grid).omega, atol=1e-14)


def test_conditional_zero_probability_slice():
    state = bs_transform(make_cat(CatSpec(2, 0, np.sqrt(10.0) * np.exp(0.2j))))
    with pytest.raises(ZeroProbabilitySlice):
        conditional_project(state, 11.9, 0.2)

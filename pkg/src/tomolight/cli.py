"""Command-line interface: every computation as a reproducible CSV run.

Exit codes: 0 success, 2 bad configuration, 3 numeric failure.
"""

import argparse
import os
import sys

import numpy as np

from . import __version__
from .beamsplitter import bs_transform, conditional_project, entanglement_timeseries, log_negativity
from .decoherence import (
    Channel,
    DecoherenceParams,
    two_mode_amp_decay,
    two_mode_phase_damp,
)
from .entropy import renyi_sum_timeseries
from .errors import TomolightError
from .fock import TruncationPolicy, coherent_amps
from .kerr import (
    KerrParams,
    cat_fractional_revival_state,
    evolve_kerr,
    moment_a_power,
    moment_x_power,
)
from .phase_space import PhasePlaneGrid, husimi_q, wigner_superposition
from .states import CatSpec, cat_superposition_form, make_cat
from .tomography import (
    QuadratureGrid,
    tomogram_pure,
    two_mode_tomogram_slice,
)
from . import io


def _apply_thread_cap():
    cap = os.environ.get("TOMOLIGHT_THREADS")
    if not cap:
        return
    try:
        limit = max(1, int(cap))
    except ValueError:
        raise ValueError("TOMOLIGHT_THREADS must be an integer")
    try:
        import threadpoolctl

        threadpoolctl.threadpool_limits(limits=limit)
    except ImportError:
        # fall back to the env vars BLAS backends consult
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ[var] = str(limit)


def _add_state_args(p, delta_default=np.pi / 4):
    p.add_argument("--l", type=int, default=1, help="number of cat components")
    p.add_argument("--h", type=int, default=0, help="parity index, 0 <= h < l")
    p.add_argument("--nbar", type=float, required=True, help="|alpha|^2")
    p.add_argument("--delta", type=float, default=delta_default, help="phase of alpha")
    p.add_argument("--epsilon", type=float, default=1e-12, help="truncation tail bound")


def _add_grid_args(p, ntheta=201, nx=1201, xmax=12.0):
    p.add_argument("--ntheta", type=int, default=ntheta)
    p.add_argument("--nx", type=int, default=nx)
    p.add_argument("--xmax", type=float, default=xmax)


def _alpha(args):
    return np.sqrt(args.nbar) * np.exp(1j * args.delta)


def _policy(args):
    return TruncationPolicy(epsilon=args.epsilon)


def _quad_grid(args):
    return QuadratureGrid(
        np.linspace(0.0, 2 * np.pi, args.ntheta),
        np.linspace(-args.xmax, args.xmax, args.nx),
    )


def _phase_grid(args):
    axis = np.linspace(-args.half_width, args.half_width, args.npoints)
    return PhasePlaneGrid(axis, axis.copy())


def _state(args):
    return make_cat(CatSpec(args.l, args.h, _alpha(args)), _policy(args))


def _config_dict(args):
    cfg = {k: v for k, v in vars(args).items() if k != "func"}
    cfg["version"] = __version__
    return cfg


def _cmd_tomogram(args):
    v = _state(args)
    if args.t_over_trev:
        v = evolve_kerr(v, KerrParams(args.chi, args.t_over_trev * np.pi / args.chi))
    tg = tomogram_pure(v, _quad_grid(args))
    rows = (
        (theta, x, tg.omega[i, j])
        for i, theta in enumerate(tg.grid.theta_values)
        for j, x in enumerate(tg.grid.x_values)
    )
    io.write_csv(args.out, ["theta", "x", "omega"], rows)


def _cmd_tomogram2(args):
    state = bs_transform(_state(args))
    x = np.linspace(-args.xmax, args.xmax, args.nx)
    omega = two_mode_tomogram_slice(state, args.theta1, args.theta2, x, x)
    rows = (
        (args.theta1, x1, args.theta2, x2, omega[i, j])
        for i, x1 in enumerate(x)
        for j, x2 in enumerate(x)
    )
    io.write_csv(args.out, ["theta1", "x1", "theta2", "x2", "omega"], rows)


def _cmd_wigner(args):
    spec = CatSpec(args.l, args.h, _alpha(args))
    if args.k > 1:
        s = cat_fractional_revival_state(spec, args.k)
    else:
        s = cat_superposition_form(spec)
    grid = _phase_grid(args)
    w = wigner_superposition(s, grid)
    rows = (
        (xv, pv, w[i, j])
        for i, xv in enumerate(grid.x_values)
        for j, pv in enumerate(grid.p_values)
    )
    io.write_csv(args.out, ["x", "p", "value"], rows)


def _cmd_husimi(args):
    v = _state(args)
    if args.t_over_trev:
        v = evolve_kerr(v, KerrParams(args.chi, args.t_over_trev * np.pi / args.chi))
    grid = _phase_grid(args)
    q = husimi_q(v, grid)
    rows = (
        (xv, pv, q[i, j])
        for i, xv in enumerate(grid.x_values)
        for j, pv in enumerate(grid.p_values)
    )
    io.write_csv(args.out, ["x", "p", "value"], rows)


def _cmd_evolve_moments(args):
    v = _state(args)
    fractions = np.linspace(0.0, 1.0, args.samples)
    if args.op == "x":
        rows = []
        for f in fractions:
            vt = evolve_kerr(v, KerrParams(args.chi, f * np.pi / args.chi))
            rows.append((f, moment_x_power(vt, args.m)))
        io.write_csv(args.out, ["t_over_Trev", "value"], rows)
    else:
        rows = []
        for f in fractions:
            vt = evolve_kerr(v, KerrParams(args.chi, f * np.pi / args.chi))
            val = moment_a_power(vt, args.m)
            rows.append((f, val.real, val.imag))
        io.write_csv(args.out, ["t_over_Trev", "value_re", "value_im"], rows)


def _cmd_renyi(args):
    v = coherent_amps(_alpha(args), _policy(args))
    fractions = np.linspace(0.0, 1.0, args.samples)
    values = renyi_sum_timeseries(v, args.chi, fractions * np.pi / args.chi)
    io.write_csv(args.out, ["t_over_Trev", "value"], zip(fractions, values))


def _cmd_entangle(args):
    fractions = np.linspace(0.0, 1.0, args.samples)
    values = entanglement_timeseries(
        _alpha(args), args.chi, fractions * np.pi / args.chi, cutoff=args.cutoff
    )
    io.write_csv(args.out, ["t_over_Trev", "E"], zip(fractions, values))


def _cmd_decohere(args):
    spec = CatSpec(2, args.h, _alpha(args))
    taus = np.linspace(0.0, args.scaled_max, args.samples)
    rows = []
    for tau in taus:
        if args.channel == "amp":
            state = two_mode_amp_decay(spec, DecoherenceParams(Channel.AMPLITUDE_DECAY, tau))
        else:
            state = two_mode_phase_damp(spec, DecoherenceParams(Channel.PHASE_DAMPING, tau))
        rows.append((tau, log_negativity(state).value))
    io.write_csv(args.out, ["tau_scaled", "EN"], rows)


def _cmd_conditional(args):
    state = bs_transform(_state(args))
    projected = conditional_project(state, args.x2, args.theta2)
    tg = tomogram_pure(projected, _quad_grid(args))
    rows = (
        (theta, x, tg.omega[i, j])
        for i, theta in enumerate(tg.grid.theta_values)
        for j, x in enumerate(tg.grid.x_values)
    )
    io.write_csv(args.out, ["theta", "x", "omega"], rows)


def build_parser():
    parser = argparse.ArgumentParser(prog="tomolight")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tomogram", help="single-mode tomogram of a (possibly evolved) cat")
    _add_state_args(p)
    _add_grid_args(p)
    p.add_argument("--t-over-trev", type=float, default=0.0)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_tomogram)

    p = sub.add_parser("tomogram2", help="two-mode tomogram slice of the beam-split cat")
    _add_state_args(p)
    p.add_argument("--theta1", type=float, default=np.pi / 4)
    p.add_argument("--theta2", type=float, default=np.pi / 4)
    p.add_argument("--nx", type=int, default=121)
    p.add_argument("--xmax", type=float, default=12.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_tomogram2)

    p = sub.add_parser("wigner", help="Wigner function of a cat or fractional revival")
    _add_state_args(p)
    p.add_argument("--k", type=int, default=1, help="fractional-revival order (1 = none)")
    p.add_argument("--npoints", type=int, default=481)
    p.add_argument("--half-width", type=float, default=12.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("husimi", help="Husimi Q of a (possibly evolved) cat")
    _add_state_args(p)
    p.add_argument("--t-over-trev", type=float, default=0.0)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--npoints", type=int, default=481)
    p.add_argument("--half-width", type=float, default=12.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_husimi)

    p = sub.add_parser("evolve-moments", help="moment time series under Kerr evolution")
    _add_state_args(p)
    p.add_argument("--op", choices=("a", "x"), default="x")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_evolve_moments)

    p = sub.add_parser("renyi", help="position+momentum Renyi entropy sum over a revival period")
    _add_state_args(p)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_renyi)

    p = sub.add_parser("entangle", help="beam-splitter entanglement E(t) for a coherent input")
    _add_state_args(p)
    p.add_argument("--samples", type=int, default=400)
    p.add_argument("--chi", type=float, default=1.0)
    p.add_argument("--cutoff", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_entangle)

    p = sub.add_parser("decohere", help="log-negativity decay of the beam-split 2-cat")
    _add_state_args(p)
    p.add_argument("--channel", choices=("amp", "phase"), default="amp")
    p.add_argument("--scaled-max", type=float, default=0.5)
    p.add_argument("--samples", type=int, default=26)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_decohere)

    p = sub.add_parser("conditional", help="tomogram of the conditionally projected mode")
    _add_state_args(p, delta_default=0.2)
    _add_grid_args(p)
    p.add_argument("--x2", type=float, required=True)
    p.add_argument("--theta2", type=float, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_conditional)

    return parser


def _validate(args):
    if hasattr(args, "l"):
        if args.l < 1 or not 0 <= args.h < args.l:
            raise ValueError("need l >= 1 and 0 <= h < l")
        if args.nbar < 0:
            raise ValueError("nbar must be nonnegative")
    if getattr(args, "command", "") == "decohere" and args.l != 2:
        raise ValueError("decohere supports the l=2 cat only")


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        _apply_thread_cap()
        _validate(args)
        args.func(args)
        io.write_sidecar(args.out, _config_dict(args))
    except (ValueError, OSError) as exc:
        print("config error: %s" % exc, file=sys.stderr)
        return 2
    except (TomolightError, ArithmeticError, np.linalg.LinAlgError) as exc:
        print("numeric failure: %s" % exc, file=sys.stderr)
        return 3
    return 0


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

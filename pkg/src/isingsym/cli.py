"""Command-line front end.

Subcommands: tables, leakage, invariant, commutators, squeeze.
Exit codes: 0 pass, 1 usage, 2 verification failure, 3 resource cap,
4 degenerate input.
"""

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from .analysis import (
    default_theta_grid,
    heisenberg_symmetry_scan,
    invariant_symmetric_subspace,
    spin_squeezing_xi2,
    symmetry_retention_report,
)
from .dicke import dicke_basis, dicke_state, symmetric_decomposition
from .errors import (
    DegenerateDirectionError,
    InvalidArgumentError,
    ResourceCapError,
)
from .evolve import (
    evolve_dense_oracle,
    evolve_xdiag,
    phase_align,
    table1_coefficients,
    table2_coefficients,
)
from .operators import (
    HeisenbergXYZ,
    IsingX,
    collective_operator,
    chain_hamiltonian,
    commutator_norm,
    j_squared,
)
from .qstate import basis_state

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_RESOURCE = 3
EXIT_DEGENERATE = 4

TABLES_DEVIATION_LIMIT = 1e-9


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".17g")


def _model_from_args(args):
    if args.model == "ising":
        return IsingX()
    return HeisenbergXYZ(args.cx, args.cy, args.cz)


def _theta_grid_from_args(args):
    if args.theta is not None:
        return np.array([args.theta])
    if args.theta_min is not None or args.theta_max is not None:
        lo = args.theta_min if args.theta_min is not None else 0.0
        hi = args.theta_max if args.theta_max is not None else 2.0 * np.pi
        steps = args.steps if args.steps is not None else 64
        if steps < 1:
            raise InvalidArgumentError("steps must be >= 1")
        return np.linspace(lo, hi, steps, endpoint=False)
    return default_theta_grid()


def _emit(args, lines_csv, payload_json):
    if args.format == "csv":
        text = "\n".join(lines_csv) + "\n"
    else:
        text = json.dumps(payload_json, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_tables(args):
    which = args.which
    n = 3 if which == "I" else 4
    grid = _theta_grid_from_args(args)
    basis = dicke_basis(n)
    rows = range(1, n + 2)
    lines = [
        "table,state,theta,m,re_c_analytic,im_c_analytic,"
        "re_c_numeric,im_c_numeric,weight_analytic,weight_numeric,deviation"
    ]
    payload = []
    prefix = "psi" if which == "I" else "phi"
    worst = 0.0
    for row in rows:
        state = basis.states[row - 1]
        for theta in grid:
            if which == "I":
                printed = table1_coefficients(row, theta)
                w_analytic = 1.0
            else:
                printed, w_analytic = table2_coefficients(row, theta)
            analytic = np.conj(printed)  # expansion-coefficient convention
            dec = symmetric_decomposition(evolve_xdiag(state, theta))
            numeric = dec.coefficients
            aligned = phase_align(analytic, numeric)
            deviation = float(np.max(np.abs(aligned - analytic)))
            worst = max(worst, deviation)
            for k, (ca, cn) in enumerate(zip(analytic, aligned)):
                m_val = n / 2 - k
                lines.append(
                    ",".join(
                        [
                            which,
                            f"{prefix}{row}",
                            _fmt(theta),
                            _fmt(m_val),
                            _fmt(ca.real),
                            _fmt(ca.imag),
                            _fmt(cn.real),
                            _fmt(cn.imag),
                            _fmt(w_analytic),
                            _fmt(dec.symmetric_weight),
                            _fmt(deviation),
                        ]
                    )
                )
            payload.append(
                {
                    "table": which,
                    "state": f"{prefix}{row}",
                    "theta": theta,
                    "c_analytic": [[ca.real, ca.imag] for ca in analytic],
                    "c_numeric": [[cn.real, cn.imag] for cn in aligned],
                    "weight_analytic": w_analytic,
                    "weight_numeric": dec.symmetric_weight,
                    "deviation": deviation,
                }
            )
    _emit(args, lines, payload)
    return EXIT_OK if worst <= TABLES_DEVIATION_LIMIT else EXIT_VERIFICATION


def _cmd_leakage(args):
    model = _model_from_args(args)
    grid = _theta_grid_from_args(args)
    report = symmetry_retention_report(args.n, model, grid, args.tol)
    lines = ["state,theta,leakage"]
    payload = {"n_qubits": args.n, "states": []}
    for rec in report.records:
        for theta, leak in zip(report.theta_grid, rec.leakage):
            lines.append(f"{rec.label},{_fmt(theta)},{_fmt(leak)}")
    lines.append("state,max_leakage,retained")
    for rec in report.records:
        lines.append(f"{rec.label},{_fmt(rec.max_leakage)},{rec.retained}")
        payload["states"].append(
            {
                "label": rec.label,
                "theta": list(report.theta_grid),
                "leakage": list(rec.leakage),
                "max_leakage": rec.max_leakage,
                "retained": rec.retained,
            }
        )
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_invariant(args):
    model = _model_from_args(args)
    sub = invariant_symmetric_subspace(args.n, model, args.tol)
    lines = [f"dimension,{sub.dimension}"]
    payload = {"n_qubits": args.n, "dimension": sub.dimension, "vectors": []}
    if 0 < sub.dimension <= 8:
        basis = dicke_basis(args.n)
        lines.append("vector,m,re,im")
        for j, col in enumerate(sub.columns):
            coeffs = symmetric_decomposition(col).coefficients
            vec = []
            for label, c in zip(basis.labels, coeffs):
                lines.append(f"{j},{label[2:]},{_fmt(c.real)},{_fmt(c.imag)}")
                vec.append({"m": label[2:], "re": c.real, "im": c.imag})
            payload["vectors"].append(vec)
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_commutators(args):
    model = _model_from_args(args)
    a = chain_hamiltonian(model, args.n)
    pairs = [
        ("A_Jx", collective_operator(args.n, "x")),
        ("A_Jy", collective_operator(args.n, "y")),
        ("A_Jz", collective_operator(args.n, "z")),
        ("A_J2", j_squared(args.n)),
    ]
    lines = ["pair,frobenius_norm"]
    payload = []
    for name, op in pairs:
        nrm = commutator_norm(a, op)
        lines.append(f"{name},{_fmt(nrm)}")
        payload.append({"pair": name, "frobenius_norm": nrm})
    _emit(args, lines, payload)
    return EXIT_OK


def _parse_state_spec(n, spec):
    kind, _, value = spec.partition(":")
    if kind == "dicke":
        try:
            m = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgumentError(f"bad dicke m spec {value!r}") from exc
        return dicke_state(n, m)
    if kind == "basis":
        return basis_state(n, value)
    raise InvalidArgumentError(f"state spec must be dicke:<m> or basis:<bits>, got {spec!r}")


def _cmd_squeeze(args):
    psi = _parse_state_spec(args.n, args.state)
    theta = args.theta if args.theta is not None else 0.0
    model = _model_from_args(args)
    if isinstance(model, IsingX):
        evolved = evolve_xdiag(psi, theta)
    else:
        evolved = evolve_dense_oracle(psi, theta, model)
    xi2 = spin_squeezing_xi2(evolved)
    lines = ["xi2", _fmt(xi2)]
    _emit(args, lines, {"xi2": xi2})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="isingsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_n=True):
        if need_n:
            p.add_argument("--n", type=int, required=True, help="number of qubits")
        p.add_argument("--model", choices=["ising", "xyz"], default="ising")
        p.add_argument("--cx", type=float, default=1.0)
        p.add_argument("--cy", type=float, default=1.0)
        p.add_argument("--cz", type=float, default=1.0)
        p.add_argument("--theta", type=float, help="dimensionless time (radians)")
        p.add_argument("--theta-min", type=float)
        p.add_argument("--theta-max", type=float)
        p.add_argument("--steps", type=int)
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("tables", help="reproduce the analytic coefficient tables")
    p.add_argument("--which", choices=["I", "II"], required=True)
    common(p, need_n=False)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("leakage", help="per-state symmetric-subspace leakage")
    common(p)
    p.set_defaults(func=_cmd_leakage)

    p = sub.add_parser("invariant", help="largest invariant symmetric subspace")
    common(p)
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("commutators", help="commutator norms with J operators")
    common(p)
    p.set_defaults(func=_cmd_commutators)

    p = sub.add_parser("squeeze", help="spin squeezing parameter of an evolved state")
    common(p)
    p.add_argument("--state", required=True, help="dicke:<m> or basis:<bits>")
    p.set_defaults(func=_cmd_squeeze)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DegenerateDirectionError as exc:
        print(f"degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())

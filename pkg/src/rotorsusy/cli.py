"""Command-line interface: verification runner and data exports.

Subcommands
-----------
verify    run the invariant suites (exit 0 all-pass, 1 otherwise)
spectrum  eigenvalues with multiplicities of a named operator at fixed j
basis     vectors and labels of the M/F/G/Z families
poly      recurrence tables, grid values, weights, parameters
overlaps  the F/Z overlap matrix by either construction

Common flags (per subcommand): --format {json,csv,table}, --output PATH,
--tolerance-scale FLOAT.  JSON is the canonical machine format: every
export is wrapped in an envelope {schema_version, kind, metadata,
payload} with complex numbers as [re, im] pairs.  Exports are
deterministic byte-for-byte across runs.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

import argparse
import json
import sys

from . import antikrawtchouk as ak
from . import eigenbases as eb
from .errors import ContractViolation, VerificationError
from .harmonics import HarmonicSpace
from .operators import j3, spectrum
from .susy import susy_operators
from .verification import SUITES, run_verification

__all__ = ["main", "entry", "build_parser"]

SCHEMA_VERSION = "1"

_CONVENTIONS = {
    "index_ordering": "coefficients over Y_j^m with m ascending; flat index i = m + j",
    "m_basis_order": "epsilon=+1 chain for m=0..j, then epsilon=-1 chain for m=1..j",
    "phase_rule": "first nonzero coefficient in the M-basis expansion is positive real",
    "condon_shortley": True,
    "complex_format": "[re, im]",
}


def _f17(x) -> str:
    return format(float(x), ".17g")


def _pair(z):
    z = complex(z)
    return [z.real, z.imag]


def _envelope(kind, metadata, payload):
    meta = dict(metadata)
    meta["conventions"] = _CONVENTIONS
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": kind,
        "metadata": meta,
        "payload": payload,
    }


def _render_csv(rows) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _deliver(args, text) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _emit(args, kind, metadata, payload, table_lines, csv_rows) -> None:
    if args.format == "json":
        text = json.dumps(_envelope(kind, metadata, payload), indent=2) + "\n"
    elif args.format == "csv":
        text = _render_csv(csv_rows)
    else:
        text = "\n".join(table_lines) + "\n"
    _deliver(args, text)


# ---------------------------------------------------------------------------
# verify

def _cmd_verify(args) -> int:
    report = run_verification(
        j_max=args.jmax, suite_filter=args.suite, tolerance_scale=args.tolerance_scale
    )
    metadata = {
        "j_max": args.jmax,
        "suite": args.suite or "all",
        "tolerance_scale": args.tolerance_scale,
    }
    csv_rows = [["check", "status", "residual", "tolerance", "detail"]]
    for c in report.checks:
        csv_rows.append(
            [c.name, "pass" if c.passed else "fail", _f17(c.residual), _f17(c.tolerance), c.detail]
        )
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(_envelope("report", metadata, report.as_dict()), fh, indent=2)
            fh.write("\n")
        print(f"report written to {args.output}")
        print("\n".join(report.table_lines()))
    else:
        _emit(args, "report", metadata, report.as_dict(), report.table_lines(), csv_rows)
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------
# spectrum

_OPERATOR_NAMES = ("H", "Q", "Qalt", "K1", "K2", "K3", "C", "J3")


def _named_operator(name, space):
    if name == "J3":
        return j3(space)
    s = susy_operators(space)
    return {"H": s.h, "Q": s.q, "Qalt": s.q_alt, "K1": s.k1, "K2": s.k2, "K3": s.k3, "C": s.c}[name]


def _cmd_spectrum(args) -> int:
    space = HarmonicSpace(args.j)
    rep = spectrum(_named_operator(args.op, space))
    payload = {
        "j": args.j,
        "operator": args.op,
        "eigenvalues": [float(v) for v in rep.eigenvalues],
        "multiplicities": [int(m) for m in rep.multiplicities],
    }
    table = [f"spectrum of {args.op} at j={args.j}", "eigenvalue      multiplicity"]
    for v, m in zip(rep.eigenvalues, rep.multiplicities):
        table.append(f"{v:>12.6f}    x{m}")
    csv_rows = [["eigenvalue", "multiplicity"]]
    csv_rows += [[_f17(v), str(int(m))] for v, m in zip(rep.eigenvalues, rep.multiplicities)]
    _emit(args, "spectrum", {"j": args.j, "operator": args.op}, payload, table, csv_rows)
    return 0


# ---------------------------------------------------------------------------
# basis

def _basis_by_family(family, j):
    space = HarmonicSpace(j)
    if family == "M":
        return eb.m_basis(space)
    if family == "F":
        return eb.f_basis(space)
    if family == "G":
        return eb.g_basis(space)
    return ak.z_basis(j)


def _cmd_basis(args) -> int:
    basis = _basis_by_family(args.family, args.j)
    payload = {
        "j": args.j,
        "family": args.family,
        "labels": [dict(lab) for lab in basis.labels],
        "vectors": [[_pair(c) for c in v.coeffs] for v in basis.vectors],
    }
    table = [f"{args.family}-basis at j={args.j}: {len(basis)} vector(s)"]
    for lab, v in zip(basis.labels, basis.vectors):
        table.append("  " + ", ".join(f"{k}={lab[k]}" for k in lab))
        table.append("    " + "  ".join(f"{c.real:+.6f}{c.imag:+.6f}i" for c in v.coeffs))
    label_keys = sorted(basis.labels[0]) if basis.labels else []
    header = ["index"] + label_keys
    dim = 2 * args.j + 1
    for i in range(dim):
        header += [f"c{i}_re", f"c{i}_im"]
    csv_rows = [header]
    for n, (lab, v) in enumerate(zip(basis.labels, basis.vectors)):
        row = [str(n)] + [_f17(lab[k]) if isinstance(lab[k], float) else str(lab[k])
                          for k in label_keys]
        for c in v.coeffs:
            row += [_f17(c.real), _f17(c.imag)]
        csv_rows.append(row)
    _emit(args, "basis", {"j": args.j, "family": args.family}, payload, table, csv_rows)
    return 0


# ---------------------------------------------------------------------------
# poly

def _cmd_poly(args) -> int:
    n_max = args.N
    if args.what == "coeffs":
        t = ak.recurrence_coeffs(n_max)
        payload = {
            "N": n_max,
            "A": [float(v) for v in t.A],
            "C": [float(v) for v in t.C],
            "monic_b": [float(v) for v in t.monic_b],
            "monic_c": [float(v) for v in t.monic_c],
        }
        table = [f"recurrence coefficients at N={n_max}", "n       A_n       C_n       b_n       c_n"]
        for n in range(n_max + 1):
            c_txt = f"{t.monic_c[n - 1]:>9.5f}" if n >= 1 else "        -"
            table.append(f"{n:<3} {t.A[n]:>9.5f} {t.C[n]:>9.5f} {t.monic_b[n]:>9.5f} {c_txt}")
        csv_rows = [["n", "A", "C", "monic_b", "monic_c"]]
        for n in range(n_max + 1):
            csv_rows.append(
                [str(n), _f17(t.A[n]), _f17(t.C[n]), _f17(t.monic_b[n]),
                 _f17(t.monic_c[n - 1]) if n >= 1 else ""]
            )
    elif args.what == "values":
        t = ak.recurrence_coeffs(n_max)
        g = ak.grid(n_max)
        vals = [[float(ak.eval_monic(t, n, x)) for x in g.x] for n in range(n_max + 2)]
        payload = {
            "N": n_max,
            "x": [float(v) for v in g.x],
            "y": [float(v) for v in g.y],
            "P": vals,
        }
        table = [f"monic values P_n(x_k) at N={n_max}",
                 "k/n " + " ".join(f"{n:>10}" for n in range(n_max + 2))]
        for k in range(n_max + 1):
            table.append(
                f"{k:<3} " + " ".join(f"{vals[n][k]:>10.5f}" for n in range(n_max + 2))
            )
        csv_rows = [["k", "x", "y"] + [f"P{n}" for n in range(n_max + 2)]]
        for k in range(n_max + 1):
            csv_rows.append([str(k), _f17(g.x[k]), _f17(g.y[k])]
                            + [_f17(vals[n][k]) for n in range(n_max + 2)])
    elif args.what == "weights":
        wt = ak.weights(n_max)
        payload = {
            "N": n_max,
            "x": [float(v) for v in wt.x],
            "derived": [float(v) for v in wt.derived],
            "closed_form": [float(v) for v in wt.closed_form],
            "norms": [float(v) for v in wt.norms],
            "discrepant": wt.discrepant,
        }
        flag = "discrepant" if wt.discrepant else "proportional"
        table = [f"weights at N={n_max} (closed-form column: {flag}, informational only)",
                 "k          x    derived   closed_form"]
        for k in range(n_max + 1):
            table.append(
                f"{k:<3} {wt.x[k]:>8.4f} {wt.derived[k]:>10.6f} {wt.closed_form[k]:>12.6f}"
            )
        csv_rows = [["k", "x", "derived", "closed_form", "discrepant"]]
        for k in range(n_max + 1):
            csv_rows.append(
                [str(k), _f17(wt.x[k]), _f17(wt.derived[k]), _f17(wt.closed_form[k]),
                 str(wt.discrepant).lower()]
            )
    else:  # params
        p = ak.bannai_ito_params(n_max)
        payload = {"N": n_max, **p}
        table = [f"Bannai-Ito parameters at N={n_max}"]
        table += [f"  {k} = {v}" for k, v in p.items()]
        csv_rows = [["rho1", "rho2", "r1", "r2"],
                    [_f17(p["rho1"]), _f17(p["rho2"]), _f17(p["r1"]), _f17(p["r2"])]]
    _emit(args, "weights" if args.what == "weights" else "recurrence",
          {"N": n_max, "what": args.what}, payload, table, csv_rows)
    return 0


# ---------------------------------------------------------------------------
# overlaps

def _matrix_pairs(w):
    return [[_pair(z) for z in row] for row in w]


def _cmd_overlaps(args) -> int:
    n = args.N
    results = {}
    if args.method in ("integral", "both"):
        results["integral"] = ak.overlaps_via_integral(n)
    if args.method in ("recurrence", "both"):
        results["recurrence"] = ak.overlaps_via_recurrence(n)

    payload = {"N": n, "method": args.method}
    for name, om in results.items():
        payload[f"W_{name}"] = _matrix_pairs(om.W)
        payload[f"unitarity_residual_{name}"] = om.unitarity_residual
    if args.method == "both":
        import numpy as np

        dev = float(np.max(np.abs(results["integral"].W - results["recurrence"].W)))
        payload["max_deviation"] = dev

    table = [f"overlap matrix at N={n} (method: {args.method})"]
    for name, om in results.items():
        table.append(f"[{name}] unitarity residual {om.unitarity_residual:.3e}")
        for row in om.W:
            table.append("  " + "  ".join(f"{z.real:+.6f}{z.imag:+.6f}i" for z in row))
    if args.method == "both":
        table.append(f"max entrywise deviation between methods: {payload['max_deviation']:.3e}")

    csv_rows = [["method", "n"] + sum([[f"k{k}_re", f"k{k}_im"] for k in range(n + 1)], [])]
    for name, om in results.items():
        for r, row in enumerate(om.W):
            csv_rows.append([name, str(r)] + sum([[_f17(z.real), _f17(z.imag)] for z in row], []))
    _emit(args, "overlaps", {"N": n, "method": args.method}, payload, table, csv_rows)
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table",
                        help="output format (default: table)")
    common.add_argument("--output", metavar="PATH", default=None,
                        help="write output to PATH instead of stdout")
    common.add_argument("--tolerance-scale", dest="tolerance_scale", type=float, default=1.0,
                        metavar="FLOAT", help="multiply all default tolerances")

    parser = argparse.ArgumentParser(
        prog="rotorsusy",
        description="Rigid-rotor supersymmetry toolkit: verification suites and data exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the invariant suites")
    p_verify.add_argument("--jmax", type=int, default=20, help="largest degree (default 20)")
    p_verify.add_argument("--suite", choices=SUITES, default=None,
                          help="restrict to one suite")
    p_verify.set_defaults(func=_cmd_verify)

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="eigenvalues and multiplicities of a named operator")
    p_spec.add_argument("--j", type=int, required=True)
    p_spec.add_argument("--op", choices=_OPERATOR_NAMES, required=True)
    p_spec.set_defaults(func=_cmd_spectrum)

    p_basis = sub.add_parser("basis", parents=[common],
                             help="export an eigenbasis family")
    p_basis.add_argument("--j", type=int, required=True)
    p_basis.add_argument("--family", choices=("M", "F", "G", "Z"), required=True)
    p_basis.set_defaults(func=_cmd_basis)

    p_poly = sub.add_parser("poly", parents=[common],
                            help="anti-Krawtchouk tables")
    p_poly.add_argument("--N", type=int, required=True)
    p_poly.add_argument("--what", choices=("coeffs", "values", "weights", "params"),
                        required=True)
    p_poly.set_defaults(func=_cmd_poly)

    p_over = sub.add_parser("overlaps", parents=[common],
                            help="overlap matrix between the two eigenbases")
    p_over.add_argument("--N", type=int, required=True)
    p_over.add_argument("--method", choices=("integral", "recurrence", "both"),
                        default="both")
    p_over.set_defaults(func=_cmd_overlaps)
    return parser


def _validate(parser, args) -> None:
    if not (args.tolerance_scale > 0):
        parser.error(f"--tolerance-scale must be positive, got {args.tolerance_scale}")
    if args.command == "verify" and args.jmax < 0:
        parser.error(f"--jmax must be non-negative, got {args.jmax}")
    if args.command in ("spectrum", "basis") and args.j < 0:
        parser.error(f"--j must be non-negative, got {args.j}")
    if args.command in ("poly", "overlaps") and args.N < 1:
        parser.error(f"--N must be at least 1, got {args.N}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (VerificationError, ContractViolation) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())

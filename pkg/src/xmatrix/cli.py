"""Command-line interface: ``xmat SUBCOMMAND ...`` (also ``python -m xmatrix``).

Results go to standard output (JSON, or CSV for contour data), diagnostics to
standard error. Exit codes: 0 success, 2 parse error, 3 precondition
violation, 4 numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import os
import sys
from typing import List, Optional

from . import bisym, companion, funcs, linalg, spectral
from .core import FLOAT, XMatrix, anti_transpose, astype, power, transpose
from .errors import (ConjugatePairingFailure, DimensionError, DivergenceSuspected, FieldError,
                     InvalidScalar, MethodPreconditionViolated, NonConvergence, NotBisymmetric,
                     ParseError, SingularMatrix)
from .io import (matrix_to_text, parse_coeffs, parse_factors, parse_matrix, scalar_literal,
                 write_matrix)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NUMERICAL = 0, 2, 3, 4
DEFAULT_TOL = 1e-9
TOL_ENV = "XMAT_DEFAULT_TOL"

log = logging.getLogger("xmatrix.cli")


class _Refused(Exception):
    """A precondition failure detected by the CLI itself."""


def _default_tol() -> float:
    raw = os.environ.get(TOL_ENV)
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ParseError(f"{TOL_ENV}={raw!r} is not a number") from None
    if not tol > 0:
        raise ParseError(f"{TOL_ENV} must be positive")
    return tol


def _json(obj: dict) -> str:
    # one line per top-level key, one line per row of a list of records
    keys = list(obj)
    lines = ["{"]
    for k, key in enumerate(keys):
        comma = "," if k < len(keys) - 1 else ""
        val = obj[key]
        if isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"  {json.dumps(key)}: [")
            lines += [f"    {json.dumps(row)}" + ("," if j < len(val) - 1 else "")
                      for j, row in enumerate(val)]
            lines.append("  ]" + comma)
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(val)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _num(v):
    """JSON-friendly scalar: floats stay numbers, rationals become strings."""
    return float(v) if isinstance(v, float) else str(v)


def _cplx(z) -> list:
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def _emit_matrix(a: XMatrix, out: Optional[str]) -> str:
    if out:
        write_matrix(a, out)
        return ""
    return matrix_to_text(a)


def _as_float(a: XMatrix) -> XMatrix:
    return a if a.field == FLOAT else astype(a, FLOAT)


# -- subcommands -------------------------------------------------------------------

def cmd_det(args) -> str:
    return scalar_literal(linalg.determinant(parse_matrix(args.file))) + "\n"


def cmd_inv(args) -> str:
    return _emit_matrix(linalg.inverse(parse_matrix(args.file), args.method), args.output)


def cmd_mul(args) -> str:
    return _emit_matrix(parse_matrix(args.a) @ parse_matrix(args.b), args.output)


def cmd_pow(args) -> str:
    return _emit_matrix(power(parse_matrix(args.file), args.m), args.output)


def cmd_transpose(args) -> str:
    return _emit_matrix(transpose(parse_matrix(args.file)), args.output)


def cmd_antitranspose(args) -> str:
    return _emit_matrix(anti_transpose(parse_matrix(args.file)), args.output)


def cmd_reduce(args) -> str:
    return _emit_matrix(spectral.isospectral_reduction(parse_matrix(args.file)), args.output)


def cmd_exp(args) -> str:
    a = _as_float(parse_matrix(args.file))
    return _emit_matrix(funcs.exp_x(a, args.tol), args.output)


def cmd_cayley(args) -> str:
    return _emit_matrix(funcs.cayley(parse_matrix(args.file)), args.output)


def cmd_charpoly(args) -> str:
    f = spectral.char_poly_factors(parse_matrix(args.file))
    out = {
        "quadratics": [{"block": q.i, "theta": _num(q.theta), "delta": _num(q.delta)}
                       for q in f.quadratics],
        "linear_root": None if f.linear_root is None else _num(f.linear_root),
    }
    if args.expanded:
        out["coefficients"] = [_num(c) for c in spectral.char_poly_coeffs(f).full()]
    return _json(out)


def cmd_eig(args) -> str:
    a = _as_float(parse_matrix(args.file))
    if args.vectors:
        rows = [{"block": p.block if p.block is not None else "center",
                 "value": _cplx(p.lam),
                 "vector": None if p.defective else [_cplx(p.alpha), _cplx(p.beta)],
                 "defective": p.defective}
                for p in spectral.eigenvectors(a)]
        return _json({"n": a.n, "eigenpairs": rows})
    rows = [{"block": b if b is not None else "center", "value": _cplx(z)}
            for b, z in _labelled_eigenvalues(a)]
    return _json({"n": a.n, "eigenvalues": rows})


def _labelled_eigenvalues(a: XMatrix):
    lams = spectral.eigenvalues(a)
    h = a.n // 2
    out = [(k // 2 + 1, lams[k]) for k in range(2 * h)]
    if a.n % 2:
        out.append((None, lams[-1]))
    return out


def cmd_gershgorin(args) -> str:
    disks = spectral.gershgorin_disks(parse_matrix(args.file))
    return _json({"disks": [{"row": g.row, "center": _num(g.center), "radius": _num(g.radius)}
                            for g in disks]})


def _parse_window(text: str):
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise ParseError(f"window {text!r} is not four numbers", field="window") from None
    if len(vals) != 4:
        raise ParseError("window needs X0,X1,Y0,Y1", field="window")
    if not (vals[1] > vals[0] and vals[3] > vals[2]):
        raise ParseError("window must have X1 > X0 and Y1 > Y0", field="window")
    return tuple(vals)


def cmd_cassini(args) -> str:
    tol = args.tol if args.tol is not None else _default_tol()
    a = _as_float(parse_matrix(args.file))
    ovals = spectral.cassini_ovals(a)
    eig = _labelled_eigenvalues(a)
    eig_rows = []
    for block, z in eig:
        pos = ("center" if block is None
               else spectral.cassini_classify(z, ovals[block - 1], tol).value)
        eig_rows.append((block, complex(z), pos))
    fmt = args.format or ("csv" if args.contour else "json")

    curves = []
    if args.contour:
        window = (_parse_window(args.window) if args.window
                  else spectral.default_window(ovals, [z for _, z, _ in eig_rows]))
        for o in ovals:
            curves.append((o.block, spectral.cassini_contour(o, window, args.resolution)))

    if fmt == "csv":
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["section", "block", "polyline", "x", "y"])
        for block, lines in curves:
            for k, line in enumerate(lines, start=1):
                for x, y in line.tolist():
                    w.writerow(["contour", block, k, repr(x), repr(y)])
        for block, z, _ in eig_rows:
            w.writerow(["eigenvalue", block if block is not None else "center", "",
                        repr(z.real + 0.0), repr(z.imag + 0.0)])
        return buf.getvalue()

    out = {
        "tolerance": tol,
        "ovals": [{"block": o.block, "foci": [_num(o.z1), _num(o.z2)], "radius": _num(o.radius)}
                  for o in ovals],
        "eigenvalues": [{"block": b if b is not None else "center", "value": _cplx(z),
                         "position": pos} for b, z, pos in eig_rows],
    }
    if args.contour:
        out["contours"] = [{"block": b, "polylines": [line.tolist() for line in lines]}
                           for b, lines in curves]
    return _json(out)


def cmd_companion(args) -> str:
    layout = companion.Layout(args.layout)
    if args.coeffs is not None:
        fac = companion.real_factorize(parse_coeffs(args.coeffs))
    else:
        fac = parse_factors(args.factors)
    return _emit_matrix(companion.x_companion(fac, layout), args.output)


def cmd_bisym(args) -> str:
    cert = bisym.is_bisymmetric(parse_matrix(args.file))
    text = _json({"holds": cert.holds,
                  "witness": list(cert.witness) if cert.witness else None,
                  "kind": cert.kind,
                  "description": cert.describe()})
    if not cert.holds:
        sys.stdout.write(text)
        raise _Refused(f"not bi-symmetric: {cert.describe()}")
    return text


# -- parser -------------------------------------------------------------------------------

def _positive_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="xmat", description="Linear algebra on X-matrices.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, func, help_, output=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        if output:
            p.add_argument("-o", "--output", help="write the matrix here instead of stdout")
        p.set_defaults(func=func)
        return p

    matrix_cmd("det", cmd_det, "determinant", output=False)
    p = matrix_cmd("inv", cmd_inv, "inverse")
    p.add_argument("--method", choices=[m.value for m in linalg.InverseMethod], default="block")

    p = sub.add_parser("mul", help="product A B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_mul)

    p = matrix_cmd("pow", cmd_pow, "integer power A^M")
    p.add_argument("m", type=_positive_int)
    matrix_cmd("transpose", cmd_transpose, "transpose")
    matrix_cmd("antitranspose", cmd_antitranspose, "anti-transpose")
    p = matrix_cmd("charpoly", cmd_charpoly, "factored characteristic polynomial", output=False)
    p.add_argument("--expanded", action="store_true", help="also print expanded coefficients")
    p = matrix_cmd("eig", cmd_eig, "eigenvalues", output=False)
    p.add_argument("--vectors", action="store_true")
    matrix_cmd("gershgorin", cmd_gershgorin, "Gershgorin disks", output=False)

    p = matrix_cmd("cassini", cmd_cassini, "Cassini ovals and eigenvalue positions", output=False)
    p.add_argument("--contour", action="store_true", help="trace oval boundaries")
    p.add_argument("--resolution", type=int, default=200)
    p.add_argument("--window", help="X0,X1,Y0,Y1")
    p.add_argument("--format", choices=["csv", "json"])
    p.add_argument("--tol", type=float, help=f"boundary tolerance (default {DEFAULT_TOL}, "
                                             f"or ${TOL_ENV})")

    matrix_cmd("reduce", cmd_reduce, "isospectral reduction")

    p = sub.add_parser("companion", help="X-shaped companion matrix")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--coeffs", help="ascending a0,a1,...,a_{n-1} of the monic polynomial")
    src.add_argument("--factors", help="JSON file with linear roots and [beta, gamma] quadratics")
    p.add_argument("--layout", choices=[l.value for l in companion.Layout], default="theorem")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_companion)

    p = matrix_cmd("exp", cmd_exp, "matrix exponential")
    p.add_argument("--tol", type=float, default=1e-16)
    matrix_cmd("cayley", cmd_cayley, "Cayley transform (I - A)(I + A)^-1")
    matrix_cmd("bisym", cmd_bisym, "bi-symmetry certificate", output=False)
    return ap


_PRECONDITION = (SingularMatrix, MethodPreconditionViolated, NotBisymmetric, FieldError,
                 DimensionError, _Refused)
_NUMERICAL = (NonConvergence, ConjugatePairingFailure, DivergenceSuspected)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="xmat: %(levelname)s: %(message)s", stream=sys.stderr)
    try:
        text = args.func(args)
    except (ParseError, InvalidScalar) as exc:
        print(f"xmat: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _PRECONDITION as exc:
        print(f"xmat: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except _NUMERICAL as exc:
        print(f"xmat: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as exc:
        print(f"xmat: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

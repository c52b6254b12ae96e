"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 out-of-scope input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .darboux import export_jsonl
from .exactnum import DomainError, render_quad
from .klein import KleinError, compute_covering, derive_identity
from .polyalg import ratfunc_from_text, render_poly, render_ratfunc
from .schwarz import ExponentTriple, Rejection, assign_points, classify, covering_degree
from .verify import check_covering, check_database, check_identity

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SCOPE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypklein", description="Klein pull-back coverings for algebraic 2F1 equations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp_, exponents=True, order=False):
        if exponents:
            sp_.add_argument("--exponents", required=True, help="e0,e1,einf as exact fractions")
        sp_.add_argument("--format", choices=("text", "json"), default="text")
        if order:
            sp_.add_argument("--order", type=int, default=20)

    common(sub.add_parser("solve", help="compute the covering psi"))
    common(sub.add_parser("identity", help="derive the induced 2F1 transformation"), order=True)
    common(sub.add_parser("classify", help="Schwarz type of an exponent triple"))
    common(sub.add_parser("verify-db", help="series-check the Darboux database"), exponents=False, order=True)
    vc = sub.add_parser("verify-covering", help="check a user-supplied covering")
    common(vc)
    vc.add_argument("--covering", required=True, help='"<num>/<den>" in X')
    sub.add_parser("export-db", help="emit the database as JSON lines")
    return p


def _triple(text: str) -> ExponentTriple:
    try:
        return ExponentTriple.parse(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _psi_text(psi) -> str:
    return f"Z = {render_ratfunc(psi)}"


def _w_text(w) -> str:
    return render_quad(w, spaced=True)


def _solve(args):
    e = _triple(args.exponents)
    t = classify(e)
    if isinstance(t, Rejection):
        return EXIT_SCOPE, {"exponents": str(e), "status": f"{t.value}: out of scope"}
    r = compute_covering(e)
    data = {
        "exponents": [str(v) for v in e.as_tuple()],
        "type": str(t),
        "assignment": [str(v) for v in r.assignment.triple().as_tuple()],
        "degree": r.degree,
        "psi": render_ratfunc(r.psi),
        "numerator": render_poly(r.psi.num),
        "denominator": render_poly(r.psi.den),
        "w": _w_text(r.w),
        "relation": f"z = w*({r.phi_relation})",
        "curve": str(r.curve),
        "ramification": {k: "+".join(map(str, v)) for k, v in r.ramification.items()},
        "method": r.method,
    }
    return EXIT_OK, data


def _solve_text(d):
    if "psi" not in d:
        return d["status"]
    lines = [f"type: {d['type']}",
             f"exponents at X=0,1,oo: {', '.join(d['assignment'])}",
             f"degree: {d['degree']}",
             f"{'Z = ' + d['psi']}",
             f"w = {d['w']}",
             f"relation: {d['relation']} on {d['curve']}",
             "ramification: " + ", ".join(f"Z={k}: {v}" for k, v in d["ramification"].items())]
    return "\n".join(lines)


def _identity(args):
    e = _triple(args.exponents)
    t = classify(e)
    if isinstance(t, Rejection):
        return EXIT_SCOPE, {"exponents": str(e), "status": f"{t.value}: out of scope"}
    ident = derive_identity(e, args.order)
    rep = check_identity(ident, args.order)
    theta = [{"factor": render_poly(f), "exponent": str(k)} for f, k in ident.theta]
    theta_txt = "*".join(f"({render_poly(f)})^({k})" for f, k in ident.theta) or "1"
    data = {"lhs": f"2F1{ident.lhs_params}", "rhs": f"2F1{ident.rhs_params}",
            "theta": theta, "psi": render_ratfunc(ident.psi),
            "identity": f"2F1{ident.lhs_params}(X) = {theta_txt} * 2F1{ident.rhs_params}(psi(X))",
            "verified_order": args.order, "status": "pass" if rep.overall else "fail"}
    return (EXIT_OK if rep.overall else EXIT_FAIL), data


def _classify(args):
    e = _triple(args.exponents)
    t = classify(e)
    if isinstance(t, Rejection):
        return EXIT_SCOPE, {"exponents": str(e), "status": f"{t.value}: out of scope"}
    a = assign_points(e, t)[0]
    return EXIT_OK, {"exponents": str(e), "group": t.group.value,
                     "representative": str(t.representative), "m": t.m,
                     "degree": covering_degree(e, t.m), "assignment": str(a),
                     "status": f"{t.group.value}, type {t.representative}"}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "export-db":
            out.write(export_jsonl())
            return EXIT_OK
        if args.command == "verify-db":
            if args.order < 1:
                raise UsageError("--order must be positive")
            rep = check_database(args.order)
            code = EXIT_OK if rep.overall else EXIT_FAIL
            if args.format == "json":
                print(rep.to_json(), file=out)
            else:
                print(rep.to_text(), file=out)
                print("all identities pass" if rep.overall else "some identities FAIL", file=out)
            return code
        if args.command == "verify-covering":
            e = _triple(args.exponents)
            try:
                psi = ratfunc_from_text(args.covering)
            except Exception as exc:
                raise UsageError(f"cannot parse covering: {exc}") from None
            if isinstance(classify(e), Rejection):
                print(f"{classify(e).value}: out of scope", file=out)
                return EXIT_SCOPE
            rep = check_covering(e, psi)
            print(rep.to_json() if args.format == "json" else rep.to_text(), file=out)
            return EXIT_OK if rep.overall else EXIT_FAIL
        handler = {"solve": _solve, "identity": _identity, "classify": _classify}[args.command]
        code, data = handler(args)
        if args.format == "json":
            print(json.dumps(data, indent=2, sort_keys=True), file=out)
        elif args.command == "solve":
            print(_solve_text(data), file=out)
        elif args.command == "identity" and "identity" in data:
            print(f"{data['identity']}\npsi = {data['psi']}\nverified to order "
                  f"{data['verified_order']}: {data['status']}", file=out)
        else:
            print(data["status"], file=out)
        return code
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KleinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

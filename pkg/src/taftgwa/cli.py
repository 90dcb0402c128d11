"""Command-line front end.

Exit status: 0 success, 1 a verification failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import io
from .classify import (UnsupportedParameters, enumerate_eta_actions, existence, kt_actions,
                       omega_actions, thicken, verify_kt)
from .gwa import GwaError
from .hopfact import (InvalidSpec, OmegaSpec, UnverifiedSpec, is_inner_faithful,
                      verify_module_algebra)
from .invariants import FixedRingError, fixed_ring, omega_fixed_check, verify_presentation
from .parsing import ParseError, parse_element, parse_scalar
from .qpoly import format_tpoly
from .scalars import ScalarError, format_scalar

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _element_doc(e) -> dict:
    return {
        "normal_form": str(e),
        "components": {str(k): format_tpoly(e.component(k)) for k in e.grades()},
    }


# -- commands: each returns (exit status, body) --------------------------------


def cmd_eval(args):
    sess = io.resolve(io.load_json(args.algebra), literals=[args.expr])
    e = parse_element(args.expr, sess.algebra)
    return EXIT_OK, sess.N, {"input": args.expr, **_element_doc(e)}


def cmd_verify(args):
    sess = io.resolve(io.load_json(args.algebra), io.load_json(args.taft), io.load_json(args.spec))
    report = verify_module_algebra(sess.algebra, sess.taft, sess.spec)
    body = {"report": report.to_dict()}
    if report.ok:
        body["inner_faithfulness"] = is_inner_faithful(sess.algebra, sess.taft, sess.spec, report).to_dict()
    return (EXIT_OK if report.ok else EXIT_FAIL), sess.N, body


def cmd_classify(args):
    sess = io.resolve(io.load_json(args.algebra), io.load_json(args.taft))
    A, T = sess.algebra, sess.taft
    if A.q * A.q == 1:
        fams = enumerate_eta_actions(A, T, args.dmax)
        body = {
            "existence": fams.certificate.to_dict(),
            "note": "q^2 = 1: the eta conditions are checked directly; Omega-type actions listed separately",
            "omega_family_count": len(omega_actions(A, T, args.dmax)),
        }
    else:
        body = {"existence": existence(A, T).to_dict()}
    return EXIT_OK, sess.N, body


def _families_body(fams, check: bool, A) -> tuple[int, list]:
    status, rows = EXIT_OK, []
    for f in fams:
        row = f.to_dict()
        if check:
            rep = verify_module_algebra(A, f.taft(), f.concretize())
            row["verified"] = rep.ok
            row["failed_checks"] = rep.failed()
            if not rep.ok or rep["inner_faithful"].passed != f.inner_faithful:
                status = EXIT_FAIL
        rows.append(row)
    return status, rows


def cmd_enumerate(args):
    sess = io.resolve(io.load_json(args.algebra), io.load_json(args.taft))
    A, T = sess.algebra, sess.taft
    fams = enumerate_eta_actions(A, T, args.dmax)
    status, rows = _families_body(fams, args.check, A)
    body = {"existence": fams.certificate.to_dict(), "d_max": args.dmax, "families": rows}
    if A.q == -1:
        s2, orows = _families_body(omega_actions(A, T, args.dmax), args.check, A)
        body["omega_families"] = orows
        status = max(status, s2)
    return status, sess.N, body


def cmd_thicken(args):
    sess = io.resolve(io.load_json(args.algebra), literals=[args.gamma, args.mu], n=args.n)
    A = sess.algebra
    gamma = parse_scalar(args.gamma, sess.field)
    mu = parse_scalar(args.mu, sess.field)
    res = thicken(A, gamma, mu, args.n, args.dmax)
    status, rows = _families_body(res.families, args.check, A)
    body = res.to_dict()
    body["families"] = rows
    return status, sess.N, body


def cmd_ktact(args):
    sess = io.resolve(taft_doc=io.load_json(args.taft), literals=[args.gamma])
    gamma = parse_scalar(args.gamma, sess.field)
    T = sess.taft
    rows, status = [], EXIT_OK
    for f in kt_actions(T, gamma, args.dmax):
        rep = verify_kt(T, gamma, f.polynomial())
        row = f.to_dict()
        row["check"] = rep.to_dict()
        if not rep.ok:
            status = EXIT_FAIL
        rows.append(row)
    return status, sess.N, {"gamma": format_scalar(gamma), "d_max": args.dmax, "families": rows}


def cmd_invariants(args):
    sess = io.resolve(io.load_json(args.algebra), io.load_json(args.taft), io.load_json(args.spec))
    A, T, spec = sess.algebra, sess.taft, sess.spec
    if isinstance(spec, OmegaSpec):
        rep = omega_fixed_check(A, spec)
        body = {"generators": {"T": "t", "W": str(A.u() * spec.mu + A.v())}, "report": rep.to_dict()}
        return (EXIT_OK if rep.ok else EXIT_FAIL), sess.N, body
    pres = fixed_ring(A, T, spec)
    rep = verify_presentation(A, T, spec, pres, args.grade_bound, args.t_bound)
    body = {"presentation": pres.to_dict(), "report": rep.to_dict()}
    return (EXIT_OK if rep.ok else EXIT_FAIL), sess.N, body


def cmd_oracle(args):
    sess = io.resolve(io.load_json(args.algebra))
    A = sess.algebra
    rng = random.Random(args.seed)
    gens = A.generators()
    mismatches = []
    for _ in range(args.count):
        word = "".join(rng.choice("tuv") for _ in range(rng.randint(0, args.length)))
        prod = A.one()
        for ch in word:
            prod = prod * gens[ch]
        ref = A.word_reduce(word)
        if prod != ref:
            mismatches.append({"word": word, "product": str(prod), "rewriting": str(ref)})
    body = {"seed": args.seed, "count": args.count, "max_length": args.length,
            "mismatches": mismatches[:10], "mismatch_count": len(mismatches)}
    return (EXIT_OK if not mismatches else EXIT_FAIL), sess.N, body


# -- text rendering -------------------------------------------------------------


def _cell(v) -> str:
    if isinstance(v, list):
        return ",".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return "; ".join(f"{k}={_cell(x)}" for k, x in sorted(v.items()))
    return str(v)


def render_table(doc: dict) -> str:
    lines = []
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, list) and val and all(isinstance(r, dict) for r in val):
            cols = sorted({c for r in val for c in r})
            table = [cols] + [[_cell(r.get(c, "")) for c in cols] for r in val]
            widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
            lines.append(f"{key}:")
            for row in table:
                lines.append("  " + "  ".join(s.ljust(w) for s, w in zip(row, widths)).rstrip())
        elif isinstance(val, dict):
            lines.append(f"{key}:")
            for sub in render_table(val).splitlines():
                lines.append("  " + sub)
        else:
            lines.append(f"{key}: {_cell(val)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="taftgwa", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_, *need):
        sp = sub.add_parser(name, help=help_)
        for flag in need:
            sp.add_argument(f"--{flag}", required=True, help=f"{flag}.json file")
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
        fmt.add_argument("--table", dest="fmt", action="store_const", const="table", help="text output")
        sp.set_defaults(func=func, fmt="json")
        return sp

    sp = add("eval", cmd_eval, "reduce an expression to normal form", "algebra")
    sp.add_argument("expr")
    add("verify", cmd_verify, "verify a module-algebra structure", "algebra", "taft", "spec")
    sp = add("classify", cmd_classify, "existence of inner-faithful actions", "algebra", "taft")
    sp.add_argument("--dmax", type=int, default=6)
    sp = add("enumerate", cmd_enumerate, "list action families", "algebra", "taft")
    sp.add_argument("--dmax", type=int, default=6)
    sp.add_argument("--check", action="store_true", help="verify each family with all-ones coefficients")
    sp = add("thicken", cmd_thicken, "thicken a cyclic group action", "algebra")
    sp.add_argument("--gamma", required=True)
    sp.add_argument("--mu", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--dmax", type=int, default=6)
    sp.add_argument("--check", action="store_true", help="verify each family with all-ones coefficients")
    sp = add("ktact", cmd_ktact, "actions on k[t]", "taft")
    sp.add_argument("--gamma", required=True)
    sp.add_argument("--dmax", type=int, default=6)
    sp = add("invariants", cmd_invariants, "fixed ring and its certification", "algebra", "taft", "spec")
    sp.add_argument("--grade-bound", type=int, default=6)
    sp.add_argument("--t-bound", type=int, default=6)
    sp = add("oracle", cmd_oracle, "compare multiplication against the rewriting oracle", "algebra")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--length", type=int, default=8)
    sp.add_argument("--seed", type=int, default=0)
    return p


INPUT_ERRORS = (io.InputError, ParseError, InvalidSpec, GwaError, ScalarError, UnsupportedParameters)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, N, body = args.func(args)
    except (UnverifiedSpec, FixedRingError) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    doc = io.envelope(args.command, N, body)
    if args.fmt == "table":
        sys.stdout.write(render_table(doc))
    else:
        sys.stdout.write(io.dump(doc))
    return status


if __name__ == "__main__":
    sys.exit(main())

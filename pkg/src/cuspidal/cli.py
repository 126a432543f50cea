"""Command-line interface.

Exit codes: 0 success, 1 invalid input, 2 a certification check failed,
3 an internal identity was violated.
"""

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .branches import parse_branch, resolve_sequence
from .errors import CertificationFailed, CuspidalError, DomainError, InvariantViolation, UnsupportedFormat
from .family import FamilyParams, certify, construct, enumerate_degree
from .invariants import CurveSingularityData, family_data, invariant_report
from .multiplicity import (
    canonicalize,
    contact_orders,
    invariants_of,
    validate_sequence,
    _COMPACT,
)
from .render import render, to_json_text, tsv
from .topology import cusp_dual_graph, curve_dual_graph, pi1_presentation

EXIT_OK, EXIT_DOMAIN, EXIT_CERT, EXIT_INTERNAL = 0, 1, 2, 3

ALLOWED = {
    "construct": ("text", "json", "latex"),
    "certify": ("text", "json", "latex"),
    "classify": ("text", "json"),
    "invariants": ("text", "json"),
    "seq": ("text", "json"),
    "branch": ("text", "json"),
    "graph": ("text", "json", "dot"),
    "pi1": ("text", "json"),
    "sweep": ("text", "json"),
}


class Result:
    def __init__(self, text, code=EXIT_OK):
        self.text = text
        self.code = code


def _params(args):
    if args.d is None or args.a is None:
        raise DomainError("--d and --a are required")
    return FamilyParams(args.d, args.a, args.b)


def cmd_construct(args):
    return Result(render(construct(_params(args)), args.format))


def cmd_certify(args):
    curve = certify(_params(args), strict=False)
    return Result(render(curve, args.format), EXIT_OK if curve.ok else EXIT_CERT)


def cmd_classify(args):
    if args.d is None:
        raise DomainError("--d is required")
    rows = []
    for p in enumerate_degree(args.d):
        inv = invariant_report(family_data(p))
        rows.append({"d": p.d, "a": p.a, "b": p.b,
                     "cusps": ["(%d)" % (p.d - 2), f"(2_{p.a})", f"(2_{p.b})"],
                     "pi1": pi1_presentation(p).meta["name"],
                     "c_tilde_sq": inv.c_tilde_sq, "k_dot_c": inv.k_dot_c})
    if args.format == "json":
        return Result(to_json_text({"d": args.d, "count": len(rows), "curves": rows}))
    lines = [f"degree {args.d}: {len(rows)} curve(s)"]
    for r in rows:
        lines.append(f"  C({r['d']},{r['a']})  b={r['b']}  cusps {' '.join(r['cusps'])}"
                     f"  pi1 {r['pi1']}")
    return Result("\n".join(lines) + "\n")


def cmd_invariants(args):
    if args.d is None or not args.cusp:
        raise DomainError("--d and at least one --cusp are required")
    data = CurveSingularityData(args.d, tuple(canonicalize(c) for c in args.cusp))
    return Result(render(invariant_report(data), args.format))


def _raw_entries(spec):
    text = spec.strip()
    if _COMPACT.match(text):
        return canonicalize(text).entries
    try:
        return tuple(int(x) for x in text.strip("()").split(","))
    except ValueError:
        raise DomainError(f"cannot parse multiplicity sequence {spec!r}") from None


def cmd_seq(args):
    if args.action == "validate":
        entries = _raw_entries(args.sequence)
        report = validate_sequence(entries)
        payload = {"entries": list(entries), "ok": report.ok,
                   "violations": [{"condition": v.condition, "index": v.index, "message": v.message}
                                  for v in report.violations]}
        if args.format == "json":
            text = to_json_text(payload)
        elif report.ok:
            text = f"valid: {canonicalize(list(entries))}\n"
        else:
            text = "invalid:\n" + "".join(f"  {v}\n" for v in report.violations)
        return Result(text, EXIT_OK if report.ok else EXIT_DOMAIN)
    seq = canonicalize(args.sequence)
    if args.action == "invariants":
        inv = invariants_of(seq)
        if args.format == "json":
            return Result(to_json_text(seq.to_json()))
        return Result(f"{seq}\n" + "".join(f"{k}: {v}\n" for k, v in inv.to_json().items()))
    orders = sorted(contact_orders(seq, cap=args.cap))
    if args.format == "json":
        return Result(to_json_text({"sequence": list(seq.entries), "contact_orders": orders}))
    return Result(" ".join(map(str, orders)) + "\n")


def cmd_branch(args):
    if args.x is None or args.y is None:
        raise DomainError("--x and --y are required")
    germ = parse_branch(args.x, args.y, args.precision)
    seq = resolve_sequence(germ)
    return Result(render(seq, args.format))


def cmd_graph(args):
    if args.seq is not None:
        graph = cusp_dual_graph(args.seq)
    else:
        graph = curve_dual_graph(_params(args))
    if args.figure:
        from .plotting import graph_figure
        graph_figure(graph, args.figure)
    return Result(render(graph, args.format))


def cmd_pi1(args):
    return Result(render(pi1_presentation(_params(args)), args.format))


SWEEP_COLUMNS = ("d", "a", "b", "certified", "failed", "chi", "c_tilde_sq", "k_dot_c", "d_sq",
                 "rigidity", "cond_4_2", "cond_4_1b", "seconds")


def sweep_row(params):
    start = time.perf_counter()
    curve = certify(params, strict=False)
    inv = invariant_report(family_data(params))
    failed = [k for k, v in curve.certified.items() if not v]
    return {"d": params.d, "a": params.a, "b": params.b, "certified": curve.ok,
            "failed": ",".join(failed) or "-", "chi": inv.chi,
            "c_tilde_sq": inv.c_tilde_sq, "k_dot_c": inv.k_dot_c, "d_sq": inv.d_sq,
            "rigidity": inv.rigidity_identity_ok,
            "cond_4_2": inv.unobstructed.cond_4_2, "cond_4_1b": inv.unobstructed.cond_4_1b,
            "seconds": round(time.perf_counter() - start, 4)}


def cmd_sweep(args):
    if args.d_min > args.d_max:
        raise DomainError("--d-min exceeds --d-max")
    todo = [p for d in range(args.d_min, args.d_max + 1) for p in enumerate_degree(d)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(sweep_row, todo))
    else:
        rows = [sweep_row(p) for p in todo]
    rows.sort(key=lambda r: (r["d"], r["a"]))
    bad = [r for r in rows if not (r["certified"] and r["chi"] == 0 and r["rigidity"]
                                   and r["cond_4_2"] and r["cond_4_1b"])]
    if args.figure:
        from .plotting import sweep_figure
        sweep_figure(rows, args.figure)
    if args.format == "json":
        text = to_json_text({"rows": rows, "failures": len(bad)})
    else:
        text = tsv(rows, SWEEP_COLUMNS)
        text += f"# {len(rows)} curves, {len(bad)} failure(s)\n"
    return Result(text, EXIT_CERT if bad else EXIT_OK)


COMMANDS = {
    "construct": cmd_construct, "certify": cmd_certify, "classify": cmd_classify,
    "invariants": cmd_invariants, "seq": cmd_seq, "branch": cmd_branch, "graph": cmd_graph,
    "pi1": cmd_pi1, "sweep": cmd_sweep,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="text", choices=("text", "json", "latex", "dot"))
    common.add_argument("--output", metavar="FILE", help="write the output here instead of stdout")

    curve = argparse.ArgumentParser(add_help=False)
    curve.add_argument("--d", type=int)
    curve.add_argument("--a", type=int)
    curve.add_argument("--b", type=int, help="optional; must equal d - 2 - a")

    parser = argparse.ArgumentParser(
        prog="cuspidal",
        description="Exact construction and certification of tricuspidal rational plane curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("construct", parents=[common, curve], help="build a curve record")
    sub.add_parser("certify", parents=[common, curve], help="build and certify a curve")
    sub.add_parser("classify", parents=[common, curve], help="list the curves of one degree")

    p = sub.add_parser("invariants", parents=[common], help="invariants from degree and cusps")
    p.add_argument("--d", type=int)
    p.add_argument("--cusp", action="append", default=[], help="sequence, e.g. '(3)' or '(2_2)'")

    p = sub.add_parser("seq", parents=[common], help="multiplicity sequence tools")
    p.add_argument("action", choices=("validate", "invariants", "contacts"))
    p.add_argument("sequence")
    p.add_argument("--cap", type=int, default=64)

    p = sub.add_parser("branch", parents=[common], help="multiplicity sequence of a germ")
    p.add_argument("--x")
    p.add_argument("--y")
    p.add_argument("--precision", type=int, default=32)

    p = sub.add_parser("graph", parents=[common, curve], help="weighted dual graph")
    p.add_argument("--seq", help="a single cusp '(m)' or '(2_a)' instead of a whole curve")
    p.add_argument("--figure", metavar="PNG")

    sub.add_parser("pi1", parents=[common, curve], help="fundamental group of the complement")

    p = sub.add_parser("sweep", parents=[common], help="certify every curve in a degree range")
    p.add_argument("--d-min", type=int, default=4)
    p.add_argument("--d-max", type=int, default=12)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--figure", metavar="PNG")
    return parser


def run(argv=None):
    """Parse and dispatch; returns ``(exit code, output text, error text)``."""
    args = build_parser().parse_args(argv)
    try:
        if args.format not in ALLOWED[args.command]:
            raise UnsupportedFormat(f"--format {args.format} is not available for {args.command}")
        result = COMMANDS[args.command](args)
    except CertificationFailed as exc:
        return EXIT_CERT, "", f"error: {exc}\n"
    except InvariantViolation as exc:
        return EXIT_INTERNAL, "", f"internal error: {exc}\n"
    except (DomainError, CuspidalError) as exc:
        return EXIT_DOMAIN, "", f"error: {exc}\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(result.text)
        return result.code, "", ""
    return result.code, result.text, ""


def main(argv=None):
    try:
        code, out, err = run(argv)
    except Exception as exc:  # anything unforeseen is an internal failure
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())

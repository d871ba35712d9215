"""Command-line front end: ``waring verify|check|expand|binom|table|list-identities``.

Exit codes: 0 success / verified, 1 identity failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .arith import format_monomial
from .dsl import DSLSyntaxError, evaluate, parse, to_text
from .identities import IDENTITIES, thm1_rhs, thm2_rhs, verify
from .partitions import Partition, lassalle_binom, partitions_of, z_of
from .symfunc import complete_in_power, elementary_in_power, power_in_elementary, power_in_homogeneous

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

# per-identity defaults for flags the user leaves out
_DEFAULTS = {
    "k": 2, "t_order": 4, "i": 2, "j": 2, "w_order": 6, "n": 2, "r": 1, "u_order": 4,
    "alpha": Fraction(1), "lam": Partition((2, 1)),
}
_DEFAULT_VARS = {"thm6": 3, "app_factorization": 2}

TABLES = ("z", "binom", "waring-e", "waring-h", "h-in-p", "e-in-p", "thm1-e", "thm1-h", "thm2-h", "thm2-e")


class UsageError(Exception):
    pass


def _partition_arg(text):
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction_arg(text):
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="waring", description="Exact verification of Waring-type symmetric-function identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--vars", type=int, help="number of concrete variables N")
        p.add_argument("--t-order", type=int, help="inclusive truncation degree in t")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = sub.add_parser("verify", help="verify one identity instance")
    p.add_argument("--id", required=True, choices=sorted(IDENTITIES), dest="identity")
    common(p)
    p.add_argument("--u-order", type=int)
    p.add_argument("--w-order", type=int)
    p.add_argument("--alpha", type=_fraction_arg)
    p.add_argument("--mu", type=_partition_arg)
    p.add_argument("--lambda", type=_partition_arg, dest="lam")
    for name in ("k", "i", "j", "n", "r"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("check", help='compare two expressions: "lhs == rhs"')
    p.add_argument("equation")
    common(p)

    p = sub.add_parser("expand", help="expand an expression into concrete variables")
    p.add_argument("expression")
    common(p)

    p = sub.add_parser("binom", help="table of <mu/k>")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--max-k", type=int)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("table", help="export a coefficient table as CSV")
    p.add_argument("kind", choices=TABLES)
    p.add_argument("--n", type=int, help="weight for classical tables")
    p.add_argument("--k", type=int, help="k for thm tables")
    p.add_argument("--t-order", type=int, default=2)
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("list-identities", help="list identity ids")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    return parser


def _verify_params(args) -> dict:
    ident = args.identity
    vars_ = args.vars if args.vars is not None else _DEFAULT_VARS.get(ident, 6)

    def pick(name, attr=None):
        v = getattr(args, attr or name, None)
        return _DEFAULTS[name] if v is None else v

    family = ident.split("_")[0]
    if family in ("thm1", "thm2"):
        return {"k": pick("k"), "t_order": pick("t_order"), "N": vars_}
    if family == "thm3":
        return {"i": pick("i"), "j": pick("j"), "N": vars_}
    if ident in ("cor4", "app_genfun"):
        if args.mu is None:
            raise UsageError(f"{ident} needs --mu")
        if ident == "app_genfun":
            return {"mu": args.mu}
        return {"i": pick("i"), "j": args.mu.weight if args.j is None else args.j, "mu": args.mu}
    if ident == "cor5":
        return {"k": pick("k"), "j": pick("j"), "N": vars_}
    if ident == "thm5":
        return {"lam": pick("lam"), "alpha": pick("alpha"), "w_order": pick("w_order")}
    if ident == "thm6":
        return {"n": pick("n"), "r": pick("r"), "M": vars_, "u_order": pick("u_order")}
    # app_factorization: --n and --r bound the t and q degrees
    return {"n_max": args.n if args.n is not None else 3, "r_max": args.r if args.r is not None else 2,
            "M": vars_, "u_order": args.u_order if args.u_order is not None else 2}


def _cmd_verify(args):
    report = verify(args.identity, _verify_params(args))
    text = report.to_json() if args.json else report.to_text() + "\n"
    return text, EXIT_OK if report.verified else EXIT_FAILED


def _cmd_check(args):
    if args.equation.count("==") != 1:
        raise UsageError('check expects exactly one "==" between two expressions')
    lhs_text, rhs_text = args.equation.split("==")
    lhs, rhs = parse(lhs_text), parse(rhs_text)
    N = args.vars if args.vars is not None else 6
    t_order = args.t_order if args.t_order is not None else 0
    diff = evaluate(lhs, N, t_order) - evaluate(rhs, N, t_order)
    equal = diff.is_zero()
    result = {
        "identity": f"{to_text(lhs)} == {to_text(rhs)}",
        "params": {"t_order": t_order},
        "status": "verified" if equal else "failed",
        "checked_degree": t_order,
        "vars": N,
    }
    if not equal:
        (dt, du), poly = diff.sorted_items()[0]
        exps, c = poly.sorted_terms()[0]
        result["discrepancy"] = {"slot": format_monomial((dt, du), ("t", "u")),
                                 "monomial": format_monomial(exps), "difference": str(c)}
    if args.json:
        text = json.dumps(result, indent=2) + "\n"
    else:
        text = f"{result['identity']}: {result['status'].upper()} ({N} variables, through t^{t_order})\n"
        if not equal:
            d = result["discrepancy"]
            text += f"  lhs - rhs has {d['difference']} at {d['slot']} {d['monomial']}\n"
    return text, EXIT_OK if equal else EXIT_FAILED


def _cmd_expand(args):
    node = parse(args.expression)
    N = args.vars if args.vars is not None else 6
    t_order = args.t_order if args.t_order is not None else 0
    series = evaluate(node, N, t_order)
    if args.json:
        payload = {
            "expression": to_text(node),
            "vars": N,
            "t_order": t_order,
            "coefficients": [
                {"t": dt, "monomial": list(e), "coefficient": str(c)}
                for (dt, _), poly in series.sorted_items() for e, c in poly.sorted_terms()
            ],
        }
        return json.dumps(payload, indent=2) + "\n", EXIT_OK
    return series.to_string() + "\n", EXIT_OK


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _cmd_binom(args):
    mu = args.mu
    top = mu.weight if args.max_k is None else min(args.max_k, mu.weight)
    rows = [(k, lassalle_binom(mu, k)) for k in range(mu.length, top + 1)]
    return _csv(["k", "lassalle_binom"], rows), EXIT_OK


def _expr_rows(expr, extra=()):
    return [(*extra, str(mu), str(c)) for mu, c in sorted(expr.terms.items(), key=lambda kv: tuple(-p for p in kv[0]))]


def _cmd_table(args):
    kind = args.kind
    if kind.startswith("thm"):
        if args.k is None:
            raise UsageError(f"table {kind} needs --k")
        build = thm1_rhs if kind.startswith("thm1") else thm2_rhs
        slices = build(kind[-1], args.k, args.t_order)
        rows = []
        for d, expr in enumerate(slices):
            rows += _expr_rows(expr, (d,))
        return _csv(["t_degree", "partition", "coefficient"], rows), EXIT_OK
    if args.n is None:
        raise UsageError(f"table {kind} needs --n")
    n = args.n
    if kind == "z":
        rows = [(str(mu), mu.length, z_of(mu)) for mu in partitions_of(n)]
        return _csv(["partition", "length", "z"], rows), EXIT_OK
    if kind == "binom":
        rows = [(str(mu), k, lassalle_binom(mu, k)) for mu in partitions_of(n) for k in range(mu.length, n + 1)]
        return _csv(["partition", "k", "lassalle_binom"], rows), EXIT_OK
    builders = {
        "waring-e": power_in_elementary,
        "waring-h": power_in_homogeneous,
        "h-in-p": complete_in_power,
        "e-in-p": elementary_in_power,
    }
    return _csv(["partition", "coefficient"], _expr_rows(builders[kind](n))), EXIT_OK


def _cmd_list(args):
    if args.json:
        return json.dumps(IDENTITIES, indent=2) + "\n", EXIT_OK
    width = max(map(len, IDENTITIES))
    return "".join(f"{k:<{width}}  {v}\n" for k, v in IDENTITIES.items()), EXIT_OK


_COMMANDS = {
    "verify": _cmd_verify,
    "check": _cmd_check,
    "expand": _cmd_expand,
    "binom": _cmd_binom,
    "table": _cmd_table,
    "list-identities": _cmd_list,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = _COMMANDS[args.command](args)
    except (UsageError, DSLSyntaxError, ValueError) as exc:
        print(f"waring {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

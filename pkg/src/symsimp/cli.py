"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 typecheck or
precondition error, 3 audit violations found.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import audit as _audit
from .errors import FinError, WordSyntaxError
from .factor import factor_general, factor_monotone, factor_qm
from .fin import make_map
from .relations import family_names, normalize_qord
from .words import evaluate, parse, render, translate, typecheck

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VIOLATIONS = 0, 1, 2, 3

CHECKS = ("factorization", "generation", "push_perm", "normal_forms", "translation", "roundtrip")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="symsimp", description="Symmetric-simplicial operator calculus.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate a word at an anchor dimension")
    e.add_argument("word")
    e.add_argument("--at", type=int, required=True, dest="at_dim")

    n = sub.add_parser("normalize", help="normal form of a d/u word (no d0)")
    n.add_argument("word")
    n.add_argument("--at", type=int, dest="at_dim")

    f = sub.add_parser("factor", help="factor a map given by its value table")
    f.add_argument("--map", required=True, dest="map_literal")
    f.add_argument("--cod", type=int, required=True, dest="cod_dim")
    f.add_argument("--mode", choices=("qm", "monotone", "general"), default="qm")

    t = sub.add_parser("translate", help="rewrite between the d/s/t and d/u/t presentations")
    t.add_argument("word")
    t.add_argument("--target", choices=("du", "ds"), required=True)

    a = sub.add_parser("audit", help="run exhaustive checks")
    a.add_argument("--family", help="rule family name or 'all'")
    a.add_argument("--check", choices=CHECKS)
    a.add_argument("--max-dim", type=int, default=8)
    a.add_argument("--max-n", type=int, default=4)
    a.add_argument("--max-m", type=int, default=4)
    a.add_argument("--max-len", type=int)

    c = sub.add_parser("count", help="count quasi-monotonic maps [n] -> [m]")
    c.add_argument("n", type=int)
    c.add_argument("m", type=int)

    for sp in (e, n, f, t, a, c):
        sp.add_argument("--json", action="store_true")
    return p


def _parse_word(text):
    try:
        return parse(text)
    except WordSyntaxError as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc


def _parse_map(literal, cod):
    try:
        table = [int(x) for x in literal.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise UsageError(f"bad map literal {literal!r}: expected comma-separated integers") from exc
    if not table:
        raise UsageError("empty map literal")
    try:
        return make_map(len(table) - 1, cod, table)
    except FinError as exc:
        raise UsageError(f"{type(exc).__name__}: {exc}") from exc


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_eval(args):
    w = _parse_word(args.word)
    chain = typecheck(w, args.at_dim)
    f = evaluate(w, args.at_dim)
    payload = {"word": render(w), "dom": f.dom, "cod": f.cod, "table": list(f.table), "chain": list(chain)}
    _emit(args, payload, f"table {list(f.table)}\nchain {list(chain)}")
    return EXIT_OK


def _cmd_normalize(args):
    w = _parse_word(args.word)
    if args.at_dim is not None:
        typecheck(w, args.at_dim)
    nf = normalize_qord(w)
    _emit(args, {"word": render(nf)}, render(nf))
    return EXIT_OK


def _cmd_factor(args):
    f = _parse_map(args.map_literal, args.cod_dim)
    if args.mode == "qm":
        fac = factor_qm(f)
        alpha, beta, pi = list(fac.alpha.indices), list(fac.beta.indices), None
    elif args.mode == "monotone":
        fac = factor_monotone(f)
        alpha, beta, pi = list(fac.alpha), list(fac.beta), None
    else:
        fac = factor_general(f)
        alpha, beta, pi = list(fac.alpha), list(fac.beta), render(fac.pi)
    payload = {"dom": f.dom, "cod": f.cod, "alpha": alpha, "beta": beta}
    text = f"alpha={alpha} beta={beta}"
    if pi is not None:
        payload["pi"] = pi
        text += f" pi={pi!r}"
    payload["word"] = render(fac.spelling())
    _emit(args, payload, text + f"\nword {render(fac.spelling())}")
    return EXIT_OK


def _cmd_translate(args):
    w = _parse_word(args.word)
    out = translate(w, args.target)
    _emit(args, {"word": render(out)}, render(out))
    return EXIT_OK


def _run_audits(args):
    if args.family and args.check:
        raise UsageError("give either --family or --check, not both")
    if args.family:
        if args.family == "all":
            return _audit.audit_all_families(args.max_dim)
        if args.family not in family_names():
            raise UsageError(f"unknown family {args.family!r}; known: all, {', '.join(family_names())}")
        return [_audit.audit_family(args.family, args.max_dim)]
    check = args.check or "factorization"
    if check == "factorization":
        return [_audit.audit_unique_factorization(args.max_n, args.max_m)]
    if check == "generation":
        return [_audit.audit_generation(args.max_n, args.max_m)]
    if check == "push_perm":
        return [_audit.audit_push_perm(args.max_n, args.max_len or 4)]
    if check == "normal_forms":
        return [_audit.audit_normal_forms(args.max_len or 6, args.max_n)]
    if check == "translation":
        return [_audit.audit_translation(args.max_len or 4, args.max_n)]
    return [_audit.audit_roundtrip(args.max_len or 4, args.max_n)]


def _cmd_audit(args):
    reports = _run_audits(args)
    ok = all(r.passed for r in reports)
    if args.json:
        print(json.dumps({"reports": [r.to_json() for r in reports], "passed": ok}))
    else:
        for r in reports:
            print(r.summary())
            for v in r.violations:
                print(f"  {v.description}  lhs={v.lhs_table} rhs={v.rhs_table}")
    return EXIT_OK if ok else EXIT_VIOLATIONS


def _cmd_count(args):
    if args.n < 0 or args.m < 0:
        raise UsageError("n and m must be non-negative")
    k = _audit.count_qm(args.n, args.m)
    _emit(args, {"n": args.n, "m": args.m, "count": k}, str(k))
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "normalize": _cmd_normalize,
    "factor": _cmd_factor,
    "translate": _cmd_translate,
    "audit": _cmd_audit,
    "count": _cmd_count,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"symsimp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FinError as exc:
        print(f"symsimp: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run():
    sys.exit(main())

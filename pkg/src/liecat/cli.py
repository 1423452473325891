"""``liecat`` command line.  Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 domain error (or a failing verification), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import category as cat
from .endo import Endo, compose, format_map, inner_conjugate, parse_map
from .errors import LiecatError
from .liepoly import FreeLieAlgebra, default_names, format_expr, terms_json
from .parser import parse_scalar
from .scalar import Field
from .verify import SUITES, SuiteConfig, reports_json, run_all, run_suite

DEFAULT_DEGREE = 6


def _field_arg(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _names(text: str) -> tuple[str, ...]:
    """``3`` means default names of rank 3, otherwise a comma list."""
    text = text.strip()
    if text.isdigit():
        n = int(text)
        if n < 1:
            raise argparse.ArgumentTypeError("need at least one generator")
        return default_names(n)
    names = tuple(s.strip() for s in text.split(",") if s.strip())
    if not names or len(set(names)) != len(names):
        raise argparse.ArgumentTypeError(f"bad generator list {text!r}")
    for nm in names:
        if not nm.isidentifier() or nm == "w":
            raise argparse.ArgumentTypeError(f"bad generator name {nm!r}")
    return names


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _nonnegative(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets a subcommand-level flag override the global one only when given
    common.add_argument("--field", type=_field_arg, default=argparse.SUPPRESS, help="q or q-sqrt:<d>")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    p = argparse.ArgumentParser(prog="liecat", description="Exact computations in free Lie algebras.")
    p.add_argument("--field", type=_field_arg, default=Field(), help="q or q-sqrt:<d> (default q)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", parents=[common], help="list the Lyndon basis")
    b.add_argument("--gens", type=_names, default=default_names(2))
    b.add_argument("--max-degree", type=_positive, default=DEFAULT_DEGREE)

    e = sub.add_parser("eval", parents=[common], help="normalize an expression")
    e.add_argument("expr")
    e.add_argument("--gens", type=_names, default=default_names(2))
    e.add_argument("--max-degree", type=_positive, default=DEFAULT_DEGREE)

    en = sub.add_parser("endo", parents=[common], help="endomorphisms given by generator images")
    en.add_argument("action", choices=("apply", "compose", "conjugate"))
    en.add_argument("--map", required=True, help='e.g. "x=>[x,y]; y=>y"')
    en.add_argument("--map2", help="second map for compose (applied first)")
    en.add_argument("--expr", help="element for apply")
    en.add_argument("--a", help="scalar for conjugate")
    en.add_argument("--gens", type=_names, default=default_names(2))
    en.add_argument("--max-degree", type=_positive, default=DEFAULT_DEGREE)

    d = sub.add_parser("duality", parents=[common], help="points and separating witnesses")
    d.add_argument("action", choices=("check", "separate"))
    d.add_argument("--src-gens", type=_names, required=True)
    d.add_argument("--tgt-gens", type=_names, required=True)
    d.add_argument("--map", required=True, help="images of the source generators")
    d.add_argument("--map2", help="second morphism for separate")
    d.add_argument("--point", help='point of the target, e.g. "x1=>x; x2=>[x,y]" (check only)')
    d.add_argument("--budget-degree", type=_positive, default=4)
    d.add_argument("--max-degree", type=_positive, default=DEFAULT_DEGREE)

    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("suite", choices=("all", *SUITES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=_nonnegative)
    v.add_argument("--max-degree", type=_positive)
    v.add_argument("--gens", type=_positive)
    v.add_argument("--report", type=Path)
    return p


def _emit(obj, fmt: str, text: str) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False) if fmt == "json" else text)


def cmd_basis(args) -> int:
    alg = FreeLieAlgebra(args.gens, args.max_degree, args.field)
    table = alg.table
    rows = [
        {"index": h.index, "degree": h.degree, "word": [args.gens[k] for k in h.word], "bracketing": alg.bracketing(h.index)}
        for h in table.words
    ]
    dims = table.dimensions()
    text = "\n".join(r["bracketing"] for r in rows)
    text += "\n# dimensions: " + " ".join(f"{d}:{k}" for d, k in enumerate(dims, start=1))
    _emit({"gens": list(args.gens), "max_degree": args.max_degree, "words": rows, "dimensions": dims}, args.format, text)
    return 0


def cmd_eval(args) -> int:
    alg = FreeLieAlgebra(args.gens, args.max_degree, args.field)
    p = alg.parse(args.expr)
    _emit({"expr": format_expr(p), "terms": terms_json(p)}, args.format, format_expr(p))
    return 0


def _map_json(phi: Endo) -> dict:
    return {nm: format_expr(im) for nm, im in zip(phi.alg.names, phi.images)}


def cmd_endo(args) -> int:
    alg = FreeLieAlgebra(args.gens, args.max_degree, args.field)
    phi = Endo(alg, parse_map(args.map, alg))
    if args.action == "apply":
        if args.expr is None:
            raise _Usage("endo apply needs --expr")
        out = phi(alg.parse(args.expr))
        _emit({"result": format_expr(out), "terms": terms_json(out)}, args.format, format_expr(out))
        return 0
    if args.action == "compose":
        if args.map2 is None:
            raise _Usage("endo compose needs --map2")
        res = compose(phi, Endo(alg, parse_map(args.map2, alg)))
    else:
        if args.a is None:
            raise _Usage("endo conjugate needs --a")
        a = parse_scalar(args.a, alg.field)
        res = inner_conjugate(a, phi)
    _emit(_map_json(res), args.format, format_map(res))
    return 0


def _point_json(nu: cat.Morphism) -> dict:
    return {nm: format_expr(im) for nm, im in zip(nu.source.names, nu.images)}


def cmd_duality(args) -> int:
    fld = args.field
    src = cat.free_object(args.src_gens, args.max_degree, fld)
    tgt = cat.free_object(args.tgt_gens, args.max_degree, fld)
    s1 = cat.Morphism(src, tgt, parse_map(args.map, tgt, src.names))
    if args.action == "separate":
        if args.map2 is None:
            raise _Usage("duality separate needs --map2")
        s2 = cat.Morphism(src, tgt, parse_map(args.map2, tgt, src.names))
        res = cat.find_separating_point(s1, s2, budget=args.budget_degree)
        payload = {"found": res.found, "tried": res.tried, "budget_degree": res.budget}
        if res.found:
            payload["point"] = _point_json(res.point)
            payload["generator"] = res.generator
            payload["values"] = [format_expr(v) for v in res.values]
            text = f"separated at {res.generator}: {format_map(res.point.images, tgt.names)}"
        else:
            payload["note"] = res.note
            text = f"NotFound ({res.note}; {res.tried} candidates, budget degree {res.budget})"
        _emit(payload, args.format, text)
        return 0
    h_cap = max(1, _degree(s1)) * args.budget_degree
    h = cat.default_h(h_cap, fld)
    if args.point:
        points = [tuple(parse_map(args.point, h, tgt.names))]
    else:
        points = list(cat.candidate_points(tgt, h, args.budget_degree))
    bad = None
    for values in points:
        nu = cat.alpha_inv(values, tgt, h)
        lhs = cat.alpha(cat.tilde_map(s1, nu))
        rhs = cat.poly_map(s1, values, h)
        if lhs != rhs:
            bad = (values, lhs, rhs)
            break
    payload = {"holds": bad is None, "points_checked": len(points)}
    if bad is not None:
        payload["counterexample"] = {"point": [format_expr(v) for v in bad[0]], "lhs": [format_expr(v) for v in bad[1]], "rhs": [format_expr(v) for v in bad[2]]}
    text = f"duality square holds on {len(points)} point(s)" if bad is None else "duality square FAILS"
    _emit(payload, args.format, text)
    return 0 if bad is None else 1


def _degree(s: cat.Morphism) -> int:
    return max((im.degree for im in s.images), default=1)


def cmd_verify(args) -> int:
    field = getattr(args, "field_text", None)
    cfg = SuiteConfig(seed=args.seed, cases=args.cases, max_degree=args.max_degree, n_gens=args.gens, field=field)
    reports = run_all(cfg) if args.suite == "all" else [run_suite(args.suite, cfg)]
    out = reports_json(reports)
    if args.report is not None:
        args.report.write_text(out + "\n", encoding="utf-8")
    if args.format == "json" or args.report is None:
        print(out)
    else:
        for r in reports:
            print(f"{r.suite}: {r.verdict} ({r.passed}/{r.cases})")
    return 0 if all(r.verdict == "PASS" for r in reports) else 1


class _Usage(Exception):
    pass


COMMANDS = {"basis": cmd_basis, "eval": cmd_eval, "endo": cmd_endo, "duality": cmd_duality, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.field_text = None if args.field.d is None else str(args.field)
    try:
        return COMMANDS[args.command](args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"liecat: error: {exc}", file=sys.stderr)
        return 2
    except LiecatError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

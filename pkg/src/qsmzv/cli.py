"""Command line entry point: eval, identity, verify and limit."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import QSMZVError
from .exprlang import Env, Evaluator, format_value, parse
from .evaluation import QContext, limit_probe
from .harness import SUITES, run_suite
from .series import CATALOG, check_identity


def _cmd_eval(args) -> int:
    ctx = None
    if args.q is not None:
        kw = {} if args.tol is None else {"tail_tol": args.tol}
        ctx = QContext.parse(args.q, **kw)
    value = Evaluator(Env(ctx=ctx, M=args.M)).ev(parse(args.expr))
    print(format_value(value))
    return 0


def _word(src: str):
    return Evaluator(Env()).ev(parse(src))


def _emit(rep, fmt: str):
    print(rep.to_csv() if fmt == "csv" else rep.to_json(), end="" if fmt == "csv" else "\n")
    return rep.exit_code()


def _cmd_identity(args) -> int:
    params = None
    if args.k is not None:
        params = [tuple(int(x) for x in args.k.split(","))]
    elif args.w is not None or args.w2 is not None:
        params = [_word(args.w or "1"), _word(args.w2 or "1")]
    rep = check_identity(args.id, args.order, params)
    return _emit(rep, args.format)


def _cmd_verify(args) -> int:
    params = {"wt_max": args.wt_max, "M": args.M, "q": args.q, "order": args.order,
              "seed": args.seed, "grid": args.grid}
    return _emit(run_suite(args.suite, params), args.format)


def _cmd_limit(args) -> int:
    w = _word(args.expr)
    grid = [float(x) for x in args.grid.split(",")]
    rows = limit_probe(w, grid, args.tol)
    print(json.dumps({"expr": args.expr, "rows": rows}, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qsmzv", description="q-analogues of symmetric MZVs")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--q", help="p/q for exact mode, a decimal for float mode")
    p.add_argument("--M", type=int, help="default truncation")
    p.add_argument("--tol", type=float, help="tail tolerance for Zq")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("identity", help="check one generating-series identity")
    p.add_argument("--id", required=True, choices=sorted(CATALOG))
    p.add_argument("--order", type=int, default=5)
    p.add_argument("--k", help="index such as 1,2 (for L58 and B10)")
    p.add_argument("--w", help="first word (expression)")
    p.add_argument("--w2", help="second word (expression)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_identity)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--wt-max", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--q")
    p.add_argument("--order", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--grid")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("limit", help="probe Zq(w) as q approaches 1")
    p.add_argument("--expr", required=True)
    p.add_argument("--grid", default="0.5,0.9,0.99,0.999")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(fn=_cmd_limit)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except QSMZVError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``nullcone-smt <group> <action> [options]``.

JSON is written to stdout by default; ``--format table`` prints a readable
(but not stable) rendering.  Exit codes follow :data:`EXIT_CODES`.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from . import serialize as ser
from .errors import DomainError, InvariantViolation, ParameterError, ResourceError
from .nullcone import (
    NullconeContext,
    basis_independence_check,
    dim_gl,
    dim_sp,
    enumerate_n_standard,
    n_standard_up_to,
    n_straighten,
    omega_sum_for,
    sample_nullcone_point,
    theta_element,
)
from .patterns import (
    GTPoset,
    cone_inequalities,
    enumerate_cone_points,
    pattern_from_tableau,
    split_glued,
    tableau_from_pattern,
)
from .straighten import WeightConfig, straighten
from .tableaux import (
    Lattice,
    assemble,
    enumerate_lattice,
    enumerate_ssyt,
    enumerate_standard,
    xi,
    xi_inverse,
)
from .verify import run_all

EXIT_CODES = {DomainError: 1, ParameterError: 2, ResourceError: 3, InvariantViolation: 4}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit on its own
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


# --------------------------------------------------------------------------
# helpers


def _lattice(args) -> Lattice:
    kind = args.lattice
    if kind == "N":
        return Lattice.N(_need(args, "k"), _need(args, "n"))
    return Lattice(kind, (_need(args, "n"), _need(args, "m")))


def _need(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise ParameterError(f"--{name} is required here")
    return value


def _poset(kind: str, params: Sequence[int]) -> GTPoset:
    if kind == "gamma" and len(params) == 2:
        kind = "gamma_nm"
    return GTPoset(kind, tuple(params))


def _read_json(source: str):
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid JSON input: {exc}") from None


# --------------------------------------------------------------------------
# handlers; each returns a JSON-serializable object


def cmd_enumerate(args):
    what = args.what
    if what == "lattice":
        return [ser.one_line_to_json(t) for t in enumerate_lattice(_lattice(args), args.guard)]
    if what == "standard":
        lattice = _lattice(args)
        return [ser.double_to_json(t) for t in enumerate_standard(ser.parse_shape(args.shape), lattice,
                                                                  guard=args.guard)]
    if what == "nstandard":
        ctx = NullconeContext(_need(args, "k"), _need(args, "n"))
        return [ser.double_to_json(t) for t in enumerate_n_standard(ser.parse_shape(args.shape), ctx, args.guard)]
    if what == "ssyt":
        floor = ser.parse_int_list(args.floor) if args.floor else None
        out = enumerate_ssyt(ser.parse_shape(args.shape), _need(args, "max_entry"), floor, args.guard)
        return [ser.ssyt_to_json(T) for T in out]
    poset = _poset(args.poset, ser.parse_int_list(args.params))
    points = enumerate_cone_points(poset, ser.parse_shape(args.top_row), args.guard)
    return [ser.pattern_to_json(p) for p in points]


def cmd_straighten(args):
    n, m = args.n, args.m
    product = ser.parse_product(args.product, n, m)
    comb = straighten(product, Lattice.D(n, m), WeightConfig(n, m, args.weight_base))
    return ser.combination_to_json(comb)


def cmd_nullcone(args):
    action = args.action
    k, n = args.k, _need(args, "n")
    ctx = NullconeContext(k, n, args.weight_base)
    if action == "straighten":
        return ser.combination_to_json(n_straighten(ser.parse_product(args.product, k, 2 * n), ctx))
    if action == "count":
        shape = ser.parse_shape(args.shape)
        count = len(enumerate_n_standard(shape, ctx, args.guard))
        dims = {}
        if shape.length <= min(k, n):
            dims = {"dim_gl": dim_gl(shape, k), "dim_sp": dim_sp(shape, n)}
        return {"shape": list(shape), "count": count, **dims}
    if action == "omega-sum":
        return ser.omega_sum_to_json(omega_sum_for(ser.parse_index_set(args.J), ctx))
    if action == "theta":
        s = omega_sum_for(ser.parse_index_set(args.J), ctx)
        return ser.poly_to_json(theta_element(ser.parse_index_set(args.I), s, ctx))
    if action == "sample":
        return ser.matrix_to_json(sample_nullcone_point(ctx, args.seed))
    candidates = n_standard_up_to(args.degree, ctx)
    report = basis_independence_check(candidates, ctx, args.points, args.seed)
    return ser.independence_to_json(report)


def cmd_convert(args):
    action = args.action
    if action == "tableau-to-pattern":
        T = ser.parse_tableau_rows(args.tableau) if args.tableau else ser.ssyt_from_json(_read_json(args.input))
        return ser.pattern_to_json(pattern_from_tableau(T, _need(args, "m")))
    if action == "pattern-to-tableau":
        if args.input:
            p = ser.pattern_from_json(_read_json(args.input))
        elif args.rows:
            p = ser.pattern_from_json({"poset": {"kind": "gamma", "m": _need(args, "m")},
                                       "rows": ser.parse_pattern_rows(args.rows)})
        else:
            raise ParameterError("pattern-to-tableau needs --input or --rows")
        if p.poset.kind == "gamma":
            return ser.ssyt_to_json(tableau_from_pattern(p))
        rows, cols = p.poset.halves
        minus, plus = (tableau_from_pattern(q) for q in split_glued(p.check()))
        return {"minus": ser.ssyt_to_json(minus), "plus": ser.ssyt_to_json(plus),
                "tableau": ser.double_to_json(assemble(minus, plus, rows, cols))}
    n, m = _need(args, "n"), _need(args, "m")
    if action == "xi":
        (t,) = ser.parse_product(args.tableau, n, m)
        return {"K": list(xi(t))}
    return ser.one_line_to_json(xi_inverse(ser.parse_index_set(args.K), n, m))


def cmd_cone(args):
    return ser.hrep_to_json(cone_inequalities(_poset(args.poset, ser.parse_int_list(args.params))))


def cmd_verify(args):
    results = run_all(max_size=args.max_size, seed=args.seed)
    return {
        "passed": all(r.passed for r in results),
        "checks": [{"id": r.ident, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
    }


# --------------------------------------------------------------------------
# table rendering


def _cell(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render_table(obj) -> str:
    if isinstance(obj, dict) and "checks" in obj:
        lines = [f"[{'PASS' if c['passed'] else 'FAIL'}] {c['id']:>2} {c['name']}: {c['detail']}"
                 for c in obj["checks"]]
        lines.append("ALL PASS" if obj["passed"] else "SOME CHECKS FAILED")
        return "\n".join(lines)
    if isinstance(obj, dict):
        width = max((len(k) for k in obj), default=0)
        return "\n".join(f"{k.ljust(width)}  {_cell(v)}" for k, v in obj.items())
    if isinstance(obj, list) and obj and all(isinstance(r, dict) for r in obj):
        keys = list(obj[0])
        table = [keys] + [[_cell(r.get(k, "")) for k in keys] for r in obj]
        widths = [max(len(row[i]) for row in table) for i in range(len(keys))]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in table)
    if isinstance(obj, list):
        return "\n".join(_cell(r) for r in obj)
    return _cell(obj)


# --------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--guard", type=int, default=None, help="enumeration limit (default: $NULLCONE_GUARD or 10^7)")

    parser = _Parser(prog="nullcone-smt", description="Standard monomials, GT patterns and the symplectic nullcone.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate lattices, tableaux and cone points")
    p.add_argument("what", choices=("lattice", "standard", "nstandard", "ssyt", "cone-points"))
    p.add_argument("--lattice", choices=("D", "L", "Pl", "N"), default="D")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--shape", default="")
    p.add_argument("--max-entry", type=int)
    p.add_argument("--floor", default=None, help="column floor, e.g. 1,3")
    p.add_argument("--poset", choices=("gamma", "gamma_nm", "nullcone"), default="gamma")
    p.add_argument("--params", default="", help="poset parameters, e.g. 3,4")
    p.add_argument("--top-row", default="")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("straighten", parents=[common], help="straighten a product of minors in D(n,m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--product", required=True, help='e.g. "[1:2],[2:1]"')
    p.add_argument("--weight-base", type=int, default=None)
    p.set_defaults(func=cmd_straighten)

    p = sub.add_parser("nullcone", parents=[common], help="operations on the nullcone N_{k,2n}")
    p.add_argument("action", choices=("straighten", "count", "omega-sum", "theta", "sample", "independence"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int)
    p.add_argument("--product", default="")
    p.add_argument("--shape", default="")
    p.add_argument("--J", default="")
    p.add_argument("--I", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--points", type=int, default=None)
    p.add_argument("--weight-base", type=int, default=None)
    p.set_defaults(func=cmd_nullcone)

    p = sub.add_parser("convert", parents=[common], help="tableau/pattern conversions and the map xi")
    p.add_argument("action", choices=("tableau-to-pattern", "pattern-to-tableau", "xi", "xi-inverse"))
    p.add_argument("--input", default=None, help="JSON file, or - for stdin")
    p.add_argument("--tableau", default=None, help='rows as "1125/2356/3467", or "[I:J]" for xi')
    p.add_argument("--rows", default=None, help='pattern rows, top first, as "2,1,0/2,0/1"')
    p.add_argument("--K", default="")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("cone", parents=[common], help="H-representation of a lattice cone")
    p.add_argument("action", choices=("inequalities",))
    p.add_argument("--poset", choices=("gamma", "gamma_nm", "nullcone"), required=True)
    p.add_argument("--params", required=True)
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("scope", choices=("all",))
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler: Callable = args.func
    try:
        result = handler(args)
    except tuple(EXIT_CODES) as exc:
        err.write(f"{type(exc).__name__}: {exc}\n")
        return next(code for cls, code in EXIT_CODES.items() if isinstance(exc, cls))
    except OSError as exc:
        err.write(f"ParameterError: {exc}\n")
        return 2
    if args.format == "table":
        out.write(render_table(result) + "\n")
    else:
        out.write(json.dumps(result, indent=2) + "\n")
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())

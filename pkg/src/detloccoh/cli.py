"""Command-line front end.

Exit codes: 0 on success, 1 on a usage error, 2 when a verification check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import characters as ch
from . import quiver as qv
from .grothendieck import NotEffective
from .loccoh import h_class_D, h_class_Q, h_class_S, iterate_loccoh, start_expr
from .lyubeznik import lyub_gf, lyub_table
from .shapes import bott_flag_cohomology, bott_tilde, product_space_cohomology
from .verify import REGISTRY, SUITES, run_checks

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        p.add_argument(f"--{name}", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="detloccoh", description="Local cohomology of generic determinantal rings.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    fmt = dict(choices=["text", "json", "latex"], default="text")

    p = sub.add_parser("loccoh", help="H_{O_t}(M) for M = S, D_p or Q_p")
    _common(p, "m", "n", "p", "t")
    p.add_argument("--start", choices=["S", "D", "Q"], default="S")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("iterate", help="iterated local cohomology")
    _common(p, "m", "n", "p")
    p.add_argument("--start", choices=["S", "D", "Q"], default="S")
    p.add_argument("--chain", type=_int_list, required=True,
                   help="orbit indices in application order, innermost first (1,0 applies O_1 then O_0)")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("lyubeznik", help="Lyubeznik generating function and table")
    _common(p, "m", "n", "p")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("character", help="GL characters, syzygies and witness pairings")
    _common(p, "m", "n", "p", "a", "d")
    p.add_argument("--kind", choices=["S", "D", "Q", "Ix", "Irect", "haxd", "syzygy", "witness"], default="D")
    p.add_argument("--x", type=_int_list, default=None, help="partition for kind Ix")
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--format", **fmt)

    p = sub.add_parser("bott", help="Bott's algorithm on a weight")
    _common(p, "p", "n")
    p.add_argument("--weight", type=_int_list, required=True)
    p.add_argument("--part", choices=["tilde", "fiberwise", "global", "product"], default="tilde")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("quiver", help="quiver representations D^(p), Q^(p)")
    _common(p, "n", "p")
    p.add_argument("--start", choices=["D", "Q"], default="Q")
    p.add_argument("--ext", default=None, metavar="KIND:P", help="also report dim Ext^1 into this representation")
    p.add_argument("--format", **fmt)

    p = sub.add_parser("verify", help="run named property checks")
    p.add_argument("--suite", default="all", help=f"all, a suite ({', '.join(SUITES)}) or a check name")
    p.add_argument("--max", type=int, default=None, help="cap on the size parameter of every check")
    p.add_argument("--list", action="store_true", help="list check names and exit")
    p.add_argument("--format", **fmt)
    return parser


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {' '.join(missing)}")


def _shape(args) -> None:
    _need(args, "m", "n")
    if not args.m >= args.n >= 1:
        raise UsageError(f"need m >= n >= 1, got m={args.m}, n={args.n}")


def _no_latex(args) -> None:
    if args.format == "latex":
        raise UsageError(f"{args.command}: latex output is only available for lyubeznik")


def cmd_loccoh(args) -> str:
    _shape(args)
    _need(args, "t")
    _no_latex(args)
    if args.start != "S":
        _need(args, "p")
    if args.start == "S":
        cls = h_class_S(args.m, args.n, args.t)
    elif args.start == "D":
        cls = h_class_D(args.m, args.n, args.t, args.p)
    else:
        if args.m != args.n:
            raise UsageError("Q_p only exists for square matrices (m = n)")
        cls = h_class_Q(args.n, args.t, args.p)
    mods = start_expr(args.start, args.p if args.p is not None else args.n, args.m, args.n, args.t)
    if args.format == "json":
        return _dumps({
            "class": cls.to_json(),
            "modules": [{"degree": j, "module": e.to_json()} for j, e in mods.items()],
        })
    lines = [f"class: {cls}"]
    lines += [f"H^{j} = {e}" for j, e in mods.items()] or ["all groups vanish"]
    return "\n".join(lines)


def cmd_iterate(args) -> str:
    _shape(args)
    _no_latex(args)
    if args.start != "S":
        _need(args, "p")
    if args.start == "Q" and args.m != args.n:
        raise UsageError("Q_p only exists for square matrices (m = n)")
    if not args.chain:
        raise UsageError("iterate: --chain must be nonempty")
    # the flag lists functors innermost first; the engine wants outermost first
    chain = list(reversed(args.chain))
    table = iterate_loccoh(args.start, args.p if args.p is not None else args.n, args.m, args.n, chain)
    if args.format == "json":
        return _dumps(table.to_json())
    return str(table)


def cmd_lyubeznik(args) -> str:
    _shape(args)
    _need(args, "p")
    f = lyub_gf(args.m, args.n, args.p)
    table = lyub_table(f, args.m, args.n, args.p)
    if args.format == "latex":
        return table.render_latex()
    if args.format == "json":
        return _dumps({"gf": f.to_json(), "dim": table.dim, "table": table.as_lists()})
    return f"L = {f}\n" + table.render_text()


def cmd_character(args) -> str:
    _shape(args)
    _no_latex(args)
    m, n = args.m, args.n
    if args.kind == "witness":
        _need(args, "p", "a", "d")
        value = ch.witness_pairing(m, n, args.p, args.a, args.d)
        return _dumps({"pairing": value.to_json()}) if args.format == "json" else str(value)
    if args.kind in ("haxd", "syzygy"):
        _need(args, "a", "d")
        series = (ch.h_axd if args.kind == "haxd" else ch.syzygy_gf)(m, n, args.a, args.d)
    elif args.kind == "Ix":
        if args.x is None:
            raise UsageError("character --kind Ix needs --x")
        series = ch.char_of("Ix", m, n, x=args.x, bound=args.bound)
    elif args.kind == "Irect":
        _need(args, "a", "d")
        series = ch.char_of("Irect", m, n, a=args.a, d=args.d, bound=args.bound)
    else:
        if args.kind != "S":
            _need(args, "p")
        series = ch.char_of(args.kind, m, n, args.p, bound=args.bound)
    if args.format == "json":
        return _dumps(series.to_json())
    return series.render() or "no terms"


def _bott_text(res) -> dict:
    if res.vanishes:
        return {"vanishes": True}
    return {"vanishes": False, "degree": res.degree, "weight": list(res.weight.entries)}


def cmd_bott(args) -> str:
    _no_latex(args)
    w = args.weight
    if args.part == "tilde":
        res = bott_tilde(w)
    else:
        _need(args, "p")
        if not 0 <= args.p <= len(w):
            raise UsageError(f"need 0 <= p <= {len(w)}")
        lam, mu = w[: args.p], w[args.p:]
        if args.part == "product":
            res = product_space_cohomology(lam, mu, len(w))
        else:
            res = bott_flag_cohomology(lam, mu, len(w), args.part)
    if args.format == "json":
        return _dumps(_bott_text(res))
    return str(res) if not res.vanishes else "vanishes"


def _parse_rep(text: str, n: int) -> qv.QuiverRep:
    try:
        kind, p = text.split(":")
        return qv.build_rep(kind, int(p), n)
    except ValueError as exc:
        raise UsageError(f"--ext expects KIND:P such as Q:1 ({exc})")


def cmd_quiver(args) -> str:
    _need(args, "n", "p")
    _no_latex(args)
    r = qv.build_rep(args.start, args.p, args.n)
    mult = qv.decompose_addQ(r)
    data = {
        "dims": list(r.dims),
        "relations": qv.check_relations(r),
        "socle": [list(x) for x in qv.simple_socle(r)],
        "addQ": list(mult) if not isinstance(mult, qv.AddQFailure) else {"fails_at": mult.vertex},
    }
    if args.ext:
        data["ext1"] = qv.ext1_dim(r, _parse_rep(args.ext, args.n))
    if args.format == "json":
        return _dumps(data)
    lines = [r.dump(), f"relations hold: {data['relations']}",
             "socle: " + ", ".join(f"D^({v}) x{k}" for v, k in qv.simple_socle(r))]
    if isinstance(mult, qv.AddQFailure):
        lines.append(f"not in add(Q): {mult.reason}")
    else:
        lines.append("add(Q): " + (" + ".join(f"{k}*Q^({s})" for s, k in enumerate(mult) if k) or "0"))
    if args.ext:
        lines.append(f"dim Ext^1({args.start}:{args.p}, {args.ext}) = {data['ext1']}")
    return "\n".join(lines)


def cmd_verify(args) -> tuple[str, int]:
    _no_latex(args)
    if args.list:
        return "\n".join(f"{c.suite:13s} {c.name:28s} {c.description}" for c in REGISTRY.values()), EXIT_OK
    try:
        runs = run_checks(args.suite, args.max)
    except KeyError as exc:
        raise UsageError(str(exc.args[0]))
    failed = [r for r in runs if not r.passed]
    code = EXIT_VERIFY if failed else EXIT_OK
    if args.format == "json":
        return _dumps([{"name": r.name, "passed": r.passed, "detail": r.detail} for r in runs]), code
    # timings are left out so that repeated runs print identical bytes
    lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in runs]
    lines.append(f"{len(runs) - len(failed)}/{len(runs)} checks passed")
    return "\n".join(lines), code


COMMANDS = {
    "loccoh": cmd_loccoh,
    "iterate": cmd_iterate,
    "lyubeznik": cmd_lyubeznik,
    "character": cmd_character,
    "bott": cmd_bott,
    "quiver": cmd_quiver,
    "verify": cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except (ValueError, NotEffective) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    text, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    print(text, file=out)
    return code


def main() -> None:
    sys.exit(run())

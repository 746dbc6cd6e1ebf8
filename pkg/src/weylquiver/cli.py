"""Command-line front end.

    weylquiver gch --type A --rank 1 --lambda 2
    weylquiver betti --type A --rank 1 --lambda 2 --alpha 1 --format json
    weylquiver verify --type A --rank 2 --lambda 2,0 --depth 2

Weights are given in fundamental-weight coordinates and alpha in simple-root
coordinates, both comma-separated, nodes in Bourbaki order (see ``info``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import chars
from .cartan import CartanDatum, UnsupportedTypeError, build_cartan, is_dominant
from .exactpoly import LaurentPoly
from .fermionic import BudgetExceeded, fermionic_M
from .quiver import betti, dim_M, kl_polynomial, nonempty_alphas, poincare_polynomial
from .typea import chari_loktev_polynomial, count_row_increasing_tableaux
from .verify import run_checks
from .weylmod import graded_character, loewy_report, minuscule_nodes


class UsageError(Exception):
    pass


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fmt_vec(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _weight_text(v: Sequence[int]) -> str:
    parts = [(f"w{i + 1}" if c == 1 else f"{c}*w{i + 1}") for i, c in enumerate(v) if c]
    return " + ".join(parts) if parts else "0"


def _check_len(d: CartanDatum, name: str, v: Sequence[int]) -> None:
    if len(v) != d.rank:
        raise UsageError(f"--{name} has {len(v)} entries, type {d.name} needs {d.rank}")


def _dominant(d: CartanDatum, name: str, v: Sequence[int]) -> tuple[int, ...]:
    _check_len(d, name, v)
    if not is_dominant(v):
        raise UsageError(f"--{name} {_fmt_vec(v)} is not dominant")
    return tuple(v)


def _alpha(d: CartanDatum, v: Sequence[int]) -> tuple[int, ...]:
    _check_len(d, "alpha", v)
    if any(a < 0 for a in v):
        raise UsageError(f"--alpha {_fmt_vec(v)} is not in Q_+")
    return tuple(v)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _poly_out(poly: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return _dump(poly.to_json())
    if fmt == "csv":
        return _csv([["exp", "coef"]] + [[e, c] for e, c in poly.items()])
    return str(poly)


def cmd_info(d: CartanDatum, args) -> tuple[int, str]:
    info = {
        "type": d.name,
        "rank": d.rank,
        "cartan": [list(r) for r in d.cartan],
        "adjacency": [[i + 1, j + 1] for i, j in d.adjacency],
        "positive_roots": len(d.positive_roots),
        "minuscule_nodes": [i + 1 for i in minuscule_nodes(d)],
    }
    if args.format == "json":
        return 0, _dump(info)
    if args.format == "csv":
        return 0, _csv([["node_a", "node_b"]] + info["adjacency"])
    lines = [
        f"type {d.name} (Bourbaki numbering, nodes 1..{d.rank})",
        "edges: " + ", ".join(f"{i}-{j}" for i, j in info["adjacency"]),
        "Cartan matrix:",
        *("  " + " ".join(f"{x:2d}" for x in row) for row in d.cartan),
        f"positive roots: {info['positive_roots']}",
        "minuscule nodes: " + (", ".join(map(str, info["minuscule_nodes"])) or "none"),
    ]
    return 0, "\n".join(lines)


def cmd_fermionic(d, args):
    lam = _dominant(d, "lambda", args.lam)
    mu = _dominant(d, "mu", args.mu)
    return 0, _poly_out(fermionic_M(d, lam, mu, max_terms=args.max_terms), args.format)


def cmd_kl(d, args):
    lam = _dominant(d, "lambda", args.lam)
    mu = _dominant(d, "mu", args.mu)
    fermionic_M(d, lam, mu, max_terms=args.max_terms)  # budget check; result is memoised
    return 0, _poly_out(kl_polynomial(d, lam, mu), args.format)


def _layers_out(d, gch, fmt, header: list[str] | None = None) -> str:
    if fmt == "csv":
        rows = [["degree"] + [f"mu_{i + 1}" for i in range(d.rank)] + ["mult"]]
        for k in gch.degrees:
            rows += [[k, *mu, m] for mu, m in gch.layers[k].items()]
        return _csv(rows)
    lines = list(header or [f"graded character of W({_weight_text(gch.lam)}), type {d.name}"])
    for k in gch.degrees:
        comps = " + ".join(
            (f"V({_weight_text(mu)})" if m == 1 else f"{m} V({_weight_text(mu)})")
            for mu, m in gch.layers[k].items()
        )
        lines.append(f"  degree {k}: {comps}")
    return "\n".join(lines)


def cmd_gch(d, args):
    lam = _dominant(d, "lambda", args.lam)
    gch = graded_character(d, lam, max_terms=args.max_terms)
    if args.format == "json":
        return 0, _dump(gch.to_json())
    return 0, _layers_out(d, gch, args.format)


def cmd_loewy(d, args):
    lam = _dominant(d, "lambda", args.lam)
    rep = loewy_report(d, lam, max_terms=args.max_terms)
    if args.format == "json":
        return 0, _dump(rep)
    gch = graded_character(d, lam, max_terms=args.max_terms)
    header = [
        f"W({_weight_text(lam)}), type {d.name}: rigid, unique Loewy series "
        "(radical = socle = grading filtration)",
        f"  Loewy length {rep['loewy_length']}, socle V({_weight_text(rep['socle'])}), "
        f"dimension {rep['dimension']}",
        "  Loewy layers:",
    ]
    return 0, _layers_out(d, gch, args.format, header)


def _alphas(d, lam, args) -> list[tuple[int, ...]]:
    if args.alpha is not None:
        return [_alpha(d, args.alpha)]
    return nonempty_alphas(d, lam)


def cmd_betti(d, args):
    lam = _dominant(d, "lambda", args.lam)
    graded_character(d, lam, max_terms=args.max_terms)
    vecs = [betti(d, a, lam) for a in _alphas(d, lam, args)]
    if args.format == "json":
        payload = vecs[0].to_json() if args.alpha is not None else [v.to_json() for v in vecs]
        return 0, _dump(payload)
    if args.format == "csv":
        width = max(len(v.betti) for v in vecs)
        rows = [[f"alpha_{i + 1}" for i in range(d.rank)] + ["d"] + [f"b_{j}" for j in range(width)]]
        for v in vecs:
            rows.append([*v.alpha, v.d, *v.betti] + [""] * (width - len(v.betti)))
        return 0, _csv(rows)
    lines = [f"alpha={_fmt_vec(v.alpha)} d={v.d} betti={_fmt_vec(v.betti)}" for v in vecs]
    return 0, "\n".join(lines)


def cmd_poincare(d, args):
    lam = _dominant(d, "lambda", args.lam)
    graded_character(d, lam, max_terms=args.max_terms)
    alphas = _alphas(d, lam, args)
    polys = [(a, poincare_polynomial(d, a, lam)) for a in alphas]
    if args.alpha is not None:
        return 0, _poly_out(polys[0][1], args.format)
    if args.format == "json":
        return 0, _dump([{"alpha": list(a), "poincare": p.to_json()} for a, p in polys])
    if args.format == "csv":
        rows = [[f"alpha_{i + 1}" for i in range(d.rank)] + ["exp", "coef"]]
        rows += [[*a, e, c] for a, p in polys for e, c in p.items()]
        return 0, _csv(rows)
    return 0, "\n".join(f"alpha={_fmt_vec(a)}: {p}" for a, p in polys)


def cmd_tableaux(d, args):
    if d.series != "A":
        raise UsageError("tableaux is available in type A only")
    lam = _dominant(d, "lambda", args.lam)
    rows = []
    for a in _alphas(d, lam, args):
        rows.append((a, count_row_increasing_tableaux(d, a, lam), chari_loktev_polynomial(d, a, lam)))
    if args.format == "json":
        payload = [
            {"alpha": list(a), "d": dim_M(d, a, lam), "tableaux": n, "chari_loktev": p.to_json()}
            for a, n, p in rows
        ]
        return 0, _dump(payload[0] if args.alpha is not None else payload)
    if args.format == "csv":
        head = [f"alpha_{i + 1}" for i in range(d.rank)] + ["tableaux", "chari_loktev"]
        return 0, _csv([head] + [[*a, n, str(p)] for a, n, p in rows])
    return 0, "\n".join(f"alpha={_fmt_vec(a)} tableaux={n} chari-loktev: {p}" for a, n, p in rows)


def cmd_verify(d, args):
    lam = _dominant(d, "lambda", args.lam)
    if args.depth < 0:
        raise UsageError("--depth must be nonnegative")
    results = run_checks(d, lam, args.depth)
    failed = any(not r.passed for r in results)
    if args.format == "json":
        payload = [
            {
                "lambda": list(r.lam),
                "check": r.name,
                "status": r.status,
                "failures": [{"at": list(at), "detail": msg} for at, msg in r.failures],
            }
            for r in results
        ]
        return int(failed), _dump(payload)
    if args.format == "csv":
        rows = [["lambda", "check", "status", "failures"]]
        rows += [[_fmt_vec(r.lam), r.name, r.status, len(r.failures)] for r in results]
        return int(failed), _csv(rows)
    lines = []
    for r in results:
        lines.append(f"[{r.status}] lambda={_fmt_vec(r.lam)} {r.name}")
        lines += [f"    at {_fmt_vec(at)}: {msg}" for at, msg in r.failures]
    lines.append("all checks passed" if not failed else "FAILED")
    return int(failed), "\n".join(lines)


COMMANDS = {
    "info": (cmd_info, "print Cartan data and node numbering", ()),
    "fermionic": (cmd_fermionic, "fermionic form M(lambda, mu, t)", ("lambda", "mu", "compute")),
    "gch": (cmd_gch, "graded character of W(lambda)", ("lambda", "compute")),
    "betti": (cmd_betti, "Betti numbers of L(alpha, lambda)", ("lambda", "alpha?", "compute")),
    "poincare": (cmd_poincare, "Poincare polynomials of L(alpha, lambda)", ("lambda", "alpha?", "compute")),
    "kl": (cmd_kl, "Kazhdan-Lusztig type polynomial Z_{lambda,mu}(t)", ("lambda", "mu", "compute")),
    "loewy": (cmd_loewy, "Loewy series of W(lambda)", ("lambda", "compute")),
    "tableaux": (cmd_tableaux, "row-increasing tableaux counts and Chari-Loktev polynomials (type A)", ("lambda", "alpha?")),
    "verify": (cmd_verify, "run the consistency checks", ("lambda", "depth", "compute")),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylquiver", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, params) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--type", required=True, type=str.upper, help="A, D or E")
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", default="text", choices=["text", "json", "csv"])
        if "lambda" in params:
            p.add_argument("--lambda", dest="lam", required=True, type=_vector, metavar="M1,M2,...")
        if "mu" in params:
            p.add_argument("--mu", required=True, type=_vector, metavar="M1,M2,...")
        if "alpha?" in params:
            p.add_argument("--alpha", type=_vector, metavar="A1,A2,...",
                           help="omit to sweep every alpha with L(alpha, lambda) nonempty")
        if "depth" in params:
            p.add_argument("--depth", type=int, default=0,
                           help="also check dominant lambda' <= lambda coordinatewise within this distance")
        if "compute" in params:
            p.add_argument("--cache-dir", help="persist character tables as JSON here")
            p.add_argument("--max-terms", type=int, default=None,
                           help="abort when one fermionic sum has more mode sequences than this")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        d = build_cartan(args.type, args.rank)
        if getattr(args, "cache_dir", None):
            chars.set_cache_dir(args.cache_dir)
        status, text = COMMANDS[args.command][0](d, args)
    except (UsageError, UnsupportedTypeError, BudgetExceeded, ValueError) as exc:
        print(f"weylquiver {args.command}: error: {exc}", file=sys.stderr)
        return 2
    finally:
        chars.set_cache_dir(None)
    print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())

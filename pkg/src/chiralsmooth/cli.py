"""Command-line front end.

    chiralsmooth sigma --s 17 --q 2 --order 17
    chiralsmooth obstruct torus2 9
    chiralsmooth obstruct pair 25 1 25 2 --format json
    chiralsmooth survey torus2 --max 199
    chiralsmooth neighbors 25 8

Exit status: 0 on success, 2 on a domain error (bad parameters), 1 on an
internal error. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from .exactmath import DomainError, admissible_list, format_rational, parse_rational
from .lens import orbit, orbit_abs_summinmax, sigma
from .obstruct import (
    Evaluation,
    Verdict,
    chiral_obstruct,
    doubled_obstruct,
    pair_obstruct,
    survey_torus2,
    torus2_obstruct,
)
from .twobridge import generating_expansions, smoothing_neighbors

NEIGHBOR_NOTE = "twist-region moves on the listed expansions; a sufficient supply of neighbors, not a complete one"


def approx(x: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits + 12
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return f"{d:.{digits}f}"


def _ctx(ctx) -> dict:
    return {"m": ctx.m, "m1": ctx.m1, "m2": ctx.m2}


def _evaluation(ev: Evaluation) -> dict:
    return {
        "r": ev.r,
        "value": format_rational(ev.value),
        "bound": format_rational(ev.bound),
        "context": _ctx(ev.context),
    }


def verdict_to_dict(v: Verdict) -> dict:
    witnesses = []
    for order in sorted(v.witnesses):
        for w in v.witnesses[order]:
            d = _evaluation(w.evaluation)
            d.update(candidate=str(w.candidate), order=order)
            witnesses.append(d)
    return {
        "status": v.status,
        "reason": v.reason,
        "prime": v.prime,
        "order": v.order,
        "forms": [{"s": f.s, "q": f.q, "sign": f.sign} for f in v.forms],
        "witnesses": witnesses,
        "survivor": str(v.survivor) if v.survivor else None,
        "survivor_orbit": [_evaluation(ev) for ev in v.survivor_orbit],
        "survivors": {str(m): [str(z) for z in zs] for m, zs in sorted(v.survivors.items())},
    }


def verdict_summary(v: Verdict) -> str:
    if v.reason == "LinkingForm":
        return f"{v.status} (linking form at p={v.prime})"
    if v.reason == "NoIsotropicElement":
        return f"{v.status} (no isotropic element of order {v.order})"
    if v.reason == "CassonGordon":
        orders = ",".join(str(m) for m in sorted(v.witnesses))
        return f"{v.status} (Casson-Gordon at order {orders})"
    if v.survivor is not None:
        return f"{v.status}, survivor {v.survivor}"
    return v.status


class Output:
    """Collects one command's result and renders it in the chosen format."""

    def __init__(self, command: str, params: dict, fmt: str):
        self.command, self.params, self.fmt = command, params, fmt

    def emit(self, result, header: list[str], rows: list[list], preamble: list[str] = ()) -> str:
        if self.fmt == "json":
            doc = {"command": self.command, "params": self.params, "result": result}
            return json.dumps(doc, sort_keys=True, indent=2) + "\n"
        if self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)
            return buf.getvalue()
        lines = list(preamble)
        if rows:
            cells = [header] + [[str(c) for c in row] for row in rows]
            widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
            for row in cells:
                lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def cmd_sigma(args) -> str:
    params = {"s": args.s, "q": args.q, "order": args.order, "r": args.r}
    out = Output("sigma", params, args.format)
    if args.r is not None:
        rs = {args.r: sigma(args.s, args.q, args.order, args.r)}
    else:
        rs = dict(orbit(args.s, args.q, args.order).values)
    header = ["r", "sigma"] + (["approx"] if args.decimal else [])
    rows = []
    for r, v in sorted(rs.items()):
        rows.append([r, format_rational(v)] + ([approx(v, args.decimal)] if args.decimal else []))
    result = [{"r": r, "sigma": format_rational(v)} for r, v in sorted(rs.items())]
    if args.decimal:
        for d, (_, v) in zip(result, sorted(rs.items())):
            d["approx"] = approx(v, args.decimal)
    if args.r is not None and args.format == "table":
        return format_rational(rs[args.r]) + "\n"
    if args.stats:
        stat = orbit_abs_summinmax(args.s, args.q, args.order)
        result = {"values": result, "abs_sum_min_max_surjective": format_rational(stat)}
        pre = [f"|max + min| over surjective characters: {format_rational(stat)}"]
        return out.emit(result, header, rows, pre)
    return out.emit(result, header, rows)


def cmd_obstruct(args) -> str:
    if args.kind == "twobridge":
        params = {"s": args.s, "q": args.q}
        v = chiral_obstruct(args.s, args.q)
        label = f"B({args.s},{args.q}) chiral smoothing"
    elif args.kind == "torus2":
        params = {"m": args.m}
        v = torus2_obstruct(args.m)
        label = f"T(2,{args.m}) chiral smoothing"
    else:
        params = {"s1": args.s1, "q1": args.q1, "s2": args.s2, "q2": args.q2}
        v = pair_obstruct(args.s1, args.q1, args.s2, args.q2)
        label = f"single smoothing B({args.s1},{args.q1}) -> B({args.s2},{args.q2})"
    out = Output(f"obstruct {args.kind}", params, args.format)
    d = verdict_to_dict(v)
    if args.format == "json":
        return out.emit(d, [], [])
    if v.witnesses:
        header = ["order", "candidate", "r", "value", "bound"]
        rows = [[w["order"], w["candidate"], w["r"], w["value"], w["bound"]] for w in d["witnesses"]]
    else:
        header = ["candidate", "r", "value", "bound"]
        rows = [[d["survivor"], e["r"], e["value"], e["bound"]] for e in d["survivor_orbit"]]
    if args.decimal:
        header.append("value_approx")
        for row in rows:
            row.append(approx(parse_rational(row[-2]), args.decimal))
    return out.emit(d, header, rows, [f"{label}: {verdict_summary(v)}"])


def cmd_survey(args) -> str:
    if args.kind == "admissible":
        values = admissible_list(args.max)
        out = Output("survey admissible", {"max": args.max}, args.format)
        return out.emit(values, ["s"], [[s] for s in values])
    table = survey_torus2(args.max)
    out = Output("survey torus2", {"max": args.max}, args.format)
    result = [{"m": m, "verdict": verdict_to_dict(v)} for m, v in table]
    rows = [[m, v.status, v.reason or "", v.prime or v.order or "", str(v.survivor or "")] for m, v in table]
    return out.emit(result, ["m", "status", "reason", "at", "survivor"], rows)


def cmd_neighbors(args) -> str:
    found = smoothing_neighbors(args.s, args.q, widen=args.widen, increase=args.increase)
    params = {"s": args.s, "q": args.q, "widen": args.widen, "increase": args.increase}
    out = Output("neighbors", params, args.format)
    result = {
        "note": NEIGHBOR_NOTE,
        "expansions": [list(e) for e in generating_expansions(args.s, args.q)],
        "neighbors": [
            {
                "result": str(n.result),
                "value": format_rational(n.value),
                "moves": [str(mv) for mv in n.moves],
            }
            for n in found
        ],
    }
    rows = [[str(n.result), format_rational(n.value), str(n.move), len(n.moves)] for n in found]
    return out.emit(result, ["result", "value", "first move", "moves"], rows, [f"# {NEIGHBOR_NOTE}"])


def cmd_doubled(args) -> str:
    a, b = parse_rational(args.sigma_1_5), parse_rational(args.sigma_2_5)
    hit = doubled_obstruct(a, b)
    out = Output("doubled", {"sigma_1_5": format_rational(a), "sigma_2_5": format_rational(b)}, args.format)
    status = "Obstructed" if hit else "NotObstructed"
    return out.emit({"status": status}, ["status"], [[status]])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chiralsmooth", description=__doc__.split("\n\n")[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--decimal", type=int, default=0, metavar="K", help="add a K-digit approximate decimal column")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sigma", parents=[common], help="Casson-Gordon invariants of L(s,q)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--stats", action="store_true", help="also report |max + min| over surjective characters")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("obstruct", help="chiral and pairwise smoothing obstructions")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("twobridge", parents=[common])
    k.add_argument("s", type=int)
    k.add_argument("q", type=int)
    k = kinds.add_parser("torus2", parents=[common])
    k.add_argument("m", type=int)
    k = kinds.add_parser("pair", parents=[common])
    for name in ("s1", "q1", "s2", "q2"):
        k.add_argument(name, type=int)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("survey", help="tables over a range")
    kinds = p.add_subparsers(dest="kind", required=True)
    for name in ("torus2", "admissible"):
        k = kinds.add_parser(name, parents=[common])
        k.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("neighbors", parents=[common], help="candidate single-smoothing neighbors of B(s,q)")
    p.add_argument("s", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--widen", action="store_true", help="also try crossing insertions")
    p.add_argument("--increase", action="store_true", help="also try magnitude-increasing entry changes")
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("doubled", parents=[common], help="criterion for D+(K,-1)")
    p.add_argument("--sigma-1-5", required=True)
    p.add_argument("--sigma-2-5", required=True)
    p.set_defaults(func=cmd_doubled)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.decimal < 0:
        print("error: --decimal must be non-negative", file=sys.stderr)
        return 2
    try:
        text = args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())

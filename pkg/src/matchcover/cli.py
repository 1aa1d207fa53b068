"""Command-line interface.

Exit status: 0 success (or verification PASS), 1 verification FAIL,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import BUILTIN_MAX_ORDER, FILTERS, CorpusError, CorpusSource, ingest
from .edges import classify_all_edges
from .families import FAMILIES, FamilySpec, generate
from .graph import Graph, is_bipartite, is_connected
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .harness import CLAIMS, emit_report, verify_claim
from .matching import count_perfect_matchings
from .structure import (
    find_nonsolid_witness,
    find_nontrivial_tight_cut,
    is_brick,
    is_matching_covered,
    is_wheel,
    tight_cut_decomposition,
)

ANALYZE_MAX_ORDER = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matchcover", description="Matching-theory toolkit for small graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def inputs(p, builtin=True):
        p.add_argument("--input", help="graph6 file, or - for standard input")
        p.add_argument("--graph6", help="a single inline graph6 string")
        p.add_argument("--family", choices=FAMILIES)
        p.add_argument("--order", type=int, help="family order, or builtin enumeration order")
        if builtin:
            p.add_argument("--builtin", action="store_true", help=f"all graphs up to isomorphism (order <= {BUILTIN_MAX_ORDER})")
            p.add_argument("--min-order", type=int)
            p.add_argument("--max-order", type=int)
        p.add_argument("--filter", action="append", default=[], choices=list(FILTERS))
        p.add_argument("--out", help="write output to this path")

    for verb, fmts, helptext in [
        ("analyze", ("text", "json"), "structural summary of each graph"),
        ("classify", ("text", "json", "csv"), "edge classification table"),
        ("decompose", ("text", "json"), "tight cut decomposition"),
        ("solid", ("text", "json"), "solidity verdict with a witness when nonsolid"),
    ]:
        p = sub.add_parser(verb, help=helptext)
        inputs(p)
        p.add_argument("--format", choices=fmts, default="text")

    p = sub.add_parser("verify", help="check a claim over a corpus")
    inputs(p)
    p.add_argument("--claim", choices=list(CLAIMS), default="main-theorem")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--runs", type=int, default=5, help="randomised runs per graph (lovasz-uniqueness)")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("generate", help="emit a family member as graph6")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--out")

    p = sub.add_parser("enumerate", help="emit all graphs of given orders as graph6")
    p.add_argument("--order", type=int)
    p.add_argument("--min-order", type=int)
    p.add_argument("--max-order", type=int)
    p.add_argument("--filter", action="append", default=[], choices=list(FILTERS))
    p.add_argument("--out")
    return parser


def _builtin_orders(args) -> tuple[int, int]:
    if args.order is not None and (args.min_order is not None or args.max_order is not None):
        raise UsageError("use either --order or --min-order/--max-order")
    if args.order is not None:
        return args.order, args.order
    hi = args.max_order if args.max_order is not None else BUILTIN_MAX_ORDER
    lo = args.min_order if args.min_order is not None else 1
    return lo, hi


def _source(args) -> CorpusSource:
    chosen = [
        name for name, given in [
            ("--input", args.input is not None),
            ("--graph6", args.graph6 is not None),
            ("--family", args.family is not None),
            ("--builtin", getattr(args, "builtin", False)),
        ] if given
    ]
    if len(chosen) != 1:
        raise UsageError("give exactly one input source (--input, --graph6, --family or --builtin)")
    if args.input is not None:
        return CorpusSource.file(args.input, args.filter)
    if args.graph6 is not None:
        return CorpusSource.from_graphs([parse_graph6(args.graph6)], f"graph6 {args.graph6}", args.filter)
    if args.family is not None:
        return CorpusSource.from_families([FamilySpec(args.family, args.order)], args.filter)
    lo, hi = _builtin_orders(args)
    return CorpusSource.builtin(hi, lo, args.filter)


def _graphs(args) -> Iterable[Graph]:
    for g in ingest(_source(args)):
        if g.n > ANALYZE_MAX_ORDER:
            raise UsageError(f"graph of order {g.n} exceeds the supported maximum {ANALYZE_MAX_ORDER}")
        yield g


def _analyze(g: Graph) -> dict:
    mc = is_matching_covered(g)
    brick = is_brick(g)
    witness = find_nonsolid_witness(g) if brick else None
    return {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "perfectMatchings": count_perfect_matchings(g),
        "matchingCovered": mc,
        "brick": brick,
        "brace": mc and is_bipartite(g) and find_nontrivial_tight_cut(g) is None,
        "solid": (witness is None) if brick else None,
        "bricks": tight_cut_decomposition(g).brick_count if mc else None,
        "wheel": is_wheel(g),
    }


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _classify(g: Graph) -> list[dict]:
    if not is_matching_covered(g):
        raise UsageError(f"{to_graph6(g)} is not matching covered")
    return [
        {
            "edge": f"{r.edge[0]}-{r.edge[1]}",
            "pmCount": r.pm_count,
            "removable": r.removable,
            "bInvariant": r.b_invariant,
            "solitary": r.solitary,
        }
        for r in classify_all_edges(g)
    ]


def _table(rows: list[dict]) -> str:
    if not rows:
        return ""
    keys = list(rows[0])
    cells = [[k for k in keys]] + [[_fmt(r[k]) for k in keys] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(keys))]
    return "\n".join("  ".join(c[i].ljust(widths[i]) for i in range(len(keys))).rstrip() for c in cells) + "\n"


def _decompose(g: Graph) -> dict:
    if not is_matching_covered(g):
        raise UsageError(f"{to_graph6(g)} is not matching covered")
    res = tight_cut_decomposition(g)
    return {
        "graph6": to_graph6(g),
        "bricks": res.brick_count,
        "trace": [{"graph6": s.graph6, "shore": list(s.shore)} for s in res.trace],
        "leaves": [{"graph6": to_graph6(h), "kind": kind} for h, kind in res.leaves],
    }


def _solid(g: Graph) -> dict:
    if not is_brick(g):
        raise UsageError(f"{to_graph6(g)} is not a brick; solidity is only defined for bricks")
    w = find_nonsolid_witness(g)
    out = {"graph6": to_graph6(g), "verdict": "SOLID" if w is None else "NONSOLID"}
    if w is not None:
        out["cycle1"] = list(w.cycle1)
        out["cycle2"] = list(w.cycle2)
        out["remainderMatching"] = [list(e) for e in w.remainder_matching]
    return out


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _run(args) -> int:
    verb = args.verb
    if verb == "generate":
        _write(to_graph6(_family(args)) + "\n", args.out)
        return 0
    if verb == "enumerate":
        lo, hi = _builtin_orders(args)
        src = CorpusSource.builtin(hi, lo, args.filter)
        _write("".join(to_graph6(g) + "\n" for g in ingest(src) if g.n), args.out)
        return 0
    if verb == "verify":
        options = {"runs": args.runs, "seed": args.seed} if args.claim == "lovasz-uniqueness" else {}
        report = verify_claim(args.claim, _source(args), **options)
        text = emit_report(report, args.format)
        if args.format == "text":
            _write(text, args.out)
        else:
            out = args.out or f"{args.claim}-{time.strftime('%Y%m%dT%H%M%S')}.{args.format}"
            _write(text, out)
            if out != "-":
                print(f"{report.claim_id}: {report.verdict.upper()} ({out})")
        return 0 if report.passed else 1

    graphs = list(_graphs(args))
    handler = {"analyze": _analyze, "classify": _classify, "decompose": _decompose, "solid": _solid}[verb]
    results = [handler(g) for g in graphs]
    if args.format == "json":
        _write(json.dumps(results if len(results) != 1 else results[0], indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        rows = [dict(graph6=to_graph6(g), **row) for g, recs in zip(graphs, results) for row in recs]
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        _write(buf.getvalue(), args.out)
    else:
        _write("\n".join(_render_text(verb, g, r) for g, r in zip(graphs, results)), args.out)
    return 0


def _family(args) -> Graph:
    return generate(FamilySpec(args.family, args.order))


def _render_text(verb: str, g: Graph, result) -> str:
    head = f"graph {to_graph6(g)} (n={g.n}, m={g.m})\n"
    if verb == "analyze":
        return head + "".join(f"  {k:<17} {_fmt(v)}\n" for k, v in result.items() if k != "graph6")
    if verb == "classify":
        return head + _table(result)
    if verb == "decompose":
        lines = [head, f"  b(G) = {result['bricks']}\n"]
        for step in result["trace"]:
            lines.append(f"  cut {step['graph6']} shore {step['shore']}\n")
        for leaf in result["leaves"]:
            lines.append(f"  leaf {leaf['kind']:<5} {leaf['graph6']}\n")
        return "".join(lines)
    text = head + f"  {result['verdict']}\n"
    if "cycle1" in result:
        text += f"  cycle1 {result['cycle1']}\n  cycle2 {result['cycle2']}\n"
        text += f"  remainder matching {result['remainderMatching']}\n"
    return text


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return _run(args)
    except (UsageError, CorpusError, Graph6Error, ValueError, KeyError, OSError) as exc:
        msg = str(exc).strip("'\"").splitlines()[0] if str(exc) else type(exc).__name__
        print(f"matchcover: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

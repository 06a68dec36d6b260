"""Command-line front end.

Subcommands: cohomology, cuplen, zcl, resolve, minsupport, navigate,
bounds, verify-paper.  Reports are deterministic given identical inputs;
numeric fields are exact rationals rendered p/q (with float decorations
only where the quantity itself is a distance).  Exit codes: 0 success,
1 domain error (invalid complex/diagram/arguments), 2 budget exhaustion,
3 fact contradiction.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BudgetError, ContradictionError, DomainError
from .exact import format_rational, parse_rational, rational
from .facts import fmt_interval, parse_invariant
from .fields import RATIONALS, parse_field
from .measures import MeasureError
from .navigate import circle_navigate, sequential_compose
from .pipeline import build_standard_base, default_data_dir, higman_separation_rows
from .rings import SearchLimits, cup_length, load_ring, zero_divisor_cup_length
from .simplicial import ComplexError, betti_numbers, cochain_complex, cohomology_ring, \
    load_complex
from .spaces import CIRCLE, SpaceError
from .strands import enumerate_resolvers, load_diagram, min_support, save_diagram
from .verify import verify_paper


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); 2 means budget here
        raise UsageError(message)


def _emit(doc, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=1, sort_keys=True))
    else:
        for line in doc["lines"]:
            print(line)


def _load_any_ring(path: str, field):
    p = Path(path)
    if p.suffix == ".ring":
        return load_ring(p)
    return cohomology_ring(load_complex(p), field)


def cmd_cohomology(args) -> int:
    field = parse_field(args.field)
    K = load_complex(args.path)
    cc = cochain_complex(K, field)
    ring = cohomology_ring(K, field)
    lines = [
        f"complex {K.name}: {K.vertex_count} vertices, "
        f"cochain dims {cc.dims()}, euler {K.euler_characteristic()}",
        f"betti over {field.label}: {betti_numbers(cc)}",
        f"ring dims: {ring.dims}",
    ]
    doc = {
        "name": K.name,
        "field": field.label,
        "cochain_dims": list(cc.dims()),
        "betti": list(betti_numbers(cc)),
        "ring_dims": list(ring.dims),
        "euler": K.euler_characteristic(),
        "lines": lines,
    }
    _emit(doc, args.format)
    return 0


def _limits(args) -> SearchLimits:
    return SearchLimits(max_len=args.max_len, node_budget=args.budget)


def cmd_cuplen(args) -> int:
    ring = _load_any_ring(args.path, parse_field(args.field))
    res = cup_length(ring, _limits(args))
    note = " (search-truncated lower bound)" if res.truncated else ""
    doc = {
        "ring": ring.name,
        "cup_length": res.value,
        "truncated": res.truncated,
        "witness": list(res.witness),
        "lines": [f"{res.value}{note}",
                  f"witness: {' * '.join(res.witness) if res.witness else '(none)'}"],
    }
    _emit(doc, args.format)
    return 2 if res.truncated else 0


def cmd_zcl(args) -> int:
    ring = _load_any_ring(args.path, parse_field(args.field))
    res = zero_divisor_cup_length(ring, args.m, _limits(args))
    note = " (search-truncated lower bound)" if res.truncated else ""
    doc = {
        "ring": ring.name,
        "m": args.m,
        "zero_divisor_cup_length": res.value,
        "truncated": res.truncated,
        "witness": list(res.witness),
        "lines": [f"{res.value}{note}",
                  f"witness: {' * '.join(res.witness) if res.witness else '(none)'}"],
    }
    _emit(doc, args.format)
    return 2 if res.truncated else 0


def cmd_resolve(args) -> int:
    diagram = load_diagram(args.path)
    enum = enumerate_resolvers(diagram, args.n, cap=args.budget)
    lines = [
        f"{len(enum.vertex_resolvers)} resolvers (polytope dim "
        f"{enum.polytope_dimension})"
    ]
    if enum.polytope_dimension > 0:
        lines.append(
            "positive dimension: infinite interior families exist; the listed "
            "vertices are the extreme resolvers"
        )
    for v in enum.vertex_resolvers:
        lines.append("  " + v.describe())
    doc = {
        "diagram": diagram.name,
        "n": args.n,
        "polytope_dimension": enum.polytope_dimension,
        "vertex_resolvers": [
            [["|".join(r), format_rational(w)] for r, w in v.weights]
            for v in enum.vertex_resolvers
        ],
        "lines": lines,
    }
    _emit(doc, args.format)
    return 0


def cmd_minsupport(args) -> int:
    diagram = load_diagram(args.path)
    value = min_support(diagram, cap=args.budget)
    _emit({"diagram": diagram.name, "min_support": value, "lines": [str(value)]},
          args.format)
    return 0


def cmd_navigate(args) -> int:
    points = [CIRCLE.point(parse_rational(p)) for p in args.points]
    if len(points) < 2:
        raise UsageError("navigate needs at least two circle points (in turns)")
    samples, diagram = sequential_compose(circle_navigate, points)
    support = min_support(diagram)
    lines = [
        f"{len(points)}-waypoint circle navigation: min support {support}",
    ]
    for t, mu in samples:
        lines.append(f"  t={format_rational(t):8s} {mu.describe()}")
    if args.out:
        save_diagram(diagram, args.out)
        lines.append(f"diagram written to {args.out}")
    doc = {
        "points": [format_rational(p.turns) for p in points],
        "min_support": support,
        "samples": [
            [format_rational(t), [[CIRCLE.point_json(p), format_rational(w)]
                                  for p, w in mu.atoms]]
            for t, mu in samples
        ],
        "lines": lines,
    }
    _emit(doc, args.format)
    return 0


def cmd_bounds(args) -> int:
    m_range = tuple(range(2, args.m_max + 1))
    base = build_standard_base(args.data, m_range=m_range,
                               use_r16=not args.no_external)
    if args.trace:
        space, inv_s = args.trace
        lo, hi, lnode, hnode = base.derive(space, parse_invariant(inv_s))
        lines = [f"{space} {inv_s} {fmt_interval(lo, hi)}", "",
                 lnode.render(), "", hnode.render()]
        _emit({"space": space, "invariant": inv_s, "lo": lo,
               "hi": "inf" if hi == float("inf") else hi, "lines": lines},
              args.format)
        return 0
    rows = base.report_rows()
    lines = [f"{'space':10s} {'invariant':10s} {'interval':12s} sources"]
    json_rows = []
    for space, inv, interval, lnode, hnode in rows:
        lines.append(f"{space:10s} {inv:10s} {interval:12s} "
                     f"lo:{lnode.label[:40]} | hi:{hnode.label[:40]}")
        json_rows.append({"space": space, "invariant": inv, "interval": interval})
    lines.append("")
    lines.append("Higman separation:")
    for m, i, d, strict in higman_separation_rows(base):
        mark = "  STRICT: iTC < dTC" if strict else ""
        lines.append(f"  m={m}: iTC {fmt_interval(*i):8s} dTC {fmt_interval(*d):8s}{mark}")
    _emit({"rows": json_rows, "lines": lines}, args.format)
    return 0


def cmd_verify_paper(args) -> int:
    results = verify_paper(args.data)
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.ident:4s} {r.name}: {r.detail}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    _emit({"results": [{"id": r.ident, "name": r.name, "passed": r.passed,
                        "detail": r.detail} for r in results],
           "lines": lines}, args.format)
    return 0 if ok else 1


def build_parser() -> _Parser:
    parser = _Parser(prog="intertwine",
                     description="exact invariant bounds, resolver enumeration, "
                                 "and navigation constructions")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--budget", type=int, default=10**6,
                       help="node/route budget for searches and enumerations")
        p.add_argument("--max-len", dest="max_len", type=int, default=8,
                       help="maximum product length searched")

    p = sub.add_parser("cohomology", help="Betti numbers and ring dimensions")
    p.add_argument("path")
    p.add_argument("--field", default="q")
    common(p)
    p.set_defaults(run=cmd_cohomology)

    p = sub.add_parser("cuplen", help="cup length of a complex or ring file")
    p.add_argument("path")
    p.add_argument("--field", default="q")
    common(p)
    p.set_defaults(run=cmd_cuplen)

    p = sub.add_parser("zcl", help="zero-divisor cup length")
    p.add_argument("path")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--field", default="q")
    common(p)
    p.set_defaults(run=cmd_zcl)

    p = sub.add_parser("resolve", help="enumerate vertex resolvers of a diagram")
    p.add_argument("path")
    p.add_argument("--n", type=int, required=True,
                   help="maximum resolver support size")
    common(p)
    p.set_defaults(run=cmd_resolve)

    p = sub.add_parser("minsupport", help="minimal resolver support of a diagram")
    p.add_argument("path")
    common(p)
    p.set_defaults(run=cmd_minsupport)

    p = sub.add_parser("navigate", help="compose circle navigations through waypoints")
    p.add_argument("points", nargs="+",
                   help="circle points as rational turns, e.g. 0 1/4 1/2")
    p.add_argument("--out", help="write the emitted diagram file here")
    common(p)
    p.set_defaults(run=cmd_navigate)

    p = sub.add_parser("bounds", help="build the fact base and print the table")
    p.add_argument("--data", default=None, help="data directory root")
    p.add_argument("--m-max", dest="m_max", type=int, default=5)
    p.add_argument("--no-external", action="store_true",
                   help="disable the external product inequality (R16)")
    p.add_argument("--trace", nargs=2, metavar=("SPACE", "INVARIANT"),
                   help="print the derivation trace for one interval")
    common(p)
    p.set_defaults(run=cmd_bounds)

    p = sub.add_parser("verify-paper", help="run the full reproduction suite")
    p.add_argument("--data", default=None)
    common(p)
    p.set_defaults(run=cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(args)
    except (UsageError, DomainError, ComplexError, MeasureError, SpaceError,
            ContradictionError, BudgetError) as exc:
        code = 1
        if isinstance(exc, BudgetError):
            code = 2
        elif isinstance(exc, ContradictionError):
            code = 3
        print(f"error: {exc}", file=sys.stderr)
        return code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

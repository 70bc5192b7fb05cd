"""``fracdim`` command-line front end.

Exit status: 0 on success, 1 on bad input, 2 when any verification case ends
with a verdict other than ``EQUAL``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .catalog import describe, g_catalog, h_catalog
from .errors import FracdimError, InputError, TheoremViolation
from .graph_core import Graph, complement, format_edge_list, generate, parse_edge_list, regular_params
from .products import corona, lexicographic
from .ratlp import format_rational
from .resolving import TYPE1, TYPE2, TYPE3, twin_decomposition
from .theorems import CLAIMS, EQUAL, default_cases, dim_f, l_f, verify, verify_batch

log = logging.getLogger("fracdim")

REPORT_SCHEMA = {
    "type": "object",
    "required": ["claim", "g_desc", "h_desc", "lhs", "rhs", "verdict", "elapsed_ms", "notes"],
    "properties": {
        "claim": {"type": "string"},
        "g_desc": {"type": "string"},
        "h_desc": {"type": "string"},
        "lhs": {"type": ["string", "null"], "pattern": r"^-?\d+(/\d+)?$"},
        "rhs": {"type": ["string", "null"], "pattern": r"^-?\d+(/\d+)?$"},
        "verdict": {"enum": ["EQUAL", "LHS<RHS", "LHS>RHS", "ERROR"]},
        "elapsed_ms": {"type": "number", "minimum": 0},
        "notes": {"type": "string"},
    },
}

VALUE_SCHEMA = {
    "type": "object",
    "required": ["graph", "n", "value", "function"],
    "properties": {
        "graph": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "value": {"type": "string", "pattern": r"^\d+(/\d+)?$"},
        "function": {"type": "array", "items": {"type": "string", "pattern": r"^\d+(/\d+)?$"}},
    },
}

TWINS_SCHEMA = {
    "type": "object",
    "required": ["graph", "classes", "m1", "m2", "m3"],
    "properties": {
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["type", "vertices"],
                "properties": {
                    "type": {"enum": [TYPE1, TYPE2, TYPE3]},
                    "vertices": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
        "m1": {"type": "integer"},
        "m2": {"type": "integer"},
        "m3": {"type": "integer"},
    },
}

PARAMS_SCHEMA = {
    "type": "object",
    "required": ["graph", "k", "lambda", "mu", "conventions_applied"],
    "properties": {
        "k": {"type": "integer"},
        "lambda": {"type": "integer"},
        "mu": {"type": "integer"},
        "conventions_applied": {"type": "array", "items": {"type": "string"}},
    },
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise InputError(f"{self.prog}: {message}")


def load_graph(spec: str) -> Graph:
    """``gen:<family>:<params>`` (params separated by ``:`` or ``,``) or an edge-list path."""
    if spec.startswith("gen:"):
        return _generate(spec[4:])
    path = Path(spec)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read graph file {spec!r}: {exc.strerror}") from None
    return parse_edge_list(text, source=spec)


def _generate(spec: str) -> Graph:
    family, _, rest = spec.partition(":")
    tokens = [t for t in rest.replace(",", ":").split(":") if t]
    try:
        params = [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"generator parameters must be integers: {spec!r}") from None
    return generate(family, *params)


def _graph_arg(args: argparse.Namespace, attr: str = "graph") -> Graph:
    gen = getattr(args, "gen", None)
    src = getattr(args, attr, None)
    if gen and src:
        raise InputError("give either a graph file or --gen, not both")
    if gen:
        return _generate(gen)
    if src:
        return load_graph(src)
    raise InputError("no graph given (use a file path, gen:<family>:<params>, or --gen)")


def _desc(args: argparse.Namespace, G: Graph, attr: str = "graph") -> str:
    gen = getattr(args, "gen", None)
    if gen:
        return gen
    src = getattr(args, attr, None)
    if src and src.startswith("gen:"):
        return src[4:]
    return describe(G)


def _emit(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _write_graph(G: Graph, args: argparse.Namespace, comment: Optional[str], out) -> None:
    text = format_edge_list(G, comment)
    labels = None
    if G.labels is not None:
        labels = "".join(f"{i} {lab}\n" for i, lab in enumerate(G.labels))
    if args.output:
        Path(args.output).write_text(text)
        if labels is not None:
            Path(args.labels or args.output + ".labels").write_text(labels)
    else:
        _emit(out, text)
        if labels is not None and args.labels:
            Path(args.labels).write_text(labels)


def _cmd_value(args, out, which: str) -> int:
    G = _graph_arg(args)
    value, f = (dim_f if which == "dimf" else l_f)(G)
    if args.json:
        doc = {"graph": _desc(args, G), "n": G.n, "value": format_rational(value),
               "function": [format_rational(x) for x in f.values]}
        _emit(out, json.dumps(doc, indent=2))
    else:
        _emit(out, format_rational(value, approx=True))
        name = "resolving" if which == "dimf" else "locating"
        _emit(out, f"optimal {name} function:")
        for v, x in enumerate(f.values):
            _emit(out, f"  {G.label(v)}: {format_rational(x)}")
    return 0


def _cmd_params(args, out) -> int:
    G = _graph_arg(args)
    p = regular_params(G)
    if args.json:
        _emit(out, json.dumps({"graph": _desc(args, G), "k": p.k, "lambda": p.lam, "mu": p.mu,
                               "conventions_applied": sorted(p.conventions_applied)}, indent=2))
    else:
        conv = f" (conventions: {', '.join(sorted(p.conventions_applied))})" if p.conventions_applied else ""
        _emit(out, f"k={p.k} lambda={p.lam} mu={p.mu}{conv}")
    return 0


def format_twins(td) -> str:
    parts = []
    for t in (TYPE1, TYPE2, TYPE3):
        cls = [c for c, ct in zip(td.classes, td.class_type) if ct == t]
        if cls:
            parts.append(f"{t}: " + ", ".join("{" + ",".join(map(str, c)) + "}" for c in cls))
    parts.append(f"m=({td.m1},{td.m2},{td.m3})")
    return "; ".join(parts)


def _cmd_twins(args, out) -> int:
    G = _graph_arg(args)
    td = twin_decomposition(G)
    if args.json:
        doc = {"graph": _desc(args, G),
               "classes": [{"type": t, "vertices": list(c)} for c, t in zip(td.classes, td.class_type)],
               "m1": td.m1, "m2": td.m2, "m3": td.m3}
        _emit(out, json.dumps(doc, indent=2))
    else:
        _emit(out, format_twins(td))
    return 0


def _cmd_product(args, out, kind: str) -> int:
    G, H = load_graph(args.g), load_graph(args.h)
    P = corona(G, H) if kind == "corona" else lexicographic(G, H)
    _write_graph(P.graph, args, f"{kind} product of {args.g} and {args.h}", out)
    return 0


def _cmd_complement(args, out) -> int:
    G = _graph_arg(args)
    _write_graph(Graph(G.n, complement(G).edges), args, None, out)
    return 0


def _cmd_gen(args, out) -> int:
    G = _generate(args.spec)
    _write_graph(G, args, f"gen:{args.spec}", out)
    return 0


def _cmd_catalog(args, out) -> int:
    gs = [describe(g) for g in g_catalog()]
    hs = [describe(h) for h in h_catalog()]
    if args.json:
        _emit(out, json.dumps({"g_catalog": gs, "h_catalog": hs}, indent=2))
    else:
        _emit(out, f"G catalog ({len(gs)} connected graphs on 2-5 vertices):")
        for d in gs:
            _emit(out, f"  {d}")
        _emit(out, f"H catalog ({len(hs)} graphs on 2-4 vertices):")
        for d in hs:
            _emit(out, f"  {d}")
    return 0


def summary_table(reports) -> str:
    by_claim: dict[str, Counter] = {}
    for r in reports:
        by_claim.setdefault(r.claim, Counter())[r.verdict] += 1
    verdicts = ["EQUAL", "LHS<RHS", "LHS>RHS", "ERROR"]
    head = f"{'claim':<14}" + "".join(f"{v:>9}" for v in verdicts) + f"{'total':>8}"
    lines = [head, "-" * len(head)]
    for claim in sorted(by_claim):
        c = by_claim[claim]
        lines.append(f"{claim:<14}" + "".join(f"{c[v]:>9}" for v in verdicts) + f"{sum(c.values()):>8}")
    total = Counter(r.verdict for r in reports)
    lines.append("-" * len(head))
    lines.append(f"{'all':<14}" + "".join(f"{total[v]:>9}" for v in verdicts) + f"{len(reports):>8}")
    return "\n".join(lines)


def _report_line(r) -> str:
    lhs = "-" if r.lhs is None else format_rational(r.lhs)
    rhs = "-" if r.rhs is None else format_rational(r.rhs)
    return f"{r.verdict:<8} {r.claim:<12} G={r.g_desc:<28} H={r.h_desc:<14} lhs={lhs:<8} rhs={rhs:<8} {r.notes}"


def _cmd_verify(args, out) -> int:
    if args.all or args.claims:
        claims = None
        if args.claims:
            claims = [c.strip() for c in args.claims.split(",") if c.strip()]
            unknown = [c for c in claims if c not in CLAIMS]
            if unknown:
                raise InputError(f"unknown claim(s): {', '.join(unknown)}")
        reports = verify_batch(default_cases(claims), jobs=args.jobs)
        table = summary_table(reports)
        if args.json:
            _emit(out, json.dumps([r.to_json() for r in reports], indent=1))
            print(table, file=sys.stderr)
        else:
            if args.verbose:
                for r in reports:
                    _emit(out, _report_line(r))
            _emit(out, table)
        if args.out:
            Path(args.out).write_text(json.dumps([r.to_json() for r in reports], indent=1) + "\n")
        return 0 if all(r.verdict == EQUAL for r in reports) else 2
    if not args.claim:
        raise InputError("verify needs a claim name or --all")
    if args.claim not in CLAIMS:
        raise InputError(f"unknown claim {args.claim!r}; known: {', '.join(CLAIMS)}")
    if not args.g:
        raise InputError("verify needs --g")
    G = load_graph(args.g)
    H = load_graph(args.h) if args.h else None
    g_desc = args.g[4:] if args.g.startswith("gen:") else None
    h_desc = args.h[4:] if args.h and args.h.startswith("gen:") else None
    r = verify(args.claim, G, H, g_desc, h_desc)
    if args.json:
        _emit(out, json.dumps(r.to_json(), indent=2))
    else:
        _emit(out, _report_line(r))
    if args.out:
        Path(args.out).write_text(json.dumps(r.to_json(), indent=2) + "\n")
    return 0 if r.verdict == EQUAL else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fracdim", description="Exact fractional metric dimension of graphs and graph products.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="per-case output and debug logging")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("graph", nargs="?", help="edge-list file or gen:<family>:<params>")
        sp.add_argument("--gen", metavar="FAMILY:PARAMS", help="generator spec, e.g. cycle:5")

    def graph_output(sp):
        sp.add_argument("-o", "--output", help="write the edge list here (labels go to OUTPUT.labels)")
        sp.add_argument("--labels", help="sidecar label file path")

    for verb, helptext in (("dimf", "fractional metric dimension"), ("lf", "minimum locating-function weight")):
        sp = sub.add_parser(verb, help=helptext)
        graph_input(sp)
        sp.add_argument("--json", action="store_true")
    sp = sub.add_parser("params", help="regular-graph parameters k, lambda, mu")
    graph_input(sp)
    sp.add_argument("--json", action="store_true")
    sp = sub.add_parser("twins", help="twin classes and m1/m2/m3")
    graph_input(sp)
    sp.add_argument("--json", action="store_true")
    for verb in ("corona", "lex"):
        sp = sub.add_parser(verb, help=f"{'corona' if verb == 'corona' else 'lexicographic'} product G,H")
        sp.add_argument("--g", required=True)
        sp.add_argument("--h", required=True)
        graph_output(sp)
    sp = sub.add_parser("complement", help="complement graph")
    graph_input(sp)
    graph_output(sp)
    sp = sub.add_parser("gen", help="generate a named graph")
    sp.add_argument("spec", help="family:params, e.g. hypercube:3")
    graph_output(sp)
    sp = sub.add_parser("verify", help="check a claim exactly")
    sp.add_argument("claim", nargs="?", choices=list(CLAIMS), metavar="CLAIM")
    sp.add_argument("--g")
    sp.add_argument("--h")
    sp.add_argument("--all", action="store_true", help="run the whole built-in catalog")
    sp.add_argument("--claims", help="comma-separated subset of claims for a batch run")
    sp.add_argument("--jobs", type=int, default=1, help="concurrent verification processes")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--out", help="also write the JSON report(s) to this file")
    sp = sub.add_parser("catalog", help="list the built-in graph catalogs")
    sp.add_argument("--json", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        if not args.verb:
            raise InputError("no command given; try --help")
        verb = args.verb
        if verb in ("dimf", "lf"):
            return _cmd_value(args, out, verb)
        if verb in ("corona", "lex"):
            return _cmd_product(args, out, verb)
        return {
            "params": _cmd_params,
            "twins": _cmd_twins,
            "complement": _cmd_complement,
            "gen": _cmd_gen,
            "verify": _cmd_verify,
            "catalog": _cmd_catalog,
        }[verb](args, out)
    except TheoremViolation as exc:
        print(f"fracdim: theorem violation: {exc}", file=sys.stderr)
        return 2
    except FracdimError as exc:
        print(f"fracdim: error: {exc}", file=sys.stderr)
        return 1


run = main

if __name__ == "__main__":
    sys.exit(main())

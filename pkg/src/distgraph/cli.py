"""Command-line interface.

Exit codes: 0 success (or ``related``), 1 ``not-related`` from ``compare``,
2 usage, parse or precondition errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .classify import Relation, are_related, canonical_form
from .errors import DGError
from .textio import read_graph, serialize_text
from .topology import smooth, surface_report
from .words import SignedWord, SurfaceSpec, enumerate_minimal, graph_to_word, word_to_graph

RELATIONS = [r.value for r in Relation]


def _fmt(value):
    return "undefined" if value is None else str(value).lower() if isinstance(value, bool) else str(value)


def cmd_validate(args, out):
    doc = read_graph(args.file)
    violations = doc.graph.violations
    for v in violations:
        line = doc.line_of(v.ident)
        where = f"line {line}: " if line else ""
        print(f"{where}{v}", file=sys.stderr)
    if violations:
        return 2
    out.append("valid")
    return 0


def cmd_info(args, out):
    g = read_graph(args.file).graph.require_valid()
    report = surface_report(g)
    if args.json:
        out.append(json.dumps(report.as_dict(), indent=2, sort_keys=True))
        return 0
    out += [
        f"connected: {_fmt(report.connected)}",
        f"realizable: {_fmt(report.realizable)}",
        f"orientable: {_fmt(report.orientable)}",
        f"euler_characteristic: {report.euler_characteristic}",
        f"genus: {_fmt(report.genus)}",
        "",
        f"{'vertex':<12} {'level':>5} {'degree':>6} {'k':>3} {'index':>5}  kind",
    ]
    for r in report.vertex_reports:
        out.append(f"{r.vertex:<12} {r.level:>5} {r.degree:>6} {r.local_degree_k:>3} {r.index:>5}  {r.kind.value}")
    return 0


def cmd_canon(args, out):
    g = smooth(read_graph(args.file).graph.require_valid())
    form = serialize_text(canonical_form(g, args.relation))
    out.append(f"key: {hashlib.sha256(form.encode()).hexdigest()}")
    out.append(form.rstrip("\n"))
    return 0


def cmd_compare(args, out):
    g1 = smooth(read_graph(args.file1).graph.require_valid())
    g2 = smooth(read_graph(args.file2).graph.require_valid())
    related = are_related(g1, g2, args.relation)
    out.append("related" if related else "not-related")
    return 0 if related else 1


def cmd_word2graph(args, out):
    out.append(serialize_text(word_to_graph(SignedWord.parse(args.word))).rstrip("\n"))
    return 0


def cmd_graph2word(args, out):
    out.append(str(graph_to_word(read_graph(args.file).graph.require_valid())))
    return 0


def cmd_enum(args, out):
    result = enumerate_minimal(SurfaceSpec.parse(args.surface), args.relation)
    out += [str(w) for w in result.representatives]
    out.append(f"count: {result.count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="distgraph", description=(
        "Classify functions with isolated critical points on closed surfaces "
        "through their distinguishing graphs."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check structural invariants")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="surface invariants and per-vertex data")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("canon", help="canonical key and form")
    p.add_argument("file")
    p.add_argument("--relation", required=True, choices=RELATIONS)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("compare", help="decide whether two graphs are related")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--relation", required=True, choices=RELATIONS)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("word2graph", help="bouquet graph of a signed word")
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_word2graph)

    p = sub.add_parser("graph2word", help="signed word of a minimal-function graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_graph2word)

    p = sub.add_parser("enum", help="enumerate minimal functions")
    p.add_argument("--surface", required=True, help="g0, g1, ... (orientable) or n1, n2, ...")
    p.add_argument("--relation", required=True, choices=RELATIONS)
    p.set_defaults(func=cmd_enum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: list[str] = []
    try:
        code = args.func(args, out)
    except (DGError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if out:
        sys.stdout.write("\n".join(out) + "\n")
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())

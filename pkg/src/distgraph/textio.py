"""The ``dg 1`` text format.

Whitespace-separated tokens, ``#`` comments::

    dg 1
    levels 2
    level 1
    vertex m
    cycle c1 lower @m
    level 2
    vertex M
    cycle c2 upper @M
    pair c1 c2
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ParseError
from .graph import Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Pairing, Role

_NAME = re.compile(r"[A-Za-z0-9_.:]+")
_KEYWORDS = {"dg", "levels", "level", "vertex", "edge", "cycle", "pair"}


@dataclass
class DocumentModel:
    graph: DistinguishingGraph
    locations: dict[str, int] = field(default_factory=dict)

    def line_of(self, ident: str) -> int | None:
        return self.locations.get(ident)


def _tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        for tok in line.split("#", 1)[0].split():
            yield tok, lineno


class _Parser:
    def __init__(self, text):
        self.toks = list(_tokens(text))
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, self.toks[-1][1] if self.toks else 1)

    def next(self, what):
        if self.i >= len(self.toks):
            raise ParseError(f"unexpected end of input, expected {what}", self.peek()[1])
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def name(self, what):
        tok, line = self.next(what)
        if not _NAME.fullmatch(tok) or tok in _KEYWORDS:
            raise ParseError(f"expected {what}, got {tok!r}", line)
        return tok, line

    def integer(self, what):
        tok, line = self.next(what)
        if not tok.isdigit():
            raise ParseError(f"expected {what}, got {tok!r}", line)
        return int(tok), line


def parse_text(text: str) -> DocumentModel:
    """Parse a document; structural mistakes are reported with their line."""
    p = _Parser(text)
    tok, line = p.next("header 'dg 1'")
    version, vline = p.next("format version")
    if tok != "dg" or version != "1":
        raise ParseError("document must start with 'dg 1'", line)
    tok, line = p.next("'levels'")
    if tok != "levels":
        raise ParseError(f"expected 'levels', got {tok!r}", line)
    n, _ = p.integer("level count")

    locations: dict[str, int] = {}
    levels: list[tuple[list, list]] = []
    vertex_level: dict[str, int] = {}
    cycles: list[Cycle] = []
    cycle_info: dict[str, Cycle] = {}
    pairings: list[Pairing] = []

    def claim(ident, line):
        if ident in locations:
            raise ParseError(f"duplicate identifier {ident!r} (first defined on line {locations[ident]})", line)
        locations[ident] = line

    while p.i < len(p.toks):
        tok, line = p.next("statement")
        if tok == "level":
            if pairings:
                raise ParseError("level statements must precede pair statements", line)
            idx, _ = p.integer("level index")
            if idx != len(levels) + 1:
                raise ParseError(f"level {idx} out of order, expected level {len(levels) + 1}", line)
            if idx > n:
                raise ParseError(f"level {idx} exceeds declared count {n}", line)
            levels.append(([], []))
        elif tok in ("vertex", "edge", "cycle"):
            if not levels or pairings:
                raise ParseError(f"'{tok}' must appear inside a level", line)
            cur = len(levels)
            verts, edges = levels[-1]
            if tok == "vertex":
                v, _ = p.name("vertex name")
                claim(v, line)
                verts.append(v)
                vertex_level[v] = cur
            elif tok == "edge":
                e, _ = p.name("edge name")
                t, _ = p.name("tail vertex")
                h, _ = p.name("head vertex")
                claim(e, line)
                for end in (t, h):
                    if vertex_level.get(end) != cur:
                        raise ParseError(f"edge {e}: {end!r} is not a vertex of level {cur}", line)
                edges.append(Edge(e, t, h))
            else:
                c, _ = p.name("cycle name")
                role_tok, rline = p.next("'lower' or 'upper'")
                if role_tok not in ("lower", "upper"):
                    raise ParseError(f"expected 'lower' or 'upper', got {role_tok!r}", rline)
                claim(c, line)
                cyc = _parse_body(p, c, cur, Role(role_tok), vertex_level, {x.name for x in edges}, line)
                cycles.append(cyc)
                cycle_info[c] = cyc
        elif tok == "pair":
            lo, _ = p.name("lower cycle")
            up, _ = p.name("upper cycle")
            for c in (lo, up):
                if c not in cycle_info:
                    raise ParseError(f"pair references unknown cycle {c!r}", line)
            a, b = cycle_info[lo], cycle_info[up]
            if a.role is not Role.LOWER or b.role is not Role.UPPER:
                raise ParseError(f"pair {lo} {up}: first cycle must be lower and second upper", line)
            if b.level != a.level + 1:
                raise ParseError(f"pair {lo} {up}: cycles on levels {a.level} and {b.level} are not consecutive", line)
            locations.setdefault(f"{lo}/{up}", line)
            pairings.append(Pairing(lo, up))
        else:
            raise ParseError(f"unknown token {tok!r}", line)
    if len(levels) != n:
        raise ParseError(f"declared {n} levels but found {len(levels)}", p.peek()[1])
    graph = DistinguishingGraph(
        tuple(LevelGraph(i, tuple(v), tuple(e)) for i, (v, e) in enumerate(levels, 1)),
        tuple(cycles), tuple(pairings))
    return DocumentModel(graph, locations)


def _parse_body(p, name, level, role, vertex_level, edge_names, line):
    tok, tline = p.peek()
    if tok is None:
        raise ParseError(f"cycle {name} has no body", line)
    if tok.startswith("@"):
        p.next("anchor")
        anchor = tok[1:]
        if vertex_level.get(anchor) != level:
            raise ParseError(f"cycle {name}: anchor {anchor!r} is not a vertex of level {level}", tline)
        return Cycle(name, level, role, (), anchor)
    darts = []
    while True:
        tok, tline = p.peek()
        if tok is None or tok in _KEYWORDS or tok[-1:] not in ("+", "-"):
            break
        p.next("dart")
        edge = tok[:-1]
        if not _NAME.fullmatch(edge):
            raise ParseError(f"malformed dart {tok!r}", tline)
        if edge not in edge_names:
            raise ParseError(f"cycle {name}: unknown edge {edge!r} on level {level}", tline)
        darts.append(Dart(edge, 1 if tok[-1] == "+" else -1))
    if not darts:
        raise ParseError(f"cycle {name} needs '@vertex' or at least one dart", line)
    return Cycle(name, level, role, tuple(darts))


def serialize_text(g: DistinguishingGraph) -> str:
    """Canonical text: sorted statements, one per line, trailing newline."""
    out = ["dg 1", f"levels {g.n_levels}"]
    for lv in g.levels:
        out.append(f"level {lv.index}")
        out += [f"vertex {v}" for v in lv.vertices]
        out += [f"edge {e.name} {e.tail} {e.head}" for e in lv.edges]
        for c in g.cycles:
            if c.level != lv.index:
                continue
            body = f"@{c.anchor}" if c.is_point else " ".join(str(d) for d in c.darts)
            out.append(f"cycle {c.name} {c.role.value} {body}")
    out += [f"pair {p.lower} {p.upper}" for p in g.pairings]
    return "\n".join(out) + "\n"


def read_graph(path: str) -> DocumentModel:
    import sys

    if path == "-":
        return parse_text(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read())

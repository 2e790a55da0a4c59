"""Distinguishing-graph data model and structural validation.

A distinguishing graph is an ordered stack of level graphs (the critical
levels of a function, bottom to top), a set of oriented cycles on them, and a
pairing that glues every lower cycle of level ``i`` to an upper cycle of level
``i + 1`` through a cylinder.  Critical values are replaced by their rank.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

from .errors import InvalidGraphError


class Role(str, enum.Enum):
    LOWER = "lower"
    UPPER = "upper"

    @property
    def other(self) -> "Role":
        return Role.UPPER if self is Role.LOWER else Role.LOWER


class Dart(NamedTuple):
    """An edge traversed tail to head (``sign=+1``) or head to tail (``-1``)."""

    edge: str
    sign: int

    def flipped(self) -> "Dart":
        return Dart(self.edge, -self.sign)

    def __str__(self):
        return f"{self.edge}{'+' if self.sign > 0 else '-'}"


class Edge(NamedTuple):
    name: str
    tail: str
    head: str

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class LevelGraph:
    index: int
    vertices: tuple[str, ...] = ()
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(Edge(*e) for e in self.edges)))


@dataclass(frozen=True)
class Cycle:
    """Cyclic dart sequence on one level, or an empty cycle anchored at a vertex.

    Empty cycles are the point cycles of local extrema.
    """

    name: str
    level: int
    role: Role
    darts: tuple[Dart, ...] = ()
    anchor: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "role", Role(self.role))
        object.__setattr__(self, "darts", tuple(Dart(*d) for d in self.darts))

    @property
    def is_point(self) -> bool:
        return not self.darts

    def reversed(self) -> "Cycle":
        """Same cycle read backwards (every dart flipped)."""
        return Cycle(self.name, self.level, self.role,
                     tuple(d.flipped() for d in reversed(self.darts)), self.anchor)


class Pairing(NamedTuple):
    lower: str
    upper: str


@dataclass(frozen=True)
class Violation:
    kind: str
    ident: str
    message: str

    def __str__(self):
        return f"{self.kind} error [{self.ident}]: {self.message}"


@dataclass(frozen=True)
class DistinguishingGraph:
    """Immutable distinguishing graph.

    Containers are stored in a canonical order (levels by index, everything
    else by name) so that equality does not depend on construction order.
    Dart sequences keep their given rotation.
    """

    levels: tuple[LevelGraph, ...]
    cycles: tuple[Cycle, ...] = ()
    pairings: tuple[Pairing, ...] = field(default=())

    def __post_init__(self):
        role_rank = {Role.LOWER: 0, Role.UPPER: 1}
        object.__setattr__(self, "levels", tuple(sorted(self.levels, key=lambda lv: lv.index)))
        object.__setattr__(self, "cycles", tuple(
            sorted(self.cycles, key=lambda c: (c.level, role_rank[Role(c.role)], c.name))))
        object.__setattr__(self, "pairings", tuple(sorted(Pairing(*p) for p in self.pairings)))

    @property
    def n_levels(self) -> int:
        return len(self.levels)

    def level(self, index: int) -> LevelGraph:
        return self.levels[index - 1]

    @cached_property
    def vertex_level(self) -> dict[str, int]:
        return {v: lv.index for lv in self.levels for v in lv.vertices}

    @cached_property
    def edge_map(self) -> dict[str, Edge]:
        return {e.name: e for lv in self.levels for e in lv.edges}

    @cached_property
    def edge_level(self) -> dict[str, int]:
        return {e.name: lv.index for lv in self.levels for e in lv.edges}

    @cached_property
    def cycle_map(self) -> dict[str, Cycle]:
        return {c.name: c for c in self.cycles}

    @cached_property
    def partner(self) -> dict[str, str]:
        out = {}
        for p in self.pairings:
            out[p.lower] = p.upper
            out[p.upper] = p.lower
        return out

    @cached_property
    def edge_home(self) -> dict[tuple[str, Role], tuple[str, int, int]]:
        """``(edge, role) -> (cycle name, position in cycle, dart sign)``."""
        out = {}
        for c in self.cycles:
            for pos, d in enumerate(c.darts):
                out[(d.edge, c.role)] = (c.name, pos, d.sign)
        return out

    @cached_property
    def degree(self) -> dict[str, int]:
        deg = Counter()
        for lv in self.levels:
            for v in lv.vertices:
                deg[v] += 0
            for e in lv.edges:
                deg[e.tail] += 1
                deg[e.head] += 1
        return dict(deg)

    @cached_property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(_check(self))

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def require_valid(self) -> "DistinguishingGraph":
        if self.violations:
            raise InvalidGraphError(self.violations)
        return self


def validate(graph: DistinguishingGraph) -> list[Violation]:
    """Return every violated structural invariant; an empty list means valid."""
    return list(graph.violations)


def _dart_ends(edge: Edge, sign: int) -> tuple[str, str]:
    return (edge.tail, edge.head) if sign > 0 else (edge.head, edge.tail)


def _check(g: DistinguishingGraph):
    n = len(g.levels)
    if n < 2:
        yield Violation("structural", "levels", f"need at least 2 levels, got {n}")
    for pos, lv in enumerate(g.levels, 1):
        if lv.index != pos:
            yield Violation("structural", f"level {lv.index}",
                            f"level indices must be 1..{n} without gaps")
            return
        if not lv.vertices:
            yield Violation("structural", f"level {lv.index}", "level has no vertices")

    seen: dict[str, str] = {}
    for lv in g.levels:
        for kind, names in (("vertex", lv.vertices), ("edge", [e.name for e in lv.edges])):
            for name in names:
                if name in seen:
                    yield Violation("structural", name, f"duplicate identifier ({seen[name]} and {kind})")
                seen[name] = kind
        vs = set(lv.vertices)
        for e in lv.edges:
            for end in (e.tail, e.head):
                if end not in vs:
                    yield Violation("structural", e.name,
                                    f"endpoint {end!r} is not a vertex of level {lv.index}")
    for c in g.cycles:
        if c.name in seen:
            yield Violation("structural", c.name, f"duplicate identifier ({seen[c.name]} and cycle)")
        seen[c.name] = "cycle"

    edges = g.edge_map
    edge_level = g.edge_level
    coverage: Counter = Counter()
    anchored: Counter = Counter()
    broken = False
    for c in g.cycles:
        if not 1 <= c.level <= n:
            yield Violation("structural", c.name, f"cycle on nonexistent level {c.level}")
            broken = True
            continue
        if c.level == 1 and c.role is Role.UPPER:
            yield Violation("level", c.name, "the bottom level carries only lower cycles")
        if c.level == n and c.role is Role.LOWER:
            yield Violation("level", c.name, "the top level carries only upper cycles")
        if not c.darts:
            if c.anchor is None:
                yield Violation("structural", c.name, "empty cycle without anchor vertex")
            elif g.vertex_level.get(c.anchor) != c.level:
                yield Violation("structural", c.name,
                                f"anchor {c.anchor!r} is not a vertex of level {c.level}")
                broken = True
            elif g.degree[c.anchor]:
                yield Violation("structural", c.name, f"anchor {c.anchor!r} is not an isolated vertex")
            else:
                anchored[c.anchor] += 1
            continue
        if c.anchor is not None:
            yield Violation("structural", c.name, "cycle has both darts and an anchor")
        ok = True
        for d in c.darts:
            if d.sign not in (1, -1):
                yield Violation("structural", c.name, f"dart sign must be +1 or -1, got {d.sign}")
                ok = False
            if d.edge not in edges:
                yield Violation("structural", d.edge, f"cycle {c.name} uses unknown edge")
                ok = False
            elif edge_level[d.edge] != c.level:
                yield Violation("structural", d.edge,
                                f"cycle {c.name} on level {c.level} uses an edge of level {edge_level[d.edge]}")
                ok = False
            else:
                coverage[(d.edge, c.role)] += 1
        if not ok:
            broken = True
            continue
        L = len(c.darts)
        for j, d in enumerate(c.darts):
            nxt = c.darts[(j + 1) % L]
            arrive = _dart_ends(edges[d.edge], d.sign)[1]
            leave = _dart_ends(edges[nxt.edge], nxt.sign)[0]
            if arrive != leave:
                yield Violation("structural", c.name,
                                f"not a closed walk: {d} ends at {arrive} but {nxt} starts at {leave}")
                break

    for name in edges:
        for role in Role:
            k = coverage[(name, role)]
            if k != 1 and not broken:
                yield Violation("coverage", name,
                                f"edge occurs {k} times among {role.value} cycles of its level (expected 1)")

    for v, deg in g.degree.items():
        if deg == 0 and anchored[v] != 1:
            yield Violation("structural", v, f"isolated vertex anchors {anchored[v]} cycles (expected 1)")
        if deg % 2:
            yield Violation("parity", v, f"odd number of edge-ends ({deg})")

    cyc = g.cycle_map
    lower_used: Counter = Counter()
    upper_used: Counter = Counter()
    for p in g.pairings:
        lo, up = cyc.get(p.lower), cyc.get(p.upper)
        if lo is None or up is None:
            missing = p.lower if lo is None else p.upper
            yield Violation("structural", missing, "pairing references unknown cycle")
            continue
        if lo.role is not Role.LOWER or up.role is not Role.UPPER:
            yield Violation("pairing", f"{p.lower}/{p.upper}",
                            "pairing must join a lower cycle to an upper cycle")
        elif up.level != lo.level + 1:
            yield Violation("pairing", f"{p.lower}/{p.upper}",
                            f"paired cycles sit on levels {lo.level} and {up.level}, expected consecutive")
        lower_used[p.lower] += 1
        upper_used[p.upper] += 1
    for c in g.cycles:
        used = lower_used if c.role is Role.LOWER else upper_used
        if used[c.name] != 1:
            yield Violation("pairing", c.name,
                            f"cycle occurs in {used[c.name]} pairings (expected exactly 1)")

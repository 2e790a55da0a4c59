"""Vertex-local and surface-global invariants of distinguishing graphs.

Also hosts the two presentation transforms: ``smooth`` (drop removable
degree-2 vertices) and ``subdivide_loops``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError, UnknownVertexError
from .graph import Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Role
from .unionfind import ParityUnionFind, UnionFind


class EdgeEnd(NamedTuple):
    """One end of an edge: ``side=-1`` at the tail, ``+1`` at the head."""

    edge: str
    side: int

    def __str__(self):
        return f"{self.edge}{'+' if self.side > 0 else '-'}"


class VertexKind(str, enum.Enum):
    PLANAR = "planar"
    CONIC = "conic"


@dataclass(frozen=True)
class VertexReport:
    vertex: str
    level: int
    degree: int
    local_degree_k: int
    index: int
    kind: VertexKind
    link_components: int


@dataclass(frozen=True)
class Orientation:
    """Edge directions and cycle signs with ``cycle_sign[C] * d == edge_sign[e]``."""

    edge_sign: dict
    cycle_sign: dict


@dataclass(frozen=True)
class SurfaceReport:
    connected: bool
    realizable: bool
    orientable: bool | None
    euler_characteristic: int
    genus: int | None
    vertex_reports: tuple[VertexReport, ...]

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "realizable": self.realizable,
            "orientable": self.orientable,
            "euler_characteristic": self.euler_characteristic,
            "genus": self.genus,
            "vertices": [
                {"vertex": r.vertex, "level": r.level, "degree": r.degree,
                 "k": r.local_degree_k, "index": r.index, "kind": r.kind.value,
                 "link_components": r.link_components}
                for r in self.vertex_reports
            ],
        }


def _memo(graph, key, fn):
    cache = graph.__dict__.setdefault("_memo", {})
    if key not in cache:
        cache[key] = fn()
    return cache[key]


def _arrive(d: Dart) -> EdgeEnd:
    return EdgeEnd(d.edge, 1 if d.sign > 0 else -1)


def _leave(d: Dart) -> EdgeEnd:
    return EdgeEnd(d.edge, -1 if d.sign > 0 else 1)


def _end_vertex(g: DistinguishingGraph, end: EdgeEnd) -> str:
    e = g.edge_map[end.edge]
    return e.head if end.side > 0 else e.tail


def _all_links(g: DistinguishingGraph) -> dict[str, list[tuple[EdgeEnd, ...]]]:
    g.require_valid()
    nbr = {Role.LOWER: {}, Role.UPPER: {}}
    for c in g.cycles:
        L = len(c.darts)
        for j, d in enumerate(c.darts):
            a, b = _arrive(d), _leave(c.darts[(j + 1) % L])
            nbr[c.role][a] = b
            nbr[c.role][b] = a
    lower, upper = nbr[Role.LOWER], nbr[Role.UPPER]
    by_vertex = {v: [] for v in g.vertex_level}
    seen = set()
    for start in sorted(lower):
        if start in seen:
            continue
        seq = [start]
        seen.add(start)
        cur, use_lower = start, True
        while True:
            cur = lower[cur] if use_lower else upper[cur]
            use_lower = not use_lower
            if cur == start:
                break
            seq.append(cur)
            seen.add(cur)
        by_vertex[_end_vertex(g, start)].append(tuple(seq))
    return by_vertex


def vertex_link(g: DistinguishingGraph, v: str) -> list[tuple[EdgeEnd, ...]]:
    """Link of ``v``: its edge-ends joined along cycle fragments through ``v``.

    Every end has one lower-cycle and one upper-cycle neighbour, so the link is
    a disjoint union of cycles.  Each is returned starting at its smallest end
    and leaving that end along its lower-cycle adjacency.  Isolated vertices
    have an empty link.
    """
    links = _memo(g, "links", lambda: _all_links(g))
    if v not in links:
        raise UnknownVertexError(v)
    return list(links[v])


def classify_vertex(g: DistinguishingGraph, v: str) -> VertexKind:
    link = vertex_link(g, v)
    return VertexKind.PLANAR if len(link) <= 1 else VertexKind.CONIC


def vertex_report(g: DistinguishingGraph, v: str) -> VertexReport:
    link = vertex_link(g, v)
    deg = g.degree[v]
    k = deg // 2
    kind = VertexKind.PLANAR if len(link) <= 1 else VertexKind.CONIC
    return VertexReport(v, g.vertex_level[v], deg, k, 1 - k, kind, len(link))


def poincare_index(g: DistinguishingGraph, v: str) -> int:
    return vertex_report(g, v).index


def locally_equivalent(g1: DistinguishingGraph, v1: str, g2: DistinguishingGraph, v2: str) -> bool:
    """Whether the two critical points have topologically equivalent germs."""
    return poincare_index(g1, v1) == poincare_index(g2, v2)


def is_realizable(g: DistinguishingGraph) -> bool:
    return _memo(g, "realizable", lambda: all(
        len(vertex_link(g, v)) <= 1 for v in g.vertex_level))


def euler_characteristic(g: DistinguishingGraph) -> int:
    g.require_valid()
    return sum(1 - deg // 2 for deg in g.degree.values())


def orientation_assignment(g: DistinguishingGraph) -> Orientation | None:
    """Coherent directions for edges and cycles, or None if non-orientable.

    Constraints: every dart ``(e, d)`` of a cycle ``C`` satisfies
    ``cycle_sign[C] * d == edge_sign[e]``, and the two ends of a cylinder whose
    ends both carry darts get equal signs (their stored orientations are
    parallel along the cylinder).
    """
    if not is_realizable(g):
        raise PreconditionError("orientation is only defined for realizable graphs")
    return _memo(g, "orientation", lambda: _orient(g))


def _orient(g: DistinguishingGraph) -> Orientation | None:
    uf = ParityUnionFind()
    for e in g.edge_map:
        uf.add(("e", e))
    for c in g.cycles:
        if c.is_point:
            continue
        uf.add(("c", c.name))
        for d in c.darts:
            if not uf.union(("c", c.name), ("e", d.edge), 0 if d.sign > 0 else 1):
                return None
    cyc = g.cycle_map
    for p in g.pairings:
        if not (cyc[p.lower].is_point or cyc[p.upper].is_point):
            if not uf.union(("c", p.lower), ("c", p.upper), 0):
                return None
    edge_sign, cycle_sign = {}, {}
    for node in list(uf.parent):
        _, parity = uf.find(node)
        (edge_sign if node[0] == "e" else cycle_sign)[node[1]] = -1 if parity else 1
    return Orientation(edge_sign, cycle_sign)


def is_orientable(g: DistinguishingGraph) -> bool:
    return orientation_assignment(g) is not None


def is_connected(g: DistinguishingGraph) -> bool:
    """Connectivity of the surface glued from level components and cylinders."""
    g.require_valid()

    def compute():
        comps = UnionFind(g.vertex_level)
        for e in g.edge_map.values():
            comps.union(e.tail, e.head)
        uf = UnionFind()
        for v in g.vertex_level:
            uf.add(("comp", comps.find(v)))

        def comp_of(c: Cycle):
            v = c.anchor if c.is_point else g.edge_map[c.darts[0].edge].tail
            return ("comp", comps.find(v))

        cyc = g.cycle_map
        for i, p in enumerate(g.pairings):
            uf.add(("cyl", i))
            uf.union(("cyl", i), comp_of(cyc[p.lower]))
            uf.union(("cyl", i), comp_of(cyc[p.upper]))
        return len(uf.groups()) == 1

    return _memo(g, "connected", compute)


def surface_report(g: DistinguishingGraph) -> SurfaceReport:
    g.require_valid()
    reports = tuple(vertex_report(g, v) for v in sorted(g.vertex_level, key=lambda v: (g.vertex_level[v], v)))
    chi = sum(r.index for r in reports)
    connected = is_connected(g)
    realizable = all(r.kind is VertexKind.PLANAR for r in reports)
    orientable = is_orientable(g) if realizable else None
    genus = None
    if realizable and connected:
        genus = (2 - chi) // 2 if orientable else 2 - chi
    return SurfaceReport(connected, realizable, orientable, chi, genus, reports)


def require_classifiable(g: DistinguishingGraph) -> None:
    """Raise unless ``g`` is valid, connected, realizable and smooth."""
    g.require_valid()
    if not is_connected(g):
        raise PreconditionError("graph is disconnected")
    if not is_realizable(g):
        raise PreconditionError("graph is not realizable (has a conic vertex)")
    if not is_smooth(g):
        raise PreconditionError("graph has removable degree-2 vertices; apply smooth() first")


# -- presentation transforms -------------------------------------------------

def _removable(edges: dict, v: str) -> list[str]:
    inc = [n for n, (t, h) in edges.items() if t == v or h == v]
    if len(inc) == 2 and all(edges[n][0] != edges[n][1] for n in inc):
        ends = sum((edges[n][0] == v) + (edges[n][1] == v) for n in inc)
        if ends == 2:
            return sorted(inc)
    return []


def is_smooth(g: DistinguishingGraph) -> bool:
    return _memo(g, "smooth", lambda: not any(
        _removable({e.name: (e.tail, e.head) for e in lv.edges}, v)
        for lv in g.levels for v in lv.vertices))


def smooth(g: DistinguishingGraph) -> DistinguishingGraph:
    """Merge the two edges at every degree-2 vertex into one.

    A bare circle keeps one vertex and becomes a single loop.  The merged edge
    keeps the name of the alphabetically first edge and runs through the
    removed vertex in the direction of that edge's arrival.
    """
    g.require_valid()
    cycles = {c.name: list(c.darts) for c in g.cycles}
    levels = []
    for lv in g.levels:
        verts = list(lv.vertices)
        edges = {e.name: (e.tail, e.head) for e in lv.edges}
        for v in lv.vertices:
            pair = _removable(edges, v)
            if not pair:
                continue
            e1, e2 = pair
            s1 = 1 if edges[e1][1] == v else -1
            s2 = 1 if edges[e2][0] == v else -1
            p = edges[e1][0] if s1 > 0 else edges[e1][1]
            q = edges[e2][1] if s2 > 0 else edges[e2][0]
            for role in Role:
                cname = g.edge_home[(e1, role)][0]
                cycles[cname] = _splice(cycles[cname], e1, s1, e2, s2)
            edges[e1] = (p, q)
            del edges[e2]
            verts.remove(v)
        levels.append(LevelGraph(lv.index, tuple(verts), tuple(Edge(n, t, h) for n, (t, h) in edges.items())))
    new_cycles = [Cycle(c.name, c.level, c.role, tuple(cycles[c.name]), c.anchor) for c in g.cycles]
    return DistinguishingGraph(tuple(levels), tuple(new_cycles), g.pairings)


def _splice(darts: list[Dart], e1: str, s1: int, e2: str, s2: int) -> list[Dart]:
    L = len(darts)
    i = next(j for j, d in enumerate(darts) if d.edge == e1)
    if darts[i].sign == s1:
        j, merged = (i + 1) % L, Dart(e1, 1)
        expect = Dart(e2, s2)
    else:
        j, merged = (i - 1) % L, Dart(e1, -1)
        expect = Dart(e2, -s2)
    if darts[j] != expect:
        raise AssertionError(f"cycle does not pass straight through the vertex at {e1}/{e2}")
    out = list(darts)
    out[i] = merged
    del out[j]
    return out


def _fresh(base: str, taken: set) -> str:
    name, k = base, 1
    while name in taken:
        k += 1
        name = f"{base}{k}"
    taken.add(name)
    return name


def subdivide_loops(g: DistinguishingGraph) -> DistinguishingGraph:
    """Split every loop into two edges through a new degree-2 vertex."""
    g.require_valid()
    taken = set(g.vertex_level) | set(g.edge_map) | set(g.cycle_map)
    split = {}
    levels = []
    for lv in g.levels:
        verts, edges = list(lv.vertices), []
        for e in lv.edges:
            if not e.is_loop:
                edges.append(e)
                continue
            w = _fresh(f"{e.name}.v", taken)
            a, b = _fresh(f"{e.name}.1", taken), _fresh(f"{e.name}.2", taken)
            verts.append(w)
            edges += [Edge(a, e.tail, w), Edge(b, w, e.head)]
            split[e.name] = (a, b)
        levels.append(LevelGraph(lv.index, tuple(verts), tuple(edges)))
    cycles = []
    for c in g.cycles:
        darts = []
        for d in c.darts:
            if d.edge not in split:
                darts.append(d)
            elif d.sign > 0:
                a, b = split[d.edge]
                darts += [Dart(a, 1), Dart(b, 1)]
            else:
                a, b = split[d.edge]
                darts += [Dart(b, -1), Dart(a, -1)]
        cycles.append(Cycle(c.name, c.level, c.role, tuple(darts), c.anchor))
    return DistinguishingGraph(tuple(levels), tuple(cycles), g.pairings)

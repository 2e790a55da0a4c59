"""Negation, mirror, and the three classification relations.

Isomorphisms map level graphs to level graphs preserving level order, roles
and pairings.  Each edge ``e`` goes to ``edge_map[e] = (e', delta)`` where
``delta = -1`` means the direction is reversed.  Each cycle goes to a target
cycle read forwards (``rho = +1``) or backwards with flipped darts
(``rho = -1``).  The two ends of a cylinder flip together when both ends carry
darts.
"""
from __future__ import annotations

import enum
import itertools
import math
from collections import deque
from dataclasses import dataclass

from .errors import PreconditionError, SizeGuardError
from .graph import Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Pairing, Role
from .topology import require_classifiable, vertex_link


class Relation(str, enum.Enum):
    ORIENTED_CONJUGACY = "oriented-conjugate"
    CONJUGACY = "conjugate"
    EQUIVALENCE = "equivalent"


@dataclass(frozen=True)
class IsoWitness:
    vertex_map: dict
    edge_map: dict
    cycle_map: dict
    negated: bool = False


def negate(g: DistinguishingGraph) -> DistinguishingGraph:
    """Distinguishing graph of ``-f``: levels reversed, lower and upper swapped."""
    g.require_valid()
    n = g.n_levels
    levels = tuple(LevelGraph(n + 1 - lv.index, lv.vertices, lv.edges) for lv in g.levels)
    cycles = tuple(Cycle(c.name, n + 1 - c.level, c.role.other, c.darts, c.anchor) for c in g.cycles)
    pairings = tuple(Pairing(p.upper, p.lower) for p in g.pairings)
    return DistinguishingGraph(levels, cycles, pairings)


def mirror(g: DistinguishingGraph) -> DistinguishingGraph:
    """Reverse the orientation of every cycle."""
    g.require_valid()
    return DistinguishingGraph(g.levels, tuple(c.reversed() for c in g.cycles), g.pairings)


# -- backtracking search -----------------------------------------------------

def _signature(g: DistinguishingGraph, v: str):
    return (g.vertex_level[v], g.degree[v], tuple(sorted(len(c) for c in vertex_link(g, v))))


def _cycle_sig(c: Cycle):
    return (c.level, c.role, len(c.darts))


class _Search:
    def __init__(self, g1, g2, oriented):
        self.g1, self.g2, self.oriented = g1, g2, oriented
        self.vsig1 = {v: _signature(g1, v) for v in g1.vertex_level}
        self.vsig2 = {v: _signature(g2, v) for v in g2.vertex_level}

    def rho_options(self, state, c: Cycle):
        if self.oriented:
            return (1,)
        p = self.g1.partner.get(c.name)
        if p in state["cmap"] and not c.is_point and not self.g1.cycle_map[p].is_point:
            return (state["cmap"][p][1],)
        return (1, -1)

    def map_vertex(self, state, v, w):
        vmap, vinv = state["vmap"], state["vinv"]
        if v in vmap:
            return vmap[v] == w
        if w in vinv or self.vsig1[v] != self.vsig2[w]:
            return False
        vmap[v] = w
        vinv[w] = v
        return True

    def assign(self, state, c_name, t_name, off, rho) -> bool:
        g1, g2 = self.g1, self.g2
        queue = deque([(c_name, t_name, off, rho)])
        while queue:
            c_name, t_name, off, rho = queue.popleft()
            c, t = g1.cycle_map[c_name], g2.cycle_map[t_name]
            if _cycle_sig(c) != _cycle_sig(t):
                return False
            if self.oriented and rho < 0:
                return False
            cmap, cinv = state["cmap"], state["cinv"]
            if c_name in cmap:
                if cmap[c_name] != (t_name, rho):
                    return False
            else:
                if t_name in cinv:
                    return False
                p = g1.partner.get(c_name)
                if p in cmap:
                    pt, prho = cmap[p]
                    if g2.partner.get(t_name) != pt:
                        return False
                    if not c.is_point and not g1.cycle_map[p].is_point and prho != rho:
                        return False
                cmap[c_name] = (t_name, rho)
                cinv[t_name] = c_name
            if c.is_point:
                if not self.map_vertex(state, c.anchor, t.anchor):
                    return False
                continue
            L = len(c.darts)
            for j, d in enumerate(c.darts):
                if rho > 0:
                    td = t.darts[(off + j) % L]
                else:
                    td = t.darts[(off - j) % L].flipped()
                delta = d.sign * td.sign
                res = self.map_edge(state, d.edge, td.edge, delta)
                if res is False:
                    return False
                if res is True:
                    # newly mapped edge forces the alignment of its other cycle
                    role = c.role.other
                    c2, p1, s1 = g1.edge_home[(d.edge, role)]
                    t2, p2, s2 = g2.edge_home[(td.edge, role)]
                    if s1 * delta == s2:
                        queue.append((c2, t2, p2 - p1, 1))
                    else:
                        queue.append((c2, t2, p2 + p1, -1))
        return True

    def map_edge(self, state, e, f, delta):
        """True if newly mapped, None if already mapped consistently, False on conflict."""
        emap, einv = state["emap"], state["einv"]
        if e in emap:
            return None if emap[e] == (f, delta) else False
        if f in einv:
            return False
        e1, e2 = self.g1.edge_map[e], self.g2.edge_map[f]
        if delta > 0:
            ok = self.map_vertex(state, e1.tail, e2.tail) and self.map_vertex(state, e1.head, e2.head)
        else:
            ok = self.map_vertex(state, e1.tail, e2.head) and self.map_vertex(state, e1.head, e2.tail)
        if not ok:
            return False
        emap[e] = (f, delta)
        einv[f] = e
        return True

    def candidates(self, state, c: Cycle):
        p = self.g1.partner.get(c.name)
        if p in state["cmap"]:
            targets = [self.g2.partner[state["cmap"][p][0]]]
        else:
            targets = [t.name for t in self.g2.cycles
                       if _cycle_sig(t) == _cycle_sig(c) and t.name not in state["cinv"]]
        for t in targets:
            for rho in self.rho_options(state, c):
                for off in range(max(1, len(c.darts))):
                    yield t, off, rho

    def run(self):
        if len(self.g1.cycles) != len(self.g2.cycles) or self.g1.n_levels != self.g2.n_levels:
            return None
        state = {k: {} for k in ("cmap", "cinv", "emap", "einv", "vmap", "vinv")}
        return self._extend(state)

    def _extend(self, state):
        pending = [c for c in self.g1.cycles if c.name not in state["cmap"]]
        if not pending:
            return state
        # prefer a cycle whose target is forced by its partner
        c = min(pending, key=lambda c: (self.g1.partner.get(c.name) not in state["cmap"],
                                        len(c.darts), c.name))
        for t, off, rho in list(self.candidates(state, c)):
            trial = {k: dict(v) for k, v in state.items()}
            if self.assign(trial, c.name, t, off, rho):
                found = self._extend(trial)
                if found is not None:
                    return found
        return None


def _check_pair(g1, g2):
    require_classifiable(g1)
    require_classifiable(g2)


def _conjugacy_witness(g1, g2, oriented, negated=False):
    state = _Search(g1, g2, oriented).run()
    if state is None:
        return None
    return IsoWitness(state["vmap"], state["emap"], state["cmap"], negated)


def find_isomorphism(g1: DistinguishingGraph, g2: DistinguishingGraph,
                     relation: Relation) -> IsoWitness | None:
    """Witness that ``g1`` and ``g2`` are related, or None.

    For equivalence the witness targets ``negate(g2)`` when ``negated`` is set.
    Inputs must be valid, connected, realizable and smoothed.
    """
    relation = Relation(relation)
    _check_pair(g1, g2)
    if relation is Relation.ORIENTED_CONJUGACY:
        return _conjugacy_witness(g1, g2, True)
    w = _conjugacy_witness(g1, g2, False)
    if w is None and relation is Relation.EQUIVALENCE:
        w = _conjugacy_witness(g1, negate(g2), False, negated=True)
    return w


def are_related(g1: DistinguishingGraph, g2: DistinguishingGraph, relation: Relation) -> bool:
    return find_isomorphism(g1, g2, relation) is not None


def verify_witness(g1: DistinguishingGraph, g2: DistinguishingGraph, w: IsoWitness,
                   relation: Relation) -> list[str]:
    """Independent check of every witness invariant; returns the failures."""
    relation = Relation(relation)
    if w.negated:
        g2 = negate(g2)
    errs = []
    if sorted(w.vertex_map) != sorted(g1.vertex_level) or sorted(w.vertex_map.values()) != sorted(g2.vertex_level):
        errs.append("vertex map is not a bijection")
    if sorted(w.edge_map) != sorted(g1.edge_map) or sorted(f for f, _ in w.edge_map.values()) != sorted(g2.edge_map):
        errs.append("edge map is not a bijection")
    if sorted(w.cycle_map) != sorted(g1.cycle_map) or sorted(t for t, _ in w.cycle_map.values()) != sorted(g2.cycle_map):
        errs.append("cycle map is not a bijection")
    if errs:
        return errs
    for v, u in w.vertex_map.items():
        if g1.vertex_level[v] != g2.vertex_level[u]:
            errs.append(f"vertex {v} changes level")
    for e, (f, delta) in w.edge_map.items():
        a, b = g1.edge_map[e], g2.edge_map[f]
        ends = (b.tail, b.head) if delta > 0 else (b.head, b.tail)
        if (w.vertex_map[a.tail], w.vertex_map[a.head]) != ends:
            errs.append(f"edge {e} incidence not preserved")
    for cname, (tname, rho) in w.cycle_map.items():
        c, t = g1.cycle_map[cname], g2.cycle_map[tname]
        if (c.level, c.role) != (t.level, t.role):
            errs.append(f"cycle {cname} changes level or role")
        if relation is Relation.ORIENTED_CONJUGACY and rho != 1:
            errs.append(f"cycle {cname} reversed under oriented conjugacy")
        if c.is_point:
            if not t.is_point or w.vertex_map[c.anchor] != t.anchor:
                errs.append(f"point cycle {cname} not matched")
            continue
        image = [Dart(w.edge_map[d.edge][0], d.sign * w.edge_map[d.edge][1]) for d in c.darts]
        target = list(t.darts) if rho > 0 else [d.flipped() for d in reversed(t.darts)]
        if not _is_rotation(image, target):
            errs.append(f"cycle {cname} does not map onto {tname}")
    for p in g1.pairings:
        (lo, rlo), (up, rup) = w.cycle_map[p.lower], w.cycle_map[p.upper]
        if g2.partner.get(lo) != up:
            errs.append(f"pairing {p.lower}/{p.upper} not preserved")
        if not (g1.cycle_map[p.lower].is_point or g1.cycle_map[p.upper].is_point) and rlo != rup:
            errs.append(f"cylinder {p.lower}/{p.upper} flips one end only")
    return errs


def _is_rotation(a, b) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = b + b
    return any(doubled[i:i + len(a)] == a for i in range(len(b)))


# -- canonical keys ----------------------------------------------------------

class _Labeler:
    """Traversal that relabels a graph from a start cycle and branch choices.

    Edges are named in order of first visit and oriented along that visit;
    cycles are read starting at their least-labelled edge when one exists.
    Minimising the resulting code over all branches gives a complete
    invariant of the relation's orbit.
    """

    def __init__(self, g, oriented):
        self.g, self.oriented = g, oriented

    def codes(self):
        for c in self.g.cycles:
            if c.level != 1:
                continue
            state = {"v": {}, "e": {}, "c": {}, "queue": deque([c.name])}
            yield from self._walk(state)

    def _walk(self, state):
        g = self.g
        queue = state["queue"]
        while queue:
            name = queue.popleft()
            if name in state["c"]:
                continue
            c = g.cycle_map[name]
            if c.is_point:
                self._label_vertex(state, c.anchor)
                state["c"][name] = (len(state["c"]), 1, 0)
                if name in g.partner:
                    queue.append(g.partner[name])
                continue
            for rho, start in self._options(state, c):
                branch = {"v": dict(state["v"]), "e": dict(state["e"]), "c": dict(state["c"]),
                          "queue": deque(queue)}
                self._read(branch, c, rho, start)
                yield from self._walk(branch)
            return
        yield self._code(state)

    def _options(self, state, c):
        g = self.g
        p = g.partner.get(c.name)
        if self.oriented:
            rhos = (1,)
        elif p in state["c"] and not g.cycle_map[p].is_point:
            rhos = (state["c"][p][1],)
        else:
            rhos = (1, -1)
        for rho in rhos:
            darts = c.darts if rho > 0 else tuple(d.flipped() for d in reversed(c.darts))
            labelled = [(state["e"][d.edge][0], i) for i, d in enumerate(darts) if d.edge in state["e"]]
            if labelled:
                yield rho, min(labelled)[1]
            else:
                for start in range(len(darts)):
                    yield rho, start

    def _label_vertex(self, state, v):
        if v not in state["v"]:
            state["v"][v] = len(state["v"])

    def _read(self, state, c, rho, start):
        g = self.g
        darts = c.darts if rho > 0 else tuple(d.flipped() for d in reversed(c.darts))
        darts = darts[start:] + darts[:start]
        for d in darts:
            if d.edge not in state["e"]:
                e = g.edge_map[d.edge]
                tail, head = (e.tail, e.head) if d.sign > 0 else (e.head, e.tail)
                self._label_vertex(state, tail)
                self._label_vertex(state, head)
                state["e"][d.edge] = (len(state["e"]), d.sign)
        state["c"][c.name] = (len(state["c"]), rho, start)
        for d in darts:
            state["queue"].append(g.edge_home[(d.edge, c.role.other)][0])
        if c.name in g.partner:
            state["queue"].append(g.partner[c.name])

    def _code(self, state):
        g = self.g
        if len(state["c"]) != len(g.cycles) or len(state["v"]) != len(g.vertex_level):
            raise PreconditionError("traversal did not reach the whole graph")
        vl, el = state["v"], state["e"]
        verts = sorted((vl[v], g.vertex_level[v]) for v in g.vertex_level)
        edges = []
        for name, e in g.edge_map.items():
            label, orient = el[name]
            tail, head = (e.tail, e.head) if orient > 0 else (e.head, e.tail)
            edges.append((label, g.edge_level[name], vl[tail], vl[head]))
        cycles = []
        for name, (label, rho, start) in state["c"].items():
            c = g.cycle_map[name]
            role = 0 if c.role is Role.LOWER else 1
            if c.is_point:
                cycles.append((label, c.level, role, vl[c.anchor], ()))
                continue
            darts = c.darts if rho > 0 else tuple(d.flipped() for d in reversed(c.darts))
            darts = darts[start:] + darts[:start]
            body = tuple((el[d.edge][0], d.sign * el[d.edge][1]) for d in darts)
            cycles.append((label, c.level, role, -1, body))
        cl = {name: v[0] for name, v in state["c"].items()}
        pairs = sorted((cl[p.lower], cl[p.upper]) for p in g.pairings)
        return (g.n_levels, tuple(verts), tuple(sorted(edges)), tuple(sorted(cycles)), tuple(pairs))


def _code_graph(code) -> DistinguishingGraph:
    n, verts, edges, cycles, pairs = code
    levels = []
    for i in range(1, n + 1):
        vs = tuple(f"v{label}" for label, lvl in verts if lvl == i)
        es = tuple(Edge(f"e{label}", f"v{t}", f"v{h}") for label, lvl, t, h in edges if lvl == i)
        levels.append(LevelGraph(i, vs, es))
    cyc = []
    for label, lvl, role, anchor, body in cycles:
        r = Role.LOWER if role == 0 else Role.UPPER
        if anchor >= 0:
            cyc.append(Cycle(f"c{label}", lvl, r, (), f"v{anchor}"))
        else:
            cyc.append(Cycle(f"c{label}", lvl, r, tuple(Dart(f"e{e}", s) for e, s in body)))
    return DistinguishingGraph(tuple(levels), tuple(cyc), tuple(Pairing(f"c{a}", f"c{b}") for a, b in pairs))


def _min_code(g, oriented):
    return min(_Labeler(g, oriented).codes())


def canonical_form(g: DistinguishingGraph, relation: Relation) -> DistinguishingGraph:
    """Least relabelling of ``g`` (or of ``negate(g)``) admitted by the relation."""
    from .textio import serialize_text

    relation = Relation(relation)
    require_classifiable(g)
    oriented = relation is Relation.ORIENTED_CONJUGACY
    best = _code_graph(_min_code(g, oriented))
    if relation is Relation.EQUIVALENCE:
        other = _code_graph(_min_code(negate(g), False))
        if serialize_text(other) < serialize_text(best):
            best = other
    return best


def canonical_key(g: DistinguishingGraph, relation: Relation) -> bytes:
    """Bytes equal for two graphs exactly when they are related."""
    from .textio import serialize_text

    return serialize_text(canonical_form(g, relation)).encode()


# -- exhaustive oracle -------------------------------------------------------

ORACLE_LIMIT = 500_000


def _oracle_space(g: DistinguishingGraph) -> int:
    total = 1
    for lv in g.levels:
        isolated = sum(1 for v in lv.vertices if g.degree[v] == 0)
        total *= math.factorial(len(lv.edges)) * 2 ** len(lv.edges) * math.factorial(isolated)
    return total


def oracle_isomorphic(g1: DistinguishingGraph, g2: DistinguishingGraph, relation: Relation,
                      limit: int = ORACLE_LIMIT) -> bool:
    """Reference decision by enumerating every level-respecting bijection.

    Vertices incident to edges follow the edge bijection; isolated vertices
    are permuted separately.  Refuses instances whose search space exceeds
    ``limit``.
    """
    relation = Relation(relation)
    _check_pair(g1, g2)
    space = _oracle_space(g1)
    if space > limit:
        raise SizeGuardError(f"oracle search space {space} exceeds limit {limit}")
    if relation is Relation.ORIENTED_CONJUGACY:
        return _oracle(g1, g2, True)
    if _oracle(g1, g2, False):
        return True
    return relation is Relation.EQUIVALENCE and _oracle(g1, negate(g2), False)


def _oracle(g1, g2, oriented) -> bool:
    if g1.n_levels != g2.n_levels:
        return False
    per_level = []
    for l1, l2 in zip(g1.levels, g2.levels):
        iso1 = [v for v in l1.vertices if g1.degree[v] == 0]
        iso2 = [v for v in l2.vertices if g2.degree[v] == 0]
        if len(l1.edges) != len(l2.edges) or len(iso1) != len(iso2) or len(l1.vertices) != len(l2.vertices):
            return False
        names1 = [e.name for e in l1.edges]
        names2 = [e.name for e in l2.edges]
        options = []
        for perm in itertools.permutations(names2):
            for signs in itertools.product((1, -1), repeat=len(names1)):
                options.append({e: (f, s) for e, f, s in zip(names1, perm, signs)})
        isos = [dict(zip(iso1, p)) for p in itertools.permutations(iso2)]
        per_level.append((options, isos))
    for choice in itertools.product(*(opts for opts, _ in per_level)):
        emap = {}
        for part in choice:
            emap.update(part)
        vmap = _vertex_map_from_edges(g1, g2, emap)
        if vmap is None:
            continue
        for iso_choice in itertools.product(*(isos for _, isos in per_level)):
            full = dict(vmap)
            for part in iso_choice:
                full.update(part)
            if _oracle_accepts(g1, g2, emap, full, oriented):
                return True
    return False


def _vertex_map_from_edges(g1, g2, emap):
    vmap = {}
    for e, (f, s) in emap.items():
        a, b = g1.edge_map[e], g2.edge_map[f]
        pairs = ((a.tail, b.tail), (a.head, b.head)) if s > 0 else ((a.tail, b.head), (a.head, b.tail))
        for v, w in pairs:
            if vmap.setdefault(v, w) != w:
                return None
    if len(set(vmap.values())) != len(vmap):
        return None
    return vmap


def _oracle_accepts(g1, g2, emap, vmap, oriented) -> bool:
    cmap = {}
    for c in g1.cycles:
        if c.is_point:
            hits = [(t.name, 1) for t in g2.cycles
                    if t.is_point and t.anchor == vmap[c.anchor] and (t.level, t.role) == (c.level, c.role)]
        else:
            image = [Dart(emap[d.edge][0], d.sign * emap[d.edge][1]) for d in c.darts]
            hits = []
            for t in g2.cycles:
                if (t.level, t.role) != (c.level, c.role) or t.is_point:
                    continue
                if _is_rotation(image, list(t.darts)):
                    hits.append((t.name, 1))
                if not oriented and _is_rotation(image, [d.flipped() for d in reversed(t.darts)]):
                    hits.append((t.name, -1))
        if not hits:
            return False
        cmap[c.name] = hits
    # each nonempty cycle has a unique target; a palindromic cycle may admit both readings
    for choice in itertools.product(*cmap.values()):
        assign = dict(zip(cmap, choice))
        if len({t for t, _ in assign.values()}) != len(assign):
            continue
        ok = True
        for p in g1.pairings:
            (lo, rlo), (up, rup) = assign[p.lower], assign[p.upper]
            if g2.partner.get(lo) != up:
                ok = False
                break
            if not (g1.cycle_map[p.lower].is_point or g1.cycle_map[p.upper].is_point) and rlo != rup:
                ok = False
                break
        if ok:
            return True
    return False

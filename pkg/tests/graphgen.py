"""Random distinguishing graphs for property tests."""
from __future__ import annotations

import random

from distgraph import (
    Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Pairing, Role, SignedWord,
    is_connected, word_planar, word_to_graph,
)


def random_word(rng: random.Random, m: int, signed: bool | None = None, planar=True) -> SignedWord:
    while True:
        perm = list(range(1, m))
        rng.shuffle(perm)
        if signed is None:
            signs = [rng.choice((1, -1)) for _ in perm]
        elif signed:
            signs = [rng.choice((1, -1)) for _ in perm]
            if m > 1 and all(s > 0 for s in signs):
                signs[rng.randrange(m - 1)] = -1
        else:
            signs = [1] * (m - 1)
        w = SignedWord(((0, 1),) + tuple(zip(perm, signs)))
        if not planar or word_planar(w):
            return w


def relabel(g: DistinguishingGraph, rng: random.Random, tag="r") -> DistinguishingGraph:
    """Rename every identifier and rotate every cycle body."""
    names = list(g.vertex_level) + list(g.edge_map) + list(g.cycle_map)
    fresh = [f"{tag}{i}" for i in range(len(names))]
    rng.shuffle(fresh)
    ren = dict(zip(names, fresh))
    levels = tuple(LevelGraph(lv.index, tuple(ren[v] for v in lv.vertices),
                              tuple(Edge(ren[e.name], ren[e.tail], ren[e.head]) for e in lv.edges))
                   for lv in g.levels)
    cycles = []
    for c in g.cycles:
        darts = [Dart(ren[d.edge], d.sign) for d in c.darts]
        if darts:
            k = rng.randrange(len(darts))
            darts = darts[k:] + darts[:k]
        cycles.append(Cycle(ren[c.name], c.level, c.role, tuple(darts),
                            ren[c.anchor] if c.anchor else None))
    pairs = tuple(Pairing(ren[p.lower], ren[p.upper]) for p in g.pairings)
    return DistinguishingGraph(levels, tuple(cycles), pairs)


def reverse_edge(g: DistinguishingGraph, name: str) -> DistinguishingGraph:
    """Swap an edge's tail and head; the graph it presents is unchanged."""
    levels = tuple(LevelGraph(lv.index, lv.vertices,
                              tuple(Edge(e.name, e.head, e.tail) if e.name == name else e for e in lv.edges))
                   for lv in g.levels)
    cycles = tuple(Cycle(c.name, c.level, c.role,
                         tuple(d.flipped() if d.edge == name else d for d in c.darts), c.anchor)
                   for c in g.cycles)
    return DistinguishingGraph(levels, cycles, g.pairings)


def reverse_cycle(g: DistinguishingGraph, name: str) -> DistinguishingGraph:
    return DistinguishingGraph(g.levels, tuple(c.reversed() if c.name == name else c for c in g.cycles),
                               g.pairings)


def shuffle_presentation(g: DistinguishingGraph, rng: random.Random) -> DistinguishingGraph:
    """Isomorphic copy: random edge reversals, then relabel and rotate."""
    for name in g.edge_map:
        if rng.random() < 0.5:
            g = reverse_edge(g, name)
    return relabel(g, rng)


def random_multilevel(rng: random.Random, saddle_levels=2, max_vertices=2, max_k=3,
                      max_edges=6) -> DistinguishingGraph:
    """Connected realizable graph with several saddle levels.

    At every vertex the edge-ends are put in a random cyclic order whose
    consecutive pairs alternate between lower-cycle and upper-cycle
    fragments, so each vertex link is a single cycle.  Extra extrema are added
    where the numbers of lower and upper cycles across a cylinder layer
    disagree.
    """
    while True:
        g = _attempt(rng, saddle_levels, max_vertices, max_k, max_edges)
        if g is not None and g.is_valid and is_connected(g):
            return g


def _attempt(rng, saddle_levels, max_vertices, max_k, max_edges):
    counter = iter(range(10_000))

    def fresh(prefix):
        return f"{prefix}{next(counter)}"

    mids = []
    for _ in range(saddle_levels):
        verts = [fresh("v") for _ in range(rng.randint(1, max_vertices))]
        ends = []
        for v in verts:
            ends += [v] * (2 * rng.randint(1, max_k))
        if len(ends) // 2 > max_edges:
            return None
        rng.shuffle(ends)
        edges = [Edge(fresh("e"), ends[i], ends[i + 1]) for i in range(0, len(ends), 2)]
        # edge-end ids: (edge, -1) tail, (edge, +1) head
        at = {v: [] for v in verts}
        for e in edges:
            at[e.tail].append((e.name, -1))
            at[e.head].append((e.name, 1))
        nbr = {Role.LOWER: {}, Role.UPPER: {}}
        for v, es in at.items():
            rng.shuffle(es)
            for i in range(len(es)):
                a, b = es[i], es[(i + 1) % len(es)]
                role = Role.LOWER if i % 2 == 0 else Role.UPPER
                nbr[role][a] = b
                nbr[role][b] = a
        cycles = {Role.LOWER: [], Role.UPPER: []}
        for role in Role:
            used = set()
            for e in edges:
                if e.name in used:
                    continue
                darts, d = [], Dart(e.name, 1)
                while True:
                    darts.append(d)
                    used.add(d.edge)
                    arrive = (d.edge, 1 if d.sign > 0 else -1)
                    leave = nbr[role][arrive]
                    d = Dart(leave[0], 1 if leave[1] < 0 else -1)
                    if d == darts[0]:
                        break
                if rng.random() < 0.5:
                    darts = [x.flipped() for x in reversed(darts)]
                cycles[role].append(tuple(darts))
        mids.append((verts, edges, cycles))

    n = saddle_levels + 2
    level_verts = {i: [] for i in range(1, n + 1)}
    level_edges = {i: [] for i in range(1, n + 1)}
    level_cycles = {i: {Role.LOWER: [], Role.UPPER: []} for i in range(1, n + 1)}
    for i, (verts, edges, cycles) in enumerate(mids, 2):
        level_verts[i] += verts
        level_edges[i] += edges
        for role in Role:
            for darts in cycles[role]:
                level_cycles[i][role].append(Cycle(fresh("c"), i, role, darts))

    def extremum(i, role):
        v = fresh("x")
        level_verts[i].append(v)
        level_cycles[i][role].append(Cycle(fresh("c"), i, role, (), v))

    pairings = []
    for i in range(1, n):
        lows, ups = level_cycles[i][Role.LOWER], level_cycles[i + 1][Role.UPPER]
        while len(lows) < len(ups):
            extremum(i, Role.LOWER)
        while len(ups) < len(lows):
            extremum(i + 1, Role.UPPER)
        lows, ups = list(level_cycles[i][Role.LOWER]), list(level_cycles[i + 1][Role.UPPER])
        rng.shuffle(ups)
        pairings += [Pairing(a.name, b.name) for a, b in zip(lows, ups)]
    levels = tuple(LevelGraph(i, tuple(level_verts[i]), tuple(level_edges[i])) for i in range(1, n + 1))
    cycles = tuple(c for i in level_cycles for role in Role for c in level_cycles[i][role])
    return DistinguishingGraph(levels, cycles, tuple(pairings))


def word_graph(rng, m_choices=(2, 3, 4, 5), signed=None):
    return word_to_graph(random_word(rng, rng.choice(m_choices), signed))

"""Signed words for minimal functions and their enumeration.

A minimal function on a surface other than the sphere has a minimum, a
maximum and one saddle whose level is a bouquet of ``m`` loops.  Naming the
loops ``a, b, c, ...`` so that the lower cycle reads ``a+ b+ c+ ...``, the
function is determined by the upper cycle, spelled as a signed word.  A
trailing ``-`` marks a loop traversed against its direction.
"""
from __future__ import annotations

import itertools
import re
import string
from dataclasses import dataclass

from .classify import Relation, are_related, canonical_key, negate
from .errors import PreconditionError, ShapeError, WordError
from .graph import Cycle, Dart, DistinguishingGraph, Edge, LevelGraph, Pairing, Role
from .topology import VertexKind, classify_vertex, smooth

ALPHABET = string.ascii_lowercase
SADDLE = "saddle"
_TOKEN = re.compile(r"([a-z])(-?)")


@dataclass(frozen=True)
class SignedWord:
    """Signed permutation of the first ``m`` letters, as ``(letter, sign)`` pairs."""

    body: tuple[tuple[int, int], ...]

    def __post_init__(self):
        body = tuple((int(x), int(s)) for x, s in self.body)
        m = len(body)
        if not m or m > len(ALPHABET):
            raise WordError(f"word length must be 1..{len(ALPHABET)}, got {m}")
        if sorted(x for x, _ in body) != list(range(m)):
            raise WordError("word must use each of the first m letters exactly once")
        if any(s not in (1, -1) for _, s in body):
            raise WordError("letter signs must be +1 or -1")
        object.__setattr__(self, "body", body)

    @classmethod
    def parse(cls, text: str) -> "SignedWord":
        text = text.strip()
        if not text or _TOKEN.sub("", text):
            raise WordError(f"malformed word {text!r}")
        body = [(ALPHABET.index(ch), -1 if neg else 1) for ch, neg in _TOKEN.findall(text)]
        try:
            return cls(tuple(body))
        except WordError as exc:
            raise WordError(f"malformed word {text!r}: {exc}") from None

    @property
    def m(self) -> int:
        return len(self.body)

    @property
    def is_positive(self) -> bool:
        return all(s > 0 for _, s in self.body)

    @property
    def is_normalized(self) -> bool:
        return self.body[0] == (0, 1)

    def normalized(self) -> "SignedWord":
        """Rotate to start at ``a``; a leading ``a-`` is fixed by reading backwards."""
        body = list(self.body)
        if dict(body)[0] < 0:
            body = [(x, -s) for x, s in reversed(body)]
        i = next(j for j, (x, _) in enumerate(body) if x == 0)
        return SignedWord(tuple(body[i:] + body[:i]))

    def __str__(self):
        return "".join(ALPHABET[x] + ("" if s > 0 else "-") for x, s in self.body)

    def __repr__(self):
        return f"SignedWord({str(self)!r})"


def _word(w) -> SignedWord:
    return w if isinstance(w, SignedWord) else SignedWord.parse(w)


@dataclass(frozen=True)
class SurfaceSpec:
    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0 or (not self.orientable and self.genus == 0):
            raise ValueError(f"no surface with orientable={self.orientable}, genus={self.genus}")

    @classmethod
    def parse(cls, text: str) -> "SurfaceSpec":
        m = re.fullmatch(r"([gn])(\d+)", text.strip())
        if not m:
            raise ValueError(f"surface must look like g2 or n3, got {text!r}")
        return cls(m.group(1) == "g", int(m.group(2)))

    @property
    def letter_count(self) -> int | None:
        if self.orientable:
            return 2 * self.genus + 1 if self.genus else None
        return self.genus + 1

    def __str__(self):
        return f"{'g' if self.orientable else 'n'}{self.genus}"


def word_to_graph(w) -> DistinguishingGraph:
    w = _word(w)
    letters = ALPHABET[:w.m]
    levels = (
        LevelGraph(1, ("min",)),
        LevelGraph(2, (SADDLE,), tuple(Edge(x, SADDLE, SADDLE) for x in letters)),
        LevelGraph(3, ("max",)),
    )
    cycles = (
        Cycle("c_min", 1, Role.LOWER, anchor="min"),
        Cycle("c_up", 2, Role.UPPER, tuple(Dart(letters[x], s) for x, s in w.body)),
        Cycle("c_lo", 2, Role.LOWER, tuple(Dart(x, 1) for x in letters)),
        Cycle("c_max", 3, Role.UPPER, anchor="max"),
    )
    return DistinguishingGraph(levels, cycles, (Pairing("c_min", "c_up"), Pairing("c_lo", "c_max")))


def graph_to_word(g: DistinguishingGraph) -> SignedWord:
    """Read the upper word of a minimal-function graph.

    Edges are renamed along the lower cycle starting at its first stored dart,
    so ``graph_to_word(word_to_graph(w)) == w`` for normalized ``w``.
    """
    g = smooth(g)
    if g.n_levels != 3:
        raise ShapeError(f"minimal-function graphs have 3 levels, got {g.n_levels}")
    for i in (1, 3):
        lv = g.level(i)
        if len(lv.vertices) != 1 or lv.edges:
            raise ShapeError(f"level {i} must be a single extremum")
    mid = g.level(2)
    if len(mid.vertices) != 1 or not mid.edges or not all(e.is_loop for e in mid.edges):
        raise ShapeError("level 2 must be a bouquet of loops at one vertex")
    by_role = {role: [c for c in g.cycles if c.level == 2 and c.role is role] for role in Role}
    if any(len(cs) != 1 for cs in by_role.values()):
        raise ShapeError("level 2 must carry one lower and one upper cycle")
    lower, upper = by_role[Role.LOWER][0], by_role[Role.UPPER][0]
    rename = {d.edge: (i, d.sign) for i, d in enumerate(lower.darts)}
    body = tuple((rename[d.edge][0], d.sign * rename[d.edge][1]) for d in upper.darts)
    return SignedWord(body).normalized()


def word_has_successive_fragment(w) -> bool:
    """True if some cyclically adjacent pair reads ``x, succ(x)`` (``last, a`` included)."""
    w = _word(w)
    if not w.is_positive:
        raise WordError("the successive-fragment filter is defined for positive words only")
    m = w.m
    return any((w.body[(i + 1) % m][0] - w.body[i][0]) % m == 1 for i in range(m))


def word_planar(w) -> bool:
    return classify_vertex(word_to_graph(w), SADDLE) is VertexKind.PLANAR


def word_rename(w, shift: int) -> SignedWord:
    """Cyclic renaming ``a -> b -> c -> ... -> a`` applied ``shift`` times."""
    w = _word(w)
    if not 0 <= shift < w.m:
        raise WordError(f"shift must lie in 0..{w.m - 1}, got {shift}")
    return SignedWord(tuple(((x + shift) % w.m, s) for x, s in w.body)).normalized()


def word_mirror(w) -> SignedWord:
    """Word of the same function under an orientation-reversing homeomorphism.

    Both cycles are read backwards.  Re-directing every loop restores the
    signs, and renaming the reversed lower cycle back to ``a b c ...`` fixes
    ``a`` and swaps the ``i``-th letter with the ``(m + 2 - i)``-th.
    """
    w = _word(w)
    m = w.m
    return SignedWord(tuple(((m - x) % m, s) for x, s in reversed(w.body))).normalized()


def word_negate(w) -> SignedWord:
    """Word of ``-f``.

    For positive words ``w = pi(1) pi(2) ...`` this is the word of ``pi``
    inverse.  Signed words go through the graph: negate, then read back.
    """
    w = _word(w)
    if w.is_positive:
        pos = {x: i for i, (x, _) in enumerate(w.body)}
        return SignedWord(tuple((pos[x], 1) for x in range(w.m))).normalized()
    return graph_to_word(negate(word_to_graph(w)))


@dataclass(frozen=True)
class WordClass:
    representative: SignedWord | None
    members: tuple[SignedWord, ...]


def word_classes(words, relation: Relation) -> list[WordClass]:
    """Partition words by the graph-level relation of their bouquet graphs."""
    relation = Relation(relation)
    words = sorted({_word(w).normalized() for w in words}, key=str)
    if len({w.m for w in words}) > 1:
        raise WordError("all words must have the same number of letters")
    buckets: dict[bytes, list] = {}
    graphs = {}
    for w in words:
        graphs[w] = word_to_graph(w)
        buckets.setdefault(canonical_key(graphs[w], relation), []).append(w)
    classes = []
    for members in buckets.values():
        rep = min(members, key=str)
        for w in members:
            if w != rep and not are_related(graphs[rep], graphs[w], relation):
                raise AssertionError(f"canonical key merged unrelated words {rep} and {w}")
        classes.append(WordClass(rep, tuple(sorted(members, key=str))))
    return sorted(classes, key=lambda c: str(c.representative))


@dataclass(frozen=True)
class Enumeration:
    surface: SurfaceSpec
    relation: Relation
    classes: tuple[WordClass, ...]
    candidates: tuple[SignedWord, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def representatives(self) -> list[SignedWord]:
        return [c.representative for c in self.classes if c.representative is not None]


def candidate_words(surface: SurfaceSpec):
    """Normalized words for ``surface`` that survive the cheap pre-filter."""
    m = surface.letter_count
    if m is None:
        return
    signs = [(1,) * (m - 1)] if surface.orientable else [
        s for s in itertools.product((1, -1), repeat=m - 1) if -1 in s]
    for perm in itertools.permutations(range(1, m)):
        for sg in signs:
            w = SignedWord(((0, 1),) + tuple(zip(perm, sg)))
            if surface.orientable and word_has_successive_fragment(w):
                continue
            yield w


def enumerate_minimal(surface, relation) -> Enumeration:
    """Classes of minimal functions on ``surface`` under ``relation``."""
    surface = surface if isinstance(surface, SurfaceSpec) else SurfaceSpec.parse(surface)
    relation = Relation(relation)
    if relation is Relation.ORIENTED_CONJUGACY and not surface.orientable:
        raise PreconditionError("oriented conjugacy is undefined on a non-orientable surface")
    if surface.letter_count is None:
        return Enumeration(surface, relation, (WordClass(None, ()),), ())
    cands = tuple(candidate_words(surface))
    planar = [w for w in cands if word_planar(w)]
    return Enumeration(surface, relation, tuple(word_classes(planar, relation)), cands)

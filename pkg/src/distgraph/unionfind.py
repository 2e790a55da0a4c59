"""Disjoint sets, optionally carrying a parity bit relative to the root."""
from __future__ import annotations


class UnionFind:
    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.add(x)

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True

    def groups(self) -> list[list]:
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


class ParityUnionFind:
    """Union-find where each element stores ``parity(x) xor parity(root)``.

    ``union(a, b, p)`` records the constraint ``parity(a) xor parity(b) == p``
    and returns False when it contradicts earlier constraints.
    """

    def __init__(self):
        self.parent = {}
        self.rel = {}

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.rel[x] = 0

    def find(self, x) -> tuple[object, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 0
        for y in reversed(path):
            acc ^= self.rel[y]
            self.parent[y] = root
            self.rel[y] = acc
        return root, (self.rel[path[0]] if path else 0)

    def union(self, a, b, parity: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == parity
        self.parent[rb] = ra
        self.rel[rb] = pa ^ pb ^ parity
        return True

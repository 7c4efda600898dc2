"""A small disjoint-set forest with path halving and union by size."""

from typing import Dict, Hashable, Iterable


class UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: Dict[Hashable, Hashable] = {}
        self.size: Dict[Hashable, int] = {}
        self.n_sets = 0
        for x in items:
            self.add(x)

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1
            self.n_sets += 1

    def find(self, x: Hashable) -> Hashable:
        parent = self.parent
        if x not in parent:
            self.add(x)
            return x
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: Hashable, y: Hashable) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.n_sets -= 1
        return True

    def groups(self) -> Dict[Hashable, list]:
        out: Dict[Hashable, list] = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out

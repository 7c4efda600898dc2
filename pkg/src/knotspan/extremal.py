"""Extreme bracket coefficients from chord interleaving in the all-A/all-B states.

The top coefficient is ``(-1)^(|sA| - 1)`` times the alternating count of
independent chord sets of the all-A state, where two chords on one circle
conflict when their endpoints alternate around it.  That count is the
independence polynomial of the interleave graph at -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Tuple

import numpy as np

from .diagram import LinkDiagram, is_connected
from .states import decorated_state

__all__ = [
    "InterleaveGraph",
    "interleave_graph",
    "independent_alternating_sum",
    "independent_alternating_sum_brute",
    "extreme_coefficient",
]


@dataclass(frozen=True)
class InterleaveGraph:
    vertices: Tuple[int, ...]
    edges: FrozenSet[FrozenSet[int]] = frozenset()

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]]) -> "InterleaveGraph":
        vs = tuple(vertices)
        es = set()
        for u, v in edges:
            if u == v:
                raise ValueError("interleave graphs have no loops")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            es.add(frozenset((u, v)))
        return cls(vs, frozenset(es))

    def neighbors(self) -> Dict[int, set]:
        nb = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            nb[u].add(v)
            nb[v].add(u)
        return nb


def _alternate(p: Tuple[int, int], q: Tuple[int, int]) -> bool:
    a, b = p
    return (a < q[0] < b) != (a < q[1] < b)


def interleave_graph(D: LinkDiagram, side: str) -> InterleaveGraph:
    """Chords of the all-``side`` state, joined when they interleave on a circle."""
    chords, _ = decorated_state(D, side)
    edges = [
        (x.crossing, y.crossing)
        for x, y in combinations(chords, 2)
        if x.circle == y.circle and _alternate(x.positions, y.positions)
    ]
    return InterleaveGraph.from_edges([x.crossing for x in chords], edges)


def independent_alternating_sum(G: InterleaveGraph) -> int:
    """Sum of ``(-1)^|C|`` over independent vertex sets ``C`` (empty set included).

    Uses ``I(G) = I(G - v) - I(G - N[v])`` with a per-call memo keyed on the
    remaining vertex set.  An isolated vertex makes the sum vanish, which
    short-circuits most branches.
    """
    nb = {v: frozenset(n) for v, n in G.neighbors().items()}
    memo: Dict[FrozenSet[int], int] = {}

    def rec(vs: FrozenSet[int]) -> int:
        if not vs:
            return 1
        hit = memo.get(vs)
        if hit is not None:
            return hit
        # isolated vertex: every set pairs with itself plus that vertex
        best, best_deg = None, -1
        for v in vs:
            deg = len(nb[v] & vs)
            if deg == 0:
                memo[vs] = 0
                return 0
            if deg > best_deg:
                best, best_deg = v, deg
        val = rec(vs - {best}) - rec(vs - nb[best] - {best})
        memo[vs] = val
        return val

    return rec(frozenset(G.vertices))


def independent_alternating_sum_brute(G: InterleaveGraph) -> int:
    """Enumerate every vertex subset as a bit mask; exponential, for cross-checking only."""
    vs = list(G.vertices)
    if len(vs) > 24:
        raise ValueError("brute-force enumeration is limited to 24 vertices")
    idx = {v: i for i, v in enumerate(vs)}
    masks = np.arange(1 << len(vs), dtype=np.int64)
    ok = np.ones(len(masks), dtype=bool)
    for e in G.edges:
        u, v = (idx[w] for w in e)
        ok &= ((masks >> u) & (masks >> v) & 1) == 0
    size = np.zeros(len(masks), dtype=np.int64)
    for i in range(len(vs)):
        size += (masks >> i) & 1
    sign = 1 - 2 * (size[ok] & 1)
    return int(sign.sum())


def extreme_coefficient(D: LinkDiagram, which: str) -> int:
    """Coefficient of ``A^M`` (``which='max'``) or ``A^m`` (``'min'``) of the bracket."""
    if not is_connected(D):
        raise ValueError("extreme coefficients are computed for connected diagrams only")
    side = {"max": "A", "min": "B"}[which]
    chords, geom = decorated_state(D, side)
    sign = -1 if (geom.circle_count - 1) % 2 else 1
    return sign * independent_alternating_sum(interleave_graph(D, side))

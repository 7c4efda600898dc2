"""Kauffman states, their circles and traces, Turaev genus and adequacy.

At a crossing ``(a, b, c, d)`` the A-smoothing joins the edge ends
``{a, b}`` and ``{c, d}``; the B-smoothing joins ``{d, a}`` and ``{b, c}``.
Each smoothing leaves two arcs; the trace of the crossing joins them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .diagram import LinkDiagram, is_connected
from .unionfind import UnionFind

__all__ = [
    "SMOOTHING",
    "StateGeometry",
    "Chord",
    "circle_count",
    "resolve_all",
    "decorated_state",
    "turaev_genus_diagram",
    "is_A_adequate",
    "is_B_adequate",
    "is_adequate_diagram",
]

#: slot pairs joined by each smoothing; arc 0 then arc 1
SMOOTHING = {
    "A": ((0, 1), (2, 3)),
    "B": ((3, 0), (1, 2)),
}


def circle_count(D: LinkDiagram, choices: Sequence[str]) -> int:
    """Number of circles of the state with resolution ``choices[i]`` at crossing ``i``.

    Circles are the union-find classes of edge labels under the smoothing
    pairings, plus the free loops.
    """
    uf = UnionFind(range(1, 2 * D.n_crossings + 1))
    for x, side in zip(D.crossings, choices):
        for s, t in SMOOTHING[side]:
            uf.union(x[s], x[t])
    return uf.n_sets + D.free_loops


@dataclass(frozen=True)
class Chord:
    crossing: int
    circle: int
    positions: Tuple[int, int]


@dataclass(frozen=True)
class StateGeometry:
    """Circles, arcs and traces of the all-A or all-B state.

    ``circle_orders[k]`` lists the arcs ``(crossing, arc)`` met going once
    around circle ``k``; every arc carries one endpoint of its crossing's
    trace, so this is also the cyclic order of trace endpoints.
    """

    side: str
    circle_count: int
    arcs: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]
    circle_of_arc: Dict[Tuple[int, int], int]
    circle_orders: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def traces(self) -> List[Tuple[int, int]]:
        """Per crossing, the circles holding the two endpoints of its trace."""
        n = len(self.arcs)
        return [(self.circle_of_arc[(i, 0)], self.circle_of_arc[(i, 1)]) for i in range(n)]

    def chords(self) -> List[Chord]:
        pos = {}
        for k, order in enumerate(self.circle_orders):
            for p, arc in enumerate(order):
                pos[arc] = p
        out = []
        for i, (c0, c1) in enumerate(self.traces):
            if c0 == c1:
                out.append(Chord(i, c0, tuple(sorted((pos[(i, 0)], pos[(i, 1)])))))
        return out

    def summary(self) -> dict:
        return {
            "side": self.side,
            "circles": self.circle_count,
            "chords": [c.crossing for c in self.chords()],
        }


def resolve_all(D: LinkDiagram, side: str) -> StateGeometry:
    """Build the all-``side`` state by walking half-edges around each circle."""
    if side not in SMOOTHING:
        raise ValueError("side must be 'A' or 'B'")
    xs = D.crossings
    arc_pairs = SMOOTHING[side]
    arc_of_slot = {}
    for k, (s, t) in enumerate(arc_pairs):
        arc_of_slot[s] = (k, t)
        arc_of_slot[t] = (k, s)
    where: Dict[int, List[Tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for s, v in enumerate(x):
            where.setdefault(v, []).append((i, s))

    circle_of_arc: Dict[Tuple[int, int], int] = {}
    orders = []
    for i in range(len(xs)):
        for k in (0, 1):
            if (i, k) in circle_of_arc:
                continue
            cid = len(orders)
            order = []
            # enter arc (i, k) at its first slot
            ci, cs = i, arc_pairs[k][0]
            while True:
                ak, exit_slot = arc_of_slot[cs]
                if (ci, ak) in circle_of_arc:
                    break
                circle_of_arc[(ci, ak)] = cid
                order.append((ci, ak))
                v = xs[ci][exit_slot]
                e0, e1 = where[v]
                ci, cs = e1 if e0 == (ci, exit_slot) else e0
            orders.append(tuple(order))
    n_circles = len(orders) + D.free_loops
    arcs = tuple(arc_pairs for _ in xs)
    return StateGeometry(side, n_circles, arcs, circle_of_arc, tuple(orders))


def decorated_state(D: LinkDiagram, side: str) -> Tuple[List[Chord], StateGeometry]:
    """Chords of the all-``side`` state together with the state geometry."""
    geom = resolve_all(D, side)
    return geom.chords(), geom


def turaev_genus_diagram(D: LinkDiagram) -> int:
    """Genus of the Turaev surface, ``(c + 2 - |sA| - |sB|) / 2``."""
    if not is_connected(D):
        raise ValueError("Turaev genus is only defined here for connected diagrams")
    c = D.n_crossings
    sa = resolve_all(D, "A").circle_count
    sb = resolve_all(D, "B").circle_count
    twice = c + 2 - sa - sb
    if twice < 0 or twice % 2:
        raise ValueError(f"invalid state counts c={c}, |sA|={sa}, |sB|={sb}: diagram is not planar")
    return twice // 2


def is_A_adequate(D: LinkDiagram) -> bool:
    return not resolve_all(D, "A").chords()


def is_B_adequate(D: LinkDiagram) -> bool:
    return not resolve_all(D, "B").chords()


def is_adequate_diagram(D: LinkDiagram) -> bool:
    return is_A_adequate(D) and is_B_adequate(D)

"""Alternating tangle decomposition and the genus-one cycle form.

An edge is alternating when one end is an over-crossing and the other an
under-crossing.  Non-alternating edges are signed ``+`` (over at both ends)
or ``-`` (under at both ends).  Tangles are the connected components of the
crossings under alternating edges; non-alternating edges connect them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .diagram import LinkDiagram, is_connected
from .unionfind import UnionFind

__all__ = [
    "EdgeClass",
    "Connector",
    "TangleDecomposition",
    "classify_edges",
    "decompose",
    "is_genus_one_cycle_form",
]


@dataclass(frozen=True)
class EdgeClass:
    label: int
    alternating: bool
    sign: int = 0  # +1 over-over, -1 under-under, 0 alternating


@dataclass(frozen=True)
class Connector:
    label: int
    sign: int
    tangles: Tuple[int, int]


@dataclass(frozen=True)
class TangleDecomposition:
    tangles: Tuple[Tuple[int, ...], ...]
    connectors: Tuple[Connector, ...]
    end_counts: Tuple[int, ...]

    @property
    def tangle_graph(self) -> Dict[Tuple[int, int], List[int]]:
        """Multigraph on tangles: sorted tangle pair -> connector signs."""
        graph: Dict[Tuple[int, int], List[int]] = {}
        for con in self.connectors:
            graph.setdefault(tuple(sorted(con.tangles)), []).append(con.sign)
        return graph

    def summary(self) -> dict:
        return {
            "tangles": [list(t) for t in self.tangles],
            "connectors": [[c.label, c.sign, list(c.tangles)] for c in self.connectors],
            "end_counts": list(self.end_counts),
        }


def _ends(D: LinkDiagram) -> Dict[int, List[Tuple[int, int]]]:
    where: Dict[int, List[Tuple[int, int]]] = {}
    for i, x in enumerate(D.crossings):
        for s, v in enumerate(x):
            where.setdefault(v, []).append((i, s))
    return where


def classify_edges(D: LinkDiagram) -> Dict[int, EdgeClass]:
    out = {}
    for label, ((_, s), (_, t)) in sorted(_ends(D).items()):
        over_s, over_t = s % 2 == 1, t % 2 == 1
        if over_s != over_t:
            out[label] = EdgeClass(label, True)
        else:
            out[label] = EdgeClass(label, False, 1 if over_s else -1)
    return out


def decompose(D: LinkDiagram) -> TangleDecomposition:
    if D.n_crossings == 0 or not is_connected(D):
        raise ValueError("decomposition needs a connected diagram with crossings")
    ends = _ends(D)
    kinds = classify_edges(D)
    uf = UnionFind(range(D.n_crossings))
    for label, kind in kinds.items():
        if kind.alternating:
            (i, _), (j, _) = ends[label]
            uf.union(i, j)
    roots: Dict[int, int] = {}
    for i in range(D.n_crossings):
        roots.setdefault(uf.find(i), len(roots))
    tangles = [[] for _ in roots]
    for i in range(D.n_crossings):
        tangles[roots[uf.find(i)]].append(i)
    connectors = []
    counts = [0] * len(tangles)
    for label, kind in kinds.items():
        if kind.alternating:
            continue
        (i, _), (j, _) = ends[label]
        ti, tj = roots[uf.find(i)], roots[uf.find(j)]
        counts[ti] += 1
        counts[tj] += 1
        connectors.append(Connector(label, kind.sign, (ti, tj)))
    return TangleDecomposition(tuple(tuple(t) for t in tangles), tuple(connectors), tuple(counts))


def is_genus_one_cycle_form(D: LinkDiagram):
    """Recognize an even cycle of 4-ended tangles joined by doubled edges.

    Every adjacency of the cycle must be realized by exactly two connectors
    of opposite sign.  Returns ``(ok, summary)``; the summary lists the
    connector signs met around the cycle but no global sign pattern is
    required.
    """
    if D.n_crossings == 0 or not is_connected(D):
        return False, {"reason": "not a connected diagram with crossings"}
    dec = decompose(D)
    n = len(dec.tangles)
    summary = {"tangles": n, "connectors": len(dec.connectors)}
    if n < 2 or n % 2:
        summary["reason"] = "need an even number (>= 2) of tangles"
        return False, summary
    if any(k != 4 for k in dec.end_counts):
        summary["reason"] = "every tangle must have exactly four connector ends"
        return False, summary
    graph = dec.tangle_graph
    if any(u == v for u, v in graph):
        summary["reason"] = "a connector returns to its own tangle"
        return False, summary
    if n == 2:
        signs = graph.get((0, 1), [])
        if len(signs) != 4 or Counter(signs) != Counter({1: 2, -1: 2}):
            summary["reason"] = "two tangles must share two + and two - connectors"
            return False, summary
        summary["cycle"] = [0, 1]
        summary["pair_signs"] = sorted(signs)
        return True, summary
    for pair, signs in graph.items():
        if len(signs) != 2 or sorted(signs) != [-1, 1]:
            summary["reason"] = f"adjacency {pair} is not a doubled +/- pair"
            return False, summary
    # single cycle through all tangles
    adj: Dict[int, List[int]] = {t: [] for t in range(n)}
    for u, v in graph:
        adj[u].append(v)
        adj[v].append(u)
    if any(len(v) != 2 for v in adj.values()):
        summary["reason"] = "tangle graph is not a cycle"
        return False, summary
    cycle, prev, cur = [0], None, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == 0:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if len(cycle) != n:
        summary["reason"] = "tangle graph is not a single cycle"
        return False, summary
    summary["cycle"] = cycle
    summary["pair_signs"] = [
        graph[tuple(sorted((cycle[k], cycle[(k + 1) % n])))] for k in range(n)
    ]
    return True, summary


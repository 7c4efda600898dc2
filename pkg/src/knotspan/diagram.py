"""Oriented link diagrams in planar-diagram (PD) notation.

Each crossing is a 4-tuple ``(a, b, c, d)`` of edge labels read
counterclockwise, starting at the incoming under-edge ``a``; the under-strand
runs ``a -> c``.  Slots 0 and 2 are therefore under, slots 1 and 3 over.  A
crossing is positive exactly when its over-strand runs ``d -> b``.

Crossingless unknotted components are not encoded as crossings; they are
kept as a ``free_loops`` counter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

__all__ = [
    "PDError",
    "PDSyntaxError",
    "LabelError",
    "OrientationError",
    "PlanarityError",
    "LinkDiagram",
    "parse_pd",
    "parse_pd_line",
    "serialize_pd",
    "writhe",
    "mirror",
    "is_connected",
    "component_count",
    "is_reduced",
    "nugatory_crossings",
    "disjoint_union",
    "diagram_from_ports",
]

Crossing = Tuple[int, int, int, int]


class PDError(ValueError):
    """Raised for malformed or invalid PD codes."""

    kind = "pd"


class PDSyntaxError(PDError):
    kind = "syntax"


class LabelError(PDError):
    kind = "labels"


class OrientationError(PDError):
    kind = "orientation"


class PlanarityError(PDError):
    kind = "planarity"


@dataclass(frozen=True)
class LinkDiagram:
    """An immutable, validated oriented link diagram.

    Use :func:`parse_pd` or :meth:`from_crossings` to build one; both run
    every validity check.  Derived data (components, signs, faces) is
    computed once at construction.
    """

    crossings: Tuple[Crossing, ...]
    free_loops: int = 0
    name: str = field(default="", compare=False)
    _signs: Tuple[int, ...] = field(default=(), repr=False, compare=False)
    _components: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False, compare=False)

    @classmethod
    def from_crossings(cls, crossings: Sequence[Sequence[int]], free_loops: int = 0,
                       name: str = "") -> "LinkDiagram":
        xs = tuple(tuple(int(v) for v in x) for x in crossings)
        for x in xs:
            if len(x) != 4:
                raise PDSyntaxError(f"crossing {x} does not have four labels")
        if free_loops < 0:
            raise PDError("free loop count must be nonnegative")
        _check_labels(xs)
        signs, components, heads = _orient(xs, _strand_components(xs))
        # A two-edge component that only passes over carries no orientation
        # in PD form.  Normalize every two-edge component so its lower label
        # enters the lower-numbered crossing; the tie-break then always
        # agrees with the true orientation.
        swap = {}
        for comp in components:
            if len(comp) == 2 and heads[comp[0]][0] > heads[comp[1]][0]:
                swap[comp[0]], swap[comp[1]] = comp[1], comp[0]
        if swap:
            xs = tuple(tuple(swap.get(v, v) for v in x) for x in xs)
            signs, components, heads = _orient(xs, _strand_components(xs))
        _check_planar(xs)
        return cls(xs, free_loops, name, signs, components)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def signs(self) -> Tuple[int, ...]:
        return self._signs

    @property
    def components(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge labels of each crossed component, in orientation order."""
        return self._components

    @property
    def n_components(self) -> int:
        return len(self._components) + self.free_loops

    def __str__(self):
        return serialize_pd(self)


# -- validation -----------------------------------------------------------

def _check_labels(xs: Tuple[Crossing, ...]) -> None:
    n = 2 * len(xs)
    counts: Dict[int, int] = {}
    for x in xs:
        for v in x:
            counts[v] = counts.get(v, 0) + 1
    if n and set(counts) != set(range(1, n + 1)):
        raise LabelError(f"edge labels must be exactly 1..{n}")
    bad = sorted(v for v, k in counts.items() if k != 2)
    if bad:
        raise LabelError(f"labels {bad} do not occur exactly twice")


def _slot_index(xs) -> Dict[int, List[Tuple[int, int]]]:
    where: Dict[int, List[Tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for s, v in enumerate(x):
            where.setdefault(v, []).append((i, s))
    return where


def _strand_components(xs) -> List[List[Tuple[int, Tuple[int, int]]]]:
    """Walk each strand straight through its crossings.

    Returns, per component, the visited edges as ``(label, (crossing, slot))``
    where the slot is the end through which the walk enters the crossing.
    """
    where = _slot_index(xs)
    seen = set()
    comps = []
    for start in sorted(where):
        if start in seen:
            continue
        walk = []
        label, (i, s) = start, where[start][1]
        while True:
            walk.append((label, (i, s)))
            seen.add(label)
            out = (i, (s + 2) % 4)
            nxt = xs[i][out[1]]
            if nxt == start:
                break
            e0, e1 = where[nxt]
            i, s = e1 if e0 == out else e0
            label = nxt
        comps.append(walk)
    return comps


def _orient(xs, components):
    """Check label progression along each component and derive crossing signs."""
    where = _slot_index(xs)
    heads: Dict[int, Tuple[int, int]] = {}
    ordered = []
    for walk in components:
        labels = [e for e, _ in walk]
        lo, hi = min(labels), max(labels)
        if sorted(labels) != list(range(lo, hi + 1)):
            raise OrientationError(f"component labels {sorted(labels)} are not an interval")
        k = len(labels)

        def succ(v):
            return lo if v == hi else v + 1

        fwd = all(labels[(i + 1) % k] == succ(labels[i]) for i in range(k))
        rev = all(labels[i] == succ(labels[(i + 1) % k]) for i in range(k))
        if not (fwd or rev):
            raise OrientationError(f"labels do not increase along component {sorted(labels)}")
        candidates = []
        if fwd:
            candidates.append({e: h for e, h in walk})
        if rev:
            candidates.append({e: _other_end(where, e, h) for e, h in walk})
        valid = [h for h in candidates if all(slot != 2 for _, slot in h.values())]
        if not valid:
            raise OrientationError(
                f"under-strands of component {sorted(labels)} do not run a -> c")
        # a component that only passes over is oriented so that its lowest
        # label enters the lowest-numbered crossing
        chosen = min(valid, key=lambda h: h[lo])
        heads.update(chosen)
        ordered.append(tuple(range(lo, hi + 1)))
    signs = []
    for i, (a, b, c, d) in enumerate(xs):
        if heads[a] != (i, 0):
            raise OrientationError(f"crossing {i} {xs[i]}: edge {a} is not incoming")
        if heads[d] == (i, 3):
            signs.append(1)
        elif heads[b] == (i, 1):
            signs.append(-1)
        else:
            raise OrientationError(f"crossing {i} {xs[i]}: over-strand has no direction")
    return tuple(signs), tuple(ordered), heads


def _other_end(where, e, end):
    e0, e1 = where[e]
    return e1 if e0 == end else e0


def _faces(xs) -> List[List[Tuple[int, int]]]:
    """Faces of the rotation system as lists of corners ``(crossing, slot)``.

    A corner ``(i, s)`` is the angle between slots ``s`` and ``s+1`` of
    crossing ``i``.
    """
    where = _slot_index(xs)

    def other_end(i, s):
        v = xs[i][s]
        e0, e1 = where[v]
        return e1 if e0 == (i, s) else e0

    seen = set()
    faces = []
    for i in range(len(xs)):
        for s in range(4):
            if (i, s) in seen:
                continue
            face = []
            ci, cs = i, s
            while (ci, cs) not in seen:
                seen.add((ci, cs))
                face.append((ci, cs))
                # leave along slot cs+1, arrive at (j, t); next corner is (j, t)
                j, t = other_end(ci, (cs + 1) % 4)
                ci, cs = j, t
            faces.append(face)
    return faces


def _graph_components(xs) -> List[List[int]]:
    where = _slot_index(xs)
    parent = list(range(len(xs)))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for ends in where.values():
        (i, _), (j, _) = ends
        parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(len(xs)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _check_planar(xs) -> None:
    if not xs:
        return
    faces = _faces(xs)
    comps = _graph_components(xs)
    comp_of = {}
    for k, comp in enumerate(comps):
        for i in comp:
            comp_of[i] = k
    nf = [0] * len(comps)
    for f in faces:
        nf[comp_of[f[0][0]]] += 1
    for k, comp in enumerate(comps):
        v = len(comp)
        if v - 2 * v + nf[k] != 2:
            raise PlanarityError(
                f"Euler characteristic {v - 2 * v + nf[k]} != 2 on a diagram component")


# -- parsing and serialization -------------------------------------------

_X = re.compile(r"X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def parse_pd(text: str, free_loops: int = 0, name: str = "") -> LinkDiagram:
    """Parse a whitespace-separated list of ``X[a,b,c,d]`` tuples.

    A trailing ``O<k>`` token declares ``k`` free loops and is added to
    ``free_loops``.

    >>> parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").n_crossings
    3
    """
    text = text.strip()
    crossings = []
    pos = 0
    loops = free_loops
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _X.match(text, pos)
        if m:
            crossings.append(tuple(int(g) for g in m.groups()))
            pos = m.end()
            continue
        m = re.compile(r"O(\d+)\s*$").match(text, pos)
        if m:
            loops += int(m.group(1))
            pos = m.end()
            continue
        raise PDSyntaxError(f"unexpected input at column {pos}: {text[pos:pos + 20]!r}")
    return LinkDiagram.from_crossings(crossings, loops, name)


def parse_pd_line(line: str) -> Tuple[str, Dict[str, str], LinkDiagram]:
    """Parse ``NAME [key=value ...] : PD`` and return (name, annotations, diagram)."""
    head, sep, body = line.partition(":")
    if not sep:
        raise PDSyntaxError("missing ':' after the diagram name")
    tokens = head.split()
    if not tokens:
        raise PDSyntaxError("missing diagram name")
    name, notes = tokens[0], {}
    for tok in tokens[1:]:
        key, eq, value = tok.partition("=")
        if not eq:
            raise PDSyntaxError(f"bad annotation {tok!r}")
        notes[key] = value
    return name, notes, parse_pd(body, name=name)


def serialize_pd(D: LinkDiagram) -> str:
    parts = ["X[%d,%d,%d,%d]" % x for x in D.crossings]
    if D.free_loops:
        parts.append(f"O{D.free_loops}")
    return " ".join(parts)


# -- queries --------------------------------------------------------------

def writhe(D: LinkDiagram) -> int:
    return sum(D.signs)


def mirror(D: LinkDiagram) -> LinkDiagram:
    """Switch every crossing, keeping labels and orientation.

    The new under-strand is the old over-strand; the tuple is rotated so that
    it starts at its incoming end.
    """
    out = []
    for (a, b, c, d), sgn in zip(D.crossings, D.signs):
        # positive: over runs d -> b, so d is the new incoming under edge
        out.append((d, a, b, c) if sgn > 0 else (b, c, d, a))
    return LinkDiagram.from_crossings(out, D.free_loops, D.name)


def component_count(D: LinkDiagram) -> int:
    return D.n_components


def is_connected(D: LinkDiagram) -> bool:
    if not D.crossings:
        return D.free_loops == 1
    return D.free_loops == 0 and len(_graph_components(D.crossings)) == 1


def nugatory_crossings(D: LinkDiagram) -> List[int]:
    """Crossings that touch the same face at two opposite corners."""
    face_of = {}
    for k, face in enumerate(_faces(D.crossings)):
        for corner in face:
            face_of[corner] = k
    return [i for i in range(D.n_crossings)
            if face_of[(i, 0)] == face_of[(i, 2)] or face_of[(i, 1)] == face_of[(i, 3)]]


def is_reduced(D: LinkDiagram) -> bool:
    return not nugatory_crossings(D)


def disjoint_union(D1: LinkDiagram, D2: LinkDiagram) -> LinkDiagram:
    shift = 2 * D1.n_crossings
    xs = list(D1.crossings) + [tuple(v + shift for v in x) for x in D2.crossings]
    return LinkDiagram.from_crossings(xs, D1.free_loops + D2.free_loops)


# -- building diagrams from port graphs ----------------------------------

def diagram_from_ports(n_crossings: int, links: Sequence[Tuple[Tuple[int, int], Tuple[int, int]]],
                       under: Sequence[int], outgoing: Sequence[Tuple[int, int]] = (),
                       free_loops: int = 0, name: str = "") -> LinkDiagram:
    """Label a diagram given as crossings with four ports each.

    Ports ``0..3`` of every crossing are listed counterclockwise.  ``links``
    joins ports in pairs; ``under[i]`` is 0 when ports {0, 2} of crossing
    ``i`` carry the under-strand and 1 when ports {1, 3} do.  Components
    containing a port listed in ``outgoing`` are oriented to leave through
    it; the rest follow the order in which they are first met.
    """
    partner = {}
    for p, q in links:
        partner[p] = q
        partner[q] = p
    if len(partner) != 4 * n_crossings:
        raise PDError("every port must be linked exactly once")
    marked = set(outgoing)
    label_of: Dict[Tuple[int, int], int] = {}
    incoming = set()
    nxt = 1
    for i in range(n_crossings):
        for s in range(4):
            if (i, s) in label_of:
                continue
            outs, ins = _port_walk((i, s), partner)
            if marked & set(ins):
                start = next(p for p in ins if p in marked)
                outs, ins = _port_walk(start, partner)
            if len(outs) == 2 and ins[0][0] > ins[1][0]:
                outs, ins = outs[::-1], ins[::-1]
            for p, q in zip(outs, ins):
                label_of[p] = label_of[q] = nxt
                incoming.add(q)
                nxt += 1
    xs = []
    for i in range(n_crossings):
        u = under[i]
        first = u if (i, u) in incoming else u + 2
        xs.append(tuple(label_of[(i, (first + k) % 4)] for k in range(4)))
    return LinkDiagram.from_crossings(xs, free_loops, name)


def _port_walk(start, partner):
    """Outgoing and incoming ports met while following a strand from ``start``."""
    outs, ins = [], []
    port = start
    while True:
        outs.append(port)
        j, t = partner[port]
        ins.append((j, t))
        port = (j, (t + 2) % 4)
        if port == start:
            return outs, ins

"""Diagram builders: random braid closures, pretzel diagrams, connected sums."""

from __future__ import annotations

import random
from typing import List, Optional, Sequence, Tuple

from .diagram import LinkDiagram, PDError, diagram_from_ports

__all__ = ["braid_closure", "random_braid_word", "random_diagram", "pretzel_diagram", "connected_sum"]

# crossing ports, counterclockwise: 0 = NE, 1 = NW, 2 = SW, 3 = SE
_NE, _NW, _SW, _SE = 0, 1, 2, 3


def braid_closure(word: Sequence[int], width: int, name: str = "") -> LinkDiagram:
    """Closure of a braid word; letter ``+i`` / ``-i`` crosses strands ``i`` and ``i+1``.

    Strands run upward.  ``+i`` is a positive crossing.  Positions never
    touched by a letter close up into free loops.
    """
    if width < 2:
        raise ValueError("braid width must be at least 2")
    links = []
    under = []
    first: List[Optional[Tuple[int, int]]] = [None] * width
    top: List[Optional[Tuple[int, int]]] = [None] * width
    for k, letter in enumerate(word):
        i = abs(letter) - 1
        if letter == 0 or i + 1 >= width:
            raise ValueError(f"letter {letter} out of range for width {width}")
        for pos, port in ((i, _SW), (i + 1, _SE)):
            if top[pos] is None:
                first[pos] = (k, port)
            else:
                links.append((top[pos], (k, port)))
        top[i], top[i + 1] = (k, _NW), (k, _NE)
        under.append(1 if letter > 0 else 0)
    loops = 0
    for pos in range(width):
        if top[pos] is None:
            loops += 1
        else:
            links.append((top[pos], first[pos]))
    outgoing = [(k, p) for k in range(len(word)) for p in (_NE, _NW)]
    return diagram_from_ports(len(word), links, under, outgoing, loops, name)


def random_braid_word(rng: random.Random, width: int, length: int) -> List[int]:
    gens = list(range(1, width))
    return [rng.choice(gens) * rng.choice((1, -1)) for _ in range(length)]


def random_diagram(seed: int, braid_width: int, braid_length: int) -> LinkDiagram:
    """Closure of a uniformly random braid word, reproducible from ``seed``."""
    if braid_width < 2 or braid_length < 1:
        raise ValueError("need braid width >= 2 and length >= 1")
    rng = random.Random(seed)
    word = random_braid_word(rng, braid_width, braid_length)
    return braid_closure(word, braid_width, name=f"braid-{seed}-{braid_width}-{braid_length}")


def pretzel_diagram(*twists: int, name: str = "") -> LinkDiagram:
    """Standard diagram of the pretzel link ``P(twists)``.

    Each entry is a vertical column of half-twists; the sign picks the
    handedness.  Columns are joined left to right along the top and bottom,
    the last column back to the first around the outside.
    """
    if len(twists) < 2 or any(t == 0 for t in twists):
        raise ValueError("need at least two nonzero twist counts")
    links = []
    under = []
    tops, bottoms = [], []
    k = 0
    for t in twists:
        col = list(range(k, k + abs(t)))
        k += abs(t)
        under.extend([1 if t > 0 else 0] * abs(t))
        for upper, lower in zip(col, col[1:]):
            links.append(((upper, _SW), (lower, _NW)))
            links.append(((upper, _SE), (lower, _NE)))
        tops.append(col[0])
        bottoms.append(col[-1])
    n = len(twists)
    for j in range(n):
        links.append(((tops[j], _NE), (tops[(j + 1) % n], _NW)))
        links.append(((bottoms[j], _SE), (bottoms[(j + 1) % n], _SW)))
    return diagram_from_ports(k, links, under, name=name or "P(" + ",".join(map(str, twists)) + ")")


def _head_slot(D: LinkDiagram, label: int) -> Tuple[int, int]:
    for i, (x, sign) in enumerate(zip(D.crossings, D.signs)):
        for s in (0, 3 if sign > 0 else 1):
            if x[s] == label:
                return i, s
    raise PDError(f"edge {label} has no incoming end")


def connected_sum(D1: LinkDiagram, D2: LinkDiagram, name: str = "") -> LinkDiagram:
    """Splice two knot diagrams along their last edges."""
    if D1.n_components != 1 or D2.n_components != 1 or D1.free_loops or D2.free_loops:
        raise ValueError("connected sums are built for one-component diagrams with crossings")
    n1, n2 = 2 * D1.n_crossings, 2 * D2.n_crossings
    h1 = _head_slot(D1, n1)
    h2 = _head_slot(D2, n2)
    xs1 = [list(x) for x in D1.crossings]
    xs2 = [[v + n1 for v in x] for x in D2.crossings]
    xs1[h1[0]][h1[1]] = n1 + n2
    xs2[h2[0]][h2[1]] = n1
    return LinkDiagram.from_crossings(xs1 + xs2, 0, name)

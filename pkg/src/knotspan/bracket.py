"""Kauffman bracket by state sum, the Jones polynomial, and degree bounds."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagram import LinkDiagram, writhe
from .laurent import LaurentPoly1
from .states import SMOOTHING, circle_count, resolve_all

__all__ = [
    "MAX_STATE_SUM_CROSSINGS",
    "CutoffError",
    "JonesPoly",
    "BracketReport",
    "LOOP_VALUE",
    "kauffman_bracket",
    "bracket_by_union_find",
    "state_histogram",
    "jones",
    "span_jones",
    "bracket_report",
]

MAX_STATE_SUM_CROSSINGS = 24
_CHUNK_BITS = 14

LOOP_VALUE = LaurentPoly1({2: -1, -2: -1})


class CutoffError(ValueError):
    """Raised when a diagram exceeds the configured crossing cutoff."""


class JonesPoly(LaurentPoly1):
    """Jones polynomial stored in ``q = t^(1/4)`` with integer exponents."""

    __slots__ = ()

    def __init__(self, terms=None, var="q"):
        super().__init__(terms, "q")

    @classmethod
    def _from_clean(cls, terms, var="q"):
        obj = LaurentPoly1._from_clean.__func__(cls, terms, "q")
        return obj

    @property
    def span_t(self) -> Fraction:
        return Fraction(self.span, 4)

    def t_terms(self):
        """``(Fraction exponent, coefficient)`` pairs from high to low degree."""
        return [(Fraction(e, 4), c) for e, c in sorted(self.items(), reverse=True)]

    def to_t_string(self) -> str:
        parts = []
        for e, c in self.t_terms():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "t"
            else:
                mono = f"t^{e}" if e.denominator == 1 else f"t^({e})"
            mag = abs(c)
            body = mono if (mono and mag == 1) else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign} {body}".strip() if parts else f"{sign}{body}")
        return " ".join(parts) if parts else "0"


def _check_cutoff(D: LinkDiagram, limit: int) -> None:
    if D.n_crossings > limit:
        raise CutoffError(f"{D.n_crossings} crossings exceeds the cutoff of {limit}")


def _loops_to_poly(histogram, c: int, free_loops: int) -> LaurentPoly1:
    """Sum count * A^(c - 2 nB) * d^(circles + free_loops - 1)."""
    powers = {}
    out = LaurentPoly1()
    for (n_b, circles), count in histogram.items():
        k = circles + free_loops - 1
        if k not in powers:
            powers[k] = LOOP_VALUE ** k
        out = out + powers[k].shift(c - 2 * n_b) * int(count)
    return out


def state_histogram(D: LinkDiagram) -> dict:
    """Map ``(number of B-smoothings, circle count) -> number of states``.

    Each state is a bit mask (bit i set = B at crossing i).  Circles are the
    cycles of "cross the smoothing arc, then follow the edge" on the 4c edge
    ends; every circle yields two such cycles, one per direction.  Cycle
    minima are found for all masks at once by pointer doubling.
    """
    c = D.n_crossings
    n = 4 * c
    xs = np.asarray(D.crossings, dtype=np.int64)
    # other end of the edge leaving each end
    flat = xs.reshape(-1)
    other = np.empty(n, dtype=np.int64)
    first = {}
    for idx, v in enumerate(flat.tolist()):
        if v in first:
            other[idx] = first[v]
            other[first[v]] = idx
        else:
            first[v] = idx
    slot = np.arange(n) % 4
    base = np.arange(n) - slot
    arc_a = base + (slot ^ 1)          # A: 0<->1, 2<->3
    arc_b = base + (3 - slot)          # B: 0<->3, 1<->2
    step_a = other[arc_a]
    step_b = other[arc_b]
    crossing_of = np.arange(n) // 4
    n_iter = max(1, int(np.ceil(np.log2(n))) + 1)

    counts: dict = {}
    total = 1 << c
    chunk = 1 << min(c, _CHUNK_BITS)
    ids = np.arange(n, dtype=np.int64)
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        bits = (masks[:, None] >> crossing_of[None, :]) & 1
        perm = np.where(bits == 1, step_b[None, :], step_a[None, :])
        low = np.broadcast_to(ids, perm.shape).copy()
        for _ in range(n_iter):
            low = np.minimum(low, np.take_along_axis(low, perm, axis=1))
            perm = np.take_along_axis(perm, perm, axis=1)
        cycles = (low == ids[None, :]).sum(axis=1)
        circles = cycles // 2
        n_b = np.zeros(len(masks), dtype=np.int64)
        for i in range(c):
            n_b += (masks >> i) & 1
        key = n_b * (2 * c + 1) + circles
        uniq, cnt = np.unique(key, return_counts=True)
        for k, m in zip(uniq.tolist(), cnt.tolist()):
            pair = divmod(k, 2 * c + 1)
            counts[pair] = counts.get(pair, 0) + m
    return counts


def kauffman_bracket(D: LinkDiagram, max_crossings: int = MAX_STATE_SUM_CROSSINGS) -> LaurentPoly1:
    """The Kauffman bracket, normalized so the crossingless unknot has value 1."""
    _check_cutoff(D, max_crossings)
    c = D.n_crossings
    if c == 0:
        if D.free_loops == 0:
            raise ValueError("the empty diagram has no bracket")
        return LOOP_VALUE ** (D.free_loops - 1)
    return _loops_to_poly(state_histogram(D), c, D.free_loops)


def bracket_by_union_find(D: LinkDiagram) -> LaurentPoly1:
    """Reference state sum: one union-find circle count per state."""
    c = D.n_crossings
    if c == 0:
        return LOOP_VALUE ** (D.free_loops - 1)
    hist: dict = {}
    for choice in itertools.product("AB", repeat=c):
        key = (choice.count("B"), circle_count(D, choice) - D.free_loops)
        hist[key] = hist.get(key, 0) + 1
    return _loops_to_poly(hist, c, D.free_loops)


def jones(D: LinkDiagram, bracket: LaurentPoly1 = None, **kw) -> JonesPoly:
    """``(-A^3)^(-w) <D>`` rewritten in ``q = t^(1/4)`` via ``A = q^-1``."""
    if bracket is None:
        bracket = kauffman_bracket(D, **kw)
    w = writhe(D)
    sign = -1 if w % 2 else 1
    return JonesPoly({-(e - 3 * w): sign * v for e, v in bracket.items()})


def span_jones(D: LinkDiagram, **kw) -> Fraction:
    return jones(D, **kw).span_t


@dataclass(frozen=True)
class BracketReport:
    bracket: LaurentPoly1
    M: int
    m: int
    aM: int
    am: int
    spanBracket: int
    sigma_A: int
    sigma_B: int

    @property
    def extremes_nonzero(self) -> bool:
        return self.aM != 0 and self.am != 0

    def as_dict(self) -> dict:
        return {
            "bracket": str(self.bracket),
            "M": self.M,
            "m": self.m,
            "aM": self.aM,
            "am": self.am,
            "span_bracket": self.spanBracket,
        }


def bracket_report(D: LinkDiagram, bracket: LaurentPoly1 = None, **kw) -> BracketReport:
    if bracket is None:
        bracket = kauffman_bracket(D, **kw)
    c = D.n_crossings
    sa = resolve_all(D, "A").circle_count
    sb = resolve_all(D, "B").circle_count
    M = c + 2 * sa - 2
    m = -c - 2 * sb + 2
    return BracketReport(bracket, M, m, bracket[M], bracket[m], bracket.span, sa, sb)

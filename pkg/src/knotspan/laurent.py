"""Exact Laurent polynomials with integer coefficients.

Two concrete types are provided: :class:`LaurentPoly1` in a single variable
(``A`` for brackets, ``q`` for Jones polynomials) and :class:`LaurentPoly2`
in the pair ``(a, z)`` used by the two-variable Kauffman polynomial.
Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import re
from typing import Dict, Iterable, Iterator, Mapping, Tuple

__all__ = [
    "LaurentPoly1",
    "LaurentPoly2",
    "substitute_bracket",
    "mod4_support_check",
    "span_a",
    "maxdeg_a",
    "mindeg_a",
]


class _Laurent:
    """Shared machinery: an immutable mapping exponent -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping = None):
        clean = {}
        if terms:
            for k, v in terms.items():
                v = int(v)
                if v:
                    clean[self._key(k)] = v
        self._terms: Dict = clean
        self._hash = None

    @staticmethod
    def _key(k):
        raise NotImplementedError

    @staticmethod
    def _add_keys(k1, k2):
        raise NotImplementedError

    @classmethod
    def _from_clean(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # mapping-ish access
    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, k) -> int:
        return self._terms.get(self._key(k), 0)

    coefficient = __getitem__

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def support(self) -> frozenset:
        return frozenset(self._terms)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self).constant(other)
        return NotImplemented

    @classmethod
    def constant(cls, c: int):
        raise NotImplementedError

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return self._from_clean({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self._from_clean({})
            return self._from_clean({k: v * other for k, v in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        add = self._add_keys
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = add(k1, k2)
                out[k] = out.get(k, 0) + v1 * v2
        return self._from_clean({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (k, v), = self._terms.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return self._monomial_power(k, v, n)
        result = type(self).constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = type(self).constant(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class LaurentPoly1(_Laurent):
    """Laurent polynomial in one variable.

    >>> A = LaurentPoly1.monomial(1)
    >>> (A + A**-1) * (A - A**-1)
    LaurentPoly1(A^2 - A^-2)
    """

    __slots__ = ("var",)

    def __init__(self, terms: Mapping[int, int] = None, var: str = "A"):
        super().__init__(terms)
        self.var = var

    @staticmethod
    def _key(k):
        return int(k)

    @staticmethod
    def _add_keys(k1, k2):
        return k1 + k2

    @classmethod
    def _from_clean(cls, terms, var="A"):
        obj = super()._from_clean(terms)
        obj.var = var
        return obj

    def _wrap(self, p):
        p.var = self.var
        return p

    def __add__(self, other):
        r = super().__add__(other)
        return r if r is NotImplemented else self._wrap(r)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(super().__neg__())

    def __mul__(self, other):
        r = super().__mul__(other)
        return r if r is NotImplemented else self._wrap(r)

    __rmul__ = __mul__

    def __pow__(self, n):
        return self._wrap(super().__pow__(n))

    @classmethod
    def constant(cls, c: int, var: str = "A") -> "LaurentPoly1":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, coeff: int = 1, var: str = "A") -> "LaurentPoly1":
        return cls({e: coeff}, var)

    def _monomial_power(self, k, v, n):
        return self._from_clean({k * n: v ** n}, self.var)

    # degree queries
    @property
    def maxdeg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    @property
    def mindeg(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    @property
    def span(self) -> int:
        return self.maxdeg - self.mindeg

    def shift(self, e: int) -> "LaurentPoly1":
        """Multiply by ``var**e``."""
        return self._from_clean({k + e: v for k, v in self._terms.items()}, self.var)

    def invert_variable(self) -> "LaurentPoly1":
        """Substitute ``var -> var**-1``."""
        return self._from_clean({-k: v for k, v in self._terms.items()}, self.var)

    def rename(self, var: str) -> "LaurentPoly1":
        return self._from_clean(dict(self._terms), var)

    def coefficients(self) -> list:
        """Coefficients from the highest exponent down, zeros included."""
        if not self._terms:
            return []
        return [self._terms.get(e, 0) for e in range(self.maxdeg, self.mindeg - 1, -1)]

    def __str__(self):
        return format_terms(
            ((e, c) for e, c in sorted(self._terms.items(), reverse=True)),
            lambda e: _power(self.var, e),
        )

    @classmethod
    def parse(cls, text: str, var: str = "A") -> "LaurentPoly1":
        """Inverse of ``str``; accepts e.g. ``-A^5 - A^-3 + A^-7``."""
        terms: dict = {}
        for coeff, mono in _split_terms(text):
            e = 0
            if mono:
                name, _, exp = mono.partition("^")
                if name != var:
                    raise ValueError(f"unexpected variable {name!r} in {text!r}")
                e = int(exp) if exp else 1
            terms[e] = terms.get(e, 0) + coeff
        return cls(terms, var)


class LaurentPoly2(_Laurent):
    """Laurent polynomial in ``a`` and ``z``; keys are ``(r, s)`` for ``a^r z^s``."""

    __slots__ = ()

    @staticmethod
    def _key(k):
        r, s = k
        return (int(r), int(s))

    @staticmethod
    def _add_keys(k1, k2):
        return (k1[0] + k2[0], k1[1] + k2[1])

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, r: int, s: int, coeff: int = 1) -> "LaurentPoly2":
        return cls({(r, s): coeff})

    def _monomial_power(self, k, v, n):
        return self._from_clean({(k[0] * n, k[1] * n): v ** n})

    def shift(self, r: int = 0, s: int = 0) -> "LaurentPoly2":
        return self._from_clean({(k[0] + r, k[1] + s): v for k, v in self._terms.items()})

    def invert_a(self) -> "LaurentPoly2":
        return self._from_clean({(-k[0], k[1]): v for k, v in self._terms.items()})

    @property
    def min_z(self) -> int:
        return min(s for _, s in self._terms)

    def __str__(self):
        def mono(k):
            r, s = k
            parts = [p for p in (_power("a", r), _power("z", s)) if p]
            return "*".join(parts)

        return format_terms(sorted(self._terms.items()), mono)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        terms: dict = {}
        for coeff, mono in _split_terms(text):
            r = s = 0
            for factor in filter(None, mono.split("*")):
                name, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if name == "a":
                    r += e
                elif name == "z":
                    s += e
                else:
                    raise ValueError(f"unexpected variable {name!r} in {text!r}")
            terms[(r, s)] = terms.get((r, s), 0) + coeff
        return cls(terms)


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def format_terms(terms: Iterable[Tuple[object, int]], mono) -> str:
    out = []
    for k, c in terms:
        m = mono(k)
        mag = abs(c)
        if m:
            body = m if mag == 1 else f"{mag}*{m}"
        else:
            body = str(mag)
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out) if out else "0"


_TERM = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*([A-Za-z][\w^*\-]*)?")


def _split_terms(text: str):
    text = text.strip()
    if text == "0" or not text:
        return
    # split on +/- that start a new term (not the sign of an exponent)
    pieces = re.split(r"(?<![\^])\s*(?=[+-])", text)
    for piece in pieces:
        piece = piece.replace(" ", "")
        if not piece:
            continue
        m = _TERM.fullmatch(piece)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse term {piece!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        yield sign * coeff, m.group(3) or ""


# -- module-level helpers -------------------------------------------------

_MINUS_A3 = LaurentPoly1({3: -1})
_A_PLUS_INV = LaurentPoly1({1: 1, -1: 1})


def _divide_by_a_plus_inv(p: LaurentPoly1) -> LaurentPoly1:
    """Exact quotient ``p / (A + A^-1)``; raises if the division leaves a remainder."""
    rest = dict(p.items())
    q = {}
    while rest:
        top = max(rest)
        c = rest.pop(top)
        q[top - 1] = c
        low = top - 2
        rest[low] = rest.get(low, 0) - c
        if rest[low] == 0:
            del rest[low]
        if rest and max(rest) < min(p) - 1:
            raise ValueError("polynomial is not divisible by A + A^-1")
    return LaurentPoly1(q)


def substitute_bracket(P: LaurentPoly2) -> LaurentPoly1:
    """Evaluate ``P(-A^3, A + A^-1)`` exactly.

    Negative powers of ``z`` are cleared first and divided out at the end,
    which succeeds whenever the image is a Laurent polynomial (as for any
    Kauffman polynomial, where they only enter through ``delta``).
    """
    if P.is_zero():
        return LaurentPoly1()
    lift = max(0, -P.min_z)
    out = LaurentPoly1()
    zpow: dict = {}
    for (r, s), c in P.items():
        s += lift
        if s not in zpow:
            zpow[s] = _A_PLUS_INV ** s
        out = out + zpow[s].shift(3 * r) * (c * (-1) ** (r % 2))
    for _ in range(lift):
        out = _divide_by_a_plus_inv(out)
    return out


def maxdeg_a(P: LaurentPoly2) -> int:
    if P.is_zero():
        raise ValueError("zero polynomial has no a-degree")
    return max(r for r, _ in P)


def mindeg_a(P: LaurentPoly2) -> int:
    if P.is_zero():
        raise ValueError("zero polynomial has no a-degree")
    return min(r for r, _ in P)


def span_a(P: LaurentPoly2) -> int:
    return maxdeg_a(P) - mindeg_a(P)


def mod4_support_check(P: LaurentPoly1) -> bool:
    """True when every exponent in ``P`` has the same residue mod 4."""
    if P.is_zero():
        raise ValueError("zero polynomial has no support")
    return len({e % 4 for e in P}) == 1

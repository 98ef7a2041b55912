"""Exact polynomials in two variables ``p`` and ``q`` and the (p,q)-analog tower."""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import InexactDivision, InfeasibleSums
from .polyomino import MoonPolyomino, h_vector

Monomial = tuple[int, int]


class BivarPoly:
    """Polynomial ``sum c * p^i * q^j`` with integer coefficients.

    Instances are immutable and hashable.  Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in p^{i} q^{j}")
            acc[(i, j)] = acc.get((i, j), 0) + c
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> BivarPoly:
        return cls({(i, j): coeff})

    @classmethod
    def constant(cls, c: int) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def from_pairs(cls, pairs: Mapping[Monomial, int] | Iterable[Monomial]) -> BivarPoly:
        """Generating polynomial of a multiset of exponent pairs."""
        if isinstance(pairs, Mapping):
            return cls(pairs)
        return cls(Counter(pairs))

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """``(i, j, coeff)`` with p-exponent descending, then q-exponent ascending."""
        return sorted(((i, j, c) for (i, j), c in self._terms.items()),
                      key=lambda t: (-t[0], t[1]))

    def __add__(self, other):
        other = _coerce(other)
        acc = dict(self._terms)
        for k, v in other._terms.items():
            acc[k] = acc.get(k, 0) + v
        return BivarPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        acc: dict[Monomial, int] = {}
        for (a, b), c in self._terms.items():
            for (x, y), d in other._terms.items():
                k = (a + x, b + y)
                acc[k] = acc.get(k, 0) + c * d
        return BivarPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _leading(self) -> Monomial:
        return max(self._terms)

    def divexact(self, divisor: BivarPoly) -> BivarPoly:
        """Exact quotient; raises :class:`InexactDivision` when a remainder is left."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor._leading()
        lead_c = divisor._terms[lead]
        rem = dict(self._terms)
        quot: dict[Monomial, int] = {}
        while rem:
            top = max(rem)
            c = rem[top]
            di, dj = top[0] - lead[0], top[1] - lead[1]
            if di < 0 or dj < 0 or c % lead_c:
                raise InexactDivision(f"{self} is not divisible by {divisor}")
            qc = c // lead_c
            quot[(di, dj)] = qc
            for (x, y), d in divisor._terms.items():
                k = (x + di, y + dj)
                v = rem.get(k, 0) - qc * d
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return BivarPoly(quot)

    def swap(self) -> BivarPoly:
        """Exchange the roles of ``p`` and ``q``."""
        return BivarPoly({(j, i): c for (i, j), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def evaluate(self, p, q):
        return sum(c * p ** i * q ** j for (i, j), c in self._terms.items())

    def to_text(self) -> str:
        """``coeff p^i q^j`` terms joined by `` + ``; ``0`` for the zero polynomial."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c} p^{i} q^{j}" for i, j, c in self.sorted_terms())

    def to_records(self) -> list[dict[str, int]]:
        return [{"i": i, "j": j, "coeff": c} for i, j, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, int]]) -> BivarPoly:
        return cls(((r["i"], r["j"]), r["coeff"]) for r in records)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, j, c in self.sorted_terms():
            mono = "*".join(x for x in (_power("p", i), _power("q", j)) if x)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"


def _power(x: str, k: int) -> str:
    if k == 0:
        return ""
    return x if k == 1 else f"{x}^{k}"


def _coerce(x) -> BivarPoly:
    if isinstance(x, BivarPoly):
        return x
    if isinstance(x, int):
        return BivarPoly.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


ZERO = BivarPoly()
ONE = BivarPoly.constant(1)
P = BivarPoly.monomial(1, 0)
Q = BivarPoly.monomial(0, 1)


@lru_cache(maxsize=None)
def pq_integer(r: int) -> BivarPoly:
    """``[r] = p^(r-1) + p^(r-2) q + ... + q^(r-1)``; ``[0] = 0``."""
    if r < 0:
        raise ValueError("pq_integer needs r >= 0")
    return BivarPoly({(r - 1 - k, k): 1 for k in range(r)})


@lru_cache(maxsize=None)
def pq_factorial(r: int) -> BivarPoly:
    if r < 0:
        raise ValueError("pq_factorial needs r >= 0")
    out = ONE
    for i in range(1, r + 1):
        out = out * pq_integer(i)
    return out


def pq_multinomial(n: int, parts: Sequence[int]) -> BivarPoly:
    """Gaussian multinomial ``[n]! / ([s1]! ... [sm]!)``.

    The quotient is formed by dividing out one ``[i]`` at a time.
    """
    parts = tuple(parts)
    if any(s < 0 for s in parts) or sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    return _multinomial(n, tuple(sorted(parts)))


@lru_cache(maxsize=None)
def _multinomial(n: int, parts: tuple[int, ...]) -> BivarPoly:
    out = pq_factorial(n)
    for s in parts:
        for i in range(2, s + 1):
            out = out.divexact(pq_integer(i))
    return out


def pq_binomial(n: int, k: int) -> BivarPoly:
    if not 0 <= k <= n:
        return ZERO
    return pq_multinomial(n, (k, n - k))


def product_formula(M: MoonPolyomino, e: Sequence[int], s: Sequence[int]) -> BivarPoly:
    """Closed form ``prod_i [h_i choose s_i]`` of the (se, ne) distribution."""
    h = h_vector(M, e, s)
    out = ONE
    for hi, si in zip(h, s):
        if hi < si:
            raise InfeasibleSums(f"h = {h} cannot hold s = {tuple(s)}")
        out = out * pq_binomial(hi, si)
    return out

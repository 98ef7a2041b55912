"""Words and perfect matchings seen as fillings of rectangles and Ferrers diagrams."""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

from .errors import IndexOutOfRange, InvalidEndpointSets, LetterOutOfRange, MoonError
from .fillings import Filling
from .polyomino import MoonPolyomino, rectangle_shape
from .pq import BivarPoly

Kind = Literal["alpha", "beta", "gamma", "delta"]

# -- words -------------------------------------------------------------------------


def _check_word(w: Sequence[int], m: int) -> tuple[int, ...]:
    w = tuple(int(x) for x in w)
    for x in w:
        if not 1 <= x <= m:
            raise LetterOutOfRange(f"letter {x} not in 1..{m}")
    return w


def word_to_filling(w: Sequence[int], n: int | None = None, m: int | None = None) -> Filling:
    """The ``n x m`` rectangle filling with a 1 in row ``n + 1 - i`` and column ``w_i``."""
    n = len(w) if n is None else n
    m = max(w, default=1) if m is None else m
    if len(w) != n:
        raise MoonError(f"word has length {len(w)}, expected {n}")
    w = _check_word(w, m)
    return Filling(rectangle_shape(n, m), tuple(reversed(w)))


def filling_to_word(F: Filling) -> tuple[int, ...]:
    if not F.shape.is_rectangle or 0 in F.cols:
        raise MoonError("only rectangle fillings with a 1 in every row encode words")
    return tuple(reversed(F.cols))


def inv(w: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a > b)


def coinv(w: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(w, 2) if a < b)


def word_mixed(w: Sequence[int], kind: Kind, A: Iterable[int], *, m: int | None = None,
               by: Literal["row", "position"] = "row") -> int:
    """Mixed statistic of a word, counted pair by pair.

    For ``alpha``/``beta`` the subset ``A`` names rows of the filling by default;
    with ``by="position"`` it names word positions instead (row ``n + 1 - i``
    holds position ``i``).  For ``gamma``/``delta`` ``A`` is a set of letters.
    """
    n = len(w)
    m = max(w, default=1) if m is None else m
    w = _check_word(w, m)
    A = frozenset(A)
    if kind in ("alpha", "beta"):
        size = n
        if by == "position":
            _range_check(A, n, "position")
            A = frozenset(n + 1 - i for i in A)
    elif kind in ("gamma", "delta"):
        size = m
    else:
        raise ValueError(f"unknown statistic {kind!r}")
    _range_check(A, size, "row" if kind in ("alpha", "beta") else "letter")
    total = 0
    for i, j in itertools.combinations(range(1, n + 1), 2):
        a, b = w[i - 1], w[j - 1]
        if a == b:
            continue
        co = a < b
        if kind == "alpha":
            hit = (n + 1 - j) in A
        elif kind == "beta":
            hit = (n + 1 - i) in A
        elif kind == "gamma":
            hit = (a in A) if co else (b not in A)
            total += hit
            continue
        else:
            hit = (b in A) if co else (a not in A)
            total += hit
            continue
        total += hit if co else not hit
    return total


def _range_check(A: frozenset[int], size: int, what: str) -> None:
    bad = [x for x in A if not 1 <= x <= size]
    if bad:
        raise IndexOutOfRange(f"{what} {min(bad)} not in 1..{size}")


def rearrangements(W: Iterable[int]) -> list[tuple[int, ...]]:
    """Distinct rearrangements of the multiset ``W`` in lexicographic order."""
    return sorted(set(itertools.permutations(sorted(W))))


def word_distribution(W: Iterable[int], kind: Kind, A: Iterable[int], m: int | None = None) -> BivarPoly:
    """``sum over rearrangements w of p^lambda(A; w) q^lambda(complement; w)``."""
    words = rearrangements(W)
    if not words:
        return BivarPoly.constant(1)
    n = len(words[0])
    m = max(words[0], default=1) if m is None else m
    A = frozenset(A)
    size = n if kind in ("alpha", "beta") else m
    Ac = frozenset(range(1, size + 1)) - A
    return BivarPoly.from_pairs(Counter(
        (word_mixed(w, kind, A, m=m), word_mixed(w, kind, Ac, m=m)) for w in words))


def inversion_distribution(W: Iterable[int]) -> BivarPoly:
    return BivarPoly.from_pairs(Counter((inv(w), coinv(w)) for w in rearrangements(W)))


# -- matchings ------------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """Perfect matching on ``[2n]``; arcs are kept sorted by left endpoint."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple(sorted((int(a), int(b)) for a, b in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        if any(a >= b for a, b in arcs):
            raise InvalidEndpointSets("every arc must have its left endpoint first")
        points = sorted(x for arc in arcs for x in arc)
        if points != list(range(1, 2 * len(arcs) + 1)):
            raise InvalidEndpointSets(f"arcs do not cover 1..{2 * len(arcs)} exactly once")

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def lefts(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.arcs)

    @property
    def rights(self) -> tuple[int, ...]:
        return tuple(sorted(b for _, b in self.arcs))


def _ferrers(A: Sequence[int], B: Sequence[int]) -> MoonPolyomino:
    return MoonPolyomino(tuple((1, sum(1 for r in B if r > l)) for l in A))


def ferrers_shape(A: Iterable[int], B: Iterable[int]) -> MoonPolyomino:
    """Rows indexed by the left endpoints top to bottom, columns by the right ones in decreasing order."""
    A, B = check_endpoint_sets(A, B)
    return _ferrers(A, B)


def matching_to_filling(pi: Matching) -> Filling:
    A, B = pi.lefts, pi.rights
    n = pi.n
    col_of = {r: n - k for k, r in enumerate(B)}
    return Filling(_ferrers(A, B), tuple(col_of[b] for _, b in pi.arcs))


def crossings(pi: Matching) -> int:
    return sum(1 for (a, b), (c, d) in itertools.combinations(pi.arcs, 2) if a < c < b < d)


def nestings(pi: Matching) -> int:
    return sum(1 for (a, b), (c, d) in itertools.combinations(pi.arcs, 2) if a < c < d < b)


def mixed_alpha_matching(pi: Matching, S: Iterable[int]) -> int:
    """Crossings whose first arc starts in ``S`` plus nestings whose outer arc starts outside ``S``.

    ``S`` is a set of left endpoints.
    """
    S = frozenset(S)
    stray = S - set(pi.lefts)
    if stray:
        raise IndexOutOfRange(f"{min(stray)} is not a left endpoint")
    total = 0
    for (a, b), (c, d) in itertools.combinations(pi.arcs, 2):
        if c < b < d:
            total += a in S
        elif d < b:
            total += a not in S
    return total


def check_endpoint_sets(A: Iterable[int], B: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    A, B = tuple(sorted(A)), tuple(sorted(B))
    n = len(A)
    if len(B) != n or sorted(A + B) != list(range(1, 2 * n + 1)):
        raise InvalidEndpointSets("left and right endpoints must split 1..2n into two halves")
    depth = 0
    left = set(A)
    for x in range(1, 2 * n + 1):
        depth += 1 if x in left else -1
        if depth < 0:
            raise InvalidEndpointSets(f"more right than left endpoints among 1..{x}")
    return A, B


def matching_h_vector(A: Iterable[int], B: Iterable[int]) -> tuple[int, ...]:
    """``h_i`` = cells in the column of ``r_i`` minus ``(i - 1)``, for ``i = 1..n``."""
    A, B = check_endpoint_sets(A, B)
    return tuple(sum(1 for a in A if a < r) - i for i, r in enumerate(B))


def enumerate_matchings(A: Iterable[int], B: Iterable[int]) -> Iterator[Matching]:
    """All matchings with left endpoints ``A`` and right endpoints ``B``.

    Right endpoints are closed in increasing order, each against a still-open
    left endpoint before it.
    """
    A, B = check_endpoint_sets(A, B)
    used: set[int] = set()
    arcs: list[tuple[int, int]] = []

    def rec(k: int) -> Iterator[Matching]:
        if k == len(B):
            yield Matching(tuple(arcs))
            return
        r = B[k]
        for a in A:
            if a > r:
                break
            if a not in used:
                used.add(a)
                arcs.append((a, r))
                yield from rec(k + 1)
                arcs.pop()
                used.discard(a)

    yield from rec(0)


def endpoint_classes(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every valid ``(A, B)`` on ``[2n]``."""
    for A in itertools.combinations(range(1, 2 * n + 1), n):
        B = tuple(sorted(set(range(1, 2 * n + 1)) - set(A)))
        try:
            yield check_endpoint_sets(A, B)
        except InvalidEndpointSets:
            continue


def all_matchings(n: int) -> Iterator[Matching]:
    for A, B in endpoint_classes(n):
        yield from enumerate_matchings(A, B)


def rows_to_endpoints(pi: Matching, rows: Iterable[int]) -> frozenset[int]:
    """Left endpoints ``l_i`` for the row indices ``i`` given."""
    lefts = pi.lefts
    rows = frozenset(rows)
    _range_check(rows, pi.n, "row")
    return frozenset(lefts[i - 1] for i in rows)


def matching_distribution(A: Iterable[int], B: Iterable[int], S: Iterable[int]) -> BivarPoly:
    """``sum over P_n(A, B) of p^alpha(S) q^alpha(complement)``; ``S`` is a set of left endpoints."""
    A, B = check_endpoint_sets(A, B)
    S = frozenset(S)
    Sc = frozenset(A) - S
    return BivarPoly.from_pairs(Counter(
        (mixed_alpha_matching(pi, S), mixed_alpha_matching(pi, Sc)) for pi in enumerate_matchings(A, B)))


def alpha_zero_count(n: int, rows: Iterable[int]) -> int:
    """Matchings on ``[2n]`` with ``alpha(S) = 0``, where ``S`` picks the left endpoints in positions ``rows``."""
    rows = frozenset(rows)
    return sum(1 for pi in all_matchings(n)
               if mixed_alpha_matching(pi, rows_to_endpoints(pi, rows)) == 0)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def catalan_by_recurrence(n: int) -> int:
    c = [1]
    for k in range(1, n + 1):
        c.append(sum(c[i] * c[k - 1 - i] for i in range(k)))
    return c[n]

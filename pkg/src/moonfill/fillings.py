"""01-fillings with at most one 1 per row, chains, and the mixed statistics."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

from .errors import CellOutsideShape, IndexOutOfRange, InfeasibleSums, MoonError
from .polyomino import Cell, MoonPolyomino, check_sums, reflect_horizontal, reflect_vertical
from .pq import BivarPoly

Statistic = Literal["top", "bottom", "left", "right"]
STATISTICS: tuple[Statistic, ...] = ("top", "bottom", "left", "right")


@dataclass(frozen=True)
class Filling:
    """A filling stored row by row: ``cols[i - 1]`` is the column of the 1 in row ``i``, or 0."""

    shape: MoonPolyomino
    cols: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if len(cols) != self.shape.n:
            raise MoonError(f"filling has {len(cols)} rows, shape has {self.shape.n}")
        for i, c in enumerate(cols, 1):
            if c and not self.shape.contains(i, c):
                raise CellOutsideShape(f"1-cell ({i}, {c}) lies outside the shape")

    @classmethod
    def from_cells(cls, shape: MoonPolyomino, cells: Iterable[Cell]) -> Filling:
        cols = [0] * shape.n
        for i, j in cells:
            if not shape.contains(i, j):
                raise CellOutsideShape(f"1-cell ({i}, {j}) lies outside the shape")
            if cols[i - 1]:
                raise MoonError(f"row {i} holds more than one 1")
            cols[i - 1] = j
        return cls(shape, tuple(cols))

    @classmethod
    def empty(cls, shape: MoonPolyomino) -> Filling:
        return cls(shape, (0,) * shape.n)

    @property
    def ones(self) -> frozenset[Cell]:
        return frozenset((i, c) for i, c in enumerate(self.cols, 1) if c)

    def is_one(self, i: int, j: int) -> bool:
        return self.cols[i - 1] == j

    @property
    def e(self) -> tuple[int, ...]:
        return tuple(1 if c else 0 for c in self.cols)

    @property
    def s(self) -> tuple[int, ...]:
        out = [0] * self.shape.m
        for c in self.cols:
            if c:
                out[c - 1] += 1
        return tuple(out)

    @cached_property
    def chains(self) -> tuple[Chain, ...]:
        return tuple(_chains(self))

    def __str__(self) -> str:
        lines = []
        for r, c in zip(self.shape.rows, self.cols):
            lines.append(" " * (r.left - 1) + "".join("1" if j == c else "." for j in range(r.left, r.right + 1)))
        return "\n".join(lines)


class Chain(NamedTuple):
    """Two 1-cells; ``upper`` lies in the higher row.  ``kind`` is ``"ne"`` or ``"se"``."""

    upper: Cell
    lower: Cell
    kind: str

    @property
    def left(self) -> Cell:
        return self.upper if self.upper[1] < self.lower[1] else self.lower

    @property
    def right(self) -> Cell:
        return self.lower if self.upper[1] < self.lower[1] else self.upper


def _chains(F: Filling) -> Iterator[Chain]:
    rows = F.shape.rows
    ones = [(i, c) for i, c in enumerate(F.cols, 1) if c]
    for a in range(len(ones)):
        i1, c1 = ones[a]
        for b in range(a + 1, len(ones)):
            i2, c2 = ones[b]
            if c1 == c2:
                continue
            lo, hi = min(c1, c2), max(c1, c2)
            if all(rows[r - 1].left <= lo and hi <= rows[r - 1].right for r in range(i1, i2 + 1)):
                yield Chain((i1, c1), (i2, c2), "ne" if c1 > c2 else "se")


def ne_count(F: Filling) -> int:
    return sum(1 for ch in F.chains if ch.kind == "ne")


def se_count(F: Filling) -> int:
    return sum(1 for ch in F.chains if ch.kind == "se")


def _subset(A: Iterable[int], size: int, what: str) -> frozenset[int]:
    A = frozenset(A)
    bad = [x for x in A if not 1 <= x <= size]
    if bad:
        raise IndexOutOfRange(f"{what} index {min(bad)} not in 1..{size}")
    return A


def _mixed(F: Filling, A: frozenset[int], anchor) -> int:
    total = 0
    for ch in F.chains:
        inside = anchor(ch) in A
        if inside == (ch.kind == "ne"):
            total += 1
    return total


def top_mixed(F: Filling, S: Iterable[int]) -> int:
    """NE chains whose upper cell lies in a row of ``S`` plus SE chains whose upper cell does not."""
    S = _subset(S, F.shape.n, "row")
    return _mixed(F, S, lambda ch: ch.upper[0])


def bottom_mixed(F: Filling, S: Iterable[int]) -> int:
    S = _subset(S, F.shape.n, "row")
    return _mixed(F, S, lambda ch: ch.lower[0])


def left_mixed(F: Filling, T: Iterable[int]) -> int:
    T = _subset(T, F.shape.m, "column")
    return _mixed(F, T, lambda ch: ch.left[1])


def right_mixed(F: Filling, T: Iterable[int]) -> int:
    T = _subset(T, F.shape.m, "column")
    return _mixed(F, T, lambda ch: ch.right[1])


_STAT_FUNCS = {"top": top_mixed, "bottom": bottom_mixed, "left": left_mixed, "right": right_mixed}


def mixed(F: Filling, statistic: Statistic, A: Iterable[int]) -> int:
    return _STAT_FUNCS[statistic](F, A)


def complement(A: Iterable[int], size: int) -> frozenset[int]:
    return frozenset(range(1, size + 1)) - frozenset(A)


def _universe(F_or_M, statistic: Statistic) -> int:
    M = F_or_M.shape if isinstance(F_or_M, Filling) else F_or_M
    return M.n if statistic in ("top", "bottom") else M.m


def mixed_pair(F: Filling, statistic: Statistic, A: Iterable[int]) -> tuple[int, int]:
    """``(lambda(A; F), lambda(complement of A; F))`` for the chosen statistic."""
    A = frozenset(A)
    return mixed(F, statistic, A), mixed(F, statistic, complement(A, _universe(F, statistic)))


# -- enumeration -------------------------------------------------------------------


def enumerate_fillings(M: MoonPolyomino, e: Sequence[int], s: Sequence[int]) -> Iterator[Filling]:
    """Every filling with row sums ``e`` and column sums ``s``, each exactly once.

    Rows are assigned top to bottom, trying columns in increasing order, so the
    output is sorted lexicographically by the row-by-row column choices.
    """
    check_sums(M, e, s)
    yield from _search(M, tuple(e), tuple(s), prefix=())


def _search(M: MoonPolyomino, e: tuple[int, ...], s: tuple[int, ...], prefix: tuple[int, ...]) -> Iterator[Filling]:
    n = M.n
    cap = list(s)
    for c in prefix:
        if c:
            cap[c - 1] -= 1
    if any(x < 0 for x in cap):
        return
    for i, c in enumerate(prefix, 1):
        if bool(c) != bool(e[i - 1]) or (c and not M.contains(i, c)):
            return
    # rows still to place that meet each column, for pruning
    spans = M.column_spans
    cols = list(prefix)

    def feasible(i: int) -> bool:
        for j, need in enumerate(cap, 1):
            if need:
                top, bottom = spans[j - 1]
                avail = sum(1 for r in range(max(i, top), bottom + 1) if e[r - 1])
                if avail < need:
                    return False
        return True

    def rec(i: int) -> Iterator[Filling]:
        if i > n:
            yield Filling(M, tuple(cols))
            return
        if not e[i - 1]:
            cols.append(0)
            yield from rec(i + 1)
            cols.pop()
            return
        row = M.rows[i - 1]
        for j in range(row.left, row.right + 1):
            if cap[j - 1]:
                cap[j - 1] -= 1
                cols.append(j)
                if feasible(i + 1):
                    yield from rec(i + 1)
                cols.pop()
                cap[j - 1] += 1

    if feasible(len(prefix) + 1):
        yield from rec(len(prefix) + 1)


def first_row_prefixes(M: MoonPolyomino, e: Sequence[int]) -> list[tuple[int, ...]]:
    """Partition of the search space by the choice made in the first row."""
    if not e[0]:
        return [(0,)]
    return [(j,) for j in range(M.rows[0].left, M.rows[0].right + 1)]


def enumerate_fillings_from(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
                            prefix: Sequence[int]) -> Iterator[Filling]:
    """The part of :func:`enumerate_fillings` whose first rows equal ``prefix``."""
    check_sums(M, e, s)
    yield from _search(M, tuple(e), tuple(s), tuple(prefix))


def all_fillings(M: MoonPolyomino) -> Iterator[Filling]:
    """Every filling of ``M`` with at most one 1 per row, regardless of sums."""
    choices = [[0, *range(r.left, r.right + 1)] for r in M.rows]
    cols: list[int] = []

    def rec(i: int) -> Iterator[Filling]:
        if i == M.n:
            yield Filling(M, tuple(cols))
            return
        for c in choices[i]:
            cols.append(c)
            yield from rec(i + 1)
            cols.pop()

    yield from rec(0)


def fillings_by_sums(M: MoonPolyomino) -> dict[tuple[tuple[int, ...], tuple[int, ...]], list[Filling]]:
    """All fillings of ``M`` grouped by their ``(e, s)`` class."""
    groups: dict = {}
    for F in all_fillings(M):
        groups.setdefault((F.e, F.s), []).append(F)
    return groups


# -- distributions -----------------------------------------------------------------


def pair_counts(fillings: Iterable[Filling], statistic: Statistic, A: Iterable[int]) -> Counter:
    """Multiset of ``(lambda(A), lambda(complement))`` pairs; merge partial results with ``+``."""
    A = frozenset(A)
    return Counter(mixed_pair(F, statistic, A) for F in fillings)


def distribution(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
                 statistic: Statistic, A: Iterable[int]) -> BivarPoly:
    """``sum over F of p^lambda(A; F) q^lambda(complement; F)``."""
    if statistic not in _STAT_FUNCS:
        raise ValueError(f"unknown statistic {statistic!r}")
    A = _subset(A, M.n if statistic in ("top", "bottom") else M.m,
                "row" if statistic in ("top", "bottom") else "column")
    return BivarPoly.from_pairs(pair_counts(enumerate_fillings(M, e, s), statistic, A))


def se_ne_distribution(M: MoonPolyomino, e: Sequence[int], s: Sequence[int]) -> BivarPoly:
    """``sum over F of p^se(F) q^ne(F)``."""
    return BivarPoly.from_pairs(Counter((se_count(F), ne_count(F)) for F in enumerate_fillings(M, e, s)))


# -- reflections of fillings ---------------------------------------------------


def reflect_filling_horizontal(F: Filling) -> Filling:
    return Filling(reflect_horizontal(F.shape), tuple(reversed(F.cols)))


def reflect_filling_vertical(F: Filling) -> Filling:
    m = F.shape.m
    return Filling(reflect_vertical(F.shape), tuple(m + 1 - c if c else 0 for c in F.cols))


def require_sums(F: Filling, e: Sequence[int], s: Sequence[int]) -> None:
    if F.e != tuple(e) or F.s != tuple(s):
        raise InfeasibleSums(f"filling has sums {F.e}, {F.s}; expected {tuple(e)}, {tuple(s)}")

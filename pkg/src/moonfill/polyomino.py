"""Moon polyominoes stored as row intervals.

Rows are numbered 1..n from top to bottom and columns 1..m from left to
right.  A row is a closed interval ``[left, right]`` of column indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    EmptyShape,
    IndexOutOfRange,
    InfeasibleSums,
    MissingColumn,
    MoonError,
    NotColumnConvex,
    NotComparable,
)

Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class RowInterval:
    left: int
    right: int

    def __post_init__(self):
        if not (1 <= self.left <= self.right):
            raise MoonError(f"bad row interval [{self.left}, {self.right}]")

    def __contains__(self, j: int) -> bool:
        return self.left <= j <= self.right

    def __len__(self) -> int:
        return self.right - self.left + 1

    def contains(self, other: RowInterval) -> bool:
        return self.left <= other.left and other.right <= self.right


@dataclass(frozen=True)
class Rectangle:
    top: int
    bottom: int
    left: int
    right: int

    def cells(self) -> Iterator[Cell]:
        for i in range(self.top, self.bottom + 1):
            for j in range(self.left, self.right + 1):
                yield (i, j)

    @property
    def rows(self) -> range:
        return range(self.top, self.bottom + 1)

    @property
    def columns(self) -> range:
        return range(self.left, self.right + 1)

    @property
    def area(self) -> int:
        return (self.bottom - self.top + 1) * (self.right - self.left + 1)


def _as_interval(row) -> RowInterval:
    if isinstance(row, RowInterval):
        return row
    left, right = row
    return RowInterval(int(left), int(right))


@dataclass(frozen=True)
class MoonPolyomino:
    """A convex, intersection-free polyomino.

    Construction validates the shape; an invalid row list raises the
    matching :class:`~moonfill.errors.MoonError` subclass.
    """

    rows: tuple[RowInterval, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(_as_interval(r) for r in self.rows))
        _check(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def m(self) -> int:
        return max(r.right for r in self.rows)

    def row(self, i: int) -> RowInterval:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"row {i} not in 1..{self.n}")
        return self.rows[i - 1]

    @cached_property
    def column_spans(self) -> tuple[tuple[int, int], ...]:
        """``(top, bottom)`` row range of every column, indexed from 0."""
        spans = []
        for j in range(1, self.m + 1):
            hit = [i for i, r in enumerate(self.rows, 1) if j in r]
            spans.append((hit[0], hit[-1]))
        return tuple(spans)

    def column(self, j: int) -> tuple[int, int]:
        self._check_column(j)
        return self.column_spans[j - 1]

    def column_length(self, j: int) -> int:
        top, bottom = self.column(j)
        return bottom - top + 1

    @cached_property
    def column_lengths(self) -> tuple[int, ...]:
        return tuple(b - t + 1 for t, b in self.column_spans)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= self.n and j in self.rows[i - 1]

    def contains_rectangle(self, rect: Rectangle) -> bool:
        if rect.top < 1 or rect.bottom > self.n or rect.top > rect.bottom or rect.left > rect.right:
            return False
        return all(self.rows[i - 1].left <= rect.left and rect.right <= self.rows[i - 1].right
                   for i in rect.rows)

    def cells(self) -> Iterator[Cell]:
        for i, r in enumerate(self.rows, 1):
            for j in range(r.left, r.right + 1):
                yield (i, j)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_rectangle(self) -> bool:
        return all(r == self.rows[0] for r in self.rows)

    @property
    def is_left_aligned(self) -> bool:
        return all(r.left == 1 for r in self.rows)

    @property
    def is_top_aligned(self) -> bool:
        return all(top == 1 for top, _ in self.column_spans)

    def _check_column(self, j: int) -> None:
        if not 1 <= j <= self.m:
            raise IndexOutOfRange(f"column {j} not in 1..{self.m}")

    def __str__(self) -> str:
        lines = []
        for r in self.rows:
            lines.append(" " * (r.left - 1) + "#" * len(r))
        return "\n".join(lines)


def _check(rows: Sequence[RowInterval]) -> None:
    if not rows:
        raise EmptyShape("a moon polyomino needs at least one row")
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not (rows[a].contains(rows[b]) or rows[b].contains(rows[a])):
                raise NotComparable(a + 1, b + 1)
    m = max(r.right for r in rows)
    for j in range(1, m + 1):
        hit = [i for i, r in enumerate(rows) if j in r]
        if not hit:
            raise MissingColumn(j)
        if hit[-1] - hit[0] + 1 != len(hit):
            raise NotColumnConvex(j)


def validate_moon(rows: Iterable) -> MoonPolyomino:
    """Build a :class:`MoonPolyomino` from ``(left, right)`` pairs, top row first."""
    return MoonPolyomino(tuple(rows))


def from_column_spans(spans: Sequence[tuple[int, int]]) -> MoonPolyomino:
    """Inverse of :attr:`MoonPolyomino.column_spans`."""
    n = max(b for _, b in spans)
    rows = []
    for i in range(1, n + 1):
        hit = [j for j, (t, b) in enumerate(spans, 1) if t <= i <= b]
        if not hit:
            raise EmptyShape(f"row {i} is empty")
        if hit[-1] - hit[0] + 1 != len(hit):
            raise MoonError(f"row {i} is not convex")
        rows.append((hit[0], hit[-1]))
    return MoonPolyomino(tuple(rows))


def rectangle_shape(n: int, m: int) -> MoonPolyomino:
    return MoonPolyomino(tuple((1, m) for _ in range(n)))


# -- column classification and the order on columns -------------------------


@dataclass(frozen=True)
class ColumnClassification:
    k: int
    left_part: frozenset[int]
    right_part: frozenset[int]


@lru_cache(maxsize=4096)
def classify_columns(M: MoonPolyomino) -> ColumnClassification:
    """Split the columns at the first column of maximal length."""
    lengths = M.column_lengths
    k = lengths.index(max(lengths)) + 1
    return ColumnClassification(
        k=k,
        left_part=frozenset(range(1, k)),
        right_part=frozenset(range(k, M.m + 1)),
    )


def _order_key(M: MoonPolyomino, cls: ColumnClassification, j: int) -> tuple[int, int, int]:
    if j in cls.left_part:
        return (M.column_length(j), 0, j)
    return (M.column_length(j), 1, -j)


@lru_cache(maxsize=4096)
def column_order(M: MoonPolyomino) -> tuple[int, ...]:
    """All columns listed from smallest to largest in the order ``C_i1 < C_i2 < ...``."""
    cls = classify_columns(M)
    return tuple(sorted(range(1, M.m + 1), key=lambda j: _order_key(M, cls, j)))


def column_precedes(M: MoonPolyomino, i: int, j: int) -> bool:
    """True iff column ``i`` comes strictly before column ``j``.

    Shorter columns come first; at equal length left-part columns come
    before right-part ones, left-part columns are taken left to right and
    right-part columns right to left.
    """
    M._check_column(i)
    M._check_column(j)
    if i == j:
        raise MoonError("column_precedes needs two distinct columns")
    cls = classify_columns(M)
    return _order_key(M, cls, i) < _order_key(M, cls, j)


@lru_cache(maxsize=4096)
def column_rectangle(M: MoonPolyomino, i: int) -> Rectangle:
    """The rectangle attached to column ``i`` by the coloring procedure.

    Left-part columns get the widest rectangle having the column as its
    leftmost column.  Right-part columns get the widest rectangle having the
    column as its rightmost column that avoids every earlier left-part column.
    """
    top, bottom = M.column(i)
    band = M.rows[top - 1:bottom]
    cls = classify_columns(M)
    if i in cls.left_part:
        return Rectangle(top, bottom, i, min(r.right for r in band))
    cls_key = _order_key(M, cls, i)
    left = i
    while left - 1 >= 1 and all(left - 1 in r for r in band):
        j = left - 1
        if j in cls.left_part and _order_key(M, cls, j) < cls_key:
            break
        left = j
    return Rectangle(top, bottom, left, i)


def empty_row_counts(M: MoonPolyomino, e: Sequence[int]) -> tuple[int, ...]:
    """For every column, the number of empty rows (``e_i == 0``) that meet it."""
    return tuple(sum(1 for i in range(t, b + 1) if e[i - 1] == 0) for t, b in M.column_spans)


def check_sums(M: MoonPolyomino, e: Sequence[int], s: Sequence[int]) -> None:
    if len(e) != M.n:
        raise InfeasibleSums(f"row-sum vector has length {len(e)}, shape has {M.n} rows")
    if len(s) != M.m:
        raise InfeasibleSums(f"column-sum vector has length {len(s)}, shape has {M.m} columns")
    if any(x not in (0, 1) for x in e):
        raise InfeasibleSums("row sums must be 0 or 1")
    if any(x < 0 for x in s):
        raise InfeasibleSums("column sums must be nonnegative")
    if sum(e) != sum(s):
        raise InfeasibleSums(f"row sums total {sum(e)} but column sums total {sum(s)}")


def h_vector(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
             order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Number of cells still available in each column when columns are filled in order.

    ``order`` defaults to :func:`column_order`.  The result is indexed by the
    original column position.  Raises :class:`InfeasibleSums` when some column
    has fewer available cells than it must hold.
    """
    check_sums(M, e, s)
    if order is None:
        order = column_order(M)
    empties = empty_row_counts(M, e)
    h = [0] * M.m
    used = 0
    for j in order:
        h[j - 1] = M.column_length(j) - empties[j - 1] - used
        used += s[j - 1]
    for j in range(1, M.m + 1):
        if h[j - 1] < s[j - 1]:
            raise InfeasibleSums(f"column {j} has {h[j - 1]} available cells but needs {s[j - 1]}")
    return tuple(h)


# -- geometric transforms ------------------------------------------------------


def reflect_horizontal(M: MoonPolyomino) -> MoonPolyomino:
    """Mirror top to bottom: row ``i`` becomes row ``n + 1 - i``."""
    return MoonPolyomino(tuple(reversed(M.rows)))


def reflect_vertical(M: MoonPolyomino) -> MoonPolyomino:
    """Mirror left to right: column ``j`` becomes column ``m + 1 - j``."""
    m = M.m
    return MoonPolyomino(tuple((m + 1 - r.right, m + 1 - r.left) for r in M.rows))


def rotate_ccw(M: MoonPolyomino) -> MoonPolyomino:
    """Quarter turn counterclockwise; cell ``(i, j)`` goes to ``(m + 1 - j, i)``."""
    return MoonPolyomino(tuple(M.column_spans[::-1]))


def rotate_cw(M: MoonPolyomino) -> MoonPolyomino:
    """Quarter turn clockwise; cell ``(i, j)`` goes to ``(j, n + 1 - i)``."""
    n = M.n
    return MoonPolyomino(tuple((n + 1 - b, n + 1 - t) for t, b in M.column_spans))


def transpose(M: MoonPolyomino) -> MoonPolyomino:
    """Swap the roles of rows and columns; cell ``(i, j)`` goes to ``(j, i)``.

    Turns fillings with at most one 1 per column into fillings with at most
    one 1 per row.
    """
    return MoonPolyomino(M.column_spans)


# -- rearranging algorithms -----------------------------------------------------


@dataclass(frozen=True)
class Rearrangement:
    """Result of rearranging a shape.

    ``moves[k]`` is the width (or height) of the rectangle used by move ``k``:
    the first column (row) was moved to that position.  ``permutation[p]`` is
    the original index of the column (row) now sitting at position ``p + 1``.
    ``shapes`` lists every intermediate shape, starting with the input.
    """

    shape: MoonPolyomino
    moves: tuple[int, ...]
    permutation: tuple[int, ...]
    shapes: tuple[MoonPolyomino, ...]


def rearrange_left_aligned(M: MoonPolyomino) -> Rearrangement:
    """Move columns until every row starts in column 1.

    Each step takes the largest rectangle that contains the whole leftmost
    column and moves that column to the right end of the rectangle.
    """
    spans = list(M.column_spans)
    perm = list(range(1, M.m + 1))
    shape = M
    shapes = [M]
    moves = []
    limit = M.m * M.m + M.n + 1
    while not shape.is_left_aligned:
        if len(moves) > limit:
            raise RuntimeError("column rearrangement did not terminate")
        top, bottom = spans[0]
        width = min(r.right for r in shape.rows[top - 1:bottom])
        spans.insert(width - 1, spans.pop(0))
        perm.insert(width - 1, perm.pop(0))
        shape = from_column_spans(spans)
        shapes.append(shape)
        moves.append(width)
    return Rearrangement(shape, tuple(moves), tuple(perm), tuple(shapes))


def rearrange_top_aligned(M: MoonPolyomino) -> Rearrangement:
    """Move rows until every column starts in row 1.

    Same procedure as :func:`rearrange_left_aligned` applied to the shape
    turned a quarter counterclockwise, then turned back.
    """
    rotated = rearrange_left_aligned(rotate_ccw(M))
    return Rearrangement(
        shape=rotate_cw(rotated.shape),
        moves=rotated.moves,
        permutation=rotated.permutation,
        shapes=tuple(rotate_cw(s) for s in rotated.shapes),
    )


def permute_rows(M: MoonPolyomino, perm: Sequence[int]) -> MoonPolyomino:
    """Shape whose row at position ``p + 1`` is row ``perm[p]`` of ``M``."""
    return MoonPolyomino(tuple(M.rows[i - 1] for i in perm))


def permute_columns(M: MoonPolyomino, perm: Sequence[int]) -> MoonPolyomino:
    """Shape whose column at position ``p + 1`` is column ``perm[p]`` of ``M``."""
    return from_column_spans([M.column_spans[j - 1] for j in perm])

"""Coloring of a filling, the auc/buc cell statistics and the bijection to compositions.

Everything here is parametrised by a :class:`Frame`: the order in which
columns are filled, the set of left-part columns and the rectangle attached
to each column.  :func:`standard_frame` gives the usual one for a moon
polyomino; :func:`rectangle_frame` gives the left-to-right variant used on
rectangles by the involution ``rho``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CellOutsideShape, MalformedComposition, NotARectangle
from .fillings import Filling
from .polyomino import (
    Cell,
    MoonPolyomino,
    Rectangle,
    check_sums,
    classify_columns,
    column_order,
    column_rectangle,
    h_vector,
)

Composition = tuple[int, ...]
CompositionSeq = tuple[Composition, ...]


@dataclass(frozen=True)
class Frame:
    order: tuple[int, ...]
    left_part: frozenset[int]
    rectangles: tuple[Rectangle, ...]

    def rectangle(self, j: int) -> Rectangle:
        return self.rectangles[j - 1]


@lru_cache(maxsize=4096)
def standard_frame(M: MoonPolyomino) -> Frame:
    return Frame(
        order=column_order(M),
        left_part=classify_columns(M).left_part,
        rectangles=tuple(column_rectangle(M, j) for j in range(1, M.m + 1)),
    )


@lru_cache(maxsize=4096)
def rectangle_frame(M: MoonPolyomino) -> Frame:
    """Columns filled left to right, all of them in the left part."""
    if not M.is_rectangle:
        raise NotARectangle("rectangle_frame needs a rectangular shape")
    n, m = M.n, M.m
    return Frame(
        order=tuple(range(1, m + 1)),
        left_part=frozenset(range(1, m + 1)),
        rectangles=tuple(Rectangle(1, n, j, m) for j in range(1, m + 1)),
    )


def _frame(M: MoonPolyomino, frame: Frame | None) -> Frame:
    return standard_frame(M) if frame is None else frame


def coloring(F: Filling, frame: Frame | None = None) -> frozenset[Cell]:
    """Colored cells: empty rows, plus cells beside each 1 inside its column's rectangle."""
    M = F.shape
    fr = _frame(M, frame)
    colored: set[Cell] = set()
    for i, c in enumerate(F.cols, 1):
        if not c:
            r = M.rows[i - 1]
            colored.update((i, j) for j in range(r.left, r.right + 1))
    for i, c in enumerate(F.cols, 1):
        if not c:
            continue
        rect = fr.rectangle(c)
        if c in fr.left_part:
            colored.update((i, j) for j in range(c + 1, rect.right + 1))
        else:
            colored.update((i, j) for j in range(rect.left, c))
    return frozenset(colored)


def auc(ce: Cell, F: Filling, colored: frozenset[Cell] | None = None) -> int:
    """Uncolored empty cells above a 1-cell in its column (0 for an empty cell)."""
    return _count_uncolored(ce, F, colored, above=True)


def buc(ce: Cell, F: Filling, colored: frozenset[Cell] | None = None) -> int:
    """Uncolored empty cells below a 1-cell in its column (0 for an empty cell)."""
    return _count_uncolored(ce, F, colored, above=False)


def _count_uncolored(ce: Cell, F: Filling, colored, above: bool) -> int:
    i, j = ce
    if not F.shape.contains(i, j):
        raise CellOutsideShape(f"cell {ce} lies outside the shape")
    if not F.is_one(i, j):
        return 0
    if colored is None:
        colored = coloring(F)
    top, bottom = F.shape.column(j)
    rows = range(top, i) if above else range(i + 1, bottom + 1)
    return sum(1 for r in rows if (r, j) not in colored and not F.is_one(r, j))


def psi(F: Filling, frame: Frame | None = None) -> CompositionSeq:
    """Gap compositions of uncolored cells around the 1s of each column.

    A column without 1s gets the composition ``(0,)``.
    """
    M = F.shape
    colored = coloring(F, frame)
    out = []
    for j in range(1, M.m + 1):
        top, bottom = M.column(j)
        gaps = [0]
        ones = 0
        for r in range(top, bottom + 1):
            if F.is_one(r, j):
                gaps.append(0)
                ones += 1
            elif (r, j) not in colored:
                gaps[-1] += 1
        out.append(tuple(gaps) if ones else (0,))
    return tuple(out)


def check_compositions(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
                       cs: Sequence[Sequence[int]], frame: Frame | None = None) -> tuple[int, ...]:
    """Validate ``cs`` against ``(M, e, s)`` and return the h-vector."""
    fr = _frame(M, frame)
    h = h_vector(M, e, s, order=fr.order)
    if len(cs) != M.m:
        raise MalformedComposition(f"expected {M.m} compositions, got {len(cs)}")
    for j, (c, sj, hj) in enumerate(zip(cs, s, h), 1):
        if any(x < 0 for x in c):
            raise MalformedComposition(f"column {j}: negative part in {tuple(c)}")
        if sj == 0:
            if tuple(c) != (0,):
                raise MalformedComposition(f"column {j} holds no 1s, composition must be (0)")
        elif len(c) != sj + 1:
            raise MalformedComposition(f"column {j}: expected {sj + 1} parts, got {len(c)}")
        elif sum(c) != hj - sj:
            raise MalformedComposition(f"column {j}: parts sum to {sum(c)}, expected {hj - sj}")
    return h


def psi_inv(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
            cs: Sequence[Sequence[int]], frame: Frame | None = None) -> Filling:
    """The filling whose gap compositions are ``cs``.

    Columns are filled in frame order.  The available cells of a column are
    those in nonempty rows not yet used by an earlier column; the 1s are
    placed so that the gaps between them match the composition.
    """
    check_sums(M, e, s)
    fr = _frame(M, frame)
    h = check_compositions(M, e, s, cs, fr)
    cols = [0] * M.n
    for j in fr.order:
        top, bottom = M.column(j)
        avail = [r for r in range(top, bottom + 1) if e[r - 1] and not cols[r - 1]]
        if len(avail) != h[j - 1]:
            raise AssertionError(f"column {j}: {len(avail)} available cells, h = {h[j - 1]}")
        if not s[j - 1]:
            continue
        pos = -1
        for gap in cs[j - 1][:-1]:
            pos += gap + 1
            cols[avail[pos] - 1] = j
    return Filling(M, tuple(cols))


def ne_se_from_compositions(M: MoonPolyomino, e: Sequence[int], s: Sequence[int],
                            cs: Sequence[Sequence[int]], frame: Frame | None = None) -> tuple[int, int]:
    """``(ne, se)`` of the filling with compositions ``cs``, read off the partial sums."""
    fr = _frame(M, frame)
    h = check_compositions(M, e, s, cs, fr)
    ne = se = 0
    for j in range(1, M.m + 1):
        sj = s[j - 1]
        if not sj:
            continue
        slack = h[j - 1] - sj
        partial = 0
        for k in range(sj):
            partial += cs[j - 1][k]
            if j in fr.left_part:
                ne += partial
                se += slack - partial
            else:
                ne += slack - partial
                se += partial
    return ne, se

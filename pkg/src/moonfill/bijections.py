"""Bijections on fillings that carry the mixed statistics to ``(se, ne)``.

Row side: ``phi_alpha`` (first row), ``theta_r`` (rows ``r..n``) and their
composite ``Theta_alpha``.  Column side: the involution ``rho`` on
rectangles, ``phi_gamma`` (first column), ``xi_c`` (columns ``c..m``) and
``Sigma_gamma``.  Reflections give the bottom/right variants.  The row
rearrangement transport ``h_transport`` and ``lambda_alpha`` carry the
top-mixed pair across a permutation of rows.

Every map has an inverse named ``*_inverse``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .errors import IndexOutOfRange, MoonError, NoPivotFound, NotARectangle, ShapeMismatch
from .fillings import (
    Filling,
    reflect_filling_horizontal,
    reflect_filling_vertical,
)
from .kasraoui import Frame, psi, psi_inv, rectangle_frame, standard_frame
from .polyomino import (
    MoonPolyomino,
    column_order,
    h_vector,
    permute_rows,
    rearrange_top_aligned,
)


# -- sub-fillings ------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    """A sub-filling cut out of a larger filling.

    ``filling`` lives on its own shape with rows and columns renumbered from
    1; row ``i`` of the region is row ``i + row_offset`` of the host and
    column ``j`` is column ``j + col_offset``.
    """

    filling: Filling
    row_offset: int
    col_offset: int


def extract(F: Filling, rows: tuple[int, int] | None = None,
            cols: tuple[int, int] | None = None) -> Region:
    """Restrict ``F`` to rows ``rows[0]..rows[1]`` and columns ``cols[0]..cols[1]``.

    Rows of the range that miss the column range are dropped; the rest must be
    contiguous.  A row whose 1 falls outside the column range becomes empty.
    The resulting shape is validated as a moon polyomino.
    """
    M = F.shape
    r0, r1 = rows if rows is not None else (1, M.n)
    c0, c1 = cols if cols is not None else (1, M.m)
    kept = [i for i in range(r0, r1 + 1) if M.rows[i - 1].left <= c1 and M.rows[i - 1].right >= c0]
    if not kept or kept[-1] - kept[0] + 1 != len(kept):
        raise MoonError(f"rows {r0}..{r1} x columns {c0}..{c1} do not cut out a polyomino")
    lo = min(max(M.rows[i - 1].left, c0) for i in kept)
    off_c = lo - 1
    sub_rows = []
    sub_cols = []
    for i in kept:
        r = M.rows[i - 1]
        sub_rows.append((max(r.left, c0) - off_c, min(r.right, c1) - off_c))
        c = F.cols[i - 1]
        sub_cols.append(c - off_c if c and c0 <= c <= c1 else 0)
    shape = MoonPolyomino(tuple(sub_rows))
    return Region(Filling(shape, tuple(sub_cols)), kept[0] - 1, off_c)


def implant(F: Filling, region: Region, new: Filling) -> Filling:
    """Replace the part of ``F`` covered by ``region`` with ``new``.

    Rows whose 1 lies outside the region keep it; ``new`` must leave those rows
    empty.
    """
    if new.shape != region.filling.shape:
        raise MoonError("replacement filling has the wrong shape")
    cols = list(F.cols)
    for k, (old_sub, new_sub) in enumerate(zip(region.filling.cols, new.cols)):
        i = k + region.row_offset
        if old_sub:
            cols[i] = new_sub + region.col_offset if new_sub else 0
        elif new_sub:
            if cols[i]:
                raise MoonError(f"row {i + 1} would hold two 1s")
            cols[i] = new_sub + region.col_offset
    return Filling(F.shape, tuple(cols))


def _on_region(F: Filling, rows, cols, fn: Callable[[Filling], Filling]) -> Filling:
    region = extract(F, rows, cols)
    return implant(F, region, fn(region.filling))


# -- the row side ----------------------------------------------------------------


@dataclass(frozen=True)
class UpperLowerSplit:
    """Rows meeting the pivot column (the upper part) and the rest (the lower part)."""

    upper: tuple[int, ...]
    lower: tuple[int, ...]
    pivot: int


def upper_lower_split(F: Filling) -> UpperLowerSplit | None:
    """Split at the column of the 1 in the first row; ``None`` if that row is empty."""
    t = F.cols[0]
    if not t:
        return None
    _, p = F.shape.column(t)
    return UpperLowerSplit(tuple(range(1, p + 1)), tuple(range(p + 1, F.shape.n + 1)), t)


def _first_row_blocks(M: MoonPolyomino, t: int) -> tuple[int, int, int, int]:
    """``(a, b, u, v)``: columns meeting row 1, and those among them as long as column ``t``.

    ``M`` must be the upper polyomino, so column ``t`` has full height.
    """
    a, b = M.rows[0].left, M.rows[0].right
    full = [j for j in range(a, b + 1) if M.column_length(j) == M.n]
    if t not in full:
        raise AssertionError("pivot column is not of full height in the upper polyomino")
    return a, b, full[0], full[-1]


def _rewrite(cs, t: int, a: int, b: int, u: int, s: Sequence[int]):
    out = list(cs)
    for i in range(a, b + 1):
        c = cs[i - 1]
        if i == t:
            out[i - 1] = c[1:] + c[:1]
        elif (i < u or i > t) and s[i - 1]:
            if c[0] < 1:
                raise AssertionError(f"column {i}: first gap should be positive, got {c}")
            out[i - 1] = (c[0] - 1, *c[1:-1], c[-1] + 1)
    return tuple(out)


def _unrewrite(cs, t: int, a: int, b: int, u: int, s: Sequence[int]):
    """Undo :func:`_rewrite`; ``None`` when ``cs`` is not in its image."""
    out = list(cs)
    for i in range(a, b + 1):
        c = cs[i - 1]
        if i == t:
            if not s[i - 1] or c[-1] != 0:
                return None
            out[i - 1] = c[-1:] + c[:-1]
        elif (i < u or i > t) and s[i - 1]:
            if c[-1] < 1:
                return None
            out[i - 1] = (c[0] + 1, *c[1:-1], c[-1] - 1)
    return tuple(out)


def _phi_alpha_upper(U: Filling) -> Filling:
    """The map on the upper polyomino, whose first row holds a 1 in a full-height column."""
    M = U.shape
    t = U.cols[0]
    e, s = U.e, U.s
    a, b, u, _ = _first_row_blocks(M, t)
    h = h_vector(M, e, s)
    if h[t - 1] != sum(s[u - 1:t]):
        raise AssertionError(f"h'_t = {h[t - 1]} but s'_u + ... + s'_t = {sum(s[u - 1:t])}")
    cs = _rewrite(psi(U), t, a, b, u, s)
    return psi_inv(M, e, s, cs)


@lru_cache(maxsize=4096)
def phi_alpha(F: Filling) -> Filling:
    """Carry ``(alpha({1}), alpha(rest))`` to ``(se, ne)``; rows below the pivot column stay fixed."""
    split = upper_lower_split(F)
    if split is None:
        return F
    return _on_region(F, (1, split.upper[-1]), None, _phi_alpha_upper)


def _pivot_candidates(G: Filling):
    M = G.shape
    a, b = M.rows[0].left, M.rows[0].right
    for t in column_order(M):
        if not a <= t <= b:
            continue
        region = extract(G, (1, M.column(t)[1]), None)
        U = region.filling
        tt = t - region.col_offset
        if not U.s[tt - 1]:
            continue
        ua, ub, uu, _ = _first_row_blocks(U.shape, tt)
        cs = _unrewrite(psi(U), tt, ua, ub, uu, U.s)
        if cs is None:
            continue
        pre = psi_inv(U.shape, U.e, U.s, cs)
        if pre.cols[0] == tt:
            yield t, region, pre


def recover_pivot(G: Filling) -> int:
    """The pivot column used by :func:`phi_alpha` to produce ``G``.

    Candidates are the columns meeting the first row, tried in the column
    order of the shape.  A candidate is accepted when its upper polyomino's
    composition for that column ends in 0 and undoing the rewrite gives a
    filling whose first-row 1 sits in the candidate column.
    """
    if not G.cols[0]:
        raise NoPivotFound("the first row is empty; phi_alpha acts as the identity")
    for t, _, _ in _pivot_candidates(G):
        return t
    raise NoPivotFound("no column of the first row can serve as pivot")


@lru_cache(maxsize=4096)
def phi_alpha_inverse(G: Filling) -> Filling:
    if not G.cols[0]:
        return G
    for _, region, pre in _pivot_candidates(G):
        return implant(G, region, pre)
    raise NoPivotFound("no column of the first row can serve as pivot")


def _check_row(F: Filling, r: int) -> None:
    if not 1 <= r <= F.shape.n:
        raise IndexOutOfRange(f"row {r} not in 1..{F.shape.n}")


@lru_cache(maxsize=1 << 16)
def theta_r(F: Filling, r: int) -> Filling:
    """Apply :func:`phi_alpha` to rows ``r..n``; rows above ``r`` are untouched."""
    _check_row(F, r)
    return _on_region(F, (r, F.shape.n), None, phi_alpha)


@lru_cache(maxsize=1 << 16)
def theta_r_inverse(F: Filling, r: int) -> Filling:
    _check_row(F, r)
    return _on_region(F, (r, F.shape.n), None, phi_alpha_inverse)


def Theta_alpha(F: Filling, S: Iterable[int]) -> Filling:
    """Carry ``(alpha(S), alpha(complement))`` to ``(se, ne)``.

    ``theta_r`` is applied for the rows of ``S`` from the largest index down.
    """
    S = sorted(set(S))
    for r in S:
        _check_row(F, r)
    for r in reversed(S):
        F = theta_r(F, r)
    return F


def Theta_alpha_inverse(F: Filling, S: Iterable[int]) -> Filling:
    S = sorted(set(S))
    for r in S:
        _check_row(F, r)
    for r in S:
        F = theta_r_inverse(F, r)
    return F


# -- the column side ----------------------------------------------------------------


@lru_cache(maxsize=4096)
def rho(F: Filling) -> Filling:
    """Involution on a rectangle: reverse the first column's gap composition.

    Columns are filled left to right and all count as left-part columns.
    """
    M = F.shape
    if not M.is_rectangle:
        raise NotARectangle("rho is defined on rectangular shapes only")
    fr = rectangle_frame(M)
    cs = list(psi(F, fr))
    cs[0] = tuple(reversed(cs[0]))
    return psi_inv(M, F.e, F.s, cs, fr)


@dataclass(frozen=True)
class RectangleChain:
    """Rectangles ``B_1..B_k`` inside the rows meeting column 1, and their overlaps.

    ``rows`` is the row range of those rows.  ``breaks`` lists the last column
    of each run of equal-length columns.  Rectangles are given as
    ``(top, bottom, last column)``; all start in column 1.
    """

    rows: tuple[int, int]
    breaks: tuple[int, ...]
    blocks: tuple[tuple[int, int, int], ...]
    overlaps: tuple[tuple[int, int, int], ...]


def rectangle_chain(M: MoonPolyomino) -> RectangleChain:
    a, b = M.column(1)
    width = max(M.rows[i - 1].right for i in range(a, b + 1))
    spans = []
    for j in range(1, width + 1):
        hit = [i for i in range(a, b + 1) if j <= M.rows[i - 1].right]
        spans.append((hit[0], hit[-1]))
    lengths = [y - x + 1 for x, y in spans]
    breaks = tuple(j for j in range(1, width + 1) if j == width or lengths[j] != lengths[j - 1])
    blocks = tuple((*spans[j - 1], j) for j in breaks)
    overlaps = tuple((blocks[i + 1][0], blocks[i + 1][1], breaks[i]) for i in range(len(breaks) - 1))
    return RectangleChain((a, b), breaks, blocks, overlaps)


def _rho_on(F: Filling, rect: tuple[int, int, int]) -> Filling:
    top, bottom, right = rect
    return _on_region(F, (top, bottom), (1, right), rho)


@lru_cache(maxsize=4096)
def _phi_gamma_steps(M: MoonPolyomino) -> list[tuple[int, int, int]]:
    chain = rectangle_chain(M)
    k = len(chain.blocks)
    steps = [chain.blocks[k - 1]]
    for i in range(k - 2, -1, -1):
        steps.append(chain.overlaps[i])
        steps.append(chain.blocks[i])
    return steps


@lru_cache(maxsize=4096)
def phi_gamma(F: Filling) -> Filling:
    """Carry ``(gamma({1}), gamma(rest))`` to ``(se, ne)``.

    ``rho`` is applied to the last rectangle of the chain, then alternately to
    each overlap and each rectangle going back to the first.
    """
    for rect in _phi_gamma_steps(F.shape):
        F = _rho_on(F, rect)
    return F


@lru_cache(maxsize=4096)
def phi_gamma_inverse(F: Filling) -> Filling:
    for rect in reversed(_phi_gamma_steps(F.shape)):
        F = _rho_on(F, rect)
    return F


def _check_col(F: Filling, c: int) -> None:
    if not 1 <= c <= F.shape.m:
        raise IndexOutOfRange(f"column {c} not in 1..{F.shape.m}")


@lru_cache(maxsize=1 << 16)
def xi_c(F: Filling, c: int) -> Filling:
    """Apply :func:`phi_gamma` to columns ``c..m``; columns left of ``c`` are untouched."""
    _check_col(F, c)
    return _on_region(F, None, (c, F.shape.m), phi_gamma)


@lru_cache(maxsize=1 << 16)
def xi_c_inverse(F: Filling, c: int) -> Filling:
    _check_col(F, c)
    return _on_region(F, None, (c, F.shape.m), phi_gamma_inverse)


def Sigma_gamma(F: Filling, T: Iterable[int]) -> Filling:
    """Carry ``(gamma(T), gamma(complement))`` to ``(se, ne)``, largest column first."""
    T = sorted(set(T))
    for c in T:
        _check_col(F, c)
    for c in reversed(T):
        F = xi_c(F, c)
    return F


def Sigma_gamma_inverse(F: Filling, T: Iterable[int]) -> Filling:
    T = sorted(set(T))
    for c in T:
        _check_col(F, c)
    for c in T:
        F = xi_c_inverse(F, c)
    return F


# -- reflected variants --------------------------------------------------------------


def beta_variant(F: Filling, S: Iterable[int]) -> Filling:
    """Carry ``(beta(S), beta(complement))`` to ``(se, ne)`` on the same shape."""
    n = F.shape.n
    S = {n + 1 - i for i in S}
    return reflect_filling_horizontal(Theta_alpha(reflect_filling_horizontal(F), S))


def beta_variant_inverse(F: Filling, S: Iterable[int]) -> Filling:
    n = F.shape.n
    S = {n + 1 - i for i in S}
    return reflect_filling_horizontal(Theta_alpha_inverse(reflect_filling_horizontal(F), S))


def delta_variant(F: Filling, T: Iterable[int]) -> Filling:
    """Carry ``(delta(T), delta(complement))`` to ``(se, ne)`` on the same shape."""
    m = F.shape.m
    T = {m + 1 - j for j in T}
    return reflect_filling_vertical(Sigma_gamma(reflect_filling_vertical(F), T))


def delta_variant_inverse(F: Filling, T: Iterable[int]) -> Filling:
    m = F.shape.m
    T = {m + 1 - j for j in T}
    return reflect_filling_vertical(Sigma_gamma_inverse(reflect_filling_vertical(F), T))


# -- row rearrangement -------------------------------------------------------------------


def _move_rows(cols: list[int], d: int) -> list[int]:
    return cols[1:d] + cols[:1] + cols[d:]


def _h_step(F: Filling, d: int, new_shape: MoonPolyomino) -> Filling:
    """Move the first row to the bottom of the ``d``-row rectangle below it."""
    r1 = F.shape.rows[0]
    cols = list(F.cols)
    moved = _move_rows(cols, d)
    if cols[0]:
        inside = [i for i in range(d) if cols[i] and r1.left <= cols[i] <= r1.right]
        contents = [cols[i] for i in inside]
        inside_after = [i for i in range(d) if moved[i] and r1.left <= moved[i] <= r1.right]
        for i, c in zip(inside_after, contents):
            moved[i] = c
    return Filling(new_shape, tuple(moved))


def _h_step_inverse(G: Filling, d: int, old_shape: MoonPolyomino) -> Filling:
    r1 = old_shape.rows[0]
    cols = list(G.cols)
    back = cols[d - 1:d] + cols[:d - 1] + cols[d:]
    if cols[d - 1]:
        inside = [i for i in range(d) if cols[i] and r1.left <= cols[i] <= r1.right]
        contents = [cols[i] for i in inside]
        inside_before = [i for i in range(d) if back[i] and r1.left <= back[i] <= r1.right]
        for i, c in zip(inside_before, contents):
            back[i] = c
    return Filling(old_shape, tuple(back))


def h_transport(F: Filling) -> Filling:
    """Carry ``F`` to the top-aligned rearrangement of its shape, keeping ``(se, ne)``.

    Follows the row moves of :func:`~moonfill.polyomino.rearrange_top_aligned`.
    An empty moving row just travels with its row.  Otherwise rows that are
    empty inside the rectangle keep their place in the row order, and the
    1-pattern of the remaining rows is copied over row by row in order.
    """
    plan = rearrange_top_aligned(F.shape)
    for d, new_shape in zip(plan.moves, plan.shapes[1:]):
        F = _h_step(F, d, new_shape)
    return F


def h_transport_inverse(G: Filling, shape: MoonPolyomino) -> Filling:
    """Undo :func:`h_transport` for a filling that came from ``shape``."""
    plan = rearrange_top_aligned(shape)
    if G.shape != plan.shape:
        raise ShapeMismatch("filling does not live on the top-aligned rearrangement of the shape")
    for d, old_shape in zip(reversed(plan.moves), reversed(plan.shapes[:-1])):
        G = _h_step_inverse(G, d, old_shape)
    return G


def lambda_alpha(F: Filling, S: Iterable[int], target: MoonPolyomino) -> Filling:
    """Carry ``F`` to ``target`` (a row permutation of its shape), keeping the top-mixed pair."""
    S = set(S)
    if sorted(F.shape.row_lengths) != sorted(target.row_lengths) or \
            rearrange_top_aligned(F.shape).shape != rearrange_top_aligned(target).shape:
        raise ShapeMismatch("target is not a row permutation of the filling's shape")
    G = h_transport(Theta_alpha(F, S))
    return Theta_alpha_inverse(h_transport_inverse(G, target), S)


def lambda_alpha_inverse(F: Filling, S: Iterable[int], source: MoonPolyomino) -> Filling:
    return lambda_alpha(F, S, source)


def row_permuted_shape(M: MoonPolyomino, perm: Sequence[int]) -> MoonPolyomino:
    return permute_rows(M, perm)

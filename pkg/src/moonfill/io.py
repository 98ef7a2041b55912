"""Plain-text formats for shapes, fillings, composition sequences, words and matchings.

Every format ignores blank lines and ``#`` comments unless a comment is a
recognised header.  Writers produce the canonical form that readers accept,
so write(read(text)) is stable.
"""
from __future__ import annotations

from typing import Sequence

from .classical import Matching
from .errors import FormatError, MalformedComposition
from .fillings import Filling
from .polyomino import MoonPolyomino


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(line: str, no: int, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in line.split()]
    except ValueError:
        raise FormatError(f"line {no}: expected integers, got {line!r}") from None
    if count is not None and len(vals) != count:
        raise FormatError(f"line {no}: expected {count} integers, got {len(vals)}")
    return vals


def parse_shape(text: str) -> MoonPolyomino:
    """One ``<left> <right>`` pair per row, top row first."""
    rows = [tuple(_ints(line, no, 2)) for no, line in _lines(text)]
    return MoonPolyomino(tuple(rows))


def format_shape(M: MoonPolyomino) -> str:
    return "".join(f"{r.left} {r.right}\n" for r in M.rows)


def parse_filling(text: str, shape: MoonPolyomino) -> Filling:
    """One ``<row> <col>`` pair per 1-cell."""
    cells = [tuple(_ints(line, no, 2)) for no, line in _lines(text)]
    return Filling.from_cells(shape, cells)


def format_filling(F: Filling) -> str:
    return "".join(f"{i} {j}\n" for i, j in sorted(F.ones))


def parse_int_list(text: str) -> tuple[int, ...]:
    """``1,0,2`` or ``1 0 2``; the empty string gives the empty tuple."""
    parts = text.replace(",", " ").split()
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise FormatError(f"expected a list of integers, got {text!r}") from None


def format_compositions(cs: Sequence[Sequence[int]], e: Sequence[int]) -> str:
    """``# e: ...`` header then ``<column>: c1 c2 ...`` per column."""
    out = ["# e: " + " ".join(map(str, e))]
    out += [f"{j}: " + " ".join(map(str, c)) for j, c in enumerate(cs, 1)]
    return "\n".join(out) + "\n"


def parse_compositions(text: str) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Returns ``(e, compositions)``.  Column numbers must run 1, 2, ... in order."""
    e = None
    cs = []
    for no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped.startswith("# e:"):
            e = parse_int_list(stripped[4:])
            continue
        line = stripped.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"line {no}: expected '<column>: parts'")
        idx = _ints(head, no, 1)[0]
        if idx != len(cs) + 1:
            raise MalformedComposition(f"line {no}: expected column {len(cs) + 1}, got {idx}")
        parts = tuple(_ints(rest, no))
        if not parts:
            raise MalformedComposition(f"line {no}: empty composition")
        cs.append(parts)
    if e is None:
        raise FormatError("missing '# e:' header")
    return e, tuple(cs)


def column_sums_from_compositions(cs: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(len(c) - 1 for c in cs)


def parse_word(text: str) -> tuple[int, ...]:
    return tuple(x for no, line in _lines(text) for x in _ints(line, no))


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w)) + "\n"


def parse_matching(text: str) -> Matching:
    return Matching(tuple(tuple(_ints(line, no, 2)) for no, line in _lines(text)))


def format_matching(pi: Matching) -> str:
    return "".join(f"{a} {b}\n" for a, b in pi.arcs)

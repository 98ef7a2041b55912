"""Worked shapes and fillings, and a seeded generator of random instances."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .fillings import Filling, enumerate_fillings
from .polyomino import MoonPolyomino

DEFAULT_SEED = 20100101


@dataclass(frozen=True)
class Instance:
    shape: MoonPolyomino
    e: tuple[int, ...]
    s: tuple[int, ...]
    filling: Filling | None = None


def example_shape() -> MoonPolyomino:
    """Seven rows, six columns, pivot in column 2."""
    return MoonPolyomino(((2, 3), (1, 4), (1, 5), (1, 6), (1, 6), (1, 6), (2, 3)))


def example_filling() -> Filling:
    return Filling.from_cells(example_shape(), [(1, 3), (2, 4), (4, 5), (5, 1), (6, 3), (7, 2)])


def example_instance() -> Instance:
    F = example_filling()
    return Instance(F.shape, F.e, F.s, F)


def chain_shape() -> MoonPolyomino:
    """A shape whose first column meets rows 2..6 and gives a chain of three rectangles."""
    return MoonPolyomino(((2, 3), (1, 3), (1, 5), (1, 6), (1, 6), (1, 5), (3, 3)))


def chain_filling() -> Filling:
    return Filling(chain_shape(), (2, 3, 1, 3, 6, 4, 3))


def chain_filling_image() -> Filling:
    """Image of :func:`chain_filling` under ``phi_gamma``."""
    return Filling(chain_shape(), (2, 3, 1, 4, 6, 3, 3))


def unaligned_shape() -> MoonPolyomino:
    """A shape needing three column moves to become left-aligned."""
    return MoonPolyomino(((4, 5), (3, 5), (2, 5), (1, 6), (1, 7), (1, 7), (3, 5)))


def unaligned_left_aligned() -> MoonPolyomino:
    return MoonPolyomino(((1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (1, 7), (1, 3)))


def fixture_shapes() -> dict[str, MoonPolyomino]:
    return {
        "example": example_shape(),
        "chain": chain_shape(),
        "rect3x3": MoonPolyomino(((1, 3),) * 3),
        "staircase": MoonPolyomino(((1, 4), (1, 3), (1, 2), (1, 1))),
        "diamond": MoonPolyomino(((2, 2), (1, 3), (1, 3), (2, 2))),
    }


def random_moon(rng: random.Random, max_rows: int = 5, max_cols: int = 5) -> MoonPolyomino:
    """A random moon polyomino with at most ``max_rows`` rows and ``max_cols`` columns.

    A chain of nested intervals is drawn by shrinking ``[1, m]`` step by step;
    each interval is then placed above or below the ones already placed, so
    row lengths rise and then fall.
    """
    n = rng.randint((max_rows + 1) // 2, max_rows)
    m = rng.randint((max_cols + 1) // 2, max_cols)
    chain = [(1, m)]
    for _ in range(n - 1):
        a, b = chain[-1]
        if b > a and rng.random() < 0.5:
            if rng.random() < 0.5:
                a += rng.randint(1, max(1, (b - a) // 2))
            else:
                b -= rng.randint(1, max(1, (b - a) // 2))
        chain.append((a, b))
    rows = [chain[0]]
    for iv in chain[1:]:
        if rng.random() < 0.5:
            rows.insert(0, iv)
        else:
            rows.append(iv)
    return MoonPolyomino(tuple(rows))


def random_filling(rng: random.Random, M: MoonPolyomino, density: float = 0.8) -> Filling:
    cols = []
    for r in M.rows:
        cols.append(rng.randint(r.left, r.right) if rng.random() < density else 0)
    return Filling(M, tuple(cols))


def random_instance(rng: random.Random, max_rows: int = 5, max_cols: int = 5, tries: int = 6) -> Instance:
    """Random shape with feasible sums read off a random filling.

    Of ``tries`` random fillings, the one whose ``(e, s)`` class is largest is
    kept, which steers away from classes with a single filling.
    """
    M = random_moon(rng, max_rows, max_cols)
    best, best_count = None, -1
    for _ in range(tries):
        F = random_filling(rng, M)
        count = sum(1 for _ in enumerate_fillings(M, F.e, F.s))
        if count > best_count:
            best, best_count = F, count
    return Instance(M, best.e, best.s, best)


def random_instances(seed: int, count: int, max_rows: int = 5, max_cols: int = 5) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, max_rows, max_cols) for _ in range(count)]

import pytest
from hypothesis import settings, strategies as st

from moonfill.fillings import Filling
from moonfill.fixtures import chain_filling, example_filling
from moonfill.polyomino import MoonPolyomino

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def moons(draw, max_rows=4, max_cols=4):
    """Moon polyominoes built from a chain of nested intervals placed above or below."""
    n = draw(st.integers(1, max_rows))
    m = draw(st.integers(1, max_cols))
    chain = [(1, m)]
    for _ in range(n - 1):
        a, b = chain[-1]
        a2 = draw(st.integers(a, b))
        b2 = draw(st.integers(a2, b))
        chain.append((a2, b2))
    rows = [chain[0]]
    for iv in chain[1:]:
        if draw(st.booleans()):
            rows.insert(0, iv)
        else:
            rows.append(iv)
    return MoonPolyomino(tuple(rows))


@st.composite
def fillings(draw, max_rows=4, max_cols=4):
    M = draw(moons(max_rows, max_cols))
    cols = [draw(st.sampled_from([0, *range(r.left, r.right + 1)])) for r in M.rows]
    return Filling(M, tuple(cols))


@pytest.fixture
def example():
    return example_filling()


@pytest.fixture
def chain_example():
    return chain_filling()

import pytest
from hypothesis import given

from moonfill.errors import CellOutsideShape, InfeasibleSums, MalformedComposition, NotARectangle
from moonfill.fillings import enumerate_fillings, fillings_by_sums, ne_count, se_count
from moonfill.kasraoui import (
    auc,
    buc,
    check_compositions,
    coloring,
    ne_se_from_compositions,
    psi,
    psi_inv,
    rectangle_frame,
    standard_frame,
)
from moonfill.polyomino import MoonPolyomino, h_vector, rectangle_shape

from conftest import fillings

EXAMPLE_COMPOSITIONS = ((1, 1), (0, 0), (0, 0, 1), (0, 1), (0, 2), (0,))


def test_example_coloring(example):
    want = {(1, 2), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5),
            (4, 1), (4, 2), (4, 3), (4, 4), (5, 2), (5, 3), (5, 4), (6, 2)}
    assert coloring(example) == want


def test_example_uncolored_counts(example):
    assert (auc((5, 1), example), buc((5, 1), example)) == (1, 1)
    assert (auc((4, 5), example), buc((4, 5), example)) == (0, 2)
    assert (auc((7, 2), example), buc((7, 2), example)) == (0, 0)
    assert auc((1, 2), example) == 0
    with pytest.raises(CellOutsideShape):
        auc((1, 1), example)


def test_example_compositions(example):
    assert psi(example) == EXAMPLE_COMPOSITIONS
    assert psi_inv(example.shape, example.e, example.s, EXAMPLE_COMPOSITIONS) == example
    assert ne_se_from_compositions(example.shape, example.e, example.s, EXAMPLE_COMPOSITIONS) == (6, 1)


def test_psi_is_bijective_on_example_class(example):
    M, e, s = example.shape, example.e, example.s
    fills = list(enumerate_fillings(M, e, s))
    images = {psi(F) for F in fills}
    assert len(images) == len(fills)
    for F in fills:
        cs = psi(F)
        assert psi_inv(M, e, s, cs) == F
        assert ne_se_from_compositions(M, e, s, cs) == (ne_count(F), se_count(F))


@given(fillings(max_rows=5, max_cols=5))
def test_psi_round_trip(F):
    M, e, s = F.shape, F.e, F.s
    frames = [standard_frame(M)] + ([rectangle_frame(M)] if M.is_rectangle else [])
    for frame in frames:
        cs = psi(F, frame)
        h = check_compositions(M, e, s, cs, frame)
        for c, sj, hj in zip(cs, s, h):
            assert len(c) == (sj + 1 if sj else 1)
            assert sum(c) == (hj - sj if sj else 0)
        assert psi_inv(M, e, s, cs, frame) == F
        assert ne_se_from_compositions(M, e, s, cs, frame) == (ne_count(F), se_count(F))


def test_every_class_of_small_rectangle():
    M = rectangle_shape(3, 3)
    for (e, s), group in fillings_by_sums(M).items():
        assert len({psi(F) for F in group}) == len(group)
        assert all(psi_inv(M, e, s, psi(F)) == F for F in group)


def test_rectangle_frame_fills_left_to_right():
    M = rectangle_shape(2, 3)
    fr = rectangle_frame(M)
    assert fr.order == (1, 2, 3)
    assert fr.left_part == {1, 2, 3}
    assert h_vector(M, (1, 1), (1, 0, 1), order=fr.order) == (2, 1, 1)
    with pytest.raises(NotARectangle):
        rectangle_frame(MoonPolyomino(((1, 2), (1, 1))))


@pytest.mark.parametrize("cs", [
    ((1, 1), (0, 0), (0, 0, 1), (0, 1), (0, 2)),
    ((1, 1), (0, 0), (0, 1), (0, 1), (0, 2), (0,)),
    ((1, 1), (0, 0), (0, 0, 1), (0, 1), (0, 2), (1,)),
    ((1, 0), (0, 0), (0, 0, 1), (0, 1), (0, 2), (0,)),
    ((-1, 3), (0, 0), (0, 0, 1), (0, 1), (0, 2), (0,)),
])
def test_malformed_compositions(example, cs):
    with pytest.raises(MalformedComposition):
        psi_inv(example.shape, example.e, example.s, cs)


def test_psi_inv_rejects_bad_sums(example):
    with pytest.raises(InfeasibleSums):
        psi_inv(example.shape, example.e, (0,) * 6, EXAMPLE_COMPOSITIONS)

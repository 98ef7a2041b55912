import itertools

import pytest
from hypothesis import given

from moonfill.bijections import (
    Sigma_gamma,
    Sigma_gamma_inverse,
    Theta_alpha,
    Theta_alpha_inverse,
    beta_variant,
    beta_variant_inverse,
    delta_variant,
    delta_variant_inverse,
    extract,
    h_transport,
    h_transport_inverse,
    implant,
    lambda_alpha,
    lambda_alpha_inverse,
    phi_alpha,
    phi_alpha_inverse,
    phi_gamma,
    phi_gamma_inverse,
    recover_pivot,
    rectangle_chain,
    rho,
    row_permuted_shape,
    theta_r,
    theta_r_inverse,
    upper_lower_split,
    xi_c,
    xi_c_inverse,
)
from moonfill.errors import IndexOutOfRange, NoPivotFound, NotARectangle, ShapeMismatch
from moonfill.fillings import (
    Filling,
    enumerate_fillings,
    fillings_by_sums,
    mixed_pair,
    ne_count,
    se_count,
)
from moonfill.fixtures import chain_filling_image, chain_shape, example_shape
from moonfill.kasraoui import psi, rectangle_frame
from moonfill.polyomino import MoonPolyomino, rearrange_top_aligned, rectangle_shape

from conftest import fillings

SMALL_SHAPES = [
    rectangle_shape(3, 3),
    MoonPolyomino(((1, 2), (1, 3), (1, 3), (2, 2))),
    MoonPolyomino(((2, 2), (1, 3), (1, 4), (2, 3))),
]


def sene(G):
    return se_count(G), ne_count(G)


def subsets(k):
    return [set(c) for r in range(k + 1) for c in itertools.combinations(range(1, k + 1), r)]


def assert_bijection(fills, fwd, inv):
    images = [fwd(F) for F in fills]
    assert sorted(G.cols for G in images) == sorted(F.cols for F in fills)
    for F, G in zip(fills, images):
        assert inv(G) == F


def test_region_round_trip(example):
    reg = extract(example, (2, 6), (1, 4))
    assert reg.filling.shape.n == 5
    assert implant(example, reg, reg.filling) == example


def test_upper_lower_split(example):
    split = upper_lower_split(example)
    assert split.pivot == 3
    assert split.upper == tuple(range(1, 8))
    assert upper_lower_split(Filling.empty(example.shape)) is None


def test_phi_alpha_on_example(example):
    G = phi_alpha(example)
    assert G.cols == (3, 4, 0, 5, 1, 2, 3)
    assert recover_pivot(G) == 3
    assert phi_alpha_inverse(G) == example


def test_phi_alpha_on_example_class(example):
    fills = list(enumerate_fillings(example.shape, example.e, example.s))
    assert_bijection(fills, phi_alpha, phi_alpha_inverse)
    for F in fills:
        G = phi_alpha(F)
        assert sene(G) == mixed_pair(F, "top", {1})


def test_theta_and_Theta_on_example_class(example):
    M = example.shape
    fills = list(enumerate_fillings(M, example.e, example.s))
    for r in range(1, M.n + 1):
        assert_bijection(fills, lambda F: theta_r(F, r), lambda G: theta_r_inverse(G, r))
    for S in [{2, 4}, {1, 7}, set(range(1, 8)), set()]:
        assert_bijection(fills, lambda F: Theta_alpha(F, S), lambda G: Theta_alpha_inverse(G, S))
        for F in fills:
            G = Theta_alpha(F, S)
            assert sene(G) == mixed_pair(F, "top", S)


def test_theta_transport_identity(example):
    fills = list(enumerate_fillings(example.shape, example.e, example.s))
    for F in fills[:20]:
        for r in range(2, 8):
            for S in subsets(r - 1)[:8]:
                assert mixed_pair(F, "top", S | {r}) == mixed_pair(theta_r(F, r), "top", S)


def test_beta_on_example_class(example):
    fills = list(enumerate_fillings(example.shape, example.e, example.s))
    S = {2, 4}
    assert_bijection(fills, lambda F: beta_variant(F, S), lambda G: beta_variant_inverse(G, S))
    for F in fills:
        G = beta_variant(F, S)
        assert sene(G) == mixed_pair(F, "bottom", S)


def test_rho_is_an_involution_on_small_rectangles():
    for n, m in [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)]:
        M = rectangle_shape(n, m)
        for group in fillings_by_sums(M).values():
            for F in group:
                G = rho(F)
                assert rho(G) == F
                assert sene(G) == mixed_pair(F, "left", {1})
            assert sorted(rho(F).cols for F in group) == sorted(F.cols for F in group)


def test_rho_reverses_first_composition():
    M = rectangle_shape(3, 2)
    F = Filling(M, (2, 0, 1))
    fr = rectangle_frame(M)
    assert psi(rho(F), fr)[0] == tuple(reversed(psi(F, fr)[0]))


def test_rho_needs_rectangle(example):
    with pytest.raises(NotARectangle):
        rho(example)


def test_rectangle_chain_of_worked_example():
    ch = rectangle_chain(chain_shape())
    assert ch.rows == (2, 6)
    assert ch.breaks == (3, 5, 6)
    assert ch.blocks == ((2, 6, 3), (3, 6, 5), (4, 5, 6))
    assert ch.overlaps == ((3, 6, 3), (4, 5, 5))


def test_phi_gamma_worked_example(chain_example):
    G = phi_gamma(chain_example)
    assert G == chain_filling_image()
    assert phi_gamma_inverse(G) == chain_example
    assert sene(G) == mixed_pair(chain_example, "left", {1})


@pytest.mark.parametrize("M", SMALL_SHAPES)
def test_column_side_on_every_class(M):
    for (e, s), group in fillings_by_sums(M).items():
        assert_bijection(group, phi_gamma, phi_gamma_inverse)
        for c in range(1, M.m + 1):
            assert_bijection(group, lambda F: xi_c(F, c), lambda G: xi_c_inverse(G, c))
        for T in subsets(M.m):
            assert_bijection(group, lambda F: Sigma_gamma(F, T), lambda G: Sigma_gamma_inverse(G, T))
            assert_bijection(group, lambda F: delta_variant(F, T), lambda G: delta_variant_inverse(G, T))
            for F in group:
                G = Sigma_gamma(F, T)
                assert sene(G) == mixed_pair(F, "left", T)
                D = delta_variant(F, T)
                assert sene(D) == mixed_pair(F, "right", T)


@given(fillings(max_rows=5, max_cols=5))
def test_row_side_pointwise(F):
    n = F.shape.n
    for S in [set(), {1}, set(range(1, n + 1, 2)), set(range(1, n + 1))]:
        G = Theta_alpha(F, S)
        assert G.e == F.e and G.s == F.s
        assert sene(G) == mixed_pair(F, "top", S)
        assert Theta_alpha_inverse(G, S) == F
        B = beta_variant(F, S)
        assert sene(B) == mixed_pair(F, "bottom", S)
        assert beta_variant_inverse(B, S) == F


@given(fillings(max_rows=5, max_cols=5))
def test_column_side_pointwise(F):
    m = F.shape.m
    for T in [set(), {1}, set(range(2, m + 1, 2)), set(range(1, m + 1))]:
        G = Sigma_gamma(F, T)
        assert G.e == F.e and G.s == F.s
        assert sene(G) == mixed_pair(F, "left", T)
        assert Sigma_gamma_inverse(G, T) == F
        D = delta_variant(F, T)
        assert sene(D) == mixed_pair(F, "right", T)
        assert delta_variant_inverse(D, T) == F


def test_index_errors(example):
    with pytest.raises(IndexOutOfRange):
        theta_r(example, 8)
    with pytest.raises(IndexOutOfRange):
        xi_c(example, 0)
    with pytest.raises(IndexOutOfRange):
        Theta_alpha(example, {9})


def test_no_pivot_on_empty_first_row():
    M = MoonPolyomino(((1, 2), (1, 2)))
    with pytest.raises(NoPivotFound):
        recover_pivot(Filling(M, (0, 1)))


def test_h_transport_on_example_class(example):
    M = example.shape
    fills = list(enumerate_fillings(M, example.e, example.s))
    target = rearrange_top_aligned(M).shape
    images = [h_transport(F) for F in fills]
    assert all(G.shape == target for G in images)
    assert len(set(images)) == len(fills)
    for F, G in zip(fills, images):
        assert (ne_count(G), se_count(G)) == (ne_count(F), se_count(F))
        assert h_transport_inverse(G, M) == F
    assert h_transport(example).cols == (5, 4, 1, 0, 3, 3, 2)


@given(fillings(max_rows=5, max_cols=5))
def test_h_transport_preserves_ne_se(F):
    G = h_transport(F)
    assert G.shape.is_top_aligned
    assert (ne_count(G), se_count(G)) == (ne_count(F), se_count(F))
    assert h_transport_inverse(G, F.shape) == F


def test_lambda_alpha_moves_between_row_permutations(example):
    M = example.shape
    target = row_permuted_shape(M, (7, 1, 2, 3, 4, 5, 6))
    S = {2, 4}
    fills = list(enumerate_fillings(M, example.e, example.s))
    images = [lambda_alpha(F, S, target) for F in fills]
    assert len(set(images)) == len(fills)
    for F, G in zip(fills, images):
        assert G.shape == target
        assert mixed_pair(G, "top", S) == mixed_pair(F, "top", S)
        assert lambda_alpha_inverse(G, S, M) == F


def test_lambda_alpha_rejects_other_shapes(example):
    with pytest.raises(ShapeMismatch):
        lambda_alpha(example, {1}, rectangle_shape(7, 6))
    assert example_shape() == example.shape

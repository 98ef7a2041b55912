"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import itertools
import time
from collections import Counter

import pytest

from moonfill import bijections as bj
from moonfill import classical as cl
from moonfill.fillings import (
    Filling,
    distribution,
    enumerate_fillings,
    fillings_by_sums,
    mixed_pair,
    ne_count,
    se_count,
    se_ne_distribution,
)
from moonfill.fixtures import (
    DEFAULT_SEED,
    Instance,
    chain_filling,
    chain_filling_image,
    example_filling,
    fixture_shapes,
    random_instances,
)
from moonfill.kasraoui import auc, buc, coloring
from moonfill.pq import BivarPoly, pq_binomial, pq_integer, pq_multinomial, product_formula
from moonfill.verify import (
    default_instances,
    suite_h_transport,
    suite_invariance,
    suite_psi,
    suite_rho,
    suite_sigma,
    suite_theta,
)

SMALL_FIXTURES = ("rect3x3", "staircase", "diamond")


@pytest.fixture
def verdict(capsys):
    def report(number, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
        assert ok, detail
    return report


def fixture_instances():
    """The fixture instances plus every (e, s) class of the small fixture shapes."""
    out = list(default_instances())
    shapes = fixture_shapes()
    for name in SMALL_FIXTURES:
        M = shapes[name]
        out += [Instance(M, e, s) for e, s in sorted(fillings_by_sums(M))]
    return out


def failed(*suites):
    return [f"{r.theorem}: {c.name}" for r in suites for c in r.checks if not c.passed]


def test_criterion_1_golden_statistics(verdict):
    base = example_filling()
    want = (6, 1, (5, 2), (1, 6), (4, 3), (2, 5))

    def compute():
        F = Filling(base.shape, base.cols)
        return (ne_count(F), se_count(F), mixed_pair(F, "top", {2, 4}), mixed_pair(F, "bottom", {2, 4}),
                mixed_pair(F, "left", {1, 3}), mixed_pair(F, "right", {1, 3}))

    got = compute()
    best = float("inf")
    for _ in range(25):
        t0 = time.perf_counter()
        compute()
        best = min(best, time.perf_counter() - t0)
    ok = got == want and best < 1e-3
    verdict(1, ok, f"ne, se and the four mixed pairs {got} in {best * 1e3:.3f} ms")


def test_criterion_2_coloring_and_uncolored_counts(verdict):
    F = example_filling()
    shaded = {(3, 1), (4, 1), (1, 2), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (2, 3), (3, 3),
              (4, 3), (5, 3), (3, 4), (4, 4), (5, 4), (3, 5)}
    one_in_col_1 = next(c for c in F.ones if c[1] == 1)
    one_in_col_5 = next(c for c in F.ones if c[1] == 5)
    counts = ((auc(one_in_col_1, F), buc(one_in_col_1, F)), (auc(one_in_col_5, F), buc(one_in_col_5, F)))
    ok = counts == ((1, 1), (0, 2)) and coloring(F) == shaded
    verdict(2, ok, f"auc/buc {counts}, coloring has {len(coloring(F))} cells matching the reference set")


def test_criterion_3_all_subset_distributions(verdict):
    F = example_filling()
    M, e, s = F.shape, F.e, F.s
    t0 = time.perf_counter()
    oracle = BivarPoly.from_pairs(Counter((se_count(G), ne_count(G)) for G in enumerate_fillings(M, e, s)))
    closed = product_formula(M, e, s)
    bad = []
    count = 0
    for side, size in (("top", M.n), ("bottom", M.n), ("left", M.m), ("right", M.m)):
        for r in range(size + 1):
            for A in itertools.combinations(range(1, size + 1), r):
                poly = distribution(M, e, s, side, A)
                count += 1
                if poly != oracle or not poly.is_symmetric():
                    bad.append((side, A))
    elapsed = time.perf_counter() - t0
    ok = not bad and oracle == closed == se_ne_distribution(M, e, s) and count == 2 * 128 + 2 * 64 and elapsed < 10
    verdict(3, ok, f"{count} distributions equal and symmetric, {len(bad)} mismatches, {elapsed:.2f} s")


def test_criterion_4_product_formula_on_random_shapes(verdict):
    t0 = time.perf_counter()
    insts = random_instances(DEFAULT_SEED, 24, max_rows=5, max_cols=5)
    bad = []
    for inst in insts:
        assert inst.shape.n <= 5 and inst.shape.m <= 5
        if se_ne_distribution(inst.shape, inst.e, inst.s) != product_formula(inst.shape, inst.e, inst.s):
            bad.append(inst)
    elapsed = time.perf_counter() - t0
    fills = sum(len(list(enumerate_fillings(i.shape, i.e, i.s))) for i in insts)
    ok = len(insts) >= 20 and not bad and elapsed < 30
    verdict(4, ok, f"{len(insts)} random shapes ({fills} fillings), {len(bad)} mismatches, {elapsed:.2f} s")


def test_criterion_5_psi(verdict):
    insts = fixture_instances()
    t0 = time.perf_counter()
    res = suite_psi(insts)
    elapsed = time.perf_counter() - t0
    cases = sum(c.cases for c in res.checks if c.name == "psi_inv(psi(F)) = F")
    bad = failed(res)
    ok = not bad and len(res.checks) == 5 and elapsed < 10
    verdict(5, ok, f"{len(insts)} classes, {cases} fillings, failures {bad}, {elapsed:.2f} s")


def test_criterion_6_bijections_pointwise(verdict):
    insts = fixture_instances()
    theta, sigma, rho = suite_theta(insts), suite_sigma(insts), suite_rho(insts)
    bad = failed(theta, sigma, rho)
    G = chain_filling()
    worked = bj.phi_gamma(G) == chain_filling_image() and bj.phi_gamma_inverse(chain_filling_image()) == G
    names = {c.name for r in (theta, sigma, rho) for c in r.checks}
    covered = all(any(n.startswith(p) for n in names) for p in (
        "phi_alpha", "theta_r", "Theta_alpha", "beta variant", "phi_gamma", "xi_c", "Sigma_gamma",
        "delta variant", "rho is an involution", "rho permutes"))
    ok = not bad and worked and covered
    verdict(6, ok, f"{len(names)} checks over {len(insts)} classes, failures {bad}, worked example {worked}")


def test_criterion_7_invariance(verdict):
    insts = fixture_instances()
    h, inv = suite_h_transport(insts), suite_invariance(insts)
    bad = failed(h, inv)
    names = {c.name for c in inv.checks}
    ok = not bad and {"lambda_alpha keeps the row-mixed pair", "column permutation keeps every distribution"} <= names
    verdict(7, ok, f"h-transport and invariance over {len(insts)} classes, failures {bad}")


def test_criterion_8_words(verdict):
    W = (1, 1, 2, 3)
    want = pq_multinomial(4, (2, 1, 1))
    words = cl.rearrangements(W)
    bad = []
    for kind, size in (("alpha", 4), ("beta", 4), ("gamma", 3), ("delta", 3)):
        for r in range(size + 1):
            for A in itertools.combinations(range(1, size + 1), r):
                if cl.word_distribution(W, kind, A) != want:
                    bad.append((kind, A))
    binom = cl.inversion_distribution((1, 1, 2, 2))
    expected = BivarPoly({(4, 0): 1, (3, 1): 1, (2, 2): 2, (1, 3): 1, (0, 4): 1})
    ok = len(words) == 12 and not bad and binom == expected == pq_binomial(4, 2)
    verdict(8, ok, f"{len(words)} rearrangements, {len(bad)} subset mismatches, [4 choose 2] = {binom.to_text()}")


def test_criterion_9_matchings(verdict):
    bad_dist, bad_zero, classes = [], [], 0
    for n in range(1, 5):
        for A, B in cl.endpoint_classes(n):
            classes += 1
            want = BivarPoly.constant(1)
            for h in cl.matching_h_vector(A, B):
                want = want * pq_integer(h)
            ms = list(cl.enumerate_matchings(A, B))
            for r in range(n + 1):
                for S in itertools.combinations(A, r):
                    if cl.matching_distribution(A, B, S) != want:
                        bad_dist.append((A, B, S))
                    if sum(1 for pi in ms if cl.mixed_alpha_matching(pi, S) == 0) != 1:
                        bad_zero.append((A, B, S))
    totals = []
    for n in range(1, 6):
        counts = {cl.alpha_zero_count(n, rows)
                  for r in range(n + 1) for rows in itertools.combinations(range(1, n + 1), r)}
        totals.append(counts == {cl.catalan(n)} and cl.catalan(n) == cl.catalan_by_recurrence(n))
    ok = not bad_dist and not bad_zero and all(totals)
    verdict(9, ok, f"{classes} endpoint classes, {len(bad_dist)} formula and {len(bad_zero)} uniqueness failures, "
                   f"Catalan n<=5 {all(totals)}")

"""Exhaustive verification suites, one per identity.

Each suite runs over a list of instances ``(shape, e, s)`` and returns a
:class:`SuiteResult`: named checks with the number of cases tried and, for a
failure, the first counterexample found.  Instances are processed smallest
first, so the reported counterexample is a small one.
"""
from __future__ import annotations

import itertools
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import bijections as bj
from . import classical as cl
from .errors import MoonError
from .fillings import (
    Filling,
    STATISTICS,
    complement,
    enumerate_fillings,
    mixed,
    mixed_pair,
    ne_count,
    se_count,
)
from .fixtures import (
    DEFAULT_SEED,
    Instance,
    chain_filling,
    chain_filling_image,
    example_filling,
    fixture_shapes,
    random_instances,
)
from .kasraoui import auc, buc, check_compositions, coloring, ne_se_from_compositions, psi, psi_inv, standard_frame
from .polyomino import (
    MoonPolyomino,
    from_column_spans,
    permute_rows,
    rearrange_top_aligned,
)
from .pq import BivarPoly, product_formula, pq_binomial, pq_integer, pq_multinomial

THREADS_ENV = "MOONFILL_THREADS"
MAX_FULL_SUBSETS = 8
SAMPLED_SUBSETS = 64


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    cases: int
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "counterexample": self.counterexample}


@dataclass(frozen=True)
class SuiteResult:
    theorem: str
    checks: tuple[Check, ...]
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "passed": self.passed, "seed": self.seed,
                "checks": [c.to_dict() for c in self.checks]}


@dataclass
class _Tally:
    """Accumulates one named check; keeps only the first counterexample."""

    name: str
    cases: int = 0
    failure: dict | None = None

    def test(self, ok: bool, dump: Callable[[], dict]) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = dump()
        return ok

    def check(self) -> Check:
        return Check(self.name, self.failure is None, self.cases, self.failure)


class _Tallies(dict):
    def __missing__(self, name):
        t = self[name] = _Tally(name)
        return t

    def checks(self) -> list[Check]:
        return [t.check() for t in self.values()]


def dump(M: MoonPolyomino, e=None, s=None, F: Filling | None = None, subset=None, **extra) -> dict:
    out = {"shape": [[r.left, r.right] for r in M.rows]}
    if e is not None:
        out["e"] = list(e)
    if s is not None:
        out["s"] = list(s)
    if F is not None:
        out["filling"] = [list(c) for c in sorted(F.ones)]
    if subset is not None:
        out["subset"] = sorted(subset)
    for k, v in extra.items():
        out[k] = v
    return out


def _merge(parts: Iterable[list[Check]]) -> tuple[Check, ...]:
    merged: dict[str, Check] = {}
    for checks in parts:
        for c in checks:
            old = merged.get(c.name)
            if old is None:
                merged[c.name] = c
            else:
                merged[c.name] = Check(c.name, old.passed and c.passed, old.cases + c.cases,
                                       old.counterexample or c.counterexample)
    return tuple(merged.values())


def threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _fan_out(fn, items: Sequence) -> list:
    workers = threads()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def all_subsets(k: int) -> list[tuple[int, ...]]:
    return [A for r in range(k + 1) for A in itertools.combinations(range(1, k + 1), r)]


def subsets_for(k: int, seed: int) -> list[tuple[int, ...]]:
    """Every subset of ``[k]`` when small, otherwise a seeded sample including the extremes."""
    if k <= MAX_FULL_SUBSETS:
        return all_subsets(k)
    rng = random.Random(seed * 7919 + k)
    chosen = {(), tuple(range(1, k + 1))}
    while len(chosen) < SAMPLED_SUBSETS:
        chosen.add(tuple(i for i in range(1, k + 1) if rng.random() < 0.5))
    return sorted(chosen, key=lambda A: (len(A), A))


def _size(inst: Instance) -> tuple:
    return (inst.shape.size, inst.shape.n, inst.shape.rows, inst.e, inst.s)


def default_instances() -> list[Instance]:
    shapes = fixture_shapes()
    seeds = [
        example_filling(),
        chain_filling(),
        Filling(shapes["rect3x3"], (1, 2, 3)),
        Filling(shapes["staircase"], (3, 2, 1, 1)),
        Filling(shapes["diamond"], (2, 0, 3, 2)),
    ]
    return [Instance(F.shape, F.e, F.s, F) for F in seeds]


def build_instances(seed: int = DEFAULT_SEED, random_count: int = 0, *, defaults: bool = True,
                    extra: Sequence[Instance] = (), max_rows: int = 5, max_cols: int = 5) -> list[Instance]:
    out = list(default_instances()) if defaults else []
    out += list(extra)
    out += random_instances(seed, random_count, max_rows, max_cols)
    return sorted(out, key=_size)


# -- per-instance workers ------------------------------------------------------------
# Module-level functions so they can be shipped to worker processes.


def _sene(F: Filling) -> tuple[int, int]:
    return se_count(F), ne_count(F)


def _fillings(inst: Instance) -> list[Filling]:
    return list(enumerate_fillings(inst.shape, inst.e, inst.s))


def _mixed_dist_worker(args) -> list[Check]:
    inst, stats, seed = args
    M, e, s = inst.shape, inst.e, inst.s
    Fs = _fillings(inst)
    t = _Tallies()
    base = BivarPoly.from_pairs(Counter(_sene(F) for F in Fs))
    t["(se, ne) distribution is symmetric"].test(base.is_symmetric(), lambda: dump(M, e, s))
    for stat in stats:
        size = M.n if stat in ("top", "bottom") else M.m
        for A in subsets_for(size, seed):
            Ac = complement(A, size)
            got = BivarPoly.from_pairs(Counter((mixed(F, stat, A), mixed(F, stat, Ac)) for F in Fs))
            t[f"{stat}-mixed distribution equals (se, ne)"].test(
                got == base, lambda: dump(M, e, s, subset=A, statistic=stat,
                                          expected=base.to_text(), got=got.to_text()))
    return t.checks()


def _product_worker(inst: Instance) -> list[Check]:
    M, e, s = inst.shape, inst.e, inst.s
    t = _Tallies()
    got = BivarPoly.from_pairs(Counter(_sene(F) for F in enumerate_fillings(M, e, s)))
    want = product_formula(M, e, s)
    t["enumeration equals product formula"].test(
        got == want, lambda: dump(M, e, s, expected=want.to_text(), got=got.to_text()))
    t["product formula is symmetric"].test(want.is_symmetric(), lambda: dump(M, e, s))
    return t.checks()


def rectangle_chain_counts(F: Filling, ce, frame=None) -> tuple[int, int]:
    """Chains inside the rectangle of the cell's column that end at ``ce``, as ``(above-count, below-count)``.

    For a left-part column: NE chains with ``ce`` as the lower-left cell, and
    SE chains with ``ce`` as the upper-left cell.  For a right-part column: SE
    chains with ``ce`` as the lower-right cell, and NE chains with ``ce`` as
    the upper-right cell.
    """
    M = F.shape
    fr = standard_frame(M) if frame is None else frame
    i, j = ce
    rect = fr.rectangle(j)
    inside = [(r, c) for r, c in F.ones if rect.top <= r <= rect.bottom and rect.left <= c <= rect.right]
    if j in fr.left_part:
        above = sum(1 for r, c in inside if r < i and c > j)
        below = sum(1 for r, c in inside if r > i and c > j)
    else:
        above = sum(1 for r, c in inside if r < i and c < j)
        below = sum(1 for r, c in inside if r > i and c < j)
    return above, below


def _psi_worker(inst: Instance) -> list[Check]:
    M, e, s = inst.shape, inst.e, inst.s
    fr = standard_frame(M)
    t = _Tallies()
    for F in enumerate_fillings(M, e, s):
        cs = psi(F, fr)
        t["psi_inv(psi(F)) = F"].test(psi_inv(M, e, s, cs, fr) == F, lambda: dump(M, e, s, F))
        try:
            check_compositions(M, e, s, cs, fr)
            ok = True
        except MoonError:
            ok = False
        t["composition parts sum to h_i - s_i"].test(ok, lambda: dump(M, e, s, F, compositions=[list(c) for c in cs]))
        if not ok:
            continue
        ne, se = ne_count(F), se_count(F)
        t["partial-sum formulas give (ne, se)"].test(
            ne_se_from_compositions(M, e, s, cs, fr) == (ne, se), lambda: dump(M, e, s, F))
        colored = coloring(F, fr)
        ne_sum = se_sum = 0
        for ce in sorted(F.ones):
            a, b = auc(ce, F, colored), buc(ce, F, colored)
            t["auc/buc count chains in the column rectangle"].test(
                (a, b) == rectangle_chain_counts(F, ce, fr), lambda: dump(M, e, s, F, cell=list(ce)))
            if ce[1] in fr.left_part:
                ne_sum += a
                se_sum += b
            else:
                ne_sum += b
                se_sum += a
        t["auc/buc sums give (ne, se)"].test((ne_sum, se_sum) == (ne, se), lambda: dump(M, e, s, F))
    return t.checks()


def _pointwise(t: _Tallies, name: str, Fs: list[Filling], forward, backward, stat_before, M, e, s, subset=None):
    dom = set(Fs)
    image = []
    for F in Fs:
        G = forward(F)
        image.append(G)
        t[f"{name}: transports the pair to (se, ne)"].test(
            stat_before(F) == _sene(G), lambda: dump(M, e, s, F, subset))
        t[f"{name}: inverse undoes the map"].test(backward(G) == F, lambda: dump(M, e, s, F, subset))
    t[f"{name}: permutes its domain"].test(set(image) == dom and len(image) == len(dom),
                                          lambda: dump(M, e, s, subset=subset))


def _theta_worker(args) -> list[Check]:
    inst, seed = args
    M, e, s = inst.shape, inst.e, inst.s
    Fs = _fillings(inst)
    t = _Tallies()
    _pointwise(t, "phi_alpha", Fs, bj.phi_alpha, bj.phi_alpha_inverse,
               lambda F: mixed_pair(F, "top", {1}), M, e, s)
    for F in Fs:
        G = bj.phi_alpha(F)
        split = bj.upper_lower_split(F)
        if split is not None:
            t["phi_alpha: lower rows untouched"].test(
                all(F.cols[i - 1] == G.cols[i - 1] for i in split.lower), lambda: dump(M, e, s, F))
            t["recover_pivot finds the pivot"].test(bj.recover_pivot(G) == split.pivot, lambda: dump(M, e, s, F))
    for r in range(1, M.n + 1):
        # theta_r moves the pair for S + {r} to the pair for S, for every S inside 1..r-1
        for S in subsets_for(r - 1, seed):
            S = frozenset(S)
            for F in Fs:
                G = bj.theta_r(F, r)
                t["theta_r: transports the row-mixed pair"].test(
                    mixed_pair(F, "top", S | {r}) == mixed_pair(G, "top", S),
                    lambda: dump(M, e, s, F, sorted(S), r=r))
                t["theta_r: rows above r untouched"].test(F.cols[:r - 1] == G.cols[:r - 1],
                                                          lambda: dump(M, e, s, F, r=r))
        image = [bj.theta_r(F, r) for F in Fs]
        t["theta_r: permutes its domain"].test(set(image) == set(Fs), lambda: dump(M, e, s, r=r))
    for S in subsets_for(M.n, seed):
        S = frozenset(S)
        _pointwise(t, "Theta_alpha", Fs, lambda F: bj.Theta_alpha(F, S), lambda G: bj.Theta_alpha_inverse(G, S),
                   lambda F: mixed_pair(F, "top", S), M, e, s, S)
        _pointwise(t, "beta variant", Fs, lambda F: bj.beta_variant(F, S), lambda G: bj.beta_variant_inverse(G, S),
                   lambda F: mixed_pair(F, "bottom", S), M, e, s, S)
    return t.checks()


def _sigma_worker(args) -> list[Check]:
    inst, seed = args
    M, e, s = inst.shape, inst.e, inst.s
    Fs = _fillings(inst)
    t = _Tallies()
    _pointwise(t, "phi_gamma", Fs, bj.phi_gamma, bj.phi_gamma_inverse,
               lambda F: mixed_pair(F, "left", {1}), M, e, s)
    for c in range(1, M.m + 1):
        for T in subsets_for(c - 1, seed):
            T = frozenset(T)
            for F in Fs:
                G = bj.xi_c(F, c)
                t["xi_c: transports the column-mixed pair"].test(
                    mixed_pair(F, "left", T | {c}) == mixed_pair(G, "left", T),
                    lambda: dump(M, e, s, F, sorted(T), c=c))
                t["xi_c: columns left of c untouched"].test(
                    all((x < c) == (y < c) and (x >= c or x == y) for x, y in zip(F.cols, G.cols)),
                    lambda: dump(M, e, s, F, c=c))
        image = [bj.xi_c(F, c) for F in Fs]
        t["xi_c: permutes its domain"].test(set(image) == set(Fs), lambda: dump(M, e, s, c=c))
    for T in subsets_for(M.m, seed):
        T = frozenset(T)
        _pointwise(t, "Sigma_gamma", Fs, lambda F: bj.Sigma_gamma(F, T), lambda G: bj.Sigma_gamma_inverse(G, T),
                   lambda F: mixed_pair(F, "left", T), M, e, s, T)
        _pointwise(t, "delta variant", Fs, lambda F: bj.delta_variant(F, T), lambda G: bj.delta_variant_inverse(G, T),
                   lambda F: mixed_pair(F, "right", T), M, e, s, T)
    return t.checks()


def _rectangle_instances(instances: Sequence[Instance]) -> list[Instance]:
    """Every ``(e, s)`` class on small rectangles plus any rectangular instances given."""
    out = [i for i in instances if i.shape.is_rectangle]
    for n, m in ((1, 1), (2, 2), (2, 3), (3, 2), (3, 3)):
        M = MoonPolyomino(((1, m),) * n)
        seen = set()
        for cols in itertools.product(range(m + 1), repeat=n):
            F = Filling(M, cols)
            if (F.e, F.s) not in seen:
                seen.add((F.e, F.s))
                out.append(Instance(M, F.e, F.s))
    return sorted(out, key=_size)


def _rho_worker(inst: Instance) -> list[Check]:
    M, e, s = inst.shape, inst.e, inst.s
    Fs = _fillings(inst)
    t = _Tallies()
    for F in Fs:
        G = bj.rho(F)
        t["rho is an involution"].test(bj.rho(G) == F, lambda: dump(M, e, s, F))
        t["rho: transports the first-column pair to (se, ne)"].test(
            mixed_pair(F, "left", {1}) == _sene(G), lambda: dump(M, e, s, F))
        t["phi_gamma equals rho on rectangles"].test(bj.phi_gamma(F) == G, lambda: dump(M, e, s, F))
    t["rho permutes its domain"].test({bj.rho(F) for F in Fs} == set(Fs), lambda: dump(M, e, s))
    return t.checks()


def _h_worker(inst: Instance) -> list[Check]:
    M, e, s = inst.shape, inst.e, inst.s
    Fs = _fillings(inst)
    t = _Tallies()
    target = rearrange_top_aligned(M).shape
    image = []
    for F in Fs:
        G = bj.h_transport(F)
        image.append(G)
        t["h keeps (se, ne)"].test(_sene(F) == _sene(G), lambda: dump(M, e, s, F))
        t["h keeps column sums"].test(F.s == G.s and G.shape == target, lambda: dump(M, e, s, F))
        t["h inverse undoes h"].test(bj.h_transport_inverse(G, M) == F, lambda: dump(M, e, s, F))
    if image:
        e2 = image[0].e
        codomain = set(enumerate_fillings(target, e2, s))
        t["h is onto the top-aligned class"].test(
            set(image) == codomain and len(set(image)) == len(Fs),
            lambda: dump(M, e, s, target=[[r.left, r.right] for r in target.rows]))
    return t.checks()


def row_permutations(M: MoonPolyomino, limit: int, rng: random.Random) -> list[tuple[int, ...]]:
    """Up to ``limit`` row orders (other than the identity) that give moon polyominoes."""
    return _valid_perms(M.n, limit, rng, lambda p: permute_rows(M, p))


def column_permutations(M: MoonPolyomino, limit: int, rng: random.Random) -> list[tuple[int, ...]]:
    spans = M.column_spans
    return _valid_perms(M.m, limit, rng, lambda p: from_column_spans([spans[j - 1] for j in p]))


def _valid_perms(k: int, limit: int, rng: random.Random, build) -> list[tuple[int, ...]]:
    """Permutations giving valid shapes, one per distinct shape, excluding the original shape."""
    ident = tuple(range(1, k + 1))
    original = build(ident)
    by_shape = {}
    for p in itertools.permutations(ident):
        try:
            shape = build(p)
        except MoonError:
            continue
        if shape != original:
            by_shape.setdefault(shape, p)
    found = sorted(by_shape.values())
    rng.shuffle(found)
    return sorted(found[:limit])


def _invariance_worker(args) -> list[Check]:
    inst, seed = args
    M, e, s = inst.shape, inst.e, inst.s
    rng = random.Random(seed)
    Fs = _fillings(inst)
    t = _Tallies()
    row_subsets = subsets_for(M.n, seed)
    for perm in row_permutations(M, 3, rng):
        target = permute_rows(M, perm)
        for S in row_subsets[:: max(1, len(row_subsets) // 8)]:
            S = frozenset(S)
            image = []
            for F in Fs:
                G = bj.lambda_alpha(F, S, target)
                image.append(G)
                t["lambda_alpha keeps the row-mixed pair"].test(
                    mixed_pair(F, "top", S) == mixed_pair(G, "top", S),
                    lambda: dump(M, e, s, F, S, target=list(perm)))
            sums = {G.e for G in image}
            t["lambda_alpha is a bijection"].test(
                len(sums) == 1 and len(set(image)) == len(Fs)
                and set(image) == set(enumerate_fillings(target, image[0].e, s)),
                lambda: dump(M, e, s, subset=S, target=list(perm)))
    base = {stat: {} for stat in STATISTICS}
    for perm in column_permutations(M, 3, rng):
        target = from_column_spans([M.column_spans[j - 1] for j in perm])
        s2 = tuple(s[j - 1] for j in perm)
        Gs = list(enumerate_fillings(target, e, s2))
        where = {old: new for new, old in enumerate(perm, 1)}
        for stat in STATISTICS:
            rowwise = stat in ("top", "bottom")
            size = M.n if rowwise else M.m
            for A in subsets_for(size, seed)[:: max(1, 2 ** size // 8)]:
                A2 = frozenset(A) if rowwise else frozenset(where[j] for j in A)
                key = A
                if key not in base[stat]:
                    base[stat][key] = BivarPoly.from_pairs(Counter(mixed_pair(F, stat, A) for F in Fs))
                got = BivarPoly.from_pairs(Counter(mixed_pair(G, stat, A2) for G in Gs))
                t["column permutation keeps every distribution"].test(
                    got == base[stat][key], lambda: dump(M, e, s, subset=A, statistic=stat, target=list(perm)))
    return t.checks()


# -- suites ------------------------------------------------------------------------------


def suite_row_mixed(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    parts = _fan_out(_mixed_dist_worker, [(i, ("top", "bottom"), seed) for i in instances])
    return SuiteResult("row-mixed", _merge(parts), seed)


def suite_col_mixed(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    parts = _fan_out(_mixed_dist_worker, [(i, ("left", "right"), seed) for i in instances])
    return SuiteResult("col-mixed", _merge(parts), seed)


def suite_product(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("product", _merge(_fan_out(_product_worker, list(instances))), seed)


def suite_psi(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("psi", _merge(_fan_out(_psi_worker, list(instances))), seed)


def suite_rho(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("rho", _merge(_fan_out(_rho_worker, _rectangle_instances(instances))), seed)


def suite_theta(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("theta", _merge(_fan_out(_theta_worker, [(i, seed) for i in instances])), seed)


def suite_sigma(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    parts = _fan_out(_sigma_worker, [(i, seed) for i in instances])
    t = _Tallies()
    G, want = chain_filling(), chain_filling_image()
    t["phi_gamma worked example"].test(bj.phi_gamma(G) == want, lambda: dump(G.shape, G.e, G.s, G))
    return SuiteResult("sigma", _merge([*parts, t.checks()]), seed)


def suite_h_transport(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("h-transport", _merge(_fan_out(_h_worker, list(instances))), seed)


def suite_invariance(instances: Sequence[Instance], seed: int = DEFAULT_SEED) -> SuiteResult:
    return SuiteResult("invariance", _merge(_fan_out(_invariance_worker, [(i, seed) for i in instances])), seed)


DEFAULT_MULTISETS = ((1, 1, 2, 3), (1, 1, 2, 2), (1, 2, 3), (1, 1, 1, 2, 3), (1, 2, 2, 3, 3))


def suite_words(multisets: Sequence[Sequence[int]] = DEFAULT_MULTISETS, seed: int = DEFAULT_SEED) -> SuiteResult:
    t = _Tallies()
    t["[4 choose 2] by inversions"].test(
        cl.inversion_distribution((1, 1, 2, 2)) == pq_binomial(4, 2), lambda: {"multiset": [1, 1, 2, 2]})
    for W in multisets:
        W = tuple(sorted(W))
        n, m = len(W), max(W)
        parts = [W.count(x) for x in range(1, m + 1)]
        want = pq_multinomial(n, parts)
        t["inversions give the multinomial"].test(cl.inversion_distribution(W) == want, lambda: {"multiset": list(W)})
        for kind in ("alpha", "beta", "gamma", "delta"):
            size = n if kind in ("alpha", "beta") else m
            for A in subsets_for(size, seed):
                got = cl.word_distribution(W, kind, A, m)
                t["mixed word statistics give the multinomial"].test(
                    got == want, lambda: {"multiset": list(W), "kind": kind, "subset": list(A),
                                          "expected": want.to_text(), "got": got.to_text()})
        stat_of = {"alpha": "top", "beta": "bottom", "gamma": "left", "delta": "right"}
        for w in cl.rearrangements(W):
            F = cl.word_to_filling(w, n, m)
            t["inv/coinv equal se/ne of the filling"].test(
                (cl.inv(w), cl.coinv(w)) == _sene(F), lambda: {"word": list(w)})
            for kind, stat in stat_of.items():
                size = n if kind in ("alpha", "beta") else m
                for A in subsets_for(size, seed):
                    t["word statistics match the filling"].test(
                        cl.word_mixed(w, kind, A, m=m) == mixed(F, stat, A),
                        lambda: {"word": list(w), "kind": kind, "subset": list(A)})
    return SuiteResult("words", tuple(t.checks()), seed)


def suite_matchings(max_n: int = 4, seed: int = DEFAULT_SEED) -> SuiteResult:
    t = _Tallies()
    for n in range(1, max_n + 1):
        for A, B in cl.endpoint_classes(n):
            want = BivarPoly.constant(1)
            for h in cl.matching_h_vector(A, B):
                want = want * pq_integer(h)
            ms = list(cl.enumerate_matchings(A, B))
            for rows in all_subsets(n):
                S = {A[i - 1] for i in rows}
                got = cl.matching_distribution(A, B, S)
                t["crossing/nesting product formula"].test(
                    got == want, lambda: {"A": list(A), "B": list(B), "subset": sorted(S),
                                          "expected": want.to_text(), "got": got.to_text()})
                zeros = sum(1 for pi in ms if cl.mixed_alpha_matching(pi, S) == 0)
                t["exactly one alpha-zero matching per class"].test(
                    zeros == 1, lambda: {"A": list(A), "B": list(B), "subset": sorted(S), "zeros": zeros})
            for pi in ms:
                F = cl.matching_to_filling(pi)
                t["crossings/nestings equal ne/se"].test(
                    (cl.crossings(pi), cl.nestings(pi)) == (ne_count(F), se_count(F)),
                    lambda: {"arcs": [list(a) for a in pi.arcs]})
    return SuiteResult("matchings", tuple(t.checks()), seed)


def suite_catalan(max_n: int = 5, seed: int = DEFAULT_SEED) -> SuiteResult:
    t = _Tallies()
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        want = cl.catalan(n)
        t["Catalan closed form matches recurrence"].test(
            want == cl.catalan_by_recurrence(n), lambda: {"n": n})
        choices = {(), tuple(range(1, n + 1)), (1,)}
        choices.add(tuple(i for i in range(1, n + 1) if rng.random() < 0.5))
        for rows in sorted(choices):
            got = cl.alpha_zero_count(n, rows)
            t["alpha-zero matchings number Catalan"].test(
                got == want, lambda: {"n": n, "rows": list(rows), "expected": want, "got": got})
    return SuiteResult("catalan", tuple(t.checks()), seed)


FILLING_SUITES = {
    "row-mixed": suite_row_mixed,
    "col-mixed": suite_col_mixed,
    "product": suite_product,
    "psi": suite_psi,
    "rho": suite_rho,
    "theta": suite_theta,
    "sigma": suite_sigma,
    "h-transport": suite_h_transport,
    "invariance": suite_invariance,
}
OTHER_SUITES = {
    "words": lambda seed: suite_words(seed=seed),
    "matchings": lambda seed: suite_matchings(seed=seed),
    "catalan": lambda seed: suite_catalan(seed=seed),
}
THEOREMS = tuple(FILLING_SUITES) + tuple(OTHER_SUITES)


def run_suite(theorem: str, instances: Sequence[Instance] | None = None, seed: int = DEFAULT_SEED) -> SuiteResult:
    if theorem in OTHER_SUITES:
        return OTHER_SUITES[theorem](seed)
    if theorem not in FILLING_SUITES:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if instances is None:
        instances = build_instances(seed)
    return FILLING_SUITES[theorem](instances, seed)

import itertools
import random

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dihedral_codes.dihedral import LinearCode, code_from_generator, conjugate_generator, make_spec
from dihedral_codes.distance import (
    bch_lower_bound,
    common_roots,
    information_sets,
    longest_cyclic_run,
    min_distance_bz,
    min_distance_exhaustive,
    minimum_distance,
    pack_rows,
    weight_upper_bound_sample,
)
from dihedral_codes.errors import DimensionExceedsCap, EmptyCode, ZeroGenerator
from dihedral_codes.finite_field import make_field
from dihedral_codes.polynomial import root_context, roots_among_powers
from dihedral_codes.presets import PRESETS
from dihedral_codes.verify import random_spec

from oracles import brute_force_min_distance_binary

F2 = make_field(2)
F3 = make_field(3)
F4 = make_field(2, 2)


def random_binary_code(rng, n_max=24, k_max=10):
    while True:
        k = int(rng.integers(1, k_max + 1))
        n = int(rng.integers(k, n_max + 1))
        G = (rng.random((k, n)) < rng.uniform(0.15, 0.6)).astype(np.int64)
        C = LinearCode.from_rows(F2, G)
        if C.k:
            return C


def brute_force_min_distance(C):
    q = C.q
    best = C.n + 1
    for u in itertools.product(range(q), repeat=C.k):
        if any(u):
            best = min(best, int(np.count_nonzero(C.encode(np.array(u)))))
    return best


def check_witness(C, res):
    assert C.contains(res.witness)
    assert int(np.count_nonzero(res.witness)) == res.d


# -- BCH bound -------------------------------------------------------------------


def test_longest_cyclic_run():
    assert longest_cyclic_run([], 7) == 0
    assert longest_cyclic_run([3, 4, 5, 9], 11) == 3
    assert longest_cyclic_run([10, 0, 1, 5], 11) == 3  # wraps around
    assert longest_cyclic_run(range(7), 7) == 7


def test_bch_bound_d22():
    spec = PRESETS["d22"].spec()
    ctx = root_context(F4, 11)
    common = common_roots(spec)
    assert common == roots_among_powers(spec.generator, ctx) & roots_among_powers(conjugate_generator(spec), ctx)
    # one full nonzero coset, whose longest run has length 3
    assert len(common) == 5 and 0 not in common
    assert bch_lower_bound(spec) == 4


def test_bch_bound_no_roots_and_errors():
    # the only root of x + a is a, of order 3, so no 5th root of unity is a root
    spec = make_spec(2, 5, "a,1")
    assert roots_among_powers(spec.generator, root_context(F4, 5)) == frozenset()
    assert bch_lower_bound(spec) == 1
    with pytest.raises(ZeroGenerator):
        bch_lower_bound(make_spec(2, 5, "0"))


def test_bch_bound_run_scan_oracle():
    r = random.Random(3)
    for _ in range(40):
        spec = random_spec(r, r.choice((2, 3)), [5, 7, 11, 13])
        ctx = root_context(spec.basis.ext, spec.m)
        common = roots_among_powers(spec.generator, ctx) & roots_among_powers(conjugate_generator(spec), ctx)
        m = spec.m
        run = max(
            (next((L for L in range(m, 0, -1) if all((s + j) % m in common for j in range(L))), 0) for s in range(m)),
            default=0,
        )
        assert bch_lower_bound(spec) == run + 1


# -- exhaustive --------------------------------------------------------------------


def test_exhaustive_examples():
    rep = LinearCode.from_rows(F2, [[1, 1]])
    res = min_distance_exhaustive(rep)
    assert res.d == 2 and res.exact
    C = code_from_generator(PRESETS["d22"].spec())
    res = min_distance_exhaustive(C)
    assert res.d == 6 and res.work == 4095 and res.method == "exhaustive"
    check_witness(C, res)
    with pytest.raises(EmptyCode):
        min_distance_exhaustive(LinearCode.from_rows(F2, np.zeros((1, 6), dtype=int)))
    with pytest.raises(DimensionExceedsCap):
        min_distance_exhaustive(C, cap=10)


def test_exhaustive_matches_brute_force_binary(rng):
    for _ in range(60):
        C = random_binary_code(rng)
        res = min_distance_exhaustive(C)
        assert res.d == brute_force_min_distance_binary(C.gen_matrix)
        check_witness(C, res)


@pytest.mark.parametrize("F", [F3, F4, make_field(5)])
def test_exhaustive_matches_brute_force_qary(F, rng):
    for _ in range(25):
        k = int(rng.integers(1, 5))
        n = int(rng.integers(k, 12))
        G = rng.integers(0, F.order, size=(k, n))
        C = LinearCode.from_rows(F, G)
        if C.k == 0:
            continue
        res = min_distance_exhaustive(C)
        assert res.d == brute_force_min_distance(C)
        check_witness(C, res)
        bz = min_distance_bz(C)
        assert bz.d == res.d and bz.exact
        check_witness(C, bz)


@pytest.mark.parametrize("shards", [1, 2, 3, 7])
def test_shard_count_does_not_change_result(shards, rng):
    for _ in range(10):
        C = random_binary_code(rng, n_max=30, k_max=14)
        base = min_distance_exhaustive(C)
        res = min_distance_exhaustive(C, shards=shards, workers=2)
        assert (res.d, res.work) == (base.d, base.work)
        assert np.array_equal(res.witness, base.witness)
        bz0, bz = min_distance_bz(C), min_distance_bz(C, shards=shards, workers=2)
        assert (bz.d, bz.work) == (bz0.d, bz0.work)
        assert np.array_equal(bz.witness, bz0.witness)


def test_pack_rows_bit_layout():
    M = np.zeros((1, 70), dtype=np.int64)
    M[0, [0, 63, 64, 69]] = 1
    packed = pack_rows(M)
    assert packed.shape == (1, 2)
    assert int(packed[0, 0]) == (1 | (1 << 63)) and int(packed[0, 1]) == (1 | (1 << 5))


# -- Brouwer-Zimmermann -------------------------------------------------------------


def test_information_sets_are_information_sets(rng):
    for _ in range(20):
        C = random_binary_code(rng, n_max=40, k_max=12)
        sets = information_sets(C)
        used = set()
        for s in sets:
            assert np.array_equal(s.matrix[:, list(s.pivots)], np.eye(C.k, dtype=np.int64))
            assert LinearCode.from_rows(F2, s.matrix) == C
            new = set(s.pivots) - used
            assert len(new) == s.fresh_rank > 0
            used |= new
        assert sets[0].fresh_rank == C.k


@given(st.integers(0, 10**6))
def test_bz_agrees_with_exhaustive(seed):
    rng = np.random.default_rng(seed)
    C = random_binary_code(rng, n_max=40, k_max=16)
    ex, bz = min_distance_exhaustive(C), min_distance_bz(C)
    assert bz.d == ex.d and bz.exact and bz.lower_bound == bz.d
    check_witness(C, bz)


def test_bz_budget_and_target():
    C = code_from_generator(PRESETS["d86a"].spec())
    res = min_distance_bz(C, budget=10_000)
    assert not res.lower_certified and res.upper_certified
    assert res.lower_bound <= 15 <= res.d
    check_witness(C, res)
    res = min_distance_bz(C, target=8)
    assert res.lower_bound >= 8
    with pytest.raises(EmptyCode):
        min_distance_bz(LinearCode.from_rows(F2, np.zeros((0, 4), dtype=int), length=4))


def test_bz_d86b():
    C = code_from_generator(PRESETS["d86b"].spec())
    res = min_distance_bz(C)
    assert (C.n, C.k, res.d) == (86, 72, 5) and res.exact
    check_witness(C, res)


# -- sampling and dispatch -----------------------------------------------------------


def test_sampled_upper_bound(rng):
    rep = LinearCode.from_rows(F2, [[1, 1]])
    assert all(weight_upper_bound_sample(rep, 5, seed=s) == 2 for s in range(5))
    for _ in range(100):
        C = random_binary_code(rng, n_max=30, k_max=12)
        d = min_distance_bz(C).d
        assert weight_upper_bound_sample(C, 50, seed=1) >= d
    C = random_binary_code(np.random.default_rng(9), n_max=20, k_max=6)
    assert weight_upper_bound_sample(C, 20_000, seed=0) == brute_force_min_distance_binary(C.gen_matrix)
    assert weight_upper_bound_sample(C, 300, seed=4) == weight_upper_bound_sample(C, 300, seed=4)


def test_minimum_distance_dispatch():
    C = code_from_generator(PRESETS["d22"].spec())
    assert minimum_distance(C).method == "exhaustive"
    assert minimum_distance(C, cap=8).method == "brouwer_zimmermann"
    with pytest.raises(ValueError):
        minimum_distance(C, method="guess")


def test_result_serialisation():
    C = code_from_generator(PRESETS["d22"].spec())
    d = min_distance_exhaustive(C).as_dict()
    assert d == {
        "d": 6, "method": "exhaustive", "work": 4095, "lower_bound": 6,
        "lower_certified": True, "upper_certified": True,
    }

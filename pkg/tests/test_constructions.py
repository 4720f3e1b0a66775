import math

import pytest

from bstar.constructions import (
    BadParams,
    NotCoprime,
    ConstructionReport,
    bose_sets,
    compose_mod,
    expected_integer_size,
    half_modular,
    random_circle_set,
    random_integer_set,
    ruzsa_sets,
    singer_sets,
    small_gn_ratio,
    small_gn_witness,
)
from bstar.intsets import IntSet, max_rep, representation_counts


def test_ruzsa_examples():
    rep = ruzsa_sets(5, 1)
    assert len(rep.set) == 4 and rep.set.modulus == 20 and rep.verified
    assert max_rep(rep.set) <= 2
    rep = ruzsa_sets(5, 2)
    assert len(rep.set) == 8 and rep.verified
    with pytest.raises(BadParams):
        ruzsa_sets(4, 1)


def test_ruzsa_blocks_disjoint():
    # the k classes partition into blocks of size p-1 each
    for p, k in [(5, 2), (7, 3), (11, 4)]:
        rep = ruzsa_sets(p, k)
        assert len(rep.set) == k * (p - 1)
        by_residue = {}
        for a in rep.set.elements:
            by_residue.setdefault(a % (p - 1), []).append(a)
        assert all(len(v) == k for v in by_residue.values())


def test_bose_examples():
    rep = bose_sets(3, 1)
    assert len(rep.set) == 3 and rep.set.modulus == 8 and max_rep(rep.set) <= 2
    rep = bose_sets(5, 2)
    assert len(rep.set) == 10 and rep.set.modulus == 24 and max_rep(rep.set) <= 8
    with pytest.raises(BadParams):
        bose_sets(3, 3)


def test_singer_examples():
    rep = singer_sets(2, 1)
    assert rep.set.elements == (0, 1, 3) and rep.set.modulus == 7
    rep = singer_sets(3, 1)
    assert len(rep.set) == 4 and rep.set.modulus == 13 and max_rep(rep.set) <= 2
    rep = singer_sets(3, 2)
    assert len(rep.set) == 7 and rep.set.modulus == 13 and max_rep(rep.set) <= 8


def test_singer_is_perfect_difference_set():
    for p in [2, 3, 5, 7]:
        s = singer_sets(p, 1).set
        q = s.modulus
        diffs = [0] * q
        for a in s.elements:
            for b in s.elements:
                if a != b:
                    diffs[(a - b) % q] += 1
        assert diffs[0] == 0 and all(c == 1 for c in diffs[1:])


def test_compose_examples():
    s = IntSet.of([0, 1, 2, 4], 7)
    rep = compose_mod(s, 3, IntSet.of([0], 2), 1)
    assert len(rep.set) == 4 and rep.set.modulus == 14 and max_rep(rep.set) <= 3
    with pytest.raises(NotCoprime):
        compose_mod(IntSet.of([0], 6), 1, IntSet.of([0], 9), 1)
    rep = compose_mod(IntSet.of([0], 3), 1, IntSet.of([0], 2), 1)
    assert rep.set.elements == (0,) and max_rep(rep.set) == 1


def test_compose_size_multiplies():
    s = singer_sets(3, 1).set  # mod 13
    m = IntSet.of([0, 1, 3, 7], 12)
    rep = compose_mod(s, 2, m, 2)
    assert len(rep.set) == len(s) * len(m)
    assert rep.verified


def test_half_modular_examples():
    rep = half_modular(IntSet.of([1, 2, 5, 7]), 2, singer_sets(2, 1).set, 2)
    assert len(rep.set) == 12 and max_rep(rep.set) <= 4
    assert rep.set.max_element <= rep.claimed_modulus_or_range

    rep = half_modular(IntSet.of([1]), 1, IntSet.of([0], 1), 1)
    assert rep.set.elements == (1,)

    rep = half_modular(IntSet.of([1, 2]), 2, IntSet.of([0, 1, 3], 7), 2)
    assert len(rep.set) == 6 and max_rep(rep.set) <= 4
    assert rep.claimed_modulus_or_range == 7 * 2 + 1 - math.ceil(7 / 3)


def test_small_gn_examples():
    rep = small_gn_witness(6)
    assert rep.set.elements == (0, 1, 4, 6, 7, 11, 12, 13, 14, 15, 16)
    assert len(rep.set) == 11 and max_rep(rep.set) <= 6

    assert len(small_gn_witness(1).set) == 1

    rep = small_gn_witness(12)
    assert len(rep.set) == 22 and rep.set.max_element <= 32 and rep.verified


def test_small_gn_ratio_limit():
    assert abs(small_gn_ratio(6000) - 11 / (8 * math.sqrt(3))) < 1e-3


def test_construction_report_round_trip():
    rep = singer_sets(3, 2)
    again = ConstructionReport.from_json(rep.to_json())
    assert again == rep


def test_random_circle_full_and_empty():
    rep = random_circle_set(1001, 1.0, seed=5)
    assert rep.size == 1001 and rep.achieved_g == 1001
    rep = random_circle_set(9, 1e-9, seed=5)
    assert rep.size == 0 and rep.achieved_g == 0
    with pytest.raises(BadParams):
        random_circle_set(10, 0.5)


def test_random_circle_size_concentration():
    n, eps = 10001, 0.2
    hits = sum(
        random_circle_set(n, eps, seed=seed).size >= eps * n - math.sqrt(eps * n * math.log(4))
        for seed in range(20)
    )
    assert hits >= 15  # per-draw failure probability is below 1/2


def test_random_integer_reports():
    assert abs(expected_integer_size(10**5, 50.0) - 2507.2) < 0.1
    rep = random_integer_set(2000, 20.0, seed=7)
    assert rep.rule == "inverse-sqrt" and rep.seed == 7
    assert rep.achieved_g == max_rep(rep.set)
    # boundary: gamma = pi keeps every p_k at most 1
    rep = random_integer_set(4, math.pi, seed=0)
    assert all(0 <= e <= 4 for e in rep.set.elements)
    with pytest.raises(BadParams):
        random_integer_set(100, 3.0)


def test_random_integer_is_reproducible():
    a = random_integer_set(5000, 40.0, seed=11)
    b = random_integer_set(5000, 40.0, seed=11)
    assert a.set == b.set and a.achieved_g == b.achieved_g


def test_report_verified_accounts_for_claim():
    rep = ruzsa_sets(7, 2)
    assert rep.verified and max_rep(rep.set) <= rep.claimed_g
    prof = representation_counts(rep.set)
    assert prof.total == len(rep.set) ** 2


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31])
def test_every_k_verifies_up_to_31(p):
    """Exhaustive soundness sweep: all 1 <= k < p for every prime p <= 31."""
    for k in range(1, p):
        r = ruzsa_sets(p, k)
        assert r.verified and len(r.set) == k * (p - 1), ("ruzsa", p, k)
        b = bose_sets(p, k)
        assert b.verified and len(b.set) == k * p, ("bose", p, k)
        s = singer_sets(p, k)
        assert s.verified and len(s.set) == k * p + 1, ("singer", p, k)

"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with  pytest tests/test_acceptance.py -v -s  to watch the lines as
the criteria complete.  Expected table values and witnesses are frozen
here; searches, kernels and optimizers must reproduce them at the
stated tolerances.
"""
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from bstar.constructions import (
    bose_sets,
    expected_integer_size,
    random_integer_set,
    ruzsa_sets,
    singer_sets,
)
from bstar.gf import is_prime
from bstar.intervals import IntervalSet, a_of_s, delta_k_upper, largest_symmetric_subset
from bstar.intsets import IntSet, is_bstar, max_rep
from bstar.kernels import (
    BoundCertificate,
    PiecewiseLinearKernel,
    alpha_mix_optimum,
    delta_lower_certificate,
    hurwitz_zeta,
    rho_lower,
    rho_upper,
    tail_norm,
    ubiquity_bound,
    zeta_integral_check,
)
from bstar.search import SearchProblem, exists_set, min_n

# --- frozen expected data -------------------------------------------------

# g -> (range x, witness, density ratio |S|/sqrt(2 g x) to three decimals)
# The g=4 row's witness yields 12/sqrt(248) ~ 0.762; the weaker surd
# sometimes quoted for that row (2/sqrt(7) ~ 0.756) belongs to the
# smaller record R(4,14) = 8 and is what the even-density table uses.
WITNESS_TABLE = {
    2: (7, (1, 2, 5, 7), 0.756),
    3: (5, (1, 2, 3, 5), 0.730),
    4: (31, (1, 2, 4, 10, 11, 12, 14, 19, 25, 26, 30, 31), 0.762),
    5: (9, (1, 2, 3, 4, 5, 7, 9), 0.738),
    6: (20, (1, 2, 3, 4, 5, 6, 9, 10, 13, 15, 19, 20), 0.775),
    7: (15, (1, 2, 3, 7, 8, 9, 10, 11, 12, 13, 15), 0.759),
    8: (30, (1, 2, 5, 7, 8, 9, 11, 12, 13, 14, 16, 18, 26, 27, 28, 29, 30), 0.776),
    9: (24, (1, 2, 3, 4, 5, 6, 7, 8, 9, 13, 14, 15, 17, 22, 23, 24), 0.770),
    10: (33, (1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 13, 15, 20, 21, 22, 23, 30, 31, 32, 33), 0.778),
    11: (25, (1, 2, 3, 4, 5, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 23, 25), 0.768),
}

# (g, k) -> min{n : an integer B*[g] set of size k fits in [1, n]}
R_TABLE = {
    (2, 3): 4, (2, 4): 7, (2, 5): 12, (2, 6): 18, (2, 7): 26,
    (2, 8): 35, (2, 9): 45, (2, 10): 56,
    (3, 4): 5, (3, 5): 8, (3, 6): 13, (3, 7): 19, (3, 8): 25,
    (3, 9): 35, (3, 10): 46,
    (4, 5): 6, (4, 6): 8, (4, 7): 11, (4, 8): 14, (4, 9): 18, (4, 10): 22,
    (5, 6): 7, (5, 7): 9, (5, 8): 12, (5, 9): 15, (5, 10): 19,
    (6, 7): 8, (6, 8): 10, (6, 9): 12, (6, 10): 14,
    (7, 8): 9, (7, 9): 11, (7, 10): 13,
}

# (g, k) -> min{n : a size-k B*[g] (mod n) set exists}
C_TABLE = {
    (2, 3): 6, (2, 4): 12, (2, 5): 21, (2, 6): 31, (2, 7): 48,
    (2, 8): 57, (2, 9): 73,
    (3, 4): 7, (3, 5): 11, (3, 6): 19, (3, 7): 29, (3, 8): 43, (3, 9): 57,
    (4, 5): 8, (4, 6): 11, (4, 7): 14, (4, 8): 22, (4, 9): 28,
    (5, 6): 9, (5, 7): 13, (5, 8): 17, (5, 9): 19, (5, 10): 28,
    (6, 7): 10, (6, 8): 12, (6, 9): 16,
}


def note(idx, message):
    print(f"ACCEPTANCE {idx:2d} PASS  {message}")


def test_criterion_01_witness_table():
    start = time.time()
    for g, (x, witness, printed_ratio) in WITNESS_TABLE.items():
        s = IntSet.of(witness)
        assert is_bstar(s, g), g
        assert len(s) == len(witness) and s.max_element == x
        ratio = len(s) / math.sqrt(2 * g * x)
        assert abs(ratio - printed_ratio) < 5e-4, (g, ratio)
    elapsed = time.time() - start
    assert elapsed < 1.0
    note(1, f"10 density-record witnesses verified in {elapsed:.2f}s")


def test_criterion_02_integer_table():
    start = time.time()
    for (g, k), expected in sorted(R_TABLE.items()):
        res = min_n(SearchProblem("integer", g, k, 1, expected + 16))
        assert res.min_n == expected, (g, k, res.min_n)
        assert res.exhaustive and is_bstar(res.witness, g)
    assert not exists_set("integer", 2, 34, 8).feasible
    elapsed = time.time() - start
    assert elapsed < 600
    note(2, f"{len(R_TABLE)} integer min-n cells (k<=10, g=2..7) in {elapsed:.0f}s")


def test_criterion_03_modular_table():
    start = time.time()
    results = {}
    for (g, k), expected in sorted(C_TABLE.items()):
        res = min_n(SearchProblem("modular", g, k, 1, expected + 5))
        assert res.min_n == expected, (g, k, res.min_n)
        assert res.exhaustive and is_bstar(res.witness, g)
        assert res.witness.modulus == expected and len(res.witness) == k
        results[g, k] = res.min_n
    # monotonicity cross-checks over the computed cells
    for (g, k), v in results.items():
        if (g, k + 1) in results:
            assert v <= results[g, k + 1]
        if (g + 1, k) in results:
            assert v >= results[g + 1, k]
    elapsed = time.time() - start
    assert elapsed < 1800
    note(3, f"{len(C_TABLE)} modular min-n cells (k<=9 plus (5,10)) in {elapsed:.0f}s")


def test_criterion_04_construction_sweep():
    checked = 0
    for p in [p for p in range(2, 32) if is_prime(p)]:
        for k in range(1, min(p, 5)):
            r = ruzsa_sets(p, k)
            assert r.verified and len(r.set) == k * (p - 1)
            assert r.set.modulus == p * (p - 1) and r.claimed_g == 2 * k * k
            b = bose_sets(p, k)
            assert b.verified and len(b.set) == k * p
            assert b.set.modulus == p * p - 1 and b.claimed_g == 2 * k * k
            s = singer_sets(p, k)
            assert s.verified and len(s.set) == k * p + 1
            assert s.set.modulus == p * p + p + 1 and s.claimed_g == 2 * k * k
            checked += 3
    note(4, f"{checked} algebraic constructions verified with zero failures")


def test_criterion_05_kernel_constants():
    start = time.time()
    k4 = PiecewiseLinearKernel.from_family("K3", 10**4)
    assert tail_norm(k4, 0, 4 / 3).value < 0.9658413
    assert abs(k4.fourier_dc() - 0.870250799) < 5e-7
    assert abs(tail_norm(k4, 1, 4 / 3).value - 0.208784534) < 5e-7
    t4 = time.time() - start
    assert t4 < 30

    start = time.time()
    k6 = PiecewiseLinearKernel.from_family("K5", 10**4)
    assert abs(k6.fourier_dc() - 0.631932628) < 5e-7
    assert abs(k6.coefficient(1) - 0.270776892) < 5e-7
    assert abs(tail_norm(k6, 2, 4 / 3).value - 0.239175395) < 5e-7
    t6 = time.time() - start
    assert t6 < 30
    note(5, f"six spectral constants reproduced to 5e-7 ({t4:.1f}s + {t6:.1f}s)")


def test_criterion_06_certificates():
    k6 = PiecewiseLinearKernel.from_family("K5", 10**4)
    cert = BoundCertificate.from_kernel(k6)
    threshold, ok = delta_lower_certificate(cert, grid=1e-6)
    assert ok and threshold >= 1.182778
    assert delta_lower_certificate(cert, grid=1e-6, threshold=1.182778)[1]
    assert threshold / 2 >= 0.591389

    k4 = PiecewiseLinearKernel.from_family("K3", 10**4)
    _, floor = alpha_mix_optimum(k4.fourier_dc(),
                                 tail_norm(k4, 1, 4 / 3).value, 4 / 3)
    assert floor >= 1.14915
    assert floor / 2 >= 0.574575
    note(6, f"certified ||f*f||_inf >= {threshold:.9f} and ||f*f||_2^2 >= {floor:.7f}")


def test_criterion_07_bridge_exactness():
    for g, (x, witness, _) in WITNESS_TABLE.items():
        s = IntSet.of(witness)
        d = largest_symmetric_subset(a_of_s(s, x)).d_value
        assert d == Fraction(max_rep(s), x), g
    fib = IntSet.of([1, 2, 3, 5, 8, 13])
    assert largest_symmetric_subset(a_of_s(fib, 13)).d_value == Fraction(3, 13)
    note(7, "block-picture symmetric measures equal max_rep/x exactly (11 sets)")


def _grid_estimate(intervals, coarse=10**5):
    """Independent oracle: dense-grid maximization with local refinement."""
    a = np.array([p[0] for p in intervals])
    b = np.array([p[1] for p in intervals])

    def vals(cs):
        total = np.zeros_like(cs)
        for i in range(len(a)):
            lo_i = cs - b[i]
            hi_i = cs - a[i]
            for j in range(len(a)):
                seg = np.minimum(hi_i, b[j] - cs) - np.maximum(lo_i, a[j] - cs)
                total += np.maximum(seg, 0.0)
        return total

    cs = np.linspace(0.0, 1.0, coarse)
    coarse_vals = vals(cs)
    best = float(coarse_vals.max())
    width = cs[1] - cs[0]
    for idx in np.argsort(coarse_vals)[-3:]:
        local = np.linspace(cs[idx] - width, cs[idx] + width, 2001)
        lv = vals(local)
        j = int(np.argmax(lv))
        finer = np.linspace(local[max(j - 1, 0)], local[min(j + 1, 2000)], 2001)
        best = max(best, float(vals(finer).max()))
    return best


def test_criterion_08_oracle_equivalence():
    rng = np.random.default_rng(20240918)
    for trial in range(1000):
        k = int(rng.integers(3, 6))
        pts = np.sort(rng.random(2 * k))
        pairs = [(float(pts[2 * i]), float(pts[2 * i + 1])) for i in range(k)
                 if pts[2 * i + 1] > pts[2 * i]]
        e = IntervalSet.of(pairs)
        if not e.intervals:
            continue
        d = largest_symmetric_subset(e).d_value
        grid = _grid_estimate([(float(x), float(y)) for x, y in e.intervals])
        assert d >= grid - 1e-12, trial
        assert d - grid <= 1e-9, (trial, d, grid)
        lam = e.measure
        assert d >= 2 * lam - 1 - 1e-12
        assert d >= lam * lam / 2 - 1e-12
    note(8, "candidate-center D matched the dense-grid oracle on 1000 sets")


def test_criterion_09_delta_k_optimizer():
    start = time.time()
    value2, witness2 = delta_k_upper(2, 0.75)
    assert abs(value2 - 0.5) <= 1e-3
    assert largest_symmetric_subset(witness2).d_value <= 0.5 + 1e-3
    value3, _ = delta_k_upper(3, 4.0 / 7.0)
    assert value3 <= 2.0 / 7.0 + 1e-3
    elapsed = time.time() - start
    assert elapsed < 120
    note(9, f"two-interval bound {value2:.6f}, three-interval bound {value3:.6f} "
            f"in {elapsed:.0f}s")


def test_criterion_10_quadrature():
    assert abs(zeta_integral_check() - math.sqrt(3) / 2) < 1e-9
    assert abs(hurwitz_zeta(2.0, 1.0) - math.pi**2 / 6) < 1e-12
    assert abs(hurwitz_zeta(2.0, 0.5) - math.pi**2 / 2) < 1e-12
    note(10, "quadrature self-test and Hurwitz spot values at tolerance")


def test_criterion_11_probabilistic_concentration():
    n, gamma, draws = 10**4, 100.0, 100
    e0 = expected_integer_size(n, gamma)
    sizes, cap_hits = [], 0
    cap = gamma + 4 * math.sqrt(gamma * math.log(3 * n))
    for seed in range(draws):
        rep = random_integer_set(n, gamma, seed=seed)
        sizes.append(rep.size)
        cap_hits += rep.achieved_g <= cap
    mean = float(np.mean(sizes))
    stderr = float(np.std(sizes, ddof=1)) / math.sqrt(draws)
    assert abs(mean - e0) <= 3 * stderr, (mean, e0, stderr)
    assert cap_hits >= 95
    note(11, f"mean size {mean:.1f} vs {e0:.1f} (3se={3*stderr:.1f}); "
             f"{cap_hits}/100 draws under the g cap")


def test_criterion_12_bound_calculators():
    assert abs(rho_lower(12).lower - math.sqrt(3) / math.sqrt(5)) < 1e-12
    assert abs(rho_upper(2).upper_sq - 1.238015) < 1e-6
    complicated, _ = ubiquity_bound(0.7, 0.25)
    assert complicated > 0.0137382
    note(12, "density-ratio and ubiquity calculators at stated tolerances")

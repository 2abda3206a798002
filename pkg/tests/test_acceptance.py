"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
report lines alongside pytest's own output.
"""

import math
import time
from itertools import product
from math import comb

import numpy as np
import pytest

from dglomax import (
    CountSample,
    DiscreteGammaLomax,
    DivergenceError,
    ExistenceError,
    Params,
    expectation_compare,
    fit_mle,
    log_likelihood,
    min_pmf,
    max_pmf,
    order_stat_pmf,
    range_zero_prob,
    stochastic_compare,
)
from dglomax.cli import run
from dglomax.ordering import SECOND_DOMINATES
from dglomax.specfun import reg_lower_gamma, reg_lower_gamma_series


def report(number: int, detail: str):
    print(f"[acceptance] criterion {number:2d} PASS  {detail}")


def test_criterion_01_closed_form_alpha_one_suite():
    start = time.perf_counter()
    d = DiscreteGammaLomax(1, 1, 1)
    xs = np.arange(0, 101, dtype=float)
    worst = 0.0
    worst = max(worst, float(np.max(np.abs(d.pmf(xs) - 1.0 / ((xs + 1) * (xs + 2))))))
    worst = max(worst, float(np.max(np.abs(d.cdf(xs) - (1.0 - 1.0 / (xs + 2))))))
    worst = max(worst, float(np.max(np.abs(d.survival(xs) - 1.0 / (xs + 1)))))
    worst = max(worst, float(np.max(np.abs(d.hazard(xs) - 1.0 / (xs + 2)))))
    elapsed = time.perf_counter() - start
    assert worst < 1e-12
    assert elapsed < 1.0
    report(1, f"alpha=1 closed forms over x=0..100, max abs err {worst:.2e}, {elapsed:.2f}s")


def test_criterion_02_telescoping_normalization():
    start = time.perf_counter()
    xs = np.arange(0, 10_001, dtype=float)
    worst = 0.0
    for c, alpha, theta in product([0.3, 0.7, 1.5], repeat=3):
        d = DiscreteGammaLomax(c, alpha, theta)
        gap = abs(float(np.sum(d.pmf(xs))) - d.cdf(10_000))
        worst = max(worst, gap)
    elapsed = time.perf_counter() - start
    assert worst < 1e-12
    assert elapsed < 5.0
    report(2, f"27 combos, N=1e4, max |sum pmf - cdf| = {worst:.2e}, {elapsed:.2f}s")


def test_criterion_03_floor_sampler(tmp_path):
    start = time.perf_counter()
    d = DiscreteGammaLomax(0.5, 2, 1.5)
    draws = d.sample(np.random.default_rng(2025), size=10**6)
    counts = np.bincount(draws[draws <= 200], minlength=201)
    emp = counts / draws.size
    tv = 0.5 * float(np.sum(np.abs(emp - d.pmf(np.arange(201, dtype=float)))))
    assert tv < 0.005
    # byte-exact reproducibility of the seeded CLI sampler
    args = ["sample", "--c", "0.5", "--alpha", "2", "--theta", "1.5",
            "--n", "10000", "--seed", "7"]
    out1, out2 = tmp_path / "s1.csv", tmp_path / "s2.csv"
    assert run(args + ["--out", str(out1)]) == 0
    assert run(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0
    report(3, f"1e6 draws, TV over 0..200 = {tv:.4f}, byte-exact reruns, {elapsed:.1f}s")


def test_criterion_04_decreasing_failure_rate():
    xs = np.arange(0, 201, dtype=float)
    worst = -math.inf
    for alpha in (0.3, 0.6, 1.0):
        for c in (0.5, 1.0, 2.0):
            for theta in (0.5, 2.0):
                h = DiscreteGammaLomax(c, alpha, theta).hazard(xs)
                worst = max(worst, float(np.max(np.diff(h))))
    assert worst <= 1e-12
    report(4, f"18 alpha<=1 combos, max hazard increment {worst:.2e} <= 1e-12")


def test_criterion_05_mode_against_brute_force():
    xs = np.arange(0, 10_001, dtype=float)
    rng = np.random.default_rng(515)
    checked = 0
    for _ in range(50):
        c = float(rng.uniform(0.2, 3.0))
        alpha = float(rng.uniform(0.2, 5.0))
        theta = float(rng.uniform(0.2, 5.0))
        d = DiscreteGammaLomax(c, alpha, theta)
        assert d.mode() == int(np.argmax(d.pmf(xs)))
        checked += 1
    # floor(x0) = 0 branch: x0 ~ 0.6487 yet the mode is 0
    branch = DiscreteGammaLomax(1, 2, 1)
    assert 0.0 < branch.continuous.mode() < 1.0
    assert branch.mode() == 0 == int(np.argmax(branch.pmf(xs)))
    report(5, f"{checked} random triples + floor(x0)=0 branch match brute-force argmax")


def test_criterion_06_moments():
    exact = math.pi**2 / 6 - 1.0
    m = DiscreteGammaLomax(0.5, 1, 1).moment(1)
    assert m.value == pytest.approx(exact, abs=1e-6)
    with pytest.raises(ExistenceError, match=r"c < 1/r"):
        DiscreteGammaLomax(1, 1, 1).moment(1)
    d = DiscreteGammaLomax(0.4, 2, 1)
    mc = d.sample(np.random.default_rng(2026), size=10**6)
    se = float(mc.std()) / 1000.0
    gap = abs(d.moment(1).value - float(mc.mean()))
    assert gap < 3.0 * se
    report(6, f"mean err {abs(m.value - exact):.2e}; existence error raised; MC gap {gap / se:.2f} SE")


def test_criterion_07_series_cross_check():
    worst = 0.0
    for a in (0.5, 1.0, 2.5):
        for x in (0.1, 0.5, 1.0, 2.0, 5.0):
            gap = abs(reg_lower_gamma_series(a, x, 200) - reg_lower_gamma(a, x))
            worst = max(worst, gap)
    assert worst < 1e-10
    report(7, f"alternating series vs kernel on 15-point grid, max gap {worst:.2e}")


def test_criterion_08_order_statistics():
    d = DiscreteGammaLomax(1, 1, 1)

    def binom_tail(p, n, i):
        return sum(comb(n, k) * p**k * (1 - p) ** (n - k) for k in range(i, n + 1))

    worst = 0.0
    for x in range(0, 51):
        oracle = binom_tail(d.cdf(float(x)), 3, 2) - binom_tail(d.cdf(x - 1.0), 3, 2)
        worst = max(worst, abs(order_stat_pmf(d, 3, 2, x) - oracle))
    assert worst < 1e-10

    med = np.sort(d.sample(np.random.default_rng(2029), size=3 * 10**5).reshape(10**5, 3), axis=1)[:, 1]
    hi = 2000
    emp = np.bincount(med[med <= hi], minlength=hi + 1) / med.size
    tv = 0.5 * float(np.sum(np.abs(emp - order_stat_pmf(d, 3, 2, np.arange(hi + 1, dtype=float)))))
    assert tv < 0.01

    worst_ex = 0.0
    for x in (0, 1, 3, 10, 40):
        total = sum(order_stat_pmf(d, 3, i, x) for i in (1, 2, 3))
        worst_ex = max(worst_ex, abs(total - 3.0 * d.pmf(x)))
    assert worst_ex < 1e-10
    report(8, f"beta route vs binomial oracle {worst:.1e}; median TV {tv:.4f}; exchangeability {worst_ex:.1e}")


def test_criterion_09_min_max_range():
    d = DiscreteGammaLomax(1, 1, 1)
    pair = [d.params, d.params]
    assert min_pmf(pair, 0) == pytest.approx(0.75, abs=1e-12)
    assert max_pmf(pair, 0) == pytest.approx(0.25, abs=1e-12)
    exact = math.pi**2 / 3 - 3.0
    r0 = range_zero_prob(d, 2, 1e-7)
    assert r0.value == pytest.approx(exact, abs=1e-6)
    pairs = d.sample(np.random.default_rng(2028), size=2 * 10**6).reshape(10**6, 2)
    p_hat = float(np.mean(pairs[:, 0] == pairs[:, 1]))
    sigma = math.sqrt(exact * (1.0 - exact) / 10**6)
    assert abs(p_hat - r0.value) < 3.0 * sigma
    report(9, f"P(min=0)=0.75, P(max=0)=0.25 exact to 1e-12; P(R=0) err {abs(r0.value - exact):.1e}, MC z={abs(p_hat - r0.value) / sigma:.2f}")


def test_criterion_10_cumulative_residual_entropy():
    # oracle: 1e7-term partial sum of 2 ln(k)/k^2 plus midpoint integral tail
    k = np.arange(2.0, 1e7 + 2.0)
    partial = float(np.sum(2.0 * np.log(k) / k**2))
    m = 1e7 + 1.5
    oracle = partial + 2.0 * (math.log(m) + 1.0) / m
    h = DiscreteGammaLomax(0.5, 1, 1).cre_entropy(1e-5)
    gap = abs(h.value - oracle)
    assert gap < 1e-4
    for c in (1.0, 1.7):
        with pytest.raises(DivergenceError):
            DiscreteGammaLomax(c, 1, 1).cre_entropy()
    report(10, f"entropy {h.value:.7f} vs oracle {oracle:.7f} (gap {gap:.1e}); divergence raised for c >= 1")


def test_criterion_11_survival_monotonicity_and_means():
    grid = [0.3, 0.7, 1.5]
    xs = np.arange(0, 501, dtype=float)
    for a, b in product(grid, grid):
        for values, make in (
            (grid, lambda t: DiscreteGammaLomax(a, b, t)),
            (grid, lambda c: DiscreteGammaLomax(c, a, b)),
            (grid, lambda al: DiscreteGammaLomax(a, al, b)),
        ):
            s = [make(v).survival(xs) for v in values]
            assert np.all(s[1] >= s[0] - 1e-12)
            assert np.all(s[2] >= s[1] - 1e-12)
    checked = 0
    for c, alpha, theta in product([0.3, 0.7], grid, grid):
        d1 = DiscreteGammaLomax(c, alpha, theta)
        d2 = DiscreteGammaLomax(c, alpha, theta * 1.5)
        rep = stochastic_compare(d1, d2)
        assert rep.direction == SECOND_DOMINATES
        e = expectation_compare(d1, d2, tail_tol=1e-6)
        assert e.mean_second >= e.mean_first - (e.bound_first + e.bound_second)
        checked += 1
    report(11, f"survival monotone in theta, c, alpha on 3x3x3 grid; dominance implies mean order on {checked} pairs")


def test_criterion_12_fit_recovery():
    start = time.perf_counter()
    true = Params(0.5, 2.0, 1.5)
    data = DiscreteGammaLomax.from_params(true).sample(np.random.default_rng(13), size=5000)
    result = fit_mle(data, n_starts=8, seed=11)
    p = result.params
    rel = {
        "c": abs(p.c - true.c) / true.c,
        "alpha": abs(p.alpha - true.alpha) / true.alpha,
        "theta": abs(p.theta - true.theta) / true.theta,
    }
    assert max(rel.values()) < 0.2
    truth_ll = log_likelihood(true, CountSample(data))
    assert result.log_likelihood >= truth_ll - 0.5
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0
    report(12, f"rel errors c={rel['c']:.3f} alpha={rel['alpha']:.3f} theta={rel['theta']:.3f}; ll margin {result.log_likelihood - truth_ll:+.3f}; {elapsed:.1f}s")

import math

import numpy as np
import pytest

from dglomax import (
    CountSample,
    DegenerateDataError,
    DgldEstimator,
    DiscreteGammaLomax,
    DomainError,
    Params,
    fit_mle,
    log_likelihood,
)

TRUE = Params(0.5, 2.0, 1.5)


@pytest.fixture(scope="module")
def simulated():
    d = DiscreteGammaLomax.from_params(TRUE)
    return d.sample(np.random.default_rng(60), size=5000)


class TestCountSample:
    def test_flat(self):
        s = CountSample([0, 1, 1, 3, 0])
        assert s.n == 5
        assert s.as_table() == {0: 2, 1: 2, 3: 1}
        assert s.mean == pytest.approx(1.0)

    def test_table(self):
        s = CountSample.from_table({0: 2, 1: 2, 3: 1})
        assert s.n == 5 and s.distinct == 3

    def test_table_pairs_aggregate(self):
        s = CountSample.from_table([(4, 1), (0, 2), (4, 2)])
        assert s.as_table() == {0: 2, 4: 3}

    def test_column_matrix(self):
        s = CountSample(np.array([[1], [2], [2]]))
        assert s.n == 3

    @pytest.mark.parametrize("bad", [[-1], [0.5], [float("nan")], []])
    def test_invalid_observations(self, bad):
        with pytest.raises(DomainError):
            CountSample(bad)

    def test_invalid_counts(self):
        with pytest.raises(DomainError):
            CountSample.from_table({1: 0})


class TestLogLikelihood:
    def test_single_observation(self):
        assert log_likelihood(Params(1, 1, 1), [0]) == pytest.approx(math.log(0.5))

    def test_frequency_table(self):
        s = CountSample.from_table({0: 2, 1: 1})
        expected = 2 * math.log(0.5) + math.log(1.0 / 6.0)
        assert log_likelihood(Params(1, 1, 1), s) == pytest.approx(expected, abs=1e-13)

    def test_encoding_invariance(self):
        flat = CountSample([0, 0, 1, 2, 2, 2, 7])
        table = CountSample.from_table({0: 2, 1: 1, 2: 3, 7: 1})
        p = Params(0.6, 1.4, 2.0)
        assert abs(log_likelihood(p, flat) - log_likelihood(p, table)) <= 1e-13

    def test_impossible_value_gives_minus_inf(self):
        # far beyond where the pmf underflows to zero
        assert log_likelihood(Params(0.01, 1, 1), [10**9]) == -math.inf

    def test_accepts_distribution_handle(self):
        d = DiscreteGammaLomax(1, 1, 1)
        assert log_likelihood(d, [0]) == pytest.approx(math.log(0.5))


class TestFitMle:
    def test_recovery(self, simulated):
        result = fit_mle(simulated, n_starts=8, seed=7)
        p = result.params
        assert p.c == pytest.approx(TRUE.c, rel=0.2)
        assert p.alpha == pytest.approx(TRUE.alpha, rel=0.2)
        assert p.theta == pytest.approx(TRUE.theta, rel=0.2)
        truth_ll = log_likelihood(TRUE, CountSample(simulated))
        assert result.log_likelihood >= truth_ll - 0.5

    def test_descent_beats_every_start(self, simulated):
        sample = CountSample(simulated)
        result = fit_mle(sample, n_starts=4, seed=3)
        mean = sample.mean
        from dglomax.estimate import _start_lattice

        for start in _start_lattice(mean)[:4]:
            assert result.log_likelihood >= log_likelihood(Params(*start), sample)

    def test_determinism(self, simulated):
        a = fit_mle(simulated, n_starts=4, seed=11)
        b = fit_mle(simulated, n_starts=4, seed=11)
        assert a == b

    def test_seed_changes_jitter(self, simulated):
        a = fit_mle(simulated, n_starts=2, seed=1)
        b = fit_mle(simulated, n_starts=2, seed=2)
        assert a.params != b.params  # jitter differs; optima agree only approximately

    def test_degenerate_data(self):
        with pytest.raises(DegenerateDataError):
            fit_mle([3, 3, 3, 3])

    def test_aic(self, simulated):
        result = fit_mle(simulated, n_starts=2, seed=0)
        assert result.aic == pytest.approx(6.0 - 2.0 * result.log_likelihood)

    def test_validation(self, simulated):
        with pytest.raises(DomainError):
            fit_mle(simulated, n_starts=0)


class TestDgldEstimator:
    def test_fit_sets_state(self, simulated):
        est = DgldEstimator(n_starts=4, seed=5).fit(simulated)
        assert isinstance(est.params_, Params)
        assert est.log_likelihood_ == est.result_.log_likelihood
        assert isinstance(est.distribution_, DiscreteGammaLomax)

    def test_get_set_params(self):
        est = DgldEstimator(n_starts=4, seed=5)
        assert est.get_params() == {"n_starts": 4, "seed": 5}
        est.set_params(seed=9)
        assert est.seed == 9
        with pytest.raises(ValueError):
            est.set_params(gamma=1)

    def test_score_matches_log_likelihood(self, simulated):
        est = DgldEstimator(n_starts=4, seed=5).fit(simulated)
        assert est.score(simulated) == pytest.approx(est.log_likelihood_, rel=1e-12)

    def test_score_samples_shape(self, simulated):
        est = DgldEstimator(n_starts=2, seed=5).fit(simulated)
        out = est.score_samples([0, 1, 2])
        assert out.shape == (3,)
        assert np.all(out < 0.0)

    def test_sample_reproducible(self, simulated):
        est = DgldEstimator(n_starts=2, seed=5).fit(simulated)
        a = est.sample(100, random_state=3)
        b = est.sample(100, random_state=3)
        assert np.array_equal(a, b)

    def test_not_fitted(self):
        with pytest.raises(RuntimeError):
            DgldEstimator().score_samples([1])

    def test_sklearn_clone_compatible(self, simulated):
        sklearn = pytest.importorskip("sklearn")
        from sklearn.base import clone

        est = DgldEstimator(n_starts=3, seed=5)
        cloned = clone(est)
        assert cloned.get_params() == est.get_params()

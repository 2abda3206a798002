"""Maximum-likelihood fitting of discrete gamma-Lomax parameters to count
data, plus a scikit-learn-compatible estimator wrapper.

Optimization runs in log-parameter space (positivity for free) with
derivative-free Nelder-Mead simplex descent from a deterministic multi-start
design, so a fixed seed reproduces the fit exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np
from scipy.optimize import minimize

from .dgld import DiscreteGammaLomax
from .errors import DegenerateDataError, DomainError
from .glomax import Params

_LOG_PARAM_LIMIT = 40.0
_JITTER_SCALE = 0.1


class CountSample:
    """A data set of non-negative integer observations.

    Accepts a flat sequence of observations or (via ``from_table``) a
    frequency table; both encodings canonicalize to sorted distinct values
    with positive integer counts, so likelihood evaluation is independent of
    the encoding.
    """

    def __init__(self, observations):
        values = _as_count_values(observations)
        if values.size == 0:
            raise DomainError("at least one observation is required")
        self.values, self.counts = np.unique(values, return_counts=True)
        self.n = int(self.counts.sum())

    @classmethod
    def from_table(cls, table) -> "CountSample":
        """Build from {value: count} or an iterable of (value, count) pairs."""
        pairs = table.items() if hasattr(table, "items") else table
        values: dict[int, int] = {}
        total = 0
        for value, count in pairs:
            v = _as_count_scalar(value, "value")
            k = _as_count_scalar(count, "count")
            if k < 1:
                raise DomainError(f"counts must be >= 1; got {count} for value {value}")
            values[v] = values.get(v, 0) + k
            total += k
        if total == 0:
            raise DomainError("at least one observation is required")
        out = cls.__new__(cls)
        keys = np.array(sorted(values), dtype=np.int64)
        out.values = keys
        out.counts = np.array([values[int(v)] for v in keys], dtype=np.int64)
        out.n = total
        return out

    @property
    def distinct(self) -> int:
        return int(self.values.size)

    @property
    def mean(self) -> float:
        return float(np.dot(self.values, self.counts) / self.n)

    def as_table(self) -> dict[int, int]:
        return {int(v): int(k) for v, k in zip(self.values, self.counts)}

    def __repr__(self):
        return f"CountSample(n={self.n}, distinct={self.distinct})"


def _as_count_scalar(v, name: str) -> int:
    f = float(v)
    if not math.isfinite(f) or f != int(f) or f < 0:
        raise DomainError(f"{name} must be a non-negative integer; got {v}")
    return int(f)


def _as_count_values(observations) -> np.ndarray:
    arr = np.asarray(observations)
    if arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr.ravel()
    if arr.ndim != 1:
        raise DomainError(
            f"observations must be one-dimensional (or a single column); "
            f"got shape {arr.shape}"
        )
    farr = arr.astype(float)
    if np.any(~np.isfinite(farr)) or np.any(farr < 0) or np.any(farr != np.floor(farr)):
        raise DomainError("observations must all be non-negative integers")
    return farr.astype(np.int64)


@dataclass(frozen=True)
class FitResult:
    """Fitted parameters with the attained log-likelihood and diagnostics."""

    params: Params
    log_likelihood: float
    converged: bool
    iterations: int
    n_starts: int

    @property
    def aic(self) -> float:
        """Akaike information criterion, 2k - 2*loglik with k = 3."""
        return 6.0 - 2.0 * self.log_likelihood


def log_likelihood(params, data) -> float:
    """Log-likelihood of count data under a parameter triple.

    Returns -inf if any observed value has numerically zero probability.
    """
    d = params if isinstance(params, DiscreteGammaLomax) else DiscreteGammaLomax.from_params(
        params if isinstance(params, Params) else Params(*params)
    )
    sample = data if isinstance(data, CountSample) else CountSample(data)
    p = d.pmf(sample.values.astype(float))
    if np.any(p <= 0.0):
        return -math.inf
    return float(np.dot(sample.counts, np.log(p)))


def _start_lattice(mean: float) -> list[tuple[float, float, float]]:
    # Covers light/heavy tails, low/high shape and the data's scale.
    return list(
        product((0.3, 1.0), (0.7, 2.0), (0.5 * mean + 0.5, 2.0 * mean + 1.0))
    )


def fit_mle(data, n_starts: int = 8, seed: int = 0) -> FitResult:
    """Fit (c, alpha, theta) by multi-start Nelder-Mead on the log-likelihood.

    Parameters
    ----------
    data : CountSample or array-like of non-negative integers
    n_starts : number of optimizer starts drawn from a fixed design lattice
        perturbed by seeded jitter; the best end point wins, ties broken by
        start index.
    seed : seed for the jitter; the whole fit is deterministic given it.

    Raises DegenerateDataError if the data has fewer than two distinct
    values (the likelihood is then maximized on a parameter boundary).
    """
    sample = data if isinstance(data, CountSample) else CountSample(data)
    if int(n_starts) != n_starts or n_starts < 1:
        raise DomainError(f"n_starts must be an integer >= 1; got {n_starts}")
    if sample.distinct < 2:
        raise DegenerateDataError(
            "fitting requires at least 2 distinct observed values; "
            f"got {sample.distinct}"
        )
    values = sample.values.astype(float)
    counts = sample.counts.astype(float)

    def objective(v: np.ndarray) -> float:
        if np.any(np.abs(v) > _LOG_PARAM_LIMIT):
            return math.inf
        d = DiscreteGammaLomax(*np.exp(v))
        p = d.pmf(values)
        if np.any(p <= 0.0):
            return math.inf
        return -float(np.dot(counts, np.log(p)))

    rng = np.random.default_rng(seed)
    lattice = _start_lattice(sample.mean)
    best = None
    for k in range(int(n_starts)):
        base = np.log(np.asarray(lattice[k % len(lattice)], dtype=float))
        v0 = base + _JITTER_SCALE * rng.standard_normal(3)
        res = minimize(
            objective,
            v0,
            method="Nelder-Mead",
            options={"xatol": 1e-6, "fatol": 1e-12, "maxiter": 500, "maxfev": 2000},
        )
        ll = -float(res.fun)
        key = (ll, -k)
        if best is None or key > best[0]:
            best = (key, res)
    res = best[1]
    c, alpha, theta = np.exp(res.x)
    params = Params(float(c), float(alpha), float(theta))
    return FitResult(
        params=params,
        log_likelihood=log_likelihood(params, sample),
        converged=bool(res.success),
        iterations=int(res.nit),
        n_starts=int(n_starts),
    )


class DgldEstimator:
    """Scikit-learn style wrapper around ``fit_mle``.

    Implements fit / score_samples / score / sample and the
    get_params/set_params protocol, so it composes with scikit-learn
    pipelines and model-selection utilities without requiring scikit-learn
    itself.  Fitted state lives in trailing-underscore attributes.
    """

    def __init__(self, n_starts: int = 8, seed: int = 0):
        self.n_starts = n_starts
        self.seed = seed

    def get_params(self, deep: bool = True) -> dict:
        return {"n_starts": self.n_starts, "seed": self.seed}

    def set_params(self, **params) -> "DgldEstimator":
        for key, value in params.items():
            if key not in ("n_starts", "seed"):
                raise ValueError(f"unknown parameter {key!r} for DgldEstimator")
            setattr(self, key, value)
        return self

    def fit(self, X, y=None) -> "DgldEstimator":
        """Fit to a 1-D array (or single-column matrix) of counts."""
        sample = CountSample(X)
        self.result_ = fit_mle(sample, n_starts=self.n_starts, seed=self.seed)
        self.params_ = self.result_.params
        self.log_likelihood_ = self.result_.log_likelihood
        self.converged_ = self.result_.converged
        self.distribution_ = DiscreteGammaLomax.from_params(self.params_)
        return self

    def _check_fitted(self):
        if not hasattr(self, "distribution_"):
            raise RuntimeError("DgldEstimator is not fitted yet; call fit first")

    def score_samples(self, X) -> np.ndarray:
        """Per-observation log probability mass."""
        self._check_fitted()
        values = _as_count_values(X).astype(float)
        with np.errstate(divide="ignore"):
            return np.log(self.distribution_.pmf(values))

    def score(self, X, y=None) -> float:
        """Total log-likelihood of X under the fitted distribution."""
        return float(np.sum(self.score_samples(X)))

    def sample(self, n_samples: int = 1, random_state=None) -> np.ndarray:
        """Draw n_samples counts from the fitted distribution."""
        self._check_fitted()
        return self.distribution_.sample(random_state, size=int(n_samples))

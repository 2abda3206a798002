"""Continuous gamma-Lomax distribution, the base the discrete law is built on.

If G ~ Gamma(alpha, 1), then X = theta * (exp(c * G) - 1) has this
distribution; all evaluation goes through log1p(x / theta) so precision is
preserved for x much smaller than theta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sp

from .errors import DomainError
from .specfun import as_generator, log_gamma, sample_gamma


@dataclass(frozen=True)
class Params:
    """Parameter triple (c, alpha, theta); all strictly positive and finite.

    c controls the polynomial tail (the tail index is 1/c), alpha is the
    gamma shape, theta the scale.
    """

    c: float
    alpha: float
    theta: float

    def __post_init__(self):
        for name in ("c", "alpha", "theta"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(
                    f"{name} must be a positive finite real; got {getattr(self, name)}"
                )
            object.__setattr__(self, name, v)


class GammaLomax:
    """Continuous gamma-Lomax law with density proportional to
    (1 + x/theta)^(-1/c) * log(1 + x/theta)^(alpha - 1) / (x + theta)."""

    def __init__(self, c, alpha, theta):
        self.params = Params(c, alpha, theta)
        self._lgamma_alpha = log_gamma(self.params.alpha)

    @classmethod
    def from_params(cls, params: Params) -> "GammaLomax":
        return cls(params.c, params.alpha, params.theta)

    @property
    def c(self) -> float:
        return self.params.c

    @property
    def alpha(self) -> float:
        return self.params.alpha

    @property
    def theta(self) -> float:
        return self.params.theta

    def _u(self, x):
        """Map to the gamma scale: u = log1p(x / theta) / c."""
        return np.log1p(np.asarray(x, dtype=float) / self.theta) / self.c

    def pdf(self, x):
        """Density at x >= 0.

        At x = 0 the density is 0 for alpha > 1, 1/(c*theta) for alpha = 1,
        and diverges (returns inf) for alpha < 1.
        """
        arr = np.asarray(x, dtype=float)
        if np.any(np.isnan(arr)) or np.any(arr < 0.0):
            raise DomainError("x must be >= 0")
        c, alpha, theta = self.c, self.alpha, self.theta
        big_l = np.log1p(arr / theta)
        with np.errstate(divide="ignore"):
            ln_l = np.log(big_l)
        shape_term = 0.0 if alpha == 1.0 else (alpha - 1.0) * ln_l
        log_f = (
            -np.log(arr + theta)
            - self._lgamma_alpha
            - alpha * math.log(c)
            - big_l / c
            + shape_term
        )
        out = np.exp(log_f)
        return float(out) if arr.ndim == 0 else out

    def cdf(self, x):
        """Distribution function; 0 for x <= 0, increasing to 1."""
        arr = np.asarray(x, dtype=float)
        clipped = np.maximum(arr, 0.0)
        out = sp.gammainc(self.alpha, self._u(clipped))
        out = np.where(np.isnan(arr), np.nan, out)
        return float(out) if arr.ndim == 0 else out

    def quantile(self, q) -> float:
        """Inverse cdf for q in [0, 1); quantile(0) = 0."""
        qv = float(q)
        if not (0.0 <= qv < 1.0):
            raise DomainError(f"q must lie in [0, 1); got {q}")
        u = float(sp.gammaincinv(self.alpha, qv))
        return self.theta * math.expm1(self.c * u)

    def sample(self, rng=None, size: int | None = None):
        """Exact draw(s) via X = theta * expm1(c * G) with G ~ Gamma(alpha, 1)."""
        g = sample_gamma(self.alpha, as_generator(rng), size)
        if size is None:
            return self.theta * math.expm1(self.c * g)
        return self.theta * np.expm1(self.c * g)

    def mode(self) -> float:
        """Argmax of the density: 0 for alpha <= 1, else
        theta * (exp(c*(alpha-1)/(c+1)) - 1)."""
        if self.alpha <= 1.0:
            return 0.0
        return self.theta * math.expm1(self.c * (self.alpha - 1.0) / (self.c + 1.0))

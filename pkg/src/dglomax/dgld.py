"""Discrete gamma-Lomax distribution: the law of floor(Y) where Y follows
the continuous gamma-Lomax distribution.

Conventions
-----------
* support is {0, 1, 2, ...}
* survival(x) = P(X >= x), so hazard(x) = pmf(x) / survival(x)
* cdf is the right-continuous step function P(X <= floor(x))

The tail index is 1/c: the r-th moment exists iff c < 1/r, the cumulative
residual entropy is finite iff c < 1, and E[exp(tX)] diverges for every
t > 0.  All infinite sums are truncated adaptively with certified bounds
(see ``_tail``); operations that sum a series return a ``TailSum`` carrying
the achieved bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

import numpy as np
import scipy.special as sp

from ._tail import TailSum, block_sum, certified_sum
from .errors import (
    DivergenceError,
    DomainError,
    ExistenceError,
    SaturationError,
)
from .glomax import GammaLomax, Params
from .specfun import Accuracy, as_generator

_PMF_FLUSH = 1e-300


@dataclass(frozen=True)
class MomentSpec:
    """Order and truncation tolerance for a moment computation."""

    r: int
    tail_tol: float = 1e-8

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 1:
            raise DomainError(f"moment order r must be an integer >= 1; got {self.r}")
        _check_tail_tol(self.tail_tol)


def _check_tail_tol(tol) -> float:
    t = float(tol)
    if not (0.0 < t <= 1e-4):
        raise DomainError(f"tail_tol must lie in (0, 1e-4]; got {tol}")
    return t


class DiscreteGammaLomax:
    """Validated handle for a discrete gamma-Lomax law.

    Immutable after construction; evaluation methods are pure, so instances
    are safe to share across threads.  Sampling takes a caller-owned
    generator (or seed).
    """

    def __init__(self, c, alpha, theta, accuracy: Accuracy | None = None):
        self.continuous = GammaLomax(c, alpha, theta)
        self.params = self.continuous.params
        self.lgamma_alpha = self.continuous._lgamma_alpha
        self.accuracy = accuracy

    @classmethod
    def from_params(cls, params: Params) -> "DiscreteGammaLomax":
        return cls(params.c, params.alpha, params.theta)

    def __repr__(self):
        p = self.params
        return f"DiscreteGammaLomax(c={p.c!r}, alpha={p.alpha!r}, theta={p.theta!r})"

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
        return np.log1p(np.asarray(x, dtype=float) / self.theta) / self.c

    # -- pointwise evaluation ------------------------------------------------

    def pmf(self, x):
        """P(X = x); zero off the support.

        Computed as a difference of regularized incomplete gammas, switching
        to the upper-tail complement once the cdf passes 1/2 so the result
        stays relatively accurate deep in the tail.
        """
        arr = np.asarray(x, dtype=float)
        a = np.atleast_1d(arr)
        out = np.zeros(a.shape)
        ok = np.isfinite(a) & (a >= 0.0) & (a == np.floor(a))
        if np.any(ok):
            xv = a[ok]
            u0 = self._u(xv)
            u1 = self._u(xv + 1.0)
            p0 = sp.gammainc(self.alpha, u0)
            head = p0 <= 0.5
            vals = np.empty_like(xv)
            if np.any(head):
                vals[head] = sp.gammainc(self.alpha, u1[head]) - p0[head]
            tail = ~head
            if np.any(tail):
                vals[tail] = sp.gammaincc(self.alpha, u0[tail]) - sp.gammaincc(
                    self.alpha, u1[tail]
                )
            vals = np.maximum(vals, 0.0)
            vals[vals < _PMF_FLUSH] = 0.0
            out[ok] = vals
        return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)

    def cdf(self, x):
        """P(X <= x): a step function, constant on [k, k+1)."""
        arr = np.asarray(x, dtype=float)
        k = np.floor(np.maximum(arr, -1.0))
        out = sp.gammainc(self.alpha, self._u(np.maximum(k + 1.0, 0.0)))
        out = np.where(arr < 0.0, 0.0, out)
        out = np.where(np.isnan(arr), np.nan, out)
        return float(out[()]) if arr.ndim == 0 else out

    def survival(self, x):
        """P(X >= x) for integer x; 1 for x <= 0."""
        arr = np.asarray(x, dtype=float)
        out = sp.gammaincc(self.alpha, self._u(np.maximum(arr, 0.0)))
        out = np.where(np.isnan(arr), np.nan, out)
        return float(out[()]) if arr.ndim == 0 else out

    def hazard(self, x):
        """Conditional failure probability P(X = x) / P(X >= x), in [0, 1]."""
        arr = np.asarray(x, dtype=float)
        if np.any(~np.isfinite(arr)) or np.any(arr < 0.0) or np.any(arr != np.floor(arr)):
            raise DomainError("hazard is defined for integer x >= 0")
        s = self.survival(arr)
        if np.any(np.asarray(s) == 0.0):
            raise SaturationError(
                "survival underflowed to 0; hazard is numerically saturated"
            )
        out = np.clip(self.pmf(arr) / s, 0.0, 1.0)
        return float(out) if arr.ndim == 0 else out

    def mode(self) -> int:
        """Smallest integer maximizing the pmf.

        The pmf is unimodal with mode within one of
        x0 = theta * (exp(c*(alpha-1)/(c+1)) - 1); the candidates
        {floor(x0)-1, floor(x0), floor(x0)+1} are clamped to the support and
        scanned, ties broken toward the smaller integer.
        """
        x0 = self.continuous.mode() if self.alpha > 1.0 else 0.0
        k = int(math.floor(x0))
        candidates = sorted({max(0, k - 1), max(0, k), max(0, k + 1)})
        best, best_p = candidates[0], -1.0
        for cand in candidates:
            p = self.pmf(cand)
            if p > best_p:
                best, best_p = cand, p
        return best

    def quantile(self, q) -> int:
        """Smallest integer x with cdf(x) >= q, for q in [0, 1).

        The comparison absorbs cdf roundoff with a 1e-12 slack, so exact
        knife-edge cases (true cdf(x) equal to q) resolve the way exact
        arithmetic would.
        """
        qv = float(q)
        if not (0.0 <= qv < 1.0):
            raise DomainError(f"q must lie in [0, 1); got {q}")
        target = qv - 1e-12
        if self.cdf(0) >= target:
            return 0
        lo, hi = 0, 1
        while self.cdf(hi) < target:
            lo, hi = hi, hi * 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.cdf(mid) >= target:
                hi = mid
            else:
                lo = mid
        return hi

    def sample(self, rng=None, size: int | None = None):
        """Exact draw(s): the floor of a continuous gamma-Lomax draw."""
        y = self.continuous.sample(as_generator(rng), size)
        if size is None:
            return int(math.floor(y))
        return np.floor(y).astype(np.int64)

    # -- series quantities ---------------------------------------------------

    def moment_exists(self, r) -> bool:
        """True iff the r-th raw moment is finite, i.e. c < 1/r."""
        if int(r) != r or r < 1:
            raise DomainError(f"moment order r must be an integer >= 1; got {r}")
        return self.c < 1.0 / r

    def _tail_power_expect(self, t: float, r: int, shift: float) -> float:
        # Closed form for E[(theta*e^{cG} - shift)^r ; Y >= t] with
        # G ~ Gamma(alpha, 1) and Y = theta*(e^{cG} - 1); finite for rc < 1.
        u = float(self._u(t))
        total = 0.0
        for j in range(r + 1):
            lam = 1.0 - j * self.c
            w = comb(r, j) * self.theta**j * (-shift) ** (r - j)
            total += w * lam**-self.alpha * float(sp.gammaincc(self.alpha, lam * u))
        return total

    def moment(self, r, tail_tol: float = 1e-8) -> TailSum:
        """r-th raw moment E[X^r] by adaptive summation of x^r * pmf(x).

        The omitted tail over x > n is sandwiched between the closed-form
        continuous envelopes E[(Y-1)^r; Y >= n+1] and E[Y^r; Y >= n+1]
        (pathwise Y-1 < X <= Y), so the returned bound is rigorous.
        Raises ExistenceError unless c < 1/r.
        """
        spec = MomentSpec(int(r), tail_tol)
        if not self.moment_exists(spec.r):
            raise ExistenceError(
                f"the moment of order r={spec.r} exists only if c < 1/r; "
                f"got c={self.c} >= {1.0 / spec.r}"
            )
        rr = spec.r

        def f(x):
            return x**rr * self.pmf(x)

        def bracket(n):
            t = n + 1.0
            hi = self._tail_power_expect(t, rr, self.theta)
            lo = max(self._tail_power_expect(t, rr, self.theta + 1.0), 0.0)
            return lo, max(hi, lo)

        return certified_sum(f, bracket, spec.tail_tol, self.accuracy)

    def factorial_moment(self, r, tail_tol: float = 1e-8) -> TailSum:
        """Descending factorial moment E[X (X-1) ... (X-r+1)].

        Same adaptive scheme as ``moment``; the tail envelopes use
        (Y-r)^r <= x(x-1)...(x-r+1) <= Y^r on the tail event.
        """
        spec = MomentSpec(int(r), tail_tol)
        if not self.moment_exists(spec.r):
            raise ExistenceError(
                f"the factorial moment of order r={spec.r} exists only if "
                f"c < 1/r; got c={self.c} >= {1.0 / spec.r}"
            )
        rr = spec.r

        def f(x):
            w = np.ones_like(x)
            for i in range(rr):
                w = w * (x - i)
            return w * self.pmf(x)

        def bracket(n):
            t = n + 1.0
            hi = max(self._tail_power_expect(t, rr, self.theta), 0.0)
            lo = 0.0
            if t >= rr:
                lo = max(self._tail_power_expect(t, rr, self.theta + rr), 0.0)
            return lo, max(hi, lo)

        return certified_sum(f, bracket, spec.tail_tol, self.accuracy)

    def pgf(self, s, tail_tol: float = 1e-10) -> TailSum:
        """Probability generating function E[s^X] for |s| <= 1.

        The radius of convergence is exactly 1 (polynomial tail), so |s| > 1
        is a domain error.  pgf(1) is exactly 1; for s in [0, 1) the omitted
        tail is at most s^(n+1) * survival(n+1); for s < 0 the alternating
        remainder is bounded by its first omitted term once the pmf is past
        its mode.
        """
        sv = float(s)
        if not (-1.0 <= sv <= 1.0):
            raise DomainError(
                f"pgf requires |s| <= 1 (radius of convergence 1); got {s}"
            )
        tol = _check_tail_tol(tail_tol)
        if sv == 1.0:
            return TailSum(1.0, 0.0, 0)

        def f(x):
            return np.power(sv, x) * self.pmf(x)

        if sv >= 0.0:

            def bracket(n):
                return 0.0, sv ** (n + 1) * self.survival(n + 1)

        else:
            past_peak = int(math.floor(self.continuous.mode())) + 2

            def bracket(n):
                if n < past_peak:
                    return -math.inf, math.inf
                t1 = sv ** (n + 1) * self.pmf(n + 1)
                return min(t1, 0.0), max(t1, 0.0)

        return certified_sum(f, bracket, tol, self.accuracy)

    def mgf(self, t, tail_tol: float = 1e-10) -> TailSum:
        """Moment generating function E[exp(tX)] for t <= 0.

        Diverges for every t > 0 because the tail is polynomial; implemented
        as pgf(exp(t)) since the series coincide term by term.
        """
        tv = float(t)
        if math.isnan(tv):
            raise DomainError("t must not be NaN")
        if tv > 0.0:
            raise DivergenceError(
                f"E[exp(tX)] diverges for every t > 0 (polynomial tail); got t={t}"
            )
        return self.pgf(math.exp(tv), tail_tol)

    def cre_entropy(self, tail_tol: float = 1e-6) -> TailSum:
        """Cumulative residual entropy -sum P(X>x) log P(X>x) over x >= 0.

        Finite iff c < 1: P(X>x) decays like x^(-1/c) (up to a log power),
        so the series converges exactly when 1/c > 1.  The omitted tail is
        bounded through the decreasing integrable envelope
        C * w^(alpha-1) * (w + ...) * e^(-w) of -Q(alpha, w) log Q(alpha, w)
        on the gamma scale, which integrates to an incomplete gamma in
        closed form.
        """
        tol = _check_tail_tol(tail_tol)
        c, alpha, theta = self.c, self.alpha, self.theta
        if c >= 1.0:
            raise DivergenceError(
                f"cumulative residual entropy is finite only if c < 1; got c={c}"
            )
        lg = self.lgamma_alpha
        c_hat = (2.0 if alpha > 1.0 else 1.0) * math.exp(-lg)
        w_min = max(2.0, alpha + 2.0, 2.0 * (alpha - 1.0))
        log1mc = math.log(1.0 - c)
        scale = theta * c * math.exp(sp.gammaln(alpha + 1.0) - (alpha + 1.0) * log1mc)

        def f(x):
            s = sp.gammaincc(alpha, self._u(x + 1.0))
            with np.errstate(divide="ignore", invalid="ignore"):
                phi = np.where(s > 0.0, -s * np.log(s), 0.0)
            return phi

        def bracket(n):
            w = float(self._u(n + 1.0))
            if w < w_min:
                return 0.0, math.inf
            kappa = 1.0 + (1.0 + abs(1.0 - alpha) * math.log(w + 1.0) + abs(lg)) / w
            hi = scale * c_hat * kappa * float(sp.gammaincc(alpha + 1.0, (1.0 - c) * w))
            return 0.0, hi

        return certified_sum(f, bracket, tol, self.accuracy)

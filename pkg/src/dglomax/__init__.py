"""Discrete gamma-Lomax distribution toolkit.

A heavy-tailed count model obtained as the integer part of a continuous
gamma-Lomax variable, with exact evaluation (pmf, cdf, survival, hazard),
exact sampling, modes, certified moments and entropy, order statistics,
stochastic-dominance checks, and maximum-likelihood fitting.
"""

from ._tail import TailSum
from .dgld import DiscreteGammaLomax, MomentSpec
from .errors import (
    DataFormatError,
    DegenerateDataError,
    DglomaxError,
    DivergenceError,
    DomainError,
    ExistenceError,
    HorizonError,
    SaturationError,
    TruncationError,
)
from .estimate import CountSample, DgldEstimator, FitResult, fit_mle, log_likelihood
from .glomax import GammaLomax, Params
from .ordering import (
    CROSSING,
    FIRST_DOMINATES,
    INDISTINGUISHABLE,
    SECOND_DOMINATES,
    DominanceReport,
    ExpectationReport,
    expectation_compare,
    stochastic_compare,
)
from .orderstats import (
    HeteroParams,
    OrderSpec,
    max_pmf,
    min_pmf,
    order_stat_pmf,
    range_zero_prob,
)
from .specfun import Accuracy

__version__ = "0.1.0"

__all__ = [
    "Accuracy",
    "CountSample",
    "CROSSING",
    "DataFormatError",
    "DegenerateDataError",
    "DgldEstimator",
    "DglomaxError",
    "DiscreteGammaLomax",
    "DivergenceError",
    "DomainError",
    "DominanceReport",
    "ExistenceError",
    "ExpectationReport",
    "FIRST_DOMINATES",
    "FitResult",
    "GammaLomax",
    "HeteroParams",
    "HorizonError",
    "INDISTINGUISHABLE",
    "MomentSpec",
    "OrderSpec",
    "Params",
    "SECOND_DOMINATES",
    "SaturationError",
    "TailSum",
    "TruncationError",
    "expectation_compare",
    "fit_mle",
    "log_likelihood",
    "max_pmf",
    "min_pmf",
    "order_stat_pmf",
    "range_zero_prob",
    "stochastic_compare",
]

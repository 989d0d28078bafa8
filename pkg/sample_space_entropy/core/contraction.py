"""
Exponential contraction of the sample space.

Halving a sample space of size s0 n times leaves s0 / 2**n outcomes, so the
probability of the determined outcome grows as 2**n / s0 while the entropy
change relative to the reference state is -n * ln(2). The process stops once
the probability reaches 1, at t_max = ln(s0) / ln(2) for one halving per unit
time, not its reciprocal: a space of 1000 outcomes is exhausted after about
ten halvings.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from sample_space_entropy.const import LN2, LOGGER
from sample_space_entropy.data import ContractionModel
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError, SampleSpaceEntropyValidationError
from sample_space_entropy.utils import ensure_nonnegative_time, ensure_positive

# Relative slack on t_max so a time computed from t_max itself is accepted
_T_MAX_SLACK = 1e-12


class ContractionState(NamedTuple):
    """One point of a contraction trajectory."""

    t: float
    size: float
    probability: float
    entropy: float


def contraction_t_max(s0: int, rate: float = 1.0) -> float:
    """
    Return the stopping time ln(s0) / (rate * ln 2).

    Args:
        s0: Initial sample-space size, an integer >= 2.
        rate: Combined halving rate per unit time.

    Raises:
        SampleSpaceEntropyValidationError: If s0 < 2 or rate <= 0.

    Example:
        >>> contraction_t_max(1024)
        10.0

    """
    return ContractionModel(s0, rate).t_max


def _check_contraction_time(model: ContractionModel, t: float) -> float:
    t = ensure_nonnegative_time(t, "t", ceiling=None)
    if t > model.t_max * (1.0 + _T_MAX_SLACK):
        msg = (
            f"t={t} exceeds t_max={model.t_max:.9g} for s0={model.s0}; "
            "the contraction stops once p(x0|s_n) reaches 1"
        )
        raise SampleSpaceEntropyDomainError(msg)
    return min(t, model.t_max)


def contraction_probability(model: ContractionModel, t: float) -> float:
    """
    Return p(x0|t) = exp(rate * t * ln 2) / s0.

    Returns:
        Probability in (0, 1]; 1/s0 at t = 0 and 1 at t = t_max.

    Raises:
        SampleSpaceEntropyDomainError: If t lies outside [0, t_max].

    """
    t = _check_contraction_time(model, t)
    return min(math.exp(model.rate * t * LN2) / model.s0, 1.0)


def contraction_entropy(t: float, rate: float = 1.0) -> float:
    """
    Return the entropy change H(t) = -rate * t * ln 2 in nats.

    The value is negative: it measures the entropy removed relative to the
    reference sample space, not an absolute Shannon entropy.

    Raises:
        SampleSpaceEntropyDomainError: If t is negative or rate is not positive.

    """
    t = ensure_nonnegative_time(t, "t", ceiling=None)
    rate = ensure_positive(rate, "rate")
    return -rate * t * LN2


def contraction_sample_space_size(model: ContractionModel, t: float) -> float:
    """
    Return the remaining sample-space size s0 * 2**(-rate * t).

    Raises:
        SampleSpaceEntropyDomainError: If t lies outside [0, t_max].

    """
    t = _check_contraction_time(model, t)
    return max(model.s0 * math.exp(-model.rate * t * LN2), 1.0)


def contraction_state(model: ContractionModel, t: float) -> ContractionState:
    """
    Return size, probability and entropy change at time t.

    Raises:
        SampleSpaceEntropyDomainError: If t lies outside [0, t_max].

    """
    return ContractionState(
        t,
        contraction_sample_space_size(model, t),
        contraction_probability(model, t),
        contraction_entropy(t, model.rate),
    )


def contraction_trajectory(model: ContractionModel, step: float = 1.0) -> list[ContractionState]:
    """
    Trace the contraction from t = 0 until the probability reaches 1.

    Args:
        model: The contraction model.
        step: Time between consecutive points, > 0.

    Returns:
        States at 0, step, 2*step, ... below t_max, followed by the state at t_max.

    Raises:
        SampleSpaceEntropyValidationError: If step is not positive.

    """
    if not (math.isfinite(step) and step > 0.0):
        msg = f"step must be > 0, got {step}"
        raise SampleSpaceEntropyValidationError(msg)

    count = math.ceil(model.t_max / step)
    times = [index * step for index in range(count) if index * step < model.t_max]
    times.append(model.t_max)
    LOGGER.debug("Contraction of s0=%d traced over %d points up to t_max=%g", model.s0, len(times), model.t_max)
    return [contraction_state(model, t) for t in times]

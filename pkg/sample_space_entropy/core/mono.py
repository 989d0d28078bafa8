"""
Mono-exponential expansion of the sample space.

Under time scaling T = lambda * t every mono-exponential process collapses
onto p(x0|T) = exp(-T) and H(T) = T, with entropy in nats.
"""

from __future__ import annotations

import math

from sample_space_entropy.const import LOGGER
from sample_space_entropy.data import MonoExpModel
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError
from sample_space_entropy.utils import ensure_finite, ensure_nonnegative_time


def scaled_time(rate: float, t: float) -> float:
    """
    Convert a time into scaled time T = rate * t.

    Raises:
        SampleSpaceEntropyDomainError: If t is negative or either argument is not finite.

    """
    rate = ensure_finite(rate, "lambda")
    t = ensure_nonnegative_time(t, "t", ceiling=None)
    return ensure_nonnegative_time(rate * t)


def probability_mono(scaled: float) -> float:
    """
    Return p(x0|T) = exp(-T) for a mono-exponentially expanding sample space.

    Args:
        scaled: Scaled time T >= 0.

    Returns:
        Probability in (0, 1]; exactly 1 at T = 0. Underflows to 0 for very large T.

    Raises:
        SampleSpaceEntropyDomainError: If T is negative or not finite.

    """
    return math.exp(-ensure_nonnegative_time(scaled))


def entropy_mono(scaled: float) -> float:
    """
    Return H(T) = T, the information entropy in nats after scaled time T.

    Raises:
        SampleSpaceEntropyDomainError: If T is negative or not finite.

    """
    return ensure_nonnegative_time(scaled)


def entropy_from_probability(probability: float) -> float:
    """
    Return -ln(p) for a cumulative partition probability p in (0, 1].

    Raises:
        SampleSpaceEntropyDomainError: If p lies outside (0, 1].

    """
    probability = ensure_finite(probability, "p")
    if not 0.0 < probability <= 1.0:
        msg = f"probability must lie in (0, 1], got {probability}"
        raise SampleSpaceEntropyDomainError(msg)
    return -math.log(probability)


def sample_space_size(model: MonoExpModel, t: float) -> float:
    """
    Return the sample-space size s0 * exp(lambda * t).

    Args:
        model: The expansion model.
        t: Time since the reference state, >= 0.

    Returns:
        The size in the units of s0; infinity once it exceeds the float range.

    Raises:
        SampleSpaceEntropyDomainError: If t is negative or not finite.

    """
    scaled = scaled_time(model.rate, t)
    try:
        return model.s0 * math.exp(scaled)
    except OverflowError:
        LOGGER.warning("Sample-space size overflows at T=%g, reporting infinity", scaled)
        return math.inf

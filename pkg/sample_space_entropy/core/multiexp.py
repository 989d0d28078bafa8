"""
Multi-exponential expansion of the sample space.

The probability of the determined outcome decays as a weighted sum of
exponentials, p(x0|T) = sum_i A_i * exp(-c_i * T), with sum(A_i) = 1 and the
fastest component scaled to c_1 = 1. All functions here take scaled time T.

Entropy is evaluated directly as -ln(p) while p is representable and through
the log-sum-exp form

    H(T) = c_n * T - ln(A_n) - ln(1 + sum_{i<n} (A_i / A_n) * exp(-(c_i - c_n) * T))

once p underflows, where component n has the smallest rate constant. The
correction term tends to zero, which is why H(T) approaches the straight line
c_n * T - ln(A_n) for large T.
"""

from __future__ import annotations

import math

from sample_space_entropy.const import LOGGER, PROBABILITY_UNDERFLOW_GUARD
from sample_space_entropy.data import MultiExpModel
from sample_space_entropy.exceptions import SampleSpaceEntropyDomainError
from sample_space_entropy.utils import ensure_finite, ensure_nonnegative_time, ensure_positive


def multiexp_probability(model: MultiExpModel, scaled: float) -> float:
    """
    Return p(x0|T) for a multi-exponential model.

    Args:
        model: The multi-exponential model.
        scaled: Scaled time T >= 0.

    Returns:
        Probability in (0, 1], exactly 1 at T = 0. Reported as 0 once it underflows.

    Raises:
        SampleSpaceEntropyDomainError: If T is negative or not finite.

    """
    scaled = ensure_nonnegative_time(scaled)
    if scaled == 0.0:
        return 1.0
    # weights may sum to a hair above 1 after renormalization
    return min(math.fsum(weight * math.exp(-rate * scaled) for weight, rate in model.components), 1.0)


def _log_probability(model: MultiExpModel, scaled: float) -> float:
    """Return ln p(x0|T) factored around the slowest component."""
    slow_weight, slow_rate = model.slowest
    correction = math.fsum(
        (weight / slow_weight) * math.exp(-(rate - slow_rate) * scaled) for weight, rate in model.components[:-1]
    )
    return -slow_rate * scaled + math.log(slow_weight) + math.log1p(correction)


def multiexp_entropy(model: MultiExpModel, scaled: float) -> float:
    """
    Return H(T) = -ln(sum_i A_i * exp(-c_i * T)) in nats.

    Raises:
        SampleSpaceEntropyDomainError: If T is negative or not finite.

    """
    probability = multiexp_probability(model, scaled)
    if probability == 1.0:
        return 0.0
    if probability >= PROBABILITY_UNDERFLOW_GUARD:
        return -math.log(probability)
    LOGGER.debug("p(x0|T=%g) underflows, using the log-sum-exp form of H(T)", scaled)
    return -_log_probability(model, scaled)


def multiexp_entropy_asymptote(model: MultiExpModel, scaled: float) -> float:
    """
    Return the large-T entropy line c_n * T - ln(A_n).

    Component n is the one with the smallest rate constant. For a single
    component model this is exact at every T.

    Raises:
        SampleSpaceEntropyDomainError: If T is not finite.

    """
    scaled = ensure_finite(scaled, "T")
    weight, rate = model.slowest
    return rate * scaled - math.log(weight)


def mrt_closed_form(model: MultiExpModel) -> float:
    """
    Return the mean residence time of the sample space in scaled time.

    MRT = integral(T * p) / integral(p) over [0, inf), which for a
    multi-exponential model is sum(A_i / c_i**2) / sum(A_i / c_i).

    Example:
        >>> mrt_closed_form(MultiExpModel.from_pairs([(0.5, 1.0), (0.5, 0.5)]))
        1.6666666666666667

    """
    first_moment = math.fsum(weight / rate**2 for weight, rate in model.components)
    area = math.fsum(weight / rate for weight, rate in model.components)
    return first_moment / area


def normalized_entropy(model: MultiExpModel, scaled: float, t_max: float) -> float:
    """
    Return H(T) / H(T_max), the entropy normalized to an arbitrary horizon.

    Args:
        model: The multi-exponential model.
        scaled: Scaled time T with 0 <= T <= T_max.
        t_max: The normalization horizon T_max > 0.

    Returns:
        A value in [0, 1]; 0 at T = 0 and 1 at T = T_max.

    Raises:
        SampleSpaceEntropyDomainError: If T_max <= 0 or T lies outside [0, T_max].

    """
    t_max = ensure_positive(t_max, "T_max")
    scaled = ensure_nonnegative_time(scaled)
    if scaled > t_max:
        msg = f"T must be <= T_max ({t_max}), got {scaled}"
        raise SampleSpaceEntropyDomainError(msg)
    if scaled == t_max:
        return 1.0
    return min(multiexp_entropy(model, scaled) / multiexp_entropy(model, t_max), 1.0)


def multiexp_sample_space_size(model: MultiExpModel, s0: float, scaled: float) -> float:
    """
    Return the sample-space size s0 / p(x0|T).

    Evaluated as s0 * exp(H(T)) so the size stays defined where p underflows;
    sizes beyond the float range are reported as infinity.

    Raises:
        SampleSpaceEntropyDomainError: If s0 is not positive or T is invalid.

    """
    s0 = ensure_positive(s0, "s0")
    entropy = multiexp_entropy(model, scaled)
    try:
        return s0 * math.exp(entropy)
    except OverflowError:
        LOGGER.warning("Sample-space size overflows at T=%g, reporting infinity", scaled)
        return math.inf


def multiexp_log10_sample_space_size(model: MultiExpModel, s0: float, scaled: float) -> float:
    """Return log10 of the sample-space size, finite for every admissible T."""
    s0 = ensure_positive(s0, "s0")
    return math.log10(s0) + multiexp_entropy(model, scaled) / math.log(10.0)


def multiexp_component_probabilities(model: MultiExpModel, scaled: float) -> list[float]:
    """Return each component's term A_i * exp(-c_i * T), in storage order."""
    scaled = ensure_nonnegative_time(scaled)
    return [weight * math.exp(-rate * scaled) for weight, rate in model.components]


def multiexp_component_entropies(model: MultiExpModel, scaled: float) -> list[float]:
    """
    Return each component's share of H(T), in storage order.

    The share of component i is H(T) * w_i, where w_i is the component's
    fraction of p(x0|T). Shares are built from log-space weights so they stay
    finite when p underflows, and they always add up to H(T).
    """
    scaled = ensure_nonnegative_time(scaled)
    entropy = multiexp_entropy(model, scaled)
    log_total = -entropy
    return [
        entropy * math.exp(math.log(weight) - rate * scaled - log_total) for weight, rate in model.components
    ]

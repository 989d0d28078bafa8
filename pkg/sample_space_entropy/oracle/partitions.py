"""
Brute-force enumeration of the doubling and halving constructions.

The closed forms in core are checked here against explicit partitions: the
doubling oracle builds all 2**n equally sized partitions and sums -p*ln(p)
over them, the halving oracle splits an integer interval [1, s0] in two n
times. By symmetry it does not matter which partition holds the determined
outcome, so the oracles assert that every partition carries the same
probability instead of tracking it.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

from sample_space_entropy.const import LOGGER, MAX_ENUMERATED_DOUBLINGS
from sample_space_entropy.exceptions import (
    SampleSpaceEntropyDomainError,
    SampleSpaceEntropyNumericalError,
    SampleSpaceEntropyResourceError,
    SampleSpaceEntropyValidationError,
)


@dataclass(frozen=True, slots=True)
class PartitionState:
    """
    State of the sample space after n doublings.

    Attributes:
        n: Number of doublings performed.
        partition_count: Number of equally sized partitions, 2**n.
        cumulative_probability: Probability carried by one partition.
        entropy: Shannon entropy in nats summed over all partitions.

    """

    n: int
    partition_count: int
    cumulative_probability: float
    entropy: float

    def __post_init__(self) -> None:
        """Validate the partition invariants."""
        if self.partition_count != 2**self.n:
            msg = f"{self.partition_count} partitions after {self.n} doublings, expected {2**self.n}"
            raise SampleSpaceEntropyValidationError(msg)
        if abs(self.cumulative_probability * self.partition_count - 1.0) > 1e-12:
            msg = f"partition probabilities sum to {self.cumulative_probability * self.partition_count}"
            raise SampleSpaceEntropyValidationError(msg)


def _check_count(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int | np.integer):
        msg = f"{name} must be an integer, got {n!r}"
        raise SampleSpaceEntropyDomainError(msg)
    if n < 0:
        msg = f"{name} must be >= 0, got {n}"
        raise SampleSpaceEntropyDomainError(msg)
    if n > MAX_ENUMERATED_DOUBLINGS:
        msg = f"{name}={n} exceeds the enumeration bound of {MAX_ENUMERATED_DOUBLINGS} (2**{n} partitions)"
        raise SampleSpaceEntropyResourceError(msg)
    return int(n)


def simulate_doubling(n: int) -> PartitionState:
    """
    Double the sample space n times by explicit partitioning.

    Args:
        n: Number of doublings, 0 <= n <= 20.

    Returns:
        The enumerated state; its probability and entropy match (1/2)**n and n * ln 2.

    Raises:
        SampleSpaceEntropyDomainError: If n is negative or not an integer.
        SampleSpaceEntropyResourceError: If n exceeds the enumeration bound.
        SampleSpaceEntropyNumericalError: If the partitions end up unequal.

    """
    n = _check_count(n)
    LOGGER.debug("Enumerating %d partitions for n=%d", 2**n, n)

    partitions = np.ones(1, dtype=np.float64)
    for _ in range(n):
        # each partition splits into two equally sized, mutually exclusive halves
        partitions = np.repeat(partitions / 2.0, 2)

    if not np.all(partitions == partitions[0]):
        msg = f"partitions carry unequal probabilities after {n} doublings"
        raise SampleSpaceEntropyNumericalError(msg, {"n": n, "min": partitions.min(), "max": partitions.max()})

    entropy = max(0.0, math.fsum((-partitions * np.log(partitions)).tolist()))
    return PartitionState(
        n=n,
        partition_count=int(partitions.size),
        cumulative_probability=float(partitions[0]),
        entropy=entropy,
    )


def simulate_halving(s0: int, n: int) -> float:
    """
    Halve the integer interval [1, s0] n times and return the per-partition probability.

    The interval is enumerated only when 2**n divides s0; otherwise halves
    would be unequal and the continuous value 2**n / s0 is returned.

    Args:
        s0: Initial sample-space size, an integer >= 2.
        n: Number of halvings.

    Returns:
        Probability 2**n / s0 of the determined outcome.

    Raises:
        SampleSpaceEntropyDomainError: If 2**n > s0, i.e. p(x0|s_n) would exceed 1.
        SampleSpaceEntropyResourceError: If n exceeds the enumeration bound.

    """
    if isinstance(s0, bool) or not isinstance(s0, int | np.integer) or s0 < 2:
        msg = f"s0 must be an integer >= 2, got {s0!r}"
        raise SampleSpaceEntropyValidationError(msg)
    if isinstance(n, int) and not isinstance(n, bool) and n >= 0 and 2**n > s0:
        msg = f"2**{n} > s0={s0}: p(x0|s_n) <= 1 is violated"
        raise SampleSpaceEntropyDomainError(msg)
    n = _check_count(n)
    s0 = int(s0)

    if s0 % 2**n:
        LOGGER.debug("2**%d does not divide s0=%d, using the continuous formula", n, s0)
        return 2**n / s0

    intervals = [(1, s0 + 1)]
    for _ in range(n):
        halves = []
        for start, stop in intervals:
            middle = start + (stop - start) // 2
            halves.extend(((start, middle), (middle, stop)))
        intervals = halves

    sizes = {stop - start for start, stop in intervals}
    if len(sizes) != 1:
        msg = f"halving [1, {s0}] {n} times produced unequal partitions {sorted(sizes)}"
        raise SampleSpaceEntropyNumericalError(msg, {"s0": s0, "n": n, "sizes": sorted(sizes)})
    return 1.0 / sizes.pop()

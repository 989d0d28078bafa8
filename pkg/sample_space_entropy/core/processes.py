"""
Simultaneous independent expansion processes.

Independent processes multiply their probabilities and add their entropies,
so the set behaves as one process with the combined rate constant
lambda_c = sum(lambda_i).
"""

from __future__ import annotations

import math
from typing import NamedTuple

from sample_space_entropy.data import ProcessSet
from sample_space_entropy.utils import ensure_nonnegative_time


class ProcessContribution(NamedTuple):
    """Probability and entropy attributable to a single process."""

    probability: float
    entropy: float


def combine_processes(processes: ProcessSet) -> float:
    """
    Return the combined rate constant lambda_c of simultaneous processes.

    Example:
        >>> combine_processes(ProcessSet((0.1, 0.3, 0.6)))
        1.0

    """
    return math.fsum(processes.rates)


def decompose_processes(processes: ProcessSet, t: float) -> list[ProcessContribution]:
    """
    Split the state at time t into per-process contributions.

    Element i is (exp(-lambda_i * t), lambda_i * t). Their product and sum
    reproduce the combined process at lambda_c * t.

    Raises:
        SampleSpaceEntropyDomainError: If t is negative or not finite.

    """
    t = ensure_nonnegative_time(t, "t", ceiling=None)
    return [ProcessContribution(math.exp(-rate * t), rate * t) for rate in processes.rates]

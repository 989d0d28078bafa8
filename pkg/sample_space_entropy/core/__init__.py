"""
Closed-form mathematics of exponentially evolving sample spaces.

Package structure:
- mono.py: Mono-exponential probability, entropy and sample-space size
- processes.py: Simultaneous independent processes and their combined rate
- multiexp.py: Multi-exponential probability, entropy, asymptote, MRT and normalization
- contraction.py: Halving of the sample space and its stopping time

Every function is pure; entropy is measured in nats throughout.
"""

from __future__ import annotations

from .contraction import (
    ContractionState,
    contraction_entropy,
    contraction_probability,
    contraction_sample_space_size,
    contraction_state,
    contraction_t_max,
    contraction_trajectory,
)
from .mono import entropy_from_probability, entropy_mono, probability_mono, sample_space_size, scaled_time
from .multiexp import (
    mrt_closed_form,
    multiexp_component_entropies,
    multiexp_component_probabilities,
    multiexp_entropy,
    multiexp_entropy_asymptote,
    multiexp_log10_sample_space_size,
    multiexp_probability,
    multiexp_sample_space_size,
    normalized_entropy,
)
from .processes import ProcessContribution, combine_processes, decompose_processes

__all__ = [
    "ContractionState",
    "ProcessContribution",
    "combine_processes",
    "contraction_entropy",
    "contraction_probability",
    "contraction_sample_space_size",
    "contraction_state",
    "contraction_t_max",
    "contraction_trajectory",
    "decompose_processes",
    "entropy_from_probability",
    "entropy_mono",
    "mrt_closed_form",
    "multiexp_component_entropies",
    "multiexp_component_probabilities",
    "multiexp_entropy",
    "multiexp_entropy_asymptote",
    "multiexp_log10_sample_space_size",
    "multiexp_probability",
    "multiexp_sample_space_size",
    "normalized_entropy",
    "probability_mono",
    "sample_space_size",
    "scaled_time",
]

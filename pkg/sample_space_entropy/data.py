"""
Domain types for sample_space_entropy.

All types are frozen dataclasses that validate their invariants on
construction, so any instance handed to an operation is already known to be
well formed. Violations raise SampleSpaceEntropyValidationError.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import pairwise
import math
from typing import NamedTuple

from .const import LEADING_RATE_TOLERANCE, LOGGER, WEIGHT_SUM_EXACT, WEIGHT_SUM_TOLERANCE
from .exceptions import SampleSpaceEntropyValidationError


class ExpComponent(NamedTuple):
    """One term A_i * exp(-c_i * T) of a multi-exponential model."""

    weight: float
    rate: float


class SeriesPoint(NamedTuple):
    """One observation of a time series, or one (t, value) pair of a derived series."""

    t: float
    value: float


def _require(condition: bool, msg: str) -> None:
    if not condition:
        raise SampleSpaceEntropyValidationError(msg)


def _finite(value: float) -> bool:
    return isinstance(value, int | float) and not isinstance(value, bool) and math.isfinite(value)


@dataclass(frozen=True, slots=True)
class MonoExpModel:
    """
    Mono-exponential expansion s(t) = s0 * exp(rate * t).

    Attributes:
        s0: Initial sample-space size (count or series units), at least 1.
        rate: Rate constant lambda per unit time, strictly positive.

    """

    s0: float
    rate: float

    def __post_init__(self) -> None:
        """Validate the model invariants."""
        _require(_finite(self.s0) and self.s0 >= 1.0, f"s0 must be >= 1, got {self.s0}")
        _require(_finite(self.rate) and self.rate > 0.0, f"lambda must be > 0, got {self.rate}")


@dataclass(frozen=True, slots=True)
class ProcessSet:
    """Rate constants of simultaneous, independent expansion processes."""

    rates: tuple[float, ...]

    def __post_init__(self) -> None:
        """Coerce the rates to a tuple and validate them."""
        rates = tuple(self.rates)
        object.__setattr__(self, "rates", rates)
        _require(len(rates) > 0, "a process set needs at least one rate")
        for index, rate in enumerate(rates, start=1):
            _require(_finite(rate) and rate > 0.0, f"process {index}: rate must be > 0, got {rate}")

    def __len__(self) -> int:
        """Return the number of processes."""
        return len(self.rates)


@dataclass(frozen=True, slots=True)
class MultiExpModel:
    """
    Multi-exponential model p(x0|T) = sum_i A_i * exp(-c_i * T).

    Components are stored sorted by strictly decreasing c, so the leading
    component has c = 1 and the last one carries the smallest rate constant.
    Weights within WEIGHT_SUM_TOLERANCE of summing to one are renormalized.
    """

    components: tuple[ExpComponent, ...]

    def __post_init__(self) -> None:
        """Sort, validate and renormalize the components."""
        components = tuple(ExpComponent(*component) for component in self.components)
        _require(len(components) > 0, "a multi-exponential model needs at least one component")
        for index, (weight, rate) in enumerate(components, start=1):
            _require(_finite(weight) and weight > 0.0, f"component {index}: weight must be > 0, got {weight}")
            _require(_finite(rate) and rate > 0.0, f"component {index}: rate must be > 0, got {rate}")

        components = tuple(sorted(components, key=lambda component: component.rate, reverse=True))
        for previous, current in pairwise(components):
            _require(
                current.rate < previous.rate,
                f"rate constants must be distinct, got {current.rate} twice",
            )

        leading = components[0].rate
        _require(
            abs(leading - 1.0) <= LEADING_RATE_TOLERANCE,
            f"largest rate constant must be 1, got {leading}",
        )

        total = math.fsum(component.weight for component in components)
        _require(
            abs(total - 1.0) <= WEIGHT_SUM_TOLERANCE,
            f"weights sum {total:.12g}, expected 1",
        )
        if abs(total - 1.0) > WEIGHT_SUM_EXACT:
            LOGGER.debug("Renormalizing component weights (sum %.17g)", total)
            components = tuple(ExpComponent(weight / total, rate) for weight, rate in components)

        components = (ExpComponent(components[0].weight, 1.0), *components[1:])
        object.__setattr__(self, "components", components)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[float]]) -> MultiExpModel:
        """Build a model from (A_i, c_i) pairs in any order."""
        return cls(tuple(ExpComponent(float(weight), float(rate)) for weight, rate in pairs))

    @property
    def weights(self) -> tuple[float, ...]:
        """Return the weights A_i in storage order."""
        return tuple(component.weight for component in self.components)

    @property
    def rates(self) -> tuple[float, ...]:
        """Return the scaled rate constants c_i in storage order."""
        return tuple(component.rate for component in self.components)

    @property
    def slowest(self) -> ExpComponent:
        """Return the component with the smallest rate constant."""
        return self.components[-1]

    def __len__(self) -> int:
        """Return the number of components."""
        return len(self.components)


@dataclass(frozen=True, slots=True)
class ContractionModel:
    """
    Sample space halving with time, s(t) = s0 * 2**(-rate * t).

    With the default rate of one halving per unit time this is the
    single-process contraction; simultaneous independent halving processes
    contribute the sum of their rates.

    Attributes:
        s0: Initial sample-space size, an integer of at least 2.
        rate: Combined halving rate per unit time.
        t_max: Time at which the probability reaches 1, ln(s0) / (rate * ln 2).

    """

    s0: int
    rate: float = 1.0
    t_max: float = field(init=False)

    def __post_init__(self) -> None:
        """Validate the model and derive the stopping time."""
        _require(
            isinstance(self.s0, int) and not isinstance(self.s0, bool) and self.s0 >= 2,
            f"s0 must be an integer >= 2, got {self.s0!r}",
        )
        _require(_finite(self.rate) and self.rate > 0.0, f"halving rate must be > 0, got {self.rate}")
        object.__setattr__(self, "t_max", math.log2(self.s0) / self.rate)

    @classmethod
    def from_processes(cls, s0: int, processes: ProcessSet) -> ContractionModel:
        """Build a contraction driven by simultaneous independent halving processes."""
        return cls(s0, math.fsum(processes.rates))


@dataclass(frozen=True, slots=True)
class TimeSeries:
    """
    Ordered observations of a positive magnitude.

    Attributes:
        origin_label: Label of t = 0, e.g. the calendar year of the first observation.
        points: (t, value) pairs with t strictly increasing and value > 0.

    """

    origin_label: str
    points: tuple[SeriesPoint, ...]

    def __post_init__(self) -> None:
        """Validate the series invariants."""
        points = tuple(SeriesPoint(float(t), float(value)) for t, value in self.points)
        object.__setattr__(self, "points", points)
        _require(len(points) >= 2, f"need at least 2 points, got {len(points)}")
        for index, (t, value) in enumerate(points):
            _require(math.isfinite(t), f"point {index}: time must be finite, got {t}")
            _require(math.isfinite(value) and value > 0.0, f"point {index}: nonpositive value {value}")
        for index in range(1, len(points)):
            _require(
                points[index].t > points[index - 1].t,
                f"point {index}: times must be strictly increasing ({points[index - 1].t} then {points[index].t})",
            )

    @property
    def times(self) -> tuple[float, ...]:
        """Return the time offsets."""
        return tuple(point.t for point in self.points)

    @property
    def values(self) -> tuple[float, ...]:
        """Return the observed values."""
        return tuple(point.value for point in self.points)

    def __len__(self) -> int:
        """Return the number of observations."""
        return len(self.points)


@dataclass(frozen=True, slots=True)
class FitResult:
    """
    Outcome of a log-linear mono-exponential fit.

    Attributes:
        s0_hat: Fitted initial size, in series units.
        lambda_hat: Fitted rate constant per unit time.
        r_squared: Coefficient of determination of the fit in log space.
        residuals_log: Per-point residuals ln(value) - ln(fitted).
        r_squared_raw: Coefficient of determination of the fitted curve against the raw values,
            None when the raw values have no variance.
        n_points: Number of observations fitted.

    """

    s0_hat: float
    lambda_hat: float
    r_squared: float
    residuals_log: tuple[float, ...] = ()
    r_squared_raw: float | None = None
    n_points: int = 0

    def __post_init__(self) -> None:
        """Validate the fit invariants."""
        _require(_finite(self.s0_hat) and self.s0_hat > 0.0, f"s0_hat must be > 0, got {self.s0_hat}")
        _require(_finite(self.lambda_hat), f"lambda_hat must be finite, got {self.lambda_hat}")
        _require(0.0 <= self.r_squared <= 1.0, f"r_squared must lie in [0, 1], got {self.r_squared}")
        object.__setattr__(self, "residuals_log", tuple(self.residuals_log))

    @property
    def model(self) -> MonoExpModel:
        """
        Return the fitted parameters as a MonoExpModel.

        Raises:
            SampleSpaceEntropyValidationError: If the fit describes a shrinking or sub-unit series.

        """
        return MonoExpModel(self.s0_hat, self.lambda_hat)

    def fitted_values(self, times: Iterable[float]) -> list[SeriesPoint]:
        """Evaluate the fitted curve s0_hat * exp(lambda_hat * t) at the given times."""
        return [SeriesPoint(t, self.s0_hat * math.exp(self.lambda_hat * t)) for t in times]

"""
Numerical quadrature of the mean residence time integrals.

Both integrals of MRT = integral(T * p) / integral(p) over [0, inf) are
evaluated by adaptive composite Simpson on [0, T_cut] plus the analytic tail
of every component beyond T_cut:

    integral_{T_cut}^inf A e^{-cT} dT     = (A / c) e^{-c T_cut}
    integral_{T_cut}^inf T A e^{-cT} dT   = A e^{-c T_cut} (T_cut / c + 1 / c**2)

T_cut is the point where every component's remaining mass A/c e^{-cT} has
dropped below the truncation threshold.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
import math
from typing import NamedTuple

from sample_space_entropy.const import (
    DEFAULT_RELATIVE_TOLERANCE,
    DEFAULT_TRUNCATION_THRESHOLD,
    LOGGER,
    MAX_QUADRATURE_SUBINTERVALS,
    MAX_RELATIVE_TOLERANCE,
    MAX_TRUNCATION_THRESHOLD,
)
from sample_space_entropy.data import MultiExpModel
from sample_space_entropy.exceptions import SampleSpaceEntropyNumericalError, SampleSpaceEntropyValidationError

# Uniform panels used to estimate the magnitude of an integral before refining it
_SCALE_PANELS = 64


@dataclass(frozen=True, slots=True)
class QuadratureSpec:
    """
    Accuracy settings for mrt_quadrature.

    Attributes:
        relative_tolerance: Target relative error of each integral, in (0, 1e-2].
        truncation_threshold: Largest tail mass a component may leave beyond T_cut, in (0, 1e-6].
        max_subintervals: Subinterval budget of one adaptive pass.

    """

    relative_tolerance: float = DEFAULT_RELATIVE_TOLERANCE
    truncation_threshold: float = DEFAULT_TRUNCATION_THRESHOLD
    max_subintervals: int = MAX_QUADRATURE_SUBINTERVALS

    def __post_init__(self) -> None:
        """Validate the settings."""
        if not 0.0 < self.relative_tolerance <= MAX_RELATIVE_TOLERANCE:
            msg = f"relative_tolerance must lie in (0, {MAX_RELATIVE_TOLERANCE}], got {self.relative_tolerance}"
            raise SampleSpaceEntropyValidationError(msg)
        if not 0.0 < self.truncation_threshold <= MAX_TRUNCATION_THRESHOLD:
            msg = (
                f"truncation_threshold must lie in (0, {MAX_TRUNCATION_THRESHOLD}], got {self.truncation_threshold}"
            )
            raise SampleSpaceEntropyValidationError(msg)
        if self.max_subintervals < 1:
            msg = f"max_subintervals must be >= 1, got {self.max_subintervals}"
            raise SampleSpaceEntropyValidationError(msg)


class QuadratureResult(NamedTuple):
    """Value of an integral with its error estimate and the work spent on it."""

    value: float
    error_estimate: float
    subintervals: int


class MrtQuadrature(NamedTuple):
    """Mean residence time by quadrature together with the integrals it came from."""

    mrt: float
    area: QuadratureResult
    first_moment: QuadratureResult
    t_cut: float


def _simpson(fa: float, fm: float, fb: float, width: float) -> float:
    return width / 6.0 * (fa + 4.0 * fm + fb)


def integrate_adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    relative_tolerance: float,
    max_subintervals: int = MAX_QUADRATURE_SUBINTERVALS,
) -> QuadratureResult:
    """
    Integrate a smooth function on [a, b] by adaptive Simpson bisection.

    A subinterval is accepted when its two halves agree with the whole to
    within its share, proportional to width, of the absolute tolerance.
    Accepted pieces get the Richardson correction (S2 - S1) / 15.

    Args:
        f: Integrand.
        a: Lower bound.
        b: Upper bound, > a.
        relative_tolerance: Target error relative to the magnitude of the integral.
        max_subintervals: Budget of accepted plus pending subintervals.

    Returns:
        The integral, its accumulated error estimate and the number of subintervals used.

    Raises:
        SampleSpaceEntropyNumericalError: If the budget is exhausted before convergence.

    """
    if not b > a:
        msg = f"integration bounds must satisfy a < b, got [{a}, {b}]"
        raise SampleSpaceEntropyValidationError(msg)

    span = b - a
    panel = span / _SCALE_PANELS
    nodes = [f(a + index * panel / 2.0) for index in range(2 * _SCALE_PANELS + 1)]
    scale = math.fsum(
        _simpson(nodes[2 * index], nodes[2 * index + 1], nodes[2 * index + 2], panel) for index in range(_SCALE_PANELS)
    )
    tolerance = relative_tolerance * max(abs(scale), math.ulp(1.0))

    fa, fm, fb = f(a), f((a + b) / 2.0), f(b)
    stack = [(a, b, fa, fm, fb, _simpson(fa, fm, fb, span))]
    pieces: list[float] = []
    errors: list[float] = []
    subintervals = 1

    while stack:
        left, right, f_left, f_middle, f_right, whole = stack.pop()
        middle = (left + right) / 2.0
        f_quarter = f((left + middle) / 2.0)
        f_three_quarter = f((middle + right) / 2.0)
        first = _simpson(f_left, f_quarter, f_middle, middle - left)
        second = _simpson(f_middle, f_three_quarter, f_right, right - middle)
        delta = first + second - whole

        if abs(delta) <= 15.0 * tolerance * (right - left) / span:
            pieces.append(first + second + delta / 15.0)
            errors.append(abs(delta) / 15.0)
            continue

        subintervals += 1
        if subintervals > max_subintervals:
            msg = f"adaptive Simpson did not converge within {max_subintervals} subintervals on [{a}, {b}]"
            raise SampleSpaceEntropyNumericalError(
                msg,
                {
                    "subintervals": subintervals,
                    "pending": len(stack),
                    "stuck_at": (left, right),
                    "partial_value": math.fsum(pieces),
                    "tolerance": tolerance,
                },
            )
        stack.append((middle, right, f_middle, f_three_quarter, f_right, second))
        stack.append((left, middle, f_left, f_quarter, f_middle, first))

    return QuadratureResult(math.fsum(pieces), math.fsum(errors), subintervals)


def truncation_point(model: MultiExpModel, threshold: float) -> float:
    """Return the smallest T beyond which every component's tail mass is below threshold."""
    cut = max(math.log(weight / (rate * threshold)) / rate for weight, rate in model.components)
    return max(cut, 1.0)


def mrt_quadrature_detail(model: MultiExpModel, spec: QuadratureSpec | None = None) -> MrtQuadrature:
    """
    Compute the mean residence time by quadrature, keeping the intermediate integrals.

    Raises:
        SampleSpaceEntropyNumericalError: If either integral fails to converge.

    """
    spec = spec or QuadratureSpec()
    t_cut = truncation_point(model, spec.truncation_threshold)
    components = model.components

    def probability(scaled: float) -> float:
        return math.fsum(weight * math.exp(-rate * scaled) for weight, rate in components)

    def weighted(scaled: float) -> float:
        return scaled * probability(scaled)

    area = integrate_adaptive_simpson(probability, 0.0, t_cut, spec.relative_tolerance, spec.max_subintervals)
    first_moment = integrate_adaptive_simpson(weighted, 0.0, t_cut, spec.relative_tolerance, spec.max_subintervals)

    area_tail = math.fsum(weight / rate * math.exp(-rate * t_cut) for weight, rate in components)
    moment_tail = math.fsum(
        weight * math.exp(-rate * t_cut) * (t_cut / rate + 1.0 / rate**2) for weight, rate in components
    )
    LOGGER.debug(
        "MRT quadrature: T_cut=%g, %d + %d subintervals, tails %.3g / %.3g",
        t_cut,
        area.subintervals,
        first_moment.subintervals,
        area_tail,
        moment_tail,
    )
    mrt = (first_moment.value + moment_tail) / (area.value + area_tail)
    return MrtQuadrature(mrt, area, first_moment, t_cut)


def mrt_quadrature(model: MultiExpModel, spec: QuadratureSpec | None = None) -> float:
    """
    Return the mean residence time of the sample space by numerical quadrature.

    This is an independent check of mrt_closed_form and agrees with it to
    within max(spec.relative_tolerance, 1e-3) relative.

    Raises:
        SampleSpaceEntropyNumericalError: If either integral fails to converge.

    """
    return mrt_quadrature_detail(model, spec).mrt

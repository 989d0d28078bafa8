"""
Figure data: one table of series per figure over an evaluation grid.

Catalog (default domain, 201 points each):

    1   size s0 * e^T, s0 = 1              T in [0, 10]
    2   p(x0|T) = e^-T                      T in [0, 10]
    3   H(T) = T                            T in [0, 10]
    4   p per process and combined          t in [0, 10]
    5   H per process and combined          t in [0, 10]
    6   log10 size, multi-exponential       T in [0, 1000]
    7   p(x0|T), multi-exponential          T in [0, 1000]
    8   H(T), multi-exponential             T in [0, 1000]
    9   p per component                     T in [0, 100]
    10  H share per component               T in [0, 100]
    11  H(T) and its large-T asymptote      T in [0, 10000]
    12  H(T) / H(T_max)                     T in [0, T_max]
    13  fitted broad money size             t in [0, 18]
    14  H(t) = lambda * t                   t in [0, 18]
    A1  contraction size                    t in [0, t_max]
    A2  contraction p                       t in [0, t_max]
    A3  contraction H                       t in [0, t_max]
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field, replace
from enum import StrEnum

from sample_space_entropy.const import (
    BROAD_MONEY_LAMBDA,
    BROAD_MONEY_S0,
    BROAD_MONEY_YEARS,
    DEFAULT_NORMALIZATION_T_MAX,
    EXAMPLE_CONTRACTION_S0,
    EXAMPLE_PROCESS_RATES,
    FOUR_COMPONENTS,
    LOGGER,
)
from sample_space_entropy.core import (
    combine_processes,
    contraction_entropy,
    contraction_probability,
    contraction_sample_space_size,
    decompose_processes,
    entropy_mono,
    multiexp_component_entropies,
    multiexp_component_probabilities,
    multiexp_entropy,
    multiexp_entropy_asymptote,
    multiexp_log10_sample_space_size,
    multiexp_probability,
    normalized_entropy,
    probability_mono,
    sample_space_size,
    scaled_time,
)
from sample_space_entropy.data import ContractionModel, MonoExpModel, MultiExpModel, ProcessSet
from sample_space_entropy.exceptions import SampleSpaceEntropyValidationError
from sample_space_entropy.ingest import ModelConfig, ModelVariant

from .grid import Grid
from .svg import SvgChart
from .tables import format_table

FIGURE_IDS: tuple[str, ...] = (*(str(number) for number in range(1, 15)), "A1", "A2", "A3")


class OutputStyle(StrEnum):
    """Output format of a figure."""

    DATA = "data"
    SVG = "svg"


@dataclass(frozen=True, slots=True)
class FigureRequest:
    """
    A figure to emit.

    Attributes:
        figure_id: One of FIGURE_IDS, case-insensitive.
        grid: Evaluation grid, or None for the figure's default domain.
        style: Data table or SVG chart.

    """

    figure_id: str
    grid: Grid | None = None
    style: OutputStyle = OutputStyle.DATA

    def __post_init__(self) -> None:
        """Normalize and validate the figure id."""
        figure_id = str(self.figure_id).strip().upper()
        if figure_id not in FIGURE_IDS:
            msg = f"unknown figure id {self.figure_id!r}, expected one of {', '.join(FIGURE_IDS)}"
            raise SampleSpaceEntropyValidationError(msg)
        object.__setattr__(self, "figure_id", figure_id)
        object.__setattr__(self, "style", OutputStyle(self.style))


@dataclass(frozen=True, slots=True)
class FigureInputs:
    """Models the figures are drawn from; defaults reproduce the worked examples."""

    multiexp: MultiExpModel = field(default_factory=lambda: MultiExpModel.from_pairs(FOUR_COMPONENTS))
    multiexp_s0: float = 1.0
    processes: ProcessSet = field(default_factory=lambda: ProcessSet(EXAMPLE_PROCESS_RATES))
    broad_money: MonoExpModel = field(default_factory=lambda: MonoExpModel(BROAD_MONEY_S0, BROAD_MONEY_LAMBDA))
    contraction: ContractionModel = field(default_factory=lambda: ContractionModel(EXAMPLE_CONTRACTION_S0))
    t_max: float = DEFAULT_NORMALIZATION_T_MAX


@dataclass(frozen=True, slots=True)
class FigureData:
    """The evaluated series of one figure."""

    figure_id: str
    title: str
    x_label: str
    y_label: str
    x: tuple[float, ...]
    series: dict[str, tuple[float, ...]]

    @property
    def header(self) -> list[str]:
        """Return the table header, x column first."""
        return [self.x_label, *self.series]

    def rows(self) -> list[tuple[float, ...]]:
        """Return one row per grid point."""
        columns = list(self.series.values())
        return [(x, *(column[index] for column in columns)) for index, x in enumerate(self.x)]


type SeriesBuilder = Callable[[FigureInputs, list[float]], dict[str, list[float]]]


@dataclass(frozen=True, slots=True)
class _Figure:
    title: str
    x_label: str
    y_label: str
    domain: Callable[[FigureInputs], tuple[float, float]]
    build: SeriesBuilder
    model: ModelVariant | None = None


def _fixed(start: float, end: float) -> Callable[[FigureInputs], tuple[float, float]]:
    return lambda _inputs: (start, end)


def _per_process(inputs: FigureInputs, xs: list[float], *, entropy: bool) -> dict[str, list[float]]:
    combined = combine_processes(inputs.processes)
    symbol = "H" if entropy else "p"
    series: dict[str, list[float]] = {
        f"{symbol}_{index}(lambda={rate:g})": [] for index, rate in enumerate(inputs.processes.rates, start=1)
    }
    series[f"{symbol}_combined(lambda={combined:g})"] = []
    names = list(series)
    for t in xs:
        parts = decompose_processes(inputs.processes, t)
        values = [part.entropy if entropy else part.probability for part in parts]
        values.append(entropy_mono(combined * t) if entropy else probability_mono(combined * t))
        for name, value in zip(names, values, strict=True):
            series[name].append(value)
    return series


def _per_component(inputs: FigureInputs, xs: list[float], *, entropy: bool) -> dict[str, list[float]]:
    model = inputs.multiexp
    symbol = "H" if entropy else "p"
    names = [f"{symbol}_{index}(A={weight:g},c={rate:g})" for index, (weight, rate) in enumerate(model.components, 1)]
    series: dict[str, list[float]] = {name: [] for name in names}
    total: list[float] = []
    for scaled in xs:
        parts = (
            multiexp_component_entropies(model, scaled) if entropy else multiexp_component_probabilities(model, scaled)
        )
        for name, value in zip(names, parts, strict=True):
            series[name].append(value)
        total.append(multiexp_entropy(model, scaled) if entropy else multiexp_probability(model, scaled))
    series[symbol] = total
    return series


def _contraction_domain(inputs: FigureInputs) -> tuple[float, float]:
    return 0.0, inputs.contraction.t_max


CATALOG: dict[str, _Figure] = {
    "1": _Figure(
        "Mono-exponential expansion of the sample space, s0 = 1",
        "T",
        "s(T)",
        _fixed(0.0, 10.0),
        lambda _inputs, xs: {"size": [sample_space_size(MonoExpModel(1.0, 1.0), x) for x in xs]},
    ),
    "2": _Figure(
        "Probability of the determined outcome",
        "T",
        "p(x0|T)",
        _fixed(0.0, 10.0),
        lambda _inputs, xs: {"p": [probability_mono(x) for x in xs]},
    ),
    "3": _Figure(
        "Information entropy of the expanding sample space",
        "T",
        "H(T) [nats]",
        _fixed(0.0, 10.0),
        lambda _inputs, xs: {"H": [entropy_mono(x) for x in xs]},
    ),
    "4": _Figure(
        "Probability for simultaneous independent processes",
        "t",
        "p(x0|t)",
        _fixed(0.0, 10.0),
        lambda inputs, xs: _per_process(inputs, xs, entropy=False),
        ModelVariant.PROCESSES,
    ),
    "5": _Figure(
        "Entropy for simultaneous independent processes",
        "t",
        "H(t) [nats]",
        _fixed(0.0, 10.0),
        lambda inputs, xs: _per_process(inputs, xs, entropy=True),
        ModelVariant.PROCESSES,
    ),
    "6": _Figure(
        "Multi-exponential expansion of the sample space",
        "T",
        "log10 s(T)",
        _fixed(0.0, 1000.0),
        lambda inputs, xs: {
            "log10_size": [multiexp_log10_sample_space_size(inputs.multiexp, inputs.multiexp_s0, x) for x in xs]
        },
        ModelVariant.COMPONENTS,
    ),
    "7": _Figure(
        "Probability for multi-exponential expansion",
        "T",
        "p(x0|T)",
        _fixed(0.0, 1000.0),
        lambda inputs, xs: {"p": [multiexp_probability(inputs.multiexp, x) for x in xs]},
        ModelVariant.COMPONENTS,
    ),
    "8": _Figure(
        "Entropy for multi-exponential expansion",
        "T",
        "H(T) [nats]",
        _fixed(0.0, 1000.0),
        lambda inputs, xs: {"H": [multiexp_entropy(inputs.multiexp, x) for x in xs]},
        ModelVariant.COMPONENTS,
    ),
    "9": _Figure(
        "Probability per exponential component",
        "T",
        "p(x0|T)",
        _fixed(0.0, 100.0),
        lambda inputs, xs: _per_component(inputs, xs, entropy=False),
        ModelVariant.COMPONENTS,
    ),
    "10": _Figure(
        "Entropy share per exponential component",
        "T",
        "H(T) [nats]",
        _fixed(0.0, 100.0),
        lambda inputs, xs: _per_component(inputs, xs, entropy=True),
        ModelVariant.COMPONENTS,
    ),
    "11": _Figure(
        "Entropy and its large-T asymptote",
        "T",
        "H(T) [nats]",
        _fixed(0.0, 10000.0),
        lambda inputs, xs: {
            "H": [multiexp_entropy(inputs.multiexp, x) for x in xs],
            "asymptote": [multiexp_entropy_asymptote(inputs.multiexp, x) for x in xs],
        },
        ModelVariant.COMPONENTS,
    ),
    "12": _Figure(
        "Normalized entropy",
        "T",
        "H(T) / H(T_max)",
        lambda inputs: (0.0, inputs.t_max),
        lambda inputs, xs: {"H_normalized": [normalized_entropy(inputs.multiexp, x, inputs.t_max) for x in xs]},
        ModelVariant.COMPONENTS,
    ),
    "13": _Figure(
        "Fitted broad money supply",
        "t",
        "s(t)",
        _fixed(0.0, float(BROAD_MONEY_YEARS)),
        lambda inputs, xs: {"size": [sample_space_size(inputs.broad_money, x) for x in xs]},
        ModelVariant.MONO,
    ),
    "14": _Figure(
        "Entropy of the broad money supply",
        "t",
        "H(t) [nats]",
        _fixed(0.0, float(BROAD_MONEY_YEARS)),
        lambda inputs, xs: {"H": [entropy_mono(scaled_time(inputs.broad_money.rate, x)) for x in xs]},
        ModelVariant.MONO,
    ),
    "A1": _Figure(
        "Contraction of the sample space",
        "t",
        "s(t)",
        _contraction_domain,
        lambda inputs, xs: {"size": [contraction_sample_space_size(inputs.contraction, x) for x in xs]},
        ModelVariant.CONTRACTION,
    ),
    "A2": _Figure(
        "Probability for the contracting sample space",
        "t",
        "p(x0|t)",
        _contraction_domain,
        lambda inputs, xs: {"p": [contraction_probability(inputs.contraction, x) for x in xs]},
        ModelVariant.CONTRACTION,
    ),
    "A3": _Figure(
        "Entropy change for the contracting sample space",
        "t",
        "H(t) [nats]",
        _contraction_domain,
        lambda inputs, xs: {"H": [contraction_entropy(x, inputs.contraction.rate) for x in xs]},
        ModelVariant.CONTRACTION,
    ),
}


def figure_inputs(
    figure_id: str,
    config: ModelConfig | None = None,
    rate: float | None = None,
    t_max: float | None = None,
) -> FigureInputs:
    """
    Assemble the models for a figure, overriding the defaults.

    Args:
        figure_id: The figure the inputs are for.
        config: Model file replacing the figure's default model.
        rate: Rate constant replacing lambda of the broad money model (figures 13 and 14).
        t_max: Normalization horizon for figure 12.

    Raises:
        SampleSpaceEntropyValidationError: If the model file does not fit the figure.

    """
    figure = CATALOG[FigureRequest(figure_id).figure_id]
    inputs = FigureInputs()
    if config is not None:
        if figure.model is None or config.variant is not figure.model:
            expected = f"a {figure.model}" if figure.model else "no"
            msg = f"figure {figure_id} takes {expected} model, got {config.variant}"
            raise SampleSpaceEntropyValidationError(msg)
        match config:
            case ModelConfig(multiexp=MultiExpModel() as multiexp):
                inputs = replace(inputs, multiexp=multiexp, multiexp_s0=config.s0)
            case ModelConfig(mono=MonoExpModel() as mono):
                inputs = replace(inputs, broad_money=mono)
            case ModelConfig(contraction=ContractionModel() as contraction):
                inputs = replace(inputs, contraction=contraction)
            case ModelConfig(processes=ProcessSet() as processes):
                inputs = replace(inputs, processes=processes)
    if rate is not None:
        inputs = replace(inputs, broad_money=MonoExpModel(inputs.broad_money.s0, rate))
    if t_max is not None:
        inputs = replace(inputs, t_max=t_max)
    return inputs


def build_figure(request: FigureRequest, inputs: FigureInputs | None = None) -> FigureData:
    """
    Evaluate a figure's series over its grid.

    Raises:
        SampleSpaceEntropyDomainError: If the grid leaves the figure's domain, e.g. past t_max.

    """
    inputs = inputs or FigureInputs()
    figure = CATALOG[request.figure_id]
    grid = request.grid or Grid.spanning(*figure.domain(inputs))
    xs = grid.points()
    LOGGER.debug("Building figure %s over %s (%d points)", request.figure_id, grid, len(xs))
    series = figure.build(inputs, xs)
    return FigureData(
        figure_id=request.figure_id,
        title=figure.title,
        x_label=figure.x_label,
        y_label=figure.y_label,
        x=tuple(xs),
        series={name: tuple(values) for name, values in series.items()},
    )


def render_figure(data: FigureData, style: OutputStyle) -> str:
    """Render figure data as a TSV table or an SVG chart."""
    if style is OutputStyle.DATA:
        return format_table(data.header, data.rows())
    chart = SvgChart(f"Figure {data.figure_id}: {data.title}", data.x_label, data.y_label)
    for name, values in data.series.items():
        chart.add_series(name, data.x, values)
    return chart.render()

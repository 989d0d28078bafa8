"""
Subcommand implementations.

Every command takes the parsed arguments and the output stream, writes its
report or table there and returns the process exit code. Errors propagate as
SampleSpaceEntropyError and are reported by main().
"""

from __future__ import annotations

import argparse
import math
from typing import TextIO

from sample_space_entropy.const import LN2, LOGGER, MAX_ENUMERATED_DOUBLINGS
from sample_space_entropy.core import (
    combine_processes,
    contraction_probability,
    contraction_state,
    contraction_trajectory,
    decompose_processes,
    entropy_mono,
    mrt_closed_form,
    multiexp_component_entropies,
    multiexp_component_probabilities,
    multiexp_entropy,
    multiexp_entropy_asymptote,
    multiexp_probability,
    multiexp_sample_space_size,
    normalized_entropy,
    probability_mono,
    sample_space_size,
    scaled_time,
)
from sample_space_entropy.data import ContractionModel, ProcessSet
from sample_space_entropy.exceptions import SampleSpaceEntropyValidationError
from sample_space_entropy.fitting import (
    annual_growth_rate,
    doubling_time,
    entropy_series,
    fit_mono_exponential,
    probability_series,
)
from sample_space_entropy.ingest import (
    ModelConfig,
    ModelVariant,
    OriginPolicy,
    SeriesFileSpec,
    load_model,
    load_series,
    save_model,
)
from sample_space_entropy.oracle import mrt_quadrature_detail, simulate_doubling, simulate_halving
from sample_space_entropy.utils import ensure_positive, format_percent, format_report_number

from .figures import FigureRequest, OutputStyle, build_figure, figure_inputs, render_figure
from .grid import Grid
from .tables import write_report, write_table

# Default model evaluation domains
_MONO_DOMAIN = (0.0, 10.0)
_COMPONENTS_DOMAIN = (0.0, 1000.0)


def _relative_difference(value: float, reference: float) -> float:
    return abs(value - reference) / abs(reference)


def cmd_fit(args: argparse.Namespace, out: TextIO) -> int:
    """Fit a mono-exponential model to a CSV series and report the parameters."""
    spec = SeriesFileSpec(
        args.series_path,
        time_column=args.time_column,
        value_column=args.value_column,
        origin_policy=OriginPolicy.EXPLICIT if args.origin is not None else OriginPolicy.FIRST_ROW,
        origin=args.origin,
    )
    series = load_series(spec)
    fit = fit_mono_exponential(series)
    if args.save_model is not None:
        save_model(ModelConfig(ModelVariant.MONO, mono=fit.model), args.save_model)
        LOGGER.debug("Saved the fitted model to %s", args.save_model)

    report = [
        ("points", str(fit.n_points)),
        ("origin", series.origin_label),
        ("s0_hat", format_report_number(fit.s0_hat)),
        ("lambda_hat", format_report_number(fit.lambda_hat)),
        ("growth_rate", format_percent(annual_growth_rate(fit.lambda_hat))),
        (
            "doubling_time",
            format_report_number(doubling_time(fit.lambda_hat)) if fit.lambda_hat > 0.0 else "n/a",
        ),
        ("r_squared_log", format_report_number(fit.r_squared)),
        (
            "r_squared_raw",
            format_report_number(fit.r_squared_raw) if fit.r_squared_raw is not None else "n/a",
        ),
    ]
    write_report(out, report)

    if args.series:
        times = series.times
        fitted = fit.fitted_values(times)
        probabilities = probability_series(fit, times)
        entropies = entropy_series(fit, times)
        out.write("\n")
        write_table(
            out,
            ["t", "observed", "fitted", "p", "H"],
            (
                (t, value, size.value, probability.value, entropy.value)
                for (t, value), size, probability, entropy in zip(
                    series.points, fitted, probabilities, entropies, strict=True
                )
            ),
        )
    return 0


def _model_grid(args: argparse.Namespace, config: ModelConfig) -> Grid:
    if args.grid is not None:
        return Grid.parse(args.grid)
    match config.variant:
        case ModelVariant.COMPONENTS:
            return Grid.spanning(*_COMPONENTS_DOMAIN)
        case ModelVariant.CONTRACTION if config.contraction is not None:
            return Grid.spanning(0.0, config.contraction.t_max)
        case _:
            return Grid.spanning(*_MONO_DOMAIN)


def cmd_model(args: argparse.Namespace, out: TextIO) -> int:
    """Evaluate a model file over a grid."""
    config = load_model(args.model_path)
    xs = _model_grid(args, config).points()
    if args.tmax is not None and config.variant is not ModelVariant.COMPONENTS:
        LOGGER.warning("--tmax only applies to multi-exponential models, ignoring it for a %s model", config.variant)

    match config:
        case ModelConfig(mono=mono) if mono is not None:
            rows = []
            for t in xs:
                scaled = scaled_time(mono.rate, t)
                rows.append((t, scaled, sample_space_size(mono, t), probability_mono(scaled), entropy_mono(scaled)))
            write_table(out, ["t", "T", "size", "p", "H"], rows)

        case ModelConfig(multiexp=model) if model is not None:
            count = len(model)
            header = ["T", "size", "p", "H"]
            header += [f"p_{index}" for index in range(1, count + 1)]
            header += [f"H_{index}" for index in range(1, count + 1)]
            header.append("asymptote")
            if args.tmax is not None:
                ensure_positive(args.tmax, "T_max")
                header.append("H_normalized")
                beyond = sum(1 for scaled in xs if scaled > args.tmax)
                if beyond:
                    LOGGER.warning("H_normalized is n/a at %d grid points past T_max=%g", beyond, args.tmax)
            component_rows: list[list[float | None]] = []
            for scaled in xs:
                row: list[float | None] = [
                    scaled,
                    multiexp_sample_space_size(model, config.s0, scaled),
                    multiexp_probability(model, scaled),
                    multiexp_entropy(model, scaled),
                    *multiexp_component_probabilities(model, scaled),
                    *multiexp_component_entropies(model, scaled),
                    multiexp_entropy_asymptote(model, scaled),
                ]
                if args.tmax is not None:
                    row.append(normalized_entropy(model, scaled, args.tmax) if scaled <= args.tmax else None)
                component_rows.append(row)
            write_table(out, header, component_rows)

        case ModelConfig(contraction=contraction) if contraction is not None:
            write_table(out, ["t", "size", "p", "H"], (contraction_state(contraction, t) for t in xs))

        case ModelConfig(processes=processes) if processes is not None:
            combined = combine_processes(processes)
            count = len(processes)
            header = ["t", "T", "p", "H"]
            header += [f"p_{index}" for index in range(1, count + 1)]
            header += [f"H_{index}" for index in range(1, count + 1)]
            rows = []
            for t in xs:
                parts = decompose_processes(processes, t)
                scaled = scaled_time(combined, t)
                rows.append(
                    [
                        t,
                        scaled,
                        probability_mono(scaled),
                        entropy_mono(scaled),
                        *(part.probability for part in parts),
                        *(part.entropy for part in parts),
                    ]
                )
            write_table(out, header, rows)
    return 0


def cmd_mrt(args: argparse.Namespace, out: TextIO) -> int:
    """Report the mean residence time of a multi-exponential model."""
    config = load_model(args.model_path)
    if config.multiexp is None:
        msg = f"MRT requires components, {args.model_path} describes a {config.variant} model"
        raise SampleSpaceEntropyValidationError(msg)

    closed_form = mrt_closed_form(config.multiexp)
    report = [("mrt_closed_form", format_report_number(closed_form))]
    if args.verify:
        detail = mrt_quadrature_detail(config.multiexp)
        report += [
            ("mrt_quadrature", format_report_number(detail.mrt)),
            ("relative_difference", f"{_relative_difference(detail.mrt, closed_form):.3e}"),
            ("t_cut", format_report_number(detail.t_cut)),
            ("subintervals", str(detail.area.subintervals + detail.first_moment.subintervals)),
        ]
    write_report(out, report)
    return 0


def cmd_simulate(args: argparse.Namespace, out: TextIO) -> int:
    """Enumerate n doublings and compare with the closed forms."""
    state = simulate_doubling(args.n)
    probability = 0.5**state.n
    entropy = state.n * LN2
    write_report(
        out,
        [
            ("n", str(state.n)),
            ("partitions", str(state.partition_count)),
            ("p_enumerated", format_report_number(state.cumulative_probability)),
            ("p_closed_form", format_report_number(probability)),
            ("p_abs_difference", f"{abs(state.cumulative_probability - probability):.3e}"),
            ("H_enumerated", format_report_number(state.entropy)),
            ("H_closed_form", format_report_number(entropy)),
            ("H_abs_difference", f"{abs(state.entropy - entropy):.3e}"),
        ],
    )
    return 0


def _contraction_model(args: argparse.Namespace) -> tuple[ContractionModel, ProcessSet | None]:
    if args.model is not None:
        config = load_model(args.model)
        if config.contraction is None:
            msg = f"{args.model} describes a {config.variant} model, not a contraction"
            raise SampleSpaceEntropyValidationError(msg)
        return config.contraction, config.processes
    if args.rate:
        processes = ProcessSet(tuple(args.rate))
        return ContractionModel.from_processes(args.s0, processes), processes
    return ContractionModel(args.s0), None


def cmd_contract(args: argparse.Namespace, out: TextIO) -> int:
    """Trace a halving contraction until the probability reaches 1."""
    model, processes = _contraction_model(args)
    report = [
        ("s0", str(model.s0)),
        ("halving_rate", format_report_number(model.rate)),
        ("t_max", format_report_number(model.t_max)),
    ]
    if processes is not None:
        report.append(("processes", ", ".join(f"{rate:g}" for rate in processes.rates)))
    write_report(out, report)

    if args.verify:
        halvings = min(math.floor(math.log2(model.s0)), MAX_ENUMERATED_DOUBLINGS)
        rows = []
        for n in range(halvings + 1):
            enumerated = simulate_halving(model.s0, n)
            closed_form = contraction_probability(model, n / model.rate)
            rows.append((n, n / model.rate, enumerated, closed_form, abs(enumerated - closed_form)))
        out.write("\n")
        write_table(out, ["n", "t", "p_enumerated", "p_closed_form", "abs_difference"], rows)

    out.write("\n")
    write_table(out, ["t", "size", "p", "H"], contraction_trajectory(model, args.step))
    return 0


def cmd_figures(args: argparse.Namespace, out: TextIO) -> int:
    """Emit the data table or SVG chart of one figure."""
    request = FigureRequest(
        args.figure_id,
        grid=Grid.parse(args.grid) if args.grid is not None else None,
        style=OutputStyle(args.style),
    )
    config = load_model(args.model) if args.model is not None else None
    inputs = figure_inputs(request.figure_id, config, rate=args.rate, t_max=args.tmax)
    out.write(render_figure(build_figure(request, inputs), request.style))
    return 0

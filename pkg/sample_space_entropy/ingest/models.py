"""
Model configuration files.

Grammar, one entry per line:

    # comment
    key = value

Keys are `s0`, `lambda`, `process` (repeatable), `component` (repeatable,
value `A, c`) and `contract`; a `#` starts a comment anywhere on a line.
Exactly one model variant may appear in a file, see schemas.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any

import voluptuous as vol

from sample_space_entropy.const import LOGGER
from sample_space_entropy.data import ContractionModel, MonoExpModel, MultiExpModel, ProcessSet
from sample_space_entropy.exceptions import SampleSpaceEntropyIngestError, SampleSpaceEntropyValidationError

from .schemas import (
    KEY_COMPONENT,
    KEY_CONTRACT,
    KEY_LAMBDA,
    KEY_PROCESS,
    KEY_S0,
    ModelVariant,
    validate_model_mapping,
)


@dataclass(frozen=True, slots=True)
class ModelConfig:
    """
    A validated model file.

    Exactly one of mono, multiexp and contraction is set, or processes alone.
    A contraction may additionally carry the halving processes it was built
    from.

    Attributes:
        variant: Which model the file describes.
        mono: Mono-exponential expansion.
        processes: Simultaneous independent processes.
        multiexp: Multi-exponential expansion.
        contraction: Halving contraction.
        s0: Sample-space size at T = 0 for a multi-exponential model.

    """

    variant: ModelVariant
    mono: MonoExpModel | None = None
    processes: ProcessSet | None = None
    multiexp: MultiExpModel | None = None
    contraction: ContractionModel | None = None
    s0: float = 1.0

    def __post_init__(self) -> None:
        """Check that the populated fields match the variant."""
        present = {
            ModelVariant.MONO: self.mono is not None,
            ModelVariant.COMPONENTS: self.multiexp is not None,
            ModelVariant.CONTRACTION: self.contraction is not None,
            ModelVariant.PROCESSES: self.processes is not None and self.contraction is None,
        }
        populated = [variant for variant, is_set in present.items() if is_set]
        if populated != [self.variant]:
            msg = f"a {self.variant} model config must hold exactly one model, found {populated or 'none'}"
            raise SampleSpaceEntropyValidationError(msg)
        if self.processes is not None and self.variant not in (ModelVariant.PROCESSES, ModelVariant.CONTRACTION):
            msg = f"a {self.variant} model config cannot carry processes"
            raise SampleSpaceEntropyValidationError(msg)


def parse_model_text(text: str, path: Path | str = "<model>") -> dict[str, list[str]]:
    """
    Split model-file text into key -> raw values.

    Raises:
        SampleSpaceEntropyIngestError: If a line is not of the form `key = value`.

    """
    raw: dict[str, list[str]] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, separator, value = content.partition("=")
        key, value = key.strip(), value.strip()
        if not separator or not key:
            raise SampleSpaceEntropyIngestError(path, f"line {number}", f"expected 'key = value', got {content!r}")
        if not value:
            raise SampleSpaceEntropyIngestError(path, f"line {number}", f"'{key}' has no value")
        raw.setdefault(key, []).append(value)
    return raw


def _describe(error: vol.Invalid) -> tuple[str, str]:
    location = "/".join(str(part) for part in error.path) or "model"
    rule = error.error_message
    if rule == "extra keys not allowed":
        rule = "unknown key"
    return location, rule


def _build(variant: ModelVariant, values: dict[str, Any]) -> ModelConfig:
    match variant:
        case ModelVariant.MONO:
            return ModelConfig(variant, mono=MonoExpModel(values[KEY_S0], values[KEY_LAMBDA]))
        case ModelVariant.PROCESSES:
            return ModelConfig(variant, processes=ProcessSet(tuple(values[KEY_PROCESS])))
        case ModelVariant.COMPONENTS:
            return ModelConfig(
                variant,
                multiexp=MultiExpModel.from_pairs(values[KEY_COMPONENT]),
                s0=values.get(KEY_S0, 1.0),
            )
        case ModelVariant.CONTRACTION:
            processes = ProcessSet(tuple(values[KEY_PROCESS])) if KEY_PROCESS in values else None
            contraction = (
                ContractionModel.from_processes(values[KEY_CONTRACT], processes)
                if processes is not None
                else ContractionModel(values[KEY_CONTRACT])
            )
            return ModelConfig(variant, processes=processes, contraction=contraction)


_DEFINING_FIELD = {
    ModelVariant.MONO: KEY_LAMBDA,
    ModelVariant.PROCESSES: KEY_PROCESS,
    ModelVariant.COMPONENTS: KEY_COMPONENT,
    ModelVariant.CONTRACTION: KEY_CONTRACT,
}


def parse_model(text: str, path: Path | str = "<model>") -> ModelConfig:
    """
    Parse and validate model-file text.

    Raises:
        SampleSpaceEntropyIngestError: Naming the file, the offending line or field, and the rule.

    """
    raw = parse_model_text(text, path)
    try:
        variant, values = validate_model_mapping(raw)
    except vol.Invalid as err:
        raise SampleSpaceEntropyIngestError(path, *_describe(err)) from err
    try:
        config = _build(variant, values)
    except SampleSpaceEntropyValidationError as err:
        raise SampleSpaceEntropyIngestError(path, _DEFINING_FIELD[variant], str(err)) from err
    LOGGER.debug("Loaded %s model from %s", variant, path)
    return config


def load_model(path: Path | str) -> ModelConfig:
    """
    Load and validate a model file.

    Multi-exponential weights within 1e-9 of summing to one are renormalized.

    Raises:
        SampleSpaceEntropyIngestError: If the file is missing, unreadable or violates a rule.

    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as err:
        raise SampleSpaceEntropyIngestError(path, "file", "file not found") from err
    except (OSError, UnicodeDecodeError) as err:
        raise SampleSpaceEntropyIngestError(path, "file", f"not readable as UTF-8 text ({err})") from err
    return parse_model(text, path)


def dump_model(config: ModelConfig) -> str:
    """
    Serialize a model config in the model-file grammar.

    Floats are written with repr so loading the text gives back an equal config.
    """
    lines = [f"# {config.variant} model"]
    match config.variant:
        case ModelVariant.MONO if config.mono is not None:
            lines += [f"{KEY_S0} = {config.mono.s0!r}", f"{KEY_LAMBDA} = {config.mono.rate!r}"]
        case ModelVariant.PROCESSES if config.processes is not None:
            lines += [f"{KEY_PROCESS} = {rate!r}" for rate in config.processes.rates]
        case ModelVariant.COMPONENTS if config.multiexp is not None:
            if config.s0 != 1.0:
                lines.append(f"{KEY_S0} = {config.s0!r}")
            lines += [f"{KEY_COMPONENT} = {weight!r}, {rate!r}" for weight, rate in config.multiexp.components]
        case ModelVariant.CONTRACTION if config.contraction is not None:
            lines.append(f"{KEY_CONTRACT} = {config.contraction.s0}")
            if config.processes is not None:
                lines += [f"{KEY_PROCESS} = {rate!r}" for rate in config.processes.rates]
    return "\n".join(lines) + "\n"


def save_model(config: ModelConfig, path: Path | str) -> None:
    """Write a model config to a file."""
    Path(path).write_text(dump_model(config), encoding="utf-8")

"""
Voluptuous schemas for model files.

A model file is first parsed into a mapping of key -> list of raw value
strings (keys may repeat). KEYS_SCHEMA rejects unknown keys, variant_of()
picks the model variant from the keys present, and the variant's schema
converts and range-checks the values.

Variants:
- mono: `s0` and `lambda`
- processes: one or more `process` rates
- components: one or more `component = A, c` lines, optional `s0`
- contraction: `contract = s0`, optional `process` halving rates
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from enum import StrEnum
from typing import Any

import voluptuous as vol

from .sanitizers import parse_integer, parse_number

KEY_S0 = "s0"
KEY_LAMBDA = "lambda"
KEY_PROCESS = "process"
KEY_COMPONENT = "component"
KEY_CONTRACT = "contract"

MODEL_KEYS = (KEY_S0, KEY_LAMBDA, KEY_PROCESS, KEY_COMPONENT, KEY_CONTRACT)


class ModelVariant(StrEnum):
    """The kinds of model a file can describe."""

    MONO = "mono"
    PROCESSES = "processes"
    COMPONENTS = "components"
    CONTRACTION = "contraction"


def number(value: str) -> float:
    """Voluptuous validator wrapping parse_number."""
    try:
        return parse_number(value)
    except ValueError as err:
        raise vol.Invalid(str(err)) from err


def integer(value: str) -> int:
    """Voluptuous validator wrapping parse_integer."""
    try:
        return parse_integer(value)
    except ValueError as err:
        raise vol.Invalid(str(err)) from err


def component(value: str) -> tuple[float, float]:
    """Validate an `A, c` pair."""
    parts = value.split(",")
    if len(parts) != 2:
        msg = f"expected 'A, c', got {value!r}"
        raise vol.Invalid(msg)
    return number(parts[0]), number(parts[1])


def single(validator: Callable[[str], Any]) -> Callable[[list[str]], Any]:
    """Return a validator for a key that must appear exactly once."""

    def _single(values: list[str]) -> Any:
        if len(values) != 1:
            msg = f"given {len(values)} times, expected once"
            raise vol.Invalid(msg)
        return validator(values[0])

    return _single


positive = vol.All(number, vol.Range(min=0.0, min_included=False))

KEYS_SCHEMA = vol.Schema({vol.Optional(key): [str] for key in MODEL_KEYS}, extra=vol.PREVENT_EXTRA)

VARIANT_SCHEMAS: dict[ModelVariant, vol.Schema] = {
    ModelVariant.MONO: vol.Schema(
        {
            vol.Required(KEY_S0): single(vol.All(number, vol.Range(min=1.0))),
            vol.Required(KEY_LAMBDA): single(positive),
        },
    ),
    ModelVariant.PROCESSES: vol.Schema(
        {
            vol.Required(KEY_PROCESS): vol.All([positive], vol.Length(min=1)),
        },
    ),
    ModelVariant.COMPONENTS: vol.Schema(
        {
            vol.Required(KEY_COMPONENT): vol.All([component], vol.Length(min=1)),
            vol.Optional(KEY_S0): single(positive),
        },
    ),
    ModelVariant.CONTRACTION: vol.Schema(
        {
            vol.Required(KEY_CONTRACT): single(vol.All(integer, vol.Range(min=2))),
            vol.Optional(KEY_PROCESS): vol.All([positive], vol.Length(min=1)),
        },
    ),
}

# The key that selects each variant, in order of precedence
_DEFINING_KEYS = (
    (KEY_CONTRACT, ModelVariant.CONTRACTION),
    (KEY_COMPONENT, ModelVariant.COMPONENTS),
    (KEY_LAMBDA, ModelVariant.MONO),
    (KEY_PROCESS, ModelVariant.PROCESSES),
)


def variant_of(raw: Mapping[str, Any]) -> ModelVariant:
    """
    Determine the model variant and reject keys from any other variant.

    Raises:
        vol.Invalid: If no variant is present or keys from two variants are mixed.

    """
    for defining_key, variant in _DEFINING_KEYS:
        if defining_key not in raw:
            continue
        allowed = {key.schema for key in VARIANT_SCHEMAS[variant].schema}
        for key in raw:
            if key not in allowed:
                msg = f"cannot be combined with '{defining_key}' (exactly one model variant per file)"
                raise vol.Invalid(msg, path=[key])
        return variant
    msg = f"no model described; expected one of {', '.join(repr(key) for key, _ in _DEFINING_KEYS)}"
    raise vol.Invalid(msg)


def validate_model_mapping(raw: Mapping[str, list[str]]) -> tuple[ModelVariant, dict[str, Any]]:
    """
    Run a raw key/value mapping through the model schemas.

    Returns:
        The variant and the converted values.

    Raises:
        vol.Invalid: On the first violated rule, with the offending key in its path.

    """
    keys = KEYS_SCHEMA(dict(raw))
    variant = variant_of(keys)
    return variant, VARIANT_SCHEMAS[variant](keys)


__all__ = [
    "KEYS_SCHEMA",
    "KEY_COMPONENT",
    "KEY_CONTRACT",
    "KEY_LAMBDA",
    "KEY_PROCESS",
    "KEY_S0",
    "MODEL_KEYS",
    "VARIANT_SCHEMAS",
    "ModelVariant",
    "validate_model_mapping",
    "variant_of",
]

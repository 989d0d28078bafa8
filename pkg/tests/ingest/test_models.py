"""Tests for model files."""

from __future__ import annotations

import logging
from pathlib import Path

import pytest

from sample_space_entropy.const import EXAMPLE_PROCESS_RATES, FOUR_COMPONENTS
from sample_space_entropy.data import ContractionModel, MonoExpModel, MultiExpModel, ProcessSet
from sample_space_entropy.exceptions import SampleSpaceEntropyIngestError, SampleSpaceEntropyValidationError
from sample_space_entropy.ingest import (
    ModelConfig,
    ModelVariant,
    dump_model,
    load_model,
    parse_model,
    save_model,
)

pytestmark = pytest.mark.unit

FOUR_COMPONENTS_TEXT = """
# four components
component = 0.4, 1
component = 0.3, 0.1   # second
component = 0.2, 0.01
component = 0.1, 0.001
"""


def test_parse_components() -> None:
    config = parse_model(FOUR_COMPONENTS_TEXT)
    assert config.variant is ModelVariant.COMPONENTS
    assert config.multiexp == MultiExpModel.from_pairs(FOUR_COMPONENTS)
    assert config.s0 == 1.0


def test_parse_components_with_size() -> None:
    config = parse_model("s0 = 250\ncomponent = 1, 1\n")
    assert config.s0 == 250.0


def test_parse_mono() -> None:
    config = parse_model("s0 = 7.5805\nlambda = 0.0555\n")
    assert config.variant is ModelVariant.MONO
    assert config.mono == MonoExpModel(7.5805, 0.0555)


def test_parse_processes() -> None:
    config = parse_model("process = 0.1\nprocess = 0.3\nprocess = 0.6\n")
    assert config.processes == ProcessSet(EXAMPLE_PROCESS_RATES)


def test_parse_contraction() -> None:
    config = parse_model("contract = 1000\n")
    assert config.contraction == ContractionModel(1000)
    assert config.processes is None

    multi = parse_model("contract = 1000\nprocess = 0.5\nprocess = 1.5\n")
    assert multi.variant is ModelVariant.CONTRACTION
    assert multi.contraction is not None
    assert multi.contraction.rate == 2.0
    assert multi.processes == ProcessSet((0.5, 1.5))


@pytest.mark.parametrize(
    ("text", "location", "rule"),
    [
        ("component = 0.6, 1\ncomponent = 0.6, 0.1\n", "component", "weights sum 1.2"),
        ("component = 0.5, 1\ncomponent = 0.5, 1\n", "component", "distinct"),
        ("foo = 1\nprocess = 0.1\n", "foo", "unknown key"),
        ("s0 = 1\nlambda = 0.1\nprocess = 0.3\n", "process", "cannot be combined"),
        ("component = 1, 1\nlambda = 0.1\n", "lambda", "cannot be combined"),
        ("s0 = 1\nlambda = 0\n", "lambda", ""),
        ("s0 = 0.5\nlambda = 0.1\n", "s0", ""),
        ("s0 = 1\nlambda = 0.1\nlambda = 0.2\n", "lambda", "given 2 times"),
        ("lambda = 0.1\n", "s0", ""),
        ("contract = 1000.5\n", "contract", "expected an integer"),
        ("contract = 1\n", "contract", ""),
        ("process = 1,000\n", "process", "thousands separators"),
        ("component = 0.5\n", "component", "expected 'A, c'"),
        ("# nothing here\n", "model", "no model described"),
        ("s0 = 1\nlambda\n", "line 2", "expected 'key = value'"),
        ("lambda =\n", "line 1", "has no value"),
    ],
)
def test_parse_errors(text: str, location: str, rule: str) -> None:
    """Errors name the file, the offending line or field, and the rule."""
    with pytest.raises(SampleSpaceEntropyIngestError) as excinfo:
        parse_model(text, "bad.model")
    error = excinfo.value
    assert error.path == Path("bad.model")
    assert error.location.startswith(location)
    assert rule in error.rule
    assert str(error).startswith(f"bad.model: {error.location}: ")


def test_ingest_error_is_validation_error() -> None:
    with pytest.raises(SampleSpaceEntropyValidationError):
        parse_model("foo = 1\n")


def test_weights_renormalized_on_load(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.DEBUG, logger="sample_space_entropy"):
        config = parse_model("component = 0.5000000002, 1\ncomponent = 0.5, 0.1\n")
    assert config.multiexp is not None
    assert sum(config.multiexp.weights) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("name", ["four_components.model", "processes.model", "broad_money.model", "contraction.model"])
def test_shipped_model_files(config_dir: Path, name: str) -> None:
    config = load_model(config_dir / name)
    assert parse_model(dump_model(config)) == config


@pytest.mark.parametrize(
    "config",
    [
        ModelConfig(ModelVariant.MONO, mono=MonoExpModel(7.5805, 0.0555)),
        ModelConfig(ModelVariant.PROCESSES, processes=ProcessSet((0.1, 0.3, 0.6))),
        ModelConfig(ModelVariant.COMPONENTS, multiexp=MultiExpModel.from_pairs(FOUR_COMPONENTS), s0=3.0),
        ModelConfig(
            ModelVariant.CONTRACTION,
            processes=ProcessSet((0.25, 0.75)),
            contraction=ContractionModel.from_processes(4096, ProcessSet((0.25, 0.75))),
        ),
        ModelConfig(ModelVariant.COMPONENTS, multiexp=MultiExpModel.from_pairs([(1 / 3, 1.0), (2 / 3, 0.07)])),
    ],
)
def test_save_and_load(tmp_path: Path, config: ModelConfig) -> None:
    path = tmp_path / "model.model"
    save_model(config, path)
    assert load_model(path) == config


def test_load_missing_file(tmp_path: Path) -> None:
    with pytest.raises(SampleSpaceEntropyIngestError, match="file not found"):
        load_model(tmp_path / "missing.model")


def test_load_binary_file(tmp_path: Path) -> None:
    path = tmp_path / "binary.model"
    path.write_bytes(b"\xff\xfe\x00")
    with pytest.raises(SampleSpaceEntropyIngestError, match="UTF-8"):
        load_model(path)


def test_model_config_invariants() -> None:
    with pytest.raises(SampleSpaceEntropyValidationError, match="exactly one model"):
        ModelConfig(ModelVariant.MONO)
    with pytest.raises(SampleSpaceEntropyValidationError, match="exactly one model"):
        ModelConfig(
            ModelVariant.MONO,
            mono=MonoExpModel(1.0, 1.0),
            multiexp=MultiExpModel.from_pairs([(1.0, 1.0)]),
        )
    with pytest.raises(SampleSpaceEntropyValidationError, match="cannot carry processes"):
        ModelConfig(ModelVariant.MONO, mono=MonoExpModel(1.0, 1.0), processes=ProcessSet((1.0,)))

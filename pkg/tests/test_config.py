import json
import logging

import pytest
from voluptuous import Optional, Schema

import homnambu.resource
from homnambu import config
from homnambu.creator import BaseCreator, RegistryCreator
from homnambu.decorators import timing
from homnambu.errors import (FormatError, InvalidParameterError,
                             UnknownNameError)
from homnambu.resource.parsers import add_parser, guess_type, remove_parser


@pytest.fixture
def run_yaml(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("command: deform\n"
                    "model: qvw\n"
                    "order: 2\n"
                    "params:\n"
                    "  z: -2i\n")
    return path


def test_from_dict_fills_defaults():
    cfg = config.from_dict({})
    assert cfg.command == "verify"
    assert cfg.format == "text"
    assert cfg.plain_nambu is False
    assert cfg.params == {}
    assert cfg.order is None


def test_from_dict_rejects_bad_values():
    with pytest.raises(InvalidParameterError):
        config.from_dict({"format": "xml"})
    with pytest.raises(InvalidParameterError):
        config.from_dict({"order": -1})
    with pytest.raises(InvalidParameterError):
        config.from_dict({"colour": "blue"})


def test_range_lists_stay_lists(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("sample:\n  range: [-2, 2]\nparams:\n  k: [2, 1/2, 1]\n")
    cfg = config.from_url(str(path))
    assert cfg.sample.range == [-2, 2]
    assert cfg.params.k == ["2", "1/2", "1"]
    assert config.from_dict({"sample": {"range": "-2..2"}}).sample.range == \
        "-2..2"


def test_from_url_yaml(run_yaml):
    cfg = config.from_url(str(run_yaml))
    assert cfg.command == "deform"
    assert cfg.order == 2
    assert cfg.params.z == "-2i"


def test_load_dispatch(run_yaml, monkeypatch):
    assert config.load({"model": "vw"}).model == "vw"
    assert config.load(str(run_yaml)).model == "qvw"
    monkeypatch.setenv("MY_RUN", str(run_yaml))
    assert config.load("MY_RUN").order == 2
    with pytest.raises(TypeError):
        config.load(3)


def test_from_env(run_yaml, monkeypatch):
    monkeypatch.delenv(config.ENVIRONMENT_VARIABLE, raising=False)
    with pytest.raises(InvalidParameterError):
        config.from_env()
    monkeypatch.setenv(config.ENVIRONMENT_VARIABLE, f"file://{run_yaml}")
    assert config.from_env().model == "qvw"


def test_merge_skips_unset_values():
    base = {"model": "vw", "params": {"z": "1", "q": "2"}}
    override = {"model": None, "params": {"z": "2i", "q": None},
                "sample": {"range": None}}
    assert config.merge(base, override) == {
        "model": "vw", "params": {"z": "2i", "q": "2"}, "sample": {}}
    assert base["params"]["z"] == "1"


def test_resource_parsers(tmp_path):
    data = tmp_path / "data.json"
    data.write_text(json.dumps({"a": [1, 2]}))
    assert homnambu.resource.load(str(data)) == {"a": [1, 2]}
    assert homnambu.resource.load(str(data), mimetype="text/plain") == \
        '{"a": [1, 2]}'

    notes = tmp_path / "notes.txt"
    notes.write_text("e1 + e2")
    assert homnambu.resource.load(f"file://{notes}") == "e1 + e2"
    assert homnambu.resource.load(str(notes), hook=str.split) == \
        ["e1", "+", "e2"]


def test_custom_parser(tmp_path):
    path = tmp_path / "values.csv"
    path.write_text("1,2,3")
    add_parser("text/csv", lambda f: f.read().split(","), ".csv")
    try:
        assert homnambu.resource.load(str(path)) == ["1", "2", "3"]
    finally:
        remove_parser("text/csv")


def test_remote_resources_are_rejected():
    with pytest.raises(FormatError):
        homnambu.resource.open_("s3://bucket/run.yaml")


class Scaled:
    SCHEMA = Schema({Optional("factor", default=1): int})

    def __init__(self, factor):
        self.factor = factor


class Plain:
    def __init__(self, *values):
        self.values = values


def test_registry_creator():
    creator = RegistryCreator({"scaled": Scaled, "plain": Plain},
                              kind="widget")
    assert creator({"scaled": {"factor": 3}}).factor == 3
    assert creator.create({"scaled": None}).factor == 1
    assert creator.create({"plain": [1, 2]}).values == (1, 2)
    assert creator.describe() == {"plain": [], "scaled": ["factor"]}
    assert creator.parameter_keys("scaled") == ["factor"]
    assert creator.parameter_keys("plain") is None

    with pytest.raises(UnknownNameError, match="Unknown widget 'round'"):
        creator.create({"round": {}})
    with pytest.raises(InvalidParameterError):
        creator.create({"scaled": {"factor": "many"}})
    with pytest.raises(InvalidParameterError):
        creator.create({"scaled": {}, "plain": []})


def test_base_creator_unpacks():
    assert BaseCreator.unpack_and_create(Scaled, {"factor": 2}).factor == 2
    assert BaseCreator.unpack_and_create(Plain, "x").values == ("x",)


def test_timing_logs_calls(caplog):
    @timing("square")
    def square(x):
        return x * x

    with caplog.at_level(logging.DEBUG, logger="homnambu.decorators"):
        assert square(4) == 16
    records = [r for r in caplog.records if getattr(r, "call", None)]
    assert [r.call for r in records] == ["square"]
    assert records[0].seconds >= 0


def test_timing_levels(caplog):
    @timing(log_level=None)
    def quiet():
        return 1

    with caplog.at_level(logging.DEBUG, logger="homnambu.decorators"):
        assert quiet() == 1
    assert not [r for r in caplog.records if getattr(r, "call", None)]

    with pytest.raises(ValueError):
        timing(log_level="LOUD")


def test_suffix_registry():
    assert guess_type("runs/a.YAML") == "application/yaml"
    assert guess_type("notes.md") is None
    assert homnambu.resource.local_path("file:///tmp/run.json") == \
        "/tmp/run.json"
    assert homnambu.resource.local_path("run.json") == "run.json"

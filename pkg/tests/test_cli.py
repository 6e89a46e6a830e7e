import json
import logging
from pathlib import Path

import pytest

from homnambu.cli import (EXIT_FAILED, EXIT_PASSED, EXIT_USAGE,
                          args_to_config, build_parser, join_signed_values,
                          main, resolve_config)
from homnambu.deformation import load

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv, environ=None):
    status = main(list(argv), environ=environ or {})
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_list_models(capsys):
    status, out, _ = run(capsys, "list-models")
    assert status == EXIT_PASSED
    assert "  cross4: method, theta\n" in out
    assert "  cross4-theta\n" in out

    status, out, _ = run(capsys, "list-models", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == "homnambu.models/1"
    assert data["models"]["vw"] == ["q", "range", "z"]
    assert sorted(data["families"]) == ["cross4", "jacobian", "qvw"]
    assert data["counterexamples"] == ["cross4-theta", "jacobian-k4"]


@pytest.mark.parametrize("name,golden", [
    ("cross4-theta", "cross4_theta.json"),
    ("jacobian-k4", "jacobian_k4.json"),
])
def test_counterexample_json_matches_golden(capsys, name, golden):
    status, out, _ = run(capsys, "counterexample", name, "--format", "json")
    assert status == EXIT_PASSED
    assert out == (GOLDEN / golden).read_text()


def test_counterexample_text(capsys):
    status, out, _ = run(capsys, "counterexample", "jacobian-k4", "--k4",
                         "0")
    assert status == EXIT_PASSED
    assert "residual: 0\n" in out
    assert "verdict: equal\n" in out
    assert "matches expected: yes\n" in out


def test_counterexample_usage_errors(capsys):
    status, _, err = run(capsys, "counterexample", "sl2-sigma")
    assert status == EXIT_USAGE
    assert err.startswith("homnambu: error: ")
    assert run(capsys, "counterexample", "cross4-theta", "--k4",
               "1")[0] == EXIT_USAGE
    assert run(capsys, "counterexample")[0] == EXIT_USAGE


def test_verify_cross4(capsys):
    status, out, _ = run(capsys, "verify", "cross4")
    assert status == EXIT_PASSED
    assert "hom_nambu_identity: passed (1024 samples)\n" in out
    assert out.endswith("result: passed\n")


def test_verify_rotated_cross4_plain_nambu_fails(capsys):
    status, out, _ = run(capsys, "verify", "cross4", "--theta",
                         "exact:0,1,0,1", "--plain-nambu", "--format", "json")
    assert status == EXIT_FAILED
    data = json.loads(out)
    assert data["schema"] == "homnambu.verify/1"
    assert data["plain_nambu"] is True
    assert data["passed"] is False
    nambu = next(r for r in data["reports"] if r["check"] == "nambu_identity")
    witnesses = [v["witness"] for v in nambu["violations"]]
    assert ["e1", "e2", "e3", "e4", "e1 + e2 + e4"] in witnesses


def test_verify_rotated_cross4_hom_nambu_passes(capsys):
    status, _, _ = run(capsys, "verify", "cross4", "--theta",
                       "exact:3/5,4/5,5/13,12/13")
    assert status == EXIT_PASSED


def test_verify_vw_off_the_nambu_lie_values(capsys):
    status, out, _ = run(capsys, "verify", "vw", "--z", "1", "--range",
                         "0..2", "--format", "json")
    assert status == EXIT_FAILED
    data = json.loads(out)
    assert data["params"]["z"] == "1"
    identity = next(r for r in data["reports"]
                    if r["check"] == "hom_nambu_identity")
    assert identity["sample_size"] == 6 ** 5
    assert ["Q_0", "R_1", "Q_2", "Q_1", "Q_0"] in \
        [v["witness"] for v in identity["violations"]]


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify")[0] == EXIT_USAGE
    assert run(capsys, "verify", "sl2")[0] == EXIT_USAGE
    assert run(capsys, "verify", "vw", "--range", "3..1")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "frobnicate")[0] == EXIT_USAGE


def test_signed_values_are_kept_with_their_flags():
    assert join_signed_values(["verify", "vw", "--z", "-2i", "--range",
                               "-2..2", "--format", "json"]) == \
        ["verify", "vw", "--z=-2i", "--range=-2..2", "--format", "json"]
    assert join_signed_values(["--z", "--range", "0..1"]) == \
        ["--z", "--range", "0..1"]

    args = build_parser().parse_args(["verify", "vw", "--z", "1", "--range",
                                      "-2..2"])
    assert (args.z, args.range) == ("1", "-2..2")
    args = build_parser().parse_args(["deform", "qvw", "--z", "-2i"])
    assert args.z == "-2i"


def test_verify_vw_with_negative_indices(capsys):
    status, out, _ = run(capsys, "verify", "vw", "--z", "-2i", "--range",
                         "-1..0", "--format", "json")
    assert status == EXIT_PASSED
    data = json.loads(out)
    assert data["params"]["z"] == "-2i"
    assert data["params"]["range"] == "-1..0"


@pytest.mark.slow
def test_verify_vw_default_range_fails_for_z_one(capsys):
    status, _, _ = run(capsys, "verify", "vw", "--z", "1", "--range", "-2..2")
    assert status == EXIT_FAILED


def test_flags_a_model_ignores(capsys, caplog):
    with caplog.at_level(logging.WARNING, logger="homnambu.cli"):
        status, _, _ = run(capsys, "verify", "cross4", "--z", "2i")
    assert status == EXIT_PASSED
    assert "model 'cross4' ignores z" in caplog.text


def test_deform_cross4(capsys, tmp_path):
    path = tmp_path / "cross4.hnd"
    status, out, _ = run(capsys, "deform", "cross4", "--order", "1",
                         "--save", str(path))
    assert status == EXIT_PASSED
    assert "family: cross4(n=2, N=1)\n" in out
    assert "degree  checked  failing\n" in out
    assert out.endswith("result: passed\n")
    assert load(str(path)).order == 1


def test_deform_json(capsys):
    status, out, _ = run(capsys, "deform", "jacobian", "--order", "1",
                         "--degree", "0", "--format", "json")
    assert status == EXIT_PASSED
    data = json.loads(out)
    assert data["schema"] == "homnambu.deformation-report/1"
    assert data["params"]["parameters"] == ["k4"]
    assert [row["failing"] for row in data["degrees"]] == [0, 0]


def test_deform_forwards_family_parameters(capsys, caplog):
    with caplog.at_level(logging.WARNING, logger="homnambu.cli"):
        status, _, _ = run(capsys, "deform", "cross4", "--order", "1",
                           "--z", "2i")
    assert status == EXIT_PASSED
    assert "family 'cross4' ignores z" in caplog.text

    status, out, _ = run(capsys, "deform", "jacobian", "--order", "1",
                         "--k", "2,1/2,1", "--degree", "0", "--format",
                         "json")
    assert status == EXIT_PASSED
    params = json.loads(out)["params"]
    assert params["k"] == ["2", "1/2", "1"]
    assert params["degree"] == 0
    assert run(capsys, "deform", "jacobian", "--order", "1", "--k",
               "2,1,1")[0] == EXIT_USAGE

    status, out, _ = run(capsys, "deform", "qvw", "--order", "1", "--z",
                         "-2i", "--range", "-1..0", "--format", "json")
    assert status == EXIT_PASSED
    params = json.loads(out)["params"]
    assert (params["z"], params["range"]) == ("-2i", "-1..0")


def test_reports_are_deterministic(capsys):
    for argv in (("verify", "cross4", "--format", "json"),
                 ("deform", "cross4", "--order", "1", "--format", "json"),
                 ("counterexample", "jacobian-k4")):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[0] == EXIT_PASSED
        assert first[1] == second[1]


def test_deform_refuses_z(capsys):
    status, _, err = run(capsys, "deform", "qvw", "--z", "1")
    assert status == EXIT_USAGE
    assert "Nambu-Lie" in err


def test_config_file_and_flags(capsys, tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("model: vw\n"
                    "params:\n"
                    "  z: '1'\n"
                    "sample:\n"
                    "  range: 0..2\n"
                    "format: json\n")
    status, out, _ = run(capsys, "verify", "--config", str(path))
    assert status == EXIT_FAILED
    assert json.loads(out)["params"]["z"] == "1"

    status, out, _ = run(capsys, "verify", "--config", str(path), "--z",
                         "2i")
    assert status == EXIT_PASSED
    assert json.loads(out)["params"]["range"] == "0..2"


def test_config_from_environment(capsys, tmp_path):
    path = tmp_path / "env.json"
    path.write_text(json.dumps({"model": "cross4", "format": "json"}))
    environ = {"HOMNAMBU_CONFIG": str(path)}
    status, out, _ = run(capsys, "verify", environ=environ)
    assert status == EXIT_PASSED
    assert json.loads(out)["model"] == "cross4"


def test_config_must_be_a_mapping(capsys, tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")
    assert run(capsys, "verify", "--config", str(path))[0] == EXIT_USAGE


def test_resolve_config_defaults():
    args = build_parser().parse_args(["verify", "cross4"])
    assert args_to_config(args)["params"]["z"] is None
    cfg = resolve_config(args, environ={})
    assert cfg.model == "cross4"
    assert cfg.format == "text"
    assert cfg.plain_nambu is False
    assert cfg.sample == {}

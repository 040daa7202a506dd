from __future__ import annotations

import json

import pytest

from mhdouble.cli import (
    EXIT_CONFIG,
    EXIT_FAIL,
    EXIT_PASS,
    SEED_ENV,
    RunConfig,
    _config_from_args,
    build_parser,
    main,
    run,
)
from mhdouble.errors import ConfigError
from mhdouble.report import parse_json, serialize


def _json_doc(capsys, argv):
    status = main(argv)
    return status, json.loads(capsys.readouterr().out)


def test_group_braided_json_exits_zero(capsys):
    status, doc = _json_doc(capsys, ["verify", "--group", "sym:3", "--suite", "braided", "--report", "json"])
    assert status == EXIT_PASS and doc["all_pass"]
    assert doc["checks"] and all(c["samples"] > 0 for c in doc["checks"])
    assert {"instance", "field", "seed", "window", "checks", "all_pass", "schema_version"} <= set(doc)


def test_taft_run_exits_zero(capsys):
    argv = ["verify", "--instance", "qtaft", "--taft-m", "2", "--taft-i", "1", "--field", "rational",
            "--truncate", "2", "--suite", "yd,taft", "--samples", "30", "--seed", "7", "--report", "json"]
    status, doc = _json_doc(capsys, argv)
    assert status == EXIT_PASS
    assert doc["params"]["lambda"] == "-1"  # resolved λ is echoed


def test_corrupted_run_exits_one_with_witness(capsys):
    argv = ["verify", "--group", "sym:3", "--suite", "commutativity", "--samples", "exhaustive",
            "--corrupt", "trivial_action", "--report", "json"]
    status, doc = _json_doc(capsys, argv)
    assert status == EXIT_FAIL and not doc["all_pass"]
    bad = [c for c in doc["checks"] if not c["pass"]][0]
    row = bad["failures"][0]
    assert row["inputs"] and row["lhs"] != row["rhs"]


@pytest.mark.parametrize("argv", [
    ["verify", "--instance", "qtaft", "--taft-m", "3", "--field", "rational"],
    ["verify", "--group", "z", "--samples", "exhaustive"],
    ["verify", "--group", "nope:3"],
    ["verify", "--suite", "everything"],
    ["verify", "--samples", "lots"],
    ["verify", "--field", "fq:8"],
])
def test_config_errors_exit_two(capsys, argv):
    assert main(argv) == EXIT_CONFIG
    assert "error" in capsys.readouterr().err


def test_unwritable_output_exits_two(capsys, tmp_path):
    target = tmp_path / "missing" / "r.json"
    assert main(["verify", "--group", "zn:2", "--suite", "module", "--output", str(target)]) == EXIT_CONFIG


def test_output_file_and_byte_stability(tmp_path):
    argv = ["verify", "--group", "dihedral:3", "--suite", "yd", "--samples", "40", "--seed", "5", "--report", "json"]
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        assert main(argv + ["--output", str(p)]) == EXIT_PASS
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_seed_from_environment(monkeypatch):
    cfg = dict(group="z", suite="module", samples="20", report="json")
    monkeypatch.setenv(SEED_ENV, "11")
    args = build_parser().parse_args(["verify", "--group", "z"])
    assert _config_from_args(args).seed == 11
    monkeypatch.setenv(SEED_ENV, "eleven")
    assert main(["verify", "--group", "z", "--suite", "module"]) == EXIT_CONFIG
    _, a = run(RunConfig(seed=11, **cfg))
    _, b = run(RunConfig(seed=12, **cfg))
    assert a != b


def test_json_round_trip():
    _, text = run(RunConfig(group="zn:3", suite="module,comodule", samples="exhaustive", report="json"))
    doc = parse_json(text)
    assert serialize(doc, "json") == text
    assert parse_json(serialize(doc, "json")) == doc
    with pytest.raises(ConfigError):
        parse_json(json.dumps({**doc, "schema_version": 99}))


def test_text_report_table():
    status, text = run(RunConfig(group="zn:3", suite="module", samples="exhaustive"))
    assert status == EXIT_PASS
    assert "all checks pass: yes" in text
    assert any(line.rstrip().endswith("PASS") for line in text.splitlines())


def test_run_config_round_trip_and_validation():
    cfg = RunConfig(instance="qtaft", taft_m=3, field="fq:7", window=4, seed=3)
    assert RunConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg
    for bad in (RunConfig(instance="lie"), RunConfig(report="xml"), RunConfig(corrupt="x")):
        with pytest.raises(ConfigError):
            bad.validate()


def test_controls_subcommand(capsys):
    assert main(["controls", "--report", "json"]) == EXIT_PASS
    doc = json.loads(capsys.readouterr().out)
    assert doc["all_caught"] and all(r["witness"] for r in doc["controls"])

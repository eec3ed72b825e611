"""Command-line contract: headers, schema, determinism, exit codes."""

import io
import json
import subprocess
import sys

import pytest

from modknots.cli import RunConfig, parse_config, run


def capture(config):
    out = io.StringIO()
    status = run(config, out=out)
    return status, out.getvalue()


def test_enumerate_csv_contract():
    status, text = capture(RunConfig(command="enumerate", trace_bound=5))
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "necklace,a,b,c,d,trace,length"
    assert len(lines) == 1 + 3  # header + LR, LLR, LRR
    assert lines[1].startswith("LR,1,1,1,2,3,")


def test_symbols_csv_appends_symbol_columns():
    status, text = capture(RunConfig(command="symbols", trace_bound=5))
    assert status == 0
    header = text.splitlines()[0]
    assert header == "necklace,a,b,c,d,trace,length,phi,psi,psi_word"
    row = text.splitlines()[1].split(",")
    assert row[0] == "LR" and row[7] == "3" and row[8] == "0" and row[9] == "0"


def test_density_json_smallest_case():
    status, text = capture(
        RunConfig(command="density", trace_bound=5, modulus=3, output_format="json")
    )
    assert status == 0
    payload = json.loads(text)
    assert payload["schema_version"] == 1
    assert payload["counts"] == [1, 1, 1]
    assert payload["densities"] == [pytest.approx(1 / 3)] * 3


def test_every_json_payload_is_versioned():
    configs = [
        RunConfig(command="enumerate", trace_bound=5, output_format="json"),
        RunConfig(command="symbols", trace_bound=5, output_format="json"),
        RunConfig(command="density", trace_bound=10, modulus=2, output_format="json"),
        RunConfig(command="cauchy", length_bound=5.0, output_format="json"),
        RunConfig(command="winding", trace_bound=6, output_format="json"),
    ]
    for config in configs:
        status, text = capture(config)
        assert status == 0
        assert json.loads(text)["schema_version"] == 1


def test_cauchy_json_is_strict():
    status, text = capture(RunConfig(command="cauchy", length_bound=5.0, output_format="json"))
    assert status == 0
    payload = json.loads(text)  # would fail on bare Infinity tokens
    assert payload["bins"][0]["lo"] == "-inf"
    assert payload["bins"][-1]["hi"] == "inf"


def test_winding_rows_agree():
    status, text = capture(RunConfig(command="winding", trace_bound=8))
    assert status == 0
    for line in text.splitlines()[1:]:
        assert line.endswith(",true")


def test_identical_config_identical_bytes():
    config = RunConfig(command="symbols", trace_bound=30)
    assert capture(config) == capture(config)


def test_worker_count_does_not_change_bytes():
    base = capture(RunConfig(command="enumerate", trace_bound=40, worker_count=1))
    multi = capture(RunConfig(command="enumerate", trace_bound=40, worker_count=3))
    assert base == multi


def test_verify_returns_zero_and_reports_every_check():
    status, text = capture(RunConfig(command="verify", trace_bound=14, n_samples=64))
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "check,result,detail"
    assert len(lines) >= 9
    assert all(",PASS," in line for line in lines[1:])


def test_parse_config_defaults_and_env(monkeypatch):
    monkeypatch.delenv("MODKNOTS_WORKERS", raising=False)
    config = parse_config(["enumerate", "--trace-bound", "10"])
    assert config.worker_count == 1
    monkeypatch.setenv("MODKNOTS_WORKERS", "3")
    config = parse_config(["enumerate", "--trace-bound", "10"])
    assert config.worker_count == 3
    # explicit flag beats the environment
    config = parse_config(["enumerate", "--trace-bound", "10", "--workers", "2"])
    assert config.worker_count == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate"],  # no bound
        ["enumerate", "--trace-bound", "5", "--length-bound", "4.0"],  # both bounds
        ["enumerate", "--trace-bound", "1"],
        ["density", "--trace-bound", "5", "--mod", "1"],
        ["density", "--trace-bound", "5"],  # missing modulus
        ["cauchy"],  # missing length bound
        ["nonsense"],
    ],
)
def test_config_errors_exit_two(argv):
    with pytest.raises(SystemExit) as err:
        parse_config(argv)
    assert err.value.code == 2


def test_unknown_command_in_run():
    assert run(RunConfig(command="bogus"), out=io.StringIO()) == 2


def test_subprocess_end_to_end():
    proc = subprocess.run(
        [sys.executable, "-m", "modknots.cli", "enumerate", "--trace-bound", "4"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == [
        "necklace,a,b,c,d,trace,length",
        "LR,1,1,1,2,3,1.9248473002384139",
    ]
    assert proc.stderr == ""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from cubicsieve.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch) -> None:
    for name in (
        "CUBICSIEVE_DEPTH",
        "CUBICSIEVE_TOL",
        "CUBICSIEVE_PRECISION",
        "CUBICSIEVE_FORMAT",
        "CUBICSIEVE_CONFIG_PATH",
        "CUBICSIEVE_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_moments_of_q(capsys) -> None:
    assert main(["moments", "--weight", "Q", "--count", "3", "--format", "json"]) == EXIT_OK
    document = _json(capsys)
    assert set(document) == {"weight", "moments"}
    assert document["weight"] == "Q"
    assert len(document["moments"]) == 7
    assert document["moments"][2] == {"rat": "0", "sqrt2": "7/120"}
    assert document["moments"][4] == {"rat": "0", "sqrt2": "107/40320"}
    assert document["moments"][6] == {"rat": "0", "sqrt2": "835/6150144"}


def test_moments_plain_rows_cover_the_whole_table(capsys) -> None:
    assert main(["moments", "--weight", "Q", "--count", "3", "--format", "plain"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[:3] == ["moments of w_Q", "", "[moments]"]
    assert lines[3].split() == ["k", "rat", "sqrt2"]
    assert lines[-1].split() == ["6", "0", "835/6150144"]
    assert len(lines) == 11


def test_moments_of_p_total_mass(capsys) -> None:
    assert main(["moments", "--weight", "P", "--n", "0"]) == EXIT_OK
    assert _json(capsys) == {"weight": "P", "moments": [{"rat": "0", "sqrt2": "2"}]}


def test_unknown_weight_is_a_usage_error() -> None:
    assert main(["moments", "--weight", "X"]) == EXIT_USAGE


def test_missing_command_is_a_usage_error() -> None:
    assert main([]) == EXIT_USAGE


def test_gammas_report(capsys) -> None:
    assert main(["gammas", "--n", "4", "--format", "json"]) == EXIT_OK
    document = _json(capsys)
    assert document["passed"] is True
    rows = {row["index"]: row for row in document["comparison"]["rows"]}
    assert rows[9]["chain"] == "3187/12870"
    assert rows[10]["direct"] == "1624/6435"
    assert document["ledger"][1]["s"] == "7/240"


def test_corrupted_moment_fails_the_check(capsys) -> None:
    assert main(["gammas", "--n", "2", "--corrupt-moment", "16"]) == EXIT_CHECK_FAILED
    assert _json(capsys)["passed"] is False


def test_verify_conjecture() -> None:
    assert main(["verify", "conjecture", "--n", "20"]) == EXIT_OK


def test_verify_mapping_lists_thirty_identities(capsys) -> None:
    assert main(["verify", "mapping", "--n", "10", "--format", "json"]) == EXIT_OK
    document = _json(capsys)
    identities = [row for row in document["rows"] if row["identity"] != "divisibility"]
    assert len(identities) == 30
    assert all(row["pass"] for row in document["rows"])


def test_verify_orthogonality(capsys) -> None:
    assert main(["verify", "orthogonality", "--n", "8", "--tol", "1e-9", "--format", "plain"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[1] == "status: PASS"
    assert "[numeric]" in out


def test_verify_weights_with_a_config_file(tmp_path: Path, capsys) -> None:
    config = tmp_path / "small.yaml"
    config.write_text("grid_points: 200\nmin_grid_points: 1001\n", encoding="utf-8")
    assert main(["verify", "weights", "--config", str(config), "--format", "csv"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("name,points,max_error,tolerance,pass")


def test_repeated_runs_are_byte_identical(tmp_path: Path) -> None:
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["gammas", "--n", "3", "--format", "csv", "--out", str(first)]) == EXIT_OK
    assert main(["gammas", "--n", "3", "--format", "csv", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert first.read_text(encoding="utf-8").startswith("n,delta_rat,delta_sqrt2,s,g,gamma\n")


def test_environment_sets_defaults_and_flags_win(monkeypatch, capsys) -> None:
    monkeypatch.setenv("CUBICSIEVE_DEPTH", "1")
    monkeypatch.setenv("CUBICSIEVE_FORMAT", "json")
    assert main(["gammas"]) == EXIT_OK
    assert _json(capsys)["depth"] == 1
    assert main(["gammas", "--n", "2"]) == EXIT_OK
    assert _json(capsys)["depth"] == 2


def test_configuration_errors_exit_with_two(tmp_path: Path, monkeypatch) -> None:
    bad = tmp_path / "bad.yaml"
    bad.write_text("depth: 0\n", encoding="utf-8")
    assert main(["gammas", "--config", str(bad)]) == EXIT_USAGE
    assert main(["gammas", "--tol", "-1"]) == EXIT_USAGE
    assert main(["gammas", "--n", "1", "--log-level", "NOPE"]) == EXIT_USAGE
    monkeypatch.setenv("CUBICSIEVE_TOL", "abc")
    assert main(["gammas", "--n", "1"]) == EXIT_USAGE


def test_parser_knows_every_command() -> None:
    parser = build_parser()
    args = parser.parse_args(["verify", "mapping", "--n", "3", "--out", "r.json"])
    assert (args.command, args.target, args.depth, args.out) == ("verify", "mapping", 3, Path("r.json"))
    serve = parser.parse_args(["serve", "--port", "9000"])
    assert serve.port == 9000

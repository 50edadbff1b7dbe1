from __future__ import annotations

import json

import click
from click.testing import CliRunner

from qdissect import cli as cli_module
from qdissect.cli import cli

A_SPEC = "(q,q^4;q^5) (q^6,q^9;q^15)^2"
MOD10_SPEC = "(-q,-q^4;q^5) (q,q^9;q^10)^3"


def test_cli_prove_certified_exit_zero() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["prove", A_SPEC, "--mod", "5", "--residue", "3", "--order", "300"])
    assert result.exit_code == 0
    assert "command-line: certified to order 300" in result.stdout
    assert "group 1 * phi(q^15):" in result.stdout


def test_cli_verify_refuted_exit_one_with_witness() -> None:
    runner = CliRunner()
    result = runner.invoke(
        cli, ["verify", A_SPEC, "--mod", "5", "--residue", "1", "--order", "200", "--json"]
    )
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["status"] == "refuted"
    assert payload["first_counterexample"] == {"n": 1, "coeff": "-1"}


def test_cli_parse_errors_exit_two() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["verify", "(q;q^1)", "--mod", "5", "--residue", "0"])
    assert result.exit_code == 2
    result = runner.invoke(cli, ["expand", "(q,q^3;q^5)"])
    assert result.exit_code == 2
    assert "exponents do not sum to modulus" in result.stderr
    assert result.stdout == ""


def test_cli_prove_out_of_scope_exit_three() -> None:
    runner = CliRunner()
    result = runner.invoke(
        cli, ["prove", MOD10_SPEC, "--mod", "5", "--residue", "2", "--order", "200", "--json"]
    )
    assert result.exit_code == 3
    payload = json.loads(result.stdout)
    assert payload["status"] == "inapplicable"
    assert "power 3" in payload["reason"]


def test_cli_expand_json(tmp_path) -> None:
    runner = CliRunner()
    result = runner.invoke(
        cli,
        ["expand", "(q,q^4;q^5)", "--order", "8", "--json", "--cache-dir", str(tmp_path)],
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["order"] == 8
    assert list((tmp_path / "series").glob("*.json"))


def test_cli_expand_text() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["expand", "(q,q^4;q^5)", "--order", "7"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "0 1", "1 -1", "4 -1", "5 1", "6 -1", "7 1", "+ O(q^8)"
    ]


def test_cli_catalog_brute_force_json_and_markdown(tmp_path) -> None:
    runner = CliRunner()
    out = tmp_path / "claims.md"
    result = runner.invoke(
        cli, ["catalog", "--no-prove", "--order", "200", "--json", "--out", str(out)]
    )
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["summary"] == {
        "certified": 0,
        "verified": 65,
        "refuted": 0,
        "inapplicable": 0,
    }
    assert out.read_text(encoding="utf-8").startswith("# Vanishing coefficient claims")


def test_cli_catalog_rejects_zero_concurrency() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["catalog", "--concurrency", "0"])
    assert result.exit_code == 2
    assert "concurrency must be >= 1" in result.stderr


def test_cli_scan_control_family_is_empty() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["scan", "--family", "plain15", "--no-prove", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.stdout)
    assert payload["family"] == "plain15"
    assert payload["findings"] == []


def test_cli_scan_errors_exit_two(fixtures_dir) -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["scan", "--family", "missing"])
    assert result.exit_code == 2
    assert "unknown family" in result.stderr
    invalid = str(fixtures_dir / "family_invalid.json")
    assert runner.invoke(cli, ["scan", "--family", invalid]).exit_code == 2
    assert runner.invoke(cli, ["scan", "--family", "c", "--mod", "1"]).exit_code == 2


def test_cli_families_listing() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["families"])
    assert result.exit_code == 0
    names = [line.split()[0] for line in result.stdout.splitlines()]
    assert "c" in names
    assert "tang-b1" in names


def test_cli_usage_option_shows_guide() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["prove", "--usage"])
    assert result.exit_code == 0
    assert "qdissect COMMAND [OPTIONS]" in result.stdout
    assert "Examples:" in result.stdout


def test_cli_help_option_shows_options() -> None:
    runner = CliRunner()
    result = runner.invoke(cli, ["scan", "-h"])
    assert result.exit_code == 0
    assert "--family" in result.stdout
    assert "--usage" in result.stdout
    assert "expand" in runner.invoke(cli, []).stdout


def test_main_returns_exit_codes(monkeypatch) -> None:
    argv = ["qdissect", "prove", MOD10_SPEC, "--mod", "5", "--residue", "2", "--order", "100"]
    monkeypatch.setattr("sys.argv", argv)
    assert cli_module.main() == 3
    argv = ["qdissect", "verify", "(q;q^1)", "--mod", "5", "--residue", "0"]
    monkeypatch.setattr("sys.argv", argv)
    assert cli_module.main() == 2
    monkeypatch.setattr("sys.argv", ["qdissect", "verify", A_SPEC])
    assert cli_module.main() == 2


def test_cli_prove_without_lattice_form_reports_refutation() -> None:
    runner = CliRunner()
    result = runner.invoke(
        cli, ["prove", "(q,q^4;q^5)", "--mod", "5", "--residue", "1", "--order", "200", "--json"]
    )
    assert result.exit_code == 1
    payload = json.loads(result.stdout)
    assert payload["status"] == "refuted"
    assert payload["first_counterexample"] == {"n": 1, "coeff": "-1"}


def test_main_interrupt_is_not_a_refutation(monkeypatch) -> None:
    def interrupted(*args, **kwargs):  # noqa: ANN002, ANN003, ANN202
        raise click.exceptions.Abort()

    monkeypatch.setattr(cli_module.cli, "main", interrupted)
    assert cli_module.main() == cli_module.EXIT_USAGE

"""Tests for the command-line entry point."""

import json

import pytest

from qrk.catalog.registry import list_records
from qrk.cli import run


class TestVerifyCommand:
    def test_verify_passes(self, capsys):
        assert run(["verify", "eq53", "--order", "20"]) == 0
        assert capsys.readouterr().out.strip() == "eq53: pass"

    def test_unknown_identity(self, capsys):
        assert run(["verify", "nosuch"]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "nosuch" in captured.err

    def test_json_output(self, capsys):
        assert run(["verify", "eq19", "--order", "4", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == {
            "id", "status", "mode", "params", "first_failure", "witness", "elapsed_ms",
        }
        assert payload["params"] == {"N": 4}

    def test_json_output_is_repeatable(self, capsys):
        run(["verify", "eq21", "--order", "3", "--json"])
        first = capsys.readouterr().out
        run(["verify", "eq21", "--order", "3", "--json"])
        assert capsys.readouterr().out == first

    def test_q_order_reaches_q_series_records(self, capsys):
        assert run(["verify", "eq88", "--q-order", "8", "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["params"]["T"] == 8

    def test_known_false_exits_zero(self, capsys):
        assert run(["verify", "prime-partition"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("prime-partition: known-false-confirmed at 21")


class TestListCommand:
    def test_json_listing(self, capsys):
        assert run(["list", "--json"]) == 0
        lines = capsys.readouterr().out.splitlines()
        ids = [json.loads(line)["id"] for line in lines]
        assert ids == [r.id for r in list_records()]


class TestQntCommand:
    def test_chi_emit(self, capsys):
        assert run(["qnt", "chi", "--p", "5", "--emit"]) == 0
        assert capsys.readouterr().out == "-4 + 3*y + y^3 - 2*y^5 + y^6\n"

    def test_chi_rejects_two(self, capsys):
        assert run(["qnt", "chi", "--p", "2"]) == 2
        assert "remainder" in capsys.readouterr().err

    def test_fermat_sweep(self, capsys):
        assert run(["qnt", "fermat", "--p", "7", "--a-max", "10"]) == 0
        assert len(capsys.readouterr().out.splitlines()) == 10

    def test_wilson(self):
        assert run(["qnt", "wilson", "--p", "11"]) == 0

    def test_euler(self):
        assert run(["qnt", "euler", "--m", "9", "--a", "4"]) == 0

    def test_euler_rejects_common_factor(self):
        assert run(["qnt", "euler", "--m", "9", "--a", "3"]) == 2


class TestPartitionCommand:
    def test_congruences(self, capsys):
        assert run(["partition", "--check5", "--check7", "--order", "20"]) == 0
        assert capsys.readouterr().out.splitlines() == ["partitions5: pass", "partitions7: pass"]

    def test_scan_prime(self, capsys):
        assert run(["partition", "--scan-prime", "30"]) == 0
        assert "n=21: c=30, d=31" in capsys.readouterr().out


class TestEvalCommand:
    def test_geometric(self, capsys):
        assert run(["eval", "1/(1-x)", "--order", "3"]) == 0
        assert capsys.readouterr().out == "1 + x + x^2 + x^3 + O(x^4)\n"

    def test_syntax_error(self, capsys):
        assert run(["eval", "qbinom(2"]) == 2
        assert "position 8" in capsys.readouterr().err

    def test_evaluation_error(self, capsys):
        assert run(["eval", "sum(k, 0, inf, 1)", "--order", "3"]) == 1
        assert "ValuationError" in capsys.readouterr().err


class TestUsage:
    @pytest.mark.parametrize("argv", [[], ["bogus"], ["verify"], ["verify", "eq2", "--order", "x"]])
    def test_usage_errors(self, argv, capsys):
        assert run(argv) == 2
        assert capsys.readouterr().err

    def test_help(self, capsys):
        assert run(["--help"]) == 0
        assert "verify-all" in capsys.readouterr().out

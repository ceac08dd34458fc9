import json

import pytest

from knotram.cli import main, selftest


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


class TestCommands:
    @staticmethod
    def test_norm(capsys):
        code, out = _run(capsys, ["norm", "--t", "29", "--d", "11"])
        assert code == 0
        payload = json.loads(out)
        assert payload["norm"]["value"] == "-5818889"
        assert payload["square_check"]

    @staticmethod
    def test_norm_text(capsys):
        argv = ["--format", "text", "norm", "--t", "29", "--d", "5"]
        code, out = _run(capsys, argv)
        assert code == 0
        assert out.strip() == "N_5(t=29) = 1051"

    @staticmethod
    def test_norm_square_method(capsys):
        argv = ["norm", "--t", "29", "--d", "7", "--method", "square"]
        code, out = _run(capsys, argv)
        assert code == 0
        assert json.loads(out)["norm"]["via"] == "square-root"

    @staticmethod
    def test_charvar(capsys):
        code, out = _run(capsys, ["charvar", "--t", "3"])
        assert code == 0
        payload = json.loads(out)
        assert payload["alexander"] == "2*x^2 - 3*x + 2"
        assert payload["validation"]["passed"]
        assert payload["newton_certified"]

    @staticmethod
    def test_certify(capsys):
        code, out = _run(capsys, ["certify", "--t", "29", "--d", "13"])
        assert code == 0
        payload = json.loads(out)
        assert [x["l"] for x in payload["ramified"]] == ["1117", "1481"]
        assert payload["status"] == "complete"

    @staticmethod
    def test_subcommand_d_beside_global_options(capsys):
        argv = [
            "--digit-cap",
            "100",
            "--debug",
            "certify",
            "--t",
            "29",
            "--d",
            "7",
        ]
        code, out = _run(capsys, argv)
        assert code == 0
        assert [x["l"] for x in json.loads(out)["ramified"]] == ["13"]

    @staticmethod
    def test_no_prefix_matching(capsys):
        argv = ["--trial", "100", "norm", "--t", "29", "--d", "5"]
        code, out = _run(capsys, argv)
        assert code == 1
        assert out == ""

    @staticmethod
    def test_table_csv(capsys):
        argv = [
            "--format",
            "csv",
            "table",
            "--t",
            "29",
            "--d-min",
            "5",
            "--d-max",
            "11",
        ]
        code, out = _run(capsys, argv)
        assert code == 0
        assert out.splitlines() == [
            "d,primes,status",
            "5,,complete",
            "7,13,complete",
            "9,431,complete",
            "11,43;131;1033,complete",
        ]

    @staticmethod
    def test_table_json(capsys):
        argv = ["table", "--t", "29", "--d-min", "5", "--d-max", "9"]
        code, out = _run(capsys, argv)
        assert code == 0
        payload = json.loads(out)
        assert [row["d"] for row in payload["rows"]] == [5, 7, 9]
        assert payload["recurrences"] == []

    @staticmethod
    def test_omega(capsys):
        code, out = _run(capsys, ["omega", "--t", "29", "--n", "9"])
        assert code == 0
        payload = json.loads(out)
        assert payload["omega"] == "360316"
        assert payload["signed_identity"]

    @staticmethod
    def test_search(capsys):
        argv = [
            "--certify-digits",
            "0",
            "search",
            "--t",
            "29",
            "--p",
            "3",
            "--q",
            "5",
            "--flips",
            "1",
        ]
        code, out = _run(capsys, argv)
        assert code == 0
        payload = json.loads(out)
        witness = payload["witnesses"][0]
        assert (witness["n_prev"], witness["n_next"]) == (45, 1125)
        assert witness["candidates"] == [25, 225, 1125]

    @staticmethod
    def test_search_exhausted(capsys):
        argv = [
            "search",
            "--t",
            "29",
            "--p",
            "3",
            "--q",
            "5",
            "--flips",
            "1",
            "--exponent-cap",
            "2",
        ]
        code, out = _run(capsys, argv)
        assert code == 3
        assert json.loads(out)["budget_exhausted"]

    @staticmethod
    @pytest.mark.slow
    def test_selftest(capsys):
        code, out = _run(capsys, ["selftest"])
        assert code == 0
        assert json.loads(out)["passed"]


class TestExitCodes:
    @staticmethod
    def test_even_t(capsys):
        code, out = _run(capsys, ["norm", "--t", "30", "--d", "5"])
        assert code == 2
        assert out == ""

    @staticmethod
    def test_even_d(capsys):
        code, _ = _run(capsys, ["certify", "--t", "29", "--d", "10"])
        assert code == 2

    @staticmethod
    def test_even_t_table(capsys):
        argv = ["table", "--t", "30", "--d-min", "5", "--d-max", "7"]
        code, out = _run(capsys, argv)
        assert code == 2
        assert out == ""

    @staticmethod
    def test_bad_primes(capsys):
        argv = ["search", "--t", "29", "--p", "3", "--q", "7"]
        code, out = _run(capsys, argv)
        assert code == 2
        assert out == ""

    @staticmethod
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["norm", "--t", "29"],
            ["norm", "--t", "x", "--d", "5"],
            ["--format", "xml", "norm", "--t", "29", "--d", "5"],
            ["unknown"],
        ],
    )
    def test_usage(capsys, argv):
        code, out = _run(capsys, argv)
        assert code == 1
        assert out == ""

    @staticmethod
    def test_bad_budget(capsys):
        argv = ["--trial-bound", "1", "norm", "--t", "29", "--d", "5"]
        code, _ = _run(capsys, argv)
        assert code == 1


class TestDeterminism:
    @staticmethod
    def test_repeated_runs(capsys):
        argv = ["certify", "--t", "29", "--d", "17"]
        code_first, first = _run(capsys, argv)
        code_second, second = _run(capsys, argv)
        assert code_first == code_second == 0
        assert json.loads(first)["status"] == "complete"
        assert first == second

    @staticmethod
    def test_repeated_table(capsys):
        argv = ["table", "--t", "29", "--d-min", "5", "--d-max", "21"]
        code_first, first = _run(capsys, argv)
        code_second, second = _run(capsys, argv)
        assert code_first == code_second == 0
        assert len(json.loads(first)["rows"]) == 9
        assert first == second

    @staticmethod
    def test_repeated_search_single_flip(capsys):
        argv = [
            "--certify-digits",
            "0",
            "search",
            "--t",
            "29",
            "--p",
            "3",
            "--q",
            "5",
            "--flips",
            "1",
        ]
        code_first, first = _run(capsys, argv)
        code_second, second = _run(capsys, argv)
        assert code_first == code_second == 0
        assert json.loads(first)["witnesses"]
        assert first == second

    @staticmethod
    @pytest.mark.slow
    def test_repeated_search(capsys):
        argv = ["search", "--t", "29", "--p", "3", "--q", "5"]
        code_first, first = _run(capsys, argv)
        code_second, second = _run(capsys, argv)
        assert code_first == code_second == 0
        assert len(json.loads(first)["witnesses"]) == 2
        assert first == second

    @staticmethod
    def test_seed_environment(capsys, monkeypatch):
        argv = ["certify", "--t", "29", "--d", "11"]
        code_first, first = _run(capsys, argv)
        monkeypatch.setenv("SEED", "12345")
        code_second, second = _run(capsys, argv)
        assert code_first == code_second == 0
        assert json.loads(first)["ramified"]
        assert json.loads(first)["ramified"] == json.loads(second)["ramified"]


class TestSelftest:
    @staticmethod
    def test_checks_pass():
        checks = selftest()
        failed = [check["name"] for check in checks if not check["passed"]]
        assert failed == []

import json

import pytest

from permcodes import cli
from permcodes.core import ENV_MAX_N


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEncodeDecode:
    def test_encode_lehmer(self, capsys):
        code, out, _ = run(capsys, "encode", "--code", "lehmer", "5 2 1 6 4 3")
        assert code == 0
        assert out.strip() == "0 1 2 0 2 3"

    def test_encode_mcmahon_with_commas(self, capsys):
        code, out, _ = run(capsys, "encode", "--code", "mcmahon", "5,2,1,6,4,3")
        assert code == 0
        assert out.strip() == "0 1 2 2 4 3"

    def test_decode_lehmer(self, capsys):
        code, out, _ = run(capsys, "decode", "--code", "lehmer", "0 1 2 0 2 3")
        assert code == 0
        assert out.strip() == "5 2 1 6 4 3"

    def test_decode_mcmahon(self, capsys):
        code, out, _ = run(capsys, "decode", "--code", "mcmahon", "0 1 2 2 4 3")
        assert code == 0
        assert out.strip() == "5 2 1 6 4 3"

    def test_encode_json(self, capsys):
        code, out, _ = run(capsys, "encode", "--json", "--code", "lehmer", "3 1 2")
        assert code == 0
        assert json.loads(out) == {"code": "lehmer", "digits": [0, 1, 1]}

    def test_invalid_permutation_exits_2(self, capsys):
        code, _, err = run(capsys, "encode", "--code", "lehmer", "1 1 2")
        assert code == 2
        assert "error:" in err

    def test_invalid_digits_exit_2(self, capsys):
        code, _, err = run(capsys, "decode", "--code", "lehmer", "0 9")
        assert code == 2
        assert "error:" in err


class TestTransform:
    def test_forward(self, capsys):
        code, out, _ = run(capsys, "transform", "--name", "delta", "0 1 2 0 2 3")
        assert code == 0
        assert out.strip() == "0 1 2 2 4 3"

    def test_inverse(self, capsys):
        code, out, _ = run(capsys, "transform", "--name", "delta", "--inverse", "0 1 2 2 4 3")
        assert code == 0
        assert out.strip() == "0 1 2 0 2 3"

    def test_case_insensitive_name(self, capsys):
        code, out, _ = run(capsys, "transform", "--name", "PSI", "0 1 2 0 2 3")
        assert code == 0
        assert out.strip() == "0 0 2 1 0 3"

    def test_unknown_name_exits_2(self, capsys):
        code, _, err = run(capsys, "transform", "--name", "omega", "0 1")
        assert code == 2
        assert "unknown transform" in err


class TestCount:
    def test_plain(self, capsys):
        code, out, _ = run(capsys, "count", "--pattern", "(b-a)", "5 2 1 6 4 3")
        assert code == 0
        assert out.strip() == "8"

    def test_pointed_at(self, capsys):
        code, out, _ = run(capsys, "count", "--pattern", "b-Ac", "--at", "5", "2 4 5 1 3 6")
        assert code == 0
        assert out.strip() == "2"

    def test_pointed_without_at_exits_2(self, capsys):
        code, _, err = run(capsys, "count", "--pattern", "b-Ac", "2 4 5 1 3 6")
        assert code == 2
        assert "--at" in err

    def test_at_with_plain_pattern_exits_2(self, capsys):
        code, _, err = run(capsys, "count", "--pattern", "(b-a)", "--at", "2", "2 1 3")
        assert code == 2
        assert "pointed" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "count", "--json", "--pattern", "b-aC", "--at", "5", "2 4 5 1 3 6")
        assert code == 0
        assert json.loads(out) == {"pattern": "(b-aC)", "at": 5, "count": 1}


class TestStat:
    def test_registry_name(self, capsys):
        code, out, _ = run(capsys, "stat", "--name", "maj", "5 2 1 6 4 3")
        assert code == 0
        assert out.strip() == "12"

    def test_expression(self, capsys):
        code, out, _ = run(capsys, "stat", "--expr", "(a-cb)+(b-ac)+(c-ba)+(b-a]", "5 2 1 6 4 3")
        assert code == 0
        assert out.strip() == "12"

    def test_unknown_name_exits_2(self, capsys):
        code, _, err = run(capsys, "stat", "--name", "bogus", "1 2 3")
        assert code == 2
        assert "unknown statistic" in err


class TestDist:
    def test_inv_n4(self, capsys):
        code, out, _ = run(capsys, "dist", "--name", "inv", "--n", "4")
        assert code == 0
        assert out.strip() == "1 3 5 6 5 3 1"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "dist", "--json", "--name", "maj", "--n", "3")
        assert code == 0
        assert json.loads(out) == {"statistic": "maj", "n": 3, "counts": [1, 2, 2, 1]}

    def test_cap_exceeded_exits_2(self, capsys):
        code, _, err = run(capsys, "dist", "--name", "inv", "--n", "12")
        assert code == 2
        assert "cap" in err

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv(ENV_MAX_N, "3")
        code, _, err = run(capsys, "dist", "--name", "inv", "--n", "4")
        assert code == 2
        assert "cap" in err


class TestVerify:
    def test_single_suite_plain(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "lehmer", "--n", "4")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("lehmer")
        assert "pass" in lines[0]
        assert lines[1] == "summary: 1/1 suites passed"

    def test_all_suites_small_n(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "all", "--n", "3")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 7
        assert lines[-1] == "summary: 6/6 suites passed"

    def test_json_records(self, capsys):
        code, out, _ = run(capsys, "verify", "--json", "--suite", "lemmas", "--n", "3")
        assert code == 0
        records = json.loads(out)
        assert len(records) == 1
        rec = records[0]
        assert rec["suite"] == "lemmas"
        assert rec["status"] == "pass"
        assert rec["n"] == 3
        assert rec["counterexample"] is None
        assert rec["millis"] >= 0

    def test_bad_n_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "lehmer", "--n", "0")
        assert code == 2
        assert "error" in err


class TestArgparseBehaviour:
    def test_unknown_subcommand_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["frobnicate"])
        assert excinfo.value.code == 2

    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["encode", "--nope", "1 2 3"])
        assert excinfo.value.code == 2

    def test_stat_requires_exactly_one_selector(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            cli.main(["stat", "--name", "inv", "--expr", "(b-a)", "1 2 3"])
        assert excinfo.value.code == 2

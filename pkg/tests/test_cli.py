import json

import pytest

from woplab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestDecompose:
    def test_n1_plain(self, capsys):
        code, out, _ = run(capsys, "decompose", "1")
        assert code == 0
        assert out == "(1)  dP=1 dD=1 degree=2 OS(1,1)  sum_{k1} k1 p_{k1} d/dp_{k1}\n"

    def test_n3_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "3", "--json")
        assert code == 0
        data = json.loads(out)
        assert len(data) == 6
        assert sum(1 for t in data if t["degree"] == 5 - 1) == 5
        assert {tuple(map(tuple, t["perm"])) for t in data} == {
            ((1,), (2,), (3,)),
            ((1,), (2, 3)),
            ((1, 2), (3,)),
            ((1, 2, 3),),
            ((1, 3), (2,)),
            ((1, 3, 2),),
        }

    def test_n4_degree_census_via_json(self, capsys):
        code, out, _ = run(capsys, "decompose", "4", "--json")
        data = json.loads(out)
        assert len(data) == 24
        assert sum(1 for t in data if t["degree"] == 5) == 14

    def test_latex_lines(self, capsys):
        code, out, _ = run(capsys, "decompose", "3", "--latex")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 6
        assert all(line.startswith("FS_{(") for line in lines)
        assert any("\\frac{\\partial^{3}}" in line for line in lines)

    def test_bound_exit_2(self, capsys):
        code, _, err = run(capsys, "decompose", "4", "--max-n", "3")
        assert code == 2
        assert "bound" in err

    def test_env_var_bound(self, capsys, monkeypatch):
        monkeypatch.setenv("WOPLAB_MAX_N", "3")
        code, _, err = run(capsys, "decompose", "4")
        assert code == 2
        monkeypatch.setenv("WOPLAB_MAX_N", "4")
        code, out, _ = run(capsys, "decompose", "4")
        assert code == 0 and len(out.strip().splitlines()) == 24


class TestApply:
    def test_examples(self, capsys):
        assert run(capsys, "apply", "2", "p1^3") == (0, "3*p1*p2\n", "")
        assert run(capsys, "apply", "1", "p2*p3") == (0, "5*p2*p3\n", "")
        assert run(capsys, "apply", "3", "--perm", "(321)", "p1^3") == (
            0,
            "2*p3\n",
            "",
        )

    def test_json(self, capsys):
        code, out, _ = run(capsys, "apply", "2", "p2", "--json")
        assert json.loads(out) == {"n": 2, "perm": None, "result": "p1^2"}

    def test_parse_error_exit_2(self, capsys):
        code, _, err = run(capsys, "apply", "2", "p1^")
        assert code == 2 and "position" in err

    def test_perm_rank_mismatch(self, capsys):
        code, _, err = run(capsys, "apply", "2", "p1", "--perm", "(321)")
        assert code == 2


class TestSeq:
    def test_dual_published_example(self, capsys):
        assert run(capsys, "seq", "dual", "(7(65)(4)(3)21)") == (
            0,
            "(7(6)(543)2)(1)\n",
            "",
        )

    def test_decode_encode(self, capsys):
        code, out, _ = run(capsys, "seq", "decode", "(4)(321)")
        assert code == 0 and out == "(1 3 2)(4)\n"
        code, out, _ = run(capsys, "seq", "encode", "(1 3 2)(4)")
        assert code == 0 and out == "(4)(321)\n"

    def test_enumerate(self, capsys):
        code, out, _ = run(capsys, "seq", "enumerate", "3", "2")
        assert code == 0
        # lexicographic in the gap alphabet "" < "(" < ")" < ")("
        assert out.strip().splitlines() == ["(32)(1)", "(3(2)1)", "(3)(21)"]

    def test_enumerate_missing_r(self, capsys):
        code, _, err = run(capsys, "seq", "enumerate", "3")
        assert code == 2

    def test_classify_json(self, capsys):
        code, out, _ = run(capsys, "seq", "classify", "(2)(1)", "--json")
        data = json.loads(out)
        assert data == {
            "top_level": [1, 2],
            "embedded": [],
            "bottom_level": [1, 2],
            "adjacent": [[1, 2]],
        }

    def test_invalid_sequence_exit_2(self, capsys):
        code, _, err = run(capsys, "seq", "decode", "(4)32(1)")
        assert code == 2


class TestCount:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "count", "3", "--json")
        data = json.loads(out)
        assert data["total"] == data["catalan"] == 5
        assert [row["r"] for row in data["rows"]] == [1, 2, 3]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "count", "1")
        assert code == 0 and out.startswith("n=1")


class TestLiftProject:
    def test_roundtrip(self, capsys):
        code, out, _ = run(capsys, "lift", "(4)(321)", "0")
        assert code == 0 and out == "(1 5 3 2)(4)\n"
        code, out, _ = run(capsys, "project", "(1 5 3 2)(4)")
        assert code == 0 and out == "(1 3 2)(4) j=0\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "project", "(321)", "--json")
        assert json.loads(out) == {"perm": "(1 2)", "j": 0}

    def test_lift_out_of_range(self, capsys):
        code, _, err = run(capsys, "lift", "(21)", "5")
        assert code == 2


class TestVerify:
    def test_suites_pass(self, capsys):
        for suite, rng in [
            ("counts", "1..4"),
            ("star", "1..4"),
            ("dual", "1..5"),
            ("lift", "1..3"),
        ]:
            code, out, _ = run(capsys, "verify", suite, rng)
            assert code == 0, (suite, out)
            assert "[FAIL]" not in out
            assert out.count("[PASS]") == len(range(*map(int, rng.split("..")))) + 1

    def test_oracle_suite_small(self, capsys):
        code, out, _ = run(capsys, "verify", "oracle", "1..2", "--max-weight", "2")
        assert code == 0 and out.count("[PASS]") == 2

    def test_failure_exits_1(self, capsys, monkeypatch):
        import woplab.cli as cli

        monkeypatch.setattr(
            cli, "_check_star", lambda ns: [("star n=1: forced failure", False)]
        )
        code, out, _ = run(capsys, "verify", "star", "1")
        assert code == 1 and "[FAIL]" in out

    def test_bad_range_exit_2(self, capsys):
        code, _, _ = run(capsys, "verify", "star", "0..2")
        assert code == 2

    def test_bound_respected(self, capsys):
        code, _, err = run(capsys, "verify", "star", "1..9")
        assert code == 2 and "bound" in err


class TestDeterminism:
    def test_identical_invocations_identical_bytes(self, capsys):
        first = run(capsys, "decompose", "4", "--json")
        second = run(capsys, "decompose", "4", "--json")
        assert first == second
        first = run(capsys, "seq", "enumerate", "4", "2")
        second = run(capsys, "seq", "enumerate", "4", "2")
        assert first == second


class TestUsage:
    def test_mutually_exclusive_formats(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["decompose", "3", "--json", "--latex"])
        assert err.value.code == 2

    def test_unknown_subcommand(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["frobnicate"])
        assert err.value.code == 2

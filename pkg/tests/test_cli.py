"""Command-line interface: outputs, error paths, determinism, budgets."""

import json

from prodsim.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNormalize:
    def test_bijection_example(self, capsys):
        code, out, _ = run(capsys, "normalize", "133212")
        assert code == 0 and out == "122313\n"

    def test_empty(self, capsys):
        code, out, _ = run(capsys, "normalize", "e")
        assert code == 0 and out == "e\n"

    def test_invalid_word(self, capsys):
        code, out, err = run(capsys, "normalize", "121")
        assert code == 2
        assert "NotDoubleOccurrence" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "word.txt"
        code, out, _ = run(capsys, "normalize", "1212", "--output", str(target))
        assert code == 0 and out == ""
        assert target.read_text() == "1212\n"


class TestSuccessors:
    def test_worked_example(self, capsys):
        code, out, _ = run(capsys, "successors", "1234523541")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "word 1234523541"
        assert "factor 23 repeat" in lines
        assert "factor 45 return" in lines
        assert [l for l in lines if l.startswith("successor ")] == [
            "successor 123231", "successor 123321", "successor 12341243"]

    def test_square_word(self, capsys):
        code, out, _ = run(capsys, "successors", "1212")
        assert code == 0
        assert "successor e" in out.splitlines()

    def test_empty_word(self, capsys):
        code, out, _ = run(capsys, "successors", "e")
        assert code == 0
        assert out == "word e\n"


class TestGraph:
    def test_rooted_pentagon_json(self, capsys):
        code, out, _ = run(capsys, "graph", "rooted", "121323", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert len(obj["vertices"]) == 5
        assert len(obj["edges"]) == 5

    def test_global_two(self, capsys):
        code, out, _ = run(capsys, "graph", "global", "2", "--format", "json")
        obj = json.loads(out)
        assert sorted(obj["vertices"]) == ["1,1", "1,1,2,2", "1,2,1,2", "1,2,2,1", "e"]

    def test_construct_lantern_dot(self, capsys):
        code, out, _ = run(capsys, "graph", "construct", "lantern", "4")
        assert code == 0
        assert out.startswith("digraph G {")
        assert '"v0" -> "v1";' in out

    def test_construct_subcommand(self, capsys):
        code, out, _ = run(capsys, "construct", "tennis", "diagonal", "--format", "json")
        obj = json.loads(out)
        assert ["v0", "v3"] in obj["edges"]

    def test_bad_source(self, capsys):
        code, _, err = run(capsys, "graph", "bogus", "1")
        assert code == 2 and "error" in err


class TestHomology:
    def test_rooted_t5(self, capsys):
        code, out, _ = run(capsys, "homology", "rooted", "1213243545")
        assert code == 0
        lines = out.splitlines()
        assert "1\t2\t-" in lines
        assert "2\t6\t-" in lines

    def test_construct_tennis(self, capsys):
        code, out, _ = run(capsys, "homology", "construct", "tennis")
        assert "2\t1\t-" in out.splitlines()

    def test_single_vertex(self, capsys):
        code, out, _ = run(capsys, "homology", "rooted", "e", "--max-dim", "1")
        assert code == 0
        assert "0\t1\t-" in out.splitlines()

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "homology", "rooted", "121323", "--format", "json")
        obj = json.loads(out)
        assert obj["0"] == {"betti": 1, "torsion": []}
        assert obj["1"] == {"betti": 1, "torsion": []}
        assert obj["2"] == {"betti": 0, "torsion": []}
        assert obj["euler"] == 0


class TestTable:
    def test_rows_match_reference(self, capsys):
        code, out, _ = run(capsys, "table", "5")
        assert code == 0
        assert out.splitlines() == [
            "n\tword\tbeta1\tbeta2\tvertices",
            "2\t1,2,1,2\t0\t0\t2",
            "3\t1,2,1,3,2,3\t1\t0\t5",
            "4\t1,2,1,3,2,4,3,4\t1\t2\t8",
            "5\t1,2,1,3,2,4,3,5,4,5\t2\t6\t13",
        ]

    def test_single_row(self, capsys):
        code, out, _ = run(capsys, "table", "2")
        assert out.splitlines()[1:] == ["2\t1,2,1,2\t0\t0\t2"]

    def test_budget_exhausted_marks_partial(self, capsys):
        code, out, _ = run(capsys, "table", "4", "--budget", "0")
        assert code == 3
        assert "# budget exceeded" in out

    def test_progress_goes_to_stderr(self, capsys):
        code, out, err = run(capsys, "table", "9")
        assert code == 0
        assert "computing tangled cord n=9" in err
        assert "computing" not in out

    def test_homology_budget(self, capsys):
        code, out, _ = run(capsys, "homology", "rooted", "1212", "--budget", "0")
        assert code == 3
        assert "# budget exceeded" in out


class TestDeterminism:
    def test_table_byte_identical(self, capsys):
        _, first, _ = run(capsys, "table", "4")
        _, second, _ = run(capsys, "table", "4")
        assert first == second

    def test_homology_byte_identical(self, capsys):
        _, first, _ = run(capsys, "homology", "construct", "sphere_chain", "2")
        _, second, _ = run(capsys, "homology", "construct", "sphere_chain", "2")
        assert first == second

    def test_verify_seed_stable(self, capsys):
        args = ("verify", "--suite", "snf", "--seed", "5", "--cases", "25")
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestVerify:
    def test_default_suites_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--cases", "15")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 4
        assert all(": PASS" in line for line in lines)

    def test_corrupted_fixture_reports_failure(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "corrupted")
        assert code == 1
        assert "FAIL" in out
        assert "d.d != 0" in out

    def test_substitution_experiment(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "substitution", "--cases", "10")
        assert code == 0
        assert "substitution pairs" in out

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "nonsense")
        assert code == 2 and "unknown suite" in err

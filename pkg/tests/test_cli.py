import json
import subprocess
import sys

import pytest

from descent_polytopes import cli, fvector
from descent_polytopes.algebra import TPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


class TestFvectorCommand:
    def test_all_methods_agree(self, capsys):
        code, rows = run_json(capsys, "fvector", "--word", "xyyx", "--method", "all")
        assert code == 0
        (row,) = rows
        assert row["agree"] is True
        assert row["f_vector"] == [12, 34, 42, 26, 8, 1]
        assert set(row["methods"]) == {"direct", "recurrence", "factorization", "phi", "oracle"}
        assert all(f == [12, 34, 42, 26, 8, 1] for f in row["methods"].values())

    def test_segment(self, capsys):
        code, rows = run_json(capsys, "fvector", "--word", "1", "--method", "direct")
        assert code == 0
        assert rows[0]["f_vector"] == [2, 1]
        assert rows[0]["word"] == "1"
        assert rows[0]["set"] == "1:{}"

    def test_oracle(self, capsys):
        _, rows = run_json(capsys, "fvector", "--word", "yx", "--method", "oracle")
        assert rows[0]["f_vector"] == [5, 8, 5, 1]

    def test_set_syntax_echoes_both(self, capsys):
        _, a = run_json(capsys, "fvector", "--word", "5:{2,3}")
        _, b = run_json(capsys, "fvector", "--n", "5", "--set", "2,3")
        assert a == b
        assert a[0]["word"] == "xyyx"
        assert a[0]["set"] == "5:{2,3}"
        assert a[0]["kappa"] == 4

    def test_csv_padding(self, capsys):
        code, out, _ = run(capsys, "fvector", "--word", "1", "--word", "xy", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "word,set,n,f_0,f_1,f_2,f_3"
        assert lines[1] == "1,1:{},1,2,1,,"
        assert lines[2] == "xy,3:{2},3,5,8,5,1"

    def test_text(self, capsys):
        _, out, _ = run(capsys, "fvector", "--word", "x", "--format", "text")
        assert "f_vector=[3, 3, 1]" in out

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(fvector, "f_direct",
                            lambda v: fvector.FPolynomial(TPoly.from_list([1, 1]), fvector.as_word("")))
        code, rows = run_json(capsys, "fvector", "--word", "x", "--method", "all")
        assert code == 1
        assert rows[0]["agree"] is False

    def test_cap_error(self, capsys):
        code, out, err = run(capsys, "fvector", "--word", "x" * 21, "--method", "direct")
        assert code == 2
        assert out == ""
        assert "direct" in err

    def test_bad_word(self, capsys):
        code, _, err = run(capsys, "fvector", "--word", "xz")
        assert code == 2
        assert "xz" in err

    def test_missing_word(self, capsys):
        assert run(capsys, "fvector")[0] == 2

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["fvector", "--method", "nonsense"])
        assert exc.value.code == 2

    def test_deterministic(self, capsys):
        first = run(capsys, "fvector", "--n", "4", "--method", "all")
        second = run(capsys, "fvector", "--n", "4", "--method", "all")
        assert first == second
        assert len(json.loads(first[1])) == 8

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "f.json"
        code, out, _ = run(capsys, "fvector", "--word", "yx", "--out", str(target))
        assert code == 0
        assert out == ""
        assert json.loads(target.read_text())[0]["f_vector"] == [5, 8, 5, 1]


class TestVerifyCommand:
    def test_maxima(self, capsys):
        code, report = run_json(capsys, "verify", "--suite", "maxima", "--size", "8")
        assert code == 0
        assert report["pass"] is True

    def test_table1(self, capsys):
        code, report = run_json(capsys, "verify", "--suite", "table1")
        assert code == 0
        assert report["rows_ok"] == "9/9"
        assert report["counterexample"] is None

    def test_oracle(self, capsys):
        code, report = run_json(capsys, "verify", "--suite", "oracle", "--size", "7")
        assert code == 0
        assert report["checked"] == 2 ** 8 - 1

    def test_inequality(self, capsys):
        code, report = run_json(capsys, "verify", "--suite", "inequality", "--size", "4")
        assert code == 0
        assert report["pass"] is True

    def test_ehrhart_pipeline(self, capsys):
        code, report = run_json(capsys, "verify", "--suite", "ehrhart-pipeline", "--size", "4")
        assert code == 0
        assert report["checked"] == 4 * (2 ** 5 - 1)

    def test_failure_reports_counterexample(self, capsys, monkeypatch):
        real = fvector.f_recurrence

        def broken(v):
            f = real(v)
            return f if v != "xy" else fvector.FPolynomial(f.poly + 1, f.word)

        monkeypatch.setattr(fvector, "f_recurrence", broken)
        code, report = run_json(capsys, "verify", "--suite", "oracle", "--size", "3")
        assert code == 1
        assert report["counterexample"] == "xy"

    def test_size_caps(self, capsys):
        assert run(capsys, "verify", "--suite", "oracle", "--size", "10")[0] == 2
        assert run(capsys, "verify", "--suite", "inequality", "--size", "13")[0] == 2
        assert run(capsys, "verify", "--suite", "maxima")[0] == 2


class TestSequencesCommand:
    def test_faces(self, capsys):
        code, report = run_json(capsys, "sequences", "faces-t1", "--max-n", "4")
        assert code == 0
        assert report["sequence"] == [3, 7, 19, 51]

    def test_faces_recurrence(self, capsys):
        code, report = run_json(capsys, "sequences", "faces-t1", "--max-n", "7")
        assert code == 0
        seq = report["sequence"]
        assert all(seq[i] == 3 * seq[i - 1] - 2 * seq[i - 3] for i in range(3, 7))

    def test_fibonacci(self, capsys):
        code, report = run_json(capsys, "sequences", "fibonacci", "--max-n", "5")
        assert code == 0
        assert report["sequence"] == [2, 3, 5, 8, 13]

    def test_cap(self, capsys):
        assert run(capsys, "sequences", "fibonacci", "--max-n", "31")[0] == 2


class TestOtherCommands:
    def test_ehrhart(self, capsys):
        code, rows = run_json(capsys, "ehrhart", "--word", "yx", "--r", "1")
        assert code == 0
        assert rows == [{"word": "yx", "set": "3:{1}", "ehrhart": ["1/3", "3/2", "13/6", "1"],
                         "beta": 2, "volume": "1/3", "r": 1, "lattice_points": 5}]

    def test_enumerate_words(self, capsys):
        _, rows = run_json(capsys, "enumerate", "words", "--length", "2")
        assert [r["word"] for r in rows] == ["xx", "xy", "yx", "yy"]

    def test_enumerate_factorizations(self, capsys):
        _, rows = run_json(capsys, "enumerate", "factorizations", "--word", "xyyx")
        assert len(rows) == 11
        assert ["x", "1"] in run_json(capsys, "enumerate", "factorizations", "--word", "x")[1]

    def test_enumerate_vertices(self, capsys):
        _, rows = run_json(capsys, "enumerate", "vertices", "--word", "x")
        assert rows == [[0, 0], [0, 1], [1, 1]]

    def test_enumerate_faces(self, capsys):
        _, data = run_json(capsys, "enumerate", "faces", "--word", "yx")
        assert len(data["faces"]) == 5 + 8 + 5 + 1
        code, out, _ = run(capsys, "enumerate", "faces", "--word", "yx", "--format", "dot")
        assert code == 0
        assert out.startswith('digraph "DP_yx"')

    def test_series_phi(self, capsys):
        code, data = run_json(capsys, "series", "--kind", "phi", "--trunc", "2")
        assert code == 0
        assert data["terms"]["1"] == [[0, 2], [1, 1]]
        assert data["terms"]["yx"] == [[0, 5], [1, 8], [2, 5], [3, 1]]

    def test_series_ehrhart(self, capsys):
        _, data = run_json(capsys, "series", "--kind", "I", "--r", "1", "--trunc", "2")
        assert data["terms"]["yx"] == 5
        assert run(capsys, "series", "--kind", "I", "--trunc", "2")[0] == 2
        assert run(capsys, "series", "--kind", "I", "--r", "1", "--trunc", "13")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "descent_polytopes", "fvector", "--word", "yx"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["f_vector"] == [5, 8, 5, 1]

import json

import pytest

from groupcloseness.cli import main

P4_TEXT = "0 1\n1 2\n2 3\n"
WP3_GR = "p sp 3 2\na 1 2 2\na 2 1 2\na 2 3 3\na 3 2 3\n"


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.edges"
    path.write_text(P4_TEXT)
    return str(path)


@pytest.fixture
def wp3_file(tmp_path):
    path = tmp_path / "wp3.gr"
    path.write_text(WP3_GR)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestMaximize:
    def test_gs_on_p4(self, capsys, p4_file):
        code, out, _ = run(capsys, [
            "maximize", "--algo", "gs", "--k", "1",
            "--input", p4_file, "--format", "edgelist", "--seed", "1"])
        assert code == 0
        report = json.loads(out)
        assert report["farness"] == 4.0
        assert report["group"] in ([1], [2])
        assert report["closeness"] == 1.0
        assert report["graph"] == {"n": 4, "m": 3, "weighted": False}

    def test_ls_on_weighted_exits_3(self, capsys, wp3_file):
        code, _, err = run(capsys, [
            "maximize", "--algo", "ls", "--k", "2",
            "--input", wp3_file, "--format", "dimacs9"])
        assert code == 3
        assert "unweighted" in err

    def test_deterministic_modulo_duration(self, capsys, p4_file):
        reports = []
        for _ in range(2):
            code, out, _ = run(capsys, [
                "maximize", "--algo", "gs-extended", "--k", "2",
                "--input", p4_file, "--format", "edgelist", "--seed", "7"])
            assert code == 0
            r = json.loads(out)
            r.pop("duration_ms")
            reports.append(json.dumps(r))
        assert reports[0] == reports[1]

    def test_every_algorithm_runs(self, capsys, p4_file):
        for algo in ("greedy", "ls", "ls-restrict", "ls-semilocal",
                     "gs", "gs-local", "gs-extended"):
            code, out, _ = run(capsys, [
                "maximize", "--algo", algo, "--k", "2",
                "--input", p4_file, "--format", "edgelist"])
            assert code == 0, algo
            report = json.loads(out)
            assert report["closeness"] == 4 / report["farness"]

    def test_csv_output(self, capsys, p4_file):
        code, out, _ = run(capsys, [
            "maximize", "--algo", "greedy", "--k", "2",
            "--input", p4_file, "--format", "edgelist", "--output", "csv"])
        assert code == 0
        header, row = out.strip().splitlines()
        assert "farness" in header and "params.k" in header

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run(capsys, [
            "maximize", "--algo", "gs", "--k", "1",
            "--input", "/nonexistent/x.edges", "--format", "edgelist"])
        assert code == 2
        assert "error" in err

    def test_bad_sketch_params_exit_2(self, capsys, p4_file):
        for extra in (["--samples", "0"], ["--width", "20"]):
            code, _, err = run(capsys, [
                "maximize", "--algo", "gs", "--k", "1",
                "--input", p4_file, "--format", "edgelist", *extra])
            assert code == 2
            assert "error" in err

    def test_stdin_input(self, capsys, monkeypatch):
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(P4_TEXT))
        code, out, _ = run(capsys, [
            "maximize", "--algo", "greedy", "--k", "1",
            "--input", "-", "--format", "edgelist"])
        assert code == 0
        assert json.loads(out)["group"] == [1]


class TestEvaluate:
    def test_pair(self, capsys, p4_file):
        code, out, _ = run(capsys, ["evaluate", "--group", "1,2",
                                    "--input", p4_file, "--format", "edgelist"])
        assert code == 0
        r = json.loads(out)
        assert r["farness"] == 2.0 and r["closeness"] == 2.0

    def test_singleton(self, capsys, p4_file):
        code, out, _ = run(capsys, ["evaluate", "--group", "0",
                                    "--input", p4_file, "--format", "edgelist"])
        assert code == 0
        assert json.loads(out)["farness"] == 6.0

    def test_out_of_range_exits_2(self, capsys, p4_file):
        code, _, err = run(capsys, ["evaluate", "--group", "9",
                                    "--input", p4_file, "--format", "edgelist"])
        assert code == 2


class TestOracle:
    def test_p4_k2(self, capsys, p4_file):
        code, out, _ = run(capsys, ["oracle", "--k", "2",
                                    "--input", p4_file, "--format", "edgelist"])
        assert code == 0
        r = json.loads(out)
        assert r["farness"] == 2.0

    def test_star5_k1(self, capsys, tmp_path):
        path = tmp_path / "star.edges"
        path.write_text("0 1\n0 2\n0 3\n0 4\n")
        code, out, _ = run(capsys, ["oracle", "--k", "1",
                                    "--input", str(path), "--format", "edgelist"])
        assert code == 0
        r = json.loads(out)
        assert r["group"] == [0] and r["farness"] == 4.0

    def test_cap_exits_4(self, capsys, tmp_path):
        from groupcloseness.generators import connected_gnp
        from groupcloseness.graph import to_edge_list

        path = tmp_path / "g40.edges"
        path.write_text(to_edge_list(connected_gnp(40, 0.2, seed=1)))
        code, _, err = run(capsys, ["oracle", "--k", "10",
                                    "--input", str(path), "--format", "edgelist"])
        assert code == 4
        assert "cap" in err


class TestGen:
    def test_round_trip_all_models(self, capsys, tmp_path):
        from groupcloseness import parse_edge_list

        for model, extra in [("gnp", ["--n", "30", "--p", "0.2"]),
                             ("grid", ["--rows", "4", "--cols", "5"]),
                             ("pa", ["--n", "30", "--attach", "2"])]:
            code, out, _ = run(capsys, ["gen", "--model", model, "--seed", "3",
                                        *extra])
            assert code == 0
            g = parse_edge_list(out)
            assert g.n > 1 and g.m >= g.n - 1

    def test_weighted_gen(self, capsys):
        code, out, _ = run(capsys, ["gen", "--model", "grid", "--rows", "3",
                                    "--cols", "3", "--weighted"])
        assert code == 0
        from groupcloseness import parse_edge_list
        g = parse_edge_list(out, weighted=True)
        assert g.weighted and g.n == 9

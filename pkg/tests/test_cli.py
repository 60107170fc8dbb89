from pathlib import Path

from dicolor import Digraph, gen_complete_symmetric, gen_symmetric_cycle
from dicolor.cli import main
from dicolor.fileio import read_coloring, read_digraph, write_digraph, write_lists


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def digraph_file(tmp_path, digraph, name="d.txt") -> str:
    path = tmp_path / name
    write_digraph(digraph, path)
    return str(path)


class TestAnalyze:
    def test_report(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_symmetric_cycle(5))
        code, out, _ = run(capsys, "analyze", path, "--d", "2")
        assert code == 0
        assert "odd-symmetric-cycle" in out
        assert "gallai-tree: yes" in out
        assert "eulerian: yes" in out
        assert "complete symmetric digraph on 3 vertices: absent" in out

    def test_deterministic_output(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_complete_symmetric(4))
        _, first, _ = run(capsys, "analyze", path, "--d", "3")
        _, second, _ = run(capsys, "analyze", path, "--d", "3")
        assert first == second
        assert "complete symmetric digraph on 4 vertices: 0 1 2 3" in first

    def test_parse_error_exit_code(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 1\n0 0\n")
        code, _, err = run(capsys, "analyze", str(bad))
        assert code == 3
        assert "error" in err


class TestColor:
    def test_greedy_writes_verified_coloring(self, tmp_path, capsys):
        d = gen_symmetric_cycle(5)
        path = digraph_file(tmp_path, d)
        out_path = tmp_path / "coloring.txt"
        code, out, _ = run(capsys, "color", path, "--mode", "greedy", "-o", str(out_path))
        assert code == 0
        assert "verified=yes" in out
        coloring = read_coloring(out_path, d.n)
        assert len(coloring) == 5

    def test_brooks_needs_d(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_symmetric_cycle(5))
        code, _, err = run(capsys, "color", path, "--mode", "brooks")
        assert code == 3

    def test_brooks_rejects_forbidden_clique(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_complete_symmetric(4))
        code, _, err = run(capsys, "color", path, "--mode", "brooks", "--d", "3")
        assert code == 2
        assert "ContainsForbiddenClique" in err

    def test_degree_list_gallai_exit(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_complete_symmetric(4))
        code, _, err = run(capsys, "color", path, "--mode", "degree-list")
        assert code == 2
        assert "GallaiComponent" in err

    def test_degree_list_with_lists_file(self, tmp_path, capsys):
        d = gen_symmetric_cycle(4)
        path = digraph_file(tmp_path, d)
        lists_path = tmp_path / "lists.txt"
        write_lists({v: (0, 1) for v in range(4)}, lists_path)
        out_path = tmp_path / "c.txt"
        code, out, _ = run(
            capsys, "color", path, "--mode", "degree-list",
            "--lists", str(lists_path), "-o", str(out_path),
        )
        assert code == 0
        coloring = read_coloring(out_path, 4)
        assert set(coloring.values()) <= {0, 1}


class TestVerify:
    def test_valid_and_invalid(self, tmp_path, capsys):
        d = Digraph(2, [(0, 1), (1, 0)])
        path = digraph_file(tmp_path, d)
        good = tmp_path / "good.txt"
        good.write_text("0 0\n1 1\n")
        bad = tmp_path / "bad.txt"
        bad.write_text("0 0\n1 0\n")
        assert run(capsys, "verify", path, str(good))[0] == 0
        code, out, _ = run(capsys, "verify", path, str(bad))
        assert code == 1
        assert "witness dicycle" in out

    def test_witness_is_printed_for_digon(self, tmp_path, capsys):
        d = Digraph(2, [(0, 1), (1, 0)])
        path = digraph_file(tmp_path, d)
        bad = tmp_path / "bad.txt"
        bad.write_text("0 0\n1 0\n")
        _, out, _ = run(capsys, "verify", path, str(bad))
        assert sorted(out.split(":")[1].split()) == ["0", "1"]

    def test_list_violation(self, tmp_path, capsys):
        d = Digraph(2, [(0, 1), (1, 0)])
        path = digraph_file(tmp_path, d)
        coloring = tmp_path / "c.txt"
        coloring.write_text("0 0\n1 1\n")
        lists = tmp_path / "l.txt"
        write_lists({0: (0,), 1: (0,)}, lists)
        code, out, _ = run(capsys, "verify", path, str(coloring), "--lists", str(lists))
        assert code == 1

    def test_partial_coloring(self, tmp_path, capsys):
        path = digraph_file(tmp_path, Digraph(2, [(0, 1)]))
        coloring = tmp_path / "c.txt"
        coloring.write_text("0 0\n")
        code, out, _ = run(capsys, "verify", path, str(coloring))
        assert code == 1
        assert "uncolored" in out


class TestExact:
    def test_odd_symmetric_cycle(self, tmp_path, capsys):
        path = digraph_file(tmp_path, gen_symmetric_cycle(5))
        code, out, _ = run(capsys, "exact", path)
        assert code == 0
        assert "dichromatic number: 3" in out

    def test_budget_exit(self, tmp_path, capsys):
        path = digraph_file(tmp_path, Digraph(20))
        code, _, err = run(capsys, "exact", path)
        assert code == 4


class TestGen:
    def test_round_trip(self, tmp_path, capsys):
        out_path = tmp_path / "g.txt"
        code, _, _ = run(
            capsys, "gen", "--family", "eulerian-regular",
            "--n", "8", "--d", "3", "--seed", "9", "-o", str(out_path),
        )
        assert code == 0
        d = read_digraph(out_path)
        assert d.is_eulerian() and d.n == 8

    def test_stdout_deterministic(self, capsys):
        code, first, _ = run(capsys, "gen", "--family", "bounded-random",
                             "--n", "10", "--d", "3", "--seed", "4")
        code2, second, _ = run(capsys, "gen", "--family", "bounded-random",
                               "--n", "10", "--d", "3", "--seed", "4")
        assert code == code2 == 0
        assert first == second

    def test_gallai_tree_blocks(self, tmp_path, capsys):
        out_path = tmp_path / "g.txt"
        code, _, _ = run(
            capsys, "gen", "--family", "gallai-tree",
            "--block", "complete:3", "--block", "dicycle:4:0",
            "--seed", "0", "-o", str(out_path),
        )
        assert code == 0
        assert read_digraph(out_path).n == 6

    def test_missing_param(self, capsys):
        code, _, err = run(capsys, "gen", "--family", "dicycle")
        assert code == 3

    def test_cayley(self, capsys):
        code, out, _ = run(capsys, "gen", "--family", "cayley-ball", "--d", "2", "--radius", "1")
        assert code == 0
        assert out.startswith("5 4\n")


class TestBench:
    def test_runs(self, capsys):
        code, out, _ = run(capsys, "bench", "--suite", "small", "--seed", "0")
        assert code == 0
        assert "greedy_ms" in out

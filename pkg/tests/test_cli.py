"""CLI behavior: subcommands, exit codes, and output shapes."""

from __future__ import annotations

import json

import pytest

from treedim.cli import main


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star.tree"
    path.write_text("4\n1 1 1 1\n0 1\n0 2\n0 3\n")
    return str(path)


@pytest.fixture
def path5_file(tmp_path):
    path = tmp_path / "path5.tree"
    path.write_text("5\n1 1 1 1 1\n0 1\n1 2\n2 3\n3 4\n")
    return str(path)


def test_solve_plain(star_file, capsys):
    assert main(["solve", star_file]) == 0
    out = capsys.readouterr().out
    assert "case: single_small_core" in out
    assert "landmarks: 1 2" in out
    assert "cost: 2" in out


def test_solve_json(star_file, capsys):
    assert main(["solve", "--json", star_file]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["landmarks"] == [1, 2]
    assert doc["cost"] == "2"
    assert doc["case_tag"] == "single_small_core"


def test_solve_explain(star_file, capsys):
    assert main(["solve", "--explain", star_file]) == 0
    out = capsys.readouterr().out
    assert "core 0:" in out
    assert "s3" in out and "s0" in out


def test_verify_valid_exit_zero(star_file, capsys):
    assert main(["verify", star_file, "--landmarks", "1,2"]) == 0
    assert "valid" in capsys.readouterr().out


def test_verify_invalid_exit_one(star_file, capsys):
    assert main(["verify", star_file, "--landmarks", "0,1"]) == 1
    out = capsys.readouterr().out
    assert "invalid" in out
    assert "pair (2, 3)" in out


def test_verify_empty_landmarks(path5_file):
    assert main(["verify", path5_file, "--landmarks", ""]) == 1


def test_verify_out_of_range_is_usage_error(star_file, capsys):
    assert main(["verify", star_file, "--landmarks", "9"]) == 2


def test_verify_ap_model(tmp_path):
    two = tmp_path / "two.tree"
    two.write_text("2\n1 1\n0 1\n")
    assert main(["verify", str(two), "--landmarks", "0", "--model", "nl"]) == 0
    assert main(["verify", str(two), "--landmarks", "0", "--model", "ap"]) == 1


def test_brute_matches_solve(star_file, capsys):
    assert main(["brute", star_file]) == 0
    out = capsys.readouterr().out
    assert "landmarks: 1 2" in out
    assert "cost: 2" in out


def test_brute_cap_exit_three(tmp_path, capsys):
    big = tmp_path / "big.tree"
    n = 20
    costs = " ".join(["1"] * n)
    edges = "\n".join(f"{i} {i + 1}" for i in range(n - 1))
    big.write_text(f"{n}\n{costs}\n{edges}\n")
    assert main(["brute", str(big)]) == 3
    assert main(["brute", str(big), "--cap", "20"]) == 0


def test_classify_table(star_file, capsys):
    assert main(["classify", star_file]) == 0
    out = capsys.readouterr().out
    assert "case: single_small_core" in out
    assert "0\tsmall_core" in out
    assert "1\tleaf" in out


def test_classify_dot(star_file, capsys):
    assert main(["classify", "--dot", star_file]) == 0
    out = capsys.readouterr().out
    assert out.startswith("graph tree {")
    assert "0 -- 1;" in out


def test_gen_roundtrips_through_solve(tmp_path, capsys):
    out_file = tmp_path / "gen.tree"
    assert main(["gen", "--kind", "caterpillar", "--n", "12",
                 "-o", str(out_file)]) == 0
    assert main(["solve", str(out_file), "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 12
    assert doc["case_tag"] == "has_regular_core"


def test_gen_to_stdout_deterministic(capsys):
    assert main(["gen", "--kind", "random", "--n", "9", "--seed", "4",
                 "--costs", "random"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--kind", "random", "--n", "9", "--seed", "4",
                 "--costs", "random"]) == 0
    assert capsys.readouterr().out == first


def test_gen_env_seed_override(capsys, monkeypatch):
    monkeypatch.setenv("TREEDIM_SEED", "77")
    assert main(["gen", "--kind", "random", "--n", "9", "--seed", "4"]) == 0
    with_env = capsys.readouterr().out
    monkeypatch.delenv("TREEDIM_SEED")
    assert main(["gen", "--kind", "random", "--n", "9", "--seed", "77"]) == 0
    assert capsys.readouterr().out == with_env


def test_gen_bad_env_seed(capsys, monkeypatch):
    monkeypatch.setenv("TREEDIM_SEED", "abc")
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--kind", "path", "--n", "3"])
    assert exc.value.code == 2


def test_gen_cost_file(tmp_path, capsys):
    cost_file = tmp_path / "costs.txt"
    cost_file.write_text("1 1/2 3\n")
    assert main(["gen", "--kind", "path", "--n", "3",
                 "--costs", "file", "--cost-file", str(cost_file)]) == 0
    out = capsys.readouterr().out
    assert "1 1/2 3" in out
    assert main(["gen", "--kind", "path", "--n", "3", "--costs", "file"]) == 2


def test_parse_error_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.tree"
    bad.write_text("3\n1 1\n0 1\n")
    with pytest.raises(SystemExit) as exc:
        main(["solve", str(bad)])
    assert exc.value.code == 2
    assert "error" in capsys.readouterr().err


def test_missing_file_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["solve", "/nonexistent/nowhere.tree"])
    assert exc.value.code == 2


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["solve"])  # missing the tree argument
    assert exc.value.code == 2


def test_bench_runs_small(capsys):
    assert main(["bench", "--sizes", "50,100", "--kind", "caterpillar"]) == 0
    out = capsys.readouterr().out
    lines = [line for line in out.splitlines() if line.strip()]
    assert len(lines) == 3  # header + one row per size
    assert "50" in lines[1] and "100" in lines[2]

import io
import json
import sys

import pytest

from snhecke.cli import main


@pytest.fixture()
def run(capsys, tmp_path):
    def _run(*argv, expect=0):
        code = main(["--cache", str(tmp_path / "cache"), *argv])
        out = capsys.readouterr().out
        assert code == expect, out
        return out

    return _run


def test_hecke_transcripts(run, A7):
    out = run("hecke", "C: C(6,5)*C(1,2,4,3,2,5,6)")
    assert out.strip() == "C'(1,2,3,2,6)+C'(1,2,3,2,5,6,5)+C'(1,2,4,5,6,5,4,3,2)"
    out = run("hecke", "D: D(1,2,4,3,2,1,5,6,5,4)*C(6,5)")
    assert out.strip() == "D'(1,2,4,3,2,1,5,6,5,4)+(v+v^-1)D'(1,2,4,3,2,1,5,4,6,5,4)"
    out = run("hecke", "coeff(C(1,3,4,3,6)*C(1,2,3,4,5,6,5,4,3,2,1), 1,3,4,3,6)")
    assert out.strip() == "v^3 + 3*v + 3*v^(-1) + v^(-3)"
    out = run("hecke", "H: H()")
    assert out.strip() == "H()"


def test_hecke_grammar(run, A5):
    out = run("--n", "5", "hecke", "H: H(1)*H(1)")
    assert "H()" in out
    out = run("--n", "5", "hecke", "C: C(1)*C(1) - (v+v^(-1))*C(1)")
    assert out.strip() == "0"
    out = run("--n", "5", "hecke", "coeff(C(1,2,1), 1,2,1)")
    assert out.strip() == "1"


def test_rs_json(run):
    out = run("--format", "json", "rs", "1524376")
    data = json.loads(out)
    assert data["shape"] == [4, 2, 1]
    assert data["P"] == [[1, 2, 3, 6], [4, 7], [5]]
    assert data["Q"] == [[1, 2, 4, 6], [3, 7], [5]]
    assert data["right_descents"] == [2, 4, 6]


def test_cells_csv(run):
    out = run("--n", "4", "--format", "csv", "cells", "13")
    lines = out.strip().splitlines()
    assert lines[0] == "one_line,word,length"
    assert len(lines) == 1 + 3  # the cell of the 2143 involution has 3 members


def test_patterns_command(run):
    out = run("--format", "json", "patterns", "2154367")
    data = json.loads(out)
    assert data["witness"]["pattern"] == "2143"


def test_tables_counts(run, A7):
    for which, rows in ((1, 161), (2, 29), (3, 25), (4, 107), (5, 16)):
        out = run("--format", "json", "tables", "--which", str(which))
        assert len(json.loads(out)) == rows, which


def test_tables_deterministic(run, A7):
    a = run("--format", "json", "tables", "--which", "3")
    b = run("--format", "json", "tables", "--which", "3")
    assert a == b


def test_classify_text(run, A7):
    out = run("classify")
    assert "125 positive / 107 negative" in out


def test_sweep_resume_cycle(run, tmp_path, A5):
    ck = tmp_path / "ck.jsonl"
    out = run("--n", "5", "sweep", "--d", "14", "--mode", "ev",
              "--resume", str(ck), "--stop-after", "1", expect=3)
    assert json.loads(out)["complete"] is False
    out2 = run("--n", "5", "sweep", "--d", "14", "--mode", "ev", "--resume", str(ck))
    data = json.loads(out2)
    assert data["complete"] and data["all_distinct"]
    plain = run("--n", "5", "sweep", "--d", "14", "--mode", "ev")
    assert json.loads(plain) == data


def test_prebuild_and_cache(run, tmp_path):
    out = run("--n", "4", "prebuild")
    assert "wrote" in out or "already present" in out
    out = run("--n", "4", "prebuild")
    assert "already present" in out


def test_config_file(run, tmp_path, A5):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text('degree = 5\nformat = "json"\n')
    out = run("--config", str(cfg), "rs", "21435")
    assert json.loads(out)["shape"] == [3, 2]


def test_exit_code_io():
    code = main(["--n", "4", "tables", "--which", "9"])
    assert code == 4

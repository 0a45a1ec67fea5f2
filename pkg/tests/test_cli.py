from pathlib import Path

import pytest

from rough_crdsa import build_doubling_space, format_space
from rough_crdsa.acceptance import WORKED_TABLE
from rough_crdsa.cli import TABLE_HEADER, main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, text, name="s.space"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def tsv_rows(out):
    lines = out.splitlines()
    assert tuple(lines[0].split("\t")) == TABLE_HEADER
    return [line.split("\t") for line in lines[1:]]


def test_table_full_mode(capsys):
    code, out, _ = run(capsys, "table", DATA / "worked.space", "--tsv")
    assert code == 0
    rows = tsv_rows(out)
    assert len(rows) == 16
    by_x = {r[0]: r for r in rows}
    assert by_x["{w,y}"][4:] == ["(∅,∅)", "hhhh", "hh"]
    for x, (lo, up, tp, c3u, c3e) in WORKED_TABLE.items():
        assert by_x[x][1:3] == [lo, up]
        assert by_x[x][4:] == [tp, c3u, c3e]


def test_table_distinct_mode(capsys):
    code, out, _ = run(capsys, "table", DATA / "worked.space", "--distinct", "--tsv")
    assert code == 0
    rows = tsv_rows(out)
    assert len(rows) == 9
    assert len({r[5] for r in rows}) == 9


@pytest.mark.parametrize("flags, golden", [((), "worked_table.tsv"),
                                           (("--distinct",), "worked_distinct.tsv")])
def test_table_golden(capsys, flags, golden):
    _, out, _ = run(capsys, "table", DATA / "worked.space", "--tsv", *flags)
    assert out == (GOLDEN / golden).read_text(encoding="utf-8")


def test_aligned_table_has_same_cells(capsys):
    _, aligned, _ = run(capsys, "table", DATA / "worked.space")
    _, tsv, _ = run(capsys, "table", DATA / "worked.space", "--tsv")
    assert [line.split() for line in aligned.splitlines()] == [
        line.split("\t") for line in tsv.splitlines()]


def test_output_is_deterministic(capsys):
    for cmd in ("table", "check", "iso"):
        first = run(capsys, cmd, DATA / "worked.space")
        second = run(capsys, cmd, DATA / "worked.space")
        assert first == second


def test_empty_universe_is_parse_error(capsys, tmp_path):
    code, out, err = run(capsys, "table", write(tmp_path, "# nothing\n"))
    assert code == 1 and out == ""
    assert ":1:1: error: empty universe" in err


def test_parse_error_position(capsys, tmp_path):
    path = write(tmp_path, "universe: w x y\nblock: w x\nblock: x y\n")
    code, _, err = run(capsys, "check", path)
    assert code == 1
    assert f"{path}:3:8: error:" in err


def test_missing_file_and_bad_usage(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "nope.space")
    assert code == 1 and "nope.space" in err
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1


def test_full_mode_refuses_large_universe(capsys, tmp_path):
    names = [f"u{i}" for i in range(22)]
    text = "universe: " + " ".join(names) + "\n" + "".join(
        f"block: {a} {b}\n" for a, b in zip(names[::2], names[1::2]))
    path = write(tmp_path, text)
    code, _, err = run(capsys, "table", path)
    assert code == 1 and "--distinct" in err


def test_check_worked(capsys):
    code, out, _ = run(capsys, "check", DATA / "worked.space")
    assert code == 0
    assert "CRDSA: yes" in out
    assert "core witness: {x,z} -> (∅,U)" in out
    assert "|center|: 4" in out
    assert "atoms: 2" in out


def test_check_singleton_block(capsys):
    code, out, _ = run(capsys, "check", DATA / "singleton.space")
    assert code == 2
    assert "CRDSA: no" in out
    assert "core witness: none" in out


def test_check_three_pairs(capsys):
    code, out, _ = run(capsys, "check", DATA / "three_pairs.space")
    assert code == 0
    assert "|center|: 8" in out and "atoms: 3" in out


def test_iso_worked(capsys):
    code, out, _ = run(capsys, "iso", DATA / "worked.space")
    assert code == 0
    verdicts = [line for line in out.splitlines() if "verified" in line or "FAILED" in line]
    assert len(verdicts) >= 6
    assert all(v.endswith("verified") for v in verdicts)
    assert ["({w,x},U)", "({w,x},∅)", "11hh", "1h"] in [line.split() for line in out.splitlines()]


def test_iso_singleton_block(capsys):
    code, out, _ = run(capsys, "iso", DATA / "singleton.space")
    assert code == 2
    assert "not a CRDSA; embedding checks limited to lattice+constants" in out


def test_iso_doubling_three(capsys, tmp_path):
    S = build_doubling_space(["j0", "j1", "j2"])
    text = format_space(S).replace("(", "").replace(")", "").replace("'", "").replace(", ", "_")
    code, out, _ = run(capsys, "iso", write(tmp_path, text))
    assert code == 0
    assert "|R_θ| = 27" in out
    assert "FAILED" not in out


def test_stdin(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("universe a b\nblock a b\n"))
    code, out, _ = run(capsys, "check", "-")
    assert code == 0 and "core witness: {b}" in out

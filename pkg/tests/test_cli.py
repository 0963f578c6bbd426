import json
from pathlib import Path

import pytest

from springer_pinball.cli import main
from springer_pinball.combinatorics import Filling, Partition, Permutation
from springer_pinball.basis import RestrictionMatrix, build_matrix
from springer_pinball.pinball import pinball_table

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("part,golden", [("2,2", "pinball_2_2.txt"), ("3,2", "pinball_3_2.txt")])
def test_pinball_golden(capsys, part, golden):
    code, out, _ = run(capsys, "pinball", part)
    assert code == 0
    assert out == (GOLDEN / golden).read_text()


def test_pinball_json_round_trip(capsys):
    code, out, _ = run(capsys, "--format", "json", "pinball", "3,2")
    assert code == 0
    data = json.loads(out)
    rows = pinball_table(Partition((3, 2)))
    assert len(data) == 10
    for d, r in zip(data, rows):
        assert Permutation(tuple(d["w"])) == r.w
        assert Filling(tuple(tuple(x) for x in d["filling"])) == r.filling
        assert {tuple(p) for p in d["dim_pairs"]} == set(r.dim_pairs)
        assert d["deg"] == r.deg
        assert Permutation(tuple(d["roll"])) == r.roll


def test_pinball_one_row(capsys):
    code, out, _ = run(capsys, "pinball", "5", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data) == 1
    assert data[0]["w"] == data[0]["roll"] == [1, 2, 3, 4, 5]


def test_pinball_csv_and_latex(capsys):
    _, out, _ = run(capsys, "pinball", "2,2", "--format", "csv")
    assert out.splitlines()[0].startswith("w,w^-1,filling")
    assert len(out.splitlines()) == 7
    _, out, _ = run(capsys, "pinball", "2,2", "--format", "latex")
    assert out.startswith("\\begin{tabular}") and out.count("\\hline") >= 7


def test_pinball_rejects_non_springer_h(capsys):
    code, _, err = run(capsys, "pinball", "2,2", "--h", "2,3,4,4")
    assert code == 2 and "error" in err


@pytest.mark.parametrize("part,fillings,distinct", [("3,2,1", 6, 6), ("2,2", 2, 1), ("4", 1, 1)])
def test_highest_forms(capsys, part, fillings, distinct):
    code, out, _ = run(capsys, "highest-forms", part, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["fillings"]) == fillings
    assert data["distinct"] == data["formula"] == distinct


def test_highest_forms_text(capsys):
    code, out, _ = run(capsys, "highest-forms", "3,2,1")
    assert code == 0 and "formula: 6 (ok)" in out


def test_highest_forms_invalid(capsys):
    code, _, err = run(capsys, "highest-forms", "2,3")
    assert code == 2 and "weakly decreasing" in err


def test_fixed_points(capsys):
    code, out, _ = run(capsys, "fixed-points", "2,2", "--h", "id", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert [Permutation(tuple(p["w"])) for p in data["points"]] == sorted(
        r.w for r in pinball_table(Partition((2, 2))))
    code, out, _ = run(capsys, "fixed-points", "2,2", "--h", "2,3,4,4", "--brute-force")
    assert code == 0 and "brute force agrees: yes" in out and "fixed points: 14" in out
    code, out, _ = run(capsys, "fixed-points", "3")
    assert code == 0 and "fixed points: 1" in out


def test_fixed_points_bad_sigma(capsys):
    code, _, _ = run(capsys, "fixed-points", "2,2", "--sigma", "1,2,3")
    assert code == 2
    code, _, _ = run(capsys, "fixed-points", "2,2", "--h", "1,2,3")
    assert code == 2


@pytest.mark.parametrize("part,expected", [("2,2", "1,3,2"), ("3,2", "1,4,5"), ("6", "1")])
def test_betti(capsys, part, expected):
    code, out, _ = run(capsys, "betti", part)
    assert code == 0 and out.strip() == expected
    _, out, _ = run(capsys, "betti", part, "--format", "json")
    assert ",".join(map(str, json.loads(out)["betti"])) == expected


def test_verify_basis_small(capsys):
    code, out, _ = run(capsys, "verify-basis", "2,2")
    assert code == 0 and "poset-upper-triangular: yes" in out


def test_verify_basis_blocks(capsys):
    code, out, _ = run(capsys, "verify-basis", "4,2")
    assert code == 0
    assert "B block zero: yes" in out
    assert "D matches closed form" in out
    assert "full column rank: yes" in out


def test_verify_basis_json_round_trip(capsys):
    code, out, _ = run(capsys, "verify-basis", "3,2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["rank"]["full_rank"] and data["rank"]["rank"] == 10
    shape = Partition((3, 2))
    M = RestrictionMatrix.from_json(data["matrix"], shape)
    assert M.entries == build_matrix(shape).entries


def test_verify_basis_d_block_emitters(capsys):
    _, out, _ = run(capsys, "verify-basis", "4,2", "--format", "csv")
    lines = out.splitlines()
    assert len(lines) == 6 and lines[1].split(",")[1] == "-2t"
    _, out, _ = run(capsys, "verify-basis", "4,2", "--format", "latex")
    assert "\\begin{bmatrix}" in out and "t^{2}" in out


def test_restrict(capsys):
    code, out, _ = run(capsys, "restrict", "2134", "2413", "--shape", "2,2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["equivariant"] == "t1 - t2"
    assert data["projected"] == ["0", "-2"]
    code, out, _ = run(capsys, "restrict", "4321", "1234")
    assert code == 0 and "= 0" in out
    code, _, _ = run(capsys, "restrict", "213", "2134")
    assert code == 2


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "springer_pinball", "betti", "2,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1,3,2"

import json
import subprocess
import sys

import pytest

from schur_idempotents.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kostka_csv(capsys):
    code, out, _ = run(capsys, "kostka", "--m-max", "1", "--g-max", "3", "--p", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1:] == ["1,0,0,0", "1,1,0,1"]


def test_kostka_trivial(capsys):
    code, out, _ = run(capsys, "kostka", "--m-max", "0", "--g-max", "0", "--format", "csv")
    assert code == 0 and out.splitlines()[-1] == "1"
    code, out, _ = run(capsys, "kostka", "--format", "json")
    assert json.loads(out) == {"p": 2, "rows": [[1]]}


def test_kostka_text_symbols(capsys):
    code, out, _ = run(capsys, "kostka", "--m-max", "1", "--g-max", "3")
    assert code == 0
    assert "m=1 g=1: (1/1) (1/0) -> b 1-b" in out
    assert "m=1 g=2: (1/0) (0/1) (1/0) -> 1-b 0 1-b" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["kostka", "--p", "4"],
        ["kostka", "--m-max", "-1"],
        ["verify", "--m", "1", "--lambda2", "-1"],
        ["verify", "--m", "1"],
        ["verify", "--m", "1", "--lambda2", "2", "--r", "6"],
        ["verify", "--m-range", "0:3"],
        ["verify", "--m-range", "3:1", "--lambda2-range", "0:2"],
        ["idempotents", "--r", "5", "--m", "2"],
        ["blocks", "--r", "3", "--lambda2", "2"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_idempotents_listing(capsys):
    code, out, _ = run(capsys, "idempotents", "--m", "1", "--lambda2", "2")
    assert code == 0
    assert "e_{1,0} = (1+b(1)) = b(0)+b(1)" in out
    assert "e_{1,1} = b(1)*(1+b(2)) = b(1)" in out
    code, out, _ = run(capsys, "idempotents", "--m", "1", "--lambda2", "2", "--format", "json")
    data = json.loads(out)
    assert [x["expanded"] for x in data["idempotents"]] == ["b(0)+b(1)", "b(1)"]
    assert data["idempotents"][1]["element"]["coeffs"] == ["0", "1", "0"]


@pytest.mark.parametrize("m, k", [(0, 5), (1, 0)])
def test_idempotents_single_entry(capsys, m, k):
    code, out, _ = run(capsys, "idempotents", "--m", str(m), "--lambda2", str(k), "--format", "json")
    entries = json.loads(out)["idempotents"]
    assert code == 0 and len(entries) == 1 and entries[0]["expanded"] == "b(0)"


def test_any_two_of_m_lambda2_r(capsys):
    a = run(capsys, "idempotents", "--m", "1", "--lambda2", "3", "--format", "json")[1]
    b = run(capsys, "idempotents", "--r", "7", "--lambda2", "3", "--format", "json")[1]
    c = run(capsys, "idempotents", "--r", "7", "--m", "1", "--format", "json")[1]
    assert a == b == c


def test_verify_single_and_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--m", "1", "--lambda2", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["admissible_g"] == [0, 1]
    code, out, _ = run(capsys, "verify", "--m-range", "0:4", "--lambda2-range", "0:6")
    assert code == 0
    assert out.splitlines()[-1] == "35/35 grid points pass"
    code, out, _ = run(capsys, "verify", "--m-range", "0:1", "--lambda2-range", "2:3", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 5


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--r", "5", "--lambda2", "2", "--p", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["structure_constants"]["pass"] and data["rank_report"]["rank_sum"] == 10
    code, out, _ = run(capsys, "oracle", "--r", "2", "--lambda2", "1")
    assert code == 0 and "rank sum 2 of 2" in out
    code, out, _ = run(capsys, "oracle", "--r", "6", "--lambda2", "3", "--p", "3", "--format", "json")
    assert code == 0 and "rank_report" not in json.loads(out)


def test_oracle_cost_bound(capsys):
    code, _, err = run(capsys, "oracle", "--r", "40", "--lambda2", "20")
    assert code == 3 and "refused" in err
    code, _, _ = run(capsys, "oracle", "--r", "8", "--lambda2", "4", "--cost-bound", "10")
    assert code == 3


def test_blocks(capsys):
    code, out, _ = run(capsys, "blocks", "--m", "0", "--lambda2", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["blocks"]) == 1
    assert data["blocks"][0]["basis_degrees"] == [0, 1, 2, 3]
    assert data["blocks"][0]["generator_degrees"] == [1, 2]
    code, out, _ = run(capsys, "blocks", "--m", "1", "--lambda2", "5", "--format", "json")
    data = json.loads(out)
    assert [b["g"] for b in data["blocks"]] == [0, 1, 3]
    assert data["dimension_sum"] == 6
    code, out, _ = run(capsys, "blocks", "--m", "1", "--lambda2", "0", "--format", "json")
    assert json.loads(out)["blocks"][0]["dimension"] == 1


def test_char0(capsys):
    code, out, _ = run(capsys, "char0", "--m", "0", "--lambda2", "2")
    assert code == 0 and "F_3(T) = T(T-2)(T-6)" in out
    code, out, _ = run(capsys, "char0", "--m", "1", "--lambda2", "1", "--format", "json")
    data = json.loads(out)
    assert data["F"]["factored"] == "T(T-3)" and data["pass"]
    code, out, _ = run(capsys, "char0", "--m", "5", "--lambda2", "0", "--format", "json")
    assert code == 0 and json.loads(out)["basis_identity"] == {}


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "kostka", "--m-max", "1", "--g-max", "3", "--format", "csv", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "g=0,g=1,g=2,g=3\n1,0,0,0\n1,1,0,1\n"


def test_deterministic_output(capsys):
    argv = ["verify", "--m-range", "0:3", "--lambda2-range", "0:5", "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "schur_idempotents", "verify", "--m", "1", "--lambda2", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "pass" in proc.stdout

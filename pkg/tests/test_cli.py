import json

import pytest

from schur_kostka.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_mult(capsys):
    assert run(capsys, "mult", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5") == (0, "26", "")
    assert run(capsys, "mult", "--algebra", "A3", "--lambda", "0,0,0", "--delta", "0,0,0")[:2] == (0, "1")
    assert run(capsys, "mult", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5", "--route", "gt")[1] == "26"


def test_volume(capsys):
    assert run(capsys, "volume", "--algebra", "B2", "--alpha", "3/2,1/2", "--delta=-1,2")[:2] == (0, "1/8")
    assert run(capsys, "volume", "--algebra", "A3", "--alpha", "12,8,3,0", "--xi", "3,7,9,4")[1] == "23/3"
    code, out, _ = run(capsys, "volume", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5", "--json", "--approx")
    assert code == 0 and abs(json.loads(out)["I"] - 23 / 3) < 1e-12


def test_lr_and_horn(capsys):
    assert run(capsys, "lr", "--algebra", "A3", "--lambda", "4,5,3", "--mu", "5,5,5", "--nu", "1,3,10")[1] == "19"
    assert run(capsys, "horn-j", "--algebra", "A3", "--lambda", "4,5,3", "--mu", "5,5,5", "--nu", "1,3,10")[1] == "13/3"


def test_sc_and_stretch(capsys):
    code, out, _ = run(capsys, "sc", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5", "--json")
    assert code == 0 and json.loads(out)["s_c"] == 7
    code, out, _ = run(capsys, "stretch", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5", "--json")
    assert code == 0 and json.loads(out)["volume"] == "23/3"


def test_forest(capsys, tmp_path):
    code, out, _ = run(capsys, "forest", "--tableau", "111222233333/22233344/344", "--n", "4", "--svg", "f.svg", "--out", str(tmp_path), "--json")
    assert code == 0 and json.loads(out)["alpha"] == [12, 8, 3, 0]
    assert (tmp_path / "f.svg").exists()
    assert run(capsys, "forest", "--alpha", "12,8,3,0", "--xi", "3,7,9,4")[1] == "26"


def test_conjectures(capsys):
    assert run(capsys, "conjecture1", "--lambda1", "1")[0] == 0
    assert run(capsys, "conjecture2", "--lambda", "3,2", "--delta", "1,0")[0] == 0


def test_files(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SCHUR_KOSTKA_OUT", str(tmp_path))
    assert run(capsys, "pdf-grid", "--algebra", "A2", "--alpha", "5,3,1", "--bins", "8")[0] == 0
    assert (tmp_path / "pdf_A2.csv").read_text().startswith("xi1,xi2,xi3,I,pdf,cell")
    code, out, _ = run(capsys, "sample", "--group", "SU3", "--alpha", "5,3,1", "--n-samples", "20000", "--bins", "20", "--json")
    assert code == 0 and json.loads(out)["outside_support"] == 0
    assert run(capsys, "cells", "--algebra", "B2", "--alpha", "4,1", "--csv", "c.csv")[1] == "V=24 E=48 F=25"


def test_smoothness(capsys):
    code, out, _ = run(capsys, "smoothness", "--algebra", "A3", "--alpha", "7,4,2,-6", "--wall", "pair:1,2,1,3", "--json")
    assert code == 0 and json.loads(out)["continuity_class"] == 2


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["mult", "--algebra", "A3", "--lambda=-1,0,0", "--delta", "0,0,0"], "dominant"),
        (["mult", "--algebra", "G2", "--lambda", "1,0", "--delta", "0,0"], "unsupported algebra"),
        (["mult", "--algebra", "A3", "--lambda", "1,0", "--delta", "0,0,0"], "Dynkin labels"),
        (["volume", "--algebra", "A3", "--alpha", "1,2,3,4", "--xi", "1,2,3,4"], "decreasing"),
        (["sample", "--group", "SO5", "--alpha", "1,2"], "alpha_1 > alpha_2"),
    ],
)
def test_validation_exit_code(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


def test_unparsable_rational_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["mult", "--algebra", "A3", "--lambda", "x,1,2", "--delta", "0,0,0"])
    assert e.value.code == 2


def test_golden_table_subset(capsys):
    code, out, _ = run(capsys, "paper-check", "--skip", "3,7,8,9,10,11,12,14")
    assert code == 0 and "6/6 checks passed" in out


def test_failed_check_exits_1(capsys):
    # too short a window to see the sequence settle
    code, out, _ = run(capsys, "sc", "--algebra", "A3", "--lambda", "4,5,3", "--delta=-4,-2,5", "--s-max", "5")
    assert code == 1 and "stabilized: False" in out

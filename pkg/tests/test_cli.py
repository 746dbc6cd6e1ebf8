import json
import subprocess
import sys

import pytest

from weylquiver import chars, fermionic, weylmod
from weylquiver.cli import main
from weylquiver.exactpoly import LaurentPoly


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_gch_text(capsys):
    status, out, _ = run(capsys, "gch", "--type", "A", "--rank", "1", "--lambda", "2")
    assert status == 0
    assert "degree 0: V(2*w1)" in out
    assert "degree 1: V(0)" in out


def test_gch_json(capsys):
    _, out, _ = run(capsys, "gch", "--type", "A", "--rank", "1", "--lambda", "2", "--format", "json")
    assert json.loads(out) == {
        "lambda": [2],
        "layers": [
            {"degree": 0, "components": [{"mu": [2], "mult": 1}]},
            {"degree": 1, "components": [{"mu": [0], "mult": 1}]},
        ],
    }


def test_betti(capsys):
    status, out, _ = run(capsys, "betti", "--type", "A", "--rank", "1", "--lambda", "2", "--alpha", "1")
    assert status == 0
    assert out.strip() == "alpha=(1) d=2 betti=(1,0,1)"
    _, out, _ = run(capsys, "betti", "--type", "A", "--rank", "1", "--lambda", "2", "--alpha", "1",
                    "--format", "json")
    assert json.loads(out) == {"alpha": [1], "d": 2, "betti": [1, 0, 1]}


def test_betti_sweep_csv(capsys):
    _, out, _ = run(capsys, "betti", "--type", "A", "--rank", "1", "--lambda", "2", "--format", "csv")
    assert out.splitlines() == ["alpha_1,d,b_0,b_1,b_2", "0,0,1,,", "1,2,1,0,1", "2,0,1,,"]


def test_kl(capsys):
    _, out, _ = run(capsys, "kl", "--type", "A", "--rank", "2", "--lambda", "1,1", "--mu", "0,0")
    assert out.strip() == "t^2"
    _, out, _ = run(capsys, "kl", "--type", "A", "--rank", "2", "--lambda", "1,1", "--mu", "0,0",
                    "--format", "json")
    assert LaurentPoly.from_json(json.loads(out)) == LaurentPoly.monomial(2)


def test_fermionic_and_poincare(capsys):
    _, out, _ = run(capsys, "fermionic", "--type", "A", "--rank", "1", "--lambda", "3", "--mu", "1")
    assert out.strip() == "t^-2 + t^-1"
    _, out, _ = run(capsys, "poincare", "--type", "A", "--rank", "1", "--lambda", "3", "--alpha", "1")
    assert out.strip() == "1 + t^2 + t^4"


def test_loewy_json(capsys):
    _, out, _ = run(capsys, "loewy", "--type", "A", "--rank", "1", "--lambda", "3", "--format", "json")
    rep = json.loads(out)
    assert rep["loewy_length"] == 3 and rep["socle"] == [1] and rep["dimension"] == 8


def test_tableaux(capsys):
    _, out, _ = run(capsys, "tableaux", "--type", "A", "--rank", "2", "--lambda", "2,0", "--alpha", "1,0",
                    "--format", "json")
    rep = json.loads(out)
    assert rep["tableaux"] == 2
    assert LaurentPoly.from_json(rep["chari_loktev"]) == 1 + LaurentPoly.monomial(2)


def test_tableaux_rejects_other_types(capsys):
    status, _, err = run(capsys, "tableaux", "--type", "D", "--rank", "4", "--lambda", "1,0,0,0")
    assert status == 2 and "type A only" in err


def test_info(capsys):
    _, out, _ = run(capsys, "info", "--type", "E", "--rank", "6", "--format", "json")
    info = json.loads(out)
    assert info["positive_roots"] == 36
    assert [2, 4] in info["adjacency"]
    assert info["minuscule_nodes"] == [1, 6]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--type", "A", "--rank", "1", "--lambda", "2"],
        ["verify", "--type", "A", "--rank", "2", "--lambda", "2,0"],
        ["verify", "--type", "A", "--rank", "2", "--lambda", "0,0"],
        ["verify", "--type", "A", "--rank", "2", "--lambda", "2,1", "--depth", "2"],
        ["verify", "--type", "D", "--rank", "4", "--lambda", "0,1,0,0"],
    ],
)
def test_verify_passes(capsys, argv):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert "FAIL" not in out and out.strip().endswith("all checks passed")


def test_verify_depth_covers_lower_weights(capsys):
    _, out, _ = run(capsys, "verify", "--type", "A", "--rank", "1", "--lambda", "2", "--depth", "2",
                    "--format", "json")
    assert {tuple(r["lambda"]) for r in json.loads(out)} == {(2,), (1,), (0,)}


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["gch", "--type", "B", "--rank", "2", "--lambda", "1,0"], "simply-laced"),
        (["gch", "--type", "D", "--rank", "3", "--lambda", "1,0,0"], "simply-laced"),
        (["gch", "--type", "A", "--rank", "2", "--lambda", "1,-1"], "not dominant"),
        (["gch", "--type", "A", "--rank", "2", "--lambda", "1,0,0"], "needs 2"),
        (["betti", "--type", "A", "--rank", "1", "--lambda", "2", "--alpha", "-1"], "Q_+"),
        (["kl", "--type", "A", "--rank", "1", "--lambda", "2", "--mu", "-2"], "not dominant"),
        (["verify", "--type", "A", "--rank", "1", "--lambda", "2", "--depth", "-1"], "nonnegative"),
    ],
)
def test_errors(capsys, argv, needle):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ""
    assert needle in err


@pytest.mark.parametrize(
    "argv",
    [
        ["gch", "--type", "A", "--rank", "1", "--lambda", "2", "--mu", "0"],
        ["info", "--type", "A", "--rank", "1", "--lambda", "2"],
        ["kl", "--type", "A", "--rank", "1", "--lambda", "2"],
        ["gch", "--type", "A", "--rank", "1", "--lambda", "x"],
    ],
)
def test_parameter_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_max_terms_budget(capsys):
    fermionic._memo.clear()
    weylmod._layer_memo.clear()
    status, _, err = run(capsys, "fermionic", "--type", "A", "--rank", "2", "--lambda", "3,3", "--mu", "0,0",
                         "--max-terms", "2")
    assert status == 2 and "more than 2" in err
    status, out, _ = run(capsys, "fermionic", "--type", "A", "--rank", "2", "--lambda", "3,3", "--mu", "0,0")
    assert status == 0 and out.strip()


def test_cache_dir(capsys, tmp_path):
    chars.clear_memo()
    argv = ["betti", "--type", "D", "--rank", "4", "--lambda", "1,0,1,0", "--cache-dir", str(tmp_path)]
    _, first, _ = run(capsys, *argv)
    assert list(tmp_path.glob("char_v1_D4_*.json"))
    chars.clear_memo()
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_output_is_deterministic_across_processes():
    argv = [sys.executable, "-m", "weylquiver", "gch", "--type", "D", "--rank", "4", "--lambda", "2,0,0,0",
            "--format", "json"]
    runs = [subprocess.run(argv, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1]
    assert json.loads(runs[0])["lambda"] == [2, 0, 0, 0]

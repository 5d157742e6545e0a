"""End-to-end runs of the command line entry point."""

import json
import random
from pathlib import Path

from stallings import Alphabet, Word
from stallings.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce_prints_reduced_word(capsys):
    code, out, _ = run(capsys, "reduce", "--word", "xyYX")
    assert code == 0
    assert out.strip() == "e"


def test_reduce_json_payload(capsys):
    code, out, _ = run(capsys, "--json", "reduce", "--word", "xyYxx")
    assert code == 0
    assert json.loads(out) == {"word": "xxx", "length": 3}


def test_root_subcommand(capsys):
    code, out, _ = run(capsys, "root", "--g", "xyxy", "--m", "2")
    assert code == 0 and out.strip() == "xy"
    code, out, _ = run(capsys, "root", "--g", "xxy", "--m", "2")
    assert code == 0 and out.strip() == "none"


def test_fold_reports_graph_shape(capsys):
    code, out, _ = run(capsys, "fold", "--gens", "xy,xyy,y")
    assert code == 0
    assert out.strip() == "vertices=1 edges=2 rank=2"


def test_fold_accepts_graph_fixture(capsys):
    code, out, _ = run(capsys, "fold", "--graph",
                       str(FIXTURES / "folds_to_bouquet.txt"))
    assert code == 0
    assert "vertices=1 edges=2" in out


def test_fold_dot_output_is_stable(capsys):
    code1, out1, _ = run(capsys, "fold", "--gens", "xxy,Xyy", "--dot")
    code2, out2, _ = run(capsys, "fold", "--gens", "Xyy,xxy", "--dot")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "doublecircle" in out1


def test_fold_png_written(tmp_path, capsys):
    png = tmp_path / "graph.png"
    code, _, err = run(capsys, "fold", "--gens", "xxy", "--png", str(png))
    assert code == 0
    assert png.exists() and png.stat().st_size > 0
    assert str(png) in err


def test_basis_lists_words(capsys):
    code, out, _ = run(capsys, "basis", "--gens", "xy,xyy,y")
    assert code == 0
    assert sorted(out.split()) == ["x", "y"]


def test_basis_json(capsys):
    code, out, _ = run(capsys, "--json", "basis", "--gens", "xxy,Xyy")
    payload = json.loads(out)
    assert code == 0
    assert sorted(payload["basis"]) == ["Xyy", "xxy"]
    assert payload["rank"] == 2


def test_member_true_and_false(capsys):
    code, out, _ = run(capsys, "member", "--gens", "xx,y", "--word", "xxy")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "member", "--gens", "xx,y", "--word", "x")
    assert code == 0 and out.strip() == "false"


def test_factor_certificate_output(capsys):
    code, out, _ = run(capsys, "factor", "--h-gens", "xyXY",
                       "--n-gens", "xyXY,xyyx")
    assert code == 0
    assert "basis_h: xyXY" in out
    assert "xyyx" in out


def test_factor_without_certificate(capsys):
    code, out, _ = run(capsys, "factor", "--h-gens", "xx", "--n-gens", "x")
    assert code == 0
    assert "no certificate" in out


def test_intersect_reports_basis(capsys):
    code, out, _ = run(capsys, "--json", "intersect",
                       "--a-gens", "x", "--b-gens", "xx")
    payload = json.loads(out)
    assert code == 0
    assert payload["basis"] == ["xx"]


def test_solve_quotient_witness(capsys):
    code, out, _ = run(capsys, "solve-quotient", "--equation", "v1v1X",
                       "--num-vars", "1", "--rank", "1",
                       "--degree", "3", "--images", "(1 2 3)")
    assert code == 0
    assert out.strip() == "solvable: (1 3 2)"


def test_solve_quotient_unsolvable(capsys):
    code, out, _ = run(capsys, "solve-quotient", "--equation", "v1v1X",
                       "--num-vars", "1", "--rank", "1",
                       "--degree", "2", "--images", "(1 2)")
    assert code == 0
    assert out.strip() == "unsolvable"


def test_solve_quotient_json_payload(capsys):
    code, out, _ = run(capsys, "--json", "solve-quotient", "--equation", "v1v1X",
                       "--num-vars", "1", "--rank", "1",
                       "--degree", "3", "--images", "(1 2 3)")
    payload = json.loads(out)
    assert code == 0
    assert payload["solvable"] is True
    assert payload["witness"] == ["(1 3 2)"]
    assert payload["equation"] == "v1v1X"


def test_local_global_exit_codes(capsys):
    code, out, _ = run(capsys, "local-global", "--g", "x", "--m", "2")
    assert code == 10
    assert "LOCAL_FAILURE" in out and "(1 2)" in out
    code, out, _ = run(capsys, "local-global", "--g", "xyxy", "--m", "2")
    assert code == 0
    assert "GLOBAL_SOLUTION" in out and "root=xy" in out
    code, out, _ = run(capsys, "local-global", "--g", "x", "--m", "2",
                       "--max-degree", "1")
    assert code == 20
    assert "EXHAUSTED" in out


def test_local_global_env_budget(capsys, monkeypatch):
    monkeypatch.setenv("STALLINGS_MAX_DEGREE", "1")
    code, out, _ = run(capsys, "local-global", "--g", "x", "--m", "2")
    assert code == 20


def test_local_global_json(capsys):
    code, out, _ = run(capsys, "--json", "local-global", "--g", "x", "--m", "2")
    payload = json.loads(out)
    assert code == 10
    assert payload["mode"] == "LOCAL_FAILURE"
    assert payload["hom"]["gens"] == ["(1 2)", "()"]


def test_sweep_prints_rows_and_writes_report(tmp_path, capsys):
    report = tmp_path / "report"
    code, out, err = run(capsys, "sweep", "--max-len", "2", "--m", "2",
                         "--report-dir", str(report))
    assert code == 0
    assert "xx m=2 GLOBAL_SOLUTION root=x" in out
    assert "xy m=2 LOCAL_FAILURE degree=" in out
    assert (report / "sweep.csv").exists()
    pngs = sorted(p.name for p in report.glob("*.png"))
    assert pngs == ["sweep_outcomes.png", "witness_degree_by_length.png",
                    "witness_degrees.png"]
    assert err.count("wrote") == 4


def test_sweep_json_rows(capsys):
    code, out, _ = run(capsys, "--json", "sweep", "--max-len", "1", "--m", "2,3")
    rows = json.loads(out)
    assert code == 0
    assert all(set(r) >= {"g", "m", "mode"} for r in rows)
    assert any(r["g"] == "x" and r["m"] == 2 and r["mode"] == "LOCAL_FAILURE"
               for r in rows)


def test_reduce_pipeline_output(capsys):
    code, out, _ = run(capsys, "reduce-pipeline", "--g", "xxx",
                       "--solution-gens", "xxx", "--family", "y,xyX,xxx")
    assert code == 0
    assert "h_basis: xxx" in out
    assert "rank 1 <= bound 1" in out
    assert "[not machine-checked]" in out


def test_usage_error_exit_code(capsys):
    code, _, err = run(capsys, "reduce", "--word", "xq")
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "member", "--gens", "x", "--word", "z")
    assert code == 2


def test_guard_violation_exit_code(capsys):
    code, _, err = run(capsys, "solve-quotient", "--equation", "v1v1X",
                       "--num-vars", "1", "--rank", "1", "--degree", "9",
                       "--images", "(1 2 3 4 5 6 7 8 9)")
    assert code == 3
    assert "guard violation:" in err


def test_round_trip_words_through_reduce(capsys):
    rng = random.Random(801)
    alphabet = Alphabet(2)
    for _ in range(50):
        letters = []
        for _ in range(rng.randint(0, 8)):
            l = rng.choice([1, -1, 2, -2])
            if letters and l == -letters[-1]:
                continue
            letters.append(l)
        w = Word(alphabet, tuple(letters))
        code, out, _ = run(capsys, "reduce", "--word", str(w))
        assert code == 0
        assert alphabet.word(out.strip()) == w

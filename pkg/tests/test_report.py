"""File outputs of the report helpers."""

import csv

from stallings import Alphabet, graph_from_generators, sweep_mpowers
from stallings.report import (render_graph_png, render_sweep_figures,
                              write_sweep_csv)

A2 = Alphabet(2)


def small_rows():
    return sweep_mpowers(rank=2, max_len=2, exponents=(2,), audit=False)


def test_sweep_csv_columns(tmp_path):
    rows = small_rows()
    path = write_sweep_csv(rows, tmp_path / "sweep.csv")
    with open(path, newline="") as fh:
        records = list(csv.DictReader(fh))
    assert len(records) == len(rows)
    assert {"g", "m", "mode", "witness_degree"} <= set(records[0])
    by_g = {(r["g"], r["m"]): r for r in records}
    assert by_g[("xx", "2")]["mode"] == "GLOBAL_SOLUTION"
    assert by_g[("xy", "2")]["mode"] == "LOCAL_FAILURE"


def test_sweep_figures_written(tmp_path):
    figures = render_sweep_figures(small_rows(), tmp_path)
    assert sorted(p.name for p in figures) == [
        "sweep_outcomes.png", "witness_degree_by_length.png",
        "witness_degrees.png"]
    for p in figures:
        assert p.exists() and p.stat().st_size > 0


def test_graph_png_written(tmp_path):
    g = graph_from_generators([A2.word("xxy"), A2.word("Xyy")])
    path = render_graph_png(g, tmp_path / "core.png", title="core")
    assert path.exists() and path.stat().st_size > 0

"""Report rendering: delimited sweep output plus matplotlib figures."""

from __future__ import annotations

import csv
import math
from collections import Counter
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graphs import StallingsGraph
from .localglobal import SweepRow, WitnessMode
from .words import gen_name

SWEEP_FIELDS = ["g", "length", "m", "mode", "witness_degree", "root",
                "homs_tested", "elapsed_s"]


def write_sweep_csv(rows: Sequence[SweepRow], path) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_FIELDS)
        for row in rows:
            r = row.report
            writer.writerow([
                str(row.g), len(row.g), row.m, r.mode.value,
                r.degree if r.degree is not None else "",
                str(r.root) if r.root is not None else "",
                r.homs_tested, "%.6f" % r.elapsed_s,
            ])
    return path


def render_sweep_figures(rows: Sequence[SweepRow], outdir) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = []

    exponents = sorted({row.m for row in rows})
    degrees = sorted({row.report.degree for row in rows
                      if row.report.degree is not None})
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    width = 0.8 / max(len(exponents), 1)
    for pos, m in enumerate(exponents):
        counts = Counter(row.report.degree for row in rows
                         if row.m == m and row.report.degree is not None)
        xs = [d + pos * width for d in degrees]
        ax.bar(xs, [counts.get(d, 0) for d in degrees], width=width,
               label="m = %d" % m)
    ax.set_xticks([d + width * (len(exponents) - 1) / 2 for d in degrees])
    ax.set_xticklabels([str(d) for d in degrees])
    ax.set_xlabel("witnessing quotient degree")
    ax.set_ylabel("words")
    ax.set_title("Degree needed to refute x^m = g")
    ax.legend()
    fig.tight_layout()
    p = outdir / "witness_degrees.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)

    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for pos, m in enumerate(exponents):
        pts = [(len(row.g), row.report.degree) for row in rows
               if row.m == m and row.report.degree is not None]
        jitter = (pos - (len(exponents) - 1) / 2) * 0.12
        ax.scatter([l + jitter for (l, _) in pts],
                   [d for (_, d) in pts], s=18, alpha=0.5, label="m = %d" % m)
    ax.set_xlabel("|g|")
    ax.set_ylabel("witnessing quotient degree")
    ax.set_title("Witness degree by word length")
    ax.yaxis.get_major_locator().set_params(integer=True)
    ax.xaxis.get_major_locator().set_params(integer=True)
    ax.legend()
    fig.tight_layout()
    p = outdir / "witness_degree_by_length.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)

    modes = Counter(row.report.mode for row in rows)
    fig, ax = plt.subplots(figsize=(4.8, 3.6))
    labels = [mode.value for mode in WitnessMode]
    ax.bar(range(len(labels)), [modes.get(mode, 0) for mode in WitnessMode],
           color=["#4a7", "#a47", "#777"])
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels(labels, rotation=20, ha="right", fontsize=8)
    ax.set_ylabel("cases")
    ax.set_title("Sweep outcomes")
    fig.tight_layout()
    p = outdir / "sweep_outcomes.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    paths.append(p)
    return paths


def render_graph_png(g: StallingsGraph, path, title: str | None = None) -> Path:
    """Draw the graph with vertices on a circle; the basepoint is ringed."""
    path = Path(path)
    n = g.num_vertices
    pos = {}
    for v in range(n):
        angle = math.pi / 2 - 2 * math.pi * v / max(n, 1)
        pos[v] = (math.cos(angle), math.sin(angle)) if n > 1 else (0.0, 0.0)
    fig, ax = plt.subplots(figsize=(5.0, 5.0))
    ax.set_aspect("equal")
    ax.axis("off")
    for v, (x, y) in pos.items():
        ax.add_patch(plt.Circle((x, y), 0.06, fill=True, color="#335"))
        if v == g.basepoint:
            ax.add_patch(plt.Circle((x, y), 0.09, fill=False, color="#335",
                                    linewidth=1.2))
        ax.annotate(str(v), (x, y), textcoords="offset points",
                    xytext=(10, 10), fontsize=9, color="#335")
    for (u, i, v) in g.edges:
        name = gen_name(i, g.rank)
        if u == v:
            x, y = pos[u]
            r = 0.16
            cx, cy = x * (1 + r * 2.2), y * (1 + r * 2.2)
            if x == 0 and y == 0:
                cx, cy = 0.25 * (1 + i), 0.0
            ax.add_patch(plt.Circle((cx, cy), r, fill=False, color="#888"))
            ax.annotate(name, (cx, cy), ha="center", va="center", fontsize=9,
                        color="#a33")
        else:
            (x1, y1), (x2, y2) = pos[u], pos[v]
            arrow = matplotlib.patches.FancyArrowPatch(
                (x1, y1), (x2, y2), connectionstyle="arc3,rad=0.15",
                arrowstyle="-|>", mutation_scale=12, color="#888",
                shrinkA=8, shrinkB=8)
            ax.add_patch(arrow)
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            nx, ny = -(y2 - y1), (x2 - x1)
            norm = math.hypot(nx, ny) or 1.0
            ax.annotate(name, (mx + 0.12 * nx / norm, my + 0.12 * ny / norm),
                        ha="center", va="center", fontsize=9, color="#a33")
    ax.relim()
    ax.autoscale_view()
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

"""Evaluation tables (CSV / LaTeX) and the figures rendered next to them."""
from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Sequence

from .invariants.evaluations import LIMITS, EvaluationReport

COLUMNS = ("level", "tau", "connected_spanning", "forests", "two_pow_E", "acyclic",
           "asymptotic_ratio", "asymptotic_ratio_float", "ising_identity")


def _row(r: EvaluationReport) -> list[str]:
    v = r.values()
    ising = "" if r.ising_identity is None else ("pass" if r.ising_identity else "fail")
    return [str(r.level), v["tau"], v["connected_spanning"], v["forests"], v["two_pow_E"], v["acyclic"],
            v["asymptotic_ratio"], v["asymptotic_ratio_float"], ising]


def table_csv(reports: Sequence[EvaluationReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in reports:
        writer.writerow(_row(r))
    return buf.getvalue()


def _latex_int(value: int) -> str:
    """Factor out powers of 2 and 3 so large counts stay readable."""
    if value <= 0:
        return str(value)
    parts = []
    for p in (2, 3):
        e = 0
        while value % p == 0:
            value //= p
            e += 1
        if e:
            parts.append(f"{p}^{{{e}}}" if e > 1 else str(p))
    if value != 1:
        parts.append(str(value))
    return "$" + (r" \cdot ".join(parts) or "1") + "$"


def table_latex(reports: Sequence[EvaluationReport]) -> str:
    lines = [
        r"\begin{tabular}{rllllll}",
        r"$n$ & $\tau$ & $T(1,2)$ & $T(2,1)$ & $T(2,2)$ & $T^\ast(2,0)$ & $\log_2\tau/|V|$ \\",
        r"\hline",
    ]
    for r in reports:
        ratio = r.asymptotic_ratio
        cells = [str(r.level)] + [_latex_int(v) for v in
                                  (r.tau, r.connected_spanning, r.forests, r.two_pow_E, r.acyclic)]
        cells.append(f"$\\frac{{{ratio.numerator}}}{{{ratio.denominator}}}$")
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def render_figures(reports: Sequence[EvaluationReport], out_dir: Path, stem: str) -> list[Path]:
    """Growth-ratio convergence and log2 of the counts per level, one PNG each."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir.mkdir(parents=True, exist_ok=True)
    group = reports[0].group
    levels = [r.level for r in reports]
    written = []

    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.plot(levels, [float(r.asymptotic_ratio) for r in reports], "o-", label=r"$\log_2\tau/|V|$")
    ax.axhline(float(LIMITS[group]), color="grey", ls="--", label=f"limit {LIMITS[group]}")
    ax.set_xlabel("level $n$")
    ax.set_ylabel(r"$\log_2\tau(G_n)/|V(G_n)|$")
    ax.set_title(f"{group}: spanning-tree growth")
    ax.legend()
    fig.tight_layout()
    path = out_dir / f"{stem}_growth.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)

    fig, ax = plt.subplots(figsize=(5, 3.5))
    for attr, label in (("tau", "spanning trees"), ("forests", "spanning forests"),
                        ("connected_spanning", "connected spanning"), ("acyclic", "acyclic orientations")):
        ax.plot(levels, [math.log2(getattr(r, attr)) for r in reports], "o-", label=label)
    ax.set_yscale("log")
    ax.set_xlabel("level $n$")
    ax.set_ylabel(r"$\log_2$ count")
    ax.set_title(f"{group}: Tutte evaluations")
    ax.legend(fontsize=8)
    fig.tight_layout()
    path = out_dir / f"{stem}_counts.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written

"""Figures written next to the CLI's delimited output."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def bench_figure(rows: Sequence[dict], path: str | Path) -> Path:
    """Log-log plot of direct vs fast evaluation time against k."""
    path = Path(path)
    ks = [r["k"] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.loglog(ks, [r["direct_time"] for r in rows], "o-", label="direct summation")
    ax.loglog(ks, [r["fast_time"] for r in rows], "s-", label="reciprocity descent")
    ax.set_xlabel("k")
    ax.set_ylabel("seconds per evaluation")
    ax.legend(frameon=False)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def sweep_figure(results, path: str | Path, title: str = "") -> Path:
    """Lattice count C against the product A for every tuple of a sweep."""
    path = Path(path)
    A = [r.A for r in results]
    C = [r.C for r in results]
    colors = ["tab:blue" if r.passed else "tab:red" for r in results]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(A, C, s=2, c=colors, linewidths=0)
    ax.set_xlabel("A = a_1 ... a_n")
    ax.set_ylabel("C = #lattice points  (-16C = F + sigma)")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def census_figure(census, path: str | Path, label: str = "") -> Path:
    """Bar chart of the interval census N_I."""
    path = Path(path)
    names = [f"({lo},{hi})" for (lo, hi), _ in census.census]
    counts = [c for _, c in census.census]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(names, counts, color="tab:gray")
    ax.set_ylabel("N_I")
    ax.set_title(label)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path

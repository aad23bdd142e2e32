"""Matplotlib renderings of the two-point unit balls.

Floating point appears only here, when exact vertices are handed to
matplotlib.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .polytope import NORMS, VRep, ball_hrep, enumerate_vertices  # noqa: E402

TITLES = {
    "sup": r"$\|x\|_\infty \leq 1$",
    "d": r"$\|x\|_d \leq 1$",
    "var": r"$\|P\|_r = \|\mu\|_1 \leq 1$",
    "zero": r"$\|P\|_\infty = \|\mu\|_0 \leq 1$ ($n$ even)",
}
AXES = {"sup": ("$x_1$", "$x_2$"), "d": ("$x_1$", "$x_2$"), "var": ("$a_1$", "$a_2$"), "zero": ("$a_1$", "$a_2$")}


def _ordered(vertices: VRep) -> list[tuple[float, float]]:
    pts = [(float(v[0]), float(v[1])) for v in vertices]
    return sorted(pts, key=lambda p: math.atan2(p[1], p[0]))


def draw_ball(ax, norm: str, vertices: VRep | None = None) -> None:
    if vertices is None:
        vertices = enumerate_vertices(ball_hrep(norm, 2))
    if len(vertices) and vertices.vertices[0].k != 2:
        raise ValueError("only planar balls can be drawn")
    pts = _ordered(vertices)
    xs, ys = zip(*(pts + pts[:1]))
    ax.fill(xs, ys, alpha=0.15, color="C0")
    ax.plot(xs, ys, color="C0", lw=1.5)
    ax.plot(xs[:-1], ys[:-1], "o", color="C3", ms=4)
    for v in vertices:
        ax.annotate(
            f"({v[0]}, {v[1]})",
            (float(v[0]), float(v[1])),
            textcoords="offset points",
            xytext=(4, 4),
            fontsize=7,
        )
    ax.axhline(0, color="0.7", lw=0.5)
    ax.axvline(0, color="0.7", lw=0.5)
    ax.set_aspect("equal")
    ax.set_xlim(-1.6, 1.6)
    ax.set_ylim(-1.6, 1.6)
    ax.set_title(TITLES[norm], fontsize=9)
    xl, yl = AXES[norm]
    ax.set_xlabel(xl)
    ax.set_ylabel(yl)


def save_ball(norm: str, path: str | Path, vertices: VRep | None = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(4, 4))
    draw_ball(ax, norm, vertices)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def save_two_point_figures(out_dir: str | Path, norms: Sequence[str] = NORMS) -> list[Path]:
    """One file per ball plus a 2x2 panel, all for K with two points."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = [save_ball(norm, out_dir / f"ball_{norm}_k2.png") for norm in norms]
    fig, axes = plt.subplots(2, 2, figsize=(7.5, 7.5))
    for ax, norm in zip(axes.flat, NORMS):
        draw_ball(ax, norm)
    fig.tight_layout()
    panel = out_dir / "balls_k2.png"
    fig.savefig(panel, dpi=120)
    plt.close(fig)
    written.append(panel)
    return written


def save_check_summary(reports, path: str | Path) -> Path:
    """Bar chart of cases and failures per suite."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    names = [r.suite for r in reports]
    cases = [r.cases for r in reports]
    fails = [len(r.failures) for r in reports]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    pos = range(len(names))
    ax.bar(pos, cases, color="C0", label="cases")
    ax.bar(pos, fails, color="C3", label="failures")
    ax.set_xticks(list(pos))
    ax.set_xticklabels(names, rotation=35, ha="right", fontsize=8)
    ax.set_yscale("symlog")
    ax.set_ylabel("count")
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path

"""Matplotlib renderings used by the CLI's ``--figure`` options.

Every function returns the ``Figure`` and writes it when ``path`` is given.
The Agg backend is selected on import, so nothing needs a display.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .core import format_word  # noqa: E402
from .dynamics import FunctionalGraph, analyze  # noqa: E402
from .interaction import ArcSign, SignedDigraph, connectivity  # noqa: E402

SIGN_COLORS = {ArcSign.POSITIVE: "tab:green", ArcSign.NEGATIVE: "tab:red", ArcSign.MIXED: "tab:purple"}


def _save(fig, path):
    if path is not None:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=120, bbox_inches="tight")
    return fig


def functional_graph_layout(g: FunctionalGraph) -> np.ndarray:
    """Attractors on circles side by side; transient states fan out by depth."""
    s = analyze(g)
    succ = np.asarray(g.successor)
    pos = np.zeros((g.size, 2))
    children: list[list[int]] = [[] for _ in range(g.size)]
    for v in range(g.size):
        if s.depth[v] > 0:
            children[int(succ[v])].append(v)
    x0 = 0.0
    for cyc in s.attractors:
        r = 0.6 + 0.15 * len(cyc)
        cx = x0 + r + 1.0 + s.height
        for k, v in enumerate(cyc):
            a = 2 * math.pi * k / len(cyc) + math.pi / 2
            pos[v] = (cx + r * math.cos(a), r * math.sin(a))
        # breadth-first outward from each periodic state
        for v in cyc:
            ang = math.atan2(pos[v, 1], pos[v, 0] - cx)
            frontier = [(v, ang, math.pi / max(2, len(cyc)))]
            while frontier:
                u, a, spread = frontier.pop()
                kids = children[u]
                for k, w in enumerate(kids):
                    off = 0.0 if len(kids) == 1 else spread * (k / (len(kids) - 1) - 0.5)
                    b = a + off
                    rad = math.hypot(pos[u, 0] - cx, pos[u, 1]) + 1.0
                    pos[w] = (cx + rad * math.cos(b), rad * math.sin(b))
                    frontier.append((w, b, spread / max(1, len(kids)) * 1.5))
        x0 = cx + r + s.height + 1.0
    return pos


def plot_functional_graph(g: FunctionalGraph, path=None, title: Optional[str] = None):
    pos = functional_graph_layout(g)
    s = analyze(g)
    periodic = s.depth == 0
    size = max(4.0, min(14.0, 1.2 * math.sqrt(g.size) * 1.6))
    fig, ax = plt.subplots(figsize=(size, size * 0.7))
    for v, w in enumerate(np.asarray(g.successor)):
        w = int(w)
        if v == w:
            ax.add_patch(plt.Circle((pos[v, 0], pos[v, 1] + 0.22), 0.18, fill=False, lw=0.8))
            continue
        ax.annotate(
            "", xy=pos[w], xytext=pos[v],
            arrowprops=dict(arrowstyle="-|>", lw=0.8, color="0.35", shrinkA=9, shrinkB=9),
        )
    ax.scatter(pos[~periodic, 0], pos[~periodic, 1], s=340, c="white", edgecolors="0.3", zorder=3)
    ax.scatter(pos[periodic, 0], pos[periodic, 1], s=340, c="tab:orange", edgecolors="0.3", zorder=3)
    if g.size <= 64:
        for v in range(g.size):
            ax.text(pos[v, 0], pos[v, 1], format_word(v, g.n), ha="center", va="center", fontsize=6, zorder=4)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title or f"height {s.height}, period {s.period}")
    return _save(fig, path)


def plot_signed_digraph(g: SignedDigraph, path=None, title: Optional[str] = None):
    n = g.n
    angles = [math.pi / 2 - 2 * math.pi * k / n for k in range(n)]
    xy = {j + 1: (math.cos(a), math.sin(a)) for j, a in enumerate(angles)}
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for i, j, sign in g.arcs:
        color = SIGN_COLORS[sign]
        if i == j:
            x, y = xy[i]
            ax.add_patch(plt.Circle((1.22 * x, 1.22 * y), 0.14, fill=False, color=color, lw=1.2))
            continue
        ax.annotate(
            "", xy=xy[j], xytext=xy[i],
            arrowprops=dict(arrowstyle="-|>", color=color, lw=1.2, shrinkA=12, shrinkB=12,
                            connectionstyle="arc3,rad=0.12"),
        )
    for j, (x, y) in xy.items():
        ax.scatter([x], [y], s=500, c="white", edgecolors="0.2", zorder=3)
        ax.text(x, y, f"x{j}", ha="center", va="center", zorder=4)
    handles = [plt.Line2D([], [], color=c, label=s.value) for s, c in SIGN_COLORS.items()]
    ax.legend(handles=handles, loc="lower right", fontsize=7, frameon=False)
    ax.set_xlim(-1.5, 1.5)
    ax.set_ylim(-1.5, 1.5)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title or f"{len(g.arcs)} arcs, {connectivity(g)}")
    return _save(fig, path)


def plot_dependency_matrix(computed, reference=None, path=None, title: Optional[str] = None):
    """Heatmap of ``computed``; cells that disagree with ``reference`` are boxed."""
    computed = np.asarray(computed, dtype=bool)
    n = computed.shape[0]
    fig, ax = plt.subplots(figsize=(1.0 + 0.45 * n, 1.0 + 0.45 * n))
    ax.imshow(computed, cmap="Greys", vmin=0, vmax=1.6)
    if reference is not None:
        for i, j in zip(*np.nonzero(computed != np.asarray(reference, dtype=bool))):
            ax.add_patch(plt.Rectangle((j - 0.5, i - 0.5), 1, 1, fill=False, ec="tab:red", lw=2))
    ticks = np.arange(n)
    ax.set_xticks(ticks, [str(k + 1) for k in ticks])
    ax.set_yticks(ticks, [str(k + 1) for k in ticks])
    ax.set_xlabel("j")
    ax.set_ylabel("i")
    ax.set_title(title or f"dependency at z, n={n}")
    return _save(fig, path)


def plot_realization(rows, path=None, title: Optional[str] = None):
    """``rows`` of ``(n, period, height)``; one line per ``n``."""
    fig, ax = plt.subplots(figsize=(5, 3.6))
    rows = np.asarray(rows, dtype=float)
    for n in sorted(set(rows[:, 0].astype(int))):
        sel = rows[:, 0] == n
        ax.plot(rows[sel, 1], rows[sel, 2], marker="o", ms=3, lw=1, label=f"n={n}")
    ax.set_xscale("symlog", base=2)
    ax.set_yscale("symlog", base=2)
    ax.set_xlabel("period p")
    ax.set_ylabel("height h")
    ax.legend(fontsize=7, frameon=False)
    ax.set_title(title or "realized period against height")
    return _save(fig, path)


def plot_report(report, path=None):
    """Per-``n`` bars of checked instances, premise matches and violations."""
    rows = [(k, v) for k, v in report.details.items() if isinstance(v, dict)]
    fig, ax = plt.subplots(figsize=(max(4.0, 0.8 * len(rows) + 2), 3.4))
    if not rows:
        ax.text(0.5, 0.5, f"{report.suite}: {report.verdict}", ha="center", va="center")
        ax.axis("off")
        return _save(fig, path)
    labels = [k for k, _ in rows]
    keys = [k for k in ("instances", "premise_holds", "unate_cycles", "not_self_dual", "violations") if any(k in v for _, v in rows)]
    if not keys:
        bad = [len(v.get("mismatches", [])) if "mismatches" in v else 0 for _, v in rows]
        ax.bar(labels, bad, color="tab:red")
        ax.set_ylabel("discrepancies")
    else:
        width = 0.8 / len(keys)
        x = np.arange(len(rows))
        for k, key in enumerate(keys):
            vals = [max(float(v.get(key, 0)), 0.0) for _, v in rows]
            ax.bar(x + k * width, vals, width, label=key.replace("_", " "))
        ax.set_xticks(x + width * (len(keys) - 1) / 2, labels)
        if max(float(v.get(keys[0], 0)) for _, v in rows) > 1000:
            ax.set_yscale("symlog")
        ax.legend(fontsize=7, frameon=False)
    ax.set_title(f"{report.suite}: {report.verdict}")
    return _save(fig, path)

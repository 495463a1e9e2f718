"""Planar drawings of fullerenes: Tutte embedding, matplotlib rendering.

The layout pins the largest face (ties broken by lowest id) to a regular
polygon and places every interior vertex at the barycentre of its
neighbours, the classic Tutte embedding; coordinates come from one dense
linear solve.  Figures are deterministic: fixed hash salt, no embedded
timestamps.
"""

from __future__ import annotations

import math

import matplotlib
import numpy as np

matplotlib.use("Agg")
import matplotlib.pyplot as plt
from matplotlib.patches import Circle

from .fullerene import Fullerene

matplotlib.rcParams["svg.hashsalt"] = "clarkit"


def tutte_layout(f: Fullerene, outer_face: int | None = None) -> np.ndarray:
    """Vertex coordinates (n x 2) with the outer face a regular polygon."""
    if outer_face is None:
        outer_face = max(
            range(f.num_faces), key=lambda i: (f.face_size(i), -i)
        )
    outer = f.face_vertices(outer_face)
    n = f.n
    pos = np.zeros((n, 2))
    fixed = np.zeros(n, dtype=bool)
    k = len(outer)
    for i, v in enumerate(outer):
        ang = 2 * math.pi * i / k + math.pi / 2
        pos[v] = (math.cos(ang), math.sin(ang))
        fixed[v] = True
    free = [v for v in range(n) if not fixed[v]]
    index = {v: i for i, v in enumerate(free)}
    a = np.zeros((len(free), len(free)))
    b = np.zeros((len(free), 2))
    for v in free:
        i = index[v]
        a[i, i] = 3.0
        for u in f.rot.neighbors[v]:
            if fixed[u]:
                b[i] += pos[u]
            else:
                a[i, index[u]] -= 1.0
    if free:
        sol = np.linalg.solve(a, b)
        for v in free:
            pos[v] = sol[index[v]]
    return pos


def draw_fullerene(
    f: Fullerene,
    ax=None,
    matching=None,
    clar_hexagons=(),
    title: str | None = None,
    vertex_labels: bool = False,
):
    """Draw the graph; matching edges doubled, Clar hexagons circled."""
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 5))
    pos = tutte_layout(f)
    matched = set()
    if matching is not None:
        matched = set(matching.edges)
    for (u, v) in f.edges():
        p, q = pos[u], pos[v]
        if (u, v) in matched or (v, u) in matched:
            d = q - p
            norm = np.hypot(*d)
            off = np.array([-d[1], d[0]]) / (norm if norm else 1.0) * 0.018
            ax.plot(*zip(p + off, q + off), color="black", lw=1.1, zorder=2)
            ax.plot(*zip(p - off, q - off), color="black", lw=1.1, zorder=2)
        else:
            ax.plot(*zip(p, q), color="black", lw=0.8, zorder=1)
    for h in clar_hexagons:
        centre = pos[list(f.face_vertices(h))].mean(axis=0)
        radius = 0.55 * float(
            np.mean(
                [np.hypot(*(pos[v] - centre)) for v in f.face_vertices(h)]
            )
        )
        ax.add_patch(
            Circle(centre, radius, fill=False, color="black", lw=1.0, zorder=3)
        )
    for p_id in f.pentagon_ids:
        centre = pos[list(f.face_vertices(p_id))].mean(axis=0)
        ax.fill(
            pos[list(f.face_vertices(p_id))][:, 0],
            pos[list(f.face_vertices(p_id))][:, 1],
            color="0.85",
            zorder=0,
        )
    if vertex_labels:
        for v in range(f.n):
            ax.text(*pos[v], str(v), fontsize=5, ha="center", va="center")
    if title:
        ax.set_title(title, fontsize=9)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def save_figure(fig, path: str) -> None:
    """Write the figure; SVG output carries no timestamp."""
    metadata = {"Date": None} if str(path).endswith(".svg") else None
    fig.savefig(path, metadata=metadata, bbox_inches="tight")
    plt.close(fig)


def clar_figure(f: Fullerene, pattern, title: str | None = None):
    """Figure of one Clar formula: circles plus the doubled witness."""
    fig, ax = plt.subplots(figsize=(5, 5))
    draw_fullerene(
        f, ax=ax, matching=pattern.witness, clar_hexagons=sorted(pattern.hexagons),
        title=title,
    )
    return fig


def gallery_figure(graphs, titles, per_row: int = 6):
    """Grid figure of several fullerenes (census gallery)."""
    rows = (len(graphs) + per_row - 1) // per_row
    fig, axes = plt.subplots(
        rows, per_row, figsize=(2.2 * per_row, 2.4 * rows)
    )
    axes = np.atleast_2d(axes)
    for idx in range(rows * per_row):
        ax = axes[idx // per_row][idx % per_row]
        if idx < len(graphs):
            f, pattern = graphs[idx]
            draw_fullerene(
                f,
                ax=ax,
                matching=None if pattern is None else pattern.witness,
                clar_hexagons=() if pattern is None else sorted(pattern.hexagons),
                title=titles[idx],
            )
        else:
            ax.axis("off")
    fig.tight_layout()
    return fig

"""Matplotlib figures written next to the CSV/JSON/DOT output."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Mapping, Optional, Sequence, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon as PolygonPatch  # noqa: E402

from .colouring import ColouredTriangulation  # noqa: E402
from .flipgraph import Component  # noqa: E402

PALETTE = ("#f2c94c", "#eb5757", "#56ccf2", "#6fcf97", "#bb6bd9", "#f2994a")

# Fixed metadata keeps PNG/SVG bytes reproducible.
_SAVE_KW = {"metadata": {"Software": None}}


def polygon_points(n: int):
    # vertex 0 at the top, counterclockwise
    return [(math.cos(math.pi / 2 + 2 * math.pi * v / n),
             math.sin(math.pi / 2 + 2 * math.pi * v / n)) for v in range(n)]


def draw_coloured_triangulation(ax, ct: ColouredTriangulation, labels: bool = True) -> None:
    pts = polygon_points(ct.n)
    for face, c in zip(ct.faces, ct.colours):
        ax.add_patch(PolygonPatch([pts[v] for v in face], closed=True,
                                  facecolor=PALETTE[c % len(PALETTE)],
                                  edgecolor="black", linewidth=0.8))
    if labels:
        for v, (x, y) in enumerate(pts):
            ax.annotate(str(v), (1.18 * x, 1.18 * y), ha="center", va="center", fontsize=7)
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.set_aspect("equal")
    ax.axis("off")


def plot_census(hist: Mapping[int, int], path: Union[str, Path], title: Optional[str] = None):
    sizes = sorted(hist)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.28 * len(sizes) + 2), 3.2))
    ax.bar([str(s) for s in sizes], [hist[s] for s in sizes], color="#4f6d7a")
    ax.set_xlabel("component size")
    ax.set_ylabel("number of components")
    ax.set_yscale("log")
    ax.tick_params(axis="x", labelsize=7, rotation=90 if len(sizes) > 12 else 0)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, **_save_kwargs(path))
    plt.close(fig)


def plot_component(comp: Component, path: Union[str, Path], max_members: int = 48):
    """Grid of member triangulations with their degree in the component."""
    members = comp.members[:max_members]
    degrees = comp.degrees()
    cols = min(8, len(members))
    rows = math.ceil(len(members) / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(1.6 * cols, 1.7 * rows), squeeze=False)
    for ax in axes.flat:
        ax.axis("off")
    for i, (ax, ct) in enumerate(zip(axes.flat, members)):
        draw_coloured_triangulation(ax, ct, labels=False)
        ax.set_title(f"#{i} deg {degrees[i]}", fontsize=7)
    stats = comp.stats()
    fig.suptitle(f"size {stats['size']}, leaves {stats['leaf_count']}, "
                 f"girth {stats['girth']}, {stats['shape_class']}", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, **_save_kwargs(path))
    plt.close(fig)


def plot_triangulations(cts: Sequence[ColouredTriangulation], path: Union[str, Path]):
    fig, axes = plt.subplots(1, len(cts), figsize=(2.4 * len(cts), 2.4), squeeze=False)
    for ax, ct in zip(axes.flat, cts):
        draw_coloured_triangulation(ax, ct)
    fig.tight_layout()
    fig.savefig(path, **_save_kwargs(path))
    plt.close(fig)


def _save_kwargs(path) -> dict:
    suffix = Path(path).suffix.lower()
    if suffix == ".png":
        return _SAVE_KW
    if suffix == ".svg":
        return {"metadata": {"Date": None}}
    return {}

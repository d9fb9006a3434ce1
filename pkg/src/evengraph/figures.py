"""Matplotlib renderings of vertex sets and majorization diagrams.

Everything here writes image files directly (Agg backend, no display).
Circular families are drawn on a clock layout with vertex 0 at the top and
indices increasing clockwise; majorization diagrams are drawn left to right
in layers with a small clock inset per node when representatives are known.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.lines import Line2D
from matplotlib.patches import Circle

from .evenness import rational_decimal
from .graphs import Graph
from .majorization import HasseDiagram

__all__ = [
    "circle_positions",
    "hypercube_positions",
    "draw_vertex_set",
    "save_set_panels",
    "save_hasse_figure",
]

MEMBER_FILL = "#d1495b"
EDGE_COLOR = "#6b6b6b"
RING_COLOR = "#bbbbbb"


def circle_positions(n: int, radius: float = 1.0,
                     center: tuple[float, float] = (0.0, 0.0)) -> list[tuple[float, float]]:
    """Vertex 0 at twelve o'clock, indices increasing clockwise."""
    cx, cy = center
    out = []
    for i in range(n):
        t = math.pi / 2 - 2 * math.pi * i / n
        out.append((cx + radius * math.cos(t), cy + radius * math.sin(t)))
    return out


def hypercube_positions(d: int) -> list[tuple[float, float]]:
    """Nested-squares projection of the d-cube for d <= 4."""
    if d > 4:
        raise ValueError("hypercube layout supports d <= 4")
    out = []
    for v in range(1 << d):
        b = [(v >> i) & 1 for i in range(4)]
        x = (b[0] - 0.5) * 2.4 + (b[2] - 0.5) * 1.0
        y = (b[1] - 0.5) * 2.4 + (b[3] - 0.5) * 1.0
        out.append((x, y))
    return out


def _positions_for(graph: Graph) -> list[tuple[float, float]]:
    if graph.family is not None and graph.family.kind == "hypercube":
        return hypercube_positions(graph.family.params[0])
    return circle_positions(graph.n)


def draw_vertex_set(ax, graph: Graph, members: Iterable[int],
                    positions: list[tuple[float, float]] | None = None,
                    label_vertices: bool = True, node_size: float = 0.09) -> None:
    """Draw the graph with the given vertices filled."""
    if positions is None:
        positions = _positions_for(graph)
    chosen = set(members)
    for u, v in graph.edges:
        (x0, y0), (x1, y1) = positions[u], positions[v]
        ax.add_line(Line2D([x0, x1], [y0, y1], color=EDGE_COLOR, lw=0.9, zorder=1))
    for v in range(graph.n):
        x, y = positions[v]
        ax.add_patch(Circle((x, y), node_size, zorder=2,
                            facecolor=MEMBER_FILL if v in chosen else "white",
                            edgecolor="black", lw=0.9))
        if label_vertices:
            r = math.hypot(x, y) or 1.0
            ax.text(x * (1 + 0.22 / r), y * (1 + 0.22 / r), str(v),
                    ha="center", va="center", fontsize=7, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.margins(0.15)


def save_set_panels(out_path, panels: Sequence[tuple[Graph, Iterable[int], str]],
                    ncols: int | None = None, panel_size: float = 2.8) -> str:
    """One subplot per (graph, members, title) triple, written to out_path."""
    count = len(panels)
    ncols = ncols or count
    nrows = -(-count // ncols)
    fig, axes = plt.subplots(nrows, ncols, squeeze=False,
                             figsize=(panel_size * ncols, panel_size * nrows))
    flat = [ax for row in axes for ax in row]
    for ax, (graph, members, title) in zip(flat, panels):
        draw_vertex_set(ax, graph, members)
        ax.set_title(title, fontsize=8)
    for ax in flat[count:]:
        ax.axis("off")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return str(out_path)


def _layer_assignment(diagram: HasseDiagram) -> dict[tuple, int]:
    preds: dict[tuple, list[tuple]] = {node.key: [] for node in diagram.nodes}
    for low, high in diagram.covers:
        preds[high].append(low)
    layer: dict[tuple, int] = {}

    def depth(key: tuple) -> int:
        if key not in layer:
            layer[key] = 1 + max((depth(p) for p in preds[key]), default=-1)
        return layer[key]

    for node in diagram.nodes:
        depth(node.key)
    return layer


def save_hasse_figure(out_path, diagram: HasseDiagram,
                      reps: dict[tuple, Sequence[int]] | None = None,
                      n: int | None = None, title: str | None = None) -> str:
    """Layered left-to-right drawing of a majorization diagram.

    Each node shows its tuple, its reciprocal-sum value, and any labels; when
    reps maps the node's tuple to a vertex set (over an n-circle), a small
    clock diagram of that representative is drawn at the node.
    """
    layers = _layer_assignment(diagram)
    by_layer: dict[int, list] = {}
    for node in diagram.nodes:
        by_layer.setdefault(layers[node.key], []).append(node)
    for nodes in by_layer.values():
        nodes.sort(key=lambda nd: nd.key)

    xy: dict[tuple, tuple[float, float]] = {}
    for depth, nodes in by_layer.items():
        for i, node in enumerate(nodes):
            xy[node.key] = (2.1 * depth, -(i - (len(nodes) - 1) / 2) * 2.4)

    width = max(6.0, 2.2 * (max(by_layer) + 1))
    height = max(3.2, 2.5 * max(len(v) for v in by_layer.values()))
    fig, ax = plt.subplots(figsize=(width, height))

    for low, high in diagram.covers:
        (x0, y0), (x1, y1) = xy[low], xy[high]
        ax.add_line(Line2D([x0, x1], [y0, y1], color=EDGE_COLOR, lw=1.0, zorder=1))

    for node in diagram.nodes:
        x, y = xy[node.key]
        rep = reps.get(node.key) if reps else None
        if rep is not None and n:
            ax.add_patch(Circle((x, y), 0.52, facecolor="white",
                                edgecolor=RING_COLOR, lw=1.0, zorder=2))
            for v, (px, py) in enumerate(circle_positions(n, 0.42, (x, y))):
                ax.add_patch(Circle((px, py), 0.055, zorder=3,
                                    facecolor=MEMBER_FILL if v in set(rep) else "white",
                                    edgecolor="black", lw=0.6))
        else:
            ax.add_patch(Circle((x, y), 0.1, facecolor="black", zorder=3))
        lines = [node.key_str()] if len(node.key) <= 10 else []
        if node.energy is not None:
            lines.append(f"E={rational_decimal(node.energy, 4)}")
        lines.extend(node.labels)
        ax.text(x, y - 0.72, "\n".join(lines), ha="center", va="top",
                fontsize=6.5, zorder=4)

    if title:
        ax.set_title(title, fontsize=10)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.margins(0.12)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return str(out_path)

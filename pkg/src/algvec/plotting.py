"""Figure rendering for benchmark reports.

Builds matplotlib figures straight from report rows and writes them next
to the delimited output.  Uses Figure objects directly (no pyplot) so the
library never mutates global matplotlib state.
"""

import os
from collections import defaultdict

from matplotlib.backends.backend_agg import FigureCanvasAgg  # noqa: F401  (registers Agg)
from matplotlib.figure import Figure

__all__ = ["render_figures"]

_FIGSIZE = (11, 4.5)


def _series(rows, y_attr):
    """(repr, support_a, op) -> sorted [(dim, y)] series."""
    grouped = defaultdict(list)
    for row in rows:
        grouped[row.repr, row.support_a, row.op].append(
            (row.dim, getattr(row, y_attr))
        )
    return {key: sorted(points) for key, points in grouped.items()}


def _draw(rows, y_attr, ylabel, title):
    fig = Figure(figsize=_FIGSIZE)
    axes = fig.subplots(1, 2)
    series = _series(rows, y_attr)
    for ax, op in zip(axes, ("add", "scale")):
        for (repr_name, support, series_op), points in sorted(series.items()):
            if series_op != op:
                continue
            dims = [p[0] for p in points]
            ys = [p[1] for p in points]
            style = "-o" if repr_name == "algebraic" else "--s"
            ax.plot(dims, ys, style, label=f"{repr_name}, support {support}")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("dimension")
        ax.set_ylabel(ylabel)
        ax.set_title(f"{op}")
        ax.grid(True, which="both", alpha=0.3)
        ax.legend(fontsize=8)
    fig.suptitle(title)
    fig.tight_layout()
    return fig


def render_figures(rows, directory, stem="bench"):
    """Write the report figures as PNGs; returns the written paths."""
    if not rows:
        return []
    os.makedirs(directory, exist_ok=True)
    figures = [
        ("times", "median_ns", "median wall time (ns)", "sparse vs dense wall time"),
        (
            "entries",
            "entries_touched",
            "entries touched",
            "entries scanned per operation",
        ),
    ]
    paths = []
    for suffix, y_attr, ylabel, title in figures:
        fig = _draw(rows, y_attr, ylabel, title)
        path = os.path.join(directory, f"{stem}_{suffix}.png")
        fig.savefig(path, dpi=120)
        paths.append(path)
    return paths

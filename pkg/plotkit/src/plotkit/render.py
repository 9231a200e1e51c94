"""Turn schema-versioned CSV files into heatmap or line-plot PNGs.

Strictly presentation: every number is read from the CSV, nothing is
computed here beyond reshaping a complete grid.
"""

import os
import tempfile
from dataclasses import dataclass

import numpy as np

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

SCHEMA_VERSION = 1


class SchemaMismatch(Exception):
    """The CSV does not carry the expected schema line."""


class IncompleteGrid(Exception):
    """Heatmap input does not cover a full cartesian grid."""


@dataclass(frozen=True)
class PlotSpec:
    """One rendering job: a CSV in, a PNG out."""

    input_path: str
    kind: str  # "heatmap" or "line"
    output_path: str
    x_label: str = ""
    y_label: str = ""
    title: str = ""

    def __post_init__(self):
        if self.kind not in ("heatmap", "line"):
            raise ValueError("kind must be 'heatmap' or 'line'")


def read_table(path):
    """Parse a schema-versioned CSV into (columns, float array)."""
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().strip()
        if first != "# schema=%d" % SCHEMA_VERSION:
            raise SchemaMismatch("unsupported schema line: %r" % first)
        columns = fh.readline().strip().split(",")
        rows = [[float(tok) for tok in line.split(",")] for line in fh if line.strip()]
    if not rows or any(len(r) != len(columns) for r in rows):
        raise SchemaMismatch("row width does not match header")
    return columns, np.array(rows)


def _grid_axes(columns, data):
    """Pick the two varying coordinate columns; the last column is the value."""
    varying = [j for j in range(len(columns) - 1) if np.unique(data[:, j]).size > 1]
    if len(varying) < 2:
        raise IncompleteGrid("need two varying coordinate columns for a heatmap")
    if len(varying) > 2:
        raise IncompleteGrid("more than two coordinates vary; not a single grid")
    return varying[0], varying[1]


def _to_grid(columns, data):
    """Reshape (coord1, coord2, value) rows into axes + a value matrix."""
    ja, jb = _grid_axes(columns, data)
    a = np.unique(data[:, ja])
    b = np.unique(data[:, jb])
    if data.shape[0] != a.size * b.size:
        raise IncompleteGrid(
            "expected %d x %d rows, found %d" % (a.size, b.size, data.shape[0])
        )
    values = np.full((a.size, b.size), np.nan)
    ia = np.searchsorted(a, data[:, ja])
    ib = np.searchsorted(b, data[:, jb])
    values[ia, ib] = data[:, -1]
    if np.isnan(values).any():
        raise IncompleteGrid("grid has missing (coord1, coord2) pairs")
    return (columns[ja], a), (columns[jb], b), values


def _atomic_save(fig, path):
    """Save via a temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".png")
    os.close(fd)
    try:
        # strip timestamp/software chunks so identical input gives identical bytes
        fig.savefig(tmp, format="png", dpi=100,
                    metadata={"Software": None, "CreationDate": None})
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render_heatmap(spec, columns, data, ax):
    (name_a, a), (name_b, b), values = _to_grid(columns, data)
    mesh = ax.pcolormesh(b, a, values, shading="nearest", cmap="viridis")
    ax.set_xlabel(spec.x_label or name_b)
    ax.set_ylabel(spec.y_label or name_a)
    ax.figure.colorbar(mesh, ax=ax, label=columns[-1])


def _render_line(spec, columns, data, ax):
    x = data[:, 0]
    for j in range(1, len(columns)):
        ax.plot(x, data[:, j], label=columns[j])
    ax.set_xlabel(spec.x_label or columns[0])
    ax.set_ylabel(spec.y_label or (columns[1] if len(columns) == 2 else ""))
    if len(columns) > 2:
        ax.legend()


def render(spec):
    """Render one PlotSpec; returns the output path."""
    columns, data = read_table(spec.input_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    try:
        if spec.kind == "heatmap":
            _render_heatmap(spec, columns, data, ax)
        else:
            _render_line(spec, columns, data, ax)
        if spec.title:
            ax.set_title(spec.title)
        fig.tight_layout()
        _atomic_save(fig, spec.output_path)
    finally:
        plt.close(fig)
    return spec.output_path

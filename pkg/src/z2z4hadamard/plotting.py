"""Figures for the ``report`` subcommand (matplotlib, file output only)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .codes import BinaryCode  # noqa: E402
from .construct import GeneratorMatrices  # noqa: E402
from .equiv import ClassificationRow  # noqa: E402
from .invariants import distance_spectrum  # noqa: E402


def _save(fig, path: str | Path) -> Path:
    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_matrices(gm: GeneratorMatrices, path: str | Path) -> Path:
    """G, K and S drawn as 0/1 images in the mixed coordinate order."""
    perm = gm.layout.mixed_positions
    mats = [("G", gm.G), ("K", gm.K), ("S", gm.S)]
    fig, axes = plt.subplots(3, 1, figsize=(8, 6), sharex=True)
    for ax, (name, m) in zip(axes, mats):
        ax.imshow(m.bits()[:, perm], cmap="Greys", aspect="auto", interpolation="nearest")
        ax.set_yticks(range(len(m.labels)), m.labels, fontsize=7)
        ax.set_ylabel(name)
        if gm.layout.alpha:
            ax.axvline(gm.layout.alpha - 0.5, color="tab:red", lw=1)
    axes[-1].set_xlabel("coordinate (binary part, then Gray pairs)")
    return _save(fig, path)


def plot_distance_spectrum(code: BinaryCode, path: str | Path, title: str = "") -> Path:
    spec = distance_spectrum(code)
    ds = sorted(spec)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar([str(d) for d in ds], [spec[d] for d in ds], color="tab:blue")
    ax.set_xlabel("Hamming distance")
    ax.set_ylabel("unordered pairs")
    ax.set_title(title or f"distance spectrum, n={code.n}")
    return _save(fig, path)


def plot_classification(rows: list[ClassificationRow], path: str | Path) -> Path:
    """Rank and kernel dimension of each code, coloured by class."""
    labels = [f"{r.family}{r.params}" for r in rows]
    x = np.arange(len(rows))
    fig, ax = plt.subplots(figsize=(max(4, 0.9 * len(rows)), 3.5))
    ax.bar(x - 0.2, [r.signature.rank for r in rows], 0.4, label="rank")
    ax.bar(x + 0.2, [r.signature.kernel_dim for r in rows], 0.4, label="kernel dim")
    for xi, r in zip(x, rows):
        ax.text(xi, r.signature.rank + 0.2, f"#{r.class_id}", ha="center", fontsize=8)
    ax.set_xticks(x, labels, rotation=30, fontsize=8)
    ax.set_title(f"t = {rows[0].t}: {len({r.class_id for r in rows})} classes")
    ax.legend(fontsize=8)
    return _save(fig, path)


def plot_order_factors(factors: dict[str, int], path: str | Path, title: str = "") -> Path:
    """log2 of each factor of a group order."""
    names = list(factors)
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(names, [np.log2(float(factors[k])) for k in names], color="tab:green")
    ax.set_ylabel("log2 factor")
    ax.set_title(title)
    return _save(fig, path)

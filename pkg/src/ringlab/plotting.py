"""Matplotlib figures written next to CLI reports (``--figures DIR``)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .ring import FiniteRing  # noqa: E402

STATUS_COLORS = {"pass": "tab:green", "fail": "tab:red", "vacuous": "tab:gray"}


def _slug(text: str) -> str:
    keep = "".join(c if c.isalnum() else "_" for c in text)
    return "_".join(p for p in keep.split("_") if p) or "ring"


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=100, bbox_inches="tight")
    plt.close(fig)
    return path


def cayley_tables(ring: FiniteRing, directory: str | Path, name: str | None = None) -> Path:
    """Side-by-side heatmaps of the addition and multiplication tables."""
    fig, axes = plt.subplots(1, 2, figsize=(10, 4.8))
    for ax, table, title in zip(axes, (ring.add_table, ring.mul_table), ("x + y", "x * y")):
        im = ax.imshow(table, cmap="viridis", interpolation="nearest")
        ax.set_title(f"{ring.label}: {title}")
        ax.set_xlabel("y")
        ax.set_ylabel("x")
        fig.colorbar(im, ax=ax, fraction=0.046)
    return _save(fig, Path(directory) / f"{_slug(name or ring.label)}_cayley.png")


def subset_sizes(sizes: dict, label: str, directory: str | Path) -> Path:
    fig, ax = plt.subplots(figsize=(6, 3.5))
    names = list(sizes)
    ax.bar(names, [sizes[k] for k in names], color="tab:blue")
    ax.set_title(f"{label}: subset sizes")
    ax.set_ylabel("elements")
    return _save(fig, Path(directory) / f"{_slug(label)}_sizes.png")


def case_results(results, directory: str | Path) -> Path:
    """Horizontal bar per case: runtime, coloured by status."""
    fig, ax = plt.subplots(figsize=(8, max(3, 0.22 * len(results))))
    y = np.arange(len(results))
    ax.barh(y, [r.duration for r in results], color=[STATUS_COLORS[r.status] for r in results])
    ax.set_yticks(y, [f"{r.id} ({r.scope_size})" for r in results], fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    ax.set_title("theorem cases (scope size); green pass, red fail, grey vacuous")
    return _save(fig, Path(directory) / "verify_cases.png")


def corpus_sizes(tally, directory: str | Path) -> Path:
    """|Delta| against |J| per corpus ring, log scale."""
    fig, ax = plt.subplots(figsize=(9, 4))
    x = np.arange(len(tally))
    ax.bar(x - 0.2, [t["jacobson"] for t in tally], 0.4, label="|J(R)|")
    ax.bar(x + 0.2, [t["delta"] for t in tally], 0.4, label="|Delta(R)|")
    ax.set_xticks(x, [t["ring"] for t in tally], rotation=90, fontsize=7)
    ax.set_yscale("log", base=2)
    ax.legend()
    ax.set_title("Delta(R) and J(R) across the corpus")
    return _save(fig, Path(directory) / "verify_delta_vs_j.png")


def search_results(rows, prop: str, directory: str | Path) -> Path:
    fig, ax = plt.subplots(figsize=(8, 3.5))
    colors = ["tab:green" if r["value"] is True else "tab:red" for r in rows]
    ax.bar(np.arange(len(rows)), [r["order"] for r in rows], color=colors)
    ax.set_xticks(np.arange(len(rows)), [r["label"] for r in rows], rotation=90, fontsize=7)
    ax.set_yscale("log", base=2)
    ax.set_ylabel("order")
    ax.set_title(f"{prop}: green holds, red fails")
    return _save(fig, Path(directory) / f"search_{_slug(prop)}.png")

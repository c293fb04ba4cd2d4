"""Report artifacts: verdict grids as PNG, CSV summaries and JSON documents."""
from __future__ import annotations

import csv
import io
import json

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .core.engine import COUNTEREXAMPLE, EXHAUSTED, PASS, UNSUPPORTED  # noqa: E402

STATUS_ORDER = (PASS, COUNTEREXAMPLE, EXHAUSTED, UNSUPPORTED)
STATUS_COLOURS = {PASS: "#4c9a5f", COUNTEREXAMPLE: "#c8553d", EXHAUSTED: "#e8b04b", UNSUPPORTED: "#d9d9d9"}
STATUS_MARKS = {PASS: "✓", COUNTEREXAMPLE: "✗", EXHAUSTED: "?", UNSUPPORTED: "·"}


def verdict_table(reports):
    """Rows ``(model, {predicate: status})`` and the union of predicate names in first-seen order."""
    rows, columns = [], []
    for rep in reports:
        verdicts = rep.verdicts()
        for name in verdicts:
            if name not in columns:
                columns.append(name)
        rows.append((rep.model, verdicts))
    return rows, columns


def verdict_figure(reports, path, title=None):
    """Write a PNG grid with one row per model and one column per predicate."""
    rows, columns = verdict_table(reports)
    codes = [[STATUS_ORDER.index(v.get(c, UNSUPPORTED)) for c in columns] for _, v in rows]
    width = max(4.0, 0.42 * len(columns) + 2.5)
    height = max(1.6, 0.45 * len(rows) + 1.8)
    fig, ax = plt.subplots(figsize=(width, height))
    cmap = ListedColormap([STATUS_COLOURS[s] for s in STATUS_ORDER])
    ax.imshow(codes, cmap=cmap, vmin=0, vmax=len(STATUS_ORDER) - 1, aspect="auto")
    ax.set_xticks(range(len(columns)))
    ax.set_xticklabels(columns, rotation=70, ha="right", fontsize=7)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels([m for m, _ in rows], fontsize=8)
    for i, row in enumerate(codes):
        for j, code in enumerate(row):
            ax.text(j, i, STATUS_MARKS[STATUS_ORDER[code]], ha="center", va="center", fontsize=8, color="black")
    handles = [plt.Rectangle((0, 0), 1, 1, color=STATUS_COLOURS[s]) for s in STATUS_ORDER]
    ax.legend(handles, STATUS_ORDER, loc="upper center", bbox_to_anchor=(0.5, -0.45 if len(rows) < 3 else -0.25),
              ncol=4, fontsize=7, frameon=False)
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def summary_csv(reports):
    """CSV text: one line per (model, predicate) with the status and the failing law."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["model", "predicate", "status", "failing_law"])
    for rep in reports:
        for name, pr in rep.predicates.items():
            w.writerow([rep.model, name, pr.status, pr.failing_law or ""])
    return buf.getvalue()


def dumps(doc):
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def write_report(reports, models, out_dir, stem="report"):
    """Write ``<stem>.json``, ``<stem>.csv`` and ``<stem>.png`` into ``out_dir``."""
    out_dir.mkdir(parents=True, exist_ok=True)
    doc = {"models": [rep.to_json(C) for rep, C in zip(reports, models)]}
    paths = {"json": out_dir / f"{stem}.json", "csv": out_dir / f"{stem}.csv", "png": out_dir / f"{stem}.png"}
    paths["json"].write_text(dumps(doc), encoding="utf-8")
    paths["csv"].write_text(summary_csv(reports), encoding="utf-8")
    verdict_figure(reports, paths["png"])
    return paths

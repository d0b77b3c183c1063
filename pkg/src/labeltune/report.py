"""Evaluation report rendering: JSON document, TSV table, and figures.

The JSON document is the machine-readable record; the TSV holds one
summary row per evaluated model in table-cell style; figures are PNG
files rendered with the Agg backend so runs are reproducible byte for
byte on a given matplotlib build.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .evaluation import EvalReport, SignificanceVerdict, format_mean_std


@dataclass
class ModelResult:
    """Aggregated evaluation of one model spec."""

    name: str
    n_per_label: int
    run_scores: list[float]          # macro-F1 per run (single entry for zero-shot)
    mean: float
    std: float                       # across runs, or bootstrap std for one run
    std_source: str                  # "runs" or "bootstrap"
    last_report: EvalReport
    label_names: list[str] = field(default_factory=list)

    @property
    def formatted(self) -> str:
        return format_mean_std(100.0 * self.mean, 100.0 * self.std)


def _verdict_dict(v: SignificanceVerdict | None):
    if v is None:
        return None
    return {
        "t_statistic": v.t_statistic,
        "degrees_of_freedom": v.degrees_of_freedom,
        "p_value": v.p_value,
        "significant": v.significant,
    }


def report_document(results: list[ModelResult], verdict: SignificanceVerdict | None) -> dict:
    doc = {
        "models": [
            {
                "name": r.name,
                "n_per_label": r.n_per_label,
                "runs": len(r.run_scores),
                "run_scores": r.run_scores,
                "macro_f1_mean": r.mean,
                "macro_f1_std": r.std,
                "std_source": r.std_source,
                "formatted": r.formatted,
                "per_class": [
                    {
                        "label": r.label_names[k] if r.label_names else str(k),
                        "precision": c.precision,
                        "recall": c.recall,
                        "f1": c.f1,
                        "support": c.support,
                    }
                    for k, c in enumerate(r.last_report.per_class)
                ],
            }
            for r in results
        ],
        "comparison": _verdict_dict(verdict),
    }
    return doc


def write_report_json(path: str, document: dict) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(document, f, indent=2, sort_keys=True)
        f.write("\n")


def write_report_tsv(path: str, results: list[ModelResult]) -> None:
    """Delimited summary: one row per model."""
    with open(path, "w", encoding="utf-8") as f:
        f.write("model\tn_per_label\truns\tmacro_f1_mean\tmacro_f1_std\tcell\n")
        for r in results:
            f.write(
                f"{r.name}\t{r.n_per_label}\t{len(r.run_scores)}"
                f"\t{r.mean:.6f}\t{r.std:.6f}\t{r.formatted}\n"
            )


def render_figures(directory: str, results: list[ModelResult]) -> list[str]:
    """Render summary figures next to the delimited output; returns the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []

    fig, ax = plt.subplots(figsize=(6, 4))
    names = [r.name for r in results]
    means = [100.0 * r.mean for r in results]
    stds = [100.0 * r.std for r in results]
    ax.bar(range(len(results)), means, yerr=stds, capsize=4, color="#4878a8")
    ax.set_xticks(range(len(results)))
    ax.set_xticklabels(names, rotation=15, ha="right")
    ax.set_ylabel("macro F1 (%)")
    ax.set_ylim(0, 100)
    ax.set_title("Macro F1 by model")
    fig.tight_layout()
    path = os.path.join(directory, "macro_f1.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(7, 4))
    num_classes = len(results[0].last_report.per_class) if results else 0
    width = 0.8 / max(len(results), 1)
    for i, r in enumerate(results):
        f1s = [100.0 * c.f1 for c in r.last_report.per_class]
        offsets = np.arange(num_classes) + i * width
        ax.bar(offsets, f1s, width=width, label=r.name)
    labels = results[0].label_names if results and results[0].label_names else [
        str(k) for k in range(num_classes)
    ]
    ax.set_xticks(np.arange(num_classes) + 0.4 - width / 2)
    ax.set_xticklabels(labels, rotation=30, ha="right")
    ax.set_ylabel("per-class F1 (%)")
    ax.set_ylim(0, 100)
    ax.set_title("Per-class F1 (final run)")
    if results:
        ax.legend()
    fig.tight_layout()
    path = os.path.join(directory, "per_class_f1.png")
    fig.savefig(path, dpi=120)
    plt.close(fig)
    paths.append(path)

    return paths

"""Synthetic task generators for acceptance and property tests.

Cluster centers are the first K standard basis vectors, so noiseless
tasks are separable by construction rather than with high probability.
Gaussian noise comes from Box-Muller over the seeded generator's
uniforms, making the exact sample sequence reproducible from the seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class ClusterSpec:
    num_labels: int        # K
    dim: int               # d, must be >= K for orthogonal centers
    points_per_cluster: int
    noise_sigma: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.num_labels < 1 or self.points_per_cluster < 1:
            raise ValueError("num_labels and points_per_cluster must be >= 1")
        if self.num_labels > self.dim:
            raise ValueError(
                f"orthogonal centers need K <= d, got K={self.num_labels}, d={self.dim}"
            )
        if self.noise_sigma < 0.0:
            raise ValueError(f"noise_sigma must be >= 0, got {self.noise_sigma}")


@dataclass
class SyntheticTask:
    X: np.ndarray                 # (N, d) input embeddings
    z: np.ndarray                 # (N,) cluster / label ids
    label_embeddings: np.ndarray  # (K, d) true cluster centers


def box_muller(rng: np.random.Generator, count: int) -> np.ndarray:
    """Standard normals via Box-Muller over the generator's uniforms."""
    pairs = (count + 1) // 2
    u1 = 1.0 - rng.random(pairs)  # in (0, 1], keeps the log finite
    u2 = rng.random(pairs)
    r = np.sqrt(-2.0 * np.log(u1))
    theta = 2.0 * np.pi * u2
    z = np.concatenate([r * np.cos(theta), r * np.sin(theta)])
    return z[:count]


def make_separable_task(spec: ClusterSpec) -> SyntheticTask:
    """Points around K orthogonal unit centers; labels are the cluster ids."""
    centers = np.eye(spec.num_labels, spec.dim)
    z = np.repeat(np.arange(spec.num_labels), spec.points_per_cluster)
    X = centers[z]
    if spec.noise_sigma > 0.0:
        rng = np.random.default_rng(spec.seed)
        noise = box_muller(rng, X.size).reshape(X.shape)
        X = X + spec.noise_sigma * noise
    return SyntheticTask(X=X, z=z, label_embeddings=centers)


def make_unbalanced_variant(
    task: SyntheticTask, removal_fractions: Sequence[float], seed: int = 0
) -> SyntheticTask:
    """Deterministically drop a fraction of each label's examples.

    Survivors keep their original relative order, so all-zero fractions
    return the task unchanged.
    """
    fractions = list(removal_fractions)
    num_labels = task.label_embeddings.shape[0]
    if len(fractions) != num_labels:
        raise ValueError(f"need {num_labels} fractions, got {len(fractions)}")
    for k, frac in enumerate(fractions):
        if not 0.0 <= frac < 1.0:
            raise ValueError(f"fraction for label {k} must be in [0, 1), got {frac}")

    rng = np.random.default_rng(seed)
    keep: list[np.ndarray] = []
    for k, frac in enumerate(fractions):
        idx = np.flatnonzero(task.z == k)
        n_keep = idx.size - int(round(frac * idx.size))
        keep.append(np.sort(rng.permutation(idx)[:n_keep]))
    order = np.sort(np.concatenate(keep))
    return SyntheticTask(
        X=task.X[order], z=task.z[order], label_embeddings=task.label_embeddings
    )


def write_task_files(task: SyntheticTask, dataset_path: str, embeddings_path: str):
    """Emit a dataset TSV and aligned embedding file consumable by the CLI.

    Returns the label set used (generic ``label_<k>`` names).
    """
    from .fileio import write_dataset, write_embeddings
    from .verbalizer import LabelSet

    labels = LabelSet.from_names(
        [f"label_{k}" for k in range(task.label_embeddings.shape[0])]
    )
    texts = [f"example {i}" for i in range(task.X.shape[0])]
    write_dataset(dataset_path, texts, task.z, labels)
    write_embeddings(embeddings_path, task.X, texts)
    return labels

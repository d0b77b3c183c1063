"""Unsupervised label refinement: anchored k-means over unlabeled embeddings.

Each unlabeled embedding is assigned to its highest-dot-product label
centroid; centroids then move to an interpolation between their initial
position and the mean of their assignees. The anchor weight keeps every
centroid tethered to its original label so cluster-label identity cannot
drift, which plain k-means does not guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_matrix
from .tuning import TunedLabels


@dataclass(frozen=True)
class RefinementConfig:
    max_iters: int = 50
    anchor_weight: float = 0.5  # 1.0 keeps Y0, 0.0 is plain k-means means
    cap: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if not 0.0 <= self.anchor_weight <= 1.0:
            raise ValueError(f"anchor_weight must be in [0, 1], got {self.anchor_weight}")
        if self.cap < 1:
            raise ValueError(f"cap must be >= 1, got {self.cap}")


def refine_labels(Y0, unlabeled, config: RefinementConfig) -> TunedLabels:
    """Refine label embeddings toward the cluster structure of unlabeled data.

    Ties in the assignment go to the lowest label index; centroids with
    no assignees keep their previous value. Stops early once assignments
    stop changing. Deterministic given (Y0, unlabeled, config).
    """
    Y0 = as_matrix(Y0, "Y0")
    X = as_matrix(unlabeled, "unlabeled")[: config.cap]
    num_labels = Y0.shape[0]
    if X.shape[0] < num_labels:
        raise ValueError(
            f"need at least {num_labels} unlabeled examples, got {X.shape[0]}"
        )
    if X.shape[1] != Y0.shape[1]:
        raise ValueError(f"dim mismatch: unlabeled d={X.shape[1]}, Y0 d={Y0.shape[1]}")

    alpha = config.anchor_weight
    centroids = Y0.copy()
    previous = None
    iterations = 0
    for _ in range(config.max_iters):
        assigned = np.argmax(X @ centroids.T, axis=1)
        if previous is not None and np.array_equal(assigned, previous):
            break
        for k in range(num_labels):
            members = assigned == k
            if members.any():
                # alpha == 1 keeps Y0 bit-exactly (no 0 * mean roundoff)
                if alpha == 1.0:
                    centroids[k] = Y0[k]
                else:
                    centroids[k] = alpha * Y0[k] + (1.0 - alpha) * X[members].mean(axis=0)
        previous = assigned
        iterations += 1

    return TunedLabels(
        Y=centroids,
        Y0=Y0,
        config_used=None,
        provenance={
            "method": "label-refinement",
            "anchor_weight": alpha,
            "iterations": iterations,
            "pool_size": int(X.shape[0]),
            "seed": config.seed,
        },
    )

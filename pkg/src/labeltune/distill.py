"""Knowledge distillation of label embeddings from a teacher classifier.

A teacher produces label distributions for a pool of unlabeled input
embeddings (the silver set); fresh label embeddings are then trained
against those soft targets with the same descent loop, regularizer and
dropout used for supervised label tuning. With one-hot teacher rows the
procedure is bit-identical to supervised tuning.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import as_matrix, check_probability_rows, softmax_rows
from .tuning import (
    CrossValidationResult,
    TunedLabels,
    TuningConfig,
    _check_shapes,
    _descend,
    _loss_and_gradient,
    _regularizer,
)
from .zeroshot import predict_indices

logger = logging.getLogger(__name__)

SILVER_SET_CAP = 10_000

Teacher = Callable[[np.ndarray], np.ndarray]
"""Maps an M x d embedding matrix to an M x K matrix of label distributions."""


def matrix_teacher(Y) -> Teacher:
    """Teacher induced by a label matrix: softmax of dot-product scores."""
    Ym = as_matrix(Y, "Y")
    return lambda X: softmax_rows(as_matrix(X, "X") @ Ym.T)


@dataclass(frozen=True)
class SilverSet:
    """Unlabeled input embeddings paired with teacher label distributions."""

    X: np.ndarray              # (M, d)
    teacher_probs: np.ndarray  # (M, K), rows sum to 1

    def __post_init__(self):
        X = as_matrix(self.X, "X")
        P = check_probability_rows(self.teacher_probs, tol=1e-6, name="teacher_probs")
        if P.shape[0] != X.shape[0]:
            raise ValueError(f"row counts differ: X has {X.shape[0]}, probs {P.shape[0]}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "teacher_probs", P)

    @property
    def m(self) -> int:
        return self.X.shape[0]


def build_silver_set(
    teacher: Teacher,
    unlabeled,
    cap: int = SILVER_SET_CAP,
    sample_seed: int | None = None,
) -> SilverSet:
    """Run the teacher over at most *cap* unlabeled embeddings.

    Truncation keeps the first *cap* rows in input order; pass
    ``sample_seed`` to draw a seeded sample without replacement instead.
    """
    X = as_matrix(unlabeled, "unlabeled")
    if X.shape[0] == 0:
        raise ValueError("unlabeled pool is empty")
    if X.shape[0] > cap:
        if sample_seed is None:
            X = X[:cap]
        else:
            rng = np.random.default_rng(sample_seed)
            keep = np.sort(rng.choice(X.shape[0], size=cap, replace=False))
            X = X[keep]
    return SilverSet(X=X, teacher_probs=teacher(X))


def distill_objective(
    Y,
    silver: SilverSet,
    Y0,
    reg_coefficient: float,
    mask=None,
    squared_reg: bool = True,
) -> float:
    """Soft-target cross-entropy against the teacher distributions plus the Y0 penalty."""
    Y, X, Y0, mask = _check_shapes(Y, silver.X, Y0, mask=mask)
    T = silver.teacher_probs
    if T.shape[1] != Y.shape[0]:
        raise ValueError(f"teacher has {T.shape[1]} labels, Y has {Y.shape[0]} rows")
    Yt = Y if mask is None else Y * mask
    S = X @ Yt.T
    m = S.max(axis=1)
    log_norm = np.log(np.exp(S - m[:, None]).sum(axis=1)) + m
    loss = -float(((T * S).sum(axis=1) - log_norm).mean())
    if reg_coefficient == 0.0:
        return loss
    reg_value, _ = _regularizer(Y, Y0, squared_reg)
    return loss + reg_coefficient * reg_value


def distill_gradient(
    Y,
    silver: SilverSet,
    Y0,
    reg_coefficient: float,
    mask=None,
    squared_reg: bool = True,
) -> np.ndarray:
    """Analytic gradient of :func:`distill_objective` with respect to Y."""
    Y, X, Y0, mask = _check_shapes(Y, silver.X, Y0, mask=mask)
    T = silver.teacher_probs
    if T.shape[1] != Y.shape[0]:
        raise ValueError(f"teacher has {T.shape[1]} labels, Y has {Y.shape[0]} rows")
    _, G = _loss_and_gradient(Y, X, T, Y0, reg_coefficient, mask, squared_reg)
    return G


def distill_labels(
    silver: SilverSet, Y0, config: TuningConfig, squared_reg: bool = True
) -> TunedLabels:
    """Train fresh label embeddings from Y0 against the teacher distributions."""
    Y0 = as_matrix(Y0, "Y0")
    if silver.teacher_probs.shape[1] != Y0.shape[0]:
        raise ValueError(
            f"teacher has {silver.teacher_probs.shape[1]} labels, Y0 has {Y0.shape[0]} rows"
        )
    _check_shapes(Y0, silver.X, Y0)
    return _descend(
        silver.X, silver.teacher_probs, Y0, config, squared_reg,
        provenance={"method": "distillation", "silver_examples": silver.m},
    )


def cross_validate_distill(
    silver: SilverSet,
    Y0,
    grid: Sequence[TuningConfig],
    folds: int = 4,
    seed: int = 0,
    squared_reg: bool = True,
) -> CrossValidationResult:
    """Pick a config by held-out argmax agreement with the teacher.

    Distillation has no gold labels, so the only label-free selection
    criterion is how often the student reproduces the teacher's argmax
    on silver examples it was not trained on.
    """
    if not grid:
        raise ValueError("hyperparameter grid is empty")
    Y0 = as_matrix(Y0, "Y0")
    rng = np.random.default_rng(seed)
    fold_of = rng.permutation(silver.m) % folds
    teacher_argmax = np.argmax(silver.teacher_probs, axis=1)

    table: list[tuple[TuningConfig, float]] = []
    best_idx, best_mean = -1, -np.inf
    for i, config in enumerate(grid):
        fold_scores = []
        for f in range(folds):
            val = fold_of == f
            train = ~val
            if not val.any() or not train.any():
                continue
            student = distill_labels(
                SilverSet(silver.X[train], silver.teacher_probs[train]),
                Y0, config, squared_reg=squared_reg,
            )
            pred = predict_indices(silver.X[val], student.Y)
            agreement = float(np.mean(pred == teacher_argmax[val]))
            fold_scores.append(agreement)
            logger.info(
                "distill cv config=%d/%d lr=%g epochs=%d reg=%g dropout=%g fold=%d agree=%.4f",
                i + 1, len(grid), config.learning_rate, config.epochs,
                config.reg_coefficient, config.dropout_rate, f, agreement,
            )
        mean = float(np.mean(fold_scores)) if fold_scores else 0.0
        table.append((config, mean))
        if mean > best_mean:
            best_idx, best_mean = i, mean

    best = grid[best_idx]
    model = distill_labels(silver, Y0, best, squared_reg=squared_reg)
    return CrossValidationResult(best=best, table=table, flagged_labels=[], model=model)

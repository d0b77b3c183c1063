"""Label tuning: gradient descent on the label-embedding matrix only.

The encoder stays frozen; the K x d label matrix Y is the entire set of
trainable parameters. The objective is mean cross-entropy of the
dot-product scores against the reference labels, plus a penalty on the
Frobenius distance from the initial label embeddings Y0. A shared
dropout mask (one d-vector per step, applied to every row of Y) is the
only stochastic element and is fully determined by the config seed.

Also hosts the in-batch-negatives softmax loss and the batch builder
that places exactly one example of each label in every batch. Those are
loss primitives for encoder training pipelines, which themselves live
outside this package.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import as_matrix
from .evaluation import macro_f1
from .zeroshot import predict_indices

logger = logging.getLogger(__name__)

LEARNING_RATES = (0.01, 0.1)
EPOCH_COUNTS = (1000, 2000)
REG_COEFFICIENTS = (0.01, 0.1)
DROPOUT_RATES = (0.01, 0.1)


class DivergenceError(RuntimeError):
    """Raised when the tuning objective becomes non-finite."""

    def __init__(self, step: int, learning_rate: float, config_desc: str = ""):
        detail = f" with config {config_desc}" if config_desc else ""
        super().__init__(
            f"objective became non-finite at step {step}"
            f" (learning_rate={learning_rate}){detail}"
        )
        self.step = step
        self.learning_rate = learning_rate


@dataclass(frozen=True)
class TuningConfig:
    learning_rate: float
    epochs: int
    reg_coefficient: float
    dropout_rate: float
    seed: int = 0

    def __post_init__(self):
        if self.learning_rate < 0.0:
            raise ValueError(f"learning_rate must be >= 0, got {self.learning_rate}")
        if self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.reg_coefficient < 0.0:
            raise ValueError(f"reg_coefficient must be >= 0, got {self.reg_coefficient}")
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ValueError(f"dropout_rate must be in [0, 1), got {self.dropout_rate}")


def default_grid(seed: int = 0) -> list[TuningConfig]:
    """The standard 2x2x2x2 hyperparameter grid (16 configs)."""
    return [
        TuningConfig(lr, ep, reg, dr, seed)
        for lr, ep, reg, dr in itertools.product(
            LEARNING_RATES, EPOCH_COUNTS, REG_COEFFICIENTS, DROPOUT_RATES
        )
    ]


@dataclass(frozen=True)
class FewShotSet:
    """N input embeddings paired with their reference label indices."""

    X: np.ndarray  # (N, d)
    z: np.ndarray  # (N,) ints in 0..K-1

    def __post_init__(self):
        X = as_matrix(self.X, "X")
        z = np.asarray(self.z, dtype=np.int64)
        if z.ndim != 1 or z.shape[0] != X.shape[0]:
            raise ValueError(f"z must have one label per row of X, got {z.shape} for {X.shape}")
        if z.shape[0] and z.min() < 0:
            raise ValueError("label indices must be non-negative")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "z", z)

    @property
    def n(self) -> int:
        return self.X.shape[0]


@dataclass
class TunedLabels:
    """Tuned label matrix Y with its frozen initialization Y0."""

    Y: np.ndarray
    Y0: np.ndarray
    config_used: TuningConfig | None = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        Y = as_matrix(self.Y, "Y")
        Y0 = as_matrix(self.Y0, "Y0").copy()
        if Y.shape != Y0.shape:
            raise ValueError(f"Y shape {Y.shape} != Y0 shape {Y0.shape}")
        Y0.setflags(write=False)
        self.Y = Y
        self.Y0 = Y0


def _check_shapes(Y, X, Y0, z=None, mask=None):
    Y = as_matrix(Y, "Y")
    X = as_matrix(X, "X")
    Y0 = as_matrix(Y0, "Y0")
    if Y.shape != Y0.shape:
        raise ValueError(f"Y shape {Y.shape} != Y0 shape {Y0.shape}")
    if X.shape[1] != Y.shape[1]:
        raise ValueError(f"X dim {X.shape[1]} != Y dim {Y.shape[1]}")
    if z is not None and z.shape[0] and int(z.max()) >= Y.shape[0]:
        raise ValueError(f"label index {int(z.max())} out of range for K={Y.shape[0]}")
    if mask is not None:
        mask = np.asarray(mask, dtype=np.float64)
        if mask.shape != (Y.shape[1],):
            raise ValueError(f"mask must have shape ({Y.shape[1]},), got {mask.shape}")
    return Y, X, Y0, mask


def _one_hot(z: np.ndarray, num_labels: int) -> np.ndarray:
    return np.eye(num_labels)[z]


def _regularizer(Y, Y0, squared: bool) -> tuple[float, np.ndarray]:
    """Penalty value and gradient for the pull toward Y0."""
    diff = Y - Y0
    if squared:
        return 0.5 * float((diff * diff).sum()), diff
    norm = float(np.sqrt((diff * diff).sum()))
    if norm == 0.0:
        return 0.0, np.zeros_like(diff)  # subgradient 0 at Y = Y0
    return norm, diff / norm


def _loss_and_gradient(Y, X, T, Y0, reg_coefficient, mask, squared_reg):
    """Soft-target cross-entropy loss and gradient at Y (shared step kernel).

    T is an N x K matrix of target distributions; one-hot rows recover
    plain cross-entropy. The mask, when given, multiplies every row of Y
    in the forward pass and every row of the data gradient afterwards.
    """
    Yt = Y if mask is None else Y * mask
    S = X @ Yt.T
    m = S.max(axis=1, keepdims=True)
    expS = np.exp(S - m)
    Z = expS.sum(axis=1, keepdims=True)
    log_norm = np.log(Z[:, 0]) + m[:, 0]
    n = X.shape[0]
    # sum_k T[i,k] * (S[i,k] - log_norm[i]) with rows of T summing to 1
    loss = -float(((T * S).sum(axis=1) - log_norm).mean())
    G = (expS / Z - T).T @ X / n
    if mask is not None:
        G = G * mask
    if reg_coefficient != 0.0:
        reg_value, reg_grad = _regularizer(Y, Y0, squared_reg)
        loss += reg_coefficient * reg_value
        G = G + reg_coefficient * reg_grad
    return loss, G


def lt_objective(
    Y,
    data: FewShotSet,
    Y0,
    reg_coefficient: float,
    mask=None,
    squared_reg: bool = True,
) -> float:
    """Cross-entropy of scores against reference labels plus the Y0 penalty.

    With a mask the scores are computed at Y with every row multiplied
    componentwise by it, which is the quantity the masked gradient
    differentiates.
    """
    Y, X, Y0, mask = _check_shapes(Y, data.X, Y0, data.z, mask)
    Yt = Y if mask is None else Y * mask
    S = X @ Yt.T
    m = S.max(axis=1)
    log_norm = np.log(np.exp(S - m[:, None]).sum(axis=1)) + m
    ce = -float((S[np.arange(data.n), data.z] - log_norm).mean())
    if reg_coefficient == 0.0:
        return ce
    reg_value, _ = _regularizer(Y, Y0, squared_reg)
    return ce + reg_coefficient * reg_value


def lt_gradient(
    Y,
    data: FewShotSet,
    Y0,
    reg_coefficient: float,
    mask=None,
    squared_reg: bool = True,
) -> np.ndarray:
    """Analytic gradient of :func:`lt_objective` with respect to Y."""
    Y, X, Y0, mask = _check_shapes(Y, data.X, Y0, data.z, mask)
    T = _one_hot(data.z, Y.shape[0])
    _, G = _loss_and_gradient(Y, X, T, Y0, reg_coefficient, mask, squared_reg)
    return G


def sample_dropout_mask(dim: int, rate: float, rng: np.random.Generator) -> np.ndarray:
    """One 0/1 mask vector; each component is 0 with probability *rate*."""
    if not 0.0 <= rate < 1.0:
        raise ValueError(f"dropout rate must be in [0, 1), got {rate}")
    return (rng.random(dim) >= rate).astype(np.float64)


def _descend(X, T, Y0, config: TuningConfig, squared_reg: bool, provenance: dict) -> TunedLabels:
    """Full-batch gradient descent of the soft-target objective from Y0."""
    Y0 = as_matrix(Y0, "Y0").copy()
    Y = Y0.copy()
    dim = Y.shape[1]
    rng = np.random.default_rng(config.seed)
    desc = (
        f"lr={config.learning_rate},epochs={config.epochs},"
        f"reg={config.reg_coefficient},dropout={config.dropout_rate}"
    )
    for step in range(config.epochs):
        mask = sample_dropout_mask(dim, config.dropout_rate, rng)
        # divergence is detected via the finiteness guard, not numpy warnings
        with np.errstate(over="ignore", invalid="ignore"):
            loss, G = _loss_and_gradient(Y, X, T, Y0, config.reg_coefficient, mask, squared_reg)
        if not np.isfinite(loss):
            raise DivergenceError(step, config.learning_rate, desc)
        Y = Y - config.learning_rate * G
    if not np.all(np.isfinite(Y)):
        raise DivergenceError(config.epochs, config.learning_rate, desc)
    return TunedLabels(Y=Y, Y0=Y0, config_used=config, provenance=provenance)


def tune_labels(
    data: FewShotSet, Y0, config: TuningConfig, squared_reg: bool = True
) -> TunedLabels:
    """Tune label embeddings on a few-shot set; deterministic given the seed."""
    if data.n < 1:
        raise ValueError("tuning requires at least one example")
    Y0 = as_matrix(Y0, "Y0")
    _check_shapes(Y0, data.X, Y0, data.z)
    T = _one_hot(data.z, Y0.shape[0])
    return _descend(
        data.X, T, Y0, config, squared_reg,
        provenance={"method": "label-tuning", "examples": data.n},
    )


@dataclass
class CrossValidationResult:
    best: TuningConfig
    table: list[tuple[TuningConfig, float]]
    flagged_labels: list[int]
    model: TunedLabels


def assign_folds(z: np.ndarray, num_labels: int, folds: int, seed: int) -> np.ndarray:
    """Stratified fold ids: per-label seeded shuffle, then round-robin."""
    fold_of = np.zeros(z.shape[0], dtype=np.int64)
    rng = np.random.default_rng(seed)
    for k in range(num_labels):
        idx = np.flatnonzero(z == k)
        perm = rng.permutation(idx)
        for pos, example in enumerate(perm):
            fold_of[example] = pos % folds
    return fold_of


def cross_validate(
    data: FewShotSet,
    Y0,
    grid: Sequence[TuningConfig],
    folds: int = 4,
    seed: int = 0,
    squared_reg: bool = True,
) -> CrossValidationResult:
    """Pick the grid config with the best mean held-out macro-F1.

    Stratified fold assignment is deterministic given the seed. Labels
    with fewer examples than folds are simply absent from some folds and
    reported in ``flagged_labels``. Ties on the mean score keep the
    earliest grid position. The returned model is retrained on the full
    few-shot set with the winning config.
    """
    if not grid:
        raise ValueError("hyperparameter grid is empty")
    Y0 = as_matrix(Y0, "Y0")
    num_labels = Y0.shape[0]
    fold_of = assign_folds(data.z, num_labels, folds, seed)
    counts = np.bincount(data.z, minlength=num_labels)
    flagged = [k for k in range(num_labels) if counts[k] < folds]

    table: list[tuple[TuningConfig, float]] = []
    best_idx, best_mean = -1, -np.inf
    for i, config in enumerate(grid):
        fold_scores = []
        for f in range(folds):
            val = fold_of == f
            train = ~val
            if not val.any() or not train.any():
                continue
            tuned = tune_labels(FewShotSet(data.X[train], data.z[train]), Y0, config,
                                squared_reg=squared_reg)
            pred = predict_indices(data.X[val], tuned.Y)
            score = macro_f1(data.z[val], pred, num_labels).macro_f1
            fold_scores.append(score)
            logger.info(
                "cv run config=%d/%d lr=%g epochs=%d reg=%g dropout=%g fold=%d f1=%.4f",
                i + 1, len(grid), config.learning_rate, config.epochs,
                config.reg_coefficient, config.dropout_rate, f, score,
            )
        mean = float(np.mean(fold_scores)) if fold_scores else 0.0
        table.append((config, mean))
        if mean > best_mean:
            best_idx, best_mean = i, mean

    best = grid[best_idx]
    model = tune_labels(data, Y0, best, squared_reg=squared_reg)
    return CrossValidationResult(best=best, table=table, flagged_labels=flagged, model=model)


def batch_softmax_loss(batch_inputs, batch_labels) -> float:
    """In-batch-negatives softmax loss over aligned (input, label) pairs.

    Row i of the label matrix is the positive for row i of the inputs;
    every other row of the batch serves as a negative.
    """
    X = as_matrix(batch_inputs, "batch_inputs")
    Y = as_matrix(batch_labels, "batch_labels")
    if X.shape != Y.shape:
        raise ValueError(f"batch shapes differ: {X.shape} vs {Y.shape}")
    if X.shape[0] < 1:
        raise ValueError("batch must contain at least one pair")
    S = X @ Y.T
    m = S.max(axis=1)
    log_norm = np.log(np.exp(S - m[:, None]).sum(axis=1)) + m
    return -float((np.diag(S) - log_norm).mean())


def build_label_batches(
    labels: Sequence[int], num_labels: int, rng: np.random.Generator
) -> list[list[int]]:
    """Batches of example indices with exactly one example per label.

    Every batch has length ``num_labels``; slot k holds an example of
    label k. Each label's examples are drawn without replacement from a
    shuffled queue that is reshuffled when exhausted, so smaller labels
    recycle. The number of batches equals the largest per-label count.
    """
    z = np.asarray(labels, dtype=np.int64)
    per_label = [np.flatnonzero(z == k) for k in range(num_labels)]
    for k, idx in enumerate(per_label):
        if idx.size == 0:
            raise ValueError(f"label {k} has no examples")
    queues = [list(rng.permutation(idx)) for idx in per_label]
    batches = []
    for _ in range(max(idx.size for idx in per_label)):
        batch = []
        for k in range(num_labels):
            if not queues[k]:
                queues[k] = list(rng.permutation(per_label[k]))
            batch.append(int(queues[k].pop(0)))
        batches.append(batch)
    return batches

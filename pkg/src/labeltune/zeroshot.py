"""Zero-shot classification: embed label texts once, score inputs by dot product.

Label embeddings are computed exactly once at model build time (K encoder
calls); classifying N inputs afterwards costs exactly N encoder calls, so
inference cost is constant in the number of labels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_matrix, softmax_rows
from .encoders import Encoder
from .verbalizer import HypothesisPattern, LabelSet, render_hypotheses


@dataclass
class Prediction:
    scores: np.ndarray         # (K,) similarity per label
    probabilities: np.ndarray  # (K,) softmax of scores
    predicted: int             # smallest index attaining the max score


@dataclass
class ZeroShotModel:
    encoder: Encoder
    label_embeddings: np.ndarray  # (K, d), row order = label index order
    label_set: LabelSet
    cosine: bool = False

    def __post_init__(self):
        Y = as_matrix(self.label_embeddings, "label_embeddings")
        if Y.shape[0] != self.label_set.size:
            raise ValueError(
                f"label embeddings have {Y.shape[0]} rows for {self.label_set.size} labels"
            )
        if Y.shape[1] != self.encoder.dim:
            raise ValueError(
                f"label embeddings dim {Y.shape[1]} != encoder dim {self.encoder.dim}"
            )
        self.label_embeddings = Y


def _normalize_rows(M: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(M, axis=1, keepdims=True)
    norms[norms == 0.0] = 1.0
    return M / norms


def build_zero_shot(
    encoder: Encoder,
    labels: LabelSet,
    pattern: HypothesisPattern | None = None,
    cosine: bool = False,
) -> ZeroShotModel:
    """Render label texts and encode each exactly once, in index order."""
    texts = render_hypotheses(labels, pattern)
    Y = np.stack([encoder.encode(t) for t in texts])
    return ZeroShotModel(encoder=encoder, label_embeddings=Y, label_set=labels, cosine=cosine)


def with_label_embeddings(
    encoder: Encoder, labels: LabelSet, Y, cosine: bool = False
) -> ZeroShotModel:
    """Model over precomputed (possibly tuned) label embeddings; 0 encoder calls."""
    return ZeroShotModel(encoder=encoder, label_embeddings=as_matrix(Y, "Y"),
                         label_set=labels, cosine=cosine)


def score_against_labels(x: np.ndarray, Y: np.ndarray, cosine: bool = False) -> np.ndarray:
    """Scores of one input embedding against every label row."""
    if cosine:
        Y = _normalize_rows(Y)
        n = np.linalg.norm(x)
        if n > 0.0:
            x = x / n
    return Y @ x


def classify(model: ZeroShotModel, text: str) -> Prediction:
    """Classify one input text with exactly one encoder call."""
    x = model.encoder.encode(text)
    scores = score_against_labels(x, model.label_embeddings, model.cosine)
    probabilities = softmax_rows(scores[None, :])[0]
    return Prediction(scores=scores, probabilities=probabilities,
                      predicted=int(np.argmax(scores)))


def classify_batch(model: ZeroShotModel, texts) -> list[Prediction]:
    """Per-input classification of a batch; N texts cost exactly N encoder calls."""
    return [classify(model, t) for t in texts]


def predict_indices(X, Y, cosine: bool = False) -> np.ndarray:
    """Argmax label index per row of precomputed input embeddings.

    Ties resolve to the lowest label index. Shared by tuning, refinement
    and the evaluation harness.
    """
    Xm = as_matrix(X, "X")
    Ym = as_matrix(Y, "Y")
    if cosine:
        Xm = _normalize_rows(Xm)
        Ym = _normalize_rows(Ym)
    if Xm.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.argmax(Xm @ Ym.T, axis=1)

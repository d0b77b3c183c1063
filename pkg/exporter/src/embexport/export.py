"""Export sentence-embedding-model outputs to EMB1 files.

The exporter is a pure serialization bridge: it never tunes or trains.
Models are loaded by sentence-transformers identifier or local path and
run with deterministic settings, so re-exporting the same inputs with
the same model produces byte-identical files, and the batch size only
affects throughput, never values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import emb1, labels as labels_mod


class ModelLoadError(RuntimeError):
    """The model identifier could not be resolved or loaded."""


class EncodeError(RuntimeError):
    """The model failed while encoding texts."""


@dataclass
class ExportJob:
    texts: list[str]
    model: str            # sentence-transformers identifier or local path
    out: str              # EMB1 path; sidecar goes to out + ".ids"
    batch_size: int = 32
    ids: list[str] = field(default_factory=list)  # defaults to the texts

    def __post_init__(self):
        if self.batch_size < 1:
            raise ValueError(f"batch_size must be >= 1, got {self.batch_size}")
        if not self.ids:
            self.ids = list(self.texts)
        if len(self.ids) != len(self.texts):
            raise ValueError(f"{len(self.ids)} ids for {len(self.texts)} texts")


def load_model(identifier: str):
    try:
        from sentence_transformers import SentenceTransformer

        model = SentenceTransformer(identifier)
    except Exception as exc:
        raise ModelLoadError(f"cannot load model {identifier!r}: {exc}") from exc
    model.eval()
    return model


def encode_texts(model, texts: Sequence[str], batch_size: int) -> np.ndarray:
    """Encode with the model's own pooling convention; rows keep input order."""
    if not texts:
        width = model.get_sentence_embedding_dimension()
        return np.zeros((0, int(width)), dtype=np.float32)
    try:
        embeddings = model.encode(
            list(texts),
            batch_size=batch_size,
            convert_to_numpy=True,
            show_progress_bar=False,
        )
    except Exception as exc:
        raise EncodeError(f"encoding failed: {exc}") from exc
    return np.asarray(embeddings, dtype=np.float32)


def export_embeddings(job: ExportJob, model=None) -> np.ndarray:
    """Encode the job's texts and write EMB1 + sidecar; returns the matrix."""
    if model is None:
        model = load_model(job.model)
    matrix = encode_texts(model, job.texts, job.batch_size)
    emb1.write(job.out, matrix, job.ids)
    return matrix


def export_labels(
    labels_path: str,
    model_id: str,
    out: str,
    pattern_path: str | None = None,
    batch_size: int = 32,
    model=None,
) -> np.ndarray:
    """Encode rendered label hypotheses in index order and write EMB1.

    Sidecar ids are the label names, so the file slots directly into the
    toolkit's label-embedding inputs.
    """
    names = labels_mod.read_label_names(labels_path)
    if pattern_path is not None:
        template, overrides = labels_mod.read_pattern(pattern_path)
        texts = labels_mod.render(names, template, overrides)
    else:
        texts = names
    job = ExportJob(texts=texts, model=model_id, out=out, batch_size=batch_size, ids=names)
    return export_embeddings(job, model=model)

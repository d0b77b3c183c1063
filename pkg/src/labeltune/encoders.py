"""Text-to-embedding encoders.

Three concrete encoders cover the cases where no external neural encoder
is available: a file-backed lookup over precomputed vectors, a
word-vector averaging encoder, and a hashed character-trigram encoder for
synthetic tests. All encoders are deterministic: the same text always
maps to the same vector, across calls and across processes.
"""

from __future__ import annotations

import hashlib
import re
import threading
from abc import ABC, abstractmethod
from typing import Iterable, Mapping

import numpy as np

from .core import as_vector, mean_pool


class MissingEmbeddingError(KeyError):
    """Raised when a text id has no precomputed embedding."""

    def __init__(self, text_id: str):
        super().__init__(text_id)
        self.text_id = text_id

    def __str__(self) -> str:
        return f"no embedding stored for id {self.text_id!r}"


class Encoder(ABC):
    """Deterministic mapping from text to a fixed-width embedding vector."""

    dim: int

    @abstractmethod
    def encode(self, text: str) -> np.ndarray:
        """Return the embedding of *text*, a float64 vector of length ``dim``."""

    def encode_batch(self, texts: Iterable[str]) -> np.ndarray:
        """Stack ``encode`` results into an N x dim matrix."""
        rows = [self.encode(t) for t in texts]
        if not rows:
            return np.zeros((0, self.dim))
        return np.stack(rows)


class EmbeddingStore(Encoder):
    """Encoder backed by a map of precomputed vectors keyed by text id.

    Lookup of an unknown id raises :class:`MissingEmbeddingError` naming it.
    """

    def __init__(self, entries: Mapping[str, np.ndarray], dim: int | None = None):
        self.entries: dict[str, np.ndarray] = {}
        for text_id, vec in entries.items():
            v = as_vector(vec, f"embedding for {text_id!r}")
            if dim is None:
                dim = v.shape[0]
            elif v.shape[0] != dim:
                raise ValueError(
                    f"embedding for {text_id!r} has dim {v.shape[0]}, expected {dim}"
                )
            self.entries[text_id] = v
        if dim is None:
            raise ValueError("cannot build an empty store without an explicit dim")
        self.dim = int(dim)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, text_id: str) -> bool:
        return text_id in self.entries

    def encode(self, text: str) -> np.ndarray:
        try:
            return self.entries[text]
        except KeyError:
            raise MissingEmbeddingError(text) from None


_TOKEN_SPLIT = re.compile(r"[^a-z]+")


def tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphabetic characters."""
    return [t for t in _TOKEN_SPLIT.split(text.lower()) if t]


class AveragingEncoder(Encoder):
    """Mean of per-word vectors, skipping stopwords and unknown words.

    Texts where no token survives the filters embed to the zero vector,
    which downstream classifiers resolve via the lowest-index tie-break.
    """

    def __init__(self, table: Mapping[str, np.ndarray], stopwords: Iterable[str] = ()):
        if not table:
            raise ValueError("word-vector table is empty")
        self.table: dict[str, np.ndarray] = {}
        dim = None
        for word, vec in table.items():
            v = as_vector(vec, f"vector for {word!r}")
            if dim is None:
                dim = v.shape[0]
            elif v.shape[0] != dim:
                raise ValueError(f"vector for {word!r} has dim {v.shape[0]}, expected {dim}")
            self.table[word] = v
        self.dim = int(dim)
        self.stopwords = frozenset(stopwords)

    def encode(self, text: str) -> np.ndarray:
        kept = [
            self.table[tok]
            for tok in tokenize(text)
            if tok not in self.stopwords and tok in self.table
        ]
        if not kept:
            return np.zeros(self.dim)
        return mean_pool(kept)


class HashEncoder(Encoder):
    """Hashed character-trigram encoder for synthetic and CLI tests.

    Each trigram is hashed with a seeded 64-bit keyed hash into one of
    ``dim`` buckets; the parity of a second hash half picks the sign. The
    bucket counts are scaled to unit norm (zero vector for empty text).
    Near-duplicate strings share trigrams and therefore embed nearby,
    which is all the structure the synthetic separability tests need.
    """

    def __init__(self, dim: int, seed: int = 0):
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        self.dim = int(dim)
        self.seed = int(seed)
        self._key = self.seed.to_bytes(8, "little", signed=True)

    def _hash(self, gram: str) -> tuple[int, int]:
        digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=16, key=self._key).digest()
        bucket = int.from_bytes(digest[:8], "little")
        sign = int.from_bytes(digest[8:], "little")
        return bucket, sign

    def encode(self, text: str) -> np.ndarray:
        v = np.zeros(self.dim)
        if not text:
            return v
        # texts shorter than 3 chars contribute themselves as a single gram
        grams = [text[i : i + 3] for i in range(len(text) - 2)] or [text]
        for gram in grams:
            bucket, sign = self._hash(gram)
            v[bucket % self.dim] += 1.0 if sign % 2 == 0 else -1.0
        norm = np.linalg.norm(v)
        return v / norm if norm > 0.0 else v


class CountingEncoder(Encoder):
    """Wrapper that counts ``encode`` calls without changing any output."""

    def __init__(self, inner: Encoder):
        self.inner = inner
        self.dim = inner.dim
        self.calls = 0
        self._lock = threading.Lock()

    def encode(self, text: str) -> np.ndarray:
        with self._lock:
            self.calls += 1
        return self.inner.encode(text)

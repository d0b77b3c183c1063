"""Dense embedding-matrix primitives: similarity scoring, softmax, pooling.

All matrices are row-major float64 numpy arrays in memory (files store
float32, see :mod:`labeltune.fileio`). Inputs are N x d, labels K x d,
scores N x K. Every function here is pure and deterministic.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def as_matrix(data, name: str = "matrix") -> np.ndarray:
    """Validate *data* as a 2-D finite float64 matrix and return it."""
    m = np.asarray(data, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {m.shape}")
    if m.shape[1] < 1:
        raise ValueError(f"{name} must have dim >= 1, got {m.shape[1]}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} contains non-finite values")
    return m


def as_vector(data, name: str = "vector") -> np.ndarray:
    """Validate *data* as a 1-D finite float64 vector and return it."""
    v = np.asarray(data, dtype=np.float64)
    if v.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains non-finite values")
    return v


def dot_similarity(a, b) -> float:
    """Dot product of two equal-length embedding vectors."""
    av = as_vector(a, "a")
    bv = as_vector(b, "b")
    if av.shape[0] != bv.shape[0]:
        raise ValueError(f"dimension mismatch: {av.shape[0]} vs {bv.shape[0]}")
    return float(np.dot(av, bv))


def score_matrix(inputs, labels) -> np.ndarray:
    """Similarity scores between every input row and every label row.

    Returns the N x K matrix whose (i, j) entry is the dot product of
    input row i with label row j.
    """
    X = as_matrix(inputs, "inputs")
    Y = as_matrix(labels, "labels")
    if X.shape[1] != Y.shape[1]:
        raise ValueError(f"dimension mismatch: inputs d={X.shape[1]}, labels d={Y.shape[1]}")
    return X @ Y.T


def softmax_rows(scores) -> np.ndarray:
    """Row-wise stable softmax: each output row sums to 1.

    The row maximum is subtracted before exponentiation so arbitrarily
    large dot-product scores cannot overflow.
    """
    S = as_matrix(scores, "scores")
    if S.shape[0] == 0:
        return S.copy()
    shifted = S - S.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def logsumexp_rows(scores) -> np.ndarray:
    """Row-wise log(sum(exp(row))) in the max-shifted stable form."""
    S = as_matrix(scores, "scores")
    if S.shape[0] == 0:
        return np.zeros(0)
    m = S.max(axis=1)
    return np.log(np.exp(S - m[:, None]).sum(axis=1)) + m


def mean_pool(token_vectors: Sequence) -> np.ndarray:
    """Componentwise arithmetic mean of a non-empty vector sequence."""
    if len(token_vectors) == 0:
        raise ValueError("mean_pool requires a non-empty sequence")
    M = np.stack([as_vector(v, "token vector") for v in token_vectors])
    return M.mean(axis=0)


def check_probability_rows(P, tol: float = 1e-9, name: str = "probabilities") -> np.ndarray:
    """Validate that each row of *P* is a distribution (sums to 1 within tol)."""
    M = as_matrix(P, name)
    if np.any(M < 0.0) or np.any(M > 1.0):
        raise ValueError(f"{name} has entries outside [0, 1]")
    if M.shape[0] and not np.allclose(M.sum(axis=1), 1.0, rtol=0.0, atol=tol):
        raise ValueError(f"{name} rows do not sum to 1 within {tol}")
    return M

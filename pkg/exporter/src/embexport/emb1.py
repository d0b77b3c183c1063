"""Writer/reader for the EMB1 embedding-file format.

Byte layout (little-endian): 4-byte magic ``EMB1``, u32 version (1),
u32 count, u32 dim, then count x dim float32 values in row-major order.
A UTF-8 sidecar at ``<path>.ids`` names row i on line i. This mirrors
the format the classification toolkit consumes; the exporter implements
it independently so the two sides only share the file contract.
"""

from __future__ import annotations

import struct
from typing import Sequence

import numpy as np

MAGIC = b"EMB1"
VERSION = 1
_HEADER = struct.Struct("<4sIII")


def sidecar_path(path: str) -> str:
    return path + ".ids"


def write(path: str, matrix: np.ndarray, ids: Sequence[str]) -> None:
    m = np.ascontiguousarray(matrix, dtype="<f4")
    if m.ndim != 2:
        raise ValueError(f"matrix must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix contains non-finite values")
    if len(ids) != m.shape[0]:
        raise ValueError(f"{len(ids)} ids for {m.shape[0]} rows")
    with open(path, "wb") as f:
        f.write(_HEADER.pack(MAGIC, VERSION, m.shape[0], m.shape[1]))
        f.write(m.tobytes(order="C"))
    with open(sidecar_path(path), "w", encoding="utf-8") as f:
        for text_id in ids:
            if "\n" in text_id or "\r" in text_id:
                raise ValueError(f"id contains a line break: {text_id!r}")
            f.write(text_id + "\n")


def read(path: str) -> tuple[np.ndarray, list[str]]:
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise ValueError(f"{path}: truncated header")
        magic, version, count, dim = _HEADER.unpack(header)
        if magic != MAGIC or version != VERSION:
            raise ValueError(f"{path}: not an EMB1 v1 file")
        payload = f.read()
    if len(payload) != count * dim * 4:
        raise ValueError(f"{path}: payload size mismatch")
    matrix = np.frombuffer(payload, dtype="<f4").reshape(count, dim)
    with open(sidecar_path(path), encoding="utf-8") as f:
        ids = [line.rstrip("\n") for line in f]
    if len(ids) != count:
        raise ValueError(f"{sidecar_path(path)}: {len(ids)} ids for {count} rows")
    return matrix, ids

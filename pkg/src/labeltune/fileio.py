"""Bit-exact file formats shared across the pipeline.

Embedding files (EMB1) are little-endian binary: a 16-byte header
(magic ``EMB1``, u32 version, u32 count, u32 dim) followed by
count x dim float32 values in row-major order. A UTF-8 sidecar at
``<path>.ids`` names row i on line i. All text formats are UTF-8 and
tab-separated; tabs cannot occur inside natural-language fields.
"""

from __future__ import annotations

import json
import os
import struct
from dataclasses import asdict
from typing import Iterable, Sequence

import numpy as np

from .core import as_matrix
from .tuning import TunedLabels, TuningConfig
from .verbalizer import HypothesisPattern, Label, LabelSet

EMB_MAGIC = b"EMB1"
EMB_VERSION = 1
_HEADER = struct.Struct("<4sIII")


class FormatError(ValueError):
    """Raised when a file does not match its declared format."""


def sidecar_path(path: str) -> str:
    return path + ".ids"


def write_embeddings(path: str, matrix, ids: Sequence[str]) -> None:
    """Write an EMB1 file plus its id sidecar."""
    M = as_matrix(matrix, "matrix")
    if len(ids) != M.shape[0]:
        raise ValueError(f"{len(ids)} ids for {M.shape[0]} rows")
    payload = M.astype("<f4").tobytes(order="C")
    with open(path, "wb") as f:
        f.write(_HEADER.pack(EMB_MAGIC, EMB_VERSION, M.shape[0], M.shape[1]))
        f.write(payload)
    with open(sidecar_path(path), "w", encoding="utf-8") as f:
        for text_id in ids:
            if "\n" in text_id or "\r" in text_id:
                raise ValueError(f"id contains a line break: {text_id!r}")
            f.write(text_id + "\n")


def read_embeddings(path: str) -> tuple[np.ndarray, list[str]]:
    """Read an EMB1 file and its sidecar; returns (float64 matrix, ids)."""
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise FormatError(f"{path}: truncated header")
        magic, version, count, dim = _HEADER.unpack(header)
        if magic != EMB_MAGIC:
            raise FormatError(f"{path}: bad magic {magic!r}")
        if version != EMB_VERSION:
            raise FormatError(f"{path}: unsupported version {version}")
        payload = f.read()
    expected = count * dim * 4
    if len(payload) != expected:
        raise FormatError(
            f"{path}: payload is {len(payload)} bytes, header implies {expected}"
        )
    matrix = np.frombuffer(payload, dtype="<f4").reshape(count, dim).astype(np.float64)
    if not np.all(np.isfinite(matrix)):
        raise FormatError(f"{path}: payload contains non-finite values")
    ids = read_ids(sidecar_path(path))
    if len(ids) != count:
        raise FormatError(
            f"{sidecar_path(path)}: {len(ids)} ids for {count} rows"
        )
    return matrix, ids


def read_ids(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f]


def read_header(path: str) -> tuple[int, int, int]:
    """Header arithmetic without loading the payload: (count, dim, payload bytes)."""
    with open(path, "rb") as f:
        header = f.read(_HEADER.size)
    if len(header) != _HEADER.size:
        raise FormatError(f"{path}: truncated header")
    magic, version, count, dim = _HEADER.unpack(header)
    if magic != EMB_MAGIC or version != EMB_VERSION:
        raise FormatError(f"{path}: not a supported embedding file")
    payload_bytes = os.path.getsize(path) - _HEADER.size
    return count, dim, payload_bytes


# ---------------------------------------------------------------------------
# label sets and hypothesis patterns


def read_label_set(path: str) -> LabelSet:
    """One label per line: ``name`` or ``name<TAB>hypothesis``; # comments."""
    labels = []
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) == 1:
                labels.append((parts[0], None))
            elif len(parts) == 2:
                labels.append((parts[0], parts[1]))
            else:
                raise FormatError(f"{path}: too many fields in line {line!r}")
    if not labels:
        raise FormatError(f"{path}: no labels found")
    try:
        return LabelSet(
            tuple(Label(i, name, hyp) for i, (name, hyp) in enumerate(labels))
        )
    except ValueError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_label_set(path: str, labels: LabelSet) -> None:
    with open(path, "w", encoding="utf-8") as f:
        for lab in labels.labels:
            if lab.hypothesis is None:
                f.write(lab.name + "\n")
            else:
                f.write(f"{lab.name}\t{lab.hypothesis}\n")


def read_pattern(path: str) -> HypothesisPattern:
    """``template<TAB>text`` line plus ``override<TAB>name<TAB>text`` lines."""
    template = None
    overrides = {}
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if parts[0] == "template" and len(parts) == 2:
                if template is not None:
                    raise FormatError(f"{path}: multiple template lines")
                template = parts[1]
            elif parts[0] == "override" and len(parts) == 3:
                overrides[parts[1]] = parts[2]
            else:
                raise FormatError(f"{path}: unrecognized line {line!r}")
    if template is None and not overrides:
        raise FormatError(f"{path}: empty pattern file")
    return HypothesisPattern(template=template, overrides=overrides)


# ---------------------------------------------------------------------------
# datasets


def read_dataset(path: str, labels: LabelSet) -> tuple[list[str], np.ndarray]:
    """TSV ``text<TAB>label_name`` lines; label names must be in the set."""
    texts: list[str] = []
    indices: list[int] = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise FormatError(f"{path}:{lineno}: expected text<TAB>label")
            text, name = parts
            try:
                indices.append(labels.index_of(name))
            except KeyError:
                raise FormatError(
                    f"{path}:{lineno}: unknown label {name!r}"
                ) from None
            texts.append(text)
    return texts, np.asarray(indices, dtype=np.int64)


def write_dataset(path: str, texts: Sequence[str], z: Sequence[int], labels: LabelSet) -> None:
    names = labels.names
    with open(path, "w", encoding="utf-8") as f:
        for text, k in zip(texts, z):
            if "\t" in text or "\n" in text:
                raise ValueError(f"text contains TSV control characters: {text!r}")
            f.write(f"{text}\t{names[int(k)]}\n")


def read_plain_texts(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f if line.rstrip("\n")]


# ---------------------------------------------------------------------------
# word-vector tables and stopwords


def read_word_table(path: str) -> dict[str, np.ndarray]:
    """Word-vector text format: ``word v1 v2 ... vd`` per line."""
    table: dict[str, np.ndarray] = {}
    dim = None
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            parts = raw.split()
            if not parts:
                continue
            word, values = parts[0], parts[1:]
            if not values:
                raise FormatError(f"{path}:{lineno}: no vector components")
            if dim is None:
                dim = len(values)
            elif len(values) != dim:
                raise FormatError(
                    f"{path}:{lineno}: expected {dim} components, got {len(values)}"
                )
            try:
                table[word] = np.array([float(v) for v in values])
            except ValueError:
                raise FormatError(f"{path}:{lineno}: non-numeric component") from None
    if not table:
        raise FormatError(f"{path}: empty word-vector table")
    return table


def read_stopwords(path: str) -> frozenset[str]:
    with open(path, encoding="utf-8") as f:
        return frozenset(line.strip() for line in f if line.strip())


# ---------------------------------------------------------------------------
# tuned-labels artifact (a directory)

_Y_FILE = "Y.emb"
_Y0_FILE = "Y0.emb"
_META_FILE = "meta.json"


def write_tuned_labels(
    directory: str,
    tuned: TunedLabels,
    labels: LabelSet,
    created: str | None = None,
) -> None:
    """Write the per-task artifact: Y, Y0 and a metadata document.

    ``created`` defaults to the SOURCE_DATE_EPOCH environment variable
    when set and to null otherwise, so identical reruns produce
    byte-identical artifacts.
    """
    if tuned.Y.shape[0] != labels.size:
        raise ValueError(f"{tuned.Y.shape[0]} label rows for {labels.size} labels")
    os.makedirs(directory, exist_ok=True)
    write_embeddings(os.path.join(directory, _Y_FILE), tuned.Y, labels.names)
    write_embeddings(os.path.join(directory, _Y0_FILE), tuned.Y0, labels.names)
    if created is None:
        created = os.environ.get("SOURCE_DATE_EPOCH")
    meta = {
        "format": "tuned-labels",
        "version": 1,
        "labels": labels.names,
        "config": asdict(tuned.config_used) if tuned.config_used is not None else None,
        "provenance": tuned.provenance,
        "created": created,
    }
    with open(os.path.join(directory, _META_FILE), "w", encoding="utf-8") as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write("\n")


def read_tuned_labels(directory: str) -> tuple[TunedLabels, LabelSet]:
    y_path = os.path.join(directory, _Y_FILE)
    y0_path = os.path.join(directory, _Y0_FILE)
    meta_path = os.path.join(directory, _META_FILE)
    Y, names = read_embeddings(y_path)
    Y0, names0 = read_embeddings(y0_path)
    with open(meta_path, encoding="utf-8") as f:
        meta = json.load(f)
    if meta.get("format") != "tuned-labels":
        raise FormatError(f"{meta_path}: not a tuned-labels artifact")
    if names != meta.get("labels") or names0 != names:
        raise FormatError(f"{directory}: label names disagree between files")
    if Y.shape != Y0.shape:
        raise FormatError(f"{directory}: Y and Y0 shapes differ")
    config = meta.get("config")
    tuned = TunedLabels(
        Y=Y,
        Y0=Y0,
        config_used=TuningConfig(**config) if config else None,
        provenance=meta.get("provenance", {}),
    )
    return tuned, LabelSet.from_names(names)


# ---------------------------------------------------------------------------
# tuning configs and grids


def parse_config_string(text: str, seed: int = 0) -> TuningConfig:
    """Parse ``lr=0.1,epochs=1000,reg=0.01,dropout=0.1``."""
    fields = {}
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"bad config fragment {part!r}")
        key, value = part.split("=", 1)
        fields[key.strip()] = value.strip()
    known = {"lr", "epochs", "reg", "dropout", "seed"}
    unknown = set(fields) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    try:
        return TuningConfig(
            learning_rate=float(fields["lr"]),
            epochs=int(fields["epochs"]),
            reg_coefficient=float(fields["reg"]),
            dropout_rate=float(fields["dropout"]),
            seed=int(fields.get("seed", seed)),
        )
    except KeyError as exc:
        raise ValueError(f"config string is missing {exc.args[0]!r}") from None


def read_grid(path: str, seed: int = 0) -> list[TuningConfig]:
    """Grid file: one ``lr=...,epochs=...,reg=...,dropout=...`` line per config."""
    grid = []
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            grid.append(parse_config_string(line, seed=seed))
    if not grid:
        raise FormatError(f"{path}: no configs found")
    return grid

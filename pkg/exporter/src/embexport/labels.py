"""Label-set and hypothesis-pattern file parsing plus rendering.

Same text formats as the classification toolkit: label sets are one
``name`` or ``name<TAB>hypothesis`` per line; pattern files hold one
``template<TAB>text`` line (text contains one ``{}`` placeholder) and
optional ``override<TAB>name<TAB>text`` lines. Rendering without a
pattern returns the raw label names (identity hypothesis).
"""

from __future__ import annotations


class PatternError(ValueError):
    """Pattern cannot cover every label."""


def read_label_names(path: str) -> list[str]:
    names = []
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            names.append(line.split("\t")[0])
    if not names:
        raise ValueError(f"{path}: no labels found")
    if len(set(names)) != len(names):
        raise ValueError(f"{path}: duplicate label names")
    return names


def read_pattern(path: str) -> tuple[str | None, dict[str, str]]:
    template = None
    overrides: dict[str, str] = {}
    with open(path, encoding="utf-8") as f:
        for raw in f:
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.split("\t")
            if parts[0] == "template" and len(parts) == 2:
                template = parts[1]
            elif parts[0] == "override" and len(parts) == 3:
                overrides[parts[1]] = parts[2]
            else:
                raise ValueError(f"{path}: unrecognized line {line!r}")
    return template, overrides


def render(names: list[str], template: str | None, overrides: dict[str, str]) -> list[str]:
    uncovered = [n for n in names if n not in overrides]
    if uncovered:
        if template is None:
            raise PatternError(f"no template and labels without overrides: {uncovered}")
        if template.count("{}") != 1:
            raise PatternError(f"template must contain exactly one {{}}: {template!r}")
    return [
        overrides[n] if n in overrides else template.replace("{}", n, 1)
        for n in names
    ]


def read_dataset_texts(path: str) -> list[str]:
    """Texts from a ``text<TAB>label`` dataset file."""
    texts = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected text<TAB>label")
            texts.append(parts[0])
    return texts


def read_plain_texts(path: str) -> list[str]:
    with open(path, encoding="utf-8") as f:
        return [line.rstrip("\n") for line in f if line.rstrip("\n")]

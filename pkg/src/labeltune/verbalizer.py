"""Label sets and the hypothesis texts they verbalize to.

A task is defined by an ordered label set. The text that actually gets
embedded for each label is either the raw label name (identity
hypothesis) or a rendered template such as ``"It was {}."``, optionally
with per-label overrides for labels whose hypothesis is not a plain
substitution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence


class InvalidPatternError(ValueError):
    """Raised when a hypothesis pattern cannot cover every label."""


@dataclass(frozen=True)
class Label:
    index: int
    name: str
    hypothesis: str | None = None


@dataclass(frozen=True)
class LabelSet:
    """Ordered label definitions; indices run 0..K-1 with no gaps."""

    labels: tuple[Label, ...]

    def __post_init__(self):
        names = [lab.name for lab in self.labels]
        if any(not n for n in names):
            raise ValueError("label names must be non-empty")
        if len(set(names)) != len(names):
            raise ValueError("label names must be unique")
        for i, lab in enumerate(self.labels):
            if lab.index != i:
                raise ValueError(f"label indices must be 0..K-1 in order, got {lab.index} at {i}")

    @classmethod
    def from_names(cls, names: Sequence[str], hypotheses: Sequence[str | None] | None = None):
        hyps = hypotheses if hypotheses is not None else [None] * len(names)
        return cls(tuple(Label(i, n, h) for i, (n, h) in enumerate(zip(names, hyps))))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def names(self) -> list[str]:
        return [lab.name for lab in self.labels]

    def index_of(self, name: str) -> int:
        for lab in self.labels:
            if lab.name == name:
                return lab.index
        raise KeyError(name)


_PLACEHOLDER = "{}"


@dataclass(frozen=True)
class HypothesisPattern:
    """A template with one ``{}`` placeholder, plus per-label overrides.

    The template may be omitted entirely when the overrides map covers
    every label of the set it is rendered against.
    """

    template: str | None = None
    overrides: Mapping[str, str] = field(default_factory=dict)


def render_hypotheses(labels: LabelSet, pattern: HypothesisPattern | None = None) -> list[str]:
    """Produce the label texts to embed, in label-index order.

    Without a pattern this is the identity hypothesis: the raw label
    names. With a pattern, each label name (or its override) is
    substituted into the template.
    """
    if pattern is None:
        return labels.names

    uncovered = [lab.name for lab in labels.labels if lab.name not in pattern.overrides]
    if uncovered:
        if pattern.template is None:
            raise InvalidPatternError(
                f"no template and labels without overrides: {uncovered}"
            )
        if pattern.template.count(_PLACEHOLDER) != 1:
            raise InvalidPatternError(
                f"template must contain exactly one {{}} placeholder: {pattern.template!r}"
            )

    rendered = []
    for lab in labels.labels:
        if lab.name in pattern.overrides:
            rendered.append(pattern.overrides[lab.name])
        else:
            rendered.append(pattern.template.replace(_PLACEHOLDER, lab.name, 1))
    return rendered


def inline_pattern(labels: LabelSet) -> HypothesisPattern:
    """Pattern built from the label set's own per-label hypothesis texts.

    Labels without an inline hypothesis fall back to their name.
    """
    overrides = {
        lab.name: lab.hypothesis if lab.hypothesis is not None else lab.name
        for lab in labels.labels
    }
    return HypothesisPattern(template=None, overrides=overrides)

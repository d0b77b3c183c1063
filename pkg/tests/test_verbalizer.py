import pytest

from labeltune.verbalizer import (
    HypothesisPattern,
    InvalidPatternError,
    Label,
    LabelSet,
    inline_pattern,
    render_hypotheses,
)


def labels_of(*names):
    return LabelSet.from_names(list(names))


class TestLabelSet:
    def test_names_and_size(self):
        ls = labels_of("a", "b", "c")
        assert ls.size == 3
        assert ls.names == ["a", "b", "c"]
        assert ls.index_of("b") == 1

    def test_duplicate_names_rejected(self):
        with pytest.raises(ValueError, match="unique"):
            labels_of("a", "a")

    def test_empty_name_rejected(self):
        with pytest.raises(ValueError, match="non-empty"):
            labels_of("a", "")

    def test_gapped_indices_rejected(self):
        with pytest.raises(ValueError, match="indices"):
            LabelSet((Label(0, "a"), Label(2, "b")))

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            labels_of("a").index_of("z")


class TestRenderHypotheses:
    def test_identity_hypothesis(self):
        assert render_hypotheses(labels_of("terrible", "great")) == ["terrible", "great"]

    def test_template_substitution(self):
        pattern = HypothesisPattern(template="It was {}.")
        assert render_hypotheses(labels_of("terrible", "great"), pattern) == [
            "It was terrible.",
            "It was great.",
        ]

    def test_zero_placeholders_rejected(self):
        with pytest.raises(InvalidPatternError, match="placeholder"):
            render_hypotheses(labels_of("a", "b"), HypothesisPattern(template="no slot"))

    def test_two_placeholders_rejected(self):
        with pytest.raises(InvalidPatternError):
            render_hypotheses(labels_of("a"), HypothesisPattern(template="{} and {}"))

    def test_overrides_cover_bad_template(self):
        pattern = HypothesisPattern(template="broken", overrides={"a": "Alpha.", "b": "Beta."})
        assert render_hypotheses(labels_of("a", "b"), pattern) == ["Alpha.", "Beta."]

    def test_overrides_without_template(self):
        pattern = HypothesisPattern(overrides={"a": "Alpha."})
        assert render_hypotheses(labels_of("a"), pattern) == ["Alpha."]
        with pytest.raises(InvalidPatternError, match="without overrides"):
            render_hypotheses(labels_of("a", "b"), pattern)

    def test_partial_overrides_with_template(self):
        pattern = HypothesisPattern(
            template="This person feels {}.",
            overrides={"no emotion": "This person doesn't feel any particular emotion."},
        )
        out = render_hypotheses(labels_of("joy", "no emotion"), pattern)
        assert out == [
            "This person feels joy.",
            "This person doesn't feel any particular emotion.",
        ]

    def test_output_order_matches_indices(self):
        ls = labels_of("c", "a", "b")
        assert render_hypotheses(ls) == ["c", "a", "b"]

    def test_render_length_always_k(self):
        for k in range(1, 6):
            ls = labels_of(*[f"l{i}" for i in range(k)])
            assert len(render_hypotheses(ls)) == k
            assert len(render_hypotheses(ls, HypothesisPattern(template="x {} y"))) == k


class TestInlinePattern:
    def test_uses_label_hypotheses(self):
        ls = LabelSet.from_names(["pos", "neg"], ["It was great.", None])
        out = render_hypotheses(ls, inline_pattern(ls))
        assert out == ["It was great.", "neg"]

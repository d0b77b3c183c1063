import numpy as np
import pytest

from labeltune.encoders import CountingEncoder, EmbeddingStore, HashEncoder
from labeltune.evaluation import macro_f1
from labeltune.synthetic import ClusterSpec, make_separable_task
from labeltune.verbalizer import HypothesisPattern, LabelSet
from labeltune.zeroshot import (
    build_zero_shot,
    classify,
    classify_batch,
    predict_indices,
    with_label_embeddings,
)


def labels_of(*names):
    return LabelSet.from_names(list(names))


class TestBuildZeroShot:
    def test_one_encode_call_per_label(self):
        enc = CountingEncoder(HashEncoder(dim=16, seed=0))
        build_zero_shot(enc, labels_of("a", "b", "c"))
        assert enc.calls == 3

    def test_rebuild_identical(self):
        enc = HashEncoder(dim=16, seed=0)
        m1 = build_zero_shot(enc, labels_of("a", "b"))
        m2 = build_zero_shot(enc, labels_of("a", "b"))
        np.testing.assert_array_equal(m1.label_embeddings, m2.label_embeddings)

    def test_pattern_changes_embeddings(self):
        enc = HashEncoder(dim=64, seed=0)
        ident = build_zero_shot(enc, labels_of("terrible", "great"))
        patt = build_zero_shot(
            enc, labels_of("terrible", "great"), HypothesisPattern(template="It was {}.")
        )
        assert not np.array_equal(ident.label_embeddings, patt.label_embeddings)

    def test_dim_mismatch_rejected(self):
        enc = HashEncoder(dim=8, seed=0)
        with pytest.raises(ValueError, match="dim"):
            with_label_embeddings(enc, labels_of("a"), np.zeros((1, 9)))


class TestClassify:
    def test_axis_aligned(self):
        store = EmbeddingStore({"x": [5.0, 1.0]})
        model = with_label_embeddings(store, labels_of("first", "second"), np.eye(2))
        pred = classify(model, "x")
        assert pred.predicted == 0
        np.testing.assert_array_equal(pred.scores, [5.0, 1.0])

    def test_zero_vector_tie_break(self):
        store = EmbeddingStore({"x": [0.0, 0.0]})
        model = with_label_embeddings(store, labels_of("a", "b"), np.eye(2))
        pred = classify(model, "x")
        assert pred.predicted == 0
        np.testing.assert_array_equal(pred.scores, [0.0, 0.0])

    def test_one_encoder_call(self):
        enc = CountingEncoder(HashEncoder(dim=8, seed=0))
        model = with_label_embeddings(enc, labels_of("a", "b"), np.zeros((2, 8)))
        classify(model, "anything")
        assert enc.calls == 1

    def test_probabilities_sum_to_one(self):
        enc = HashEncoder(dim=32, seed=1)
        model = build_zero_shot(enc, labels_of("a", "b", "c"))
        pred = classify(model, "some input text")
        assert abs(pred.probabilities.sum() - 1.0) <= 1e-9
        assert np.argmax(pred.probabilities) == np.argmax(pred.scores)

    def test_separable_clusters_perfect_f1(self):
        task = make_separable_task(ClusterSpec(3, 8, 100, noise_sigma=0.0, seed=0))
        store = EmbeddingStore({str(i): task.X[i] for i in range(task.X.shape[0])})
        model = with_label_embeddings(store, labels_of("a", "b", "c"), task.label_embeddings)
        preds = [classify(model, str(i)).predicted for i in range(task.X.shape[0])]
        assert macro_f1(task.z, preds, 3).macro_f1 == 1.0

    def test_scale_invariance_of_prediction(self):
        rng = np.random.default_rng(2)
        X = rng.standard_normal((50, 6))
        Y = rng.standard_normal((4, 6))
        np.testing.assert_array_equal(predict_indices(X, Y), predict_indices(X, 3.7 * Y))

    def test_cosine_mode(self):
        store = EmbeddingStore({"x": [2.0, 0.0]})
        Y = np.array([[10.0, 0.0], [0.5, 0.5]])
        plain = classify(with_label_embeddings(store, labels_of("a", "b"), Y), "x")
        cos = classify(with_label_embeddings(store, labels_of("a", "b"), Y, cosine=True), "x")
        np.testing.assert_array_equal(plain.scores, [20.0, 1.0])
        np.testing.assert_allclose(cos.scores, [1.0, np.sqrt(0.5)], rtol=0, atol=1e-12)


class TestClassifyBatch:
    def test_encoder_call_complexity(self):
        for num_inputs, num_labels in [(10, 2), (10, 100), (1, 1), (7, 5)]:
            enc = CountingEncoder(HashEncoder(dim=128, seed=0))
            labels = labels_of(*[f"l{i}" for i in range(num_labels)])
            model = build_zero_shot(enc, labels)
            assert enc.calls == num_labels
            classify_batch(model, [f"text {i}" for i in range(num_inputs)])
            assert enc.calls == num_inputs + num_labels

    def test_empty_batch(self):
        model = build_zero_shot(HashEncoder(dim=8, seed=0), labels_of("a"))
        assert classify_batch(model, []) == []

    def test_batch_equals_loop(self):
        enc = HashEncoder(dim=32, seed=3)
        model = build_zero_shot(enc, labels_of("a", "b", "c"))
        texts = [f"input number {i}" for i in range(9)]
        batch = classify_batch(model, texts)
        for text, pred in zip(texts, batch):
            single = classify(model, text)
            assert single.predicted == pred.predicted
            np.testing.assert_array_equal(single.scores, pred.scores)

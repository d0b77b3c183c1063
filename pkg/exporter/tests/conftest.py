"""Shared fixtures: a tiny offline word-embedding sentence model and a
3-class sentiment sample, so no test needs network access."""

import numpy as np
import pytest

try:
    from sentence_transformers.sentence_transformer.modules import Pooling, WordEmbeddings
except ImportError:  # older layout
    from sentence_transformers.models import Pooling, WordEmbeddings
from sentence_transformers import SentenceTransformer

DIM = 8

CLASS_WORDS = {
    "negative": ["bad", "awful", "terrible", "horrible", "disappointing"],
    "neutral": ["okay", "average", "ordinary", "plain", "passable"],
    "positive": ["good", "great", "excellent", "wonderful", "amazing"],
}
FILLER = ["the", "movie", "food", "service", "was", "it", "really", "quite", "this", "felt"]


def build_vocab():
    rng = np.random.default_rng(0)
    directions = {"negative": 0, "neutral": 1, "positive": 2}
    vocab = {}
    for name, axis in directions.items():
        center = np.zeros(DIM)
        center[axis] = 1.0
        vocab[name] = center.copy()
        for word in CLASS_WORDS[name]:
            vocab[word] = center + 0.1 * rng.standard_normal(DIM)
    for word in FILLER:
        vocab[word] = 0.05 * rng.standard_normal(DIM)
    return vocab


@pytest.fixture(scope="session")
def model_dir(tmp_path_factory):
    """A saved sentence-transformers model (word embeddings + mean pooling)."""
    root = tmp_path_factory.mktemp("model")
    vocab_path = root / "vocab.txt"
    with open(vocab_path, "w", encoding="utf-8") as f:
        for word, vec in build_vocab().items():
            f.write(word + " " + " ".join(repr(float(x)) for x in vec) + "\n")
    word_emb = WordEmbeddings.from_text_file(str(vocab_path))
    try:
        width = word_emb.get_word_embedding_dimension()
    except AttributeError:
        width = word_emb.get_embedding_dimension()
    model = SentenceTransformer(modules=[word_emb, Pooling(width, pooling_mode="mean")])
    out = root / "tiny-sentiment-model"
    model.save(str(out))
    return str(out)


def sentiment_sample(per_label_train=8, per_label_test=10):
    """Deterministic 3-class sentiment texts: (train_rows, test_rows)."""
    templates = [
        "the movie was {}",
        "this food felt {}",
        "it was really {}",
        "quite {} service",
        "the service was {} really",
        "this movie felt quite {}",
        "it really was {}",
        "the food was {} quite",
        "{} movie it was",
        "really {} this felt",
    ]
    train, test = [], []
    for label, words in CLASS_WORDS.items():
        rows = []
        for i in range(per_label_train + per_label_test):
            word = words[i % len(words)]
            text = templates[i % len(templates)].format(word)
            rows.append((text, label))
        train.extend(rows[:per_label_train])
        test.extend(rows[per_label_train:])
    return train, test


@pytest.fixture(scope="session")
def sentiment_files(tmp_path_factory):
    """labels.tsv / train.tsv / test.tsv for the 3-class sentiment sample."""
    root = tmp_path_factory.mktemp("sentiment")
    train, test = sentiment_sample()
    paths = {
        "labels": str(root / "labels.tsv"),
        "train": str(root / "train.tsv"),
        "test": str(root / "test.tsv"),
    }
    with open(paths["labels"], "w", encoding="utf-8") as f:
        f.write("negative\nneutral\npositive\n")
    for key, rows in (("train", train), ("test", test)):
        with open(paths[key], "w", encoding="utf-8") as f:
            for text, label in rows:
                f.write(f"{text}\t{label}\n")
    return paths

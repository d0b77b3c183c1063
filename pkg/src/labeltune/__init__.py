"""Zero-shot and few-shot text classification by tuning label embeddings.

Inputs and label descriptions are embedded by a shared frozen encoder;
classification is the argmax of dot-product similarities. Few-shot
adaptation touches only the K x d label-embedding matrix, optionally
boosted by knowledge distillation on unlabeled data or refined with an
anchored clustering pass. The evaluation harness covers stratified
episode sampling, macro-F1, bootstrap deviations and Welch's t-test.
"""

from .core import dot_similarity, mean_pool, score_matrix, softmax_rows
from .distill import SilverSet, build_silver_set, distill_labels, matrix_teacher
from .encoders import (
    AveragingEncoder,
    CountingEncoder,
    EmbeddingStore,
    Encoder,
    HashEncoder,
    MissingEmbeddingError,
)
from .evaluation import (
    EvalReport,
    SignificanceVerdict,
    bootstrap_std,
    compare_runs,
    macro_f1,
    sample_episode,
    welch_t_test,
)
from .refine import RefinementConfig, refine_labels
from .synthetic import ClusterSpec, make_separable_task, make_unbalanced_variant
from .tuning import (
    DivergenceError,
    FewShotSet,
    TunedLabels,
    TuningConfig,
    batch_softmax_loss,
    build_label_batches,
    cross_validate,
    default_grid,
    lt_gradient,
    lt_objective,
    sample_dropout_mask,
    tune_labels,
)
from .verbalizer import HypothesisPattern, InvalidPatternError, Label, LabelSet, render_hypotheses
from .zeroshot import ZeroShotModel, build_zero_shot, classify, classify_batch, predict_indices

__version__ = "0.1.0"

__all__ = [
    "AveragingEncoder",
    "ClusterSpec",
    "CountingEncoder",
    "DivergenceError",
    "EmbeddingStore",
    "Encoder",
    "EvalReport",
    "FewShotSet",
    "HashEncoder",
    "HypothesisPattern",
    "InvalidPatternError",
    "Label",
    "LabelSet",
    "MissingEmbeddingError",
    "RefinementConfig",
    "SignificanceVerdict",
    "SilverSet",
    "TunedLabels",
    "TuningConfig",
    "ZeroShotModel",
    "batch_softmax_loss",
    "bootstrap_std",
    "build_label_batches",
    "build_silver_set",
    "build_zero_shot",
    "classify",
    "classify_batch",
    "compare_runs",
    "cross_validate",
    "default_grid",
    "distill_labels",
    "dot_similarity",
    "lt_gradient",
    "lt_objective",
    "macro_f1",
    "make_separable_task",
    "make_unbalanced_variant",
    "matrix_teacher",
    "mean_pool",
    "predict_indices",
    "refine_labels",
    "render_hypotheses",
    "sample_dropout_mask",
    "sample_episode",
    "score_matrix",
    "softmax_rows",
    "tune_labels",
    "welch_t_test",
]

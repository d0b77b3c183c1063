"""Command-line surface: embed, zeroshot, tune, distill, refine, evaluate, bench.

Exit codes: 0 success, 1 usage error, 2 data/format error, 3 numerical
divergence. All randomness flows from explicit ``--seed`` flags, so
rerunning any command with the same arguments produces byte-identical
output files.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

import numpy as np

from . import fileio
from .distill import (
    build_silver_set,
    cross_validate_distill,
    distill_labels,
    matrix_teacher,
)
from .encoders import (
    AveragingEncoder,
    CountingEncoder,
    EmbeddingStore,
    Encoder,
    HashEncoder,
    MissingEmbeddingError,
)
from .evaluation import (
    SignificanceVerdict,
    UndefinedTestError,
    bootstrap_std,
    macro_f1,
    sample_episode,
    welch_t_test,
)
from .refine import RefinementConfig, refine_labels
from .report import ModelResult, render_figures, report_document, write_report_json, write_report_tsv
from .tuning import (
    DivergenceError,
    FewShotSet,
    TunedLabels,
    TuningConfig,
    cross_validate,
    default_grid,
    tune_labels,
)
from .verbalizer import InvalidPatternError, LabelSet, inline_pattern, render_hypotheses
from .zeroshot import build_zero_shot, predict_indices, score_against_labels
from .core import softmax_rows

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DIVERGENCE = 3

MODEL_SPECS = ("zeroshot", "lt", "lt-dist", "lr")


class UsageError(Exception):
    """Bad flags or flag combinations."""


def make_encoder(spec: str) -> Encoder:
    """Resolve ``toy:dim:seed``, ``wordvec:table[:stopwords]`` or ``store:path``."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "toy":
            dim_s, _, seed_s = rest.partition(":")
            return HashEncoder(dim=int(dim_s), seed=int(seed_s) if seed_s else 0)
        if kind == "wordvec":
            table_path, _, stop_path = rest.partition(":")
            table = fileio.read_word_table(table_path)
            stops = fileio.read_stopwords(stop_path) if stop_path else frozenset()
            return AveragingEncoder(table, stops)
        if kind == "store":
            return load_store(rest)
    except ValueError as exc:
        raise UsageError(f"bad encoder spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown encoder spec {spec!r} (expected toy:|wordvec:|store:)")


def load_store(path: str) -> EmbeddingStore:
    """Embedding store from an EMB1 file keyed by its sidecar ids."""
    matrix, ids = fileio.read_embeddings(path)
    entries: dict[str, np.ndarray] = {}
    for text_id, row in zip(ids, matrix):
        if text_id in entries and not np.array_equal(entries[text_id], row):
            raise fileio.FormatError(
                f"{path}: duplicate id {text_id!r} with conflicting vectors"
            )
        entries[text_id] = row
    return EmbeddingStore(entries, dim=matrix.shape[1])


def _resolve_pattern(args, labels: LabelSet):
    mode = getattr(args, "hypotheses", "identity")
    if mode == "identity":
        return None
    if mode == "inline":
        return inline_pattern(labels)
    if mode == "pattern":
        if not getattr(args, "pattern", None):
            raise UsageError("--hypotheses pattern requires --pattern FILE")
        return fileio.read_pattern(args.pattern)
    raise UsageError(f"unknown hypotheses mode {mode!r}")


def _resolve_label_embeddings(args, labels: LabelSet, expect_dim: int | None) -> np.ndarray:
    """Initial label matrix from a file or by encoding the rendered hypotheses."""
    if getattr(args, "label_embeddings", None):
        Y0, _ = fileio.read_embeddings(args.label_embeddings)
        if Y0.shape[0] != labels.size:
            raise fileio.FormatError(
                f"{args.label_embeddings}: {Y0.shape[0]} rows for {labels.size} labels"
            )
    else:
        if not getattr(args, "encoder", None):
            raise UsageError("need --label-embeddings FILE or --encoder SPEC")
        encoder = make_encoder(args.encoder)
        pattern = _resolve_pattern(args, labels)
        Y0 = build_zero_shot(encoder, labels, pattern).label_embeddings
    if expect_dim is not None and Y0.shape[1] != expect_dim:
        raise fileio.FormatError(
            f"label embeddings dim {Y0.shape[1]} != input dim {expect_dim}"
        )
    return Y0


def _read_aligned(dataset_path: str, embeddings_path: str, labels: LabelSet):
    texts, z = fileio.read_dataset(dataset_path, labels)
    X, _ = fileio.read_embeddings(embeddings_path)
    if X.shape[0] != len(texts):
        raise fileio.FormatError(
            f"{embeddings_path} has {X.shape[0]} rows, {dataset_path} has {len(texts)} examples"
        )
    return texts, z, X


def _grid_or_config(args, seed: int):
    """Return (config, grid): an explicit config skips cross-validation."""
    if getattr(args, "config", None):
        try:
            return fileio.parse_config_string(args.config, seed=seed), None
        except ValueError as exc:
            raise UsageError(f"bad --config: {exc}") from exc
    if getattr(args, "grid", None):
        return None, fileio.read_grid(args.grid, seed=seed)
    return None, default_grid(seed)


def _write_json(path: str | None, document) -> None:
    text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands


def cmd_embed(args) -> int:
    if args.plain:
        texts = fileio.read_plain_texts(args.input)
    else:
        if not args.labels:
            raise UsageError("dataset input needs --labels (or pass --plain)")
        labels = fileio.read_label_set(args.labels)
        texts, _ = fileio.read_dataset(args.input, labels)
    encoder = make_encoder(args.encoder)
    matrix = encoder.encode_batch(texts)
    fileio.write_embeddings(args.out, matrix, texts)
    logger.info("embedded %d texts at dim %d -> %s", len(texts), encoder.dim, args.out)
    return EXIT_OK


def cmd_zeroshot(args) -> int:
    X, ids = fileio.read_embeddings(args.inputs)
    if args.tuned:
        tuned, labels = fileio.read_tuned_labels(args.tuned)
        Y = tuned.Y
    else:
        if not args.labels:
            raise UsageError("need --labels (or --tuned DIR)")
        labels = fileio.read_label_set(args.labels)
        Y = _resolve_label_embeddings(args, labels, expect_dim=None)
    if X.shape[0] and X.shape[1] != Y.shape[1]:
        raise fileio.FormatError(
            f"input dim {X.shape[1]} != label embedding dim {Y.shape[1]}"
        )
    names = labels.names
    predictions = []
    for text_id, x in zip(ids, X):
        scores = score_against_labels(x, Y, cosine=args.cosine)
        probs = softmax_rows(scores[None, :])[0]
        k = int(np.argmax(scores))
        predictions.append(
            {
                "id": text_id,
                "predicted": names[k],
                "predicted_index": k,
                "scores": [float(s) for s in scores],
                "probabilities": [float(p) for p in probs],
            }
        )
    _write_json(args.out, {"labels": names, "predictions": predictions})
    return EXIT_OK


def cmd_tune(args) -> int:
    labels = fileio.read_label_set(args.labels)
    texts, z, X = _read_aligned(args.train, args.train_embeddings, labels)
    counts = np.bincount(z, minlength=labels.size)
    missing = [labels.names[k] for k in range(labels.size) if counts[k] == 0]
    if missing:
        raise fileio.FormatError(f"labels without training examples: {missing}")
    Y0 = _resolve_label_embeddings(args, labels, expect_dim=X.shape[1])
    data = FewShotSet(X, z)

    config, grid = _grid_or_config(args, args.seed)
    if config is not None:
        tuned = tune_labels(data, Y0, config)
    else:
        result = cross_validate(data, Y0, grid, folds=args.folds, seed=args.seed)
        tuned = result.model
        tuned.provenance["cv"] = {
            "folds": args.folds,
            "seed": args.seed,
            "configs": len(grid),
            "flagged_labels": [labels.names[k] for k in result.flagged_labels],
        }
        logger.info(
            "cross-validation selected lr=%g epochs=%d reg=%g dropout=%g",
            result.best.learning_rate, result.best.epochs,
            result.best.reg_coefficient, result.best.dropout_rate,
        )
    fileio.write_tuned_labels(args.out, tuned, labels)
    return EXIT_OK


def cmd_distill(args) -> int:
    if args.teacher:
        teacher_tuned, labels = fileio.read_tuned_labels(args.teacher)
        teacher_Y = teacher_tuned.Y
        Y0 = np.asarray(teacher_tuned.Y0)
    else:
        if not (args.teacher_embeddings and args.labels):
            raise UsageError("need --teacher DIR or --teacher-embeddings FILE with --labels")
        labels = fileio.read_label_set(args.labels)
        teacher_Y, _ = fileio.read_embeddings(args.teacher_embeddings)
        if teacher_Y.shape[0] != labels.size:
            raise fileio.FormatError(
                f"{args.teacher_embeddings}: {teacher_Y.shape[0]} rows for {labels.size} labels"
            )
        Y0 = teacher_Y
    if args.init_embeddings:
        Y0, _ = fileio.read_embeddings(args.init_embeddings)

    unlabeled, _ = fileio.read_embeddings(args.unlabeled)
    silver = build_silver_set(
        matrix_teacher(teacher_Y), unlabeled, cap=args.cap, sample_seed=args.sample_seed
    )
    config, grid = _grid_or_config(args, args.seed)
    if config is not None:
        student = distill_labels(silver, Y0, config)
    else:
        student = cross_validate_distill(silver, Y0, grid, folds=args.folds, seed=args.seed).model
    student.provenance["silver_cap"] = args.cap
    fileio.write_tuned_labels(args.out, student, labels)
    return EXIT_OK


def cmd_refine(args) -> int:
    if args.labels_dir:
        tuned, labels = fileio.read_tuned_labels(args.labels_dir)
        Y = tuned.Y
    else:
        if not args.label_embeddings:
            raise UsageError("need --labels-dir DIR or --label-embeddings FILE")
        Y, names = fileio.read_embeddings(args.label_embeddings)
        labels = LabelSet.from_names(names)
    unlabeled, _ = fileio.read_embeddings(args.unlabeled)
    config = RefinementConfig(
        max_iters=args.iters, anchor_weight=args.alpha, cap=args.cap, seed=args.seed
    )
    refined = refine_labels(Y, unlabeled, config)
    fileio.write_tuned_labels(args.out, refined, labels)
    return EXIT_OK


def _evaluate_model_spec(
    spec: str, labels: LabelSet, Y0, X_train, z_train, X_test, z_test, args
) -> ModelResult:
    num_labels = labels.size
    n = args.n_per_label

    def test_report(Y):
        pred = predict_indices(X_test, Y, cosine=args.cosine)
        return macro_f1(z_test, pred, num_labels), pred

    if spec == "lr":
        if X_train is None:
            raise UsageError("model 'lr' needs --train-embeddings as the unlabeled pool")
        refined = refine_labels(
            Y0, X_train,
            RefinementConfig(max_iters=args.iters, anchor_weight=args.alpha,
                             cap=args.cap, seed=args.seed),
        )
        report, pred = test_report(refined.Y)
        std = bootstrap_std(z_test, pred, num_labels,
                            resamples=args.resamples, seed=args.seed)
        return ModelResult(spec, 0, [report.macro_f1], report.macro_f1, std,
                           "bootstrap", report, labels.names)

    if spec == "zeroshot" or n == 0:
        report, pred = test_report(Y0)
        std = bootstrap_std(z_test, pred, num_labels,
                            resamples=args.resamples, seed=args.seed)
        return ModelResult(spec, 0, [report.macro_f1], report.macro_f1, std,
                           "bootstrap", report, labels.names)

    if X_train is None or z_train is None:
        raise UsageError(f"model {spec!r} needs --train and --train-embeddings")
    config, grid = _grid_or_config(args, args.seed)
    scores = []
    last_report = None
    for run_seed in range(args.runs):
        episode = sample_episode(z_train, num_labels, n, seed=run_seed)
        few = FewShotSet(X_train[episode.train_indices], z_train[episode.train_indices])
        if config is not None:
            tuned = tune_labels(few, Y0, config)
        else:
            tuned = cross_validate(few, Y0, grid, folds=args.folds, seed=args.seed).model
        Y = tuned.Y
        if spec == "lt-dist":
            silver = build_silver_set(matrix_teacher(Y), X_train, cap=args.cap)
            student_config = config if config is not None else tuned.config_used
            Y = distill_labels(silver, Y0, student_config).Y
        report, _ = test_report(Y)
        scores.append(report.macro_f1)
        last_report = report
        logger.info("model=%s run=%d macro_f1=%.4f", spec, run_seed, report.macro_f1)
    mean = float(np.mean(scores))
    std = float(np.std(scores, ddof=1)) if len(scores) > 1 else 0.0
    return ModelResult(spec, n, scores, mean, std, "runs", last_report, labels.names)


def cmd_evaluate(args) -> int:
    labels = fileio.read_label_set(args.labels)
    gold_texts, z_test = fileio.read_dataset(args.test, labels)

    if args.pred:
        with open(args.pred, encoding="utf-8") as f:
            doc = json.load(f)
        pred = np.asarray([p["predicted_index"] for p in doc["predictions"]], dtype=np.int64)
        if pred.shape[0] != z_test.shape[0]:
            raise fileio.FormatError(
                f"{args.pred} has {pred.shape[0]} predictions for {z_test.shape[0]} examples"
            )
        report = macro_f1(z_test, pred, labels.size)
        std = bootstrap_std(z_test, pred, labels.size,
                            resamples=args.resamples, seed=args.seed)
        results = [ModelResult("predictions", 0, [report.macro_f1], report.macro_f1,
                               std, "bootstrap", report, labels.names)]
        verdict = None
    else:
        if not args.model:
            raise UsageError("need --pred FILE or at least one --model SPEC")
        X_test, _ = fileio.read_embeddings(args.test_embeddings)
        if X_test.shape[0] != z_test.shape[0]:
            raise fileio.FormatError(
                f"{args.test_embeddings} has {X_test.shape[0]} rows, "
                f"{args.test} has {z_test.shape[0]} examples"
            )
        X_train = z_train = None
        if args.train and args.train_embeddings:
            _, z_train, X_train = _read_aligned(args.train, args.train_embeddings, labels)
        elif args.train_embeddings:
            X_train, _ = fileio.read_embeddings(args.train_embeddings)
        Y0 = _resolve_label_embeddings(args, labels, expect_dim=X_test.shape[1])
        results = [
            _evaluate_model_spec(spec, labels, Y0, X_train, z_train, X_test, z_test, args)
            for spec in args.model
        ]
        verdict = None
        if len(results) == 2 and len(results[0].run_scores) >= 2 and len(results[1].run_scores) >= 2:
            try:
                verdict = welch_t_test(results[0].run_scores, results[1].run_scores)
            except UndefinedTestError:
                # zero combined variance: equal constant runs are trivially
                # indistinguishable, different constants trivially distinct
                equal = results[0].mean == results[1].mean
                verdict = SignificanceVerdict(
                    t_statistic=0.0,
                    degrees_of_freedom=0.0,
                    p_value=1.0 if equal else 0.0,
                    significant=not equal,
                )

    document = report_document(results, verdict)
    _write_json(args.out, document)
    if args.tsv:
        write_report_tsv(args.tsv, results)
    if args.figures:
        for path in render_figures(args.figures, results):
            logger.info("wrote figure %s", path)
    return EXIT_OK


def cmd_bench(args) -> int:
    base = make_encoder(args.encoder)
    texts = fileio.read_plain_texts(args.inputs)
    tokens = sum(len(t.split()) for t in texts)
    runs = []
    for num_labels in args.label_counts:
        counting = CountingEncoder(base)
        label_set = LabelSet.from_names([f"label_{i}" for i in range(num_labels)])
        model = build_zero_shot(counting, label_set)
        build_calls = counting.calls
        start = time.perf_counter()
        for text in texts:
            x = counting.encode(text)
            score_against_labels(x, model.label_embeddings)
        elapsed = time.perf_counter() - start
        input_calls = counting.calls - build_calls
        expected = len(texts) + num_labels
        if build_calls != num_labels or input_calls != len(texts) or counting.calls != expected:
            raise RuntimeError(
                f"encoder call count violated: build={build_calls}, "
                f"inputs={input_calls}, total={counting.calls}, expected={expected}"
            )
        runs.append(
            {
                "num_labels": num_labels,
                "label_encode_calls": build_calls,
                "input_encode_calls": input_calls,
                "total_calls": counting.calls,
                "expected_calls": expected,
                "elapsed_seconds": elapsed,
                "tokens_per_second": tokens / elapsed if elapsed > 0 and tokens else 0.0,
            }
        )
    _write_json(args.out, {"encoder": args.encoder, "inputs": len(texts),
                           "tokens": tokens, "runs": runs})
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _comma_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="labeltune",
                     description="Few-shot text classification by tuning label embeddings.")
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_hypothesis_flags(p):
        p.add_argument("--hypotheses", choices=("identity", "pattern", "inline"),
                       default="identity", help="how label texts are produced")
        p.add_argument("--pattern", help="hypothesis pattern file")

    p = sub.add_parser("embed", help="encode texts into an embedding file")
    p.add_argument("--input", required=True, help="dataset TSV or plain text file")
    p.add_argument("--plain", action="store_true", help="input is one text per line")
    p.add_argument("--labels", help="label-set file (for dataset input)")
    p.add_argument("--encoder", required=True, help="toy:dim:seed | wordvec:table[:stop] | store:path")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("zeroshot", help="classify precomputed input embeddings")
    p.add_argument("--inputs", required=True, help="EMB1 file of input embeddings")
    p.add_argument("--labels", help="label-set file")
    p.add_argument("--tuned", help="tuned-labels directory (skips label encoding)")
    p.add_argument("--label-embeddings", help="EMB1 file of precomputed label embeddings")
    p.add_argument("--encoder", help="encoder for label texts")
    p.add_argument("--cosine", action="store_true", help="normalize before scoring")
    add_hypothesis_flags(p)
    p.add_argument("--out", help="predictions JSON (stdout when omitted)")
    p.set_defaults(func=cmd_zeroshot)

    p = sub.add_parser("tune", help="tune label embeddings on a few-shot set")
    p.add_argument("--train", required=True, help="dataset TSV")
    p.add_argument("--train-embeddings", required=True, help="EMB1 aligned with --train")
    p.add_argument("--labels", required=True)
    p.add_argument("--label-embeddings", help="initial label matrix Y0")
    p.add_argument("--encoder", help="encoder for label texts when no --label-embeddings")
    add_hypothesis_flags(p)
    p.add_argument("--grid", help="grid file (default: built-in 16-config grid)")
    p.add_argument("--config", help="lr=..,epochs=..,reg=..,dropout=.. (skips CV)")
    p.add_argument("--folds", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output tuned-labels directory")
    p.set_defaults(func=cmd_tune)

    p = sub.add_parser("distill", help="distill a teacher into fresh label embeddings")
    p.add_argument("--teacher", help="tuned-labels directory of the teacher")
    p.add_argument("--teacher-embeddings", help="EMB1 label matrix acting as teacher")
    p.add_argument("--labels", help="label-set file (with --teacher-embeddings)")
    p.add_argument("--init-embeddings", help="student initialization (default: teacher Y0)")
    p.add_argument("--unlabeled", required=True, help="EMB1 pool of unlabeled inputs")
    p.add_argument("--cap", type=int, default=10_000, help="silver-set size cap")
    p.add_argument("--sample-seed", type=int, default=None,
                   help="sample the pool instead of taking the first rows")
    p.add_argument("--grid", help="grid file")
    p.add_argument("--config", help="explicit config (skips agreement CV)")
    p.add_argument("--folds", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_distill)

    p = sub.add_parser("refine", help="unsupervised anchored k-means refinement")
    p.add_argument("--labels-dir", help="tuned-labels directory to refine")
    p.add_argument("--label-embeddings", help="EMB1 label matrix to refine")
    p.add_argument("--unlabeled", required=True)
    p.add_argument("--alpha", type=float, default=0.5, help="anchor weight toward Y0")
    p.add_argument("--iters", type=int, default=50)
    p.add_argument("--cap", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("evaluate", help="episode evaluation with mean/std and significance")
    p.add_argument("--test", required=True, help="test dataset TSV")
    p.add_argument("--test-embeddings", help="EMB1 aligned with --test")
    p.add_argument("--labels", required=True)
    p.add_argument("--pred", help="score an existing predictions JSON instead of a model")
    p.add_argument("--model", action="append", choices=MODEL_SPECS,
                   help="model spec; repeat once to compare two")
    p.add_argument("--train", help="training dataset TSV for episodes")
    p.add_argument("--train-embeddings", help="EMB1 aligned with --train")
    p.add_argument("--label-embeddings", help="initial label matrix Y0")
    p.add_argument("--encoder", help="encoder for label texts")
    add_hypothesis_flags(p)
    p.add_argument("--runs", type=int, default=5, help="episodes (seeds 0..runs-1)")
    p.add_argument("--n-per-label", type=int, default=8)
    p.add_argument("--grid", help="grid file")
    p.add_argument("--config", help="explicit config (skips CV)")
    p.add_argument("--folds", type=int, default=4)
    p.add_argument("--resamples", type=int, default=1000, help="bootstrap resamples")
    p.add_argument("--alpha", type=float, default=0.5, help="refinement anchor weight")
    p.add_argument("--iters", type=int, default=50, help="refinement iterations")
    p.add_argument("--cap", type=int, default=10_000, help="unlabeled pool cap")
    p.add_argument("--cosine", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="report JSON (stdout when omitted)")
    p.add_argument("--tsv", help="summary table TSV")
    p.add_argument("--figures", help="directory for rendered figures")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("bench", help="encoder-call accounting and throughput")
    p.add_argument("--encoder", required=True)
    p.add_argument("--inputs", required=True, help="plain text file, one input per line")
    p.add_argument("--label-counts", type=_comma_ints, default=[2, 10, 100])
    p.add_argument("--out", help="throughput JSON (stdout when omitted)")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"labeltune: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidPatternError as exc:
        print(f"labeltune: invalid pattern: {exc}", file=sys.stderr)
        return EXIT_DATA
    except DivergenceError as exc:
        print(f"labeltune: {exc}", file=sys.stderr)
        return EXIT_DIVERGENCE
    except MissingEmbeddingError as exc:
        print(f"labeltune: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (fileio.FormatError, ValueError, OSError, KeyError) as exc:
        print(f"labeltune: {exc}", file=sys.stderr)
        return EXIT_DATA


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

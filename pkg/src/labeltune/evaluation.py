"""Evaluation protocol: macro-F1, episode sampling, bootstrap, Welch's t-test.

Macro-F1 averages per-class F1 over the task's full label set, so
classes absent from both gold and predictions still contribute a zero.
Significance testing uses Welch's unequal-variance t statistic with
Welch-Satterthwaite degrees of freedom and a two-sided p-value computed
through our own continued-fraction regularized incomplete beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


class UndefinedTestError(ValueError):
    """Raised when a significance test is not defined for the samples."""


@dataclass
class ClassScores:
    precision: float
    recall: float
    f1: float
    support: int  # gold occurrences of the class


@dataclass
class EvalReport:
    per_class: list[ClassScores]
    macro_f1: float
    std: float | None = None
    n_runs: int = 1


@dataclass
class SignificanceVerdict:
    t_statistic: float
    degrees_of_freedom: float
    p_value: float
    significant: bool  # p_value < 0.05


@dataclass
class Episode:
    n_per_label: int
    seed: int
    train_indices: np.ndarray
    flagged_labels: list[int]  # labels with fewer than n_per_label examples


@dataclass
class RunComparison:
    mean_a: float
    std_a: float
    mean_b: float
    std_b: float
    verdict: SignificanceVerdict
    formatted_a: str
    formatted_b: str


def _as_label_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D")
    return arr


def macro_f1(gold, pred, num_labels: int) -> EvalReport:
    """Per-class precision/recall/F1 and their unweighted mean over all classes."""
    g = _as_label_array(gold, "gold")
    p = _as_label_array(pred, "pred")
    if g.shape[0] != p.shape[0]:
        raise ValueError(f"gold and pred lengths differ: {g.shape[0]} vs {p.shape[0]}")
    if g.shape[0] < 1:
        raise ValueError("need at least one example")
    for arr, name in ((g, "gold"), (p, "pred")):
        if arr.min() < 0 or arr.max() >= num_labels:
            raise ValueError(f"{name} contains indices outside 0..{num_labels - 1}")

    per_class = []
    for k in range(num_labels):
        tp = int(np.sum((p == k) & (g == k)))
        fp = int(np.sum((p == k) & (g != k)))
        fn = int(np.sum((p != k) & (g == k)))
        precision = tp / (tp + fp) if tp + fp > 0 else 0.0
        recall = tp / (tp + fn) if tp + fn > 0 else 0.0
        f1 = 2.0 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
        per_class.append(ClassScores(precision, recall, f1, support=tp + fn))
    macro = float(np.mean([c.f1 for c in per_class]))
    return EvalReport(per_class=per_class, macro_f1=macro)


def sample_episode(labels, num_labels: int, n_per_label: int, seed: int) -> Episode:
    """Stratified sample without replacement: per-label shuffle, take first n.

    Labels with fewer than ``n_per_label`` examples contribute everything
    they have and are flagged. Deterministic given the seed.
    """
    z = _as_label_array(labels, "labels")
    rng = np.random.default_rng(seed)
    picks = []
    flagged = []
    for k in range(num_labels):
        idx = np.flatnonzero(z == k)
        if idx.size == 0:
            raise ValueError(f"label {k} has no examples to sample from")
        if idx.size < n_per_label:
            flagged.append(k)
        perm = rng.permutation(idx)
        picks.append(perm[:n_per_label])
    train = np.concatenate(picks) if picks else np.zeros(0, dtype=np.int64)
    return Episode(n_per_label=n_per_label, seed=seed, train_indices=train,
                   flagged_labels=flagged)


def bootstrap_std(gold, pred, num_labels: int, resamples: int = 1000, seed: int = 0) -> float:
    """Sample standard deviation of macro-F1 over with-replacement resamples."""
    if resamples < 2:
        raise ValueError(f"resamples must be >= 2, got {resamples}")
    g = _as_label_array(gold, "gold")
    p = _as_label_array(pred, "pred")
    if g.shape[0] != p.shape[0] or g.shape[0] < 1:
        raise ValueError("gold and pred must be non-empty aligned lists")
    rng = np.random.default_rng(seed)
    n = g.shape[0]
    scores = np.empty(resamples)
    for r in range(resamples):
        take = rng.integers(0, n, size=n)
        scores[r] = macro_f1(g[take], p[take], num_labels).macro_f1
    return float(np.std(scores, ddof=1))


def _beta_continued_fraction(a: float, b: float, x: float,
                             tol: float = 1e-12, max_iter: int = 500) -> float:
    """Lentz's continued fraction for the incomplete beta integral."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    raise ArithmeticError(f"incomplete beta did not converge for a={a}, b={b}, x={x}")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b), converged to 1e-12; satisfies I_x(a,b) + I_{1-x}(b,a) = 1."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError("a and b must be positive")
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (
        math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    front = math.exp(ln_front)
    # the continued fraction converges fast only on one side of the mean
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def student_t_two_sided_p(t: float, df: float) -> float:
    """P(|T_df| >= |t|) via the incomplete-beta form of the Student-t CDF."""
    if df <= 0.0:
        raise ValueError("degrees of freedom must be positive")
    if t == 0.0:
        return 1.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def welch_t_test(sample_a: Sequence[float], sample_b: Sequence[float]) -> SignificanceVerdict:
    """Two-sided Welch's t-test; significant at p < 0.05."""
    a = np.asarray(sample_a, dtype=np.float64)
    b = np.asarray(sample_b, dtype=np.float64)
    if a.size < 2 or b.size < 2:
        raise UndefinedTestError("each sample needs at least 2 values")
    va = float(np.var(a, ddof=1))
    vb = float(np.var(b, ddof=1))
    if va + vb == 0.0:
        raise UndefinedTestError("combined variance is zero")
    na, nb = a.size, b.size
    se2 = va / na + vb / nb
    t = float((a.mean() - b.mean()) / math.sqrt(se2))
    df = se2 ** 2 / ((va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1))
    p = student_t_two_sided_p(t, df)
    return SignificanceVerdict(
        t_statistic=t, degrees_of_freedom=float(df), p_value=p, significant=p < 0.05
    )


def format_mean_std(mean: float, std: float) -> str:
    """Table-style cell ``mean_{std}`` with one decimal each."""
    return f"{mean:.1f}_{{{std:.1f}}}"


def compare_runs(scores_a: Sequence[float], scores_b: Sequence[float]) -> RunComparison:
    """Means, unbiased stds and a Welch verdict for two sets of run scores.

    The formatted cells follow the conventional percentage presentation,
    scaling fractional macro-F1 values by 100.
    """
    a = np.asarray(scores_a, dtype=np.float64)
    b = np.asarray(scores_b, dtype=np.float64)
    verdict = welch_t_test(a, b)
    return RunComparison(
        mean_a=float(a.mean()), std_a=float(np.std(a, ddof=1)),
        mean_b=float(b.mean()), std_b=float(np.std(b, ddof=1)),
        verdict=verdict,
        formatted_a=format_mean_std(100.0 * a.mean(), 100.0 * np.std(a, ddof=1)),
        formatted_b=format_mean_std(100.0 * b.mean(), 100.0 * np.std(b, ddof=1)),
    )

"""Evaluation metrics: Macro F1, R^2, MRR, run-diversity rank correlation,
operator frequency tables, and a paired two-tailed t-test helper."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegenerateSequence, LengthMismatch, ZeroVariance

F1 = "F1"
R2 = "R2"


@dataclass
class RunRecord:
    """Scores one system obtained on one dataset across repeated runs."""

    dataset: str
    system: str
    scores: list[float]
    metric: str  # F1 | R2
    task: str = "unknown"
    source: str = "local"

    def __post_init__(self) -> None:
        if not self.scores:
            raise ValueError("a run record needs at least one score")
        if self.metric not in (F1, R2):
            raise ValueError(f"unknown metric kind {self.metric!r}")
        for score in self.scores:
            if not math.isfinite(score):
                raise ValueError(f"non-finite score {score!r}")
            if self.metric == F1 and not 0.0 <= score <= 1.0:
                raise ValueError(f"F1 score {score} outside [0, 1]")

    @property
    def mean_score(self) -> float:
        return sum(self.scores) / len(self.scores)


def macro_f1(predictions: Sequence, labels: Sequence) -> float:
    """Unweighted mean of per-class F1 over the classes present in labels.

    A class with no predicted and no true positives contributes F1 = 0, so
    the score stays defined for degenerate predictions.
    """
    if len(predictions) != len(labels):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(labels)} labels")
    if not labels:
        raise LengthMismatch("empty inputs")
    classes = sorted(set(labels), key=str)
    scores = []
    for cls in classes:
        tp = sum(1 for p, y in zip(predictions, labels) if p == cls and y == cls)
        fp = sum(1 for p, y in zip(predictions, labels) if p == cls and y != cls)
        fn = sum(1 for p, y in zip(predictions, labels) if p != cls and y == cls)
        denom = 2 * tp + fp + fn
        scores.append(2 * tp / denom if denom else 0.0)
    return sum(scores) / len(scores)


def r2(predictions: Sequence[float], targets: Sequence[float]) -> float:
    """Coefficient of determination, 1 - SS_res / SS_tot."""
    if len(predictions) != len(targets):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(targets)} targets")
    if len(targets) < 2:
        raise ValueError("r2 needs at least two points")
    mean = sum(targets) / len(targets)
    ss_tot = sum((t - mean) ** 2 for t in targets)
    if ss_tot == 0:
        raise ZeroVariance("targets are constant")
    ss_res = sum((p - t) ** 2 for p, t in zip(predictions, targets))
    return 1.0 - ss_res / ss_tot


def mrr(ranks: Sequence[int]) -> float:
    """Mean reciprocal rank of the best pipeline's position per run."""
    if not ranks:
        raise ValueError("mrr needs at least one rank")
    if any(r < 1 for r in ranks):
        raise ValueError("ranks are 1-based positive integers")
    return sum(1.0 / r for r in ranks) / len(ranks)


def _average_ranks(values: Sequence[float]) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def diversity_correlation(run_a: Sequence, run_b: Sequence) -> float:
    """Spearman rank correlation over aligned positions of two runs'
    operator sequences, truncated to the shorter run."""
    n = min(len(run_a), len(run_b))
    if n < 2:
        raise DegenerateSequence("need at least two aligned positions")
    a = list(run_a)[:n]
    b = list(run_b)[:n]
    if len(set(a)) < 2 or len(set(b)) < 2:
        raise DegenerateSequence("constant sequence has no rank ordering")
    ra, rb = _average_ranks(a), _average_ranks(b)
    mean_a = sum(ra) / n
    mean_b = sum(rb) / n
    cov = sum((x - mean_a) * (y - mean_b) for x, y in zip(ra, rb))
    var_a = sum((x - mean_a) ** 2 for x in ra)
    var_b = sum((y - mean_b) ** 2 for y in rb)
    return cov / math.sqrt(var_a * var_b)


# ---------------------------------------------------------------------------
# Frequency tables (first position / all positions / top model)
# ---------------------------------------------------------------------------

@dataclass
class FrequencyReport:
    first_position: Counter = field(default_factory=Counter)
    all_positions: Counter = field(default_factory=Counter)
    top_model: Counter = field(default_factory=Counter)

    @staticmethod
    def _table(counter: Counter) -> list[tuple[str, int]]:
        return sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))

    def tables(self) -> dict[str, list[tuple[str, int]]]:
        return {
            "first_position": self._table(self.first_position),
            "all_positions": self._table(self.all_positions),
            "top_model": self._table(self.top_model),
        }

    def to_csv(self, which: str) -> str:
        lines = ["operator,count"]
        for operator, count in self.tables()[which]:
            lines.append(f"{operator},{count}")
        return "\n".join(lines) + "\n"


def frequency_report(pipelines: Sequence[Sequence[str]],
                     top_pipelines: Sequence[Sequence[str]] = (),
                     ) -> FrequencyReport:
    """Operator histograms over candidate pipelines and over the best ones."""
    report = FrequencyReport()
    for pipeline in pipelines:
        if not pipeline:
            continue
        report.first_position[pipeline[0]] += 1
        for operator in pipeline:
            report.all_positions[operator] += 1
    for pipeline in top_pipelines:
        for operator in pipeline:
            report.top_model[operator] += 1
    return report


# ---------------------------------------------------------------------------
# Paired two-tailed t-test
# ---------------------------------------------------------------------------

def paired_t_test(a: Sequence[float], b: Sequence[float]) -> tuple[float, float]:
    """Paired two-tailed t-test; returns (t statistic, p value)."""
    if len(a) != len(b):
        raise LengthMismatch("paired samples differ in length")
    n = len(a)
    if n < 2:
        raise ValueError("need at least two pairs")
    diffs = [x - y for x, y in zip(a, b)]
    mean = sum(diffs) / n
    var = sum((d - mean) ** 2 for d in diffs) / (n - 1)
    if var == 0:
        raise ZeroVariance("paired differences are constant")
    t = mean / math.sqrt(var / n)
    p = _t_sf_two_sided(abs(t), n - 1)
    return t, p


def _t_sf_two_sided(t: float, df: int) -> float:
    x = df / (df + t * t)
    return _betainc(df / 2.0, 0.5, x)


def _betainc(a: float, b: float, x: float) -> float:
    """Regularized incomplete beta I_x(a, b) via continued fraction."""
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log(1.0 - x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_cf(a, b, x) / a
    return 1.0 - front * _beta_cf(b, a, 1.0 - x) / b


def _beta_cf(a: float, b: float, x: float, max_iter: int = 300,
             eps: float = 1e-14) -> float:
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
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
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
        if abs(delta - 1.0) < eps:
            break
    return h

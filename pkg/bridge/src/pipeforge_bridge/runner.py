"""Per-skeleton hyperparameter search within a stamped wall-clock budget.

One skeleton at a time, sequentially, so per-skeleton budgets translate
directly to wall time. The default configuration is always evaluated first
(also the entire search when the budget is 0), then randomly sampled
configurations are scored until the time budget or the candidate cap runs
out. Scores are cross-validated Macro F1 (classification) or R^2
(regression). A skeleton failure never aborts the batch.
"""

from __future__ import annotations

import importlib
import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from sklearn.base import clone
from sklearn.model_selection import KFold, ParameterSampler, StratifiedKFold, cross_val_score
from sklearn.pipeline import Pipeline

from .search_space import space_for

logger = logging.getLogger("pipeforge_bridge")

SCHEMA_VERSION = 1
MAX_CANDIDATES = 24
BUDGET_HEADROOM = 1.10  # invariant: wall <= budget * 1.10 for positive budgets

STATUS_OK = "Ok"
STATUS_TIMED_OUT = "TimedOut"
STATUS_FAILED = "Failed"


@dataclass
class BridgeResult:
    skeleton_id: str
    best_score: float | None
    best_config: dict
    wall_seconds: float
    status: str
    reason: str | None = None
    pipeline: list[str] = field(default_factory=list)
    cv_scheme: str = ""

    def to_doc(self) -> dict:
        return {
            "skeleton_id": self.skeleton_id,
            "best_score": self.best_score,
            "best_config": self.best_config,
            "wall_seconds": round(self.wall_seconds, 3),
            "status": self.status,
            "reason": self.reason,
            "pipeline": self.pipeline,
            "cv_scheme": self.cv_scheme,
        }


def load_prepared(manifest_path: Path) -> tuple[np.ndarray, np.ndarray, str]:
    """Load D' from its manifest: features X, target y, and the task."""
    manifest_path = Path(manifest_path)
    doc = json.loads(manifest_path.read_text())
    matrix_path = manifest_path.parent / doc["matrix_file"]
    matrix = np.loadtxt(matrix_path, delimiter=",", ndmin=2)
    target_index = int(doc["target_index"])
    y = matrix[:, target_index]
    X = np.delete(matrix, target_index, axis=1)
    return X, y, doc["task"]


def resolve_operator(dotted: str):
    """Import an operator class from its dotted path."""
    module_name, _, class_name = dotted.rpartition(".")
    if not module_name:
        raise ImportError(f"not a dotted operator path: {dotted!r}")
    module = importlib.import_module(module_name)
    return getattr(module, class_name)


def _build_pipeline(entry: dict) -> tuple[Pipeline, list[str]]:
    steps = []
    order = []
    for i, label in enumerate(entry["preprocessors"]):
        steps.append((f"step{i}", resolve_operator(label)()))
        order.append(label)
    estimator_cls = resolve_operator(entry["estimator"])
    steps.append(("estimator", estimator_cls()))
    order.append(entry["estimator"])
    return Pipeline(steps), order


def _param_grid(pipe: Pipeline, n_features: int) -> dict[str, list]:
    grid: dict[str, list] = {}
    for step_name, operator in pipe.steps:
        class_name = type(operator).__name__
        for param, values in space_for(class_name, n_features).items():
            grid[f"{step_name}__{param}"] = values
    return grid


def _cv_and_scoring(y: np.ndarray, task: str, seed: int):
    if task == "classification":
        _, counts = np.unique(y, return_counts=True)
        folds = int(min(3, counts.min()))
        if folds < 2:
            raise ValueError("a class has fewer than 2 samples; cannot CV")
        cv = StratifiedKFold(n_splits=folds, shuffle=True, random_state=seed)
        return cv, "f1_macro", f"StratifiedKFold({folds})"
    folds = 3 if len(y) >= 6 else 2
    cv = KFold(n_splits=folds, shuffle=True, random_state=seed)
    return cv, "r2", f"KFold({folds})"


def run_skeleton(entry: dict, X: np.ndarray, y: np.ndarray, task: str,
                 seed: int = 0) -> BridgeResult:
    """Search only the named operators' hyperparameters within the budget."""
    started = time.monotonic()
    budget = float(entry.get("budget_seconds", 0.0))
    pipeline_labels = list(entry["preprocessors"]) + [entry["estimator"]]

    try:
        pipe, _ = _build_pipeline(entry)
    except (ImportError, AttributeError, ModuleNotFoundError) as exc:
        return BridgeResult(entry["id"], None, {}, time.monotonic() - started,
                            STATUS_FAILED, f"import_error: {exc}",
                            pipeline_labels)
    try:
        cv, scoring, scheme = _cv_and_scoring(y, task, seed)
    except ValueError as exc:
        return BridgeResult(entry["id"], None, {}, time.monotonic() - started,
                            STATUS_FAILED, f"fit_error: {exc}",
                            pipeline_labels)

    def evaluate(config: dict) -> float | None:
        candidate = clone(pipe)
        if config:
            candidate.set_params(**config)
        try:
            scores = cross_val_score(candidate, X, y, cv=cv, scoring=scoring,
                                     n_jobs=1)
            return float(np.mean(scores))
        except Exception as exc:  # a bad config never kills the skeleton
            logger.debug("candidate failed (%s): %s", config, exc)
            return None

    best_score: float | None = None
    best_config: dict = {}
    fit_error: str | None = None

    # Candidate 0: library defaults. This is the whole search at budget 0.
    try:
        candidate = clone(pipe)
        scores = cross_val_score(candidate, X, y, cv=cv, scoring=scoring,
                                 n_jobs=1)
        best_score = float(np.mean(scores))
    except Exception as exc:
        fit_error = str(exc)
    last_fit = time.monotonic() - started

    if best_score is None and fit_error is not None:
        return BridgeResult(entry["id"], None, {}, time.monotonic() - started,
                            STATUS_FAILED, f"fit_error: {fit_error}",
                            pipeline_labels, scheme)

    status = STATUS_OK
    if budget > 0:
        grid = _param_grid(pipe, X.shape[1])
        if grid:
            n_iter = min(MAX_CANDIDATES,
                         int(np.prod([len(v) for v in grid.values()])))
            sampler = list(ParameterSampler(grid, n_iter=n_iter,
                                            random_state=seed))
            for config in sampler:
                elapsed = time.monotonic() - started
                # Leave headroom for one more fit of the size just observed.
                if elapsed + 1.5 * last_fit >= budget:
                    status = STATUS_TIMED_OUT
                    break
                fit_started = time.monotonic()
                score = evaluate(config)
                last_fit = max(last_fit, time.monotonic() - fit_started)
                if score is not None and (best_score is None
                                          or score > best_score):
                    best_score = score
                    best_config = dict(config)

    wall = time.monotonic() - started
    if budget > 0 and wall > budget * BUDGET_HEADROOM:
        status = STATUS_TIMED_OUT
    return BridgeResult(entry["id"], best_score, best_config, wall, status,
                        None, pipeline_labels, scheme)


def run_all(skeleton_path: Path, manifest_path: Path,
            seed: int = 0, system_name: str | None = None) -> dict:
    """Run every skeleton sequentially; returns the results document.

    Raises ValueError on schema mismatch. The skeleton file is never
    modified.
    """
    doc = json.loads(Path(skeleton_path).read_text())
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported skeleton schema: {doc.get('version')}")
    X, y, task = load_prepared(manifest_path)
    if task != doc.get("task"):
        logger.warning("task mismatch: skeletons say %r, manifest says %r",
                       doc.get("task"), task)

    results: list[BridgeResult] = []
    for entry in doc["skeletons"]:
        result = run_skeleton(entry, X, y, doc.get("task", task), seed=seed)
        logger.info("%s: %s score=%s wall=%.2fs", entry["id"], result.status,
                    result.best_score, result.wall_seconds)
        results.append(result)

    scored = [r for r in results if r.best_score is not None]
    best = max(scored, key=lambda r: r.best_score) if scored else None
    return {
        "dataset": doc["dataset"],
        "task": doc.get("task", task),
        "system": system_name or f"bridge:{doc.get('registry', 'unknown')}",
        "results": [r.to_doc() for r in results],
        "best": best.to_doc() if best else None,
    }

"""Prepare an unseen dataset for hyperparameter search and plan time budgets.

Four preparation steps: task detection from the target column's distribution,
per-column type inference, hashed-bag vectorization of text columns, and
median/mode imputation. The result is a fully numeric matrix (the prepared
dataset D') written as headerless CSV plus a JSON manifest. Budget planning
splits the remaining time budget evenly across the K candidate graphs.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import AllMissingColumn, BudgetExhausted, EmptyTarget
from .fnv import bucket

logger = logging.getLogger(__name__)

NUMERIC = "Numeric"
CATEGORICAL = "Categorical"
TEXT = "Text"

CLASSIFICATION = "classification"
REGRESSION = "regression"

MISSING_TOKENS = frozenset({"", "na", "n/a", "nan", "null", "none", "?"})

TEXT_DIM = 64

# Type-inference thresholds.
_NUMERIC_PARSE_RATE = 0.99
_CATEGORICAL_DISTINCT_RATIO = 0.5
_CATEGORICAL_MEAN_TOKEN_LEN = 32


def is_missing(cell: str) -> bool:
    return cell.strip().lower() in MISSING_TOKENS


def _try_float(cell: str) -> float | None:
    try:
        return float(cell)
    except ValueError:
        return None


def infer_column_type(values: list[str]) -> str:
    """Numeric if >=99% of non-missing cells parse as numbers; Categorical for
    low-cardinality short tokens; Text otherwise."""
    present = [v for v in values if not is_missing(v)]
    if not present:
        return CATEGORICAL
    parsed = sum(1 for v in present if _try_float(v) is not None)
    if parsed / len(present) >= _NUMERIC_PARSE_RATE:
        return NUMERIC
    distinct_ratio = len(set(present)) / len(present)
    mean_len = sum(len(v) for v in present) / len(present)
    if (distinct_ratio <= _CATEGORICAL_DISTINCT_RATIO
            and mean_len <= _CATEGORICAL_MEAN_TOKEN_LEN):
        return CATEGORICAL
    return TEXT


def infer_types(header: list[str],
                columns: list[list[str]]) -> dict[str, str]:
    """Per-column inferred types for a table; header row required."""
    if len(header) != len(columns):
        raise ValueError("header and columns disagree")
    return {name: infer_column_type(col) for name, col in zip(header, columns)}


def detect_task(target_values: list[str]) -> str:
    """Classification vs regression from the target column's distribution.

    Non-numeric targets are classification; numeric targets that are all
    integers with few distinct values (<= max(20, 5% of rows)) are treated
    as class codes; everything else is regression.
    """
    present = [v for v in target_values if not is_missing(v)]
    if not present:
        raise EmptyTarget("target column has no non-missing values")
    parsed = [_try_float(v) for v in present]
    if any(p is None for p in parsed):
        return CLASSIFICATION
    floats = [p for p in parsed if p is not None]
    if all(float(p).is_integer() for p in floats):
        distinct = len(set(floats))
        if distinct <= max(20, 0.05 * len(floats)):
            return CLASSIFICATION
    return REGRESSION


def vectorize_text(values: list[str], hash_seed: int = 0) -> np.ndarray:
    """Per-cell hashed token-unigram vectors, L2-normalized, 64 dims."""
    out = np.zeros((len(values), TEXT_DIM), dtype=np.float64)
    for i, cell in enumerate(values):
        if is_missing(cell):
            continue
        for token in _tokens(cell):
            out[i, bucket(b"tok:" + token.encode("utf-8"), TEXT_DIM,
                          hash_seed)] += 1.0
        norm = float(np.linalg.norm(out[i]))
        if norm > 0:
            out[i] /= norm
    return out


def _tokens(cell: str) -> list[str]:
    tokens: list[str] = []
    current: list[str] = []
    for ch in cell.lower():
        if ch.isalnum():
            current.append(ch)
        elif current:
            tokens.append("".join(current))
            current = []
    if current:
        tokens.append("".join(current))
    return tokens


def impute_numeric(values: list[str]) -> tuple[list[float], bool]:
    """Replace missing cells by the column median; returns (cells, imputed?)."""
    parsed = [(_try_float(v) if not is_missing(v) else None) for v in values]
    present = [p for p in parsed if p is not None]
    if not present:
        raise AllMissingColumn("numeric column entirely missing")
    median = float(np.median(np.array(present, dtype=np.float64)))
    had_missing = any(p is None for p in parsed)
    return [median if p is None else p for p in parsed], had_missing


def impute_categorical(values: list[str]) -> tuple[list[str], bool]:
    """Replace missing cells by the mode; ties pick the smallest string."""
    present = [v for v in values if not is_missing(v)]
    if not present:
        raise AllMissingColumn("categorical column entirely missing")
    counts: dict[str, int] = {}
    for v in present:
        counts[v] = counts.get(v, 0) + 1
    mode = min(counts, key=lambda v: (-counts[v], v))
    had_missing = len(present) != len(values)
    return [mode if is_missing(v) else v for v in values], had_missing


def frequency_rank_codes(values: list[str]) -> list[int]:
    """Ordinal codes by frequency rank: most frequent is 0, ties by string."""
    counts: dict[str, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    ranked = sorted(counts, key=lambda v: (-counts[v], v))
    code = {v: i for i, v in enumerate(ranked)}
    return [code[v] for v in values]


# ---------------------------------------------------------------------------
# Prepared dataset (D')
# ---------------------------------------------------------------------------

@dataclass
class PreparedColumn:
    name: str
    inferred_type: str
    imputation_applied: str | None  # None | "Median" | "Mode"
    matrix_start: int = -1
    matrix_width: int = 0


@dataclass
class PreparedDataset:
    name: str
    columns: list[PreparedColumn]
    target_column: str
    task: str
    row_count: int
    matrix_path: Path
    dropped_columns: list[str] = field(default_factory=list)

    def manifest(self) -> dict:
        return {
            "columns": [{
                "name": c.name,
                "inferred_type": c.inferred_type,
                "imputation_applied": c.imputation_applied,
                "matrix_start": c.matrix_start,
                "matrix_width": c.matrix_width,
            } for c in self.columns],
            "target_index": self.target_index,
            "task": self.task,
            "row_count": self.row_count,
            "matrix_file": self.matrix_path.name,
            "dataset": self.name,
        }

    @property
    def target_index(self) -> int:
        for c in self.columns:
            if c.name == self.target_column:
                return c.matrix_start
        raise KeyError(self.target_column)


def prepare_dataset(name: str, header: list[str], columns: list[list[str]],
                    target: str, out_dir: Path,
                    hash_seed: int = 0) -> PreparedDataset:
    """Run the four preparation steps and emit D' (matrix + manifest)."""
    if target not in header:
        raise KeyError(f"target column {target!r} not in header")
    out_dir.mkdir(parents=True, exist_ok=True)

    target_idx = header.index(target)
    keep_rows = [i for i, v in enumerate(columns[target_idx])
                 if not is_missing(v)]
    if not keep_rows:
        raise EmptyTarget("target column has no non-missing values")
    columns = [[col[i] for i in keep_rows] for col in columns]

    task = detect_task(columns[target_idx])

    blocks: list[np.ndarray] = []
    records: list[PreparedColumn] = []
    dropped: list[str] = []
    cursor = 0
    for idx, (colname, col) in enumerate(zip(header, columns)):
        if idx == target_idx:
            continue
        coltype = infer_column_type(col)
        try:
            if coltype == NUMERIC:
                cells, imputed = impute_numeric(col)
                block = np.array(cells, dtype=np.float64)[:, None]
                imputation = "Median" if imputed else None
            elif coltype == CATEGORICAL:
                cells, imputed = impute_categorical(col)
                block = np.array(frequency_rank_codes(cells),
                                 dtype=np.float64)[:, None]
                imputation = "Mode" if imputed else None
            else:
                cells, imputed = impute_categorical(col)
                block = vectorize_text(cells, hash_seed)
                imputation = "Mode" if imputed else None
        except AllMissingColumn:
            dropped.append(colname)
            logger.warning("dropping all-missing column %r", colname)
            continue
        records.append(PreparedColumn(colname, coltype, imputation,
                                      cursor, block.shape[1]))
        blocks.append(block)
        cursor += block.shape[1]

    target_col = columns[target_idx]
    if task == CLASSIFICATION:
        target_block = np.array(frequency_rank_codes(target_col),
                                dtype=np.float64)[:, None]
        target_type = CATEGORICAL
    else:
        cells, _ = impute_numeric(target_col)  # no missing left by filter
        target_block = np.array(cells, dtype=np.float64)[:, None]
        target_type = NUMERIC
    records.append(PreparedColumn(target, target_type, None, cursor, 1))
    blocks.append(target_block)

    matrix = np.hstack(blocks)
    if not np.all(np.isfinite(matrix)):
        matrix = np.nan_to_num(matrix, nan=0.0, posinf=0.0, neginf=0.0)
    matrix_path = out_dir / f"{name}_prepared.csv"
    np.savetxt(matrix_path, matrix, fmt="%.10g", delimiter=",")

    prepared = PreparedDataset(
        name=name,
        columns=records,
        target_column=target,
        task=task,
        row_count=matrix.shape[0],
        matrix_path=matrix_path,
        dropped_columns=dropped,
    )
    manifest_path = out_dir / f"{name}_manifest.json"
    manifest_path.write_text(json.dumps(prepared.manifest(), sort_keys=True,
                                        indent=2))
    return prepared


# ---------------------------------------------------------------------------
# Budget planning
# ---------------------------------------------------------------------------

@dataclass
class BudgetPlan:
    total_T: float
    consumed_t: float
    K: int
    per_graph: float


def plan_budget(total: float, consumed: float, k: int) -> BudgetPlan:
    """Split the remaining budget evenly: per_graph = (T - t) / K."""
    if total <= 0:
        raise ValueError("total budget T must be positive")
    if consumed < 0:
        raise ValueError("consumed time t cannot be negative")
    if k < 1:
        raise ValueError("K must be at least 1")
    if consumed >= total:
        raise BudgetExhausted(f"t={consumed} >= T={total}")
    return BudgetPlan(total_T=total, consumed_t=consumed, K=k,
                      per_graph=(total - consumed) / k)

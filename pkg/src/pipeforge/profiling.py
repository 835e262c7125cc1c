"""Content embeddings for tabular datasets and exact nearest-neighbor search.

Column vectors come from a dependency-free recipe: numeric columns hash a
fixed feature sketch (standardized quantiles, missing rate, cardinality
ratio, magnitude hints) into d buckets; categorical/text columns accumulate a
hashed character-3-gram bag. Table vectors are the renormalized mean of their
column vectors, so they are invariant to column order and to row count for
identical content. Hashing is 64-bit FNV-1a; everything is deterministic for
a fixed hash seed.
"""

from __future__ import annotations

import csv
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionMismatch, EmptyIndex
from .fnv import bucket, fnv1a_64
from .prep import NUMERIC, infer_column_type, is_missing, _try_float

DEFAULT_DIM = 256
MAX_PROFILE_ROWS = 10_000

_QUANTILES = [i / 10 for i in range(11)]


@dataclass
class ColumnProfile:
    name: str
    inferred_type: str
    vector: np.ndarray
    all_missing: bool = False


@dataclass
class TableEmbedding:
    dataset_name: str
    vector: np.ndarray
    n_columns: int


def _sample(values: Sequence[str], name: str, hash_seed: int) -> list[str]:
    if len(values) <= MAX_PROFILE_ROWS:
        return list(values)
    seed = fnv1a_64(b"sample:" + name.encode("utf-8"), hash_seed) % (2 ** 32)
    rng = np.random.default_rng(seed)
    idx = rng.choice(len(values), size=MAX_PROFILE_ROWS, replace=False)
    idx.sort()
    return [values[i] for i in idx]


def profile_column(name: str, values: Sequence[str], d: int = DEFAULT_DIM,
                   hash_seed: int = 0) -> ColumnProfile:
    """Fixed-size content vector for one column; L2 norm 1 unless all-missing."""
    if len(values) == 0:
        raise ValueError("profile_column requires non-empty values")
    values = _sample(values, name, hash_seed)
    present = [v for v in values if not is_missing(v)]
    coltype = infer_column_type(list(values))
    vector = np.zeros(d, dtype=np.float64)
    if not present:
        return ColumnProfile(name, coltype, vector, all_missing=True)

    if coltype == NUMERIC:
        floats = [f for f in (_try_float(v) for v in present) if f is not None]
        arr = np.array(floats, dtype=np.float64)
        mean, std = float(arr.mean()), float(arr.std())
        qs = np.quantile(arr, _QUANTILES)
        z = (qs - mean) / std if std > 0 else np.zeros_like(qs)
        features: list[tuple[str, float]] = [
            (f"q{int(q * 100):03d}", float(zv)) for q, zv in zip(_QUANTILES, z)
        ]
        features += [
            ("missing_rate", 1.0 - len(present) / len(values)),
            ("cardinality_ratio", len(set(floats)) / len(floats)),
            ("log_mean", float(np.sign(mean) * np.log10(1 + abs(mean)) / 10)),
            ("log_std", float(np.log10(1 + std) / 10)),
            ("int_rate", float(np.mean([f.is_integer() for f in floats]))),
            ("neg_rate", float(np.mean(arr < 0))),
        ]
        for fname, value in features:
            vector[bucket(b"num:" + fname.encode("utf-8"), d, hash_seed)] += value
    else:
        for cell in present:
            for gram in _char_trigrams(cell):
                vector[bucket(b"3g:" + gram.encode("utf-8"), d, hash_seed)] += 1.0

    norm = float(np.linalg.norm(vector))
    if norm > 0:
        vector /= norm
    return ColumnProfile(name, coltype, vector)


def _char_trigrams(cell: str) -> Iterable[str]:
    text = cell.strip().lower()
    if len(text) < 3:
        yield text
        return
    for i in range(len(text) - 2):
        yield text[i:i + 3]


def embed_table(profiles: Sequence[ColumnProfile],
                dataset_name: str) -> TableEmbedding:
    """Mean-pool column vectors, then renormalize."""
    if not profiles:
        raise ValueError("embed_table requires at least one column profile")
    dims = {p.vector.shape[0] for p in profiles}
    if len(dims) != 1:
        raise DimensionMismatch(f"mixed column dimensions: {sorted(dims)}")
    mean = np.mean(np.stack([p.vector for p in profiles]), axis=0)
    norm = float(np.linalg.norm(mean))
    if norm > 0:
        mean = mean / norm
    return TableEmbedding(dataset_name=dataset_name, vector=mean,
                          n_columns=len(profiles))


def profile_table(dataset_name: str, header: Sequence[str],
                  columns: Sequence[Sequence[str]], d: int = DEFAULT_DIM,
                  hash_seed: int = 0) -> TableEmbedding:
    profiles = [profile_column(name, col, d, hash_seed)
                for name, col in zip(header, columns)]
    return embed_table(profiles, dataset_name)


# ---------------------------------------------------------------------------
# Index
# ---------------------------------------------------------------------------

@dataclass
class EmbeddingIndex:
    entries: list[TableEmbedding]
    dimension: int

    def __post_init__(self) -> None:
        names = [e.dataset_name for e in self.entries]
        if len(names) != len(set(names)):
            raise ValueError("duplicate dataset names in index")
        for e in self.entries:
            if e.vector.shape[0] != self.dimension:
                raise DimensionMismatch(
                    f"{e.dataset_name}: dim {e.vector.shape[0]} != {self.dimension}")


def build_index(embeddings: Iterable[TableEmbedding],
                dimension: int = DEFAULT_DIM) -> EmbeddingIndex:
    return EmbeddingIndex(entries=list(embeddings), dimension=dimension)


def cosine_distance(a: np.ndarray, b: np.ndarray) -> float:
    """1 - cosine similarity for L2-normalized (or zero) vectors.

    Clamped to [0, 2]: float rounding can push the raw value a few ulps
    outside the range, which would break the distance invariants.
    """
    return float(min(2.0, max(0.0, 1.0 - np.dot(a, b))))


def nearest(query: TableEmbedding, index: EmbeddingIndex,
            k: int) -> list[tuple[str, float]]:
    """Exact exhaustive search; ascending distance, ties by dataset name."""
    if k < 1:
        raise ValueError("k must be positive")
    if not index.entries:
        raise EmptyIndex("no entries in embedding index")
    if query.vector.shape[0] != index.dimension:
        raise DimensionMismatch(
            f"query dim {query.vector.shape[0]} != index dim {index.dimension}")
    scored = [(cosine_distance(query.vector, e.vector), e.dataset_name)
              for e in index.entries]
    scored.sort(key=lambda pair: (pair[0], pair[1]))
    return [(name, dist) for dist, name in scored[:k]]


# ---------------------------------------------------------------------------
# Binary persistence: "PFIX" header then per-entry records
# ---------------------------------------------------------------------------

_MAGIC = b"PFIX"
_VERSION = 1


def save_index(index: EmbeddingIndex, path: Path) -> None:
    with path.open("wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<III", _VERSION, index.dimension,
                             len(index.entries)))
        for entry in index.entries:
            name = entry.dataset_name.encode("utf-8")
            fh.write(struct.pack("<I", len(name)))
            fh.write(name)
            fh.write(struct.pack("<I", entry.n_columns))
            fh.write(entry.vector.astype("<f4").tobytes())


def load_index(path: Path) -> EmbeddingIndex:
    data = Path(path).read_bytes()
    if data[:4] != _MAGIC:
        raise ValueError(f"{path}: not a PFIX index file")
    version, dim, count = struct.unpack_from("<III", data, 4)
    if version != _VERSION:
        raise ValueError(f"{path}: unsupported index version {version}")
    offset = 16
    entries: list[TableEmbedding] = []
    for _ in range(count):
        (name_len,) = struct.unpack_from("<I", data, offset)
        offset += 4
        name = data[offset:offset + name_len].decode("utf-8")
        offset += name_len
        (n_columns,) = struct.unpack_from("<I", data, offset)
        offset += 4
        vector = np.frombuffer(data, dtype="<f4", count=dim,
                               offset=offset).astype(np.float64)
        offset += 4 * dim
        entries.append(TableEmbedding(name, vector, n_columns))
    return EmbeddingIndex(entries=entries, dimension=dim)


# ---------------------------------------------------------------------------
# CSV ingestion
# ---------------------------------------------------------------------------

def load_table(path: Path, delimiter: str = ",",
               ) -> tuple[str, list[str], list[list[str]]]:
    """Read one CSV into (dataset name, header, columns). Header required."""
    path = Path(path)
    with path.open(newline="") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise ValueError(f"{path}: empty file, header row required") from None
        columns: list[list[str]] = [[] for _ in header]
        for row in reader:
            for i in range(len(header)):
                columns[i].append(row[i] if i < len(row) else "")
    name = path.stem.lower()
    return name, header, columns

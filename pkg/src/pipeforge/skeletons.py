"""Map pipeline graphs to executable skeletons and gate them on a registry.

A skeleton is the ordered preprocessor labels on some read->estimator path
plus the estimator itself, carrying the graph's log-probability score. The
capability registry describes what a downstream hyperparameter optimizer
supports; unsupported preprocessors are dropped (a missing transform still
leaves a runnable pipeline) while unsupported estimators reject the skeleton
outright.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import NoEstimator
from .filtering import (
    ESTIMATOR,
    PREPROCESSOR,
    READ_CSV_ID,
    NodeVocabulary,
    PipelineGraph,
)


@dataclass
class PipelineSkeleton:
    skeleton_id: str
    preprocessors: list[str]
    estimator: str
    log_prob: float
    source_graph_id: str

    def signature(self) -> tuple:
        return (tuple(self.preprocessors), self.estimator)

    def to_doc(self, budget_seconds: float = 0.0) -> dict:
        return {
            "id": self.skeleton_id,
            "preprocessors": list(self.preprocessors),
            "estimator": self.estimator,
            "log_prob": self.log_prob,
            "budget_seconds": budget_seconds,
        }


def to_skeletons(g: PipelineGraph, vocab: NodeVocabulary) -> list[PipelineSkeleton]:
    """One skeleton per estimator node: its on-path preprocessors in
    topological order (node order is canonical in emitted graphs)."""
    n = len(g.nodes)
    vocab_ids = g.vocab_ids()
    succs: list[list[int]] = [[] for _ in range(n)]
    preds: list[list[int]] = [[] for _ in range(n)]
    for e in g.edges:
        succs[e.src].append(e.dst)
        preds[e.dst].append(e.src)

    read_nodes = [i for i in range(n) if vocab_ids[i] == READ_CSV_ID]
    downstream: set[int] = set(read_nodes)
    stack = list(read_nodes)
    while stack:
        for nxt in succs[stack.pop()]:
            if nxt not in downstream:
                downstream.add(nxt)
                stack.append(nxt)

    estimators = [i for i in range(n)
                  if vocab.category_of(vocab_ids[i]) == ESTIMATOR]
    if not estimators:
        raise NoEstimator(f"{g.graph_id}: no estimator-category node")

    skeletons: list[PipelineSkeleton] = []
    for index, est in enumerate(sorted(estimators)):
        upstream: set[int] = {est}
        stack = [est]
        while stack:
            for prev in preds[stack.pop()]:
                if prev not in upstream:
                    upstream.add(prev)
                    stack.append(prev)
        on_path = sorted((upstream & downstream) - {est})
        labels: list[str] = []
        for node in on_path:
            vid = vocab_ids[node]
            if vocab.category_of(vid) == PREPROCESSOR:
                label = vocab.label_of(vid)
                if not labels or labels[-1] != label:
                    labels.append(label)
        skeletons.append(PipelineSkeleton(
            skeleton_id=f"{g.graph_id}:{index}",
            preprocessors=labels,
            estimator=vocab.label_of(vocab_ids[est]),
            log_prob=0.0,
            source_graph_id=g.graph_id,
        ))
    return skeletons


# ---------------------------------------------------------------------------
# Capability registry
# ---------------------------------------------------------------------------

@dataclass
class CapabilityRegistry:
    optimizer_name: str
    preprocessors: set[str]
    estimators: set[str]
    rename: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.preprocessors or not self.estimators:
            raise ValueError("registry needs non-empty operator sets")
        known = self.preprocessors | self.estimators
        extra = set(self.rename) - known
        if extra:
            raise ValueError(f"rename targets unknown operators: {sorted(extra)}")

    def renamed(self, label: str) -> str:
        return self.rename.get(label, label)


def load_registry(path: Path) -> CapabilityRegistry:
    doc = json.loads(Path(path).read_text())
    return CapabilityRegistry(
        optimizer_name=doc["optimizer_name"],
        preprocessors=set(doc["preprocessors"]),
        estimators=set(doc["estimators"]),
        rename=dict(doc.get("rename", {})),
    )


def default_registry_path() -> Path:
    return Path(__file__).parent / "data" / "registry_sklearn.json"


@dataclass
class Accepted:
    skeleton: PipelineSkeleton
    dropped_preprocessors: list[str] = field(default_factory=list)


@dataclass
class RejectedSkeleton:
    skeleton_id: str
    reason: str


def validate_against(skeleton: PipelineSkeleton, registry: CapabilityRegistry,
                     ) -> Accepted | RejectedSkeleton:
    """Gate a skeleton on the registry, applying its rename map."""
    if skeleton.estimator not in registry.estimators:
        return RejectedSkeleton(skeleton.skeleton_id, "estimator_unsupported")
    kept: list[str] = []
    dropped: list[str] = []
    for label in skeleton.preprocessors:
        if label in registry.preprocessors:
            kept.append(registry.renamed(label))
        else:
            dropped.append(label)
    renamed = PipelineSkeleton(
        skeleton_id=skeleton.skeleton_id,
        preprocessors=kept,
        estimator=registry.renamed(skeleton.estimator),
        log_prob=skeleton.log_prob,
        source_graph_id=skeleton.source_graph_id,
    )
    return Accepted(skeleton=renamed, dropped_preprocessors=dropped)


def dedupe_rank(skeletons: list[PipelineSkeleton]) -> list[PipelineSkeleton]:
    """Merge duplicates keeping the best score; sort by log_prob descending."""
    best: dict[tuple, PipelineSkeleton] = {}
    for skeleton in skeletons:
        sig = skeleton.signature()
        if sig not in best or skeleton.log_prob > best[sig].log_prob:
            best[sig] = skeleton
    return sorted(best.values(),
                  key=lambda s: (-s.log_prob, s.estimator, s.preprocessors))


# ---------------------------------------------------------------------------
# Skeleton file (schema v1): the contract with the HPO bridge
# ---------------------------------------------------------------------------

SCHEMA_VERSION = 1


def skeleton_doc(dataset: str, task: str, entries: list[dict],
                 registry_name: str) -> dict:
    return {
        "version": SCHEMA_VERSION,
        "dataset": dataset,
        "task": task,
        "skeletons": entries,
        "registry": registry_name,
    }


def dump_skeleton_doc(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def parse_skeleton_doc(text: str) -> dict:
    doc = json.loads(text)
    if doc.get("version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported skeleton schema version: {doc.get('version')}")
    required = {"dataset", "task", "skeletons", "registry"}
    missing = required - set(doc)
    if missing:
        raise ValueError(f"skeleton document missing keys: {sorted(missing)}")
    for entry in doc["skeletons"]:
        entry_missing = {"id", "preprocessors", "estimator", "log_prob",
                         "budget_seconds"} - set(entry)
        if entry_missing:
            raise ValueError(f"skeleton entry missing keys: {sorted(entry_missing)}")
    return doc

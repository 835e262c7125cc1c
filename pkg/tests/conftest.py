"""Shared fixtures: tiny vocabularies and random valid pipeline graphs."""

from __future__ import annotations

import numpy as np
import pytest

from pipeforge.filtering import (
    DATASET_ID,
    READ_CSV_ID,
    NodeVocabulary,
    PGEdge,
    PGNode,
    PipelineGraph,
    build_vocabulary_from_doc,
)


def tiny_vocab(n_preprocessors: int = 1, n_estimators: int = 1) -> NodeVocabulary:
    operators = []
    for i in range(n_preprocessors):
        operators.append({"label": f"prep{i}", "category": "Preprocessor"})
    for i in range(n_estimators):
        operators.append({"label": f"est{i}", "category": "Estimator"})
    return build_vocabulary_from_doc({"operators": operators})


@pytest.fixture
def vocab5() -> NodeVocabulary:
    """|V| = 5: three reserved ids plus one preprocessor and one estimator."""
    return tiny_vocab(1, 1)


def random_pipeline_graph(rng: np.random.Generator, vocab: NodeVocabulary,
                          max_extra: int = 6) -> PipelineGraph:
    """Random valid pipeline graph: connected DAG rooted at the seed pair."""
    operator_ids = sorted(vocab.categories)
    n_extra = int(rng.integers(0, max_extra + 1))
    types = [DATASET_ID, READ_CSV_ID]
    edges = {(0, 1)}
    for _ in range(n_extra):
        new = len(types)
        types.append(int(rng.choice(operator_ids)))
        # Attach to at least one earlier node (node 0 excluded to mimic the
        # miner's output; extra edges with decreasing probability).
        first = int(rng.integers(1, new))
        edges.add((first, new))
        for candidate in range(1, new):
            if candidate != first and rng.random() < 0.25:
                edges.add((candidate, new))
    return PipelineGraph(
        graph_id=f"rand{rng.integers(1 << 30)}",
        dataset_name="fixture",
        nodes=[PGNode(i, t) for i, t in enumerate(types)],
        edges=sorted((PGEdge(a, b) for a, b in edges),
                     key=lambda e: (e.src, e.dst)),
    )

"""Reduce code graphs to their ML-operator core, linked to a dataset node.

Filtering keeps only calls into the whitelisted operator vocabulary,
collapses constructor + fit/transform/predict call sites on the same bound
instance into one operator node, contracts data-flow edges across removed
intermediaries, drops control flow, and roots the result at a DATASET node
flowing into the (single, merged) READ_CSV node.

Acyclicity of the emitted graph is an invariant; in the rare case where
collapsing an instance that is re-used after a downstream model would create
a cycle, contracted edges flowing against first-occurrence order are dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .analyzer import CALL_SITE, DATA_FLOW, DATA_SOURCE, READ_FUNCS, CodeGraph
from .errors import DuplicateLabel, InvalidGraph, MissingEstimatorCategory

DATASET_ID = 0
READ_CSV_ID = 1
STOP_ID = 2
DATASET_LABEL = "<DATASET>"
READ_CSV_LABEL = "pandas.read_csv"
STOP_LABEL = "<STOP>"

PREPROCESSOR = "Preprocessor"
ESTIMATOR = "Estimator"
OTHER = "Other"
_CATEGORIES = (PREPROCESSOR, ESTIMATOR, OTHER)

UNKNOWN_DATASET = "UNKNOWN_DATASET"

# Method suffixes that collapse onto their operator's node.
FIT_LIKE = frozenset({
    "fit", "fit_transform", "fit_predict", "transform", "predict",
    "predict_proba", "score", "inverse_transform",
})

DEFAULT_MAX_NODES = 64


# ---------------------------------------------------------------------------
# Vocabulary
# ---------------------------------------------------------------------------

@dataclass
class NodeVocabulary:
    entries: dict[str, int]          # canonical label -> id (reserved included)
    categories: dict[int, str]       # non-reserved id -> category

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def size(self) -> int:
        return len(self.entries)

    def label_of(self, vocab_id: int) -> str:
        return self._by_id[vocab_id]

    def __post_init__(self) -> None:
        self._by_id = {i: label for label, i in self.entries.items()}

    def id_of(self, label: str) -> int | None:
        return self.entries.get(label)

    def category_of(self, vocab_id: int) -> str | None:
        return self.categories.get(vocab_id)

    def estimator_ids(self) -> set[int]:
        return {i for i, c in self.categories.items() if c == ESTIMATOR}

    def preprocessor_ids(self) -> set[int]:
        return {i for i, c in self.categories.items() if c == PREPROCESSOR}

    def to_json_doc(self) -> dict:
        operators = []
        for label, vid in sorted(self.entries.items(), key=lambda kv: kv[1]):
            if vid in (DATASET_ID, READ_CSV_ID, STOP_ID):
                continue
            operators.append({"label": label, "category": self.categories[vid]})
        return {"operators": operators}


def build_vocabulary_from_doc(doc: Mapping) -> NodeVocabulary:
    entries = {DATASET_LABEL: DATASET_ID, READ_CSV_LABEL: READ_CSV_ID,
               STOP_LABEL: STOP_ID}
    categories: dict[int, str] = {}
    has_estimator = False
    for op in doc["operators"]:
        label, category = op["label"], op["category"]
        if category not in _CATEGORIES:
            raise ValueError(f"unknown category {category!r} for {label!r}")
        if label in entries:
            raise DuplicateLabel(label)
        vid = len(entries)
        entries[label] = vid
        categories[vid] = category
        has_estimator = has_estimator or category == ESTIMATOR
    if not has_estimator:
        raise MissingEstimatorCategory("vocabulary has no Estimator entry")
    return NodeVocabulary(entries=entries, categories=categories)


def build_vocabulary(whitelist_file: Path) -> NodeVocabulary:
    """Load a vocabulary file: reserved ids first, then entries in file order."""
    return build_vocabulary_from_doc(json.loads(Path(whitelist_file).read_text()))


def default_vocabulary() -> NodeVocabulary:
    path = Path(__file__).parent / "data" / "vocabulary.json"
    return build_vocabulary(path)


# ---------------------------------------------------------------------------
# Pipeline graphs
# ---------------------------------------------------------------------------

@dataclass
class PGNode:
    id: int
    vocab_id: int


@dataclass
class PGEdge:
    src: int
    dst: int


@dataclass
class PipelineGraph:
    graph_id: str
    dataset_name: str
    nodes: list[PGNode] = field(default_factory=list)
    edges: list[PGEdge] = field(default_factory=list)

    def vocab_ids(self) -> list[int]:
        return [n.vocab_id for n in self.nodes]

    def edge_set(self) -> set[tuple[int, int]]:
        return {(e.src, e.dst) for e in self.edges}

    def to_json(self) -> str:
        doc = {
            "graph_id": self.graph_id,
            "dataset_name": self.dataset_name,
            "nodes": [{"id": n.id, "vocab_id": n.vocab_id} for n in self.nodes],
            "edges": [{"src": e.src, "dst": e.dst} for e in self.edges],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "PipelineGraph":
        doc = json.loads(text)
        return cls(
            graph_id=doc["graph_id"],
            dataset_name=doc["dataset_name"],
            nodes=[PGNode(n["id"], n["vocab_id"]) for n in doc["nodes"]],
            edges=[PGEdge(e["src"], e["dst"]) for e in doc["edges"]],
        )


@dataclass
class Rejected:
    script_id: str
    reason: str


def kahn_order(n: int, edges: set[tuple[int, int]],
               priority: list[tuple]) -> list[int]:
    """Topological order over ``0..n-1``; ready set drained by *priority*.

    A breadth-first layering of the DAG: a node becomes ready once all its
    predecessors are emitted, and ties among ready nodes resolve by the
    caller-supplied priority key. Raises :class:`InvalidGraph` on cycles.
    """
    indeg = [0] * n
    succs: list[list[int]] = [[] for _ in range(n)]
    for src, dst in edges:
        indeg[dst] += 1
        succs[src].append(dst)
    ready = sorted((i for i in range(n) if indeg[i] == 0),
                   key=lambda i: priority[i])
    order: list[int] = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        changed = False
        for nxt in succs[node]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                ready.append(nxt)
                changed = True
        if changed:
            ready.sort(key=lambda i: priority[i])
    if len(order) != n:
        raise InvalidGraph("cycle detected")
    return order


def pipeline_graph_violations(g: PipelineGraph, vocab: NodeVocabulary,
                              max_nodes: int = DEFAULT_MAX_NODES) -> list[str]:
    """All invariant violations of *g*; empty when the graph is valid."""
    problems: list[str] = []
    ids = [n.id for n in g.nodes]
    if sorted(ids) != list(range(len(ids))):
        problems.append("node ids not dense from 0")
        return problems
    by_id = {n.id: n.vocab_id for n in g.nodes}
    if sum(1 for v in by_id.values() if v == DATASET_ID) != 1:
        problems.append("expected exactly one DATASET node")
    if sum(1 for v in by_id.values() if v == READ_CSV_ID) != 1:
        problems.append("expected exactly one READ_CSV node")
    for n in g.nodes:
        if n.vocab_id not in vocab.categories and n.vocab_id not in (
                DATASET_ID, READ_CSV_ID, STOP_ID):
            problems.append(f"vocab id {n.vocab_id} not in vocabulary")
    if len(g.nodes) > max_nodes:
        problems.append(f"{len(g.nodes)} nodes exceeds max {max_nodes}")
    edge_set = g.edge_set()
    if len(edge_set) != len(g.edges):
        problems.append("duplicate edges")
    for src, dst in edge_set:
        if src not in by_id or dst not in by_id:
            problems.append(f"dangling edge ({src},{dst})")
            return problems
    dataset_nodes = [n.id for n in g.nodes if n.vocab_id == DATASET_ID]
    read_nodes = [n.id for n in g.nodes if n.vocab_id == READ_CSV_ID]
    if dataset_nodes and read_nodes:
        if (dataset_nodes[0], read_nodes[0]) not in edge_set:
            problems.append("missing DATASET->READ_CSV edge")
    try:
        kahn_order(len(g.nodes), edge_set, [(0, i) for i in range(len(g.nodes))])
    except InvalidGraph:
        problems.append("graph is cyclic")
    if g.nodes and not _weakly_connected(len(g.nodes), edge_set):
        problems.append("graph is not connected")
    return problems


def validate_pipeline_graph(g: PipelineGraph, vocab: NodeVocabulary,
                            max_nodes: int = DEFAULT_MAX_NODES) -> None:
    problems = pipeline_graph_violations(g, vocab, max_nodes)
    if problems:
        raise InvalidGraph(f"{g.graph_id}: " + "; ".join(problems))


def _weakly_connected(n: int, edges: set[tuple[int, int]]) -> bool:
    if n == 0:
        return True
    adjacency: list[list[int]] = [[] for _ in range(n)]
    for src, dst in edges:
        adjacency[src].append(dst)
        adjacency[dst].append(src)
    seen = {0}
    stack = [0]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == n


# ---------------------------------------------------------------------------
# Dataset naming
# ---------------------------------------------------------------------------

def normalize_dataset_name(name: str) -> str:
    """Basename, lowercased, extension stripped; multiple scripts must link
    to the same dataset node."""
    base = name.replace("\\", "/").rsplit("/", 1)[-1].lower()
    if "." in base:
        stem = base.rsplit(".", 1)[0]
        if stem:
            base = stem
    return base or UNKNOWN_DATASET.lower()


def _is_read_label(label: str) -> bool:
    return label.rsplit(".", 1)[-1] in READ_FUNCS


def resolve_dataset_name(g: CodeGraph,
                         sidecar: Mapping[str, str] | None = None) -> str:
    """Dataset name for a script: literal basename, sidecar entry, or sentinel."""
    read_ids = {n.id for n in g.nodes
                if n.kind == CALL_SITE and _is_read_label(n.label)}
    sources = {n.id: n.label for n in g.nodes if n.kind == DATA_SOURCE}
    for edge in g.edges:
        if edge.kind == DATA_FLOW and edge.dst in read_ids and edge.src in sources:
            literal = sources[edge.src]
            return literal.replace("\\", "/").rsplit("/", 1)[-1]
    if sidecar and g.script_id in sidecar:
        return sidecar[g.script_id]
    return UNKNOWN_DATASET


# ---------------------------------------------------------------------------
# Filtering
# ---------------------------------------------------------------------------

def _vocab_target(label: str, vocab: NodeVocabulary) -> int | None:
    """Vocabulary id a call-site label maps to, collapsing method suffixes."""
    if _is_read_label(label):
        return READ_CSV_ID
    direct = vocab.id_of(label)
    if direct is not None and direct != READ_CSV_ID:
        return direct
    if "." in label:
        base, method = label.rsplit(".", 1)
        if method in FIT_LIKE:
            base_id = vocab.id_of(base)
            if base_id is not None:
                return base_id
    return None


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _acyclify(edges: set[tuple[int, int]],
              witness: dict[tuple[int, int], int]) -> set[tuple[int, int]]:
    """Drop latest-witnessed edges until *edges* is a DAG."""
    while True:
        cycle = _find_cycle(edges)
        if cycle is None:
            return edges
        edges.remove(max(cycle, key=lambda e: witness[e]))


def _find_cycle(edges: set[tuple[int, int]]) -> list[tuple[int, int]] | None:
    succs: dict[int, list[int]] = {}
    for a, b in sorted(edges):
        succs.setdefault(a, []).append(b)
    state: dict[int, int] = {}  # 1 = on stack, 2 = done
    parent_edge: dict[int, tuple[int, int]] = {}

    def dfs(node: int) -> list[tuple[int, int]] | None:
        state[node] = 1
        for nxt in succs.get(node, ()):
            if state.get(nxt) == 1:
                cycle = [(node, nxt)]
                cur = node
                while cur != nxt:
                    edge = parent_edge[cur]
                    cycle.append(edge)
                    cur = edge[0]
                return cycle
            if state.get(nxt) is None:
                parent_edge[nxt] = (node, nxt)
                found = dfs(nxt)
                if found:
                    return found
        state[node] = 2
        return None

    for start in sorted({a for a, _ in edges}):
        if state.get(start) is None:
            found = dfs(start)
            if found:
                return found
    return None


def filter_graph(g: CodeGraph, vocab: NodeVocabulary, dataset_name: str,
                 max_nodes: int = DEFAULT_MAX_NODES) -> PipelineGraph | Rejected:
    """Filter one code graph into a pipeline graph, or reject it.

    ``dataset_name`` should already be normalized (see
    :func:`normalize_dataset_name`); an empty name is invalid.
    """
    if not dataset_name:
        raise ValueError("dataset_name must be non-empty")

    n = len(g.nodes)
    target = [None] * n
    for node in g.nodes:
        if node.kind == CALL_SITE:
            target[node.id] = _vocab_target(node.label, vocab)

    # Collapse per-instance chains: a data-flow edge between two call sites
    # that map to the same operator joins them (constructor -> fit -> ...).
    # All read-like calls merge into the single READ_CSV node.
    uf = _UnionFind(n)
    first_read: int | None = None
    for node in g.nodes:
        if target[node.id] == READ_CSV_ID:
            if first_read is None:
                first_read = node.id
            else:
                uf.union(first_read, node.id)
    dataflow = [(e.src, e.dst) for e in g.edges if e.kind == DATA_FLOW]
    for src, dst in dataflow:
        if target[src] is not None and target[src] == target[dst]:
            uf.union(src, dst)

    kept_roots = sorted({uf.find(i) for i in range(n) if target[i] is not None})
    if first_read is None and not kept_roots:
        return Rejected(g.script_id, "no_estimator")

    # Contract data-flow across removed intermediaries: from each kept group,
    # walk forward through dropped nodes until hitting other kept groups.
    succs: list[list[int]] = [[] for _ in range(n)]
    for src, dst in dataflow:
        succs[src].append(dst)
    witness: dict[tuple[int, int], int] = {}
    for root in kept_roots:
        members = [i for i in range(n) if uf.find(i) == root]
        stack = list(members)
        seen = set(members)
        while stack:
            for nxt in succs[stack.pop()]:
                other = uf.find(nxt)
                if target[nxt] is not None and other != root:
                    key = (root, other)
                    witness[key] = min(witness.get(key, nxt), nxt)
                    continue  # contraction stops at surviving operators
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)

    # Collapsing an instance that is re-used downstream of a model can close
    # a cycle in the quotient; drop the chronologically latest flow until
    # the graph is acyclic again (original data flow itself is a DAG).
    group_edges = _acyclify(set(witness), witness)

    # Synthesize the read node when the script loads data opaquely.
    roots_for_read: list[int] = []
    if first_read is None:
        indeg = {r: 0 for r in kept_roots}
        for a, b in group_edges:
            indeg[b] += 1
        roots_for_read = [r for r in kept_roots if indeg[r] == 0]

    # Keep only operators weakly connected to the read node.
    read_root = uf.find(first_read) if first_read is not None else -1
    adjacency: dict[int, set[int]] = {r: set() for r in kept_roots}
    for a, b in group_edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    if first_read is not None:
        connected = {read_root}
        stack = [read_root]
        while stack:
            for nxt in adjacency[stack.pop()]:
                if nxt not in connected:
                    connected.add(nxt)
                    stack.append(nxt)
    else:
        connected = set(kept_roots) | {-1}

    surviving = [r for r in kept_roots if r in connected]
    estimator_ids = vocab.estimator_ids()
    if not any(target[r] in estimator_ids for r in surviving
               if r != read_root):
        return Rejected(g.script_id, "no_estimator")

    # Assemble: DATASET(0) -> READ_CSV(1) -> operators in canonical order.
    operator_roots = [r for r in surviving if r != read_root]
    local = {read_root: 1}
    for i, root in enumerate(operator_roots):
        local[root] = 2 + i
    count = 2 + len(operator_roots)
    edges: set[tuple[int, int]] = {(0, 1)}
    for a, b in group_edges:
        if a in local and b in local:
            edges.add((local[a], local[b]))
    for r in roots_for_read:
        if r in local:
            edges.add((1, local[r]))

    vocab_ids = [DATASET_ID, READ_CSV_ID] + [target[r] for r in operator_roots]
    min_member = {root: root for root in surviving}
    positions = [-2, -1] + [min_member[r] for r in operator_roots]
    priority = [(vocab_ids[i], positions[i]) for i in range(count)]
    order = kahn_order(count, edges, priority)
    rank = {node: i for i, node in enumerate(order)}

    graph = PipelineGraph(
        graph_id=g.script_id,
        dataset_name=dataset_name,
        nodes=[PGNode(i, vocab_ids[order[i]]) for i in range(count)],
        edges=[PGEdge(rank[a], rank[b])
               for a, b in sorted(edges, key=lambda e: (rank[e[0]], rank[e[1]]))],
    )
    graph.edges.sort(key=lambda e: (e.src, e.dst))
    if len(graph.nodes) > max_nodes:
        return Rejected(g.script_id, "too_large")
    validate_pipeline_graph(graph, vocab, max_nodes)
    return graph


# ---------------------------------------------------------------------------
# Corpus filtering
# ---------------------------------------------------------------------------

@dataclass
class FilterReport:
    scripts_in: int = 0
    graphs_out: int = 0
    nodes_before: int = 0
    nodes_after: int = 0
    edges_before: int = 0
    edges_after: int = 0
    reduction_rate_nodes: float = 0.0
    reduction_rate_edges: float = 0.0
    rejected_no_estimator: int = 0

    def finalize(self) -> "FilterReport":
        if self.nodes_before > 0:
            self.reduction_rate_nodes = 1.0 - self.nodes_after / self.nodes_before
        if self.edges_before > 0:
            self.reduction_rate_edges = 1.0 - self.edges_after / self.edges_before
        return self

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True, indent=2)


def filter_corpus(graphs: Iterable[CodeGraph], vocab: NodeVocabulary,
                  sidecar: Mapping[str, str] | None = None,
                  max_nodes: int = DEFAULT_MAX_NODES,
                  ) -> tuple[list[PipelineGraph], FilterReport]:
    report = FilterReport()
    out: list[PipelineGraph] = []
    for g in graphs:
        report.scripts_in += 1
        report.nodes_before += len(g.nodes)
        report.edges_before += len(g.edges)
        name = normalize_dataset_name(resolve_dataset_name(g, sidecar))
        result = filter_graph(g, vocab, name, max_nodes)
        if isinstance(result, Rejected):
            report.rejected_no_estimator += 1
            continue
        out.append(result)
        report.graphs_out += 1
        report.nodes_after += len(result.nodes)
        report.edges_after += len(result.edges)
    return out, report.finalize()


def write_pipeline_graphs(graphs: Iterable[PipelineGraph], path: Path) -> None:
    with path.open("w") as fh:
        for graph in graphs:
            fh.write(graph.to_json())
            fh.write("\n")


def read_pipeline_graphs(path: Path) -> Iterator[PipelineGraph]:
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield PipelineGraph.from_json(line)

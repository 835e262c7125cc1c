"""Canonical decision sequences for pipeline graphs.

A trace linearizes a graph into the generator's decision alphabet: add a node
of some type / stop, then per new node a loop of add-edge yes/no decisions
with a pick of the earlier endpoint. The first two nodes (DATASET flowing
into READ_CSV) are the seed prefix and never appear as steps.

Node order is a breadth-first topological layering from DATASET (Kahn's
queue) with ties broken by (vocab_id, original node id). Plain BFS is not
enough: the trace alphabet encodes edges as earlier->new only, so the order
must be topological for replay to reconstruct every DAG exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidGraph
from .filtering import (
    DATASET_ID,
    READ_CSV_ID,
    NodeVocabulary,
    PGEdge,
    PGNode,
    PipelineGraph,
    kahn_order,
    pipeline_graph_violations,
)

ADD_NODE = "add_node"
STOP_NODES = "stop_nodes"
ADD_EDGE_YES = "add_edge_yes"
ADD_EDGE_NO = "add_edge_no"
PICK_NODE = "pick_node"

Step = tuple  # (ADD_NODE, vocab_id) | (STOP_NODES,) | (ADD_EDGE_YES,) | ...


@dataclass
class GenerationTrace:
    graph_id: str
    dataset_name: str
    steps: list[Step] = field(default_factory=list)

    def key(self) -> tuple:
        return tuple(self.steps)


def canonicalize_graph(g: PipelineGraph) -> PipelineGraph:
    """Relabel nodes into canonical order; edges sorted by (src, dst)."""
    n = len(g.nodes)
    vocab_by_id = {node.id: node.vocab_id for node in g.nodes}
    edges = {(e.src, e.dst) for e in g.edges}
    priority = [(vocab_by_id[i], i) for i in range(n)]
    order = kahn_order(n, edges, priority)
    rank = {node: i for i, node in enumerate(order)}
    out = PipelineGraph(
        graph_id=g.graph_id,
        dataset_name=g.dataset_name,
        nodes=[PGNode(i, vocab_by_id[order[i]]) for i in range(n)],
        edges=sorted((PGEdge(rank[a], rank[b]) for a, b in edges),
                     key=lambda e: (e.src, e.dst)),
    )
    return out


def canonicalize_trace(g: PipelineGraph,
                       vocab: NodeVocabulary) -> GenerationTrace:
    """Decision sequence whose replay reconstructs *g* exactly."""
    problems = pipeline_graph_violations(g, vocab, max_nodes=10 ** 9)
    if problems:
        raise InvalidGraph(f"{g.graph_id}: " + "; ".join(problems))
    canon = canonicalize_graph(g)
    n = len(canon.nodes)
    if canon.nodes[0].vocab_id != DATASET_ID or canon.nodes[1].vocab_id != READ_CSV_ID:
        raise InvalidGraph(f"{g.graph_id}: seed prefix missing after ordering")

    in_edges: dict[int, list[int]] = {i: [] for i in range(n)}
    for e in canon.edges:
        in_edges[e.dst].append(e.src)

    steps: list[Step] = []
    for node in range(2, n):
        steps.append((ADD_NODE, canon.nodes[node].vocab_id))
        linked = sorted(in_edges[node])
        for src in linked:
            steps.append((ADD_EDGE_YES,))
            steps.append((PICK_NODE, src))
        if len(linked) < node:  # candidates remain: an explicit "no" is taken
            steps.append((ADD_EDGE_NO,))
    steps.append((STOP_NODES,))
    return GenerationTrace(graph_id=g.graph_id, dataset_name=g.dataset_name,
                           steps=steps)


def replay_trace(trace: GenerationTrace) -> PipelineGraph:
    """Rebuild the pipeline graph a trace describes, from the seed prefix."""
    types = [DATASET_ID, READ_CSV_ID]
    edges: list[tuple[int, int]] = [(0, 1)]
    linked: set[int] = set()
    pending_yes = False
    current = -1  # node whose edge loop is open; -1 = node phase
    done = False

    for step in trace.steps:
        if done:
            raise InvalidGraph(f"{trace.graph_id}: steps after stop")
        kind = step[0]
        if pending_yes:
            if kind != PICK_NODE:
                raise InvalidGraph(f"{trace.graph_id}: add-edge-yes without pick")
            src = step[1]
            if not 0 <= src < current or src in linked:
                raise InvalidGraph(f"{trace.graph_id}: bad pick {src}")
            edges.append((src, current))
            linked.add(src)
            pending_yes = False
            if len(linked) == current:
                current = -1  # all earlier nodes linked: loop closes itself
            continue
        if kind == ADD_NODE:
            if current != -1:
                raise InvalidGraph(f"{trace.graph_id}: add-node inside edge loop")
            types.append(step[1])
            current = len(types) - 1
            linked = set()
        elif kind == ADD_EDGE_YES:
            if current == -1:
                raise InvalidGraph(f"{trace.graph_id}: edge step outside loop")
            pending_yes = True
        elif kind == ADD_EDGE_NO:
            if current == -1:
                raise InvalidGraph(f"{trace.graph_id}: edge step outside loop")
            current = -1
        elif kind == STOP_NODES:
            if current != -1:
                raise InvalidGraph(f"{trace.graph_id}: stop inside edge loop")
            done = True
        else:
            raise InvalidGraph(f"{trace.graph_id}: unknown step {step!r}")
    if not done:
        raise InvalidGraph(f"{trace.graph_id}: trace does not end with stop")

    return PipelineGraph(
        graph_id=trace.graph_id,
        dataset_name=trace.dataset_name,
        nodes=[PGNode(i, t) for i, t in enumerate(types)],
        edges=sorted((PGEdge(a, b) for a, b in edges),
                     key=lambda e: (e.src, e.dst)),
    )

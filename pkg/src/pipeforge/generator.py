"""Autoregressive graph-generative model over pipeline graphs.

The model scores/produces the decision sequence of :mod:`pipeforge.traces`:
a softmax head picks the next node type (or stop), a sigmoid head decides
whether the newest node takes another incoming edge, and a softmax over the
not-yet-linked earlier nodes picks the edge source. Node embeddings come from
R synchronous message-passing rounds over the current partial graph (two-layer
perceptron messages, gated-recurrent updates, gated-sum readout), recomputed
from the type embeddings after every structural change.

The dataset seed node is conditioned by identity: a per-dataset embedding row
is added to the DATASET type embedding, which is how generation from the
nearest-neighbor dataset differs across seeds.

Everything is numpy with hand-written reverse-mode gradients; training is
plain Adam. Gradient correctness is pinned against central finite differences
in the test suite.
"""

from __future__ import annotations

import struct
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DivergedLoss, InvalidGraph, NoValidGraph, VocabMismatch
from .filtering import (
    DATASET_ID,
    READ_CSV_ID,
    STOP_ID,
    NodeVocabulary,
    PGEdge,
    PGNode,
    PipelineGraph,
    pipeline_graph_violations,
)
from .traces import (
    ADD_EDGE_NO,
    ADD_EDGE_YES,
    ADD_NODE,
    PICK_NODE,
    STOP_NODES,
    GenerationTrace,
    canonicalize_graph,
    canonicalize_trace,
)

DEFAULT_HIDDEN = 32
DEFAULT_ROUNDS = 2
DEFAULT_MAX_NODES = 16

_TENSOR_ORDER = (
    "E", "D",
    "msg_W1", "msg_b1", "msg_W2", "msg_b2",
    "gru_Wz", "gru_Uz", "gru_bz",
    "gru_Wr", "gru_Ur", "gru_br",
    "gru_Wh", "gru_Uh", "gru_bh",
    "ro_wg", "ro_bg", "ro_Wp", "ro_bp",
    "an_W", "an_b",
    "ae_w", "ae_b",
    "pn_W1", "pn_b1", "pn_w2", "pn_b2",
)


@dataclass
class GeneratorParams:
    vocab_size: int
    hidden: int
    rounds: int
    dataset_names: list[str]
    tensors: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        self._name_row = {n: i for i, n in enumerate(self.dataset_names)}

    def dataset_row(self, name: str) -> int | None:
        return self._name_row.get(name)

    def zeros_like(self) -> dict[str, np.ndarray]:
        return {k: np.zeros_like(v) for k, v in self.tensors.items()}

    def check_finite(self) -> None:
        for key, tensor in self.tensors.items():
            if not np.all(np.isfinite(tensor)):
                raise DivergedLoss(f"non-finite values in {key}")


def _xavier(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    if len(shape) == 1:
        return np.zeros(shape)
    fan_in, fan_out = shape[0], shape[1]
    limit = np.sqrt(6.0 / (fan_in + fan_out))
    return rng.uniform(-limit, limit, size=shape)


def init_params(vocab_size: int, dataset_names: list[str],
                hidden: int = DEFAULT_HIDDEN, rounds: int = DEFAULT_ROUNDS,
                seed: int = 7) -> GeneratorParams:
    rng = np.random.default_rng(seed)
    h, v, nd = hidden, vocab_size, len(dataset_names)
    tensors = {
        "E": _xavier(rng, (v, h)),
        "D": _xavier(rng, (max(nd, 1), h)) if nd else np.zeros((0, h)),
        "msg_W1": _xavier(rng, (2 * h, 2 * h)),
        "msg_b1": np.zeros(2 * h),
        "msg_W2": _xavier(rng, (2 * h, h)),
        "msg_b2": np.zeros(h),
        "gru_Wz": _xavier(rng, (h, h)), "gru_Uz": _xavier(rng, (h, h)),
        "gru_bz": np.zeros(h),
        "gru_Wr": _xavier(rng, (h, h)), "gru_Ur": _xavier(rng, (h, h)),
        "gru_br": np.zeros(h),
        "gru_Wh": _xavier(rng, (h, h)), "gru_Uh": _xavier(rng, (h, h)),
        "gru_bh": np.zeros(h),
        "ro_wg": _xavier(rng, (h, 1))[:, 0], "ro_bg": np.zeros(()),
        "ro_Wp": _xavier(rng, (h, 2 * h)), "ro_bp": np.zeros(2 * h),
        "an_W": _xavier(rng, (2 * h, v + 1)), "an_b": np.zeros(v + 1),
        "ae_w": _xavier(rng, (3 * h, 1))[:, 0], "ae_b": np.zeros(()),
        "pn_W1": _xavier(rng, (2 * h, h)), "pn_b1": np.zeros(h),
        "pn_w2": _xavier(rng, (h, 1))[:, 0], "pn_b2": np.zeros(()),
    }
    if nd:
        tensors["D"] = tensors["D"][:nd]
    return GeneratorParams(vocab_size=vocab_size, hidden=hidden,
                           rounds=rounds, dataset_names=list(dataset_names),
                           tensors=tensors)


def _sigmoid(x: np.ndarray) -> np.ndarray:
    out = np.empty_like(x, dtype=np.float64)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def _log_softmax(logits: np.ndarray) -> np.ndarray:
    m = logits.max()
    return logits - (m + np.log(np.exp(logits - m).sum()))


def _softplus(x: float) -> float:
    return float(np.logaddexp(0.0, x))


# ---------------------------------------------------------------------------
# Forward/backward over one structure snapshot
# ---------------------------------------------------------------------------

class Snapshot:
    """Propagation over one partial graph plus decision heads.

    Forward runs eagerly on construction; head methods accumulate loss and
    head-side gradients; :meth:`backward` pushes the collected adjoints back
    through readout, the R propagation rounds, and the embeddings.
    """

    def __init__(self, params: GeneratorParams, types: tuple[int, ...],
                 edges: tuple[tuple[int, int], ...],
                 dataset_row: int | None) -> None:
        self.p = params
        self.types = types
        self.edges = edges
        self.dataset_row = dataset_row
        t = params.tensors
        n = len(types)
        h = params.hidden

        H = t["E"][list(types)].copy()
        if dataset_row is not None:
            H[0] = H[0] + t["D"][dataset_row]
        self.H0 = H

        if edges:
            snd: list[int] = []
            rcv: list[int] = []
            for a, b in edges:
                snd.extend((a, b))
                rcv.extend((b, a))
            self.snd = np.array(snd)
            self.rcv = np.array(rcv)
            mask = np.zeros(n, dtype=bool)
            mask[self.rcv] = True
        else:
            self.snd = np.zeros(0, dtype=int)
            self.rcv = np.zeros(0, dtype=int)
            mask = np.zeros(n, dtype=bool)
        self.mask = mask[:, None]

        self.rounds: list[dict] = []
        for _ in range(params.rounds):
            if len(self.snd) == 0:
                break  # nothing receives messages; embeddings stay put
            X = np.concatenate([H[self.snd], H[self.rcv]], axis=1)
            Z1 = np.tanh(X @ t["msg_W1"] + t["msg_b1"])
            Msg = Z1 @ t["msg_W2"] + t["msg_b2"]
            M = np.zeros((n, h))
            np.add.at(M, self.rcv, Msg)
            z = _sigmoid(M @ t["gru_Wz"] + H @ t["gru_Uz"] + t["gru_bz"])
            r = _sigmoid(M @ t["gru_Wr"] + H @ t["gru_Ur"] + t["gru_br"])
            c = np.tanh(M @ t["gru_Wh"] + (r * H) @ t["gru_Uh"] + t["gru_bh"])
            Hn = np.where(self.mask, (1.0 - z) * H + z * c, H)
            self.rounds.append({"H_prev": H, "X": X, "Z1": Z1, "M": M,
                                "z": z, "r": r, "c": c})
            H = Hn
        self.HR = H

        glog = H @ t["ro_wg"] + t["ro_bg"]
        self.gate = _sigmoid(glog)
        self.P = H @ t["ro_Wp"] + t["ro_bp"]
        self.hG = (self.gate[:, None] * self.P).sum(axis=0)

        self.d_hG = np.zeros_like(self.hG)
        self.d_HR = np.zeros_like(self.HR)

    # -- decision heads ----------------------------------------------------

    def addnode_logprobs(self) -> np.ndarray:
        t = self.p.tensors
        return _log_softmax(self.hG @ t["an_W"] + t["an_b"])

    def addnode_loss(self, choice: int, grads: dict | None) -> float:
        t = self.p.tensors
        logits = self.hG @ t["an_W"] + t["an_b"]
        logp = _log_softmax(logits)
        if grads is not None:
            dlogits = np.exp(logp)
            dlogits[choice] -= 1.0
            grads["an_W"] += np.outer(self.hG, dlogits)
            grads["an_b"] += dlogits
            self.d_hG += t["an_W"] @ dlogits
        return -float(logp[choice])

    def addedge_yes_logprob(self) -> tuple[float, float]:
        t = self.p.tensors
        new = len(self.types) - 1
        x = np.concatenate([self.hG, self.HR[new]])
        logit = float(x @ t["ae_w"] + t["ae_b"])
        return -_softplus(-logit), -_softplus(logit)  # (log P(yes), log P(no))

    def addedge_loss(self, yes: bool, grads: dict | None) -> float:
        t = self.p.tensors
        new = len(self.types) - 1
        x = np.concatenate([self.hG, self.HR[new]])
        logit = float(x @ t["ae_w"] + t["ae_b"])
        loss = _softplus(-logit) if yes else _softplus(logit)
        if grads is not None:
            dlogit = -_sigmoid(np.array(-logit)) if yes else _sigmoid(np.array(logit))
            dlogit = float(dlogit)
            grads["ae_w"] += dlogit * x
            grads["ae_b"] += dlogit
            two_h = self.hG.shape[0]
            self.d_hG += dlogit * t["ae_w"][:two_h]
            self.d_HR[new] += dlogit * t["ae_w"][two_h:]
        return loss

    def picknode_logprobs(self, candidates: tuple[int, ...]) -> np.ndarray:
        s, _, _ = self._pick_scores(candidates)
        return _log_softmax(s)

    def _pick_scores(self, candidates: tuple[int, ...]):
        t = self.p.tensors
        new = len(self.types) - 1
        C = np.array(candidates)
        Xp = np.concatenate(
            [self.HR[C], np.repeat(self.HR[new][None, :], len(C), axis=0)],
            axis=1)
        Y = np.tanh(Xp @ t["pn_W1"] + t["pn_b1"])
        s = Y @ t["pn_w2"] + t["pn_b2"]
        return s, Y, Xp

    def picknode_loss(self, picked: int, candidates: tuple[int, ...],
                      grads: dict | None) -> float:
        t = self.p.tensors
        s, Y, Xp = self._pick_scores(candidates)
        logp = _log_softmax(s)
        pos = candidates.index(picked)
        if grads is not None:
            ds = np.exp(logp)
            ds[pos] -= 1.0
            grads["pn_w2"] += Y.T @ ds
            grads["pn_b2"] += ds.sum()
            dY = np.outer(ds, t["pn_w2"])
            dA = dY * (1.0 - Y * Y)
            grads["pn_W1"] += Xp.T @ dA
            grads["pn_b1"] += dA.sum(axis=0)
            dXp = dA @ t["pn_W1"].T
            h = self.p.hidden
            new = len(self.types) - 1
            C = np.array(candidates)
            self.d_HR[C] += dXp[:, :h]
            self.d_HR[new] += dXp[:, h:].sum(axis=0)
        return -float(logp[pos])

    # -- reverse pass -------------------------------------------------------

    def backward(self, grads: dict) -> None:
        t = self.p.tensors
        HR, gate, P = self.HR, self.gate, self.P
        dP = np.outer(gate, self.d_hG)
        dg = P @ self.d_hG
        grads["ro_Wp"] += HR.T @ dP
        grads["ro_bp"] += dP.sum(axis=0)
        dH = self.d_HR + dP @ t["ro_Wp"].T
        dglog = dg * gate * (1.0 - gate)
        grads["ro_wg"] += HR.T @ dglog
        grads["ro_bg"] += dglog.sum()
        dH += np.outer(dglog, t["ro_wg"])

        for cache in reversed(self.rounds):
            H_prev, X, Z1 = cache["H_prev"], cache["X"], cache["Z1"]
            M, z, r, c = cache["M"], cache["z"], cache["r"], cache["c"]
            dH_prev = dH * (~self.mask)
            dHn = dH * self.mask
            dz = dHn * (c - H_prev)
            dc = dHn * z
            dH_prev = dH_prev + dHn * (1.0 - z)

            dah = dc * (1.0 - c * c)
            grads["gru_Wh"] += M.T @ dah
            grads["gru_Uh"] += (r * H_prev).T @ dah
            grads["gru_bh"] += dah.sum(axis=0)
            dM = dah @ t["gru_Wh"].T
            drH = dah @ t["gru_Uh"].T
            dr = drH * H_prev
            dH_prev = dH_prev + drH * r

            dar = dr * r * (1.0 - r)
            grads["gru_Wr"] += M.T @ dar
            grads["gru_Ur"] += H_prev.T @ dar
            grads["gru_br"] += dar.sum(axis=0)
            dM += dar @ t["gru_Wr"].T
            dH_prev = dH_prev + dar @ t["gru_Ur"].T

            daz = dz * z * (1.0 - z)
            grads["gru_Wz"] += M.T @ daz
            grads["gru_Uz"] += H_prev.T @ daz
            grads["gru_bz"] += daz.sum(axis=0)
            dM += daz @ t["gru_Wz"].T
            dH_prev = dH_prev + daz @ t["gru_Uz"].T

            dMsg = dM[self.rcv]
            grads["msg_W2"] += Z1.T @ dMsg
            grads["msg_b2"] += dMsg.sum(axis=0)
            dZ1 = dMsg @ t["msg_W2"].T
            dA1 = dZ1 * (1.0 - Z1 * Z1)
            grads["msg_W1"] += X.T @ dA1
            grads["msg_b1"] += dA1.sum(axis=0)
            dX = dA1 @ t["msg_W1"].T
            h = self.p.hidden
            np.add.at(dH_prev, self.snd, dX[:, :h])
            np.add.at(dH_prev, self.rcv, dX[:, h:])
            dH = dH_prev

        types = np.array(self.types)
        np.add.at(grads["E"], types, dH)
        if self.dataset_row is not None:
            grads["D"][self.dataset_row] += dH[0]


def propagate(params: GeneratorParams, types: tuple[int, ...],
              edges: tuple[tuple[int, int], ...],
              dataset_row: int | None = None,
              ) -> tuple[np.ndarray, np.ndarray]:
    """Node embeddings and graph embedding after R propagation rounds."""
    snap = Snapshot(params, types, edges, dataset_row)
    return snap.HR, snap.hG


# ---------------------------------------------------------------------------
# Teacher forcing
# ---------------------------------------------------------------------------

def _decision_groups(trace: GenerationTrace, vocab_size: int):
    """Group decisions by the structure snapshot they are evaluated on.

    Yields (types, edges, decisions); decisions are ("an", head_index),
    ("ae", yes?), or ("pn", picked, candidates). The stop action is head
    index ``vocab_size``.
    """
    types: list[int] = [DATASET_ID, READ_CSV_ID]
    edges: list[tuple[int, int]] = [(0, 1)]
    linked: set[int] = set()
    current = -1
    pending_candidates: tuple[int, ...] | None = None
    groups: list[tuple[tuple, tuple, list]] = []
    cur: list[tuple] = []

    def flush() -> None:
        nonlocal cur
        if cur:
            groups.append((tuple(types), tuple(edges), cur))
            cur = []

    steps = iter(trace.steps)
    for step in steps:
        kind = step[0]
        if kind == ADD_NODE:
            vid = step[1]
            if not 0 <= vid < vocab_size:
                raise VocabMismatch(f"vocab id {vid} out of range")
            cur.append(("an", vid))
            flush()
            types.append(vid)
            current = len(types) - 1
            linked = set()
        elif kind == STOP_NODES:
            cur.append(("an", vocab_size))
            flush()
        elif kind == ADD_EDGE_YES:
            candidates = tuple(i for i in range(current) if i not in linked)
            if not candidates:
                raise InvalidGraph("add-edge with no candidates")
            cur.append(("ae", True))
            pick = next(steps, None)
            if pick is None or pick[0] != PICK_NODE:
                raise InvalidGraph("add-edge-yes must be followed by a pick")
            picked = pick[1]
            if picked not in candidates:
                raise InvalidGraph(f"pick {picked} not a candidate")
            cur.append(("pn", picked, candidates))
            flush()
            edges.append((picked, current))
            linked.add(picked)
        elif kind == ADD_EDGE_NO:
            candidates = tuple(i for i in range(current) if i not in linked)
            if not candidates:
                raise InvalidGraph("explicit no with no candidates")
            cur.append(("ae", False))
            current = -1
        else:
            raise InvalidGraph(f"unknown step {step!r}")
    flush()
    return groups


def trace_nll(trace: GenerationTrace, params: GeneratorParams,
              compute_grads: bool = True,
              ) -> tuple[float, dict[str, np.ndarray] | None]:
    """Negative log-likelihood of a trace plus exact parameter gradients."""
    grads = params.zeros_like() if compute_grads else None
    row = params.dataset_row(trace.dataset_name)
    loss = 0.0
    for types, edges, decisions in _decision_groups(trace, params.vocab_size):
        snap = Snapshot(params, types, edges, row)
        for decision in decisions:
            if decision[0] == "an":
                loss += snap.addnode_loss(decision[1], grads)
            elif decision[0] == "ae":
                loss += snap.addedge_loss(decision[1], grads)
            else:
                loss += snap.picknode_loss(decision[1], decision[2], grads)
        if grads is not None:
            snap.backward(grads)
    if not np.isfinite(loss):
        raise DivergedLoss(f"trace {trace.graph_id}: non-finite loss")
    return loss, grads


# ---------------------------------------------------------------------------
# Training
# ---------------------------------------------------------------------------

@dataclass
class TrainHyper:
    epochs: int = 15
    learning_rate: float = 1e-3
    seed: int = 7
    rounds: int = DEFAULT_ROUNDS
    hidden: int = DEFAULT_HIDDEN
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8


@dataclass
class EpochLog:
    epoch: int
    mean_nll: float
    seconds: float


def train(traces: list[GenerationTrace], vocab: NodeVocabulary,
          hyper: TrainHyper | None = None,
          ) -> tuple[GeneratorParams, list[EpochLog]]:
    """Adam over per-trace NLL; deterministic for a fixed seed."""
    if not traces:
        raise ValueError("training corpus is empty")
    hyper = hyper or TrainHyper()
    dataset_names = sorted({t.dataset_name for t in traces})
    params = init_params(vocab.size, dataset_names, hidden=hyper.hidden,
                         rounds=hyper.rounds, seed=hyper.seed)
    m = params.zeros_like()
    v = params.zeros_like()
    step = 0
    rng = np.random.default_rng(hyper.seed)
    log: list[EpochLog] = []
    for epoch in range(1, hyper.epochs + 1):
        started = time.monotonic()
        order = rng.permutation(len(traces))
        losses = []
        for idx in order:
            loss, grads = trace_nll(traces[idx], params)
            losses.append(loss)
            step += 1
            for key, grad in grads.items():
                m[key] = hyper.beta1 * m[key] + (1 - hyper.beta1) * grad
                v[key] = hyper.beta2 * v[key] + (1 - hyper.beta2) * grad * grad
                m_hat = m[key] / (1 - hyper.beta1 ** step)
                v_hat = v[key] / (1 - hyper.beta2 ** step)
                params.tensors[key] -= (hyper.learning_rate * m_hat
                                        / (np.sqrt(v_hat) + hyper.eps))
        params.check_finite()
        mean_nll = float(np.mean(losses))
        if not np.isfinite(mean_nll):
            raise DivergedLoss(f"epoch {epoch}: mean NLL is not finite")
        log.append(EpochLog(epoch, mean_nll, time.monotonic() - started))
    return params, log


# ---------------------------------------------------------------------------
# Generation
# ---------------------------------------------------------------------------

@dataclass
class ScoredGraph:
    graph: PipelineGraph
    log_prob: float
    n_decisions: int

    @property
    def length_normalized(self) -> float:
        return self.log_prob / max(1, self.n_decisions)


@dataclass
class GenerationResult:
    graphs: list[ScoredGraph]
    dataset_name: str
    wall_time: float


def _sample_one(params: GeneratorParams, vocab: NodeVocabulary,
                dataset_name: str, max_nodes: int,
                rng: np.random.Generator | None,
                ) -> tuple[PipelineGraph, float, int]:
    """One ancestral rollout; greedy when *rng* is None."""
    row = params.dataset_row(dataset_name)
    types: list[int] = [DATASET_ID, READ_CSV_ID]
    edges: list[tuple[int, int]] = [(0, 1)]
    log_prob = 0.0
    n_decisions = 0
    stop_index = params.vocab_size

    def choose(logprobs: np.ndarray) -> int:
        if rng is None:
            return int(np.argmax(logprobs))
        return int(rng.choice(len(logprobs), p=np.exp(logprobs)))

    while True:
        snap = Snapshot(params, tuple(types), tuple(edges), row)
        logp = snap.addnode_logprobs()
        if len(types) >= max_nodes:
            # Forced stop at the size cap, still scored (see trace contract).
            log_prob += float(logp[stop_index])
            n_decisions += 1
            break
        choice = choose(logp)
        log_prob += float(logp[choice])
        n_decisions += 1
        if choice == stop_index:
            break
        types.append(choice)
        new = len(types) - 1
        linked: set[int] = set()
        while True:
            candidates = tuple(i for i in range(new) if i not in linked)
            if not candidates:
                break
            snap = Snapshot(params, tuple(types), tuple(edges), row)
            log_yes, log_no = snap.addedge_yes_logprob()
            if rng is None:
                take = log_yes > log_no
            else:
                take = rng.random() < np.exp(log_yes)
            n_decisions += 1
            if not take:
                log_prob += log_no
                break
            log_prob += log_yes
            pick_logp = snap.picknode_logprobs(candidates)
            pos = choose(pick_logp)
            log_prob += float(pick_logp[pos])
            n_decisions += 1
            picked = candidates[pos]
            edges.append((picked, new))
            linked.add(picked)

    graph = PipelineGraph(
        graph_id=f"gen-{dataset_name}",
        dataset_name=dataset_name,
        nodes=[PGNode(i, t) for i, t in enumerate(types)],
        edges=[PGEdge(a, b) for a, b in edges],
    )
    return graph, log_prob, n_decisions


def _is_generable(graph: PipelineGraph, vocab: NodeVocabulary,
                  max_nodes: int) -> bool:
    """Valid pipeline graph that maps to at least one skeleton."""
    if pipeline_graph_violations(graph, vocab, max_nodes):
        return False
    ids = graph.vocab_ids()
    if STOP_ID in ids:
        return False
    estimators = vocab.estimator_ids()
    return any(v in estimators for v in ids)


def generate(params: GeneratorParams, vocab: NodeVocabulary,
             dataset_name: str, k: int, max_nodes: int = DEFAULT_MAX_NODES,
             mode: str = "greedy", sample_seed: int = 0,
             retry_budget: int = 50) -> GenerationResult:
    """Top-K conditional generation from the DATASET->READ_CSV seed.

    ``greedy`` produces the argmax rollout first and fills the remaining
    slots by seeded ancestral sampling; ``sampled`` draws everything from
    the given seed. Distinct graphs are collected by canonical-form dedup
    with a bounded retry budget; invalid rollouts (no estimator, stray seed
    nodes, disconnected) are discarded and resampled.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if max_nodes < 2:
        raise ValueError("max_nodes must be at least 2")
    if mode not in ("greedy", "sampled"):
        raise ValueError(f"unknown mode {mode!r}")

    started = time.monotonic()
    rng = np.random.default_rng(sample_seed)
    collected: dict[tuple, ScoredGraph] = {}
    failures = 0

    def consider(graph: PipelineGraph, log_prob: float, n_dec: int) -> bool:
        canon = canonicalize_graph(graph)
        if not _is_generable(canon, vocab, max_nodes):
            return False
        key = (tuple(canon.vocab_ids()), tuple(sorted(canon.edge_set())))
        if key in collected:
            return False
        collected[key] = ScoredGraph(canon, log_prob, n_dec)
        return True

    if mode == "greedy":
        graph, log_prob, n_dec = _sample_one(params, vocab, dataset_name,
                                             max_nodes, rng=None)
        if not consider(graph, log_prob, n_dec):
            failures += 1
    while len(collected) < k and failures < retry_budget:
        graph, log_prob, n_dec = _sample_one(params, vocab, dataset_name,
                                             max_nodes, rng=rng)
        if not consider(graph, log_prob, n_dec):
            failures += 1
    if not collected:
        raise NoValidGraph(
            f"no valid graph for {dataset_name!r} after {failures} retries")

    graphs = sorted(collected.values(), key=lambda s: -s.log_prob)[:k]
    for i, scored in enumerate(graphs):
        scored.graph.graph_id = f"gen-{dataset_name}-{i}"
    return GenerationResult(graphs=graphs, dataset_name=dataset_name,
                            wall_time=time.monotonic() - started)


# ---------------------------------------------------------------------------
# Model file: "PGEN" header, dataset names, tensors as f32
# ---------------------------------------------------------------------------

_MAGIC = b"PGEN"
_VERSION = 1


def save_params(params: GeneratorParams, path: Path) -> None:
    with Path(path).open("wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<IIII", _VERSION, params.vocab_size,
                             params.hidden, params.rounds))
        fh.write(struct.pack("<I", len(params.dataset_names)))
        for name in params.dataset_names:
            encoded = name.encode("utf-8")
            fh.write(struct.pack("<I", len(encoded)))
            fh.write(encoded)
        for key in _TENSOR_ORDER:
            tensor = params.tensors[key]
            fh.write(struct.pack("<I", tensor.ndim))
            for dim in tensor.shape:
                fh.write(struct.pack("<I", dim))
            fh.write(np.ascontiguousarray(tensor, dtype="<f4").tobytes())


def load_params(path: Path) -> GeneratorParams:
    data = Path(path).read_bytes()
    if data[:4] != _MAGIC:
        raise ValueError(f"{path}: not a PGEN model file")
    version, vocab_size, hidden, rounds = struct.unpack_from("<IIII", data, 4)
    if version != _VERSION:
        raise ValueError(f"{path}: unsupported model version {version}")
    offset = 20
    (n_names,) = struct.unpack_from("<I", data, offset)
    offset += 4
    names: list[str] = []
    for _ in range(n_names):
        (length,) = struct.unpack_from("<I", data, offset)
        offset += 4
        names.append(data[offset:offset + length].decode("utf-8"))
        offset += length
    tensors: dict[str, np.ndarray] = {}
    for key in _TENSOR_ORDER:
        (ndim,) = struct.unpack_from("<I", data, offset)
        offset += 4
        shape = []
        for _ in range(ndim):
            (dim,) = struct.unpack_from("<I", data, offset)
            offset += 4
            shape.append(dim)
        count = int(np.prod(shape)) if shape else 1
        tensor = np.frombuffer(data, dtype="<f4", count=count,
                               offset=offset).astype(np.float64)
        offset += 4 * count
        tensors[key] = tensor.reshape(shape) if shape else tensor.reshape(())
    return GeneratorParams(vocab_size=vocab_size, hidden=hidden, rounds=rounds,
                           dataset_names=names, tensors=tensors)


def traces_from_graphs(graphs: list[PipelineGraph], vocab: NodeVocabulary,
                       include_unknown: bool = False,
                       ) -> list[GenerationTrace]:
    """Canonical traces for a corpus; unknown-dataset graphs excluded by default."""
    out = []
    for g in graphs:
        if not include_unknown and g.dataset_name == "unknown_dataset":
            continue
        out.append(canonicalize_trace(g, vocab))
    return out

"""The ``pipeforge`` command: mine, train, prepare, recommend, evaluate.

Exit codes: 0 success, 2 input error, 3 training divergence, 4 no valid
recommendation after the nearest-neighbor fallback policy.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from pathlib import Path

from . import analyzer, filtering, generator, metrics, prep, profiling, report
from .config import Config, load_config
from .errors import (
    BudgetExhausted,
    DivergedLoss,
    EmptyIndex,
    NoEstimator,
    NoValidGraph,
    PipeforgeError,
)
from .skeletons import (
    Accepted,
    default_registry_path,
    dedupe_rank,
    dump_skeleton_doc,
    load_registry,
    skeleton_doc,
    to_skeletons,
    validate_against,
)

logger = logging.getLogger("pipeforge")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DIVERGED = 3
EXIT_NO_GRAPH = 4


def _fail(code: int, message: str) -> int:
    logger.error(message)
    return code


def _out_path(raw: str | Path, cfg: Config) -> Path:
    """Output artifacts land under the configured workdir root."""
    path = Path(raw)
    return path if path.is_absolute() else cfg.workdir / path


# ---------------------------------------------------------------------------
# mine
# ---------------------------------------------------------------------------

def cmd_mine(args: argparse.Namespace, cfg: Config) -> int:
    scripts_dir = Path(args.scripts_dir)
    datasets_dir = Path(args.datasets_dir)
    if not scripts_dir.is_dir():
        return _fail(EXIT_INPUT, f"scripts directory not found: {scripts_dir}")
    if not datasets_dir.is_dir():
        return _fail(EXIT_INPUT, f"datasets directory not found: {datasets_dir}")
    out_dir = _out_path(args.out, cfg)
    out_dir.mkdir(parents=True, exist_ok=True)

    vocab = (filtering.build_vocabulary(Path(args.vocab)) if args.vocab
             else filtering.default_vocabulary())
    sidecar = {}
    if args.sidecar:
        sidecar = json.loads(Path(args.sidecar).read_text())

    scripts = sorted(scripts_dir.glob("*.py"))
    if not scripts:
        logger.warning("no scripts found under %s", scripts_dir)
    graphs, mine_report = analyzer.mine_scripts(scripts)
    analyzer.write_code_graphs(graphs, out_dir / "code_graphs.jsonl")

    pipelines, filter_report = filtering.filter_corpus(
        graphs, vocab, sidecar, max_nodes=cfg.max_nodes * 4)
    filtering.write_pipeline_graphs(pipelines, out_dir / "pipeline_graphs.jsonl")
    (out_dir / "vocabulary.json").write_text(
        json.dumps(vocab.to_json_doc(), indent=2))

    csv_paths = sorted(datasets_dir.glob("*.csv"))
    embeddings = []
    for path in csv_paths:
        name, header, columns = profiling.load_table(path,
                                                     delimiter=args.delimiter)
        embeddings.append(profiling.profile_table(
            name, header, columns, d=cfg.embedding_dim,
            hash_seed=cfg.hash_seed))
    index = profiling.build_index(embeddings, dimension=cfg.embedding_dim)
    profiling.save_index(index, out_dir / "index.pfix")

    doc = json.loads(filter_report.to_json())
    doc["scripts_excluded_at_parse"] = mine_report.excluded
    doc["skipped_constructs"] = mine_report.skipped_constructs
    doc["datasets_indexed"] = len(embeddings)
    print(json.dumps(doc, sort_keys=True, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# train
# ---------------------------------------------------------------------------

def cmd_train(args: argparse.Namespace, cfg: Config) -> int:
    corpus_path = Path(args.corpus)
    if not corpus_path.is_file():
        return _fail(EXIT_INPUT, f"corpus not found: {corpus_path}")
    vocab = (filtering.build_vocabulary(Path(args.vocab)) if args.vocab
             else filtering.default_vocabulary())
    graphs = list(filtering.read_pipeline_graphs(corpus_path))
    traces = generator.traces_from_graphs(graphs, vocab,
                                          include_unknown=args.include_unknown)
    if not traces:
        return _fail(EXIT_INPUT, f"no trainable graphs in {corpus_path}")

    hyper = generator.TrainHyper(
        epochs=args.epochs, learning_rate=args.lr, seed=cfg.seed,
        rounds=cfg.rounds, hidden=cfg.hidden_size)
    try:
        params, log = generator.train(traces, vocab, hyper)
    except DivergedLoss as exc:
        return _fail(EXIT_DIVERGED, f"training diverged: {exc}")

    model_path = _out_path(args.out, cfg)
    model_path.parent.mkdir(parents=True, exist_ok=True)
    generator.save_params(params, model_path)

    loss_path = model_path.with_suffix(".loss.csv")
    with loss_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["epoch", "mean_nll", "seconds"])
        for entry in log:
            writer.writerow([entry.epoch, f"{entry.mean_nll:.6f}",
                             f"{entry.seconds:.3f}"])
    if not args.no_figures and log:
        report.render_loss_curve([e.epoch for e in log],
                                 [e.mean_nll for e in log],
                                 model_path.with_suffix(".loss.png"))
    final = log[-1].mean_nll if log else float("nan")
    print(f"final mean NLL: {final:.6f} over {len(traces)} traces "
          f"({len(log)} epochs)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# prepare
# ---------------------------------------------------------------------------

def cmd_prepare(args: argparse.Namespace, cfg: Config) -> int:
    csv_path = Path(args.dataset)
    if not csv_path.is_file():
        return _fail(EXIT_INPUT, f"dataset not found: {csv_path}")
    try:
        name, header, columns = profiling.load_table(csv_path,
                                                     delimiter=args.delimiter)
        prepared = prep.prepare_dataset(name, header, columns,
                                        target=args.target,
                                        out_dir=_out_path(args.out_dir, cfg),
                                        hash_seed=cfg.hash_seed)
    except (KeyError, ValueError, PipeforgeError) as exc:
        return _fail(EXIT_INPUT, f"preparation failed: {exc}")
    print(json.dumps({"dataset": prepared.name, "task": prepared.task,
                      "rows": prepared.row_count,
                      "matrix": str(prepared.matrix_path),
                      "dropped_columns": prepared.dropped_columns},
                     sort_keys=True, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# recommend
# ---------------------------------------------------------------------------

def cmd_recommend(args: argparse.Namespace, cfg: Config) -> int:
    started = time.monotonic()
    csv_path = Path(args.dataset)
    model_path = Path(args.model)
    index_path = Path(args.index)
    registry_path = Path(args.registry) if args.registry else default_registry_path()
    for path, what in ((csv_path, "dataset"), (model_path, "model"),
                       (index_path, "index"), (registry_path, "registry")):
        if not path.is_file():
            return _fail(EXIT_INPUT, f"{what} not found: {path}")

    vocab = (filtering.build_vocabulary(Path(args.vocab)) if args.vocab
             else filtering.default_vocabulary())
    params = generator.load_params(model_path)
    if params.vocab_size != vocab.size:
        return _fail(EXIT_INPUT,
                     f"model vocabulary size {params.vocab_size} does not "
                     f"match vocabulary {vocab.size}")
    index = profiling.load_index(index_path)
    registry = load_registry(registry_path)

    try:
        name, header, columns = profiling.load_table(csv_path,
                                                     delimiter=args.delimiter)
    except ValueError as exc:
        return _fail(EXIT_INPUT, str(exc))
    if args.target not in header:
        return _fail(EXIT_INPUT, f"target column {args.target!r} not in header")
    task = prep.detect_task(columns[header.index(args.target)])

    embedding = profiling.profile_table(name, header, columns,
                                        d=index.dimension,
                                        hash_seed=cfg.hash_seed)
    try:
        neighbors = profiling.nearest(embedding, index, k=3)
    except EmptyIndex:
        return _fail(EXIT_INPUT, "embedding index is empty")
    logger.info("nearest neighbors: %s", neighbors)

    k = args.k if args.k is not None else cfg.k_default
    chosen = None
    for neighbor_name, distance in neighbors:
        try:
            result = generator.generate(
                params, vocab, neighbor_name, k=k, max_nodes=cfg.max_nodes,
                mode=args.mode, sample_seed=args.sample_seed
                if args.sample_seed is not None else cfg.seed,
                retry_budget=cfg.retry_budget)
        except NoValidGraph as exc:
            logger.warning("generation failed for %s: %s", neighbor_name, exc)
            continue
        skeletons = []
        for scored in result.graphs:
            try:
                for skeleton in to_skeletons(scored.graph, vocab):
                    skeleton.log_prob = scored.log_prob
                    outcome = validate_against(skeleton, registry)
                    if isinstance(outcome, Accepted):
                        if outcome.dropped_preprocessors:
                            logger.info("dropped unsupported preprocessors %s",
                                        outcome.dropped_preprocessors)
                        skeletons.append(outcome.skeleton)
            except NoEstimator:
                continue
        skeletons = dedupe_rank(skeletons)[:k]
        if skeletons:
            chosen = (neighbor_name, distance, skeletons)
            break
        logger.warning("no registry-valid skeletons for %s", neighbor_name)
    if chosen is None:
        return _fail(EXIT_NO_GRAPH,
                     "no valid pipeline graphs for any nearby dataset")
    neighbor_name, distance, skeletons = chosen

    per_graph = 0.0
    if args.budget is not None:
        consumed = time.monotonic() - started
        try:
            plan = prep.plan_budget(args.budget, consumed, k)
        except BudgetExhausted:
            return _fail(EXIT_INPUT,
                         f"budget {args.budget}s already consumed by "
                         f"generation ({consumed:.1f}s)")
        per_graph = plan.per_graph

    doc = skeleton_doc(
        dataset=name, task=task,
        entries=[s.to_doc(budget_seconds=per_graph) for s in skeletons],
        registry_name=registry.optimizer_name)
    doc["neighbor"] = {"dataset": neighbor_name, "distance": round(distance, 9)}
    text = dump_skeleton_doc(doc)
    if args.out:
        out = _out_path(args.out, cfg)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# evaluate
# ---------------------------------------------------------------------------

def cmd_evaluate(args: argparse.Namespace, cfg: Config) -> int:
    results_dir = Path(args.results_dir)
    if not results_dir.is_dir():
        return _fail(EXIT_INPUT, f"results directory not found: {results_dir}")
    files = sorted(results_dir.glob("*.json"))
    if not files:
        return _fail(EXIT_INPUT, f"no result files under {results_dir}")
    out_dir = _out_path(args.out, cfg) if args.out else results_dir
    out_dir.mkdir(parents=True, exist_ok=True)

    runs = []
    for path in files:
        try:
            doc = json.loads(path.read_text())
            runs.append({
                "dataset": doc["dataset"],
                "system": doc.get("system", doc.get("optimizer", "unknown")),
                "task": doc.get("task", "unknown"),
                "source": doc.get("source", "local"),
                "results": doc["results"],
                "best": doc.get("best"),
            })
        except (json.JSONDecodeError, KeyError) as exc:
            return _fail(EXIT_INPUT, f"malformed result file {path}: {exc}")

    by_key: dict[tuple, list[float]] = {}
    meta: dict[tuple, tuple[str, str]] = {}
    ranks: list[int] = []
    pipelines: list[list[str]] = []
    top_pipelines: list[list[str]] = []
    for run in runs:
        best = run["best"]
        for entry in run["results"]:
            if entry.get("pipeline"):
                pipelines.append(list(entry["pipeline"]))
        if best and best.get("best_score") is not None:
            key = (run["dataset"], run["system"])
            by_key.setdefault(key, []).append(float(best["best_score"]))
            meta[key] = (run["task"], run["source"])
            ids = [r["skeleton_id"] for r in run["results"]]
            if best.get("skeleton_id") in ids:
                ranks.append(ids.index(best["skeleton_id"]) + 1)
            if best.get("pipeline"):
                top_pipelines.append(list(best["pipeline"]))

    records = []
    for (dataset, system), scores in sorted(by_key.items()):
        task, source = meta[(dataset, system)]
        kind = metrics.R2 if task == "regression" else metrics.F1
        try:
            records.append(metrics.RunRecord(dataset, system, scores, kind,
                                             task, source))
        except ValueError as exc:
            return _fail(EXIT_INPUT, f"bad scores for {dataset}/{system}: {exc}")
    with (out_dir / "metrics.csv").open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["dataset", "system", "score", "task", "source"])
        for rec in records:
            writer.writerow([rec.dataset, rec.system, f"{rec.mean_score:.6f}",
                             rec.task, rec.source])

    freq = metrics.frequency_report(pipelines, top_pipelines)
    for which in ("first_position", "all_positions", "top_model"):
        (out_dir / f"frequency_{which}.csv").write_text(freq.to_csv(which))

    summary = {
        "runs": len(runs),
        "datasets": len({r["dataset"] for r in runs}),
        "mrr": round(metrics.mrr(ranks), 6) if ranks else None,
    }
    if not args.no_figures:
        for which in ("first_position", "all_positions", "top_model"):
            report.render_frequency_bars(
                freq.tables()[which], which.replace("_", " "),
                out_dir / f"frequency_{which}.png")
        if records:
            report.render_score_bars(
                [(r.dataset, r.system, r.mean_score) for r in records],
                out_dir / "scores.png")
    print(json.dumps(summary, sort_keys=True, indent=2))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipeforge",
        description="Mine ML scripts into operator graphs, train a graph "
                    "generator, and recommend budgeted pipeline skeletons.")
    parser.add_argument("--config", type=Path, default=None,
                        help="key=value config file")
    parser.add_argument("--workdir", type=Path, default=None,
                        help="root for relative output artifacts")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="analyze scripts and build the corpus")
    p_mine.add_argument("scripts_dir")
    p_mine.add_argument("datasets_dir")
    p_mine.add_argument("--sidecar", default=None,
                        help="JSON file mapping script id to dataset name")
    p_mine.add_argument("--out", default="corpus")
    p_mine.add_argument("--vocab", default=None)
    p_mine.add_argument("--delimiter", default=",")
    p_mine.set_defaults(func=cmd_mine)

    p_train = sub.add_parser("train", help="train the graph generator")
    p_train.add_argument("--corpus", required=True,
                         help="pipeline_graphs.jsonl from mining")
    p_train.add_argument("--epochs", type=int, default=15)
    p_train.add_argument("--lr", type=float, default=1e-3)
    p_train.add_argument("--seed", type=int, default=None)
    p_train.add_argument("--out", required=True, help="model file (PGEN)")
    p_train.add_argument("--vocab", default=None)
    p_train.add_argument("--include-unknown", action="store_true",
                         help="train on graphs with unknown dataset names")
    p_train.add_argument("--no-figures", action="store_true")
    p_train.set_defaults(func=cmd_train)

    p_prep = sub.add_parser("prepare", help="emit the prepared matrix D'")
    p_prep.add_argument("dataset")
    p_prep.add_argument("--target", required=True)
    p_prep.add_argument("--out-dir", default="prepared")
    p_prep.add_argument("--delimiter", default=",")
    p_prep.set_defaults(func=cmd_prepare)

    p_rec = sub.add_parser("recommend",
                           help="recommend skeletons for an unseen dataset")
    p_rec.add_argument("dataset")
    p_rec.add_argument("--target", required=True)
    p_rec.add_argument("--budget", type=float, default=None,
                       help="total time budget T in seconds")
    p_rec.add_argument("--k", type=int, default=None)
    p_rec.add_argument("--registry", default=None)
    p_rec.add_argument("--model", required=True)
    p_rec.add_argument("--index", required=True)
    p_rec.add_argument("--vocab", default=None)
    p_rec.add_argument("--mode", choices=("greedy", "sampled"),
                       default="greedy")
    p_rec.add_argument("--sample-seed", type=int, default=None)
    p_rec.add_argument("--seed", type=int, default=None)
    p_rec.add_argument("--delimiter", default=",")
    p_rec.add_argument("--out", default=None)
    p_rec.set_defaults(func=cmd_recommend)

    p_eval = sub.add_parser("evaluate", help="aggregate bridge result files")
    p_eval.add_argument("results_dir")
    p_eval.add_argument("--out", default=None)
    p_eval.add_argument("--no-figures", action="store_true")
    p_eval.set_defaults(func=cmd_evaluate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr)
    try:
        cfg = load_config(args.config)
    except (ValueError, OSError) as exc:
        return _fail(EXIT_INPUT, f"bad config: {exc}")
    if args.workdir is not None:
        cfg.workdir = args.workdir
    if getattr(args, "seed", None) is not None:
        cfg.seed = args.seed
    try:
        return args.func(args, cfg)
    except PipeforgeError as exc:
        return _fail(EXIT_INPUT, f"{type(exc).__name__}: {exc}")


if __name__ == "__main__":
    sys.exit(main())

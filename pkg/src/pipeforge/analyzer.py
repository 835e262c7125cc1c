"""Static analysis of ML pipeline scripts into per-script code graphs.

The analyzer handles a bounded subset of Python surface syntax (see SUBSET.md
at the repository root): imports, assignments, calls, attribute chains,
subscripts, and tuple-unpack assignments. Compound statements are linearized
in source order; unsupported constructs are skipped and counted, never fatal.

The output :class:`CodeGraph` has one CallSite node per call expression,
DataFlow edges tracking how objects move through calls (last write wins),
DataSource nodes for string literals fed to read-like calls, and a single
ControlFlow chain over call sites in evaluation order.
"""

from __future__ import annotations

import ast
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import LexError

logger = logging.getLogger(__name__)

# Result tags used in alias environments alongside dotted paths.
DATAFRAME = "dataframe"
UNRESOLVED = "unresolved"

# pandas-style readers whose results are tagged as dataframes and whose
# string-literal arguments become DataSource nodes.
READ_FUNCS = frozenset({
    "read_csv", "read_table", "read_excel", "read_json", "read_parquet",
    "read_feather", "read_pickle", "read_html",
})

# Methods that return the receiver's own type (sklearn fit chaining and
# pandas transformations both behave this way for our purposes).
_SELF_TYPED_PREFIXES = ("fit", "set_")


# ---------------------------------------------------------------------------
# Normalized statements and expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Name:
    ident: str


@dataclass(frozen=True)
class Literal:
    kind: str  # "str" | "num" | "bool" | "none" | "other"
    value: str | None = None  # only kept for strings


@dataclass(frozen=True)
class Opaque:
    """Expression outside the supported subset (binop, comprehension, ...)."""

    reason: str


@dataclass(frozen=True)
class Attribute:
    base: "Expr"
    name: str


@dataclass(frozen=True)
class Subscript:
    base: "Expr"


@dataclass(frozen=True)
class Call:
    callee: "Expr"
    args: tuple["Expr", ...]
    kwargs: tuple[tuple[str | None, "Expr"], ...]
    line: int


Expr = Union[Name, Literal, Opaque, Attribute, Subscript, Call]


@dataclass(frozen=True)
class Import:
    module: str  # dotted path the alias stands for
    alias: str
    line: int


@dataclass(frozen=True)
class Assign:
    targets: tuple[str, ...]
    expr: Expr
    line: int
    # Base variables mutated through a subscript/attribute store
    # (``df["c"] = ...``): their value now flows from the RHS, but the
    # store does not change what kind of object they are.
    mutates: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExprStmt:
    expr: Expr
    line: int


Statement = Union[Import, Assign, ExprStmt]


@dataclass
class ScriptSource:
    path: str
    text: str
    line_count: int = 0

    def __post_init__(self) -> None:
        if self.line_count == 0:
            self.line_count = len(self.text.splitlines())

    @classmethod
    def from_path(cls, path: Path | str) -> "ScriptSource":
        path = Path(path)
        try:
            text = path.read_bytes().decode("utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise LexError(f"{path}: {exc}") from exc
        return cls(path=str(path), text=text)


@dataclass
class StatementList:
    statements: list[Statement]
    skipped: dict[str, int] = field(default_factory=dict)

    def count_calls(self) -> int:
        total = 0
        for stmt in self.statements:
            if isinstance(stmt, (Assign, ExprStmt)):
                total += _count_calls(stmt.expr)
        return total


def _count_calls(expr: Expr) -> int:
    if isinstance(expr, Call):
        inner = sum(_count_calls(a) for a in expr.args)
        inner += sum(_count_calls(v) for _, v in expr.kwargs)
        return 1 + inner + _count_calls(expr.callee)
    if isinstance(expr, Attribute):
        return _count_calls(expr.base)
    if isinstance(expr, Subscript):
        return _count_calls(expr.base)
    return 0


# ---------------------------------------------------------------------------
# Parsing / normalization
# ---------------------------------------------------------------------------

def parse_script(source: ScriptSource) -> StatementList:
    """Normalize a script into the supported statement subset.

    Statements inside loop/conditional/with/try bodies are linearized in
    source order. Unsupported constructs are skipped and counted under a
    short name in the skip report. Raises :class:`LexError` for text the
    parser cannot tokenize at all; corpus drivers catch it and exclude the
    script with a diagnostic.
    """
    try:
        tree = ast.parse(source.text)
    except (SyntaxError, ValueError) as exc:
        raise LexError(f"{source.path}: {exc}") from exc

    out = StatementList(statements=[])
    _normalize_body(tree.body, out)
    return out


def _skip(out: StatementList, reason: str) -> None:
    out.skipped[reason] = out.skipped.get(reason, 0) + 1


def _normalize_body(body: list[ast.stmt], out: StatementList) -> None:
    for node in body:
        _normalize_stmt(node, out)


def _normalize_stmt(node: ast.stmt, out: StatementList) -> None:
    if isinstance(node, ast.Import):
        for alias in node.names:
            out.statements.append(Import(alias.name, alias.asname or alias.name,
                                         node.lineno))
    elif isinstance(node, ast.ImportFrom):
        if node.module is None or any(a.name == "*" for a in node.names):
            _skip(out, "star-or-relative-import")
            return
        for alias in node.names:
            dotted = f"{node.module}.{alias.name}"
            out.statements.append(Import(dotted, alias.asname or alias.name,
                                         node.lineno))
    elif isinstance(node, (ast.Assign, ast.AnnAssign, ast.AugAssign)):
        binds, mutates = _assign_targets(node)
        value = node.value
        if value is None:  # bare annotation: "x: int"
            return
        expr = _normalize_expr(value, out)
        if binds or mutates:
            out.statements.append(Assign(binds, expr, node.lineno, mutates))
        elif _count_calls(expr):
            out.statements.append(ExprStmt(expr, node.lineno))
    elif isinstance(node, ast.Expr):
        expr = _normalize_expr(node.value, out)
        if _count_calls(expr):
            out.statements.append(ExprStmt(expr, node.lineno))
    elif isinstance(node, (ast.For, ast.AsyncFor)):
        targets = _target_names(node.target)
        iter_expr = _normalize_expr(node.iter, out)
        if targets:
            # Loop variables behave like a pass-through read of the iterable.
            out.statements.append(Assign(targets, Subscript(iter_expr), node.lineno))
        elif _count_calls(iter_expr):
            out.statements.append(ExprStmt(iter_expr, node.lineno))
        _normalize_body(node.body, out)
        _normalize_body(node.orelse, out)
    elif isinstance(node, ast.While):
        _normalize_body(node.body, out)
        _normalize_body(node.orelse, out)
    elif isinstance(node, ast.If):
        _normalize_body(node.body, out)
        _normalize_body(node.orelse, out)
    elif isinstance(node, (ast.With, ast.AsyncWith)):
        for item in node.items:
            ctx = _normalize_expr(item.context_expr, out)
            names = _target_names(item.optional_vars) if item.optional_vars else ()
            if names:
                out.statements.append(Assign(names, ctx, node.lineno))
            elif _count_calls(ctx):
                out.statements.append(ExprStmt(ctx, node.lineno))
        _normalize_body(node.body, out)
    elif isinstance(node, ast.Try):
        _normalize_body(node.body, out)
        for handler in node.handlers:
            _normalize_body(handler.body, out)
        _normalize_body(node.orelse, out)
        _normalize_body(node.finalbody, out)
    elif isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
        _skip(out, "function-def")
    elif isinstance(node, ast.ClassDef):
        _skip(out, "class-def")
    elif isinstance(node, (ast.Pass, ast.Break, ast.Continue)):
        pass
    elif isinstance(node, (ast.Assert, ast.Raise, ast.Delete, ast.Global,
                           ast.Nonlocal, ast.Return)):
        _skip(out, type(node).__name__.lower())
    else:
        _skip(out, type(node).__name__.lower())


def _assign_targets(node: ast.stmt) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Split assignment targets into plain bindings and mutated bases."""
    targets: list[ast.expr] = []
    if isinstance(node, ast.Assign):
        targets = list(node.targets)
    elif isinstance(node, (ast.AnnAssign, ast.AugAssign)):
        targets = [node.target]
    binds: list[str] = []
    mutates: list[str] = []
    for target in targets:
        _classify_target(target, binds, mutates)
    return tuple(binds), tuple(mutates)


def _classify_target(target: ast.expr | None, binds: list[str],
                     mutates: list[str]) -> None:
    if target is None:
        return
    if isinstance(target, ast.Name):
        binds.append(target.id)
    elif isinstance(target, (ast.Tuple, ast.List)):
        for element in target.elts:
            _classify_target(element, binds, mutates)
    elif isinstance(target, ast.Starred):
        _classify_target(target.value, binds, mutates)
    elif isinstance(target, (ast.Subscript, ast.Attribute)):
        base = target.value
        while isinstance(base, (ast.Subscript, ast.Attribute)):
            base = base.value
        if isinstance(base, ast.Name):
            mutates.append(base.id)


def _target_names(target: ast.expr | None) -> tuple[str, ...]:
    """Plain variable names bound by a loop/with target."""
    binds: list[str] = []
    mutates: list[str] = []
    _classify_target(target, binds, mutates)
    return tuple(binds)


def _normalize_expr(node: ast.expr, out: StatementList) -> Expr:
    if isinstance(node, ast.Call):
        callee = _normalize_expr(node.func, out)
        args = tuple(_normalize_expr(a, out) for a in node.args
                     if not isinstance(a, ast.Starred))
        kwargs = tuple((kw.arg, _normalize_expr(kw.value, out))
                       for kw in node.keywords)
        return Call(callee, args, kwargs, getattr(node, "lineno", 0))
    if isinstance(node, ast.Attribute):
        return Attribute(_normalize_expr(node.value, out), node.attr)
    if isinstance(node, ast.Subscript):
        # Index expressions are not modeled; calls inside them are rare and
        # deliberately out of subset.
        return Subscript(_normalize_expr(node.value, out))
    if isinstance(node, ast.Name):
        return Name(node.id)
    if isinstance(node, ast.Constant):
        if isinstance(node.value, str):
            return Literal("str", node.value)
        if isinstance(node.value, bool):
            return Literal("bool")
        if isinstance(node.value, (int, float, complex)):
            return Literal("num")
        if node.value is None:
            return Literal("none")
        return Literal("other")
    if isinstance(node, ast.JoinedStr):
        return Literal("str", None)
    if isinstance(node, (ast.List, ast.Tuple, ast.Set, ast.Dict)):
        return Literal("other")
    if isinstance(node, (ast.ListComp, ast.SetComp, ast.DictComp,
                         ast.GeneratorExp)):
        _skip(out, "comprehension")
        return Opaque("comprehension")
    if isinstance(node, ast.Lambda):
        _skip(out, "lambda")
        return Opaque("lambda")
    if isinstance(node, (ast.BinOp, ast.UnaryOp, ast.BoolOp, ast.Compare)):
        _skip(out, "operator-expr")
        return Opaque("operator-expr")
    if isinstance(node, ast.IfExp):
        _skip(out, "ternary")
        return Opaque("ternary")
    _skip(out, type(node).__name__.lower())
    return Opaque(type(node).__name__.lower())


# ---------------------------------------------------------------------------
# Name resolution
# ---------------------------------------------------------------------------

def resolve_names(statements: StatementList) -> dict[str, str]:
    """Map identifiers to dotted paths, the dataframe tag, or ``unresolved``.

    Import aliases map to module/class paths; variables assigned from
    constructor calls map to the constructed class path; variables assigned
    from read-like calls map to the dataframe tag. The returned environment
    is the end-of-script view (last write wins).
    """
    env: dict[str, str] = {}
    for stmt in statements.statements:
        if isinstance(stmt, Import):
            env[stmt.alias] = stmt.module
        elif isinstance(stmt, Assign):
            tag = _result_tag(stmt.expr, env)
            for target in stmt.targets:
                env[target] = tag
            for target in stmt.mutates:
                env.setdefault(target, UNRESOLVED)
    return env


def _result_tag(expr: Expr, env: dict[str, str]) -> str:
    """Static type-ish tag for the value of *expr* under *env*."""
    if isinstance(expr, Call):
        label, resolved = _callee_path(expr.callee, env)
        head = label.rsplit(".", 1)[-1]
        if head in READ_FUNCS:
            return DATAFRAME
        if head[:1].isupper() and resolved:
            return label  # constructor: value carries the class path
        base_tag = _expr_tag(expr.callee, env)
        if base_tag == DATAFRAME:
            return DATAFRAME  # dataframe methods yield dataframe-like values
        if base_tag not in (UNRESOLVED, DATAFRAME) and head.startswith(_SELF_TYPED_PREFIXES):
            return base_tag  # obj.fit(...) returns obj
        return UNRESOLVED
    if isinstance(expr, (Subscript, Attribute)):
        tag = _result_tag(expr.base, env)
        return tag if tag == DATAFRAME else UNRESOLVED
    if isinstance(expr, Name):
        return env.get(expr.ident, UNRESOLVED)
    return UNRESOLVED


def _expr_tag(expr: Expr, env: dict[str, str]) -> str:
    """Tag of the object a callee expression is rooted at (its receiver)."""
    if isinstance(expr, Attribute):
        return _result_tag(expr.base, env)
    return UNRESOLVED


def _callee_path(callee: Expr, env: dict[str, str]) -> tuple[str, bool]:
    """Resolve a callee expression to a dotted label.

    Returns ``(label, resolved)``. Unresolvable callees keep their raw
    dotted spelling so the label is still meaningful in reports.
    """
    if isinstance(callee, Name):
        path = env.get(callee.ident)
        if path and path not in (DATAFRAME, UNRESOLVED):
            return path, True
        return callee.ident, False
    if isinstance(callee, Attribute):
        base = callee.base
        if isinstance(base, Name):
            tag = env.get(base.ident)
            if tag == DATAFRAME:
                return f"pandas.DataFrame.{callee.name}", True
            if tag and tag != UNRESOLVED:
                return f"{tag}.{callee.name}", True
            return f"{base.ident}.{callee.name}", False
        if isinstance(base, Attribute):
            inner, ok = _callee_path(base, env)  # module.sub.attr chains
            return f"{inner}.{callee.name}", ok
        if isinstance(base, Subscript):
            inner_expr = base.base
            tag = _result_tag(inner_expr, env)
            if tag == DATAFRAME:
                return f"pandas.DataFrame.{callee.name}", True
            return f"subscript.{callee.name}", False
        if isinstance(base, Call):
            tag = _result_tag(base, env)
            if tag == DATAFRAME:
                return f"pandas.DataFrame.{callee.name}", True
            if tag not in (UNRESOLVED, DATAFRAME):
                return f"{tag}.{callee.name}", True
            inner, _ = _callee_path(base.callee, env)
            return f"{inner}.{callee.name}", False
        return f"opaque.{callee.name}", False
    return "opaque", False


# ---------------------------------------------------------------------------
# Code graph
# ---------------------------------------------------------------------------

CALL_SITE = "CallSite"
DATA_SOURCE = "DataSource"
UNRESOLVED_NODE = "Unresolved"
DATA_FLOW = "DataFlow"
CONTROL_FLOW = "ControlFlow"


@dataclass
class GraphNode:
    id: int
    kind: str
    label: str
    line: int


@dataclass
class GraphEdge:
    src: int
    dst: int
    kind: str


@dataclass
class CodeGraph:
    script_id: str
    nodes: list[GraphNode] = field(default_factory=list)
    edges: list[GraphEdge] = field(default_factory=list)

    def call_sites(self) -> list[GraphNode]:
        return [n for n in self.nodes if n.kind == CALL_SITE]

    def data_flow_edges(self) -> list[GraphEdge]:
        return [e for e in self.edges if e.kind == DATA_FLOW]

    def to_json(self) -> str:
        doc = {
            "script_id": self.script_id,
            "nodes": [{"id": n.id, "kind": n.kind, "label": n.label,
                       "line": n.line} for n in self.nodes],
            "edges": [{"src": e.src, "dst": e.dst, "kind": e.kind}
                      for e in self.edges],
        }
        return json.dumps(doc, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "CodeGraph":
        doc = json.loads(text)
        return cls(
            script_id=doc["script_id"],
            nodes=[GraphNode(n["id"], n["kind"], n["label"], n["line"])
                   for n in doc["nodes"]],
            edges=[GraphEdge(e["src"], e["dst"], e["kind"])
                   for e in doc["edges"]],
        )


class _GraphBuilder:
    """Single pass over a StatementList building nodes/edges.

    Variable bindings are tracked flow-sensitively: ``defs`` maps a variable
    to the node that produced its current value, and receiver types follow
    the producing node's label rather than the end-of-script environment.
    """

    def __init__(self, env: dict[str, str], script_id: str) -> None:
        self.env = env
        self.graph = CodeGraph(script_id=script_id)
        self.defs: dict[str, int] = {}
        self.var_tags: dict[str, str] = {}
        self.unresolved_nodes: dict[str, int] = {}
        self.last_call: int | None = None
        self._edge_seen: set[tuple[int, int, str]] = set()

    def _add_node(self, kind: str, label: str, line: int) -> int:
        label = "".join(label.split()) or "unknown"
        node = GraphNode(len(self.graph.nodes), kind, label, line)
        self.graph.nodes.append(node)
        return node.id

    def _add_edge(self, src: int, dst: int, kind: str) -> None:
        key = (src, dst, kind)
        if src == dst or key in self._edge_seen:
            return
        self._edge_seen.add(key)
        self.graph.edges.append(GraphEdge(src, dst, kind))

    # -- value handles ----------------------------------------------------
    # Expression evaluation yields (node_id | None, tag) where node_id is the
    # producing call node if any, and tag mirrors _result_tag semantics.

    def eval_expr(self, expr: Expr, line: int) -> tuple[int | None, str]:
        if isinstance(expr, Call):
            return self.eval_call(expr)
        if isinstance(expr, Name):
            return self.lookup(expr.ident, line)
        if isinstance(expr, (Subscript, Attribute)):
            node, tag = self.eval_expr(expr.base, line)
            return node, (DATAFRAME if tag == DATAFRAME else UNRESOLVED)
        return None, UNRESOLVED

    def lookup(self, ident: str, line: int) -> tuple[int | None, str]:
        if ident in self.defs:
            return self.defs[ident], self.var_tags.get(ident, UNRESOLVED)
        tag = self.var_tags.get(ident)
        if tag is not None:
            return None, tag  # import alias or tracked non-producing binding
        # Unknown name: record provenance once per identifier.
        if ident not in self.unresolved_nodes:
            self.unresolved_nodes[ident] = self._add_node(UNRESOLVED_NODE,
                                                          ident, line)
        return self.unresolved_nodes[ident], UNRESOLVED

    def _callee_label(self, callee: Expr,
                      line: int) -> tuple[str, int | None, str]:
        """Resolve a callee once: (label, receiver node, receiver tag).

        Evaluating the receiver here is the single point where chained inner
        calls materialize their nodes, so callers must not re-evaluate.
        """
        if isinstance(callee, Attribute):
            base_node, base_tag = self.eval_expr(callee.base, line)
            if base_tag == DATAFRAME:
                return f"pandas.DataFrame.{callee.name}", base_node, base_tag
            if base_tag not in (UNRESOLVED, DATAFRAME) and base_tag:
                return f"{base_tag}.{callee.name}", base_node, base_tag
            raw, _ = _callee_path(callee, self.env)
            return raw, base_node, UNRESOLVED
        if isinstance(callee, Name):
            tag = self.var_tags.get(callee.ident)
            if tag and tag not in (DATAFRAME, UNRESOLVED):
                return tag, None, UNRESOLVED
            return callee.ident, None, UNRESOLVED
        label, _ = _callee_path(callee, self.env)
        return label, None, UNRESOLVED

    def eval_call(self, call: Call) -> tuple[int, str]:
        # Evaluate receiver/arguments first so data-flow sources exist.
        label, receiver_node, receiver_tag = self._callee_label(call.callee,
                                                                call.line)
        head = label.rsplit(".", 1)[-1]
        is_read = head in READ_FUNCS

        consumed: list[int] = []
        if receiver_node is not None:
            consumed.append(receiver_node)
        for arg in call.args:
            consumed.extend(self._consume(arg, call.line, is_read))
        for _, value in call.kwargs:
            consumed.extend(self._consume(value, call.line, is_read=False))

        node_id = self._add_node(CALL_SITE, label, call.line)
        for src in consumed:
            self._add_edge(src, node_id, DATA_FLOW)
        if self.last_call is not None:
            self._add_edge(self.last_call, node_id, CONTROL_FLOW)
        self.last_call = node_id

        # A method call on a bound object rebinds it: later consumers of the
        # variable flow from this call (clf.fit(...) then clf.predict(...)
        # yields a fit -> predict edge).
        if (isinstance(call.callee, Attribute)
                and isinstance(call.callee.base, Name)):
            receiver = call.callee.base.ident
            if receiver in self.defs or receiver in self.unresolved_nodes:
                self.defs[receiver] = node_id

        if is_read:
            tag = DATAFRAME
        elif head[:1].isupper() and "." in label:
            tag = label  # constructor call resolved to a class path
        elif receiver_tag == DATAFRAME:
            tag = DATAFRAME
        elif (receiver_tag not in (UNRESOLVED, DATAFRAME)
              and head.startswith(_SELF_TYPED_PREFIXES)):
            tag = receiver_tag  # obj.fit(...) returns obj
        else:
            tag = UNRESOLVED
        return node_id, tag

    def _consume(self, expr: Expr, line: int, is_read: bool) -> list[int]:
        if isinstance(expr, Call):
            node, _ = self.eval_call(expr)
            return [node]
        if isinstance(expr, Literal):
            if is_read and expr.kind == "str" and expr.value:
                src = self._add_node(DATA_SOURCE, expr.value, line)
                return [src]
            return []
        if isinstance(expr, (Name, Subscript, Attribute)):
            node, _ = self.eval_expr(expr, line)
            return [node] if node is not None else []
        return []

    def run(self, statements: StatementList) -> CodeGraph:
        for stmt in statements.statements:
            if isinstance(stmt, Import):
                self.var_tags[stmt.alias] = stmt.module
                self.defs.pop(stmt.alias, None)
            elif isinstance(stmt, Assign):
                node, tag = self.eval_expr(stmt.expr, stmt.line)
                for target in stmt.targets:
                    if node is not None:
                        self.defs[target] = node
                    else:
                        self.defs.pop(target, None)
                    self.var_tags[target] = tag
                for target in stmt.mutates:
                    if node is not None:
                        self.defs[target] = node  # tag intentionally kept
            elif isinstance(stmt, ExprStmt):
                self.eval_expr(stmt.expr, stmt.line)
        return self.graph


def build_code_graph(statements: StatementList, env: dict[str, str],
                     script_id: str) -> CodeGraph:
    """Build the per-script code graph from normalized statements."""
    return _GraphBuilder(env, script_id).run(statements)


def analyze_script(source: ScriptSource) -> tuple[CodeGraph, StatementList]:
    """Parse, resolve, and graph one script. Raises LexError on unreadable input."""
    statements = parse_script(source)
    env = resolve_names(statements)
    graph = build_code_graph(statements, env, script_id=Path(source.path).stem)
    return graph, statements


@dataclass
class MineReport:
    parsed: int = 0
    excluded: int = 0
    diagnostics: list[str] = field(default_factory=list)
    skipped_constructs: dict[str, int] = field(default_factory=dict)


def mine_scripts(paths: Iterable[Path]) -> tuple[list[CodeGraph], MineReport]:
    """Analyze a corpus of scripts; never aborts on a bad script."""
    graphs: list[CodeGraph] = []
    report = MineReport()
    for path in sorted(paths):
        try:
            source = ScriptSource.from_path(path)
            graph, statements = analyze_script(source)
        except LexError as exc:
            report.excluded += 1
            report.diagnostics.append(str(exc))
            logger.warning("excluded script: %s", exc)
            continue
        graphs.append(graph)
        report.parsed += 1
        for reason, count in statements.skipped.items():
            report.skipped_constructs[reason] = (
                report.skipped_constructs.get(reason, 0) + count)
    return graphs, report


def write_code_graphs(graphs: Iterable[CodeGraph], path: Path) -> None:
    with path.open("w") as fh:
        for graph in graphs:
            fh.write(graph.to_json())
            fh.write("\n")


def read_code_graphs(path: Path) -> Iterator[CodeGraph]:
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield CodeGraph.from_json(line)

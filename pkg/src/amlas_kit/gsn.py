"""GSN metamodel: node kinds, relations, adornments and well-formedness.

The same graph type carries both pattern templates (placeholders, ForEach
multiplicities, choice guards) and fully-bound argument instances; the
`Mode` passed to `check_wellformed` selects which invariants apply.

All values are immutable after construction and safe to share across
threads; every operation here is a pure function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .diagnostics import Diagnostic, Severity, node_order_key

PLACEHOLDER_OPEN = "{"


class NodeKind(enum.Enum):
    GOAL = "Goal"
    STRATEGY = "Strategy"
    SOLUTION = "Solution"
    CONTEXT = "Context"
    ASSUMPTION = "Assumption"
    JUSTIFICATION = "Justification"
    # ACPs are carried as labels on relations; a free-standing node of this
    # kind is rejected by well-formedness. The member exists so interchange
    # documents can name the kind.
    ASSURANCE_CLAIM_POINT = "AssuranceClaimPoint"


class RelationKind(enum.Enum):
    SUPPORTED_BY = "SupportedBy"
    IN_CONTEXT_OF = "InContextOf"


class Adornment(enum.Enum):
    UNDEVELOPED = "Undeveloped"
    REQUIRES_DEVELOPMENT = "RequiresDevelopment"


class Mode(enum.Enum):
    TEMPLATE = "Template"
    INSTANCE = "Instance"


# Legal (source kind, target kind) pairs per relation kind.
SUPPORT_LEGAL = {
    (NodeKind.GOAL, NodeKind.GOAL),
    (NodeKind.GOAL, NodeKind.STRATEGY),
    (NodeKind.GOAL, NodeKind.SOLUTION),
    (NodeKind.STRATEGY, NodeKind.GOAL),
}
CONTEXT_LEGAL = {
    (src, dst)
    for src in (NodeKind.GOAL, NodeKind.STRATEGY)
    for dst in (NodeKind.CONTEXT, NodeKind.ASSUMPTION, NodeKind.JUSTIFICATION)
}


@dataclass(frozen=True, slots=True)
class GsnNode:
    """One GSN element.

    `text` may contain `{name}` placeholders in templates. `for_each` names a
    collection parameter the node expands over; `when` names a collection
    parameter gating the node's inclusion; `at_least` is a choice constraint
    on the node's outgoing support relations.
    """

    id: str
    kind: NodeKind
    text: str
    adornments: frozenset[Adornment] = frozenset()
    for_each: str | None = None
    when: str | None = None
    at_least: int | None = None

    @property
    def undeveloped(self) -> bool:
        return Adornment.UNDEVELOPED in self.adornments

    @property
    def base_id(self) -> str:
        """Template id this node descends from: first two dotted segments."""
        parts = self.id.split(".")
        return ".".join(parts[:2]) if len(parts) >= 2 else self.id


@dataclass(frozen=True, slots=True)
class GsnRelation:
    source: str
    target: str
    kind: RelationKind
    acp: str | None = None  # "<pattern>.<node>" target of an assurance claim point


@dataclass(frozen=True, slots=True)
class ContinuationStub:
    """Link from a node to another pattern's root, realized at assembly.

    `via` is "continuation" for explicit continuesAs links and "acp" for
    links derived from an ACP label on a relation. `item_id` pins the
    per-item binding for stubs carried by ForEach replicas. `resolved`
    holds (graph name, node id) once the case is assembled.
    """

    source: str
    target_pattern: str
    target_node: str
    via: str = "continuation"
    item_id: str | None = None
    resolved: tuple[str, str] | None = None


@dataclass(frozen=True)
class ArgumentGraph:
    """A GSN graph: template (unbound) or instance (fully bound)."""

    name: str
    root: str
    nodes: tuple[GsnNode, ...]
    relations: tuple[GsnRelation, ...]
    bindings: tuple[tuple[str, str | tuple[str, ...]], ...] = ()
    continuations: tuple[ContinuationStub, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index: dict[str, GsnNode] = {}
        for node in self.nodes:
            if node.id in index:
                raise ValueError(f"duplicate node id {node.id!r} in graph {self.name!r}")
            index[node.id] = node
        object.__setattr__(self, "_index", index)

    def node(self, node_id: str) -> GsnNode | None:
        return self._index.get(node_id)

    def has_node(self, node_id: str) -> bool:
        return node_id in self._index

    def outgoing(self, node_id: str, kind: RelationKind | None = None):
        return [r for r in self.relations
                if r.source == node_id and (kind is None or r.kind == kind)]

    def support_children(self, node_id: str) -> list[str]:
        return [r.target for r in self.outgoing(node_id, RelationKind.SUPPORTED_BY)]

    def stubs_for(self, node_id: str) -> list[ContinuationStub]:
        return [s for s in self.continuations if s.source == node_id]

    def binding_map(self) -> dict[str, str | tuple[str, ...]]:
        return dict(self.bindings)

    def with_continuations(self, stubs: tuple[ContinuationStub, ...]) -> "ArgumentGraph":
        return replace(self, continuations=stubs)


def _diag(rule_id: str, message: str, *subjects: str) -> Diagnostic:
    return Diagnostic(rule_id, Severity.ERROR, message, tuple(subjects))


def check_wellformed(graph: ArgumentGraph, mode: Mode) -> list[Diagnostic]:
    """Structural invariant check; empty list iff the graph is well-formed.

    Pure and deterministic: diagnostics are sorted by offending node id then
    rule id. Dangling relation endpoints are reported, never raised.
    """
    diags: list[Diagnostic] = []
    known = {n.id for n in graph.nodes}

    root = graph.node(graph.root)
    if root is None:
        diags.append(_diag("GSN-ROOT", f"root {graph.root!r} is not a node of the graph",
                           graph.root))
    elif root.kind is not NodeKind.GOAL:
        diags.append(_diag("GSN-ROOT", f"root {graph.root} must be a Goal, found {root.kind.value}",
                           graph.root))

    for node in graph.nodes:
        if node.kind is NodeKind.ASSURANCE_CLAIM_POINT:
            diags.append(_diag("GSN-ACP", f"{node.id}: assurance claim points attach to "
                               "relations and may not appear as free-standing nodes", node.id))
        if node.adornments and node.kind not in (NodeKind.GOAL, NodeKind.STRATEGY):
            names = ", ".join(sorted(a.value for a in node.adornments))
            diags.append(_diag("GSN-ADORN", f"{node.id}: adornment ({names}) is only "
                               "permitted on Goal and Strategy nodes", node.id))
        if node.at_least is not None and node.at_least < 1:
            diags.append(_diag("GSN-CHOICE", f"{node.id}: atLeast requires n >= 1, "
                               f"got {node.at_least}", node.id))
        if mode is Mode.INSTANCE:
            if node.for_each is not None:
                diags.append(_diag("GSN-FOREACH", f"{node.id}: ForEach multiplicity is "
                                   "permitted only in templates", node.id))
            if node.when is not None:
                diags.append(_diag("GSN-FOREACH", f"{node.id}: conditional 'when' guard is "
                                   "permitted only in templates", node.id))
            if PLACEHOLDER_OPEN in node.text:
                diags.append(_diag("GSN-PLACEHOLDER", f"{node.id}: node text contains an "
                                   "unbound placeholder", node.id))

    if mode is Mode.TEMPLATE and graph.bindings:
        diags.append(_diag("GSN-BIND", "template graphs carry no bindings", graph.root))

    dangling = False
    for rel in graph.relations:
        missing = [end for end in (rel.source, rel.target) if end not in known]
        if missing:
            dangling = True
            for end in missing:
                diags.append(_diag("GSN-REF", f"relation {rel.source} -> {rel.target}: "
                                   f"endpoint {end!r} does not exist", end))
            continue
        src, dst = graph.node(rel.source), graph.node(rel.target)
        legal = SUPPORT_LEGAL if rel.kind is RelationKind.SUPPORTED_BY else CONTEXT_LEGAL
        if (src.kind, dst.kind) not in legal:
            verb = "support" if rel.kind is RelationKind.SUPPORTED_BY else "context"
            diags.append(_diag("GSN-REL", f"illegal {verb} direction: {src.kind.value} "
                               f"{rel.source} -> {dst.kind.value} {rel.target}", rel.source))

    if not dangling:
        diags.extend(_check_support_cycles(graph))
        diags.extend(_check_leaf_goals(graph, mode))
        diags.extend(_check_choices(graph, mode))

    return sorted(diags, key=node_order_key)


def _check_support_cycles(graph: ArgumentGraph) -> list[Diagnostic]:
    colour: dict[str, int] = {}  # 0 in progress, 1 done
    on_cycle: set[str] = set()

    def visit(node_id: str, trail: list[str]) -> None:
        state = colour.get(node_id)
        if state == 1:
            return
        if state == 0:
            on_cycle.update(trail[trail.index(node_id):])
            return
        colour[node_id] = 0
        trail.append(node_id)
        for child in graph.support_children(node_id):
            visit(child, trail)
        trail.pop()
        colour[node_id] = 1

    for node in graph.nodes:
        visit(node.id, [])
    if not on_cycle:
        return []
    members = tuple(sorted(on_cycle))
    return [_diag("GSN-CYCLE", "cycle in support structure involving " + ", ".join(members),
                  *members)]


def _check_leaf_goals(graph: ArgumentGraph, mode: Mode) -> list[Diagnostic]:
    diags = []
    continued = {s.source for s in graph.continuations}
    for node in graph.nodes:
        if node.kind is not NodeKind.GOAL:
            continue
        if graph.support_children(node.id):
            continue
        if node.adornments:
            continue
        if node.id in continued:
            continue  # support arrives from another pattern at assembly
        if mode is Mode.TEMPLATE and (node.for_each or node.when):
            continue  # children or omission arrive at instantiation
        diags.append(_diag("GSN-LEAF", f"unsupported leaf goal {node.id}", node.id))
    return diags


def _check_choices(graph: ArgumentGraph, mode: Mode) -> list[Diagnostic]:
    if mode is Mode.TEMPLATE:
        return []  # branch counts are only meaningful after expansion
    diags = []
    for node in graph.nodes:
        if node.at_least is None or node.at_least < 1:
            continue
        count = len(graph.support_children(node.id))
        if count < node.at_least:
            diags.append(_diag("GSN-CHOICE", f"{node.id}: choice requires at least "
                               f"{node.at_least} supported alternative(s), found {count}",
                               node.id))
    return diags


def roots_and_leaves(graph: ArgumentGraph) -> tuple[str, set[str]]:
    """Root id plus the goal ids with no outgoing SupportedBy relations."""
    leaves = {n.id for n in graph.nodes
              if n.kind is NodeKind.GOAL and not graph.support_children(n.id)}
    return graph.root, leaves

"""Parser and printer for the textual argument-pattern language.

Grammar (UTF-8, `//` line comments, strings with \\" and \\\\ escapes):

    pattern  ::= "pattern" ID "title" STRING "{" stmt* "}"
    stmt     ::= param | node | link
    param    ::= "param" NAME ":" ("artefact" KIND | "each" NAME "of" KIND)
    node     ::= KINDWORD ID "text" STRING attr*
    KINDWORD ::= "goal" | "strategy" | "solution" | "context"
               | "assumption" | "justification"
    attr     ::= "undeveloped" | "requiresDevelopment"
               | "forEach" NAME | "when" NAME | "atLeast" INT
    link     ::= ID ("supportedBy" | "inContextOf") ID ("acp" STRING)?
               | ID "continuesAs" PATID "." ID

`{NAME}` inside a string is a placeholder for a parameter or, for `each`
parameters, the per-item name. An `acp` label names the root of the pattern
that supports the claim point, as "PATID.NODEID"; the parser derives a
continuation from it. `when` marks a choice branch that is dropped when the
named collection binding is empty.

The parser never raises on malformed input: it reports diagnostics with
source spans and recovers at line boundaries.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from pathlib import Path

from .diagnostics import Diagnostic, DiagnosticSink, SourceSpan
from .artefacts import ArtefactKind
from .gsn import (
    Adornment, ArgumentGraph, ContinuationStub, GsnNode, GsnRelation, NodeKind,
    RelationKind,
)

NODE_KINDWORDS = {
    "goal": NodeKind.GOAL,
    "strategy": NodeKind.STRATEGY,
    "solution": NodeKind.SOLUTION,
    "context": NodeKind.CONTEXT,
    "assumption": NodeKind.ASSUMPTION,
    "justification": NodeKind.JUSTIFICATION,
}
KINDWORD_BY_NODEKIND = {v: k for k, v in NODE_KINDWORDS.items()}

_TOKEN_RE = re.compile(
    r"""(?P<ws>[ \t\r]+)
      | (?P<comment>//[^\n]*)
      | (?P<nl>\n)
      | (?P<string>"(?:[^"\\\n]|\\.)*")
      | (?P<badstring>"(?:[^"\\\n]|\\.)*)
      | (?P<int>\d+)
      | (?P<ident>[A-Za-z_][A-Za-z0-9_.]*)
      | (?P<punct>[{}:])
    """,
    re.VERBOSE,
)

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_PLACEHOLDER_RE = re.compile(r"\{([^{}]*)\}")

BUILTIN_PATTERN_IDS = ("F", "I", "R", "W", "BB", "GG")


@dataclass(frozen=True, slots=True)
class Token:
    type: str  # "string" | "int" | "ident" | "punct" | "nl" | "eof"
    value: str
    line: int
    col: int
    end_line: int
    end_col: int

    def span(self, file: str) -> SourceSpan:
        return SourceSpan(file, self.line, self.col, self.end_line, self.end_col)


@dataclass(frozen=True, slots=True)
class Param:
    name: str
    kind: ArtefactKind
    item_name: str | None = None  # set for `each` (collection) parameters

    @property
    def is_collection(self) -> bool:
        return self.item_name is not None


@dataclass(frozen=True)
class PatternTemplate:
    pattern_id: str
    title: str
    graph: ArgumentGraph  # template mode; continuations carried on the graph
    params: tuple[Param, ...]

    def param(self, name: str) -> Param | None:
        for p in self.params:
            if p.name == name:
                return p
        return None

    def param_for_item(self, item_name: str) -> Param | None:
        for p in self.params:
            if p.item_name == item_name:
                return p
        return None

    @property
    def placeholder_names(self) -> set[str]:
        names = {p.name for p in self.params}
        names.update(p.item_name for p in self.params if p.item_name)
        return names


def _unescape(raw: str) -> str:
    # raw includes the surrounding quotes
    body = raw[1:-1]
    out: list[str] = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch == "\\" and i + 1 < len(body):
            nxt = body[i + 1]
            out.append({"n": "\n", "t": "\t", '"': '"', "\\": "\\"}.get(nxt, nxt))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")


def tokenize(source: str, file: str, sink: DiagnosticSink) -> list[Token]:
    tokens: list[Token] = []
    line, col, pos = 1, 1, 0
    n = len(source)
    while pos < n:
        match = _TOKEN_RE.match(source, pos)
        if match is None:
            span = SourceSpan(file, line, col, line, col + 1)
            sink.error("DSL-LEX", f"unexpected character {source[pos]!r}", span)
            pos += 1
            col += 1
            continue
        kind = match.lastgroup
        text = match.group()
        start_line, start_col = line, col
        newlines = text.count("\n")
        if newlines:
            line += newlines
            col = len(text) - text.rfind("\n")
        else:
            col += len(text)
        pos = match.end()
        if kind in ("ws", "comment"):
            continue
        if kind == "badstring":
            span = SourceSpan(file, start_line, start_col, line, col)
            sink.error("DSL-LEX", "unterminated string literal", span)
            continue
        tokens.append(Token(kind, text, start_line, start_col, line, col))
    tokens.append(Token("eof", "", line, col, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[Token], file: str, sink: DiagnosticSink):
        self.tokens = tokens
        self.file = file
        self.sink = sink
        self.pos = 0

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def next(self) -> Token:
        tok = self.peek()
        if tok.type != "eof":
            self.pos += 1
        return tok

    def skip_newlines(self) -> None:
        while self.peek().type == "nl":
            self.pos += 1

    def sync(self) -> None:
        """Recover from a malformed statement: skip to the next line."""
        while self.peek().type not in ("nl", "eof"):
            if self.peek().type == "punct" and self.peek().value == "}":
                return
            self.pos += 1

    def error(self, message: str, tok: Token | None = None) -> None:
        tok = tok or self.peek()
        self.sink.error("DSL-SYNTAX", message, tok.span(self.file))

    def expect(self, ttype: str, value: str | None = None, what: str = "") -> Token | None:
        tok = self.peek()
        if tok.type == ttype and (value is None or tok.value == value):
            return self.next()
        want = what or (value if value else ttype)
        found = tok.value or tok.type
        self.error(f"expected {want}, found {found!r}", tok)
        return None

    def expect_ident(self, what: str) -> Token | None:
        tok = self.peek()
        if tok.type == "ident":
            return self.next()
        self.error(f"expected {what}, found {tok.value or tok.type!r}", tok)
        return None


def parse_pattern(source: str, file: str = "<pattern>") -> tuple[PatternTemplate | None, list[Diagnostic]]:
    """Parse a pattern source. Returns (template, diagnostics).

    The template is None whenever any error-severity diagnostic was produced;
    the parser recovers and keeps scanning so one pass reports all findings.
    """
    sink = DiagnosticSink()
    try:
        template = _parse(source, file, sink)
    except RecursionError:  # pathological nesting in fuzzed input
        sink.error("DSL-SYNTAX", "input too deeply nested",
                   SourceSpan(file, 1, 1, 1, 1))
        template = None
    if sink.failed:
        return None, sink.items
    return template, sink.items


def _parse(source: str, file: str, sink: DiagnosticSink) -> PatternTemplate | None:
    tokens = tokenize(source, file, sink)
    p = _Parser(tokens, file, sink)

    p.skip_newlines()
    if p.expect("ident", "pattern") is None:
        return None
    pat_tok = p.expect_ident("pattern id")
    if pat_tok is None:
        return None
    pattern_id = pat_tok.value
    if "." in pattern_id:
        p.error(f"pattern id {pattern_id!r} must not contain '.'", pat_tok)
    if p.expect("ident", "title") is None:
        return None
    title_tok = p.expect("string", what="pattern title string")
    if title_tok is None:
        return None
    title = _unescape(title_tok.value)
    p.skip_newlines()
    if p.expect("punct", "{") is None:
        return None

    params: list[Param] = []
    nodes: list[GsnNode] = []
    node_spans: dict[str, Token] = {}
    relations: list[GsnRelation] = []
    stubs: list[ContinuationStub] = []
    link_tokens: list[tuple[GsnRelation, Token]] = []
    root_id: str | None = None

    while True:
        p.skip_newlines()
        tok = p.peek()
        if tok.type == "eof":
            p.error("missing closing '}'", tok)
            break
        if tok.type == "punct" and tok.value == "}":
            p.next()
            break
        if tok.type == "ident" and tok.value == "param":
            _parse_param(p, params)
        elif tok.type == "ident" and tok.value in NODE_KINDWORDS:
            node = _parse_node(p, node_spans)
            if node is not None:
                nodes.append(node)
                if root_id is None and node.kind is NodeKind.GOAL:
                    root_id = node.id
        elif tok.type == "ident":
            _parse_link(p, relations, stubs, link_tokens, pattern_id)
        else:
            p.error(f"expected a statement, found {tok.value or tok.type!r}", tok)
            p.sync()

    p.skip_newlines()
    if p.peek().type != "eof":
        p.error("unexpected content after closing '}'")

    # Semantic checks on the collected pieces.
    node_ids = {n.id for n in nodes}
    if root_id is None:
        sink.error("DSL-SEM", "pattern declares no goal node; the root must be a goal",
                   SourceSpan(file, 1, 1, 1, 1))
    seen_params: set[str] = set()
    placeholder_names: set[str] = set()
    for param in params:
        for name in (param.name, param.item_name):
            if name is None:
                continue
            if name in seen_params:
                sink.error("DSL-SEM", f"duplicate parameter name {name!r}",
                           SourceSpan(file, 1, 1, 1, 1))
            seen_params.add(name)
            placeholder_names.add(name)
    collection_names = {param.name for param in params if param.is_collection}

    for rel, tok in link_tokens:
        for end in (rel.source, rel.target):
            if end not in node_ids:
                sink.error("DSL-SEM", f"unknown reference {end!r}", tok.span(file))

    for node in nodes:
        tok = node_spans[node.id]
        for m in _PLACEHOLDER_RE.finditer(node.text):
            name = m.group(1)
            if not _NAME_RE.match(name):
                sink.error("DSL-SEM", f"malformed placeholder {{{name}}}", tok.span(file))
            elif name not in placeholder_names:
                sink.error("DSL-SEM", f"unknown placeholder {{{name}}}", tok.span(file))
        brace_balance = node.text.count("{") - node.text.count("}")
        if brace_balance:
            sink.error("DSL-SEM", "unbalanced braces in node text", tok.span(file))
        for attr_name, value in (("forEach", node.for_each), ("when", node.when)):
            if value is not None and value not in collection_names:
                sink.error("DSL-SEM",
                           f"{attr_name} {value!r} does not name an 'each' parameter",
                           tok.span(file))
        if node.for_each is not None and node.kind is not NodeKind.GOAL:
            sink.error("DSL-SEM", f"forEach is only permitted on goal nodes ({node.id})",
                       tok.span(file))
        if node.at_least is not None and node.at_least < 1:
            sink.error("DSL-SEM", f"atLeast requires n >= 1 ({node.id})", tok.span(file))
        if node.adornments and node.kind not in (NodeKind.GOAL, NodeKind.STRATEGY):
            sink.error("DSL-SEM",
                       f"adornments are only permitted on goals and strategies ({node.id})",
                       tok.span(file))

    # Relation legality, reported with spans (mirrors the metamodel table).
    by_id = {n.id: n for n in nodes}
    for rel, tok in link_tokens:
        src, dst = by_id.get(rel.source), by_id.get(rel.target)
        if src is None or dst is None:
            continue
        if rel.kind is RelationKind.SUPPORTED_BY:
            from .gsn import SUPPORT_LEGAL
            if (src.kind, dst.kind) not in SUPPORT_LEGAL:
                sink.error("DSL-SEM", "illegal support direction: "
                           f"{src.kind.value} {src.id} -> {dst.kind.value} {dst.id}",
                           tok.span(file))
        else:
            from .gsn import CONTEXT_LEGAL
            if (src.kind, dst.kind) not in CONTEXT_LEGAL:
                sink.error("DSL-SEM", "illegal context direction: "
                           f"{src.kind.value} {src.id} -> {dst.kind.value} {dst.id}",
                           tok.span(file))

    if sink.failed:
        return None
    graph = ArgumentGraph(
        name=pattern_id, root=root_id or "", nodes=tuple(nodes),
        relations=tuple(relations), continuations=tuple(stubs))
    return PatternTemplate(pattern_id=pattern_id, title=title, graph=graph,
                           params=tuple(params))


def _parse_param(p: _Parser, params: list[Param]) -> None:
    p.next()  # "param"
    name_tok = p.expect_ident("parameter name")
    if name_tok is None or p.expect("punct", ":") is None:
        p.sync()
        return
    head = p.peek()
    if head.type == "ident" and head.value == "artefact":
        p.next()
        kind_tok = p.expect_ident("artefact kind")
        if kind_tok is None:
            p.sync()
            return
        kind = _artefact_kind(p, kind_tok)
        if kind is None:
            return
        params.append(Param(name=name_tok.value, kind=kind))
    elif head.type == "ident" and head.value == "each":
        p.next()
        item_tok = p.expect_ident("item name")
        if item_tok is None or p.expect("ident", "of") is None:
            p.sync()
            return
        kind_tok = p.expect_ident("artefact kind")
        if kind_tok is None:
            p.sync()
            return
        kind = _artefact_kind(p, kind_tok)
        if kind is None:
            return
        params.append(Param(name=name_tok.value, kind=kind, item_name=item_tok.value))
    else:
        p.error("expected 'artefact' or 'each'", head)
        p.sync()


def _artefact_kind(p: _Parser, tok: Token) -> ArtefactKind | None:
    try:
        return ArtefactKind(tok.value)
    except ValueError:
        p.error(f"unknown artefact kind {tok.value!r}", tok)
        p.sync()
        return None


def _parse_node(p: _Parser, node_spans: dict[str, Token]) -> GsnNode | None:
    kind_tok = p.next()
    kind = NODE_KINDWORDS[kind_tok.value]
    id_tok = p.expect_ident("node id")
    if id_tok is None:
        p.sync()
        return None
    if p.expect("ident", "text") is None:
        p.sync()
        return None
    text_tok = p.expect("string", what="node text string")
    if text_tok is None:
        p.sync()
        return None

    adornments: set[Adornment] = set()
    for_each: str | None = None
    when: str | None = None
    at_least: int | None = None
    while True:
        tok = p.peek()
        if tok.type != "ident":
            break
        if tok.value == "undeveloped":
            p.next()
            adornments.add(Adornment.UNDEVELOPED)
        elif tok.value == "requiresDevelopment":
            p.next()
            adornments.add(Adornment.REQUIRES_DEVELOPMENT)
        elif tok.value == "forEach":
            p.next()
            name = p.expect_ident("parameter name")
            if name is None:
                p.sync()
                return None
            for_each = name.value
        elif tok.value == "when":
            p.next()
            name = p.expect_ident("parameter name")
            if name is None:
                p.sync()
                return None
            when = name.value
        elif tok.value == "atLeast":
            p.next()
            num = p.expect("int", what="integer")
            if num is None:
                p.sync()
                return None
            at_least = int(num.value)
        else:
            break

    if id_tok.value in node_spans:
        p.error(f"duplicate node id {id_tok.value!r}", id_tok)
        return None
    node_spans[id_tok.value] = id_tok
    return GsnNode(id=id_tok.value, kind=kind, text=_unescape(text_tok.value),
                   adornments=frozenset(adornments), for_each=for_each, when=when,
                   at_least=at_least)


def _parse_link(p: _Parser, relations: list[GsnRelation], stubs: list[ContinuationStub],
                link_tokens: list[tuple[GsnRelation, Token]], pattern_id: str) -> None:
    src_tok = p.next()
    verb_tok = p.peek()
    if verb_tok.type != "ident" or verb_tok.value not in (
            "supportedBy", "inContextOf", "continuesAs"):
        p.error("expected 'supportedBy', 'inContextOf' or 'continuesAs'", verb_tok)
        p.sync()
        return
    p.next()
    if verb_tok.value == "continuesAs":
        target_tok = p.expect_ident("pattern-qualified node id (PAT.NODE)")
        if target_tok is None:
            p.sync()
            return
        if "." not in target_tok.value:
            p.error(f"continuation target {target_tok.value!r} must be PAT.NODE",
                    target_tok)
            return
        pat, node = target_tok.value.split(".", 1)
        if pat == pattern_id:
            p.error("continuation may not target the pattern itself", target_tok)
            return
        stubs.append(ContinuationStub(source=src_tok.value, target_pattern=pat,
                                      target_node=node, via="continuation"))
        return

    kind = (RelationKind.SUPPORTED_BY if verb_tok.value == "supportedBy"
            else RelationKind.IN_CONTEXT_OF)
    dst_tok = p.expect_ident("node id")
    if dst_tok is None:
        p.sync()
        return
    acp: str | None = None
    if p.peek().type == "ident" and p.peek().value == "acp":
        acp_tok = p.next()
        label_tok = p.expect("string", what="acp target string")
        if label_tok is None:
            p.sync()
            return
        acp = _unescape(label_tok.value)
        if "." not in acp:
            p.error(f"acp target {acp!r} must be PAT.NODE", acp_tok)
            return
        pat, node = acp.split(".", 1)
        stubs.append(ContinuationStub(source=src_tok.value, target_pattern=pat,
                                      target_node=node, via="acp"))
    rel = GsnRelation(source=src_tok.value, target=dst_tok.value, kind=kind, acp=acp)
    relations.append(rel)
    link_tokens.append((rel, src_tok))


def print_pattern(template: PatternTemplate) -> str:
    """Emit canonical DSL text; parsing it back yields an isomorphic template."""
    lines = [f'pattern {template.pattern_id} title "{_escape(template.title)}" {{']
    for param in template.params:
        if param.is_collection:
            lines.append(f"  param {param.name} : each {param.item_name} "
                         f"of {param.kind.value}")
        else:
            lines.append(f"  param {param.name} : artefact {param.kind.value}")
    if template.params:
        lines.append("")
    for node in template.graph.nodes:
        parts = [f"  {KINDWORD_BY_NODEKIND[node.kind]} {node.id} "
                 f'text "{_escape(node.text)}"']
        if Adornment.UNDEVELOPED in node.adornments:
            parts.append("undeveloped")
        if Adornment.REQUIRES_DEVELOPMENT in node.adornments:
            parts.append("requiresDevelopment")
        if node.for_each:
            parts.append(f"forEach {node.for_each}")
        if node.when:
            parts.append(f"when {node.when}")
        if node.at_least is not None:
            parts.append(f"atLeast {node.at_least}")
        lines.append(" ".join(parts))
    lines.append("")
    for rel in template.graph.relations:
        verb = "supportedBy" if rel.kind is RelationKind.SUPPORTED_BY else "inContextOf"
        suffix = f' acp "{_escape(rel.acp)}"' if rel.acp else ""
        lines.append(f"  {rel.source} {verb} {rel.target}{suffix}")
    for stub in template.graph.continuations:
        if stub.via == "continuation":
            lines.append(f"  {stub.source} continuesAs "
                         f"{stub.target_pattern}.{stub.target_node}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def builtin_pattern_dir() -> Path:
    """Directory holding the shipped pattern sources.

    AMLAS_PATTERN_PATH overrides the packaged directory.
    """
    override = os.environ.get("AMLAS_PATTERN_PATH")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "patterns"


def builtin_source(pattern_id: str) -> str:
    path = builtin_pattern_dir() / f"{pattern_id}.gsn"
    return path.read_text(encoding="utf-8")


def load_builtin(pattern_id: str) -> PatternTemplate:
    """Parse the shipped source for one of the six built-in patterns."""
    if pattern_id not in BUILTIN_PATTERN_IDS:
        raise ValueError(f"unknown builtin pattern {pattern_id!r}; "
                         f"expected one of {', '.join(BUILTIN_PATTERN_IDS)}")
    template, diags = parse_pattern(builtin_source(pattern_id), f"{pattern_id}.gsn")
    if template is None:
        detail = "; ".join(d.render() for d in diags)
        raise RuntimeError(f"builtin pattern {pattern_id} failed to parse: {detail}")
    return template


def load_builtins() -> dict[str, PatternTemplate]:
    return {pid: load_builtin(pid) for pid in BUILTIN_PATTERN_IDS}

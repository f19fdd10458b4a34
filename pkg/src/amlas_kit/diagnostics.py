"""Shared diagnostic types: severities, source spans and findings.

Every checking surface in the toolchain (DSL parser, graph well-formedness,
manifest loading, obligation rules) reports through the same Diagnostic type
so the CLI can merge, sort and render findings uniformly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(frozen=True, slots=True)
class SourceSpan:
    """Half-open location in a source text, 1-based lines and columns."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if (self.end_line, self.end_col) < (self.start_line, self.start_col):
            raise ValueError("span end precedes start")

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """One finding: a rule id, severity, message and the ids it concerns."""

    rule_id: str
    severity: Severity
    message: str
    subjects: tuple[str, ...] = ()
    span: SourceSpan | None = None

    def render(self) -> str:
        loc = f"{self.span}: " if self.span else ""
        subj = f" [{', '.join(self.subjects)}]" if self.subjects else ""
        return f"{loc}{self.severity.value}: {self.rule_id}: {self.message}{subj}"


def sort_key(diag: Diagnostic) -> tuple:
    """Stable order used by run_rules: rule id first, then subjects."""
    return (diag.rule_id, diag.subjects, diag.message)


def node_order_key(diag: Diagnostic) -> tuple:
    """Stable order used by check_wellformed: offending node first, then rule."""
    first = diag.subjects[0] if diag.subjects else ""
    return (first, diag.rule_id, diag.message)


def has_errors(diags: list[Diagnostic] | tuple[Diagnostic, ...]) -> bool:
    return any(d.severity is Severity.ERROR for d in diags)


@dataclass
class DiagnosticSink:
    """Mutable collector used by the parser while scanning a source."""

    items: list[Diagnostic] = field(default_factory=list)

    def error(self, rule_id: str, message: str, span: SourceSpan | None = None,
              subjects: tuple[str, ...] = ()) -> None:
        self.items.append(Diagnostic(rule_id, Severity.ERROR, message, subjects, span))

    def warning(self, rule_id: str, message: str, span: SourceSpan | None = None,
                subjects: tuple[str, ...] = ()) -> None:
        self.items.append(Diagnostic(rule_id, Severity.WARNING, message, subjects, span))

    def extend(self, diags: list[Diagnostic]) -> None:
        self.items.extend(diags)

    @property
    def failed(self) -> bool:
        return has_errors(self.items)

"""Typed registry of the 34 AMLAS artefact kinds (A-HH).

Artefact content is opaque bytes plus an optional structured payload; only
structured payloads (requirements, datasets, logs, results) participate in
validation. Datasets are represented by sample-id digests so leakage checks
work without shipping data.

The registry is functional: `register` returns a new registry, snapshots are
immutable and safely shareable.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping


class ArtefactKind(str, enum.Enum):
    A = "A"    # System Safety Requirements
    B = "B"    # Description of Operating Environment of System
    C = "C"    # System Description
    D = "D"    # ML Component Description
    E = "E"    # Safety Requirements Allocated to ML Component
    F = "F"    # ML Assurance Scoping Argument Pattern
    G = "G"    # ML Safety Assurance Scoping Argument
    H = "H"    # ML Safety Requirements
    I = "I"    # ML Safety Requirements Argument Pattern
    J = "J"    # ML Safety Requirements Validation Results
    K = "K"    # ML Safety Requirements Argument
    L = "L"    # Data Requirements
    M = "M"    # Data Requirements Justification Report
    N = "N"    # Development Data
    O = "O"    # Internal Test Data
    P = "P"    # Verification Data
    Q = "Q"    # Data Generation Log
    R = "R"    # ML Data Argument Pattern
    S = "S"    # ML Data Validation Results
    T = "T"    # ML Data Argument
    U = "U"    # Model Development Log
    V = "V"    # ML Model
    W = "W"    # ML Learning Argument Pattern
    X = "X"    # Internal Test Results
    Y = "Y"    # ML Learning Argument
    Z = "Z"    # ML Verification Results
    AA = "AA"  # Verification Log
    BB = "BB"  # ML Verification Argument Pattern
    CC = "CC"  # ML Verification Argument
    DD = "DD"  # Erroneous Behaviour Log
    EE = "EE"  # Operational Scenarios
    FF = "FF"  # Integration Testing Results
    GG = "GG"  # ML Deployment Argument Pattern
    HH = "HH"  # ML Deployment Argument


KIND_TITLES: dict[ArtefactKind, str] = {
    ArtefactKind.A: "System Safety Requirements",
    ArtefactKind.B: "Description of Operating Environment",
    ArtefactKind.C: "System Description",
    ArtefactKind.D: "ML Component Description",
    ArtefactKind.E: "Safety Requirements Allocated to ML Component",
    ArtefactKind.F: "ML Assurance Scoping Argument Pattern",
    ArtefactKind.G: "ML Safety Assurance Scoping Argument",
    ArtefactKind.H: "ML Safety Requirements",
    ArtefactKind.I: "ML Safety Requirements Argument Pattern",
    ArtefactKind.J: "ML Safety Requirements Validation Results",
    ArtefactKind.K: "ML Safety Requirements Argument",
    ArtefactKind.L: "Data Requirements",
    ArtefactKind.M: "Data Requirements Justification Report",
    ArtefactKind.N: "Development Data",
    ArtefactKind.O: "Internal Test Data",
    ArtefactKind.P: "Verification Data",
    ArtefactKind.Q: "Data Generation Log",
    ArtefactKind.R: "ML Data Argument Pattern",
    ArtefactKind.S: "ML Data Validation Results",
    ArtefactKind.T: "ML Data Argument",
    ArtefactKind.U: "Model Development Log",
    ArtefactKind.V: "ML Model",
    ArtefactKind.W: "ML Learning Argument Pattern",
    ArtefactKind.X: "Internal Test Results",
    ArtefactKind.Y: "ML Learning Argument",
    ArtefactKind.Z: "ML Verification Results",
    ArtefactKind.AA: "Verification Log",
    ArtefactKind.BB: "ML Verification Argument Pattern",
    ArtefactKind.CC: "ML Verification Argument",
    ArtefactKind.DD: "Erroneous Behaviour Log",
    ArtefactKind.EE: "Operational Scenarios",
    ArtefactKind.FF: "Integration Testing Results",
    ArtefactKind.GG: "ML Deployment Argument Pattern",
    ArtefactKind.HH: "ML Deployment Argument",
}

PATTERN_KINDS = (ArtefactKind.F, ArtefactKind.I, ArtefactKind.R,
                 ArtefactKind.W, ArtefactKind.BB, ArtefactKind.GG)
ARGUMENT_KINDS = (ArtefactKind.G, ArtefactKind.K, ArtefactKind.T,
                  ArtefactKind.Y, ArtefactKind.CC, ArtefactKind.HH)

# Fixed stage topology transcribed from the six stage input/output lists.
STAGE_INPUTS: dict[int, frozenset[ArtefactKind]] = {
    1: frozenset({ArtefactKind.A, ArtefactKind.B, ArtefactKind.C, ArtefactKind.D,
                  ArtefactKind.F}),
    2: frozenset({ArtefactKind.E, ArtefactKind.I}),
    3: frozenset({ArtefactKind.H, ArtefactKind.R}),
    4: frozenset({ArtefactKind.H, ArtefactKind.N, ArtefactKind.O, ArtefactKind.W}),
    5: frozenset({ArtefactKind.H, ArtefactKind.P, ArtefactKind.V, ArtefactKind.BB}),
    6: frozenset({ArtefactKind.A, ArtefactKind.B, ArtefactKind.C, ArtefactKind.V,
                  ArtefactKind.GG, ArtefactKind.EE}),
}
STAGE_OUTPUTS: dict[int, frozenset[ArtefactKind]] = {
    1: frozenset({ArtefactKind.E, ArtefactKind.G}),
    2: frozenset({ArtefactKind.H, ArtefactKind.J, ArtefactKind.K}),
    3: frozenset({ArtefactKind.L, ArtefactKind.M, ArtefactKind.N, ArtefactKind.O,
                  ArtefactKind.P, ArtefactKind.Q, ArtefactKind.S, ArtefactKind.T}),
    4: frozenset({ArtefactKind.V, ArtefactKind.X, ArtefactKind.Y, ArtefactKind.U}),
    5: frozenset({ArtefactKind.Z, ArtefactKind.AA, ArtefactKind.CC}),
    6: frozenset({ArtefactKind.DD, ArtefactKind.FF, ArtefactKind.HH}),
}


def _kind_stage_table() -> dict[ArtefactKind, int]:
    table: dict[ArtefactKind, int] = {}
    for stage in range(1, 7):
        for kind in STAGE_OUTPUTS[stage]:
            table[kind] = stage
    # Input-only kinds (externally supplied) live with the first stage that
    # consumes them.
    for stage in range(1, 7):
        for kind in STAGE_INPUTS[stage]:
            table.setdefault(kind, stage)
    return table


KIND_STAGE: dict[ArtefactKind, int] = _kind_stage_table()


class Status(enum.Enum):
    CURRENT = "Current"
    STALE = "Stale"
    MISSING = "Missing"


class RequirementLevel(enum.Enum):
    ALLOCATED = "Allocated"
    ML = "ML"


class MlRequirementKind(enum.Enum):
    PERFORMANCE = "Performance"
    ROBUSTNESS = "Robustness"
    OTHER = "Other"


class DatasetRole(enum.Enum):
    DEVELOPMENT = "Development"
    INTERNAL_TEST = "InternalTest"
    VERIFICATION = "Verification"


class DataCategory(enum.Enum):
    RELEVANCE = "Relevance"
    COMPLETENESS = "Completeness"
    ACCURACY = "Accuracy"
    BALANCE = "Balance"


class ErrorDirection(enum.Enum):
    ERRONEOUS_INPUT = "ErroneousInput"
    ERRONEOUS_OUTPUT = "ErroneousOutput"
    VIOLATED_ASSUMPTION = "ViolatedAssumption"


class VerificationMethod(enum.Enum):
    TEST_BASED = "TestBased"
    FORMAL = "Formal"


class VerificationResult(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"
    INCONCLUSIVE = "Inconclusive"


class RegistryError(Exception):
    """Base for registration failures."""


class DuplicateId(RegistryError):
    pass


class KindStageMismatch(RegistryError):
    pass


class DigestMismatch(RegistryError):
    pass


class UnknownArtefact(KeyError):
    pass


def content_digest(content: bytes) -> str:
    return "sha256:" + hashlib.sha256(content).hexdigest()


@dataclass(frozen=True, slots=True)
class SafetyRequirement:
    id: str
    text: str
    level: RequirementLevel
    ml_kind: MlRequirementKind | None = None  # set for ML-level requirements
    traces_to: tuple[str, ...] = ()
    assumptions: tuple[str, ...] = ()
    derived_note: str = ""               # ML: why no allocated trace is needed
    untranslated_justification: str = ""  # Allocated: why no ML requirement covers it


@dataclass(frozen=True, slots=True)
class DataRequirement:
    id: str
    category: DataCategory
    text: str
    source_ml_requirements: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class DatasetDescriptor:
    role: DatasetRole
    sample_ids: frozenset[str]
    # data-requirement id -> ("Met", "") | ("Discrepant", justification)
    requirement_coverage: tuple[tuple[str, tuple[str, str]], ...] = ()


@dataclass(frozen=True, slots=True)
class ErroneousBehaviourEntry:
    id: str
    direction: ErrorDirection
    description: str
    monitor: str = ""
    response: str = ""


@dataclass(frozen=True, slots=True)
class VerificationEntry:
    id: str
    requirement_id: str
    method: VerificationMethod
    result: VerificationResult
    independence_note: str = ""
    formal_translation_justification: str = ""

    @property
    def label(self) -> str:
        return f"{self.id} ({self.result.value})"

    @property
    def display_text(self) -> str:
        return (f"{self.method.value} verification {self.id} for "
                f"{self.requirement_id}: {self.result.value}")


@dataclass(frozen=True, slots=True)
class ReqValidationEntry:
    """One row of the ML safety requirements validation results (J)."""

    requirement_id: str
    method: str  # "review" | "simulation" | free text
    notes: str = ""


@dataclass(frozen=True, slots=True)
class DataValidationEntry:
    """One row of the data validation results (S)."""

    dataset_role: DatasetRole
    data_requirement_id: str
    status: str  # "Met" | "Discrepant"
    justification: str = ""


@dataclass(frozen=True, slots=True)
class EnvironmentAssumption:
    id: str
    text: str
    monitor: str = ""


@dataclass(frozen=True, slots=True)
class OperationalScenario:
    id: str
    description: str


@dataclass(frozen=True, slots=True)
class IntegrationTestEntry:
    id: str
    scenario_ids: tuple[str, ...]
    result: str = "Pass"
    requirement_ids: tuple[str, ...] = ()


# Structured payloads, keyed by the artefact kind that carries them.
@dataclass(frozen=True, slots=True)
class RequirementSet:
    requirements: tuple[SafetyRequirement, ...]


@dataclass(frozen=True, slots=True)
class DataRequirementSet:
    requirements: tuple[DataRequirement, ...]


@dataclass(frozen=True, slots=True)
class ReqValidationResults:
    entries: tuple[ReqValidationEntry, ...]


@dataclass(frozen=True, slots=True)
class DataValidationResults:
    entries: tuple[DataValidationEntry, ...]


@dataclass(frozen=True, slots=True)
class VerificationResults:
    entries: tuple[VerificationEntry, ...]


@dataclass(frozen=True, slots=True)
class VerificationLog:
    independence_statement: str = ""
    strategy: str = ""
    leakage_controls: str = ""


@dataclass(frozen=True, slots=True)
class ErroneousBehaviourLog:
    entries: tuple[ErroneousBehaviourEntry, ...]


@dataclass(frozen=True, slots=True)
class EnvironmentDescription:
    assumptions: tuple[EnvironmentAssumption, ...] = ()


@dataclass(frozen=True, slots=True)
class ScenarioSet:
    scenarios: tuple[OperationalScenario, ...]
    justification: str = ""


@dataclass(frozen=True, slots=True)
class IntegrationResults:
    entries: tuple[IntegrationTestEntry, ...]


Payload = (RequirementSet | DataRequirementSet | ReqValidationResults | DataValidationResults
           | VerificationResults | VerificationLog | ErroneousBehaviourLog
           | EnvironmentDescription | ScenarioSet | IntegrationResults | DatasetDescriptor)


@dataclass(frozen=True, slots=True)
class ArtefactRecord:
    id: str
    kind: ArtefactKind
    title: str
    digest: str
    stage: int
    content_ref: str = ""
    produced_by: int | None = None
    status: Status = Status.CURRENT
    structured: Payload | None = None


# Activity id -> owning stage; used for produced_by consistency checks.
ACTIVITY_STAGE: dict[int, int] = {
    1: 1, 2: 1,
    3: 2, 4: 2, 5: 2,
    6: 3, 7: 3, 8: 3, 9: 3,
    10: 4, 11: 4, 12: 4,
    13: 5, 14: 5,
    15: 6, 16: 6, 17: 6,
}


def make_record(record_id: str, kind: ArtefactKind, title: str, content: bytes | str,
                *, produced_by: int | None = None, status: Status = Status.CURRENT,
                structured: Payload | None = None, content_ref: str = "",
                stage: int | None = None) -> ArtefactRecord:
    """Build a record with its digest computed from the content bytes."""
    data = content.encode("utf-8") if isinstance(content, str) else content
    return ArtefactRecord(
        id=record_id, kind=kind, title=title, digest=content_digest(data),
        stage=KIND_STAGE[kind] if stage is None else stage,
        content_ref=content_ref or f"inline:{len(data)}",
        produced_by=produced_by, status=status, structured=structured)


@dataclass(frozen=True)
class Registry:
    """Immutable snapshot of registered artefacts; single logical writer."""

    records: tuple[ArtefactRecord, ...] = ()
    _by_id: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_by_id", {r.id: r for r in self.records})

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, record_id: str) -> bool:
        return record_id in self._by_id

    def get(self, record_id: str) -> ArtefactRecord:
        try:
            return self._by_id[record_id]
        except KeyError:
            raise UnknownArtefact(record_id) from None

    def find(self, record_id: str) -> ArtefactRecord | None:
        return self._by_id.get(record_id)

    def lookup_all(self, kind: ArtefactKind) -> list[ArtefactRecord]:
        """All records of a kind, in stable lexicographic id order."""
        return sorted((r for r in self.records if r.kind is kind), key=lambda r: r.id)

    def current(self, kind: ArtefactKind) -> list[ArtefactRecord]:
        return [r for r in self.lookup_all(kind) if r.status is Status.CURRENT]

    def first(self, kind: ArtefactKind) -> ArtefactRecord | None:
        recs = self.lookup_all(kind)
        return recs[0] if recs else None

    def with_status(self, record_id: str, status: Status) -> "Registry":
        if record_id not in self._by_id:
            raise UnknownArtefact(record_id)
        return Registry(tuple(
            replace(r, status=status) if r.id == record_id else r for r in self.records))

    # Typed payload aggregation over Current records.
    def _payloads(self, kind: ArtefactKind) -> list[Payload]:
        return [r.structured for r in self.current(kind) if r.structured is not None]

    def allocated_requirements(self) -> list[SafetyRequirement]:
        out = [req for p in self._payloads(ArtefactKind.E)
               for req in getattr(p, "requirements", ())]
        return sorted(out, key=lambda r: r.id)

    def ml_requirements(self) -> list[SafetyRequirement]:
        out = [req for p in self._payloads(ArtefactKind.H)
               for req in getattr(p, "requirements", ())]
        return sorted(out, key=lambda r: r.id)

    def data_requirements(self) -> list[DataRequirement]:
        out = [req for p in self._payloads(ArtefactKind.L)
               for req in getattr(p, "requirements", ())]
        return sorted(out, key=lambda r: r.id)

    def datasets(self) -> list[tuple[ArtefactRecord, DatasetDescriptor]]:
        out = []
        for kind in (ArtefactKind.N, ArtefactKind.O, ArtefactKind.P):
            for rec in self.current(kind):
                if isinstance(rec.structured, DatasetDescriptor):
                    out.append((rec, rec.structured))
        return out

    def verification_entries(self) -> list[VerificationEntry]:
        out = [e for p in self._payloads(ArtefactKind.Z) for e in getattr(p, "entries", ())]
        return sorted(out, key=lambda e: e.id)

    def erroneous_entries(self) -> list[ErroneousBehaviourEntry]:
        out = [e for p in self._payloads(ArtefactKind.DD) for e in getattr(p, "entries", ())]
        return sorted(out, key=lambda e: e.id)

    def environment_assumptions(self) -> list[EnvironmentAssumption]:
        out = [a for p in self._payloads(ArtefactKind.B) for a in getattr(p, "assumptions", ())]
        return sorted(out, key=lambda a: a.id)

    def scenario_set(self) -> ScenarioSet | None:
        for p in self._payloads(ArtefactKind.EE):
            if isinstance(p, ScenarioSet):
                return p
        return None

    def integration_entries(self) -> list[IntegrationTestEntry]:
        out = [e for p in self._payloads(ArtefactKind.FF) for e in getattr(p, "entries", ())]
        return sorted(out, key=lambda e: e.id)

    def req_validation_entries(self) -> list[ReqValidationEntry]:
        out = [e for p in self._payloads(ArtefactKind.J) for e in getattr(p, "entries", ())]
        return sorted(out, key=lambda e: e.requirement_id)

    def data_validation_entries(self) -> list[DataValidationEntry]:
        out = [e for p in self._payloads(ArtefactKind.S) for e in getattr(p, "entries", ())]
        return sorted(out, key=lambda e: (e.dataset_role.value, e.data_requirement_id))

    def verification_log(self) -> VerificationLog | None:
        for p in self._payloads(ArtefactKind.AA):
            if isinstance(p, VerificationLog):
                return p
        return None


def register(registry: Registry, record: ArtefactRecord,
             *, content: bytes | None = None) -> Registry:
    """Append a record; returns the updated registry.

    Re-registration under an existing id is refused (a changed artefact is a
    new record). When `content` is supplied the stored digest is re-derived
    from it and must match.
    """
    if record.id in registry:
        raise DuplicateId(record.id)
    expected_stage = KIND_STAGE[record.kind]
    if record.stage != expected_stage:
        raise KindStageMismatch(
            f"{record.id}: kind {record.kind.value} belongs to stage {expected_stage}, "
            f"declared stage {record.stage}")
    if record.produced_by is not None:
        owner = ACTIVITY_STAGE.get(record.produced_by)
        if owner != record.stage:
            raise KindStageMismatch(
                f"{record.id}: activity {record.produced_by} does not belong to "
                f"stage {record.stage}")
    if content is not None and content_digest(content) != record.digest:
        raise DigestMismatch(f"{record.id}: digest does not match content")
    return Registry(registry.records + (record,))


def register_all(registry: Registry, records: Iterable[ArtefactRecord]) -> Registry:
    for record in records:
        registry = register(registry, record)
    return registry


def dataset_overlap(a: DatasetDescriptor, b: DatasetDescriptor) -> set[str]:
    """Exact intersection of the two sample-digest sets."""
    return set(a.sample_ids) & set(b.sample_ids)


# ---------------------------------------------------------------------------
# Payload (de)serialization: plain-dict forms used by the manifest and the
# JSON interchange documents.

def _req_to_dict(r: SafetyRequirement) -> dict:
    out: dict = {"id": r.id, "text": r.text, "level": r.level.value}
    if r.ml_kind is not None:
        out["ml_kind"] = r.ml_kind.value
    if r.traces_to:
        out["traces_to"] = list(r.traces_to)
    if r.assumptions:
        out["assumptions"] = list(r.assumptions)
    if r.derived_note:
        out["derived_note"] = r.derived_note
    if r.untranslated_justification:
        out["untranslated_justification"] = r.untranslated_justification
    return out


def _req_from_dict(d: Mapping) -> SafetyRequirement:
    return SafetyRequirement(
        id=d["id"], text=d["text"], level=RequirementLevel(d["level"]),
        ml_kind=MlRequirementKind(d["ml_kind"]) if d.get("ml_kind") else None,
        traces_to=tuple(d.get("traces_to", ())),
        assumptions=tuple(d.get("assumptions", ())),
        derived_note=d.get("derived_note", ""),
        untranslated_justification=d.get("untranslated_justification", ""))


def payload_to_dict(payload: Payload) -> dict:
    if isinstance(payload, RequirementSet):
        return {"type": "requirements",
                "requirements": [_req_to_dict(r) for r in payload.requirements]}
    if isinstance(payload, DataRequirementSet):
        return {"type": "data_requirements",
                "requirements": [
                    {"id": r.id, "category": r.category.value, "text": r.text,
                     "source_ml_requirements": list(r.source_ml_requirements)}
                    for r in payload.requirements]}
    if isinstance(payload, DatasetDescriptor):
        return {"type": "dataset", "role": payload.role.value,
                "samples": sorted(payload.sample_ids),
                "requirement_coverage": [
                    {"data_requirement": dr, "status": st, "justification": j}
                    for dr, (st, j) in payload.requirement_coverage]}
    if isinstance(payload, ReqValidationResults):
        return {"type": "requirements_validation",
                "entries": [{"requirement_id": e.requirement_id, "method": e.method,
                             "notes": e.notes} for e in payload.entries]}
    if isinstance(payload, DataValidationResults):
        return {"type": "data_validation",
                "entries": [{"dataset_role": e.dataset_role.value,
                             "data_requirement": e.data_requirement_id,
                             "status": e.status, "justification": e.justification}
                            for e in payload.entries]}
    if isinstance(payload, VerificationResults):
        return {"type": "verification_results",
                "entries": [{"id": e.id, "requirement_id": e.requirement_id,
                             "method": e.method.value, "result": e.result.value,
                             "independence_note": e.independence_note,
                             "formal_translation_justification":
                                 e.formal_translation_justification}
                            for e in payload.entries]}
    if isinstance(payload, VerificationLog):
        return {"type": "verification_log",
                "independence_statement": payload.independence_statement,
                "strategy": payload.strategy,
                "leakage_controls": payload.leakage_controls}
    if isinstance(payload, ErroneousBehaviourLog):
        return {"type": "erroneous_behaviour",
                "entries": [{"id": e.id, "direction": e.direction.value,
                             "description": e.description, "monitor": e.monitor,
                             "response": e.response} for e in payload.entries]}
    if isinstance(payload, EnvironmentDescription):
        return {"type": "environment",
                "assumptions": [{"id": a.id, "text": a.text, "monitor": a.monitor}
                                for a in payload.assumptions]}
    if isinstance(payload, ScenarioSet):
        return {"type": "operational_scenarios",
                "justification": payload.justification,
                "scenarios": [{"id": s.id, "description": s.description}
                              for s in payload.scenarios]}
    if isinstance(payload, IntegrationResults):
        return {"type": "integration_results",
                "entries": [{"id": e.id, "scenario_ids": list(e.scenario_ids),
                             "result": e.result,
                             "requirement_ids": list(e.requirement_ids)}
                            for e in payload.entries]}
    raise TypeError(f"unknown payload type {type(payload)!r}")


def payload_from_dict(data: Mapping) -> Payload:
    kind = data.get("type")
    if kind == "requirements":
        return RequirementSet(tuple(_req_from_dict(d) for d in data["requirements"]))
    if kind == "data_requirements":
        return DataRequirementSet(tuple(
            DataRequirement(d["id"], DataCategory(d["category"]), d["text"],
                            tuple(d.get("source_ml_requirements", ())))
            for d in data["requirements"]))
    if kind == "dataset":
        return DatasetDescriptor(
            role=DatasetRole(data["role"]),
            sample_ids=frozenset(data.get("samples", ())),
            requirement_coverage=tuple(
                (c["data_requirement"], (c["status"], c.get("justification", "")))
                for c in data.get("requirement_coverage", ())))
    if kind == "requirements_validation":
        return ReqValidationResults(tuple(
            ReqValidationEntry(d["requirement_id"], d.get("method", "review"),
                               d.get("notes", ""))
            for d in data["entries"]))
    if kind == "data_validation":
        return DataValidationResults(tuple(
            DataValidationEntry(DatasetRole(d["dataset_role"]), d["data_requirement"],
                                d.get("status", "Met"), d.get("justification", ""))
            for d in data["entries"]))
    if kind == "verification_results":
        return VerificationResults(tuple(
            VerificationEntry(d["id"], d["requirement_id"],
                              VerificationMethod(d["method"]),
                              VerificationResult(d["result"]),
                              d.get("independence_note", ""),
                              d.get("formal_translation_justification", ""))
            for d in data["entries"]))
    if kind == "verification_log":
        return VerificationLog(data.get("independence_statement", ""),
                               data.get("strategy", ""),
                               data.get("leakage_controls", ""))
    if kind == "erroneous_behaviour":
        return ErroneousBehaviourLog(tuple(
            ErroneousBehaviourEntry(d["id"], ErrorDirection(d["direction"]),
                                    d.get("description", ""), d.get("monitor", ""),
                                    d.get("response", ""))
            for d in data["entries"]))
    if kind == "environment":
        return EnvironmentDescription(tuple(
            EnvironmentAssumption(d["id"], d.get("text", ""), d.get("monitor", ""))
            for d in data.get("assumptions", ())))
    if kind == "operational_scenarios":
        return ScenarioSet(tuple(
            OperationalScenario(d["id"], d.get("description", ""))
            for d in data.get("scenarios", ())), data.get("justification", ""))
    if kind == "integration_results":
        return IntegrationResults(tuple(
            IntegrationTestEntry(d["id"], tuple(d.get("scenario_ids", ())),
                                 d.get("result", "Pass"),
                                 tuple(d.get("requirement_ids", ())))
            for d in data["entries"]))
    raise ValueError(f"unknown structured payload type {kind!r}")

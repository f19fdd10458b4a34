"""The six-stage AMLAS process graph: stage contracts, readiness, impact.

Dependency edges are kind-level, taken from the fixed stage input/output
table: every input kind of a stage feeds every output kind of that stage.
Impact analysis walks those edges downstream from a changed artefact and
marks the registered records of reachable kinds stale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artefacts import (
    ACTIVITY_STAGE, STAGE_INPUTS, STAGE_OUTPUTS, ArtefactKind, Registry, Status,
    UnknownArtefact, VerificationResult,
)

STAGE_NAMES = {
    1: "ML Safety Assurance Scoping",
    2: "ML Safety Requirements Assurance",
    3: "Data Management",
    4: "Model Learning",
    5: "Model Verification",
    6: "Model Deployment",
}

ACTIVITY_NAMES = {
    1: "Define the Safety Assurance Scope for the ML Component",
    2: "Instantiate ML Safety Assurance Scoping Argument Pattern",
    3: "Develop ML Safety Requirements",
    4: "Validate ML Safety Requirements",
    5: "Instantiate ML Safety Requirements Argument Pattern",
    6: "Define Data Requirements",
    7: "Generate ML Data",
    8: "Validate ML Data",
    9: "Instantiate ML Data Argument Pattern",
    10: "Create ML Model",
    11: "Test ML Model",
    12: "Instantiate ML Learning Argument Pattern",
    13: "Verify ML Model",
    14: "Instantiate ML Verification Argument Pattern",
    15: "Integrate ML Model",
    16: "Test the Integration",
    17: "Instantiate ML Deployment Argument Pattern",
}

# Per-activity artefact contracts (consumed kinds, produced kinds).
ACTIVITY_IO: dict[int, tuple[frozenset[ArtefactKind], frozenset[ArtefactKind]]] = {
    1: (frozenset("ABCD"), frozenset("E")),
    2: (frozenset({"F", "A", "B", "C", "D", "E"}), frozenset("G")),
    3: (frozenset("E"), frozenset("H")),
    4: (frozenset("H"), frozenset("J")),
    5: (frozenset({"I", "E", "H", "J"}), frozenset("K")),
    6: (frozenset("H"), frozenset({"L", "M"})),
    7: (frozenset("L"), frozenset({"N", "O", "P", "Q"})),
    8: (frozenset({"N", "O", "P", "L"}), frozenset("S")),
    9: (frozenset({"R", "L", "M", "N", "O", "P", "Q", "S"}), frozenset("T")),
    10: (frozenset({"H", "N"}), frozenset({"V", "U"})),
    11: (frozenset({"V", "O"}), frozenset("X")),
    12: (frozenset({"W", "O", "U", "V", "X"}), frozenset("Y")),
    13: (frozenset({"H", "P", "V"}), frozenset({"Z", "AA"})),
    14: (frozenset({"BB", "AA", "Z", "P"}), frozenset("CC")),
    15: (frozenset({"A", "B", "C", "V"}), frozenset("DD")),
    16: (frozenset({"A", "EE"}), frozenset("FF")),
    17: (frozenset({"GG", "DD", "EE", "FF"}), frozenset("HH")),
}
ACTIVITY_IO = {
    act: (frozenset(ArtefactKind(k) for k in ins), frozenset(ArtefactKind(k) for k in outs))
    for act, (ins, outs) in ACTIVITY_IO.items()
}


@dataclass(frozen=True, slots=True)
class StageSpec:
    stage: int
    name: str
    inputs: frozenset[ArtefactKind]
    outputs: frozenset[ArtefactKind]
    activities: tuple[int, ...]


STAGES: dict[int, StageSpec] = {
    n: StageSpec(
        stage=n, name=STAGE_NAMES[n], inputs=STAGE_INPUTS[n], outputs=STAGE_OUTPUTS[n],
        activities=tuple(a for a, s in sorted(ACTIVITY_STAGE.items()) if s == n))
    for n in range(1, 7)
}


@dataclass(frozen=True, slots=True)
class ActivityRecord:
    activity: int
    performed_at: str = ""  # ISO 8601 timestamp, informational
    consumed: tuple[str, ...] = ()
    produced: tuple[str, ...] = ()
    notes: str = ""


def activity_contract_violations(registry: Registry, record: ActivityRecord) -> list[str]:
    """Kinds of consumed/produced artefacts must match the activity's contract."""
    if record.activity not in ACTIVITY_IO:
        return [f"unknown activity id {record.activity}"]
    ins, outs = ACTIVITY_IO[record.activity]
    problems = []
    for rid in record.consumed:
        rec = registry.find(rid)
        if rec is None:
            problems.append(f"consumed artefact {rid!r} is not registered")
        elif rec.kind not in ins:
            problems.append(f"activity {record.activity} does not consume kind "
                            f"{rec.kind.value} ({rid})")
    for rid in record.produced:
        rec = registry.find(rid)
        if rec is None:
            problems.append(f"produced artefact {rid!r} is not registered")
        elif rec.kind not in outs:
            problems.append(f"activity {record.activity} does not produce kind "
                            f"{rec.kind.value} ({rid})")
    return problems


@dataclass(frozen=True, slots=True)
class Readiness:
    ready: bool
    missing: frozenset[ArtefactKind] = frozenset()


def stage_readiness(registry: Registry, stage: int) -> Readiness:
    """Ready iff every input kind of the stage has at least one Current record."""
    spec = STAGES[stage]
    missing = frozenset(k for k in spec.inputs if not registry.current(k))
    return Readiness(ready=not missing, missing=missing)


def downstream_kinds(changed: ArtefactKind) -> set[ArtefactKind]:
    """Kinds reachable from `changed` through the stage table (exclusive)."""
    reached: set[ArtefactKind] = set()
    frontier = {changed}
    while frontier:
        kind = frontier.pop()
        for stage in range(1, 7):
            if kind in STAGE_INPUTS[stage]:
                for out in STAGE_OUTPUTS[stage]:
                    if out not in reached:
                        reached.add(out)
                        frontier.add(out)
    reached.discard(changed)
    return reached


@dataclass(frozen=True, slots=True)
class ImpactReport:
    changed: str
    stale: tuple[str, ...]            # registered artefact ids, sorted
    stale_kinds: tuple[str, ...]      # kind letters, sorted
    revisit_stages: tuple[int, ...]   # sorted stage numbers


def impact(registry: Registry, changed: str) -> ImpactReport:
    """Downstream-only staleness plus feedback suggestions.

    A Fail in any Current verification result (Z) always contributes the
    revisit suggestion {2, 3, 4}: whether requirements, data or learning must
    be reworked depends on the nature of the findings, so the tool reports
    and the engineer decides.
    """
    record = registry.get(changed)  # raises UnknownArtefact
    kinds = downstream_kinds(record.kind)
    stale = tuple(sorted(
        r.id for r in registry.records if r.kind in kinds and r.id != changed))
    revisit = {stage for stage in range(1, 7)
               if STAGE_OUTPUTS[stage] & kinds}
    if any(e.result is VerificationResult.FAIL for e in registry.verification_entries()):
        revisit.update({2, 3, 4})
    return ImpactReport(
        changed=changed,
        stale=stale,
        stale_kinds=tuple(sorted(k.value for k in kinds)),
        revisit_stages=tuple(sorted(revisit)))


def apply_impact(registry: Registry, report: ImpactReport) -> Registry:
    """Return a registry snapshot with the report's stale statuses applied."""
    for rid in report.stale:
        registry = registry.with_status(rid, Status.STALE)
    return registry


__all__ = [
    "ACTIVITY_IO", "ACTIVITY_NAMES", "ActivityRecord", "ImpactReport", "Readiness",
    "STAGES", "STAGE_NAMES", "StageSpec", "activity_contract_violations", "apply_impact",
    "downstream_kinds", "impact", "stage_readiness", "UnknownArtefact",
]

"""Structural and editorial checks over a built scheme, plus statistics.

Checks carry stable identifiers so reports can be filtered downstream:

    V1  every concept's code re-parses to the stored canonical form
    V2  third-level labels are globally unique
    V3  cross-reference and statement targets resolve within the scheme
    V4  hierarchy is a forest of depth <= 3 rooted in top-level concepts
    V5  no minted IRI contains whitespace
    V6  every concept has a non-empty English label
    V7  no unparsed description remainders

V3 and V7 report warnings; strict mode promotes them to errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .codes import Level, MalformedCode, canonical_string, parent_code, parse_code
from .scheme import ConceptScheme


@dataclass(frozen=True)
class Finding:
    check_id: str
    subject: str
    message: str


@dataclass
class SchemeStats:
    count_by_level: dict[Level, int]
    concept_total: int
    statement_total: int
    collection_sizes: dict[str, int]


@dataclass
class ValidationReport:
    errors: list[Finding] = field(default_factory=list)
    warnings: list[Finding] = field(default_factory=list)
    stats: SchemeStats | None = None

    @property
    def ok(self) -> bool:
        return not self.errors


def _has_whitespace(text: str) -> bool:
    return any(c.isspace() for c in text)


def _check_codes(scheme: ConceptScheme) -> list[Finding]:
    findings = []
    for key, concept in scheme.concepts.items():
        try:
            reparsed = parse_code(concept.code.raw)
        except MalformedCode:
            findings.append(
                Finding("V1", key, f"code {concept.code.raw!r} is not grammatical")
            )
            continue
        if canonical_string(reparsed) != canonical_string(concept.code):
            findings.append(
                Finding(
                    "V1",
                    key,
                    f"code {concept.code.raw!r} does not canonicalize to {key}",
                )
            )
    return findings


def _check_unique_third_level_labels(scheme: ConceptScheme) -> list[Finding]:
    by_label: dict[str, list[str]] = {}
    for key, concept in scheme.concepts.items():
        if concept.code.level is Level.THIRD_LEVEL:
            by_label.setdefault(concept.pref_labels.get("en", ""), []).append(key)
    findings = []
    for label, keys in by_label.items():
        if len(keys) > 1:
            codes = ", ".join(sorted(keys))
            findings.append(
                Finding(
                    "V2",
                    ";".join(sorted(keys)),
                    f"third-level label {label!r} shared by {codes}",
                )
            )
    return findings


def _check_targets_resolve(scheme: ConceptScheme) -> list[Finding]:
    missing: set[tuple[str, str]] = set()
    for key, concept in scheme.concepts.items():
        for directive in concept.directives:
            for target in directive.targets:
                target_key = canonical_string(target)
                if target_key not in scheme.concepts:
                    missing.add((key, target_key))
    for statement in scheme.statements:
        for code in (statement.subject_code, statement.object_code):
            code_key = canonical_string(code)
            if code_key not in scheme.concepts:
                missing.add((canonical_string(statement.subject_code), code_key))
    return [
        Finding("V3", src, f"cross-reference target {dst} is not in the scheme")
        for src, dst in sorted(missing)
    ]


def _check_hierarchy(scheme: ConceptScheme) -> list[Finding]:
    findings = []
    for key, concept in scheme.concepts.items():
        expected = parent_code(concept.code)
        if concept.code.level is Level.TOP_LEVEL:
            if concept.broader is not None:
                findings.append(Finding("V4", key, "top-level concept has a broader link"))
            continue
        if concept.broader is None or expected is None or concept.broader != expected:
            findings.append(
                Finding("V4", key, "broader link does not match the derived parent")
            )
            continue
        if canonical_string(expected) not in scheme.concepts:
            findings.append(
                Finding(
                    "V4",
                    key,
                    f"parent {canonical_string(expected)} is missing from the scheme",
                )
            )
    return findings


def _check_iris(scheme: ConceptScheme) -> list[Finding]:
    findings = []
    if _has_whitespace(scheme.base_uri):
        findings.append(Finding("V5", scheme.base_uri, "scheme base URI contains whitespace"))
    for key, concept in scheme.concepts.items():
        if _has_whitespace(concept.uri):
            findings.append(Finding("V5", key, f"concept URI {concept.uri!r} contains whitespace"))
    for statement in scheme.statements:
        if _has_whitespace(statement.uri):
            findings.append(
                Finding(
                    "V5",
                    statement.local_name,
                    f"statement URI {statement.uri!r} contains whitespace",
                )
            )
    return findings


def _check_english_labels(scheme: ConceptScheme) -> list[Finding]:
    return [
        Finding("V6", key, "concept has no English preferred label")
        for key, concept in scheme.concepts.items()
        if not concept.pref_labels.get("en", "").strip()
    ]


def _check_remainders(scheme: ConceptScheme) -> list[Finding]:
    return [
        Finding("V7", key, f"unparsed description remainder: {concept.remainder!r}")
        for key, concept in scheme.concepts.items()
        if concept.remainder is not None
    ]


def stats(scheme: ConceptScheme) -> SchemeStats:
    """Exact concept counts per hierarchy level plus artifact totals."""
    count_by_level = {level: 0 for level in Level}
    for concept in scheme.concepts.values():
        count_by_level[concept.code.level] += 1
    return SchemeStats(
        count_by_level=count_by_level,
        concept_total=len(scheme.concepts),
        statement_total=len(scheme.statements),
        collection_sizes={name: len(members) for name, members in scheme.collections.items()},
    )


def validate_scheme(scheme: ConceptScheme, strict: bool = False) -> ValidationReport:
    """Run all checks; never raises, findings land in the report."""
    errors: list[Finding] = []
    warnings: list[Finding] = []
    errors.extend(_check_codes(scheme))
    errors.extend(_check_unique_third_level_labels(scheme))
    promotable = _check_targets_resolve(scheme) + _check_remainders(scheme)
    errors.extend(_check_hierarchy(scheme))
    errors.extend(_check_iris(scheme))
    errors.extend(_check_english_labels(scheme))
    if strict:
        errors.extend(promotable)
    else:
        warnings.extend(promotable)

    def order(f: Finding) -> tuple[str, str, str]:
        return (f.check_id, f.subject, f.message)

    return ValidationReport(
        errors=sorted(errors, key=order),
        warnings=sorted(warnings, key=order),
        stats=stats(scheme),
    )


_LEVEL_NAMES = {
    Level.TOP_LEVEL: "top level",
    Level.SECOND_FACET: "second level (facet)",
    Level.SECOND_SUBJECT: "second level (subject)",
    Level.THIRD_LEVEL: "third level",
}


def render_report(report: ValidationReport) -> str:
    """Human-readable, line-oriented report text."""
    lines = [f"errors: {len(report.errors)}"]
    lines.extend(f"  {f.check_id} {f.subject}: {f.message}" for f in report.errors)
    lines.append(f"warnings: {len(report.warnings)}")
    lines.extend(f"  {f.check_id} {f.subject}: {f.message}" for f in report.warnings)
    if report.stats is not None:
        s = report.stats
        lines.append(f"concepts: {s.concept_total}")
        for level in Level:
            lines.append(f"  {_LEVEL_NAMES[level]}: {s.count_by_level[level]}")
        lines.append(f"statements: {s.statement_total}")
        for name in sorted(s.collection_sizes):
            lines.append(f"collection {name!r}: {s.collection_sizes[name]} member(s)")
    return "\n".join(lines) + "\n"


def report_to_dict(report: ValidationReport) -> dict:
    """Machine-readable report: one record per finding plus the stats."""
    def finding_record(f: Finding, severity: str) -> dict:
        return {
            "check": f.check_id,
            "severity": severity,
            "subject": f.subject,
            "message": f.message,
        }

    records = [finding_record(f, "error") for f in report.errors]
    records.extend(finding_record(f, "warning") for f in report.warnings)
    payload: dict = {"findings": records}
    if report.stats is not None:
        payload["stats"] = {
            "concept_total": report.stats.concept_total,
            "statement_total": report.stats.statement_total,
            "count_by_level": {
                level.value: count
                for level, count in report.stats.count_by_level.items()
            },
            "collection_sizes": dict(sorted(report.stats.collection_sizes.items())),
        }
    return payload

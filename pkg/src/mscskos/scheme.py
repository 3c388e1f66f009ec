"""Assembles a SKOS concept scheme from tabular release data.

One concept per table row: the description column is parsed into a clean
label plus cross-reference directives, the super-ordinate code is derived
from the code grammar, and a URI is minted from the canonical code.
Usage-constraint scope notes, facet collections, and reified conditional
cross-references are populated on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .annotations import (
    Directive,
    DirectiveKind,
    InnerKind,
    ScopeMarker,
    find_marker_parenthetical,
    parse_description,
)
from .codes import MscCode, canonical_string, facet_suffix, parent_code, parse_code

DEFAULT_COLLECTION_SPECS: tuple[tuple[str, str], ...] = (
    ("historical works", "-03"),
    ("proceedings", "-06"),
    ("computational methods", "-08"),
    ("research data", "-11"),
)

MSC_URI_ROOT = "http://msc.org/resources/MSC/"


class DuplicateCode(ValueError):
    """Two input rows canonicalize to the same code."""


class NoteKind(Enum):
    NOT_USE = "NotUse"
    MUST_USE = "MustUse"
    USE = "Use"
    PLAIN = "Plain"


_NOTE_KIND_FOR_MARKER = {
    ScopeMarker.NOT_USE: NoteKind.NOT_USE,
    ScopeMarker.MUST_USE: NoteKind.MUST_USE,
    ScopeMarker.USE: NoteKind.USE,
}


@dataclass(frozen=True)
class BuildConfig:
    """Scheme-level settings supplied via CLI flags or a config file."""

    version_id: str
    license_iri: str
    title: str
    base_uri: str | None = None
    creators: tuple[str, ...] = ()
    issued: str | None = None
    collection_specs: tuple[tuple[str, str], ...] = DEFAULT_COLLECTION_SPECS

    def resolved_base_uri(self) -> str:
        if self.base_uri:
            return self.base_uri if self.base_uri.endswith("/") else self.base_uri + "/"
        return f"{MSC_URI_ROOT}{self.version_id}/"


@dataclass
class Concept:
    code: MscCode
    uri: str
    pref_labels: dict[str, str]
    description_raw: str
    directives: list[Directive]
    broader: MscCode | None
    scheme_id: str
    scope_notes: list[tuple[NoteKind, str]] = field(default_factory=list)
    remainder: str | None = None
    parse_warnings: list[str] = field(default_factory=list)


@dataclass
class SeeForStatement:
    """A reified conditional cross-reference with its textual scope."""

    local_name: str
    uri: str
    subject_code: MscCode
    object_code: MscCode
    scope: str
    inner: InnerKind


@dataclass
class ConceptScheme:
    version_id: str
    base_uri: str
    title: str
    license_iri: str
    creators: tuple[str, ...]
    issued: str | None
    concepts: dict[str, Concept]
    statements: list[SeeForStatement] = field(default_factory=list)
    collections: dict[str, list[str]] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def scheme_uri(self) -> str:
        return self.base_uri.rstrip("/")

    def concept_uri(self, code: MscCode) -> str:
        return self.base_uri + canonical_string(code)

    def sorted_concepts(self) -> list[Concept]:
        return [self.concepts[key] for key in sorted(self.concepts)]


def build_scheme(
    rows: Iterable[tuple[str, str, str]],
    translations: Iterable[tuple[str, str, str]] = (),
    config: BuildConfig | None = None,
) -> ConceptScheme:
    """Build a complete scheme from (code, text, description) rows.

    The description column is authoritative when filled; otherwise the
    text column supplies the label.  Raises :class:`DuplicateCode` when
    two rows canonicalize to the same code and propagates
    :class:`~mscskos.codes.MalformedCode` for unparseable codes.
    Everything recoverable (unparsed directive groups, translations for
    unknown codes) is kept as warnings for the validator.
    """
    if config is None:
        raise ValueError("a BuildConfig is required")
    if not config.license_iri:
        raise ValueError("a license IRI is required to build a scheme")
    rows = list(rows)
    if not rows:
        raise ValueError("no concept rows")

    base_uri = config.resolved_base_uri()
    scheme = ConceptScheme(
        version_id=config.version_id,
        base_uri=base_uri,
        title=config.title,
        license_iri=config.license_iri,
        creators=tuple(config.creators),
        issued=config.issued,
        concepts={},
    )

    for code_text, text, description in rows:
        code = parse_code(code_text)
        canonical = canonical_string(code)
        if canonical in scheme.concepts:
            raise DuplicateCode(
                f"rows {scheme.concepts[canonical].code.raw!r} and {code.raw!r} "
                f"both canonicalize to {canonical}"
            )
        source = description.strip() if description and description.strip() else text
        parsed = parse_description(source)
        label = parsed.clean_label or text.strip()
        scheme.concepts[canonical] = Concept(
            code=code,
            uri=base_uri + canonical,
            pref_labels={"en": label},
            description_raw=description,
            directives=list(parsed.directives),
            broader=parent_code(code),
            scheme_id=config.version_id,
            remainder=parsed.remainder,
            parse_warnings=list(parsed.warnings),
        )

    for code_text, lang, label in translations:
        try:
            canonical = canonical_string(parse_code(code_text))
        except ValueError:
            scheme.warnings.append(f"translation row with malformed code: {code_text!r}")
            continue
        concept = scheme.concepts.get(canonical)
        if concept is None:
            scheme.warnings.append(f"translation for unknown code {canonical}")
            continue
        concept.pref_labels[lang.strip()] = label

    attach_scope_notes(scheme)
    build_collections(scheme, config.collection_specs)
    scheme.statements = reify_conditionals(scheme)
    return scheme


def reify_conditionals(scheme: ConceptScheme) -> list[SeeForStatement]:
    """Create one named statement per conditional cross-reference target.

    Statement names follow ``SeeForStatement-<src>-to-<dst>``; a repeated
    (source, target) pair gets an ordinal suffix ``-2``, ``-3``, ...
    """
    statements: list[SeeForStatement] = []
    pair_counts: dict[tuple[str, str], int] = {}
    for concept in scheme.sorted_concepts():
        src = canonical_string(concept.code)
        for directive in concept.directives:
            if directive.kind is not DirectiveKind.CONDITIONAL:
                continue
            for target in directive.targets:
                dst = canonical_string(target)
                count = pair_counts.get((src, dst), 0) + 1
                pair_counts[(src, dst)] = count
                local = f"SeeForStatement-{src}-to-{dst}"
                if count > 1:
                    local += f"-{count}"
                statements.append(
                    SeeForStatement(
                        local_name=local,
                        uri=scheme.base_uri + local,
                        subject_code=concept.code,
                        object_code=target,
                        scope=directive.scope or "",
                        inner=directive.inner or InnerKind.SEE,
                    )
                )
    return statements


def build_collections(
    scheme: ConceptScheme, specs: Iterable[tuple[str, str]]
) -> ConceptScheme:
    """Populate facet collections: one per spec, membership by suffix."""
    specs = list(specs)
    names = [name for name, _ in specs]
    if len(set(names)) != len(names):
        raise ValueError("collection spec names must be distinct")
    scheme.collections = {}
    for name, suffix in specs:
        members = [
            key
            for key, concept in sorted(scheme.concepts.items())
            if facet_suffix(concept.code) == suffix
        ]
        scheme.collections[name] = members
    return scheme


def attach_scope_notes(scheme: ConceptScheme) -> ConceptScheme:
    """Attach a typed usage note to every concept whose label carries one."""
    for concept in scheme.concepts.values():
        concept.scope_notes = [
            note for note in concept.scope_notes if note[0] is NoteKind.PLAIN
        ]
        hit = find_marker_parenthetical(concept.pref_labels.get("en", ""))
        if hit is not None:
            marker, text = hit
            concept.scope_notes.append((_NOTE_KIND_FOR_MARKER[marker], text))
    return scheme

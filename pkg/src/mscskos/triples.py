"""Turns a built concept scheme into RDF triples.

Hierarchy is asserted with skos:broader only; skos:narrower is left
implied.  Conditional cross-references yield both a direct
seeConditionally triple and a named statement individual carrying the
textual scope; a conditional "see also"/"see mainly" clause additionally
keeps its verb as a direct triple.
"""

from __future__ import annotations

from .annotations import DirectiveKind, InnerKind
from .codes import canonical_string
from .rdf import (
    DCT_CREATOR,
    DCT_ISSUED,
    DCT_LICENSE,
    DCT_TITLE,
    Iri,
    Literal,
    MSCV_MUST_USE_SCOPE_NOTE,
    MSCV_NOT_USE_SCOPE_NOTE,
    MSCV_SCOPE,
    MSCV_SEE_ALSO,
    MSCV_SEE_CONDITIONALLY,
    MSCV_SEE_FOR,
    MSCV_SEE_FOR_STATEMENT,
    MSCV_SEE_MAINLY,
    MSCV_USE_SCOPE_NOTE,
    OWL_NAMED_INDIVIDUAL,
    OWL_VERSION_INFO,
    RDF_OBJECT,
    RDF_PREDICATE,
    RDF_SUBJECT,
    RDF_TYPE,
    SKOS_BROADER,
    SKOS_COLLECTION,
    SKOS_CONCEPT,
    SKOS_CONCEPT_SCHEME,
    SKOS_IN_SCHEME,
    SKOS_MEMBER,
    SKOS_NOTATION,
    SKOS_PREF_LABEL,
    SKOS_SCOPE_NOTE,
    Triple,
    XSD_DATE,
    XSD_STRING,
)
from .scheme import Concept, ConceptScheme, NoteKind

_PLAIN_REF_PREDICATES = {
    DirectiveKind.SEE_MAINLY: MSCV_SEE_MAINLY,
    DirectiveKind.SEE_ALSO: MSCV_SEE_ALSO,
    DirectiveKind.SEE_FOR: MSCV_SEE_FOR,
}
_INNER_VERB_PREDICATES = {
    InnerKind.SEE_ALSO: MSCV_SEE_ALSO,
    InnerKind.SEE_MAINLY: MSCV_SEE_MAINLY,
}
_NOTE_CLASSES = {
    NoteKind.NOT_USE: MSCV_NOT_USE_SCOPE_NOTE,
    NoteKind.MUST_USE: MSCV_MUST_USE_SCOPE_NOTE,
    NoteKind.USE: MSCV_USE_SCOPE_NOTE,
}


def collection_uri(scheme: ConceptScheme, name: str) -> str:
    return scheme.base_uri + "collection-" + "-".join(name.lower().split())


def scope_note_uri(scheme: ConceptScheme, kind: NoteKind, concept: Concept) -> str:
    return (
        scheme.base_uri + f"{kind.value}ScopeNote-" + canonical_string(concept.code)
    )


def _concept_triples(scheme: ConceptScheme, concept: Concept) -> list[Triple]:
    uri = Iri(concept.uri)
    triples = [
        Triple(uri, RDF_TYPE, SKOS_CONCEPT),
        Triple(uri, SKOS_IN_SCHEME, Iri(scheme.scheme_uri)),
        Triple(
            uri,
            SKOS_NOTATION,
            Literal(canonical_string(concept.code), datatype=XSD_STRING),
        ),
    ]
    langs = ["en"] + sorted(tag for tag in concept.pref_labels if tag != "en")
    for tag in langs:
        if tag in concept.pref_labels:
            triples.append(
                Triple(uri, SKOS_PREF_LABEL, Literal(concept.pref_labels[tag], lang=tag))
            )
    if concept.broader is not None:
        triples.append(
            Triple(uri, SKOS_BROADER, Iri(scheme.concept_uri(concept.broader)))
        )
    for directive in concept.directives:
        if directive.kind is DirectiveKind.CONDITIONAL:
            for target in directive.targets:
                target_uri = Iri(scheme.concept_uri(target))
                triples.append(Triple(uri, MSCV_SEE_CONDITIONALLY, target_uri))
                verb = _INNER_VERB_PREDICATES.get(directive.inner)
                if verb is not None:
                    triples.append(Triple(uri, verb, target_uri))
        else:
            predicate = _PLAIN_REF_PREDICATES[directive.kind]
            for target in directive.targets:
                triples.append(
                    Triple(uri, predicate, Iri(scheme.concept_uri(target)))
                )
    for kind, text in concept.scope_notes:
        if kind is NoteKind.PLAIN:
            triples.append(Triple(uri, SKOS_SCOPE_NOTE, Literal(text)))
            continue
        note = Iri(scope_note_uri(scheme, kind, concept))
        triples.extend(
            [
                Triple(uri, SKOS_SCOPE_NOTE, note),
                Triple(note, RDF_TYPE, OWL_NAMED_INDIVIDUAL),
                Triple(note, RDF_TYPE, _NOTE_CLASSES[kind]),
                Triple(note, MSCV_SCOPE, Literal(text, datatype=XSD_STRING)),
            ]
        )
    return triples


def scheme_to_triples(scheme: ConceptScheme) -> list[Triple]:
    """Emit the full triple set for a scheme, deterministically ordered."""
    scheme_node = Iri(scheme.scheme_uri)
    triples = [
        Triple(scheme_node, RDF_TYPE, SKOS_CONCEPT_SCHEME),
        Triple(scheme_node, DCT_TITLE, Literal(scheme.title, lang="en")),
        Triple(scheme_node, DCT_LICENSE, Iri(scheme.license_iri)),
    ]
    for creator in scheme.creators:
        triples.append(Triple(scheme_node, DCT_CREATOR, Literal(creator)))
    if scheme.issued:
        triples.append(
            Triple(scheme_node, DCT_ISSUED, Literal(scheme.issued, datatype=XSD_DATE))
        )
    triples.append(Triple(scheme_node, OWL_VERSION_INFO, Literal(scheme.version_id)))

    for concept in scheme.sorted_concepts():
        triples.extend(_concept_triples(scheme, concept))

    for statement in scheme.statements:
        node = Iri(statement.uri)
        triples.extend(
            [
                Triple(node, RDF_TYPE, OWL_NAMED_INDIVIDUAL),
                Triple(node, RDF_TYPE, MSCV_SEE_FOR_STATEMENT),
                Triple(node, RDF_OBJECT, Iri(scheme.concept_uri(statement.object_code))),
                Triple(node, RDF_PREDICATE, MSCV_SEE_CONDITIONALLY),
                Triple(node, RDF_SUBJECT, Iri(scheme.concept_uri(statement.subject_code))),
                Triple(node, MSCV_SCOPE, Literal(statement.scope, datatype=XSD_STRING)),
            ]
        )

    for name, members in scheme.collections.items():
        node = Iri(collection_uri(scheme, name))
        triples.append(Triple(node, RDF_TYPE, SKOS_COLLECTION))
        triples.append(Triple(node, SKOS_PREF_LABEL, Literal(name, lang="en")))
        for member in members:
            triples.append(Triple(node, SKOS_MEMBER, Iri(scheme.base_uri + member)))
    return triples

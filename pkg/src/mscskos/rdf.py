"""Minimal RDF term and triple model plus the namespaces the emitter uses."""

from __future__ import annotations

from dataclasses import dataclass

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
OWL = "http://www.w3.org/2002/07/owl#"
XSD = "http://www.w3.org/2001/XMLSchema#"
SKOS = "http://www.w3.org/2004/02/skos/core#"
DCTERMS = "http://purl.org/dc/terms/"
MSCVOCAB = "http://msc.org/resources/MSC/mscvocab#"

DEFAULT_PREFIXES: dict[str, str] = {
    "rdf": RDF,
    "owl": OWL,
    "xsd": XSD,
    "skos": SKOS,
    "dcterms": DCTERMS,
    "mscvocab": MSCVOCAB,
}

_FORBIDDEN_IRI_CHARS = set(' \t\n\r<>"')


@dataclass(frozen=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not self.value or _FORBIDDEN_IRI_CHARS.intersection(self.value):
            raise ValueError(f"invalid IRI: {self.value!r}")


@dataclass(frozen=True)
class Literal:
    lexical: str
    lang: str | None = None
    datatype: str | None = None

    def __post_init__(self) -> None:
        if self.lang is not None and self.datatype is not None:
            raise ValueError("literal cannot carry both language tag and datatype")


@dataclass(frozen=True)
class Blank:
    label: str


Node = Iri | Literal | Blank


@dataclass(frozen=True)
class Triple:
    subject: Iri | Blank
    predicate: Iri
    object: Node


# Terms used when turning a concept scheme into triples.
RDF_TYPE = Iri(RDF + "type")
RDF_SUBJECT = Iri(RDF + "subject")
RDF_PREDICATE = Iri(RDF + "predicate")
RDF_OBJECT = Iri(RDF + "object")

OWL_NAMED_INDIVIDUAL = Iri(OWL + "NamedIndividual")
OWL_VERSION_INFO = Iri(OWL + "versionInfo")

XSD_STRING = XSD + "string"
XSD_DATE = XSD + "date"

SKOS_CONCEPT = Iri(SKOS + "Concept")
SKOS_CONCEPT_SCHEME = Iri(SKOS + "ConceptScheme")
SKOS_COLLECTION = Iri(SKOS + "Collection")
SKOS_IN_SCHEME = Iri(SKOS + "inScheme")
SKOS_NOTATION = Iri(SKOS + "notation")
SKOS_PREF_LABEL = Iri(SKOS + "prefLabel")
SKOS_BROADER = Iri(SKOS + "broader")
SKOS_NARROWER = Iri(SKOS + "narrower")
SKOS_SCOPE_NOTE = Iri(SKOS + "scopeNote")
SKOS_MEMBER = Iri(SKOS + "member")
SKOS_MAPPING_RELATION = Iri(SKOS + "mappingRelation")
SKOS_CHANGE_NOTE = Iri(SKOS + "changeNote")

DCT_TITLE = Iri(DCTERMS + "title")
DCT_LICENSE = Iri(DCTERMS + "license")
DCT_CREATOR = Iri(DCTERMS + "creator")
DCT_ISSUED = Iri(DCTERMS + "issued")

MSCV_SEE_ALSO = Iri(MSCVOCAB + "seeAlso")
MSCV_SEE_MAINLY = Iri(MSCVOCAB + "seeMainly")
MSCV_SEE_FOR = Iri(MSCVOCAB + "seeFor")
MSCV_SEE_CONDITIONALLY = Iri(MSCVOCAB + "seeConditionally")
MSCV_SEE_FOR_STATEMENT = Iri(MSCVOCAB + "SeeForStatement")
MSCV_SCOPE = Iri(MSCVOCAB + "scope")
MSCV_NOT_USE_SCOPE_NOTE = Iri(MSCVOCAB + "NotUseScopeNote")
MSCV_MUST_USE_SCOPE_NOTE = Iri(MSCVOCAB + "MustUseScopeNote")
MSCV_USE_SCOPE_NOTE = Iri(MSCVOCAB + "UseScopeNote")

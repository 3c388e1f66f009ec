"""Compile MSC release tables into SKOS/Turtle Linked Open Data."""

from .annotations import (
    Directive,
    DirectiveKind,
    InnerKind,
    ParsedDescription,
    ScopeMarker,
    extract_label_scope_marker,
    parse_description,
)
from .changes import (
    ArityViolation,
    ChangeCategory,
    ChangeRecord,
    DanglingTarget,
    Discrepancy,
    SchemeDiff,
    UnknownCategory,
    build_mappings,
    diff_versions,
    parse_changes,
    reconcile,
)
from .codes import (
    Level,
    MalformedCode,
    MscCode,
    canonical_string,
    facet_suffix,
    parent_code,
    parse_code,
)
from .rdf import Blank, Iri, Literal, Node, Triple
from .scheme import (
    BuildConfig,
    Concept,
    ConceptScheme,
    DuplicateCode,
    NoteKind,
    SeeForStatement,
    attach_scope_notes,
    build_collections,
    build_scheme,
    reify_conditionals,
)
from .triples import scheme_to_triples
from .turtle import TurtleSyntaxError, UnprefixableIri, emit_turtle, parse_turtle_subset
from .validator import (
    Finding,
    SchemeStats,
    ValidationReport,
    render_report,
    report_to_dict,
    stats,
    validate_scheme,
)

__version__ = "0.1.0"

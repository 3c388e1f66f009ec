from __future__ import annotations

from collections import Counter

import pytest

from mscskos import (
    BuildConfig,
    DirectiveKind,
    DuplicateCode,
    InnerKind,
    NoteKind,
    build_collections,
    build_scheme,
    canonical_string,
    facet_suffix,
    reify_conditionals,
    scheme_to_triples,
)
from mscskos.rdf import Iri, MSCVOCAB, SKOS

from conftest import FIXTURE_CONFIG

CONFIG = BuildConfig(
    version_id="msc2020",
    license_iri="https://creativecommons.org/licenses/by-sa/4.0/",
    title="MSC 2020",
)

TABLE_DESCRIPTION = (
    "Modal logic (including the logic of norms) {For knowledge and belief, "
    "see 03B42; for temporal logic, see 03B44; for provability logic, "
    "see also 03F45}"
)


def test_build_row_with_conditionals(fixture_scheme):
    concept = fixture_scheme.concepts["03B45"]
    kinds = [(d.kind, d.inner) for d in concept.directives]
    assert kinds == [
        (DirectiveKind.CONDITIONAL, InnerKind.SEE),
        (DirectiveKind.CONDITIONAL, InnerKind.SEE),
        (DirectiveKind.CONDITIONAL, InnerKind.SEE_ALSO),
    ]
    assert canonical_string(concept.broader) == "03Bxx"
    assert concept.uri.endswith("/msc2020/03B45")
    assert concept.pref_labels["de"] == "Modallogik (einschließlich deontischer Logik)"


def test_lone_top_level_root():
    scheme = build_scheme([("68-XX", "Computer science", "")], (), CONFIG)
    (concept,) = scheme.concepts.values()
    assert concept.broader is None
    assert concept.pref_labels["en"] == "Computer science"


def test_duplicate_after_canonicalization():
    rows = [("68", "Computer science", ""), ("68-XX", "Computer science", "")]
    with pytest.raises(DuplicateCode):
        build_scheme(rows, (), CONFIG)


def test_empty_rows_rejected():
    with pytest.raises(ValueError):
        build_scheme([], (), CONFIG)


def test_license_required():
    with pytest.raises(ValueError):
        build_scheme(
            [("68", "Computer science", "")],
            (),
            BuildConfig(version_id="x", license_iri="", title="t"),
        )


def test_unknown_translation_becomes_warning():
    scheme = build_scheme(
        [("68", "Computer science", "")], [("99Z99", "de", "x")], CONFIG
    )
    assert any("99Z99" in w for w in scheme.warnings)


def test_base_uri_default_and_override():
    scheme = build_scheme([("68", "Computer science", "")], (), CONFIG)
    assert scheme.base_uri == "http://msc.org/resources/MSC/msc2020/"
    custom = BuildConfig(
        version_id="msc2020",
        license_iri="https://example.org/license",
        title="t",
        base_uri="https://example.org/msc/",
    )
    scheme = build_scheme([("68", "Computer science", "")], (), custom)
    assert scheme.concepts["68-XX"].uri == "https://example.org/msc/68-XX"


def test_reify_names_and_scopes(fixture_scheme):
    by_name = {s.local_name: s for s in fixture_scheme.statements}
    statement = by_name["SeeForStatement-03B45-to-03B44"]
    assert statement.scope == "for temporal logic"
    assert canonical_string(statement.subject_code) == "03B45"
    assert canonical_string(statement.object_code) == "03B44"


def test_reify_ordinal_suffix_for_repeated_pairs():
    rows = [
        ("03", "Logic", ""),
        ("03Bxx", "General logic", ""),
        ("03B45", "Modal logic", "Modal logic {For a, see 03B44; for b, see 03B44}"),
        ("03B44", "Temporal logic", ""),
    ]
    scheme = build_scheme(rows, (), CONFIG)
    names = [s.local_name for s in scheme.statements]
    assert names == [
        "SeeForStatement-03B45-to-03B44",
        "SeeForStatement-03B45-to-03B44-2",
    ]


def test_concept_without_conditionals_yields_no_statements():
    scheme = build_scheme([("68", "Computer science", "")], (), CONFIG)
    assert reify_conditionals(scheme) == []


def test_collection_membership_is_facet_suffix_filter(fixture_scheme):
    # brute-force oracle over the concept table
    for name, suffix in FIXTURE_CONFIG.collection_specs:
        expected = sorted(
            key
            for key, concept in fixture_scheme.concepts.items()
            if facet_suffix(concept.code) == suffix
        )
        assert fixture_scheme.collections[name] == expected
    assert fixture_scheme.collections["research data"] == ["05-11", "11-11"]
    assert fixture_scheme.collections["historical works"] == ["11-03"]
    assert fixture_scheme.collections["computational methods"] == []


def test_collection_names_must_be_distinct():
    scheme = build_scheme([("68", "Computer science", "")], (), CONFIG)
    with pytest.raises(ValueError):
        build_collections(scheme, [("a", "-03"), ("a", "-06")])


def test_scope_notes_attached(fixture_scheme):
    notes = {
        key: concept.scope_notes
        for key, concept in fixture_scheme.concepts.items()
        if concept.scope_notes
    }
    assert set(notes) == {"00-XX", "11-06", "80Mxx"}
    assert notes["00-XX"][0][0] is NoteKind.MUST_USE
    assert notes["11-06"][0][0] is NoteKind.USE
    assert notes["80Mxx"] == [
        (NoteKind.NOT_USE, "(do not use; use more specific entries whenever possible)")
    ]


def test_uri_minting_is_injective(fixture_scheme):
    uris = [c.uri for c in fixture_scheme.concepts.values()]
    uris += [s.uri for s in fixture_scheme.statements]
    assert len(uris) == len(set(uris))


def test_only_broader_is_asserted(fixture_scheme):
    triples = scheme_to_triples(fixture_scheme)
    broader = Iri(SKOS + "broader")
    narrower = Iri(SKOS + "narrower")
    assert sum(1 for t in triples if t.predicate == narrower) == 0
    non_top = [c for c in fixture_scheme.concepts.values() if c.broader is not None]
    assert sum(1 for t in triples if t.predicate == broader) == len(non_top)


def test_statements_match_plain_conditional_triples(fixture_scheme):
    triples = scheme_to_triples(fixture_scheme)
    plain = {
        (t.subject.value, t.object.value)
        for t in triples
        if t.predicate == Iri(MSCVOCAB + "seeConditionally")
    }
    for statement in fixture_scheme.statements:
        pair = (
            fixture_scheme.concept_uri(statement.subject_code),
            fixture_scheme.concept_uri(statement.object_code),
        )
        assert pair in plain


def test_conditional_see_also_keeps_its_verb_as_direct_triple(fixture_scheme):
    triples = Counter(scheme_to_triples(fixture_scheme))
    see_also = Iri(MSCVOCAB + "seeAlso")
    subject = Iri(fixture_scheme.concepts["03B45"].uri)
    target = Iri(fixture_scheme.concepts["03F45"].uri)
    assert any(
        t.subject == subject and t.predicate == see_also and t.object == target
        for t in triples
    )

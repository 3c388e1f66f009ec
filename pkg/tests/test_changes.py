from __future__ import annotations

import random

import pytest

from mscskos import (
    ArityViolation,
    BuildConfig,
    ChangeCategory,
    ChangeRecord,
    DanglingTarget,
    UnknownCategory,
    build_mappings,
    build_scheme,
    diff_versions,
    parse_changes,
    parse_code,
    reconcile,
)
from mscskos.rdf import Iri, Literal, SKOS

from conftest import OLD_BASE_URI, load_change_rows

MAPPING = Iri(SKOS + "mappingRelation")
CHANGE_NOTE = Iri(SKOS + "changeNote")

CONFIG = BuildConfig(
    version_id="msc2020",
    license_iri="https://example.org/license",
    title="MSC 2020",
)


def codes(*texts):
    return tuple(parse_code(t) for t in texts)


def test_parse_new_record():
    (record,) = parse_changes([("New", "", "05-11", "")])
    assert record.category is ChangeCategory.NEW
    assert record.sources == ()
    assert [c.raw for c in record.targets] == ["05-11"]


def test_parse_deleted_record():
    (record,) = parse_changes([("Deleted", "80M25", "", "")])
    assert record.category is ChangeCategory.DELETED
    assert record.targets == ()


def test_moved_requires_one_target():
    with pytest.raises(ArityViolation):
        parse_changes([("Moved", "03B25", "03B25;03B26", "")])


def test_new_with_source_is_arity_violation():
    with pytest.raises(ArityViolation):
        parse_changes([("New", "03B25", "05-11", "")])


def test_merged_requires_two_sources():
    with pytest.raises(ArityViolation):
        parse_changes([("Merged", "80M22", "80M20", "")])


def test_unknown_category():
    with pytest.raises(UnknownCategory):
        parse_changes([("Renamed", "01-01", "01-01", "")])


def test_category_names_case_insensitive():
    (record,) = parse_changes([("DELETED", "80M25", "", "")])
    assert record.category is ChangeCategory.DELETED


def _mapping_triples(triples):
    return [t for t in triples if t.predicate == MAPPING]


def test_new_record_yields_annotations_but_no_mapping(fixture_scheme):
    records = parse_changes([("New", "", "05-11", "")])
    triples = build_mappings(records, fixture_scheme, OLD_BASE_URI)
    assert _mapping_triples(triples) == []
    new_uri = Iri(fixture_scheme.base_uri + "05-11")
    parent_uri = Iri(fixture_scheme.base_uri + "05-XX")
    assert Triple_in(triples, new_uri, CHANGE_NOTE)
    assert Triple_in(triples, parent_uri, CHANGE_NOTE)


def Triple_in(triples, subject, predicate):
    return any(t.subject == subject and t.predicate == predicate for t in triples)


def test_deleted_record_annotates_old_uri(fixture_scheme):
    records = parse_changes([("Deleted", "80M25", "", "")])
    triples = build_mappings(records, fixture_scheme, OLD_BASE_URI)
    assert _mapping_triples(triples) == []
    assert Triple_in(triples, Iri(OLD_BASE_URI + "80M25"), CHANGE_NOTE)
    # no target code, so no super-ordinate annotation either
    assert len(triples) == 1


def test_split_mapping_pair_enumeration(fixture_scheme):
    records = [
        ChangeRecord(ChangeCategory.SPLIT, codes("11A11"), codes("11A21", "11A22"))
    ]
    triples = _mapping_triples(build_mappings(records, fixture_scheme, OLD_BASE_URI))
    # oracle: exhaustive pair enumeration
    expected = {
        (OLD_BASE_URI + "11A11", fixture_scheme.base_uri + "11A21"),
        (OLD_BASE_URI + "11A11", fixture_scheme.base_uri + "11A22"),
    }
    assert {(t.subject.value, t.object.value) for t in triples} == expected


def test_mapping_count_is_sum_of_products(fixture_scheme):
    rng = random.Random(4)
    pool = ["03B42", "03B44", "03B45", "11A05", "11A25", "11A41", "80M20", "05-11"]
    for _ in range(50):
        n_sources = rng.randint(2, 4)
        n_targets = 1
        records = [
            ChangeRecord(
                ChangeCategory.MERGED,
                codes(*rng.sample(pool, n_sources)),
                codes(*rng.sample(pool, n_targets)),
            ),
            ChangeRecord(
                ChangeCategory.SPLIT,
                codes(rng.choice(pool)),
                codes(*rng.sample(pool, rng.randint(1, 3))),
            ),
        ]
        expected = sum(len(r.sources) * len(r.targets) for r in records)
        triples = _mapping_triples(build_mappings(records, fixture_scheme, OLD_BASE_URI))
        assert len(triples) == expected


def test_mapping_namespaces(fixture_scheme):
    records = parse_changes(load_change_rows("changes_2010_2020.csv"))
    for t in _mapping_triples(build_mappings(records, fixture_scheme, OLD_BASE_URI)):
        assert t.subject.value.startswith(OLD_BASE_URI)
        assert t.object.value.startswith(fixture_scheme.base_uri)


def test_dangling_target_strict(fixture_scheme):
    records = [ChangeRecord(ChangeCategory.NEW, (), codes("99Z99"))]
    with pytest.raises(DanglingTarget):
        build_mappings(records, fixture_scheme, OLD_BASE_URI, strict=True)
    # lenient mode still emits the annotation
    assert build_mappings(records, fixture_scheme, OLD_BASE_URI)


def test_merged_annotation_lists_old_codes(fixture_scheme):
    records = parse_changes([("Merged", "80M22;80M24", "80M20", "")])
    triples = build_mappings(records, fixture_scheme, OLD_BASE_URI)
    notes = [
        t.object.lexical
        for t in triples
        if t.predicate == CHANGE_NOTE
        and t.subject == Iri(fixture_scheme.base_uri + "80M20")
    ]
    assert notes == ["merged from 80M22, 80M24 in msc2020"]


def test_diff_versions(fixture_scheme, old_fixture_scheme):
    diff = diff_versions(old_fixture_scheme, fixture_scheme)
    assert diff.added == {"05-11", "03F45", "11A25", "11A41", "80M20"}
    assert diff.removed == {"03F50", "11A20", "80M22", "80M24", "80M25"}
    assert {code for code, _, _ in diff.relabeled} == {"01-01"}


def test_diff_identical_schemes_is_empty(fixture_scheme):
    diff = diff_versions(fixture_scheme, fixture_scheme)
    assert not diff.added and not diff.removed and not diff.relabeled
    assert reconcile(diff, []) == []


def test_reconcile_exact_cover(fixture_scheme, old_fixture_scheme):
    records = parse_changes(load_change_rows("changes_2010_2020.csv"))
    diff = diff_versions(old_fixture_scheme, fixture_scheme)
    assert reconcile(diff, records) == []


def test_reconcile_uncovered_addition(fixture_scheme, old_fixture_scheme):
    diff = diff_versions(old_fixture_scheme, fixture_scheme)
    discrepancies = reconcile(diff, [])
    # oracle: plain set difference
    assert {d.code for d in discrepancies if d.kind == "uncovered-addition"} == diff.added
    assert {d.code for d in discrepancies if d.kind == "uncovered-removal"} == diff.removed


def test_reconcile_unknown_code(fixture_scheme, old_fixture_scheme):
    records = parse_changes(load_change_rows("changes_2010_2020.csv"))
    records = records + [ChangeRecord(ChangeCategory.NEW, (), codes("97Z99"))]
    diff = diff_versions(old_fixture_scheme, fixture_scheme)
    discrepancies = reconcile(diff, records)
    kinds = {(d.kind, d.code) for d in discrepancies}
    assert ("unknown-code", "97Z99") in kinds

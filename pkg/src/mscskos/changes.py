"""Editorial change records between two releases, mappings, and diffing.

The change table assigns every edit to one of five categories (split,
new, moved, merged, deleted) with fixed source/target arities.  Each
(source, target) pair becomes a skos:mappingRelation triple between the
old and new namespaces; change categories and their visibility on the
super-ordinate class are recorded as skos:changeNote annotations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .codes import MscCode, canonical_string, parent_code, parse_code
from .rdf import Iri, Literal, SKOS_CHANGE_NOTE, SKOS_MAPPING_RELATION, Triple
from .scheme import ConceptScheme


class ChangeCategory(Enum):
    SPLIT = "split"
    NEW = "new"
    MOVED = "moved"
    MERGED = "merged"
    DELETED = "deleted"


class UnknownCategory(ValueError):
    pass


class ArityViolation(ValueError):
    pass


class DanglingTarget(ValueError):
    """A change record's target is missing from the new scheme (strict mode)."""


# (min sources, max sources, min targets, max targets); None = unbounded.
_ARITIES: dict[ChangeCategory, tuple[int, int | None, int, int | None]] = {
    ChangeCategory.SPLIT: (1, 1, 1, None),
    ChangeCategory.NEW: (0, 0, 1, 1),
    ChangeCategory.MOVED: (1, 1, 1, 1),
    ChangeCategory.MERGED: (2, None, 1, 1),
    ChangeCategory.DELETED: (1, 1, 0, 0),
}


@dataclass(frozen=True)
class ChangeRecord:
    category: ChangeCategory
    sources: tuple[MscCode, ...]
    targets: tuple[MscCode, ...]
    note: str | None = None


@dataclass
class SchemeDiff:
    """Set-level difference between two releases.

    ``old_codes``/``new_codes`` carry the full code populations so that a
    reconciliation against the editorial change table can also spot
    records citing codes that exist in neither release.
    """

    added: set[str] = field(default_factory=set)
    removed: set[str] = field(default_factory=set)
    relabeled: set[tuple[str, str, str]] = field(default_factory=set)
    old_codes: frozenset[str] = frozenset()
    new_codes: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Discrepancy:
    kind: str  # uncovered-addition | uncovered-removal | unknown-code
    code: str
    message: str


def _check_arity(record: ChangeRecord) -> None:
    min_s, max_s, min_t, max_t = _ARITIES[record.category]
    n_s, n_t = len(record.sources), len(record.targets)
    if n_s < min_s or (max_s is not None and n_s > max_s):
        raise ArityViolation(
            f"{record.category.value} record takes "
            f"{min_s if max_s == min_s else f'{min_s}+'} source code(s), got {n_s}"
        )
    if n_t < min_t or (max_t is not None and n_t > max_t):
        raise ArityViolation(
            f"{record.category.value} record takes "
            f"{min_t if max_t == min_t else f'{min_t}+'} target code(s), got {n_t}"
        )


def _parse_code_list(cell: str) -> tuple[MscCode, ...]:
    return tuple(parse_code(tok) for tok in cell.split(";") if tok.strip())


def parse_changes(rows: Iterable[tuple[str, str, str, str]]) -> list[ChangeRecord]:
    """Turn (category, sources, targets, note) rows into validated records.

    Code lists are ``;``-separated.  Raises :class:`UnknownCategory` or
    :class:`ArityViolation` on bad rows.
    """
    records = []
    for category_text, sources_cell, targets_cell, note in rows:
        name = category_text.strip().lower()
        try:
            category = ChangeCategory(name)
        except ValueError:
            raise UnknownCategory(f"unknown change category: {category_text!r}") from None
        record = ChangeRecord(
            category=category,
            sources=_parse_code_list(sources_cell),
            targets=_parse_code_list(targets_cell),
            note=note.strip() or None,
        )
        _check_arity(record)
        records.append(record)
    return records


def _category_note(record: ChangeRecord, version_id: str) -> str:
    sources = ", ".join(canonical_string(c) for c in record.sources)
    if record.category is ChangeCategory.NEW:
        text = f"newly introduced in {version_id}"
    elif record.category is ChangeCategory.SPLIT:
        text = f"split from {sources} in {version_id}"
    elif record.category is ChangeCategory.MOVED:
        text = f"moved from {sources} in {version_id}"
    elif record.category is ChangeCategory.MERGED:
        text = f"merged from {sources} in {version_id}"
    else:
        text = f"deleted in {version_id}"
    if record.note:
        text += f" ({record.note})"
    return text


_SUPER_PHRASES = {
    ChangeCategory.NEW: "newly introduced",
    ChangeCategory.SPLIT: "introduced by split of",
    ChangeCategory.MOVED: "introduced by move of",
    ChangeCategory.MERGED: "introduced by merge of",
}


def _super_note(record: ChangeRecord, children: list[str], version_id: str) -> str:
    noun = "subordinate class" if len(children) == 1 else "subordinate classes"
    phrase = _SUPER_PHRASES[record.category]
    text = f"{noun} {', '.join(children)} {phrase}"
    if record.sources:
        text += " " + ", ".join(canonical_string(c) for c in record.sources)
    return f"{text} in {version_id}"


def build_mappings(
    changes: Iterable[ChangeRecord],
    new_scheme: ConceptScheme,
    old_base_uri: str,
    strict: bool = False,
) -> list[Triple]:
    """Emit mapping and change-annotation triples for the change table.

    Every (source, target) pair yields one skos:mappingRelation triple
    from the old namespace into the new scheme.  Each record annotates
    the new code(s) (the old one for deletions) with its category, and
    the parent of every affected new code gets a note making the change
    visible at the super-ordinate level.
    """
    if not old_base_uri.endswith("/"):
        old_base_uri += "/"
    triples: list[Triple] = []
    for record in changes:
        if strict:
            for target in record.targets:
                if canonical_string(target) not in new_scheme.concepts:
                    raise DanglingTarget(
                        f"change record target {canonical_string(target)} "
                        "is not in the new scheme"
                    )
        for source in record.sources:
            old_uri = Iri(old_base_uri + canonical_string(source))
            for target in record.targets:
                triples.append(
                    Triple(
                        old_uri,
                        SKOS_MAPPING_RELATION,
                        Iri(new_scheme.concept_uri(target)),
                    )
                )
        note_text = Literal(_category_note(record, new_scheme.version_id))
        if record.category is ChangeCategory.DELETED:
            for source in record.sources:
                triples.append(
                    Triple(
                        Iri(old_base_uri + canonical_string(source)),
                        SKOS_CHANGE_NOTE,
                        note_text,
                    )
                )
        else:
            for target in record.targets:
                triples.append(
                    Triple(Iri(new_scheme.concept_uri(target)), SKOS_CHANGE_NOTE, note_text)
                )
        by_parent: dict[str, list[str]] = {}
        for target in record.targets:
            parent = parent_code(target)
            if parent is not None:
                by_parent.setdefault(canonical_string(parent), []).append(
                    canonical_string(target)
                )
        for parent_canonical in sorted(by_parent):
            triples.append(
                Triple(
                    Iri(new_scheme.base_uri + parent_canonical),
                    SKOS_CHANGE_NOTE,
                    Literal(
                        _super_note(
                            record, by_parent[parent_canonical], new_scheme.version_id
                        )
                    ),
                )
            )
    return triples


def diff_versions(old: ConceptScheme, new: ConceptScheme) -> SchemeDiff:
    """Compute added/removed codes and label revisions between releases."""
    old_codes = frozenset(old.concepts)
    new_codes = frozenset(new.concepts)
    relabeled = set()
    for code in old_codes & new_codes:
        old_label = old.concepts[code].pref_labels.get("en", "")
        new_label = new.concepts[code].pref_labels.get("en", "")
        if old_label != new_label:
            relabeled.add((code, old_label, new_label))
    return SchemeDiff(
        added=set(new_codes - old_codes),
        removed=set(old_codes - new_codes),
        relabeled=relabeled,
        old_codes=old_codes,
        new_codes=new_codes,
    )


_ADDITION_CATEGORIES = {
    ChangeCategory.NEW,
    ChangeCategory.SPLIT,
    ChangeCategory.MOVED,
    ChangeCategory.MERGED,
}
_REMOVAL_CATEGORIES = {
    ChangeCategory.DELETED,
    ChangeCategory.MOVED,
    ChangeCategory.MERGED,
    ChangeCategory.SPLIT,
}


def reconcile(diff: SchemeDiff, changes: Iterable[ChangeRecord]) -> list[Discrepancy]:
    """Cross-check the computed diff against the editorial change table."""
    changes = list(changes)
    covered_added = {
        canonical_string(t)
        for r in changes
        if r.category in _ADDITION_CATEGORIES
        for t in r.targets
    }
    covered_removed = {
        canonical_string(s)
        for r in changes
        if r.category in _REMOVAL_CATEGORIES
        for s in r.sources
    }
    discrepancies = [
        Discrepancy(
            "uncovered-addition", code, f"{code} added but no change record covers it"
        )
        for code in sorted(diff.added - covered_added)
    ]
    discrepancies.extend(
        Discrepancy(
            "uncovered-removal", code, f"{code} removed but no change record covers it"
        )
        for code in sorted(diff.removed - covered_removed)
    )
    known = diff.old_codes | diff.new_codes
    cited = sorted(
        {
            canonical_string(c)
            for r in changes
            for c in (*r.sources, *r.targets)
        }
    )
    discrepancies.extend(
        Discrepancy(
            "unknown-code", code, f"change record cites {code}, present in neither release"
        )
        for code in cited
        if code not in known
    )
    return discrepancies

"""Command-line front end: build, validate, diff, stats, extract.

Input tables are UTF-8 CSV with a header row:

    concepts:      code,text,description
    translations:  code,lang,label
    changes:       category,sources,targets,note   (';'-separated code lists)

Data goes to stdout or the --out file; diagnostics (including the build's
validation report) go to stderr.  Exit status: 0 ok, 1 validation errors
in strict mode, 2 unusable input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .annotations import Directive, DirectiveKind
from .changes import (
    ArityViolation,
    DanglingTarget,
    UnknownCategory,
    build_mappings,
    diff_versions,
    parse_changes,
    reconcile,
)
from .codes import Level, MalformedCode, canonical_string
from .rdf import DEFAULT_PREFIXES, SKOS
from .scheme import (
    BuildConfig,
    ConceptScheme,
    DEFAULT_COLLECTION_SPECS,
    DuplicateCode,
    build_scheme,
)
from .triples import scheme_to_triples
from .turtle import UnprefixableIri, emit_turtle
from .validator import render_report, report_to_dict, validate_scheme

_INPUT_ERRORS = (
    MalformedCode,
    DuplicateCode,
    UnknownCategory,
    ArityViolation,
    DanglingTarget,
    UnprefixableIri,
    OSError,
    ValueError,
    KeyError,
)

_PLACEHOLDER_LICENSE = "urn:mscskos:unspecified-license"


def _read_table(path: str, columns: tuple[str, ...]) -> list[tuple[str, ...]]:
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        header = reader.fieldnames or []
        missing = [c for c in columns if c not in header]
        if missing:
            raise ValueError(f"{path}: missing column(s) {', '.join(missing)}")
        rows = [tuple((row.get(c) or "").strip() for c in columns) for row in reader]
    if not rows:
        raise ValueError(f"{path}: no data rows")
    return rows


def _load_config_file(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: config file must hold a JSON object")
    return data


def _build_config(args: argparse.Namespace, require_license: bool) -> BuildConfig:
    """Resolve settings: flags override the config file, which overrides env."""
    file_cfg = _load_config_file(getattr(args, "config", None))

    def pick(flag: str, key: str, default=None):
        value = getattr(args, flag, None)
        if value is not None:
            return value
        return file_cfg.get(key, default)

    base_uri = pick("base_uri", "base_uri") or os.environ.get("MSC_SKOS_BASE_URI")
    version_id = pick("version_id", "version_id", "msc2020")
    license_iri = pick("license", "license")
    if license_iri is None:
        if require_license:
            raise ValueError("a license IRI is required (--license or config file)")
        license_iri = _PLACEHOLDER_LICENSE
    title = pick("title", "title") or f"Mathematics Subject Classification ({version_id})"
    creators = pick("creators", "creators", [])
    if isinstance(creators, str):
        creators = [c.strip() for c in creators.split(";") if c.strip()]
    collections = file_cfg.get("collections")
    if collections is None:
        specs = DEFAULT_COLLECTION_SPECS
    else:
        specs = tuple((item["name"], item["suffix"]) for item in collections)
    return BuildConfig(
        version_id=version_id,
        license_iri=license_iri,
        title=title,
        base_uri=base_uri,
        creators=tuple(creators),
        issued=pick("issued", "issued"),
        collection_specs=specs,
    )


def _load_scheme(args: argparse.Namespace, require_license: bool) -> ConceptScheme:
    config = _build_config(args, require_license=require_license)
    rows = _read_table(args.concepts, ("code", "text", "description"))
    translations = (
        _read_table(args.translations, ("code", "lang", "label"))
        if getattr(args, "translations", None)
        else ()
    )
    return build_scheme(rows, translations, config)


def _prefixes_for(scheme: ConceptScheme) -> dict[str, str]:
    prefixes = dict(DEFAULT_PREFIXES)
    prefixes["msc"] = scheme.base_uri
    return prefixes


def _render_directive(directive: Directive) -> str:
    codes = ", ".join(canonical_string(t) for t in directive.targets)
    if directive.kind is DirectiveKind.CONDITIONAL:
        inner = directive.inner.value if directive.inner else "see"
        return f"{directive.scope}, {inner} {codes}"
    return f"{directive.kind.value} {codes}"


def cmd_build(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args, require_license=True)
    report = validate_scheme(scheme, strict=args.strict)
    sys.stderr.write(render_report(report))
    if args.strict and not report.ok:
        sys.stderr.write("build aborted: validation errors in strict mode\n")
        return 1
    out = Path(args.out)
    out.write_bytes(emit_turtle(scheme_to_triples(scheme), _prefixes_for(scheme)))
    if args.changes:
        if not args.old_base_uri:
            raise ValueError("--old-base-uri is required when --changes is given")
        records = parse_changes(_read_table(args.changes, ("category", "sources", "targets", "note")))
        mapping_triples = build_mappings(
            records, scheme, args.old_base_uri, strict=args.strict
        )
        mappings_path = out.with_suffix(".mappings.ttl")
        prefixes = {"skos": SKOS}
        mappings_path.write_bytes(emit_turtle(mapping_triples, prefixes))
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args, require_license=False)
    report = validate_scheme(scheme, strict=args.strict)
    text = render_report(report)
    if args.out:
        Path(args.out).write_text(
            json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n",
            encoding="utf-8",
        )
    sys.stdout.write(text)
    return 1 if (args.strict and not report.ok) else 0


def cmd_stats(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args, require_license=False)
    report = validate_scheme(scheme)
    s = report.stats
    second = s.count_by_level[Level.SECOND_FACET] + s.count_by_level[Level.SECOND_SUBJECT]
    lines = [
        f"top-level classes: {s.count_by_level[Level.TOP_LEVEL]}",
        f"second-level classes: {second}",
        f"third-level classes: {s.count_by_level[Level.THIRD_LEVEL]}",
        f"total: {s.concept_total}",
    ]
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_diff(args: argparse.Namespace) -> int:
    new_scheme = _load_scheme(args, require_license=False)
    old_args = argparse.Namespace(**vars(args))
    old_args.concepts = args.old_concepts
    old_args.translations = None
    old_args.version_id = getattr(args, "old_version_id", None) or "old"
    old_scheme = _load_scheme(old_args, require_license=False)

    diff = diff_versions(old_scheme, new_scheme)
    out = io.StringIO()
    out.write("added: " + (", ".join(sorted(diff.added)) or "none") + "\n")
    out.write("removed: " + (", ".join(sorted(diff.removed)) or "none") + "\n")
    relabeled = sorted(diff.relabeled)
    out.write("relabeled: " + (", ".join(code for code, _, _ in relabeled) or "none") + "\n")
    for code, old_label, new_label in relabeled:
        out.write(f"  {code}: {old_label!r} -> {new_label!r}\n")
    if args.changes:
        records = parse_changes(
            _read_table(args.changes, ("category", "sources", "targets", "note"))
        )
        discrepancies = reconcile(diff, records)
        out.write(f"discrepancies: {len(discrepancies)}\n")
        for d in discrepancies:
            out.write(f"  {d.kind} {d.code}: {d.message}\n")
    sys.stdout.write(out.getvalue())
    return 0


def cmd_extract(args: argparse.Namespace) -> int:
    scheme = _load_scheme(args, require_license=False)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["code", "label", "directives"])
    for concept in scheme.sorted_concepts():
        writer.writerow(
            [
                canonical_string(concept.code),
                concept.pref_labels.get("en", ""),
                " | ".join(_render_directive(d) for d in concept.directives),
            ]
        )
    if args.out:
        Path(args.out).write_text(buffer.getvalue(), encoding="utf-8")
    else:
        sys.stdout.write(buffer.getvalue())
    return 0


def _add_common(parser: argparse.ArgumentParser, *, concepts_required: bool = True) -> None:
    parser.add_argument("--concepts", required=concepts_required, help="concepts CSV")
    parser.add_argument("--translations", help="translations CSV")
    parser.add_argument("--base-uri", dest="base_uri", help="base URI for minted concept URIs")
    parser.add_argument("--version-id", dest="version_id", help="release identifier, e.g. msc2020")
    parser.add_argument("--license", help="license IRI for the scheme metadata")
    parser.add_argument("--title", help="scheme title")
    parser.add_argument("--creators", help="';'-separated creator names")
    parser.add_argument("--issued", help="release date, YYYY-MM-DD")
    parser.add_argument("--config", help="JSON config file; flags override its values")
    parser.add_argument("--strict", action="store_true", help="treat warnings as errors")


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msc-skos",
        description="Compile MSC release tables into SKOS/Turtle Linked Open Data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build and serialize a release")
    _add_common(p_build)
    p_build.add_argument("--changes", help="change table CSV (emits a mappings file)")
    p_build.add_argument("--old-base-uri", dest="old_base_uri", help="base URI of the previous release")
    p_build.add_argument("--out", required=True, help="output Turtle path")
    p_build.set_defaults(func=cmd_build)

    p_validate = sub.add_parser("validate", help="run checks and print the report")
    _add_common(p_validate)
    p_validate.add_argument("--out", help="write the machine-readable report here")
    p_validate.set_defaults(func=cmd_validate)

    p_diff = sub.add_parser("diff", help="diff two releases and reconcile the change table")
    _add_common(p_diff)
    p_diff.add_argument("--old-concepts", dest="old_concepts", required=True, help="previous release concepts CSV")
    p_diff.add_argument("--old-base-uri", dest="old_base_uri", help="base URI of the previous release")
    p_diff.add_argument("--changes", help="change table CSV to reconcile against")
    p_diff.set_defaults(func=cmd_diff)

    p_stats = sub.add_parser("stats", help="print level counts")
    _add_common(p_stats)
    p_stats.set_defaults(func=cmd_stats)

    p_extract = sub.add_parser("extract", help="dump code, label, directives as CSV")
    _add_common(p_extract)
    p_extract.add_argument("--out", help="output CSV path (default stdout)")
    p_extract.set_defaults(func=cmd_extract)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

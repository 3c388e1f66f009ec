"""Splits descriptive text into a clean label plus cross-reference directives.

Description cells mix a label with bracketed reference groups, e.g.::

    Modal logic (including the logic of norms) {For knowledge and belief,
    see 03B42; for temporal logic, see 03B44; for provability logic, see
    also 03F45}

Groups in square brackets or braces are parsed into directives.  The verb
decides the directive kind, not the bracket shape: a clause that opens
with "for <scope>," becomes a conditional clause, otherwise "see" /
"see also" / "see mainly" select the plain kinds.  A group that uses an
unknown verb or cites an unparseable code is kept verbatim as remainder
rather than being silently dropped or half-parsed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .codes import MalformedCode, MscCode, parse_code


class DirectiveKind(Enum):
    SEE_ALSO = "see also"
    SEE_MAINLY = "see mainly"
    SEE_FOR = "see"
    CONDITIONAL = "conditional"


class InnerKind(Enum):
    """Verb used inside a conditional clause."""

    SEE = "see"
    SEE_ALSO = "see also"
    SEE_MAINLY = "see mainly"


class ScopeMarker(Enum):
    """Usage constraint signalled by a label's parenthetical text."""

    NOT_USE = "do not use"
    MUST_USE = "must"
    USE = "use"


@dataclass(frozen=True)
class Directive:
    kind: DirectiveKind
    targets: tuple[MscCode, ...]
    scope: str | None = None
    inner: InnerKind | None = None


@dataclass
class ParsedDescription:
    clean_label: str
    directives: list[Directive] = field(default_factory=list)
    remainder: str | None = None
    warnings: list[str] = field(default_factory=list)


_GROUP_RE = re.compile(r"\{[^{}]*\}|\[[^\[\]]*\]")
_PAREN_RE = re.compile(r"\(([^()]*)\)")

_CONDITIONAL_RE = re.compile(
    r"^(?P<scope>for\s.+?),\s*see(?:\s+(?P<mod>also|mainly))?\s+(?P<codes>.+)$",
    re.IGNORECASE,
)
_PLAIN_RE = re.compile(
    r"^see(?:\s+(?P<mod>also|mainly))?\s+(?P<codes>.+)$", re.IGNORECASE
)

_PLAIN_KINDS = {
    None: DirectiveKind.SEE_FOR,
    "also": DirectiveKind.SEE_ALSO,
    "mainly": DirectiveKind.SEE_MAINLY,
}
_INNER_KINDS = {
    None: InnerKind.SEE,
    "also": InnerKind.SEE_ALSO,
    "mainly": InnerKind.SEE_MAINLY,
}


def _parse_targets(codes_text: str) -> tuple[MscCode, ...] | None:
    targets = []
    for token in codes_text.split(","):
        token = token.strip()
        if not token:
            return None
        try:
            targets.append(parse_code(token))
        except MalformedCode:
            return None
    return tuple(targets) if targets else None


def _parse_group(interior: str) -> list[Directive] | None:
    """Parse one bracket group's interior; None demotes the group."""
    clauses = [c.strip() for c in interior.split(";")]
    clauses = [c for c in clauses if c]
    if not clauses:
        return None
    directives: list[Directive] = []
    for clause in clauses:
        if m := _CONDITIONAL_RE.match(clause):
            targets = _parse_targets(m.group("codes"))
            if targets is None:
                return None
            mod = m.group("mod")
            directives.append(
                Directive(
                    kind=DirectiveKind.CONDITIONAL,
                    targets=targets,
                    scope=m.group("scope").strip(),
                    inner=_INNER_KINDS[mod.lower() if mod else None],
                )
            )
        elif m := _PLAIN_RE.match(clause):
            targets = _parse_targets(m.group("codes"))
            if targets is None:
                return None
            mod = m.group("mod")
            directives.append(
                Directive(kind=_PLAIN_KINDS[mod.lower() if mod else None], targets=targets)
            )
        else:
            return None
    return directives


def parse_description(text: str) -> ParsedDescription:
    """Split a description cell into clean label, directives, remainder."""
    directives: list[Directive] = []
    failed_groups: list[str] = []
    warnings: list[str] = []

    for group in _GROUP_RE.findall(text):
        parsed = _parse_group(group[1:-1])
        if parsed is None:
            failed_groups.append(group)
            warnings.append(f"unparsed group: {group}")
        else:
            directives.extend(parsed)

    clean_label = " ".join(_GROUP_RE.sub(" ", text).split())
    remainder = " ".join(failed_groups) if failed_groups else None
    return ParsedDescription(
        clean_label=clean_label,
        directives=directives,
        remainder=remainder,
        warnings=warnings,
    )


def _marker_of(parenthetical: str) -> ScopeMarker | None:
    if re.search(r"\bdo not use\b", parenthetical, re.IGNORECASE):
        return ScopeMarker.NOT_USE
    if re.search(r"\bmust\b", parenthetical, re.IGNORECASE):
        return ScopeMarker.MUST_USE
    if re.search(r"\buse\b", parenthetical, re.IGNORECASE):
        return ScopeMarker.USE
    return None


def find_marker_parenthetical(label: str) -> tuple[ScopeMarker, str] | None:
    """Return the strongest usage marker in the label plus its source text.

    "do not use" outranks "must" outranks "use" (the weaker phrases are
    substrings of the stronger ones).  The returned text is the winning
    parenthetical group verbatim, parentheses included.
    """
    found: dict[ScopeMarker, str] = {}
    for m in _PAREN_RE.finditer(label):
        marker = _marker_of(m.group(1))
        if marker is not None and marker not in found:
            found[marker] = m.group(0)
    for marker in (ScopeMarker.NOT_USE, ScopeMarker.MUST_USE, ScopeMarker.USE):
        if marker in found:
            return marker, found[marker]
    return None


def extract_label_scope_marker(label: str) -> ScopeMarker | None:
    """Return the usage marker signalled by the label's parentheses, if any."""
    hit = find_marker_parenthetical(label)
    return hit[0] if hit else None

"""MSC code grammar: parsing, level classification, parent derivation.

A classification code is five characters in one of four shapes:

    68-XX   top level (two digits, literal ``-XX``)
    11-06   second-level facet (two digits, hyphen, two digits)
    11Axx   second-level subject (two digits, uppercase letter, literal ``xx``)
    03B25   third level (two digits, uppercase letter, two digits)

A bare two-digit string such as ``68`` is the customary short form of a
top-level code and normalizes to ``68-XX``.  The literal ``XX``/``xx``
tails are accepted case-insensitively and re-canonicalized; everything
else is case-sensitive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class Level(Enum):
    TOP_LEVEL = "top"
    SECOND_FACET = "facet"
    SECOND_SUBJECT = "subject"
    THIRD_LEVEL = "third"


class MalformedCode(ValueError):
    """Raised when a string matches none of the four code shapes."""


_BARE_RE = re.compile(r"^(\d{2})$")
_TOP_RE = re.compile(r"^(\d{2})-[Xx]{2}$")
_FACET_RE = re.compile(r"^(\d{2})-(\d{2})$")
_SUBJECT_RE = re.compile(r"^(\d{2})([A-Z])[Xx]{2}$")
_THIRD_RE = re.compile(r"^(\d{2})([A-Z])(\d{2})$")


@dataclass(frozen=True)
class MscCode:
    """A classified code.

    ``raw`` keeps the input spelling for diagnostics and is excluded from
    equality, so ``parse_code("68") == parse_code("68-XX")``.
    """

    raw: str = field(compare=False)
    major: str
    level: Level
    letter: str | None = None
    minor: str | None = None


def parse_code(text: str) -> MscCode:
    """Parse ``text`` into a classified :class:`MscCode`.

    Surrounding whitespace is tolerated; anything else that deviates from
    the four shapes (or the bare two-digit short form) raises
    :class:`MalformedCode`.
    """
    stripped = text.strip()
    if not stripped:
        raise MalformedCode("empty code")
    if m := _BARE_RE.match(stripped):
        return MscCode(raw=stripped, major=m.group(1), level=Level.TOP_LEVEL)
    if m := _TOP_RE.match(stripped):
        return MscCode(raw=stripped, major=m.group(1), level=Level.TOP_LEVEL)
    if m := _FACET_RE.match(stripped):
        return MscCode(
            raw=stripped, major=m.group(1), level=Level.SECOND_FACET, minor=m.group(2)
        )
    if m := _SUBJECT_RE.match(stripped):
        return MscCode(
            raw=stripped, major=m.group(1), level=Level.SECOND_SUBJECT, letter=m.group(2)
        )
    if m := _THIRD_RE.match(stripped):
        return MscCode(
            raw=stripped,
            major=m.group(1),
            level=Level.THIRD_LEVEL,
            letter=m.group(2),
            minor=m.group(3),
        )
    raise MalformedCode(f"not a valid MSC code: {text!r}")


def canonical_string(code: MscCode) -> str:
    """Return the five-character canonical spelling of ``code``."""
    if code.level is Level.TOP_LEVEL:
        return f"{code.major}-XX"
    if code.level is Level.SECOND_FACET:
        return f"{code.major}-{code.minor}"
    if code.level is Level.SECOND_SUBJECT:
        return f"{code.major}{code.letter}xx"
    return f"{code.major}{code.letter}{code.minor}"


def parent_code(code: MscCode) -> MscCode | None:
    """Return the immediate super-ordinate code, or None for a top level.

    Third level -> second-level subject; both second-level kinds -> top
    level.
    """
    if code.level is Level.THIRD_LEVEL:
        parent = MscCode(
            raw="", major=code.major, level=Level.SECOND_SUBJECT, letter=code.letter
        )
    elif code.level in (Level.SECOND_SUBJECT, Level.SECOND_FACET):
        parent = MscCode(raw="", major=code.major, level=Level.TOP_LEVEL)
    else:
        return None
    return MscCode(
        raw=canonical_string(parent),
        major=parent.major,
        level=parent.level,
        letter=parent.letter,
        minor=parent.minor,
    )


def facet_suffix(code: MscCode) -> str | None:
    """Return the ``-DD`` suffix of a second-level facet code, else None."""
    if code.level is Level.SECOND_FACET:
        return f"-{code.minor}"
    return None

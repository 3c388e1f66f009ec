"""Deterministic Turtle writer and a small reader used to check round trips.

The writer sorts subjects lexicographically, emits predicates in a fixed
order chosen to keep release-to-release diffs readable, and escapes
string literals per the Turtle rules, so equal input always yields
byte-identical output.

The reader covers only the subset the writer produces plus hand-written
test data: ``@prefix`` directives, ``<...>`` IRIs, prefixed names, bare
``_:label`` blank nodes, string literals with optional language tag or
``^^`` datatype, predicate lists with ``;`` and object lists with ``,``,
and ``#`` comments.  No blank-node property lists, no collection sugar,
no multi-line strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .rdf import (
    Blank,
    DCT_CREATOR,
    DCT_ISSUED,
    DCT_LICENSE,
    DCT_TITLE,
    Iri,
    Literal,
    MSCV_SCOPE,
    MSCV_SEE_ALSO,
    MSCV_SEE_CONDITIONALLY,
    MSCV_SEE_FOR,
    MSCV_SEE_MAINLY,
    Node,
    OWL_VERSION_INFO,
    RDF,
    RDF_OBJECT,
    RDF_PREDICATE,
    RDF_SUBJECT,
    RDF_TYPE,
    SKOS_BROADER,
    SKOS_CHANGE_NOTE,
    SKOS_IN_SCHEME,
    SKOS_MAPPING_RELATION,
    SKOS_MEMBER,
    SKOS_NOTATION,
    SKOS_PREF_LABEL,
    SKOS_SCOPE_NOTE,
    Triple,
)


class UnprefixableIri(ValueError):
    """Raised when a relative IRI reaches the writer."""


class TurtleSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


# Predicates are written in this order within a subject block; anything
# not listed follows, sorted lexicographically.
_PREDICATE_ORDER = [
    RDF_TYPE.value,
    SKOS_IN_SCHEME.value,
    SKOS_NOTATION.value,
    SKOS_PREF_LABEL.value,
    SKOS_BROADER.value,
    MSCV_SEE_MAINLY.value,
    MSCV_SEE_ALSO.value,
    MSCV_SEE_FOR.value,
    MSCV_SEE_CONDITIONALLY.value,
    SKOS_SCOPE_NOTE.value,
    RDF_OBJECT.value,
    RDF_PREDICATE.value,
    RDF_SUBJECT.value,
    MSCV_SCOPE.value,
    SKOS_MEMBER.value,
    SKOS_MAPPING_RELATION.value,
    SKOS_CHANGE_NOTE.value,
    DCT_TITLE.value,
    DCT_CREATOR.value,
    DCT_LICENSE.value,
    DCT_ISSUED.value,
    OWL_VERSION_INFO.value,
]
_PREDICATE_RANK = {iri: i for i, iri in enumerate(_PREDICATE_ORDER)}

_ABSOLUTE_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
# Conservative prefixed-name local part: digit-leading locals (03B45) are
# written as full IRIs instead.
_SAFE_LOCAL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")

_ESCAPES = [("\\", "\\\\"), ('"', '\\"'), ("\n", "\\n"), ("\r", "\\r"), ("\t", "\\t")]


def _escape(text: str) -> str:
    for raw, escaped in _ESCAPES:
        text = text.replace(raw, escaped)
    return text


def _unescape(text: str, line: int, col: int) -> str:
    out: list[str] = []
    i = 0
    mapping = {"\\": "\\", '"': '"', "n": "\n", "r": "\r", "t": "\t"}
    while i < len(text):
        c = text[i]
        if c == "\\":
            if i + 1 >= len(text) or text[i + 1] not in mapping:
                raise TurtleSyntaxError("unsupported string escape", line, col)
            out.append(mapping[text[i + 1]])
            i += 2
        else:
            out.append(c)
            i += 1
    return "".join(out)


def _render_iri(iri: str, prefixes: dict[str, str]) -> str:
    if not _ABSOLUTE_IRI_RE.match(iri):
        raise UnprefixableIri(f"relative IRI: {iri!r}")
    best: tuple[str, str] | None = None
    for prefix, namespace in prefixes.items():
        if iri.startswith(namespace) and (best is None or len(namespace) > len(best[1])):
            local = iri[len(namespace):]
            if _SAFE_LOCAL_RE.match(local):
                best = (prefix, namespace)
    if best is not None:
        return f"{best[0]}:{iri[len(best[1]):]}"
    return f"<{iri}>"


def _render_node(node: Node, prefixes: dict[str, str]) -> str:
    if isinstance(node, Iri):
        return _render_iri(node.value, prefixes)
    if isinstance(node, Blank):
        return f"_:{node.label}"
    rendered = f'"{_escape(node.lexical)}"'
    if node.lang is not None:
        return f"{rendered}@{node.lang}"
    if node.datatype is not None:
        return f"{rendered}^^{_render_iri(node.datatype, prefixes)}"
    return rendered


def _predicate_key(iri: str) -> tuple[int, str]:
    return (_PREDICATE_RANK.get(iri, len(_PREDICATE_ORDER)), iri)


def _subject_key(node: Iri | Blank) -> tuple[int, str]:
    if isinstance(node, Iri):
        return (0, node.value)
    return (1, node.label)


def emit_turtle(triples: list[Triple], prefixes: dict[str, str]) -> bytes:
    """Serialize ``triples`` to deterministic UTF-8 Turtle bytes."""
    grouped: dict[Iri | Blank, dict[str, list[Node]]] = {}
    for t in triples:
        grouped.setdefault(t.subject, {}).setdefault(t.predicate.value, []).append(
            t.object
        )

    lines = [f"@prefix {p}: <{prefixes[p]}> ." for p in sorted(prefixes)]
    for subject in sorted(grouped, key=_subject_key):
        lines.append("")
        subject_text = _render_node(subject, prefixes)
        parts = []
        for pred_iri in sorted(grouped[subject], key=_predicate_key):
            objects = " , ".join(
                _render_node(o, prefixes) for o in grouped[subject][pred_iri]
            )
            parts.append(f"{_render_iri(pred_iri, prefixes)} {objects}")
        body = " ;\n    ".join(parts)
        lines.append(f"{subject_text} {body} .")
    return ("\n".join(lines) + "\n").encode("utf-8")


@dataclass
class _Token:
    kind: str  # IRIREF PNAME BLANK STRING LANGTAG DTYPE SEMI COMMA DOT PREFIX A
    value: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)

    def error(msg: str) -> TurtleSyntaxError:
        return TurtleSyntaxError(msg, line, col)

    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_line, start_col = line, col
        if c == "<":
            end = text.find(">", i + 1)
            if end == -1:
                raise error("unterminated IRI")
            value = text[i + 1 : end]
            if any(ws in value for ws in " \t\n"):
                raise error("whitespace inside IRI")
            tokens.append(_Token("IRIREF", value, start_line, start_col))
            col += end + 1 - i
            i = end + 1
            continue
        if c == '"':
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == '"':
                    break
                if text[j] == "\n":
                    raise error("newline inside string literal")
                j += 1
            if j >= n or text[j] != '"':
                raise error("unterminated string literal")
            raw = text[i + 1 : j]
            tokens.append(
                _Token("STRING", _unescape(raw, start_line, start_col), start_line, start_col)
            )
            col += j + 1 - i
            i = j + 1
            continue
        if c == "@":
            m = re.match(r"@([A-Za-z][A-Za-z0-9\-]*)", text[i:])
            if not m:
                raise error("bad '@' token")
            word = m.group(1)
            kind = "PREFIX" if word == "prefix" else "LANGTAG"
            tokens.append(_Token(kind, word, start_line, start_col))
            i += m.end()
            col += m.end()
            continue
        if text.startswith("^^", i):
            tokens.append(_Token("DTYPE", "^^", start_line, start_col))
            i += 2
            col += 2
            continue
        if c == ";":
            tokens.append(_Token("SEMI", c, start_line, start_col))
            i += 1
            col += 1
            continue
        if c == ",":
            tokens.append(_Token("COMMA", c, start_line, start_col))
            i += 1
            col += 1
            continue
        if c == ".":
            tokens.append(_Token("DOT", c, start_line, start_col))
            i += 1
            col += 1
            continue
        if text.startswith("_:", i):
            m = re.match(r"_:([A-Za-z0-9_\-]+)", text[i:])
            if not m:
                raise error("bad blank node label")
            tokens.append(_Token("BLANK", m.group(1), start_line, start_col))
            i += m.end()
            col += m.end()
            continue
        m = re.match(
            r"([A-Za-z][A-Za-z0-9\-]*)?:([A-Za-z0-9_](?:[A-Za-z0-9_\-.]*[A-Za-z0-9_\-])?)?",
            text[i:],
        )
        if m and m.group(0) != ":":
            token_text = m.group(0)
            tokens.append(_Token("PNAME", token_text, start_line, start_col))
            i += len(token_text)
            col += len(token_text)
            continue
        if text[i] == "a" and (i + 1 == n or text[i + 1] in " \t\n\r"):
            tokens.append(_Token("A", "a", start_line, start_col))
            i += 1
            col += 1
            continue
        raise error(f"unexpected character {c!r}")
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token]) -> None:
        self.tokens = tokens
        self.pos = 0
        self.prefixes: dict[str, str] = {}

    def peek(self) -> _Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self, expected: str | None = None) -> _Token:
        tok = self.peek()
        if tok is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise TurtleSyntaxError("unexpected end of input", last.line, last.col)
        if expected is not None and tok.kind != expected:
            raise TurtleSyntaxError(
                f"expected {expected}, found {tok.kind} {tok.value!r}", tok.line, tok.col
            )
        self.pos += 1
        return tok

    def expand(self, tok: _Token) -> str:
        prefix, _, local = tok.value.partition(":")
        if prefix not in self.prefixes:
            raise TurtleSyntaxError(f"undeclared prefix {prefix!r}", tok.line, tok.col)
        return self.prefixes[prefix] + local

    def parse_subject(self) -> Iri | Blank:
        tok = self.next()
        if tok.kind == "IRIREF":
            return Iri(tok.value)
        if tok.kind == "PNAME":
            return Iri(self.expand(tok))
        if tok.kind == "BLANK":
            return Blank(tok.value)
        raise TurtleSyntaxError(f"bad subject {tok.value!r}", tok.line, tok.col)

    def parse_predicate(self) -> Iri:
        tok = self.next()
        if tok.kind == "A":
            return Iri(RDF + "type")
        if tok.kind == "IRIREF":
            return Iri(tok.value)
        if tok.kind == "PNAME":
            return Iri(self.expand(tok))
        raise TurtleSyntaxError(f"bad predicate {tok.value!r}", tok.line, tok.col)

    def parse_object(self) -> Node:
        tok = self.next()
        if tok.kind == "IRIREF":
            return Iri(tok.value)
        if tok.kind == "PNAME":
            return Iri(self.expand(tok))
        if tok.kind == "BLANK":
            return Blank(tok.value)
        if tok.kind == "STRING":
            nxt = self.peek()
            if nxt is not None and nxt.kind == "LANGTAG":
                self.next()
                return Literal(tok.value, lang=nxt.value)
            if nxt is not None and nxt.kind == "DTYPE":
                self.next()
                dtype = self.next()
                if dtype.kind == "IRIREF":
                    return Literal(tok.value, datatype=dtype.value)
                if dtype.kind == "PNAME":
                    return Literal(tok.value, datatype=self.expand(dtype))
                raise TurtleSyntaxError("bad datatype", dtype.line, dtype.col)
            return Literal(tok.value)
        raise TurtleSyntaxError(f"bad object {tok.value!r}", tok.line, tok.col)

    def parse_document(self) -> list[Triple]:
        triples: list[Triple] = []
        while self.peek() is not None:
            if self.peek().kind == "PREFIX":
                self.next()
                name_tok = self.next("PNAME")
                if not name_tok.value.endswith(":") or name_tok.value.count(":") != 1:
                    raise TurtleSyntaxError(
                        "bad prefix declaration", name_tok.line, name_tok.col
                    )
                iri_tok = self.next("IRIREF")
                self.next("DOT")
                self.prefixes[name_tok.value[:-1]] = iri_tok.value
                continue
            subject = self.parse_subject()
            while True:
                predicate = self.parse_predicate()
                while True:
                    triples.append(Triple(subject, predicate, self.parse_object()))
                    if self.peek() is not None and self.peek().kind == "COMMA":
                        self.next()
                        continue
                    break
                tok = self.next()
                if tok.kind == "SEMI":
                    # tolerate a trailing ';' before the closing '.'
                    if self.peek() is not None and self.peek().kind == "DOT":
                        self.next()
                        break
                    continue
                if tok.kind == "DOT":
                    break
                raise TurtleSyntaxError(
                    f"expected ';' or '.', found {tok.value!r}", tok.line, tok.col
                )
        return triples


def parse_turtle_subset(data: bytes | str) -> list[Triple]:
    """Parse writer-shaped Turtle back into triples."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    return _Parser(_tokenize(text)).parse_document()

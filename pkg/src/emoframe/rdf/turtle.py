"""Turtle subset reader and Turtle / N-Triples writers.

Supported grammar (everything the bundled assets use)::

    document   := (directive | triples ".")*
    directive  := "@prefix" PNAME_NS IRIREF "." | "PREFIX" PNAME_NS IRIREF
                | "@base" IRIREF "." | "BASE" IRIREF
    triples    := subject verb objects (";" (verb objects)?)*
    subject    := iri | BLANK_NODE_LABEL
    verb       := iri | "a"
    objects    := object ("," object)*
    object     := iri | BLANK_NODE_LABEL | literal
    literal    := string (LANGTAG | "^^" iri)? | integer | decimal | double
                | "true" | "false"

Collections, ``[ ]`` property lists and quoted triples are rejected.
Blank node labels are kept verbatim (they are file-scoped; ``merge`` renames
them on collision).
"""

from __future__ import annotations

import re
from urllib.parse import urljoin, urlsplit

from ..errors import TurtleSyntaxError, UndefinedPrefixError
from .graph import Graph
from .namespaces import RDF
from .terms import (
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    BNode,
    IRI,
    Literal,
)

_PLX = r"%[0-9A-Fa-f]{2}"
_LOCAL = rf"(?:[\w:]|{_PLX})(?:(?:[\w.:-]|{_PLX})*(?:[\w:-]|{_PLX}))?"
_PREFIX = r"(?:[A-Za-z](?:[\w.-]*[\w-])?)?"
_LOCAL_RE = re.compile(_LOCAL)

_TOKEN_SPEC = [
    ("WS", r"[ \t\r\n]+"),
    ("COMMENT", r"#[^\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("LONG_STRING", r'"""(?:[^"\\]|\\.|"(?!""))*"""' + r"|'''(?:[^'\\]|\\.|'(?!''))*'''"),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"' + r"|'(?:[^'\\\n\r]|\\.)*'"),
    ("BLANK", r"_:[\w](?:[\w.-]*[\w-])?"),
    ("PNAME", rf"{_PREFIX}:(?:{_LOCAL})?"),
    ("DIRECTIVE", r"@prefix\b|@base\b"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("DOUBLE", r"[+-]?(?:\d+\.\d*[eE][+-]?\d+|\.\d+[eE][+-]?\d+|\d+[eE][+-]?\d+)"),
    ("DECIMAL", r"[+-]?\d*\.\d+"),
    ("INTEGER", r"[+-]?\d+"),
    ("DTYPE", r"\^\^"),
    ("PUNCT", r"[.;,]"),
    ("UNSUPPORTED", r"[\[\]()]|<<|>>"),
    ("WORD", r"[A-Za-z]+"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{rx})" for name, rx in _TOKEN_SPEC))

_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_ESCAPE_RE = re.compile(r"\\(u[0-9A-Fa-f]{4}|U[0-9A-Fa-f]{8}|.)", re.S)


def is_pn_local(local):
    return local == "" or _LOCAL_RE.fullmatch(local) is not None


def _unescape(body, line, col):
    def repl(m):
        esc = m.group(1)
        if esc[0] in "uU":
            return chr(int(esc[1:], 16))
        if esc in _ESCAPES:
            return _ESCAPES[esc]
        raise TurtleSyntaxError(f"invalid escape \\{esc}", line, col)

    return _ESCAPE_RE.sub(repl, body)


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind, text, line, col):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col

    def __repr__(self):
        return f"{self.kind}({self.text!r})@{self.line}:{self.col}"


def _tokenize(text):
    pos = 0
    line = 1
    line_start = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise TurtleSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        value = m.group()
        if kind == "UNSUPPORTED":
            raise TurtleSyntaxError(f"unsupported Turtle construct {value!r}", line, col)
        if kind not in ("WS", "COMMENT"):
            yield _Token(kind, value, line, col)
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = m.end()
    yield _Token("EOF", "", line, pos - line_start + 1)


class _Parser:
    def __init__(self, text, prefixes=None, base=None):
        self.tokens = list(_tokenize(text))
        self.i = 0
        self.prefixes = dict(prefixes or {})
        self.base = None
        if base is not None:
            self._set_base(base, None)
        self.graph = Graph()

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return TurtleSyntaxError(message, tok.line, tok.col)

    def expect_punct(self, char):
        tok = self.next()
        if tok.kind != "PUNCT" or tok.text != char:
            raise self.error(f"expected {char!r}, found {tok.text or 'end of input'!r}", tok)

    def _set_base(self, iri, tok):
        scheme = urlsplit(iri).scheme
        if not scheme:
            if self.base is None:
                if tok is None:
                    raise TurtleSyntaxError(f"base IRI <{iri}> is not absolute")
                raise self.error(f"base IRI <{iri}> is not absolute", tok)
            iri = urljoin(self.base, iri)
        self.base = iri

    def parse(self):
        while self.peek().kind != "EOF":
            tok = self.peek()
            if tok.kind == "DIRECTIVE" or (tok.kind == "WORD" and tok.text.upper() in ("PREFIX", "BASE")):
                self.directive()
            else:
                self.triples()
                self.expect_punct(".")
        self.graph.prefixes = dict(self.prefixes)
        return self.graph

    def directive(self):
        tok = self.next()
        sparql_style = tok.kind == "WORD"
        word = tok.text.lstrip("@").lower()
        if word == "prefix":
            name = self.next()
            if name.kind != "PNAME" or not name.text.endswith(":"):
                raise self.error("expected a prefix name ending in ':'", name)
            iri_tok = self.next()
            if iri_tok.kind != "IRIREF":
                raise self.error("expected an IRI after the prefix name", iri_tok)
            self.prefixes[name.text[:-1]] = self.resolve(iri_tok)
        else:
            iri_tok = self.next()
            if iri_tok.kind != "IRIREF":
                raise self.error("expected an IRI after @base", iri_tok)
            self._set_base(iri_tok.text[1:-1], iri_tok)
        if not sparql_style:
            self.expect_punct(".")

    def resolve(self, tok):
        raw = _unescape(tok.text[1:-1], tok.line, tok.col)
        if urlsplit(raw).scheme:
            return raw
        if self.base is None:
            raise self.error(f"relative IRI <{raw}> without a base", tok)
        return urljoin(self.base, raw)

    def iri(self, tok):
        if tok.kind == "IRIREF":
            return IRI(self.resolve(tok))
        if tok.kind == "PNAME":
            prefix, _, local = tok.text.partition(":")
            if prefix not in self.prefixes:
                raise UndefinedPrefixError(f"undefined prefix {prefix!r}", tok.line, tok.col)
            return IRI(self.prefixes[prefix] + local)
        raise self.error(f"expected an IRI, found {tok.text or 'end of input'!r}", tok)

    def subject(self):
        tok = self.next()
        if tok.kind == "BLANK":
            return BNode(tok.text[2:])
        return self.iri(tok)

    def verb(self):
        tok = self.next()
        if tok.kind == "WORD" and tok.text == "a":
            return RDF.type
        return self.iri(tok)

    def object(self):
        tok = self.next()
        kind = tok.kind
        if kind == "BLANK":
            return BNode(tok.text[2:])
        if kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        if kind in ("STRING", "LONG_STRING"):
            q = 3 if kind == "LONG_STRING" else 1
            lexical = _unescape(tok.text[q:-q], tok.line, tok.col)
            nxt = self.peek()
            if nxt.kind == "LANGTAG":
                self.next()
                return Literal(lexical, lang=nxt.text[1:].lower())
            if nxt.kind == "DTYPE":
                self.next()
                return Literal(lexical, self.iri(self.next()).value)
            return Literal(lexical)
        if kind == "INTEGER":
            return Literal(tok.text, XSD_INTEGER)
        if kind == "DECIMAL":
            return Literal(tok.text, XSD_DECIMAL)
        if kind == "DOUBLE":
            return Literal(tok.text, XSD_DOUBLE)
        if kind == "WORD" and tok.text in ("true", "false"):
            return Literal(tok.text, XSD_BOOLEAN)
        raise self.error(f"expected an object, found {tok.text or 'end of input'!r}", tok)

    def triples(self):
        s = self.subject()
        while True:
            p = self.verb()
            while True:
                self.graph.add((s, p, self.object()))
                tok = self.peek()
                if tok.kind == "PUNCT" and tok.text == ",":
                    self.next()
                    continue
                break
            tok = self.peek()
            if tok.kind == "PUNCT" and tok.text == ";":
                while self.peek().kind == "PUNCT" and self.peek().text == ";":
                    self.next()
                nxt = self.peek()
                if nxt.kind == "PUNCT" and nxt.text == ".":
                    return
                continue
            return


def parse_turtle(text, prefixes=None, base=None):
    """Parse a Turtle-subset document into a :class:`Graph`.

    ``prefixes`` pre-binds prefixes (the document may rebind them). The
    returned graph keeps the prefix map for round-tripping.
    """
    return _Parser(text, prefixes=prefixes, base=base).parse()


def load_turtle(path, prefixes=None):
    with open(path, encoding="utf-8") as fh:
        return parse_turtle(fh.read(), prefixes=prefixes)


# writers

def _escape(s):
    return (
        s.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def _nt_term(term):
    if isinstance(term, IRI):
        return f"<{term.value}>"
    if isinstance(term, BNode):
        return f"_:{term.label}"
    out = f'"{_escape(term.lexical)}"'
    if term.lang:
        return f"{out}@{term.lang}"
    if term.datatype:
        return f"{out}^^<{term.datatype}>"
    return out


class _Shortener:
    def __init__(self, prefixes):
        # longest namespace first so nested namespaces get the tightest prefix
        self.items = sorted(prefixes.items(), key=lambda kv: (-len(kv[1]), kv[0]))

    def __call__(self, value):
        for prefix, base in self.items:
            if value.startswith(base):
                local = value[len(base):]
                if is_pn_local(local):
                    return f"{prefix}:{local}"
        return f"<{value}>"


def _ttl_term(term, short):
    if isinstance(term, IRI):
        return short(term.value)
    if isinstance(term, BNode):
        return f"_:{term.label}"
    out = f'"{_escape(term.lexical)}"'
    if term.lang:
        return f"{out}@{term.lang}"
    if term.datatype:
        return f"{out}^^{short(term.datatype)}"
    return out


def to_ntriples(graph):
    lines = [f"{_nt_term(s)} {_nt_term(p)} {_nt_term(o)} ." for s, p, o in graph.triples()]
    return "\n".join(lines) + ("\n" if lines else "")


def to_turtle(graph, prefixes=None):
    prefixes = graph.prefixes if prefixes is None else prefixes
    short = _Shortener(prefixes)
    out = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(prefixes.items())]
    current = None
    block = []
    rdf_type = RDF.type

    def flush():
        if not block:
            return
        subj, pairs = block[0], block[1:]
        lines = []
        by_pred = {}
        for p, o in pairs:
            by_pred.setdefault(p, []).append(o)
        for p, objs in by_pred.items():
            verb = "a" if p == rdf_type else _ttl_term(p, short)
            lines.append(f"{verb} " + ", ".join(_ttl_term(o, short) for o in objs))
        out.append("")
        out.append(f"{_ttl_term(subj, short)} " + " ;\n    ".join(lines) + " .")
        block.clear()

    for s, p, o in graph.triples():
        if s != current:
            flush()
            current = s
            block.append(s)
        block.append((p, o))
    flush()
    return "\n".join(out) + ("\n" if out else "")


def serialize(graph, format="turtle"):
    if format == "turtle":
        return to_turtle(graph)
    if format == "ntriples":
        return to_ntriples(graph)
    raise ValueError(f"unknown serialization format {format!r}")


def write_graph(graph, path, format="turtle"):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(graph, format))


__all__ = [
    "parse_turtle",
    "load_turtle",
    "serialize",
    "to_turtle",
    "to_ntriples",
    "write_graph",
    "is_pn_local",
]

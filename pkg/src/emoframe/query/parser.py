"""Parser for the supported SPARQL SELECT subset.

Supported: PREFIX declarations, ``SELECT [DISTINCT] vars|*``, a single
``WHERE { ... }`` group of triple patterns with ``;`` and ``,``
abbreviations, ``p1|p2`` alternation in predicate position, and FILTERs of
the forms ``regex(str(?v), "text"[, "i"])`` and ``?v OP number`` with OP in
``> >= = < <= !=``. Conjunctions inside a FILTER (``&&``) are split into
separate filters.

Prefixes not declared in the query fall back to the bundled manifest, so
queries can be written without a preamble.
"""

from __future__ import annotations

import re

from ..errors import QuerySyntaxError, UnsupportedFeatureError
from ..rdf import namespaces
from ..rdf.namespaces import RDF
from ..rdf.terms import XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER, IRI, Literal
from ..rdf.turtle import _unescape
from .ast import Alternation, CompareFilter, QueryAST, RegexFilter, TriplePattern, Var

UNSUPPORTED_KEYWORDS = {
    "OPTIONAL", "UNION", "MINUS", "GRAPH", "SERVICE", "BIND", "VALUES", "ORDER",
    "GROUP", "HAVING", "LIMIT", "OFFSET", "CONSTRUCT", "ASK", "DESCRIBE", "INSERT",
    "DELETE", "FROM", "EXISTS", "NOT", "REDUCED",
}

_TOKEN_SPEC = [
    ("WS", r"\s+"),
    ("COMMENT", r"#[^\n]*"),
    ("IRIREF", r"<[^<>\"{}|^`\\\x00-\x20]*>"),
    ("VAR", r"[?$][A-Za-z_][\w]*"),
    ("STRING", r'"(?:[^"\\\n\r]|\\.)*"' + r"|'(?:[^'\\\n\r]|\\.)*'"),
    ("PNAME", r"(?:[A-Za-z](?:[\w.-]*[\w-])?)?:(?:[\w:](?:[\w.:-]*[\w:-])?)?"),
    ("LANGTAG", r"@[A-Za-z]+(?:-[A-Za-z0-9]+)*"),
    ("NUMBER", r"[+-]?(?:\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?|\d+(?:[eE][+-]?\d+)?)"),
    ("OP", r">=|<=|!=|&&|\|\||\^\^|[{}()\[\].;,|=<>*+/^!?]"),
    ("WORD", r"[A-Za-z_]\w*"),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{n}>{rx})" for n, rx in _TOKEN_SPEC))

_COMPARATORS = {">", ">=", "=", "<", "<=", "!="}
_FLIP = {">": "<", ">=": "<=", "<": ">", "<=": ">=", "=": "=", "!=": "!="}


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise QuerySyntaxError(f"unexpected character {text[pos]!r} at offset {pos}")
        if m.lastgroup not in ("WS", "COMMENT"):
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("EOF", "", pos))
    return out


class _Parser:
    def __init__(self, text, prefixes):
        self.toks = _tokenize(text)
        self.i = 0
        self.prefixes = dict(prefixes)
        self.declared = {}

    # token helpers

    def peek(self, k=0):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def at_word(self, word):
        kind, text, _ = self.peek()
        return kind == "WORD" and text.upper() == word

    def at_op(self, op):
        kind, text, _ = self.peek()
        return kind == "OP" and text == op

    def expect_op(self, op):
        kind, text, pos = self.next()
        if kind != "OP" or text != op:
            raise QuerySyntaxError(f"expected {op!r} at offset {pos}, found {text or 'end of query'!r}")

    def expect_word(self, word):
        kind, text, pos = self.next()
        if kind != "WORD" or text.upper() != word:
            raise QuerySyntaxError(f"expected {word} at offset {pos}, found {text or 'end of query'!r}")

    def check_unsupported(self):
        kind, text, _ = self.peek()
        if kind == "WORD" and text.upper() in UNSUPPORTED_KEYWORDS:
            raise UnsupportedFeatureError(text.upper())

    # grammar

    def parse(self):
        while self.at_word("PREFIX") or self.at_word("BASE"):
            if self.at_word("BASE"):
                raise UnsupportedFeatureError("BASE")
            self.next()
            kind, text, pos = self.next()
            if kind != "PNAME" or not text.endswith(":"):
                raise QuerySyntaxError(f"expected a prefix name at offset {pos}")
            kind2, iri, pos2 = self.next()
            if kind2 != "IRIREF":
                raise QuerySyntaxError(f"expected an IRI at offset {pos2}")
            self.prefixes[text[:-1]] = iri[1:-1]
            self.declared[text[:-1]] = iri[1:-1]
        self.check_unsupported()
        self.expect_word("SELECT")
        distinct = False
        if self.at_word("DISTINCT"):
            self.next()
            distinct = True
        self.check_unsupported()
        variables = []
        select_all = False
        if self.at_op("*"):
            self.next()
            select_all = True
        else:
            while self.peek()[0] == "VAR":
                name = self.next()[1][1:]
                if name not in variables:
                    variables.append(name)
            if not variables:
                self.check_unsupported()
                raise QuerySyntaxError("SELECT needs at least one variable or *")
        self.check_unsupported()
        if self.at_word("WHERE"):
            self.next()
        patterns, filters = self.group()
        self.check_unsupported()
        if self.peek()[0] != "EOF":
            kind, text, pos = self.peek()
            raise QuerySyntaxError(f"unexpected {text!r} after the WHERE clause at offset {pos}")
        ast = QueryAST(variables, distinct, patterns, filters, self.declared, select_all)
        in_pattern = ast.pattern_variables()
        if select_all:
            ast.variables = list(in_pattern)
        for name in ast.variables:
            if name not in in_pattern:
                raise QuerySyntaxError(f"projected variable ?{name} does not occur in the pattern")
        return ast

    def group(self):
        self.expect_op("{")
        patterns, filters = [], []
        while not self.at_op("}"):
            self.check_unsupported()
            if self.peek()[0] == "EOF":
                raise QuerySyntaxError("unterminated group: missing '}'")
            if self.at_op("{"):
                raise UnsupportedFeatureError("nested group")
            if self.at_word("FILTER"):
                self.next()
                filters.extend(self.filter())
                if self.at_op("."):
                    self.next()
                continue
            self.triples_block(patterns)
            if self.at_op("."):
                self.next()
            elif not self.at_op("}") and not self.at_word("FILTER"):
                kind, text, pos = self.peek()
                raise QuerySyntaxError(f"expected '.' or '}}' at offset {pos}, found {text!r}")
        self.next()
        return patterns, filters

    def triples_block(self, patterns):
        subject = self.term(position="subject")
        while True:
            predicate = self.predicate()
            while True:
                obj = self.term(position="object")
                patterns.append(TriplePattern(subject, predicate, obj))
                if self.at_op(","):
                    self.next()
                    continue
                break
            if self.at_op(";"):
                while self.at_op(";"):
                    self.next()
                if self.at_op(".") or self.at_op("}"):
                    return
                continue
            return

    def predicate(self):
        kind, text, pos = self.peek()
        if kind == "VAR":
            self.next()
            return Var(text[1:])
        first = self.path_iri()
        options = [first]
        while self.at_op("|"):
            self.next()
            options.append(self.path_iri())
        kind, text, pos = self.peek()
        if kind == "OP" and text in ("*", "+", "/", "^"):
            raise UnsupportedFeatureError(f"property path operator {text!r}")
        if kind == "OP" and text == "?":
            raise UnsupportedFeatureError("property path operator '?'")
        if len(options) == 1:
            return first
        return Alternation(tuple(options))

    def path_iri(self):
        kind, text, pos = self.peek()
        if kind == "OP" and text in ("^", "!", "("):
            raise UnsupportedFeatureError(f"property path operator {text!r}")
        if kind == "VAR":
            raise QuerySyntaxError(f"variables are not allowed inside a path (offset {pos})")
        tok = self.next()
        if tok[0] == "WORD" and tok[1] == "a":
            return RDF.type
        return self.iri(tok)

    def iri(self, tok):
        kind, text, pos = tok
        if kind == "IRIREF":
            return IRI(text[1:-1])
        if kind == "PNAME":
            prefix, _, local = text.partition(":")
            if prefix not in self.prefixes:
                raise QuerySyntaxError(f"undefined prefix {prefix!r} at offset {pos}")
            return IRI(self.prefixes[prefix] + local)
        raise QuerySyntaxError(f"expected an IRI at offset {pos}, found {text or 'end of query'!r}")

    def term(self, position):
        tok = self.next()
        kind, text, pos = tok
        if kind == "VAR":
            return Var(text[1:])
        if kind in ("IRIREF", "PNAME"):
            return self.iri(tok)
        if position == "object":
            if kind == "STRING":
                return self.literal_tail(_unescape(text[1:-1], None, pos))
            if kind == "NUMBER":
                return _number_literal(text)
        if kind == "OP" and text in ("[", "("):
            raise UnsupportedFeatureError("blank node / collection syntax")
        raise QuerySyntaxError(f"expected a {position} at offset {pos}, found {text or 'end of query'!r}")

    def literal_tail(self, lexical):
        if self.peek()[0] == "LANGTAG":
            return Literal(lexical, lang=self.next()[1][1:].lower())
        if self.at_op("^^"):
            self.next()
            return Literal(lexical, self.iri(self.next()).value)
        return Literal(lexical)

    def filter(self):
        self.expect_op("(")
        filters = [self.filter_expr()]
        while self.at_op("&&"):
            self.next()
            filters.append(self.filter_expr())
        if self.at_op("||"):
            raise UnsupportedFeatureError("disjunction in FILTER")
        self.expect_op(")")
        return filters

    def filter_expr(self):
        if self.at_op("("):
            self.next()
            inner = self.filter_expr()
            self.expect_op(")")
            return inner
        kind, text, pos = self.peek()
        if kind == "WORD" and text.lower() == "regex":
            self.next()
            self.expect_op("(")
            var = self.regex_target()
            self.expect_op(",")
            pattern = self.string()
            ignore_case = False
            if self.at_op(","):
                self.next()
                flags = self.string()
                if set(flags) - {"i"}:
                    raise UnsupportedFeatureError(f"regex flags {flags!r}")
                ignore_case = "i" in flags
            self.expect_op(")")
            return RegexFilter(var, pattern, ignore_case)
        if kind == "VAR":
            self.next()
            op = self.comparator()
            return CompareFilter(text[1:], op, self.number())
        if kind in ("NUMBER", "STRING"):
            value = self.number()
            op = self.comparator()
            kind2, text2, pos2 = self.next()
            if kind2 != "VAR":
                raise QuerySyntaxError(f"expected a variable at offset {pos2}")
            return CompareFilter(text2[1:], _FLIP[op], value)
        if kind == "WORD":
            raise UnsupportedFeatureError(f"FILTER function {text}()")
        raise QuerySyntaxError(f"unsupported FILTER expression at offset {pos}")

    def regex_target(self):
        kind, text, pos = self.next()
        if kind == "VAR":
            return text[1:]
        if kind == "WORD" and text.lower() == "str":
            self.expect_op("(")
            kind, text, pos = self.next()
            if kind != "VAR":
                raise QuerySyntaxError(f"expected a variable inside str() at offset {pos}")
            self.expect_op(")")
            return text[1:]
        raise QuerySyntaxError(f"expected a variable or str(?v) at offset {pos}")

    def comparator(self):
        kind, text, pos = self.next()
        if kind != "OP" or text not in _COMPARATORS:
            raise QuerySyntaxError(f"expected a comparison operator at offset {pos}")
        return text

    def string(self):
        kind, text, pos = self.next()
        if kind != "STRING":
            raise QuerySyntaxError(f"expected a string at offset {pos}")
        return _unescape(text[1:-1], None, pos)

    def number(self):
        kind, text, pos = self.next()
        if kind == "NUMBER":
            return float(text)
        if kind == "STRING":
            lexical = _unescape(text[1:-1], None, pos)
            if self.at_op("^^"):
                self.next()
                self.iri(self.next())
            try:
                return float(lexical)
            except ValueError:
                raise QuerySyntaxError(f"non-numeric comparison operand {lexical!r}") from None
        raise QuerySyntaxError(f"expected a number at offset {pos}")


def _number_literal(text):
    if re.fullmatch(r"[+-]?\d+", text):
        return Literal(text, XSD_INTEGER)
    if "e" in text.lower():
        return Literal(text, XSD_DOUBLE)
    return Literal(text, XSD_DECIMAL)


def parse_query(text, prefixes=None):
    """Parse query text into a :class:`QueryAST`.

    ``prefixes`` defaults to the bundled manifest; PREFIX lines in the query
    take precedence.
    """
    base = namespaces.manifest() if prefixes is None else prefixes
    return _Parser(text, base).parse()

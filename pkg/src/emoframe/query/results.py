"""Tabular query results and their TSV / JSON renderings."""

from __future__ import annotations

import json

from ..rdf import namespaces
from ..rdf.terms import IRI, BNode, Literal, term_key


def render_term(term, prefixes=None):
    if term is None:
        return ""
    if isinstance(term, IRI):
        return namespaces.shorten(term, prefixes)
    if isinstance(term, BNode):
        return f"_:{term.label}"
    return term.lexical


def _row_key(row):
    return tuple(term_key(t) if t is not None else (-1,) for t in row)


class ResultTable:
    """Ordered header plus rows of terms, one column per header variable.

    Rows are kept in a canonical sort order so renderings are byte-stable.
    With ``distinct=True`` duplicate rows are dropped.
    """

    def __init__(self, header, rows, distinct=False):
        self.header = list(header)
        rows = [tuple(r) for r in rows]
        if distinct:
            rows = list(dict.fromkeys(rows))
        self.rows = sorted(rows, key=_row_key)
        self.distinct = distinct

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        for row in self.rows:
            yield dict(zip(self.header, row))

    def __eq__(self, other):
        if not isinstance(other, ResultTable):
            return NotImplemented
        return self.header == other.header and self.rows == other.rows

    def __repr__(self):
        return f"<ResultTable {self.header} with {len(self.rows)} rows>"

    def column(self, var):
        i = self.header.index(var)
        return [row[i] for row in self.rows]

    def values(self, var):
        """Distinct values of one column."""
        return set(self.column(var))

    def where(self, var, term):
        i = self.header.index(var)
        return ResultTable(self.header, [r for r in self.rows if r[i] == term], self.distinct)

    def project(self, variables, distinct=None):
        idx = [self.header.index(v) for v in variables]
        rows = [tuple(r[i] for i in idx) for r in self.rows]
        return ResultTable(variables, rows, self.distinct if distinct is None else distinct)

    def to_tsv(self, prefixes=None):
        lines = ["\t".join(self.header)]
        for row in self.rows:
            lines.append("\t".join(render_term(t, prefixes) for t in row))
        return "\n".join(lines) + "\n"

    def to_records(self, prefixes=None):
        return [{v: render_term(t, prefixes) for v, t in zip(self.header, row)} for row in self.rows]

    def to_json(self, prefixes=None, **extra):
        payload = {"header": self.header, "count": len(self.rows), "rows": self.to_records(prefixes)}
        payload.update(extra)
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

"""Parsed query structures."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..rdf.terms import IRI, Term


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return "?" + self.name


@dataclass(frozen=True)
class Alternation:
    """``p1|p2|...`` in predicate position; only IRIs are allowed."""

    options: tuple

    def __post_init__(self):
        if len(self.options) < 2 or not all(isinstance(o, IRI) for o in self.options):
            raise ValueError("an alternation path needs two or more IRIs")


PatternTerm = Union[Term, Var]


@dataclass(frozen=True)
class TriplePattern:
    subject: PatternTerm
    predicate: Union[IRI, Var, Alternation]
    object: PatternTerm

    def variables(self):
        return [t.name for t in (self.subject, self.predicate, self.object) if isinstance(t, Var)]


@dataclass(frozen=True)
class RegexFilter:
    var: str
    pattern: str
    ignore_case: bool = False

    def variables(self):
        return [self.var]


@dataclass(frozen=True)
class CompareFilter:
    var: str
    op: str
    value: float

    def variables(self):
        return [self.var]


Filter = Union[RegexFilter, CompareFilter]


@dataclass
class QueryAST:
    variables: list
    distinct: bool
    patterns: list
    filters: list = field(default_factory=list)
    prefixes: dict = field(default_factory=dict)
    select_all: bool = False

    def pattern_variables(self):
        seen = []
        for tp in self.patterns:
            for name in tp.variables():
                if name not in seen:
                    seen.append(name)
        return seen

    @property
    def alternations(self):
        return [tp.predicate for tp in self.patterns if isinstance(tp.predicate, Alternation)]

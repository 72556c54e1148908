"""RDF terms and triples.

Terms are small frozen value objects. Equality is structural and
kind-sensitive: ``IRI("x") != BNode("x")``, and literals compare by
lexical form, so ``"3.0"`` and ``"3.00"`` are different terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
XSD_STRING = XSD + "string"
XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_FLOAT = XSD + "float"
XSD_BOOLEAN = XSD + "boolean"

NUMERIC_DATATYPES = frozenset({XSD_INTEGER, XSD_DECIMAL, XSD_DOUBLE, XSD_FLOAT})


@dataclass(frozen=True, slots=True)
class IRI:
    value: str

    kind = "iri"

    def __str__(self):
        return self.value


@dataclass(frozen=True, slots=True)
class BNode:
    label: str

    kind = "blank"

    def __str__(self):
        return "_:" + self.label


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: Optional[str] = None
    lang: Optional[str] = None

    kind = "literal"

    def __post_init__(self):
        if self.datatype is not None and self.lang is not None:
            raise ValueError("a literal cannot carry both a datatype and a language tag")

    def __str__(self):
        return self.lexical

    def to_float(self):
        """Float value of the lexical form, or None when unparsable."""
        try:
            return float(self.lexical)
        except ValueError:
            return None


Term = Union[IRI, BNode, Literal]


class Triple(NamedTuple):
    subject: Term
    predicate: Term
    object: Term


def check_triple(triple):
    s, p, o = triple
    if not isinstance(s, (IRI, BNode)):
        raise TypeError(f"subject must be an IRI or blank node, got {s!r}")
    if not isinstance(p, IRI):
        raise TypeError(f"predicate must be an IRI, got {p!r}")
    if not isinstance(o, (IRI, BNode, Literal)):
        raise TypeError(f"object must be a term, got {o!r}")
    return Triple(s, p, o)


def term_key(term):
    """Total order over terms, used wherever output must be deterministic."""
    if isinstance(term, Literal):
        return (2, term.lexical, term.datatype or "", term.lang or "")
    if isinstance(term, BNode):
        return (1, term.label, "", "")
    return (0, term.value, "", "")


def triple_key(triple):
    return (term_key(triple[0]), term_key(triple[1]), term_key(triple[2]))


def float_literal(value):
    return Literal(repr(float(value)), XSD_FLOAT)

"""Graph data model, indexes and Turtle-subset serialization."""

from .graph import Graph, merge
from .namespaces import OWL, RDF, RDFS, SKOS, XSD, Namespace, expand, manifest, shorten
from .terms import BNode, IRI, Literal, Term, Triple, float_literal, term_key, triple_key
from .turtle import load_turtle, parse_turtle, serialize, to_ntriples, to_turtle, write_graph


def match_pattern(graph, s=None, p=None, o=None):
    """Triples of ``graph`` matching the pattern, ``None`` acting as a wildcard."""
    return list(graph.match(s, p, o))


__all__ = [
    "BNode", "Graph", "IRI", "Literal", "Namespace", "OWL", "RDF", "RDFS", "SKOS",
    "Term", "Triple", "XSD", "expand", "float_literal", "load_turtle", "manifest",
    "match_pattern", "merge", "parse_turtle", "serialize", "shorten", "term_key",
    "to_ntriples", "to_turtle", "triple_key", "write_graph",
]

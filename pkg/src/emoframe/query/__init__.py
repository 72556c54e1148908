"""SPARQL-subset parsing and evaluation."""

from .ast import Alternation, CompareFilter, QueryAST, RegexFilter, TriplePattern, Var
from .evaluate import evaluate, filter_passes, plan, solutions
from .parser import parse_query
from .results import ResultTable, render_term


def run_query(text, graph, prefixes=None):
    return evaluate(parse_query(text, prefixes), graph)


__all__ = [
    "Alternation", "CompareFilter", "QueryAST", "RegexFilter", "ResultTable",
    "TriplePattern", "Var", "evaluate", "filter_passes", "parse_query", "plan",
    "render_term", "run_query", "solutions",
]

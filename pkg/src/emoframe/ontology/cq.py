"""Competency questions over the closure graph."""

from __future__ import annotations

from .. import assets
from ..errors import OntologyError
from ..query import evaluate, parse_query
from . import vocab as V

CQS = (1, 2, 3, 4, 5)


def cq_text(n):
    return assets.read_text(f"queries/cq{n}.rq")


def answer_cq(graph, n, argument=None):
    """Run competency question ``n`` (1-5), optionally restricted to one emotion.

    CQ5 needs the emotion whose intensity pairs are wanted.
    """
    if n not in CQS:
        raise OntologyError(f"no competency question {n}; expected 1-5")
    if n == 5 and argument is None:
        raise OntologyError("CQ5 needs an emotion argument")
    table = evaluate(parse_query(cq_text(n)), graph)
    if argument is not None:
        table = table.where("emotion", V.emotion(argument))
    return table

"""Basic-graph-pattern evaluation by nested-loop join.

Patterns are joined left to right after a greedy reordering: the next
pattern is always the cheapest one (by index count over its constant
positions) among those sharing a variable with what is already bound, so
the join never degenerates into a cross product unless the query itself is
disconnected. Filters run as soon as their variable is bound.
"""

from __future__ import annotations

import operator

from ..rdf.terms import IRI, BNode, Literal
from .ast import Alternation, CompareFilter, RegexFilter, Var
from .results import ResultTable

_OPS = {
    ">": operator.gt,
    ">=": operator.ge,
    "=": operator.eq,
    "<": operator.lt,
    "<=": operator.le,
    "!=": operator.ne,
}


def _lexical(term):
    if isinstance(term, IRI):
        return term.value
    if isinstance(term, Literal):
        return term.lexical
    if isinstance(term, BNode):
        return term.label
    return str(term)


def filter_passes(flt, term):
    """Apply one filter to a bound value; unbound or unparsable values fail."""
    if term is None:
        return False
    if isinstance(flt, RegexFilter):
        text = _lexical(term)
        if flt.ignore_case:
            return flt.pattern.lower() in text.lower()
        return flt.pattern in text
    if isinstance(flt, CompareFilter):
        if not isinstance(term, Literal):
            return False
        value = term.to_float()
        if value is None:
            return False
        return _OPS[flt.op](value, flt.value)
    raise TypeError(f"unknown filter {flt!r}")


def _predicates(p):
    return p.options if isinstance(p, Alternation) else (p,)


def _estimate(graph, tp):
    s = None if isinstance(tp.subject, Var) else tp.subject
    o = None if isinstance(tp.object, Var) else tp.object
    if isinstance(tp.predicate, Var):
        return graph.count(s, None, o)
    return sum(graph.count(s, p, o) for p in _predicates(tp.predicate))


def plan(graph, patterns):
    """Join order for ``patterns``: cheapest connected pattern first."""
    remaining = list(enumerate(patterns))
    estimates = {i: _estimate(graph, tp) for i, tp in remaining}
    bound = set()
    order = []
    while remaining:
        connected = [(i, tp) for i, tp in remaining if bound & set(tp.variables())]
        pool = connected or remaining
        # bound variables shrink the real cost, so prefer patterns using more of them
        i, tp = min(pool, key=lambda it: (-len(bound & set(it[1].variables())), estimates[it[0]], it[0]))
        order.append(tp)
        bound.update(tp.variables())
        remaining.remove((i, tp))
    return order


def _resolve(term, binding):
    if isinstance(term, Var):
        return binding.get(term.name)
    return term


def _extend(binding, tp, triple):
    new = None
    for pos_term, value in zip((tp.subject, tp.predicate, tp.object), triple):
        if isinstance(pos_term, Var):
            current = binding.get(pos_term.name) if new is None else new.get(pos_term.name)
            if current is None:
                if new is None:
                    new = dict(binding)
                new[pos_term.name] = value
            elif current != value:
                return None
    return binding if new is None else new


def solutions(query, graph):
    """Yield every binding (dict var -> term) satisfying the query body."""
    order = plan(graph, query.patterns)
    # filters attach to the first pattern after which their variable is bound
    pending = list(query.filters)
    stages = []
    bound = set()
    for tp in order:
        bound.update(tp.variables())
        ready = [f for f in pending if f.var in bound]
        pending = [f for f in pending if f.var not in bound]
        stages.append((tp, ready))
    if pending:
        # a filter on a variable no pattern binds can never pass
        return

    def walk(depth, binding):
        if depth == len(stages):
            yield binding
            return
        tp, ready = stages[depth]
        s = _resolve(tp.subject, binding)
        o = _resolve(tp.object, binding)
        if isinstance(tp.predicate, Var):
            preds = (binding.get(tp.predicate.name),)
        else:
            preds = _predicates(tp.predicate)
        seen = set() if len(preds) > 1 else None
        for p in preds:
            for triple in graph.match(s, p, o):
                if seen is not None:
                    if triple in seen:
                        continue
                    seen.add(triple)
                nb = _extend(binding, tp, triple)
                if nb is None:
                    continue
                if all(filter_passes(f, nb.get(f.var)) for f in ready):
                    yield from walk(depth + 1, nb)

    if not stages:
        yield {}
        return
    yield from walk(0, {})


def evaluate(query, graph):
    """Evaluate a parsed query against ``graph`` and return a :class:`ResultTable`."""
    header = list(query.variables)
    rows = [tuple(b.get(v) for v in header) for b in solutions(query, graph)]
    return ResultTable(header, rows, distinct=query.distinct)

"""Fixed-rule closure over the ontology graph.

Rules applied, to a fixpoint:

* ``rdfs:subClassOf`` is transitive (no reflexive edges are added);
* ``be:moreIntenseThan`` is transitive, and ``be:lessIntenseThan`` is its
  exact converse, so either direction may be asserted;
* ``be:hasPolarity`` on a class is inherited by every subclass.

A cycle in either ordering is an error, since both are meant to be strict.
"""

from __future__ import annotations

from collections import defaultdict

from ..errors import ClosureCycleError
from ..rdf.terms import Triple, term_key
from . import vocab as V


def _adjacency(pairs):
    adj = defaultdict(set)
    for a, b in pairs:
        adj[a].add(b)
    return adj


def strongly_connected(adj):
    """Components of ``adj`` that contain a cycle (size > 1 or a self-loop).

    Iterative Tarjan; nodes inside each component and the component list
    itself are sorted so reports are stable.
    """
    index = {}
    low = {}
    on_stack = set()
    stack = []
    found = []
    counter = 0
    nodes = sorted(set(adj) | {b for bs in adj.values() for b in bs}, key=term_key)
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(sorted(adj.get(root, ()), key=term_key)))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, children = work[-1]
            advanced = False
            for child in children:
                if child not in index:
                    index[child] = low[child] = counter
                    counter += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, iter(sorted(adj.get(child, ()), key=term_key))))
                    advanced = True
                    break
                if child in on_stack:
                    low[node] = min(low[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    top = stack.pop()
                    on_stack.discard(top)
                    comp.append(top)
                    if top == node:
                        break
                if len(comp) > 1 or node in adj.get(node, ()):
                    found.append(sorted(comp, key=term_key))
    return sorted(found, key=lambda c: term_key(c[0]))


def find_cycle(adj, component):
    """One concrete cycle through the first node of ``component``, closed on itself."""
    members = set(component)
    start = component[0]
    # BFS back to start, staying inside the component
    parent = {}
    frontier = [start]
    while frontier:
        nxt = []
        for node in frontier:
            for child in sorted(adj.get(node, ()), key=term_key):
                if child not in members:
                    continue
                if child == start:
                    path = [node]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path + [start]
                if child not in parent:
                    parent[child] = node
                    nxt.append(child)
        frontier = nxt
    return [start, start]


def _reach(adj):
    """Transitive successors of every node (memoised DFS over a DAG)."""
    memo = {}

    def visit(node):
        if node in memo:
            return memo[node]
        out = set()
        stack = [node]
        seen = {node}
        while stack:
            n = stack.pop()
            for c in adj.get(n, ()):
                out.add(c)
                if c in memo:
                    out |= memo[c]
                elif c not in seen:
                    seen.add(c)
                    stack.append(c)
        memo[node] = out
        return out

    return {n: visit(n) for n in list(adj)}


def _check_acyclic(adj, relation):
    comps = strongly_connected(adj)
    if comps:
        raise ClosureCycleError(relation, find_cycle(adj, comps[0]))


def intensity_pairs(graph):
    """Asserted intensity edges as (more, less) pairs, from either property."""
    pairs = {(s, o) for s, _, o in graph.match(None, V.MORE_INTENSE_THAN, None)}
    pairs |= {(o, s) for s, _, o in graph.match(None, V.LESS_INTENSE_THAN, None)}
    return pairs


def subclass_pairs(graph):
    return {(s, o) for s, _, o in graph.match(None, V.SUBCLASS_OF, None)}


def infer_closures(graph):
    """Return ``graph`` plus every triple the fixed rule set derives."""
    out = graph.copy()

    sub_adj = _adjacency(subclass_pairs(graph))
    _check_acyclic(sub_adj, "rdfs:subClassOf")
    ancestors = _reach(sub_adj)
    for cls, sups in ancestors.items():
        for sup in sups:
            out.add(Triple(cls, V.SUBCLASS_OF, sup))

    int_adj = _adjacency(intensity_pairs(graph))
    _check_acyclic(int_adj, "be:moreIntenseThan")
    for more, lesses in _reach(int_adj).items():
        for less in lesses:
            out.add(Triple(more, V.MORE_INTENSE_THAN, less))
            out.add(Triple(less, V.LESS_INTENSE_THAN, more))

    polarity = defaultdict(set)
    for s, _, o in graph.match(None, V.HAS_POLARITY, None):
        polarity[s].add(o)
    for cls, sups in ancestors.items():
        for sup in sups:
            for pol in polarity.get(sup, ()):
                out.add(Triple(cls, V.HAS_POLARITY, pol))
    return out


def is_closed(graph):
    return len(infer_closures(graph)) == len(graph)


__all__ = ["find_cycle", "infer_closures", "intensity_pairs", "is_closed",
           "strongly_connected", "subclass_pairs"]

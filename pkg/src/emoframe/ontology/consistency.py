"""Rule-based consistency checking.

R1  intensity is acyclic (moreIntenseThan together with the converse of
    lessIntenseThan); one violation per strongly connected component.
R2  antidotes belong to negative emotions, impediments to positive ones.
R3  every transitive subclass of be:BE_Emotion has exactly one polarity,
    counting what it inherits.
R4  be:emotionalTendencyTowards runs from a be:Psychopathology to an
    emotion class.
R5  every antidote or impediment is typed with a subclass of
    be:EmotionCounter.

The rules read subclass chains themselves, so they give the same verdict on
a graph with or without its closure.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field

from ..rdf.namespaces import shorten
from ..rdf.terms import Triple, term_key, triple_key
from . import vocab as V
from .reasoner import find_cycle, intensity_pairs, strongly_connected


@dataclass(frozen=True)
class Violation:
    rule: str
    triples: tuple
    message: str

    def to_dict(self, prefixes=None):
        return {
            "rule": self.rule,
            "triples": [[_show(t, prefixes) for t in tr] for tr in self.triples],
            "message": self.message,
        }


@dataclass
class ConsistencyReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def __len__(self):
        return len(self.violations)

    def by_rule(self, rule):
        return [v for v in self.violations if v.rule == rule]

    def to_json_lines(self, prefixes=None):
        return "".join(json.dumps(v.to_dict(prefixes), ensure_ascii=False) + "\n"
                       for v in self.violations)

    def summary(self):
        n = len(self.violations)
        return f"{n} violation{'' if n == 1 else 's'}"


def _show(term, prefixes=None):
    if hasattr(term, "lexical"):
        return term.lexical
    if hasattr(term, "label"):
        return str(term)
    return shorten(term, prefixes)


class _Hierarchy:
    """Subclass ancestry computed on demand, tolerant of cycles."""

    def __init__(self, graph):
        self.parents = defaultdict(set)
        for s, _, o in graph.match(None, V.SUBCLASS_OF, None):
            self.parents[s].add(o)
        self._memo = {}

    def ancestors(self, cls):
        if cls in self._memo:
            return self._memo[cls]
        seen = set()
        stack = list(self.parents.get(cls, ()))
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(self.parents.get(c, ()))
        self._memo[cls] = seen
        return seen

    def is_sub(self, cls, sup, reflexive=True):
        return (reflexive and cls == sup) or sup in self.ancestors(cls)


def _polarities(graph, hierarchy, cls):
    pols = set(graph.objects(cls, V.HAS_POLARITY))
    for sup in hierarchy.ancestors(cls):
        pols.update(graph.objects(sup, V.HAS_POLARITY))
    return pols


def _r1(graph):
    adj = defaultdict(set)
    for more, less in intensity_pairs(graph):
        adj[more].add(less)
    out = []
    for comp in strongly_connected(adj):
        cycle = find_cycle(adj, comp)
        triples = tuple(Triple(a, V.MORE_INTENSE_THAN, b) for a, b in zip(cycle, cycle[1:]))
        names = " > ".join(_show(t) for t in cycle)
        out.append(Violation("R1", triples, f"intensity cycle over {len(comp)} classes: {names}"))
    return out


def _r2(graph, hierarchy):
    out = []
    rules = ((V.HAS_ANTIDOTE, V.NEGATIVE, "antidote"), (V.HAS_IMPEDIMENT, V.POSITIVE, "impediment"))
    for prop, required, kind in rules:
        for tr in sorted(graph.match(None, prop, None), key=triple_key):
            pols = _polarities(graph, hierarchy, tr.subject)
            if required not in pols:
                have = ", ".join(sorted(_show(p) for p in pols)) or "no polarity"
                out.append(Violation(
                    "R2", (tr,),
                    f"{_show(tr.subject)} has an {kind} but its polarity is {have}, "
                    f"not {_show(required)}"))
    return out


def _r3(graph, hierarchy):
    out = []
    classes = {s for s in hierarchy.parents if hierarchy.is_sub(s, V.BE_EMOTION, reflexive=False)}
    for cls in sorted(classes, key=term_key):
        pols = _polarities(graph, hierarchy, cls)
        if len(pols) == 1:
            continue
        triples = tuple(Triple(cls, V.HAS_POLARITY, p) for p in sorted(pols, key=term_key))
        out.append(Violation("R3", triples, f"{_show(cls)} has {len(pols)} polarities, expected 1"))
    return out


def _r4(graph, hierarchy):
    out = []
    for tr in sorted(graph.match(None, V.EMOTIONAL_TENDENCY_TOWARDS, None), key=triple_key):
        types = graph.objects(tr.subject, V.TYPE)
        if not any(hierarchy.is_sub(t, V.PSYCHOPATHOLOGY) for t in types):
            out.append(Violation("R4", (tr,), f"{_show(tr.subject)} is not typed be:Psychopathology"))
        if not hierarchy.is_sub(tr.object, V.BE_EMOTION, reflexive=False):
            out.append(Violation("R4", (tr,), f"{_show(tr.object)} is not an emotion class"))
    return out


def _r5(graph, hierarchy):
    out = []
    counters = set()
    for prop in (V.HAS_ANTIDOTE, V.HAS_IMPEDIMENT):
        counters.update(graph.objects(None, prop))
    for c in sorted(counters, key=term_key):
        if not any(hierarchy.is_sub(t, V.EMOTION_COUNTER) for t in graph.objects(c, V.TYPE)):
            subject_triples = tuple(sorted(
                (tr for prop in (V.HAS_ANTIDOTE, V.HAS_IMPEDIMENT) for tr in graph.match(None, prop, c)),
                key=triple_key))
            out.append(Violation("R5", subject_triples, f"{_show(c)} is not typed be:EmotionCounter"))
    return out


def check_consistency(graph):
    hierarchy = _Hierarchy(graph)
    violations = _r1(graph)
    violations += _r2(graph, hierarchy)
    violations += _r3(graph, hierarchy)
    violations += _r4(graph, hierarchy)
    violations += _r5(graph, hierarchy)
    return ConsistencyReport(violations)


__all__ = ["ConsistencyReport", "Violation", "check_consistency"]

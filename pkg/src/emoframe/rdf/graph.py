"""In-memory triple store with subject-, predicate- and object-first indexes.

A graph supports many concurrent readers or a single writer; it holds no
locks of its own.
"""

from __future__ import annotations

import logging
from itertools import count

from .terms import BNode, Triple, check_triple, triple_key

log = logging.getLogger(__name__)


def _index_add(index, a, b, c):
    index.setdefault(a, {}).setdefault(b, set()).add(c)


def _index_remove(index, a, b, c):
    inner = index[a]
    leaf = inner[b]
    leaf.discard(c)
    if not leaf:
        del inner[b]
        if not inner:
            del index[a]


class Graph:
    def __init__(self, triples=(), prefixes=None):
        self._triples = set()
        self._spo = {}
        self._pos = {}
        self._osp = {}
        self.prefixes = dict(prefixes or {})
        for t in triples:
            self.add(t)

    def add(self, triple):
        """Insert a triple; returns True if the graph changed."""
        t = check_triple(triple)
        if t in self._triples:
            return False
        s, p, o = t
        self._triples.add(t)
        _index_add(self._spo, s, p, o)
        _index_add(self._pos, p, o, s)
        _index_add(self._osp, o, s, p)
        return True

    def update(self, triples):
        for t in triples:
            self.add(t)
        return self

    def remove(self, triple):
        """Delete a triple; returns True if the graph changed."""
        t = Triple(*triple)
        if t not in self._triples:
            return False
        s, p, o = t
        self._triples.discard(t)
        _index_remove(self._spo, s, p, o)
        _index_remove(self._pos, p, o, s)
        _index_remove(self._osp, o, s, p)
        return True

    def __len__(self):
        return len(self._triples)

    def __iter__(self):
        return iter(self._triples)

    def __contains__(self, triple):
        return Triple(*triple) in self._triples

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    __hash__ = None

    def __repr__(self):
        return f"<Graph with {len(self)} triples>"

    def triples(self):
        """Triples in deterministic order."""
        return sorted(self._triples, key=triple_key)

    def copy(self):
        g = Graph(prefixes=self.prefixes)
        g.update(self._triples)
        return g

    def match(self, s=None, p=None, o=None):
        """Triples matching the pattern; ``None`` is a wildcard."""
        if s is not None:
            by_p = self._spo.get(s)
            if not by_p:
                return
            if p is not None:
                objs = by_p.get(p, ())
                if o is not None:
                    if o in objs:
                        yield Triple(s, p, o)
                    return
                for obj in objs:
                    yield Triple(s, p, obj)
                return
            if o is not None:
                for pred in self._osp.get(o, {}).get(s, ()):
                    yield Triple(s, pred, o)
                return
            for pred, objs in by_p.items():
                for obj in objs:
                    yield Triple(s, pred, obj)
            return
        if p is not None:
            by_o = self._pos.get(p)
            if not by_o:
                return
            if o is not None:
                for subj in by_o.get(o, ()):
                    yield Triple(subj, p, o)
                return
            for obj, subjs in by_o.items():
                for subj in subjs:
                    yield Triple(subj, p, obj)
            return
        if o is not None:
            for subj, preds in self._osp.get(o, {}).items():
                for pred in preds:
                    yield Triple(subj, pred, o)
            return
        yield from self._triples

    def count(self, s=None, p=None, o=None):
        """Number of matching triples, cheap for the common bound shapes."""
        if s is None and p is None and o is None:
            return len(self._triples)
        if s is None and o is None:
            return sum(len(v) for v in self._pos.get(p, {}).values())
        if p is None and o is None:
            return sum(len(v) for v in self._spo.get(s, {}).values())
        if s is None and p is None:
            return sum(len(v) for v in self._osp.get(o, {}).values())
        return sum(1 for _ in self.match(s, p, o))

    # conveniences used throughout the ontology code

    def objects(self, s=None, p=None):
        return {t.object for t in self.match(s, p, None)}

    def subjects(self, p=None, o=None):
        return {t.subject for t in self.match(None, p, o)}

    def value(self, s, p):
        """The single object of (s, p), or None; raises if there are several."""
        objs = self.objects(s, p)
        if len(objs) > 1:
            raise ValueError(f"{s} has {len(objs)} values for {p}")
        return next(iter(objs), None)

    def terms(self):
        out = set()
        for s, p, o in self._triples:
            out.update((s, p, o))
        return out

    def blank_nodes(self):
        return {t for t in self.terms() if isinstance(t, BNode)}


def merge(graphs):
    """Union of ``graphs``.

    Blank node labels are scoped to the graph they came from: a label that
    already occurs in the result is renamed. The same graph object passed
    twice is merged once, so ``merge([g, g]) == g``. Conflicting prefix
    bindings are resolved in favour of the later graph, with a warning.
    """
    result = Graph()
    used_labels = set()
    seen = set()
    fresh = count()
    for g in graphs:
        if id(g) in seen:
            continue
        seen.add(id(g))
        for prefix, base in g.prefixes.items():
            old = result.prefixes.get(prefix)
            if old is not None and old != base:
                log.warning("prefix %r rebound from <%s> to <%s> during merge", prefix, old, base)
            result.prefixes[prefix] = base
        rename = {}
        own = g.blank_nodes()
        for b in sorted(own, key=lambda b: b.label):
            if b.label in used_labels:
                label = f"{b.label}_m{next(fresh)}"
                while label in used_labels or BNode(label) in own:
                    label = f"{b.label}_m{next(fresh)}"
                rename[b] = BNode(label)
        used_labels.update(rename.get(b, b).label for b in own)
        for s, p, o in g:
            result.add((rename.get(s, s), p, rename.get(o, o)))
    return result

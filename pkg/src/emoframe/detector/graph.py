"""Sentence graphs, trigger annotation and emotion profiles.

A sentence graph uses a small vocabulary::

    sent:<id>      a sg:Sentence ; sg:text "..." ; sg:hasToken sent:<id>_t<i> .
    sent:<id>_t<i> a sg:Token ; sg:surface "..." ; sg:lemma "..." ; sg:pos "ADJ" ;
                   sg:start 0 ; sg:end 7 ; sg:sense wn:... .

Annotation adds ``sent:<id>_t<i> efo:triggers be:<Emotion>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional
from urllib.parse import quote

from ..errors import EmptyTextError, NoContentError
from ..ontology import vocab as V
from ..rdf.graph import Graph
from ..rdf.namespaces import Namespace, manifest
from ..rdf.terms import IRI, Literal, Triple, XSD_INTEGER, term_key
from .text import first_sense, guess_pos, is_stopword, lemmatize, tokenize

_NS = manifest()
SG = Namespace(_NS["sg"])
SENT = Namespace(_NS["sent"])


@dataclass(frozen=True)
class Node:
    iri: IRI
    surface: str
    lemma: str
    pos: str
    start: int
    end: int
    sense: Optional[IRI] = None


@dataclass(frozen=True)
class SentenceGraph:
    sentence_id: str
    text: str
    nodes: tuple
    graph: Graph = field(compare=False, repr=False)

    def node(self, surface):
        for n in self.nodes:
            if n.surface.lower() == surface.lower():
                return n
        raise KeyError(surface)

    def evocations(self):
        """(node, emotion) pairs added by annotation, in text order."""
        by_iri = {n.iri: n for n in self.nodes}
        pairs = [(by_iri[t.subject], t.object) for t in self.graph.match(None, V.TRIGGERS, None)
                 if t.subject in by_iri]
        return sorted(pairs, key=lambda p: (p[0].start, term_key(p[1])))


def build_sentence_graph(text, sentence_id="s0"):
    """Deterministic sentence graph: one node per content token."""
    if not text or not text.strip():
        raise EmptyTextError("empty text")
    content = [t for t in tokenize(text) if not is_stopword(t)]
    if not content:
        raise NoContentError(f"sentence {sentence_id!r} has no content tokens")
    sid = quote(str(sentence_id), safe="-_.")
    sent = SENT[sid]
    g = Graph(prefixes=manifest())
    g.update([
        Triple(sent, V.TYPE, SG.Sentence),
        Triple(sent, SG.text, Literal(text)),
    ])
    nodes = []
    for i, tok in enumerate(content):
        lemma = lemmatize(tok.surface)
        node = Node(SENT[f"{sid}_t{i}"], tok.surface, lemma, guess_pos(tok.norm, lemma),
                    tok.start, tok.end, first_sense(lemma))
        nodes.append(node)
        g.update([
            Triple(sent, SG.hasToken, node.iri),
            Triple(node.iri, V.TYPE, SG.Token),
            Triple(node.iri, SG.surface, Literal(node.surface)),
            Triple(node.iri, SG.lemma, Literal(node.lemma)),
            Triple(node.iri, SG.pos, Literal(node.pos)),
            Triple(node.iri, SG.start, Literal(str(node.start), XSD_INTEGER)),
            Triple(node.iri, SG.end, Literal(str(node.end), XSD_INTEGER)),
        ])
        if node.sense is not None:
            g.add(Triple(node.iri, SG.sense, node.sense))
    return SentenceGraph(str(sentence_id), text, tuple(nodes), g)


class TriggerIndex:
    """Lookup tables over a trigger graph: by sense and by label phrase."""

    def __init__(self, trigger_kg):
        self.by_sense = {}
        for s, _, o in trigger_kg.match(None, V.TRIGGERS, None):
            self.by_sense.setdefault(s, set()).add(o)
        # emotion -> first word -> phrases (word tuples), longest first
        phrases = {}
        for trigger, emotions in self.by_sense.items():
            for label in trigger_kg.objects(trigger, V.LABEL):
                words = tuple(label.lexical.lower().split())
                if not words:
                    continue
                for e in emotions:
                    phrases.setdefault(e, {}).setdefault(words[0], set()).add(words)
        self.by_label = {
            e: {w: sorted(ps, key=lambda p: (-len(p), p)) for w, ps in firsts.items()}
            for e, firsts in phrases.items()
        }


def _matches(node, word):
    return word == node.lemma or word == node.surface.lower()


def _phrase_hits(nodes, table):
    """Anchor nodes of greedy longest phrase matches, scanning left to right."""
    hits = []
    i = 0
    while i < len(nodes):
        best = 0
        candidates = table.get(nodes[i].lemma, []) + table.get(nodes[i].surface.lower(), [])
        for phrase in sorted(set(candidates), key=lambda p: (-len(p), p)):
            n = len(phrase)
            if i + n <= len(nodes) and all(_matches(nodes[i + k], phrase[k]) for k in range(n)):
                best = n
                break
        if best:
            hits.append(nodes[i])
            i += best
        else:
            i += 1
    return hits


def annotate(sg, trigger_kg):
    """Add ``node efo:triggers emotion`` for every sense or label hit.

    Sense hits and label hits are unioned; a node gets at most one triple per
    emotion. Phrases are matched per emotion, greedily and longest first,
    and anchored on their first node.
    """
    index = trigger_kg if isinstance(trigger_kg, TriggerIndex) else TriggerIndex(trigger_kg)
    g = sg.graph.copy()
    for node in sg.nodes:
        if node.sense is not None:
            for e in index.by_sense.get(node.sense, ()):
                g.add(Triple(node.iri, V.TRIGGERS, e))
    for e, table in index.by_label.items():
        for node in _phrase_hits(sg.nodes, table):
            g.add(Triple(node.iri, V.TRIGGERS, e))
    return SentenceGraph(sg.sentence_id, sg.text, sg.nodes, g)


@dataclass(frozen=True)
class EmotionProfile:
    nodes: dict = field(default_factory=dict)

    @property
    def counts(self):
        return {e: len(ns) for e, ns in self.nodes.items()}

    def __getitem__(self, emotion):
        return len(self.nodes.get(V.emotion(emotion), ()))

    def __len__(self):
        return len(self.nodes)

    def total(self):
        return sum(len(ns) for ns in self.nodes.values())

    def to_dict(self):
        return {V.local_name(e): c for e, c in self.counts.items()}


def profile(sg):
    """Per-emotion evocation counts and the nodes behind them."""
    nodes = {}
    for node, emotion in sg.evocations():
        nodes.setdefault(emotion, []).append(node)
    ordered = sorted(nodes.items(), key=lambda kv: term_key(kv[0]))
    return EmotionProfile({e: tuple(ns) for e, ns in ordered})


def detect(text, trigger_kg, sentence_id="s0"):
    """Build, annotate and profile one sentence."""
    sg = annotate(build_sentence_graph(text, sentence_id), trigger_kg)
    return sg, profile(sg)

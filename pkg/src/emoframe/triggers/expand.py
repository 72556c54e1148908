"""Five-step query expansion from starting lexical material to triggers."""

from __future__ import annotations

import logging
from collections import Counter

from .. import assets
from ..ontology import vocab as V
from ..rdf.graph import Graph, merge
from ..rdf.namespaces import Namespace, manifest
from ..rdf.terms import BNode, Literal, Triple, term_key
from .model import StartingLexicalMaterial, TriggerRecord, source_of
from .snapshot import (CLOSE_MATCH, CONCEPT_LABEL, FRAME_ELEMENT, LEXICAL_UNIT,
                       RELATED_CONCEPT, SUBSUMES, load_snapshot)

log = logging.getLogger(__name__)

EMF = Namespace(manifest()["emf"])
SOURCE_RESOURCE = EMF.sourceResource
EXPANSION_STEP = EMF.expansionStep
MATCHED_UNIT = EMF.matchedUnit


def _label(snapshot, term):
    labels = sorted(o.lexical for o in snapshot.objects(term, V.LABEL) | snapshot.objects(term, CONCEPT_LABEL))
    return labels[0] if labels else None


def _by_label(snapshot, predicate, units):
    """(term, unit) for terms whose ``predicate`` literal equals a unit, ignoring case.

    Units are visited in order, so a term takes the first unit it matches.
    """
    index = {}
    for s, _, o in snapshot.match(None, predicate, None):
        if isinstance(o, Literal):
            index.setdefault(o.lexical.strip().lower(), set()).add(s)
    hits = {}
    for unit in units:
        for term in sorted(index.get(unit, ()), key=term_key):
            hits.setdefault(term, unit)
    return list(hits.items())


def expand(slm, snapshot):
    """Trigger records for ``slm`` over ``snapshot``, in step order.

    A (trigger, emotion, source) triple is recorded once, by the earliest
    step that reaches it.
    """
    if len(snapshot) == 0:
        log.warning("empty snapshot: no triggers for %s", slm.emotion)
        return []
    records = {}

    def add(entity, step, unit):
        rec = TriggerRecord(entity, slm.emotion, source_of(entity), step, unit, _label(snapshot, entity))
        records.setdefault(rec.key, rec)

    frames = _by_label(snapshot, LEXICAL_UNIT, slm.units)
    for frame, unit in frames:
        add(frame, "frame", unit)
    for predicate, step in ((FRAME_ELEMENT, "frame_element"), (SUBSUMES, "lexical"),
                            (CLOSE_MATCH, "close_match")):
        for frame, unit in frames:
            for entity in sorted(snapshot.objects(frame, predicate), key=term_key):
                add(entity, step, unit)
    for concept, unit in _by_label(snapshot, CONCEPT_LABEL, slm.units):
        add(concept, "conceptnet", unit)
        for related in sorted(snapshot.objects(concept, RELATED_CONCEPT), key=term_key):
            add(related, "conceptnet", unit)
    return list(records.values())


def materialize(records):
    """Trigger graph: one ``efo:triggers`` triple per (trigger, emotion) pair.

    Each record also gets a reified statement carrying its source resource,
    expansion step and matched unit. Frame elements are attached to the
    emotion with ``fs:hasFrameElement``.
    """
    g = Graph(prefixes=manifest())
    for i, rec in enumerate(records):
        g.add(Triple(rec.trigger, V.TRIGGERS, rec.emotion))
        st = BNode(f"r{i}")
        g.update([
            Triple(st, V.TYPE, V.RDF.Statement),
            Triple(st, V.RDF.subject, rec.trigger),
            Triple(st, V.RDF.predicate, V.TRIGGERS),
            Triple(st, V.RDF.object, rec.emotion),
            Triple(st, SOURCE_RESOURCE, Literal(rec.source)),
            Triple(st, EXPANSION_STEP, Literal(rec.step)),
            Triple(st, MATCHED_UNIT, Literal(rec.matched_unit)),
        ])
        if rec.label is not None:
            g.add(Triple(rec.trigger, V.LABEL, Literal(rec.label)))
        if rec.step == "frame_element":
            g.add(Triple(rec.emotion, V.HAS_FRAME_ELEMENT, rec.trigger))
    return g


def source_counts(graph, emotion):
    """Distinct triggers of ``emotion`` per source resource, read from provenance."""
    emotion = V.emotion(emotion)
    per_source = {}
    for st in graph.subjects(V.RDF.object, emotion):
        if (st, V.RDF.predicate, V.TRIGGERS) not in graph:
            continue
        trigger = graph.value(st, V.RDF.subject)
        source = graph.value(st, SOURCE_RESOURCE)
        if (trigger, V.TRIGGERS, emotion) in graph:
            per_source.setdefault(source.lexical, set()).add(trigger)
    return dict(sorted((k, len(v)) for k, v in per_source.items()))


def expand_emotion(emotion, ontology=None):
    """Records for one basic emotion from its bundled snapshot."""
    from ..ontology.loader import closed_ontology

    ontology = closed_ontology() if ontology is None else ontology
    slm = StartingLexicalMaterial.from_ontology(ontology, emotion)
    return expand(slm, load_snapshot(emotion))


_KG_CACHE = {}


def build_trigger_kg(emotions=None, ontology=None):
    """Merged trigger graph for ``emotions`` (all six by default).

    Results for the default ontology are memoised per asset root.
    """
    emotions = tuple(V.emotion(e) for e in (emotions or V.BASIC_EMOTIONS))
    key = (str(assets.root()), emotions) if ontology is None else None
    if key is not None and key in _KG_CACHE:
        return _KG_CACHE[key].copy()
    if ontology is None:
        from ..ontology.loader import closed_ontology

        ontology = closed_ontology()
    kg = merge([materialize(expand_emotion(e, ontology)) for e in emotions])
    kg.prefixes.update(manifest())
    if key is not None:
        _KG_CACHE[key] = kg.copy()
    return kg


def step_counts(records):
    return dict(Counter(r.step for r in records))

"""Resource snapshots: the slice of the lexical hub that expansion reads.

Schema (every snapshot triple uses one of these predicates):

    frame   snap:lexicalUnit    "unit"
    frame   snap:frameElement   element
    frame   snap:subsumes       entity      (synsets, verb senses)
    frame   skos:closeMatch     entity      (also Wikidata / Wiktionary entries)
    concept snap:conceptLabel   "label"
    concept snap:relatedConcept concept     (one hop of ConceptNet relatedness)
    any     rdfs:label          "text"
"""

from __future__ import annotations

import json
import logging

from .. import assets
from ..errors import AssetError, TriggerError, TurtleSyntaxError
from ..ontology import vocab as V
from ..rdf.namespaces import Namespace, manifest
from ..rdf.terms import Literal
from ..rdf.turtle import parse_turtle

log = logging.getLogger(__name__)

SNAP = Namespace(manifest()["snap"])
LEXICAL_UNIT = SNAP.lexicalUnit
FRAME_ELEMENT = SNAP.frameElement
SUBSUMES = SNAP.subsumes
CLOSE_MATCH = V.SKOS.closeMatch
CONCEPT_LABEL = SNAP.conceptLabel
RELATED_CONCEPT = SNAP.relatedConcept

SCHEMA = frozenset({LEXICAL_UNIT, FRAME_ELEMENT, SUBSUMES, CLOSE_MATCH,
                    CONCEPT_LABEL, RELATED_CONCEPT, V.LABEL})
_LITERAL_OBJECT = {LEXICAL_UNIT, CONCEPT_LABEL, V.LABEL}


def validate_snapshot(graph):
    """Raise :class:`TriggerError` on the first triples outside the schema."""
    bad = []
    for t in graph.triples():
        if t.predicate not in SCHEMA:
            bad.append(f"predicate {t.predicate} not in the snapshot schema")
        elif (t.predicate in _LITERAL_OBJECT) != isinstance(t.object, Literal):
            bad.append(f"{t.predicate} takes a {'literal' if t.predicate in _LITERAL_OBJECT else 'resource'} object")
        if len(bad) >= 5:
            break
    if bad:
        raise TriggerError("invalid snapshot: " + "; ".join(bad))
    return graph


def snapshot_name(emotion):
    return f"snapshots/{V.local_name(V.emotion(emotion)).lower()}.ttl"


def load_snapshot(emotion):
    """The bundled snapshot for one emotion."""
    name = snapshot_name(emotion)
    try:
        graph = parse_turtle(assets.read_text(name))
    except TurtleSyntaxError as exc:
        raise AssetError(f"corrupt asset {name}: {exc}") from exc
    return validate_snapshot(graph)


def load_manifest():
    return json.loads(assets.read_text("snapshots/manifest.json"))

"""Starting lexical material and trigger records."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import TriggerError
from ..rdf.namespaces import manifest
from ..rdf.terms import IRI
from ..ontology import vocab as V

STEPS = ("frame", "frame_element", "lexical", "close_match", "conceptnet")

# namespace prefix -> source resource
_PREFIX_SOURCE = {
    "fscore": "framenet",
    "fe": "frame_element",
    "wn": "wordnet",
    "vn": "verbnet",
    "pb": "propbank",
    "cn": "conceptnet",
    "wikt": "wiktionary",
    "wd": "wikidata",
    "dbr": "dbpedia",
    "babel": "babelnet",
    "umbel": "umbel",
    "yago": "yago",
    "premon": "premon",
}
SOURCES = tuple(_PREFIX_SOURCE.values())


def source_of(term):
    """Source resource of an entity, read off its namespace."""
    prefixes = manifest()
    best = None
    for prefix, source in _PREFIX_SOURCE.items():
        base = prefixes[prefix]
        if isinstance(term, IRI) and term.value.startswith(base):
            if best is None or len(base) > len(best[0]):
                best = (base, source)
    if best is None:
        raise TriggerError(f"{term} is not in a known lexical resource namespace")
    return best[1]


@dataclass(frozen=True)
class StartingLexicalMaterial:
    emotion: IRI
    units: tuple

    def __post_init__(self):
        if not self.units:
            raise TriggerError("starting lexical material needs at least one unit")
        for u in self.units:
            if u != u.strip().lower() or not u:
                raise TriggerError(f"lexical unit {u!r} is not lowercase-normalized")
        if len(set(self.units)) != len(self.units):
            raise TriggerError("duplicate lexical units")

    @classmethod
    def of(cls, emotion, units):
        """Normalize ``units`` (trim, lowercase, drop repeats) and build."""
        seen = dict.fromkeys(u.strip().lower() for u in units if u.strip())
        return cls(V.emotion(emotion), tuple(seen))

    @classmethod
    def from_ontology(cls, graph, emotion):
        """Labels of the emotion's sub-emotions in intensity order, then its own label."""
        from ..ontology.frames import emotion_frame

        frame = emotion_frame(graph, emotion)
        units = []
        for term in frame.sub_emotions + (frame.emotion,):
            label = graph.value(term, V.LABEL)
            units.append(label.lexical if label is not None else V.local_name(term))
        return cls.of(frame.emotion, units)


@dataclass(frozen=True)
class TriggerRecord:
    trigger: IRI
    emotion: IRI
    source: str
    step: str
    matched_unit: str
    label: Optional[str] = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise TriggerError(f"unknown source resource {self.source!r}")
        if self.step not in STEPS:
            raise TriggerError(f"unknown expansion step {self.step!r}")

    @property
    def key(self):
        return (self.trigger, self.emotion, self.source)

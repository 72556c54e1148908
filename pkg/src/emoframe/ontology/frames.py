"""The EmotionFrame view of one basic emotion."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import FrameError
from ..rdf.namespaces import shorten
from ..rdf.terms import IRI, term_key
from . import vocab as V


@dataclass(frozen=True)
class EmotionFrame:
    emotion: IRI
    polarity: str
    sub_emotions: tuple
    counters: dict = field(default_factory=dict)
    psychopathologies: frozenset = frozenset()
    personality_trait: Optional[IRI] = None
    personality_description: Optional[str] = None

    @property
    def name(self):
        return V.local_name(self.emotion)

    def intensity_pairs(self):
        """(more, less) pairs implied by the chain order."""
        subs = self.sub_emotions
        return [(subs[i], subs[j]) for i in range(len(subs)) for j in range(i + 1, len(subs))]

    def to_dict(self, prefixes=None):
        return {
            "emotion": shorten(self.emotion, prefixes),
            "polarity": self.polarity,
            "sub_emotions": [shorten(s, prefixes) for s in self.sub_emotions],
            "counters": {shorten(k, prefixes): shorten(v, prefixes)
                         for k, v in sorted(self.counters.items(), key=lambda kv: term_key(kv[0]))},
            "psychopathologies": sorted(shorten(p, prefixes) for p in self.psychopathologies),
            "personality_trait": shorten(self.personality_trait, prefixes) if self.personality_trait else None,
        }


def _chain(graph, subs):
    """Order ``subs`` along the moreIntenseThan chain and check it is total.

    The chain head is the member asserted moreIntenseThan every other one.
    """
    members = set(subs)
    ahead = {s: {o for o in graph.objects(s, V.MORE_INTENSE_THAN) if o in members} for s in subs}
    for s in subs:
        ahead[s] |= {o for o in graph.subjects(V.LESS_INTENSE_THAN, s) if o in members}
    ordered = sorted(subs, key=lambda s: (-len(ahead[s]), term_key(s)))
    n = len(ordered)
    for i, s in enumerate(ordered):
        if s in ahead[s]:
            raise FrameError(f"{shorten(s)} is ordered against itself")
        if ahead[s] != set(ordered[i + 1:]):
            raise FrameError(
                f"intensity order among the sub-emotions of this frame is not a strict total order "
                f"({sum(len(a) for a in ahead.values())} pairs for {n} members, expected {n * (n - 1) // 2}); "
                "run the closure first")
    return tuple(ordered)


def emotion_frame(graph, emotion):
    """Assemble the frame of a direct ``be:BE_Emotion`` subclass from a closure graph."""
    emotion = V.emotion(emotion)
    if (emotion, V.SUBCLASS_OF, V.BE_EMOTION) not in graph:
        raise FrameError(f"{shorten(emotion)} is not a basic emotion")
    subs = sorted(graph.subjects(V.SUBCLASS_OF, emotion), key=term_key)
    pols = graph.objects(emotion, V.HAS_POLARITY)
    if len(pols) != 1:
        raise FrameError(f"{shorten(emotion)} has {len(pols)} polarities, expected 1")
    pol = next(iter(pols))
    if pol not in V.POLARITY_NAMES:
        raise FrameError(f"unknown polarity {shorten(pol)}")
    polarity = V.POLARITY_NAMES[pol]

    counters = {}
    for sub in subs:
        antidotes = graph.objects(sub, V.HAS_ANTIDOTE)
        impediments = graph.objects(sub, V.HAS_IMPEDIMENT)
        if antidotes and polarity != "negative":
            raise FrameError(f"{shorten(sub)} has an antidote in a {polarity} frame")
        if impediments and polarity != "positive":
            raise FrameError(f"{shorten(sub)} has an impediment in a {polarity} frame")
        found = antidotes | impediments
        if len(found) > 1:
            raise FrameError(f"{shorten(sub)} has {len(found)} counters, expected at most 1")
        if found:
            counters[sub] = next(iter(found))

    trait = graph.value(emotion, V.HAS_PERSONALITY_TRAIT)
    description = None
    if trait is not None:
        comment = graph.value(trait, V.COMMENT)
        description = comment.lexical if comment is not None else None

    return EmotionFrame(
        emotion=emotion,
        polarity=polarity,
        sub_emotions=_chain(graph, subs),
        counters=counters,
        psychopathologies=frozenset(graph.subjects(V.EMOTIONAL_TENDENCY_TOWARDS, emotion)),
        personality_trait=trait,
        personality_description=description,
    )

"""Constant terms of the EmoCore and BE vocabularies."""

from __future__ import annotations

from ..rdf.namespaces import OWL, RDF, RDFS, SKOS, XSD, Namespace, manifest

_NS = manifest()

EFO = Namespace(_NS["efo"])
BE = Namespace(_NS["be"])
FER = Namespace(_NS["fer"])
CR = Namespace(_NS["cr"])
FS = Namespace(_NS["fs"])
DUL = Namespace(_NS["dul"])
EMF = Namespace(_NS["emf"])

# EmoCore
EMOTION = EFO.Emotion
EMOTION_SITUATION = EFO.EmotionSituation
TRIGGERS = EFO.triggers
TRIGGERED_BY = EFO.triggeredBy
CONCEPTUAL_FRAME = FS.ConceptualFrame
FRAME_OCCURRENCE = FS.FrameOccurrence
DESCRIPTION = DUL.Description
SITUATION = DUL.Situation
EMOTION_ACTIVE = FS.EmotionActive
EMOTION_DIRECTED = FS.EmotionDirected
FEELING = FS.Feeling
MENTAL_PROPERTY = FS.MentalProperty
HAS_FRAME_ELEMENT = FS.hasFrameElement

# BE classes
BE_EMOTION = BE.BE_Emotion
PRE_CONDITION = BE.PreCondition
POST_CONDITION = BE.PostCondition
EMOTION_COUNTER = BE.EmotionCounter
EMOTION_ANTIDOTE = BE.EmotionAntidote
EMOTION_IMPEDIMENT = BE.EmotionImpediment
MOOD = BE.Mood
PERCEPTION_DATABASE = BE.PerceptionDatabase
TRIGGER = BE.Trigger
PERSONALITY_TRAIT = BE.PersonalityTrait
PHYSICAL_CHANGE = BE.PhysicalChange
PHYSIOLOGICAL_CHANGE = BE.PhysiologicalChange
PSYCHOPATHOLOGY = BE.Psychopathology
SELECTIVE_FILTER_PERIOD = BE.SelectiveFilterPeriod
SIGNAL = BE.Signal

# BE properties
EMOTIONAL_TENDENCY_TOWARDS = BE.emotionalTendencyTowards
HAS_ANTIDOTE = BE.hasAntidote
HAS_IMPEDIMENT = BE.hasImpediment
HAS_PRE_CONDITION = BE.hasPreCondition
MORE_INTENSE_THAN = BE.moreIntenseThan
LESS_INTENSE_THAN = BE.lessIntenseThan
HAS_POLARITY = BE.hasPolarity
HAS_PERSONALITY_TRAIT = BE.hasPersonalityTrait
HAS_ACTION = BE.hasAction
INCLUDES_SIGNAL_OF = BE.includesSignalOf

# polarity values
NEGATIVE = BE.NegativePolarity
POSITIVE = BE.PositivePolarity
NEUTRAL = BE.NeutralPolarity
POLARITY_NAMES = {NEGATIVE: "negative", POSITIVE: "positive", NEUTRAL: "neutral"}

# the six top emotions of the BE module
ANGER = BE.Anger
DISGUST = BE.Disgust
ENJOYMENT = BE.Enjoyment
FEAR = BE.Fear
SADNESS = BE.Sadness
SURPRISE = BE.Surprise
BASIC_EMOTIONS = (ANGER, DISGUST, ENJOYMENT, FEAR, SADNESS, SURPRISE)

TYPE = RDF.type
SUBCLASS_OF = RDFS.subClassOf
LABEL = RDFS.label
COMMENT = RDFS.comment

def emotion(name):
    """``"Fear"``, ``"fear"`` or ``"be:Fear"`` -> ``BE.Fear``."""
    if isinstance(name, str) and ":" in name:
        from ..rdf.namespaces import expand

        return expand(name)
    if not isinstance(name, str):
        return name
    for e in BASIC_EMOTIONS:
        if e.value.rsplit("/", 1)[1].lower() == name.lower():
            return e
    return BE[name]


def local_name(term):
    value = term.value
    for sep in ("#", "/"):
        if sep in value:
            value = value.rsplit(sep, 1)[1]
    return value

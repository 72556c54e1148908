"""Bundled EmoCore and BE modules, closure reasoning and consistency rules."""

from . import vocab
from .consistency import ConsistencyReport, Violation, check_consistency
from .cq import answer_cq
from .frames import EmotionFrame, emotion_frame
from .loader import closed_ontology, load_bundled_ontology
from .reasoner import infer_closures

__all__ = [
    "ConsistencyReport", "EmotionFrame", "Violation", "answer_cq", "check_consistency",
    "closed_ontology", "emotion_frame", "infer_closures", "load_bundled_ontology", "vocab",
]

"""Graph-based emotion detection from text."""

from .graph import (EmotionProfile, Node, SentenceGraph, TriggerIndex, annotate,
                    build_sentence_graph, detect, profile)
from .text import lemmatize, tokenize

__all__ = [
    "EmotionProfile", "Node", "SentenceGraph", "TriggerIndex", "annotate",
    "build_sentence_graph", "detect", "lemmatize", "profile", "tokenize",
]

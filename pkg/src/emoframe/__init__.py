"""Emotion-frame knowledge graphs: ontology, trigger population, detection."""

__version__ = "0.1.0"

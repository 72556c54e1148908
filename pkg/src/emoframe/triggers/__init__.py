"""Trigger knowledge-graph population by query expansion."""

from .expand import build_trigger_kg, expand, expand_emotion, materialize, source_counts, step_counts
from .model import SOURCES, STEPS, StartingLexicalMaterial, TriggerRecord, source_of
from .remote import fetch_remote
from .snapshot import SCHEMA, load_manifest, load_snapshot, validate_snapshot

__all__ = [
    "SCHEMA", "SOURCES", "STEPS", "StartingLexicalMaterial", "TriggerRecord",
    "build_trigger_kg", "expand", "expand_emotion", "fetch_remote", "load_manifest",
    "load_snapshot", "materialize", "source_counts", "source_of", "step_counts",
    "validate_snapshot",
]

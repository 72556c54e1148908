"""Transposition of CREMA-D and FER+ annotation tables into emotion-situation graphs.

CREMA-D input follows the tabulated-votes layout (columns A, D, F, H, N, S
and fileName; others are ignored). FER+ input follows the fer2013new layout
(Usage, Image name, then one tally column per label). Vote counts are used
directly as emotion values.
"""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass

from .errors import MultimodalError
from .ontology import vocab as V
from .query import evaluate, parse_query
from .rdf.graph import Graph
from .rdf.namespaces import manifest
from .rdf.terms import IRI, Triple, float_literal

log = logging.getLogger(__name__)

NEUTRAL = V.BE.Neutral

CREMA_COLUMNS = {
    "A": V.ANGER,
    "D": V.DISGUST,
    "F": V.FEAR,
    "H": V.ENJOYMENT,
    "N": NEUTRAL,
    "S": V.SADNESS,
}
FERPLUS_COLUMNS = {
    "neutral": NEUTRAL,
    "happiness": V.ENJOYMENT,
    "surprise": V.SURPRISE,
    "sadness": V.SADNESS,
    "anger": V.ANGER,
    "disgust": V.DISGUST,
    "fear": V.FEAR,
}
# present in FER+ but not modelled; their votes are dropped at load time
FERPLUS_DROPPED = ("contempt", "unknown")

DATASETS = {
    "crema": {"modality": "audio", "namespace": V.CR, "id_column": "fileName", "columns": CREMA_COLUMNS},
    "ferplus": {"modality": "image", "namespace": V.FER, "id_column": "Image name", "columns": FERPLUS_COLUMNS},
}


@dataclass(frozen=True)
class AnnotatedItem:
    id: str
    modality: str
    values: dict

    def __post_init__(self):
        if not self.values:
            raise MultimodalError(f"{self.id}: no emotion values")
        for emotion, v in self.values.items():
            if v < 0:
                raise MultimodalError(f"{self.id}: negative value {v} for {V.local_name(emotion)}")

    def positive(self):
        return {e: v for e, v in self.values.items() if v > 0}


def _dataset(name):
    try:
        return DATASETS[name]
    except KeyError:
        raise MultimodalError(f"unknown dataset {name!r}; expected one of {', '.join(DATASETS)}") from None


def value_predicate(emotion):
    """``fer:has<Emotion>Value``, shared by both datasets."""
    return V.FER[f"has{V.local_name(emotion)}Value"]


def item_iri(item_id, dataset):
    return _dataset(dataset)["namespace"][item_id]


def _ferplus_id(name):
    stem = name[:-4] if name.lower().endswith(".png") else name
    return stem[3:] if stem.startswith("fer") else stem


def load_annotations(path, dataset):
    """Read a dataset CSV into annotated items, in file order."""
    spec = _dataset(dataset)
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            rows = list(reader)
    except OSError as exc:
        raise MultimodalError(f"cannot read {path}: {exc.strerror or exc}") from exc
    required = [spec["id_column"], *spec["columns"]]
    if dataset == "ferplus":
        required += list(FERPLUS_DROPPED)
    missing = [c for c in required if c not in header]
    if missing:
        raise MultimodalError(f"{path}: column mismatch, missing {', '.join(missing)}")

    items = []
    dropped = {c: 0 for c in FERPLUS_DROPPED}
    for lineno, row in enumerate(rows, 2):
        raw_id = (row[spec["id_column"]] or "").strip()
        if not raw_id:
            log.warning("%s line %d: empty id; skipped", path, lineno)
            continue
        item_id = _ferplus_id(raw_id) if dataset == "ferplus" else raw_id
        values = {}
        for column, emotion in spec["columns"].items():
            try:
                values[emotion] = float(row[column])
            except (TypeError, ValueError):
                raise MultimodalError(f"{path} line {lineno}: bad value {row[column]!r} in {column}") from None
        if dataset == "ferplus":
            for column in FERPLUS_DROPPED:
                try:
                    if float(row[column]) > 0:
                        dropped[column] += 1
                except (TypeError, ValueError):
                    pass
        items.append(AnnotatedItem(item_id, spec["modality"], values))
    if any(dropped.values()):
        log.info("%s: dropped %s", path, ", ".join(f"{n} rows with {c} votes" for c, n in dropped.items()))
    return items


def transpose(items, dataset):
    """Emotion-situation graph: per item a type triple, then a value and a
    signal triple for every emotion with a positive value."""
    ns = _dataset(dataset)["namespace"]
    g = Graph(prefixes=manifest())
    seen = set()
    for item in items:
        if item.id in seen:
            raise MultimodalError(f"duplicate item id {item.id}")
        seen.add(item.id)
        subject = ns[item.id]
        g.add(Triple(subject, V.TYPE, V.EMOTION_SITUATION))
        for emotion, value in item.positive().items():
            g.add(Triple(subject, value_predicate(emotion), float_literal(value)))
            g.add(Triple(subject, V.INCLUDES_SIGNAL_OF, emotion))
    return g


def _constraint_pairs(constraints):
    pairs = constraints.items() if isinstance(constraints, dict) else constraints
    return [(V.emotion(e), float(t)) for e, t in pairs]


def multi_emotion_query(constraints):
    """SPARQL text selecting situations above every (emotion, threshold)."""
    lines = ["SELECT DISTINCT ?item WHERE {", "  ?item rdf:type efo:EmotionSituation ."]
    filters = []
    for i, (emotion, threshold) in enumerate(_constraint_pairs(constraints)):
        lines.append(f"  ?item <{value_predicate(emotion).value}> ?v{i} .")
        filters.append(f"  FILTER(?v{i} > {threshold!r})")
    return "\n".join(lines + filters + ["}"]) + "\n"


def _local_id(term):
    for ns in (V.FER, V.CR):
        if term in ns:
            return term.value[len(str(ns)):]
    return term.value


def query_multi_emotion(graph, constraints):
    """Ids of situations whose value exceeds every threshold, sorted."""
    table = evaluate(parse_query(multi_emotion_query(constraints)), graph)
    return sorted(_local_id(t) for t in table.column("item") if isinstance(t, IRI))


def parse_constraint(text):
    """``"Anger=3"`` -> (be:Anger, 3.0)."""
    name, sep, value = text.partition("=")
    if not sep:
        raise MultimodalError(f"constraint {text!r} is not EMOTION=THRESHOLD")
    try:
        return V.emotion(name.strip()), float(value)
    except ValueError:
        raise MultimodalError(f"threshold in {text!r} is not a number") from None

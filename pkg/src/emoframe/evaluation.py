"""Corpus loading and the precision / recall / F1 / Pearson metric suite.

Corpora are TSV files with columns id, text, emotion, intensity (a header
row is optional). Evaluation runs per gold emotion: every instance of a
file shares one label, so a detection of that label is always a true
positive and precision is 100 as soon as anything is detected.
"""

from __future__ import annotations

import csv
import json
import logging
import math
import statistics
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

from .errors import DetectionError, EvaluationError, UndefinedCorrelationError
from .ontology import vocab as V
from .rdf.graph import Graph

log = logging.getLogger(__name__)

LABELS = {
    "anger": V.ANGER,
    "fear": V.FEAR,
    "sadness": V.SADNESS,
    "joy": V.ENJOYMENT,
    "enjoyment": V.ENJOYMENT,
}
# row order of the report table
REPORT_ORDER = (V.ANGER, V.FEAR, V.SADNESS, V.ENJOYMENT)

NOTES = (
    "precision is 100 whenever at least one detection occurs: all gold labels in a file are the target, "
    "so there are no false positives",
    "recall = detections / sentences with a graph",
    "pearson r compares min-max normalized target counts with gold intensity over sentences with a graph",
)


@dataclass(frozen=True)
class LabeledInstance:
    id: str
    text: str
    emotion: object
    intensity: float

    def __post_init__(self):
        if not 0.0 <= self.intensity <= 1.0:
            raise EvaluationError(f"{self.id}: intensity {self.intensity} outside [0, 1]")


def parse_label(label):
    try:
        return LABELS[label.strip().lower()]
    except KeyError:
        raise EvaluationError(f"unknown emotion label {label!r}") from None


def read_corpus(path):
    """Parse a corpus file; return (instances, number of skipped rows)."""
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            rows = list(csv.reader(fh, delimiter="\t", quoting=csv.QUOTE_NONE))
    except OSError as exc:
        raise EvaluationError(f"cannot read corpus {path}: {exc.strerror or exc}") from exc
    if rows and [c.strip().lower() for c in rows[0]] == ["id", "text", "emotion", "intensity"]:
        rows = rows[1:]
    instances = []
    seen = set()
    skipped = 0
    for lineno, row in enumerate(rows, 1):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 4:
            log.warning("%s row %d: expected 4 columns, got %d; skipped", path, lineno, len(row))
            skipped += 1
            continue
        ident, text, label, raw = (c.strip() for c in row)
        emotion = parse_label(label)
        try:
            intensity = float(raw)
        except ValueError:
            intensity = math.nan
        if not ident or not text or not 0.0 <= intensity <= 1.0:
            log.warning("%s row %d: bad id, text or intensity %r; skipped", path, lineno, raw)
            skipped += 1
            continue
        if ident in seen:
            log.warning("%s row %d: duplicate id %s; skipped", path, lineno, ident)
            skipped += 1
            continue
        seen.add(ident)
        instances.append(LabeledInstance(ident, text, emotion, intensity))
    if skipped:
        log.warning("%s: %d malformed rows skipped", path, skipped)
    return instances, skipped


def load_corpus(path):
    return read_corpus(path)[0]


def f1_score(precision, recall):
    return 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0


def pearson(xs, ys):
    """Sample Pearson correlation; zero variance is an error, never 0."""
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys):
        raise EvaluationError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise UndefinedCorrelationError("correlation needs at least two points")
    try:
        r = statistics.correlation(xs, ys)
    except statistics.StatisticsError as exc:
        raise UndefinedCorrelationError(f"correlation undefined: {exc}") from exc
    # guard against rounding just outside the interval
    return max(-1.0, min(1.0, r))


def min_max(values):
    values = list(values)
    if not values:
        return []
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.0] * len(values)
    return [(v - lo) / (hi - lo) for v in values]


@dataclass(frozen=True)
class InstanceResult:
    id: str
    intensity: float
    graph_built: bool
    count: int
    score: Optional[float] = None


@dataclass
class EmotionMetrics:
    emotion: str
    instances: int
    graphs: int
    detections: int
    failures: int
    precision: float
    recall: float
    f1: float
    pearson: Optional[float]
    results: list = field(default_factory=list, repr=False)

    def to_dict(self, with_results=True):
        d = asdict(self)
        if with_results:
            d["results"] = [asdict(r) for r in self.results]
        else:
            d.pop("results")
        return d


@dataclass
class MetricsReport:
    rows: list
    notes: tuple = NOTES

    def row(self, emotion):
        name = V.local_name(V.emotion(emotion))
        for r in self.rows:
            if r.emotion == name:
                return r
        raise KeyError(name)

    def to_json(self):
        payload = {"rows": [r.to_dict() for r in self.rows], "notes": list(self.notes)}
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_table(self):
        head = ("Emotion", "Precision", "Recall", "F1 Score", "Pearson Correlation",
                "Graphs", "Detections", "Failures")
        lines = [head]
        for r in self.rows:
            lines.append((r.emotion, f"{r.precision:.2f}", f"{r.recall:.2f}", f"{r.f1:.2f}",
                          "undefined" if r.pearson is None else f"{r.pearson:.2f}",
                          str(r.graphs), str(r.detections), str(r.failures)))
        widths = [max(len(line[i]) for line in lines) for i in range(len(head))]
        out = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in lines]
        out.append("")
        out.extend(f"note: {n}" for n in self.notes)
        return "\n".join(out) + "\n"


def _default_detector():
    from .detector import detect

    return detect


def _prepare(trigger_kg):
    from .detector import TriggerIndex

    return TriggerIndex(trigger_kg) if isinstance(trigger_kg, Graph) else trigger_kg


def evaluate_corpus(instances, detector, trigger_kg, target, jobs=1):
    """Metrics for one file whose gold label is ``target`` throughout.

    ``detector(text, trigger_kg, sentence_id)`` returns (graph, profile) and
    raises :class:`DetectionError` when no graph can be built. A graph
    ``trigger_kg`` is handed to it as a prebuilt ``TriggerIndex``.
    """
    target = V.emotion(target)
    detector = detector or _default_detector()
    mixed = sorted({V.local_name(i.emotion) for i in instances if i.emotion != target})
    if mixed:
        raise EvaluationError(f"corpus mixes gold labels: {', '.join(mixed)} besides {V.local_name(target)}")
    ordered = sorted(instances, key=lambda i: i.id)
    index = _prepare(trigger_kg)

    def run(inst):
        try:
            _, prof = detector(inst.text, index, sentence_id=inst.id)
        except DetectionError:
            return InstanceResult(inst.id, inst.intensity, False, 0)
        return InstanceResult(inst.id, inst.intensity, True, prof[target])

    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run, ordered))
    else:
        results = [run(i) for i in ordered]

    built = [r for r in results if r.graph_built]
    scores = min_max(r.count for r in built)
    scored = iter(scores)
    results = [InstanceResult(r.id, r.intensity, r.graph_built, r.count, next(scored) if r.graph_built else None)
               for r in results]
    detections = sum(1 for r in built if r.count >= 1)
    precision = 100.0 if detections else 0.0
    recall = 100.0 * detections / len(built) if built else 0.0
    try:
        r_value = pearson(scores, [r.intensity for r in built])
    except UndefinedCorrelationError as exc:
        log.warning("%s: %s", V.local_name(target), exc)
        r_value = None
    return EmotionMetrics(
        emotion=V.local_name(target),
        instances=len(results),
        graphs=len(built),
        detections=detections,
        failures=len(results) - len(built),
        precision=precision,
        recall=recall,
        f1=f1_score(precision, recall),
        pearson=r_value,
        results=results,
    )


def evaluate_by_emotion(instances, detector, trigger_kg, jobs=1):
    """Split a corpus by gold label and evaluate each part."""
    index = _prepare(trigger_kg)
    groups = {}
    for inst in instances:
        groups.setdefault(inst.emotion, []).append(inst)
    order = [e for e in REPORT_ORDER if e in groups]
    return MetricsReport([evaluate_corpus(groups[e], detector, index, e, jobs) for e in order])


def evaluate_file(path, trigger_kg=None, detector=None, jobs=1):
    if trigger_kg is None:
        from .triggers import build_trigger_kg

        trigger_kg = build_trigger_kg()
    return evaluate_by_emotion(load_corpus(Path(path)), detector, trigger_kg, jobs)

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from emoframe import assets
from emoframe.errors import EvaluationError, NoContentError, UndefinedCorrelationError
from emoframe.evaluation import (LabeledInstance, evaluate_corpus, evaluate_file, f1_score, load_corpus,
                                 min_max, pearson, read_corpus)
from emoframe.ontology import vocab as V
from emoframe.detector.graph import EmotionProfile


def test_f1_oracle():
    # harmonic mean worked by hand: 2*100*50/150
    assert f1_score(100, 50) == pytest.approx(66.6667, abs=1e-4)
    assert f1_score(0, 0) == 0.0
    assert f1_score(100, 100) == 100.0


@pytest.mark.parametrize("recall, f1", [(34.6, 51.41), (34.76, 51.59), (28.41, 44.25)])
def test_f1_reproduces_reported_rows(recall, f1):
    assert abs(f1_score(100, recall) - f1) <= 0.01


def test_pearson_oracle():
    assert pearson([1, 2, 3, 4], [2, 1, 4, 3]) == pytest.approx(0.6)
    assert pearson([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)
    with pytest.raises(UndefinedCorrelationError):
        pearson([1, 1, 1], [1, 2, 3])
    with pytest.raises(UndefinedCorrelationError):
        pearson([1], [1])
    with pytest.raises(EvaluationError):
        pearson([1, 2], [1, 2, 3])


vectors = st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=3, max_size=30)


@settings(max_examples=100, deadline=None)
@given(vectors, st.data(), st.floats(0.1, 50), st.floats(-100, 100))
def test_pearson_affine_invariance(xs, data, a, b):
    ys = data.draw(st.lists(st.floats(-1e3, 1e3, allow_nan=False), min_size=len(xs), max_size=len(xs)))
    assume(max(xs) - min(xs) > 1e-3 and max(ys) - min(ys) > 1e-3)
    r = pearson(xs, ys)
    assert -1.0 <= r <= 1.0
    assert abs(pearson([a * x + b for x in xs], ys) - r) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(0, 10), min_size=1, max_size=20))
def test_min_max_range(values):
    scaled = min_max(values)
    assert all(0.0 <= v <= 1.0 for v in scaled)
    if max(values) > min(values):
        assert min(scaled) == 0.0 and max(scaled) == 1.0


def _write(tmp_path, text):
    p = tmp_path / "corpus.tsv"
    p.write_text(text, encoding="utf-8")
    return p


def test_corpus_edge_cases(tmp_path):
    p = _write(tmp_path, "id\ttext\temotion\tintensity\n"
                         "1\tI am afraid\tfear\t0.5\n"
                         "2\ttoo\tmany\tcolumns\there\n"
                         "3\tbad intensity\tfear\t1.7\n"
                         "1\tduplicate\tfear\t0.2\n"
                         "\n"
                         "4\tscared\tFEAR\t0\n")
    instances, skipped = read_corpus(p)
    assert [i.id for i in instances] == ["1", "4"]
    assert skipped == 3
    assert load_corpus(p)[1].emotion == V.FEAR
    with pytest.raises(EvaluationError):
        load_corpus(_write(tmp_path, "1\ttext\tboredom\t0.5\n"))
    with pytest.raises(EvaluationError):
        load_corpus(tmp_path / "absent.tsv")
    with pytest.raises(EvaluationError):
        LabeledInstance("x", "t", V.FEAR, 2.0)


def _stub(counts):
    """A detector answering from a table of counts; None means no graph."""
    def detector(text, kg, sentence_id):
        n = counts[text]
        if n is None:
            raise NoContentError("nothing left")
        return None, EmotionProfile({V.FEAR: tuple(range(n))} if n else {})
    return detector


def test_metric_definitions():
    instances = [LabeledInstance(str(i), t, V.FEAR, x)
                 for i, (t, x) in enumerate([("a", 0.1), ("b", 0.5), ("c", 0.9), ("d", 0.3)])]
    m = evaluate_corpus(instances, _stub({"a": 0, "b": 1, "c": 3, "d": None}), None, V.FEAR)
    assert (m.graphs, m.detections, m.failures) == (3, 2, 1)
    assert m.precision == 100.0
    assert m.recall == pytest.approx(200 / 3)
    assert m.pearson == pytest.approx(pearson([0, 1 / 3, 1], [0.1, 0.5, 0.9]))


def test_no_detection_means_zero_precision_and_undefined_r():
    instances = [LabeledInstance(str(i), "a", V.FEAR, 0.5) for i in range(3)]
    m = evaluate_corpus(instances, _stub({"a": 0}), None, V.FEAR)
    assert (m.precision, m.recall, m.f1) == (0.0, 0.0, 0.0)
    assert m.pearson is None


def test_mixed_labels_are_rejected():
    instances = [LabeledInstance("1", "a", V.FEAR, 0.5), LabeledInstance("2", "a", V.ANGER, 0.5)]
    with pytest.raises(EvaluationError):
        evaluate_corpus(instances, _stub({"a": 1}), None, V.FEAR)


def test_mini_corpus_report(trigger_kg):
    path = assets.path("corpus/mini_wassa.tsv")
    report = evaluate_file(path, trigger_kg)
    assert [r.emotion for r in report.rows] == ["Anger", "Fear", "Sadness", "Enjoyment"]
    for r in report.rows:
        assert r.instances == 10 and r.failures == 1
        assert r.precision == 100.0
        assert r.pearson is not None and not math.isnan(r.pearson)
    assert report.row("fear").recall == pytest.approx(700 / 9)


def test_report_is_byte_identical_across_runs(trigger_kg):
    path = assets.path("corpus/mini_wassa.tsv")
    runs = [evaluate_file(path, trigger_kg, jobs=j) for j in (1, 4, 1)]
    assert len({r.to_json() for r in runs}) == 1
    assert len({r.to_table() for r in runs}) == 1

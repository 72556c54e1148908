import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emoframe import assets
from emoframe.errors import AssetError, ClosureCycleError, FrameError, OntologyError
from emoframe.ontology import (answer_cq, check_consistency, emotion_frame, infer_closures,
                               load_bundled_ontology)
from emoframe.ontology import vocab as V
from emoframe.rdf import Graph, IRI, Literal, Triple

BE = V.BE
FEAR_CHAIN = ["Trepidation", "Nervousness", "Anxiety", "Dread", "Desperation", "Panic", "Horror", "Terror"]
DISGUST_CHAIN = ["Dislike", "Aversion", "Distaste", "Repugnance", "Revulsion", "Abhorrence", "Loathing"]
FEAR_DISORDERS = {"AvoidantPersonalityDisorder", "GeneralizedAnxietyDisorder", "ObsessiveCompulsiveDisorder",
                  "PostTraumaticStressDisorder", "SocialAnxietyDisorder"}
FEAR_ANTIDOTES = {"AnxietyAntidote", "DreadAntidote", "HorrorAntidote", "NervousnessAntidote",
                  "PanicAntidote", "TrepidationAntidote"}


def names(terms):
    return {V.local_name(t) for t in terms}


# --- random intensity chains -------------------------------------------------------------

@st.composite
def chains(draw):
    """A hidden total order plus a random set of assertions that pins it down."""
    n = draw(st.integers(2, 10))
    order = draw(st.permutations(range(n)))
    members = [IRI(f"http://example.org/c#S{i}") for i in order]
    pairs = {(i, i + 1) for i in range(n - 1)}
    pairs |= set(draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                               .filter(lambda p: p[0] < p[1]).map(tuple), max_size=n)))
    g = Graph()
    root = IRI("http://example.org/c#E")
    g.add(Triple(root, V.SUBCLASS_OF, V.BE_EMOTION))
    g.add(Triple(root, V.HAS_POLARITY, V.NEGATIVE))
    for m in members:
        g.add(Triple(m, V.SUBCLASS_OF, root))
    for i, j in sorted(pairs):
        # members[i] is more intense than members[j]; say it either way round
        if draw(st.booleans()):
            g.add(Triple(members[i], V.MORE_INTENSE_THAN, members[j]))
        else:
            g.add(Triple(members[j], V.LESS_INTENSE_THAN, members[i]))
    return g, root, members


@settings(max_examples=100, deadline=None)
@given(chains())
def test_closure_yields_all_ordered_pairs(case):
    g, root, members = case
    n = len(members)
    closed = infer_closures(g)
    more = {(s, o) for s, _, o in closed.match(None, V.MORE_INTENSE_THAN, None)}
    less = {(s, o) for s, _, o in closed.match(None, V.LESS_INTENSE_THAN, None)}
    assert len(more) == n * (n - 1) // 2
    assert more == {(members[i], members[j]) for i in range(n) for j in range(i + 1, n)}
    assert less == {(b, a) for a, b in more}
    assert emotion_frame(closed, root).sub_emotions == tuple(members)
    assert len(answer_cq(closed, 5, root)) == n * (n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(chains())
def test_closure_is_idempotent_and_inherits_polarity(case):
    g, root, members = case
    closed = infer_closures(g)
    assert infer_closures(closed) == closed
    for m in members:
        assert closed.objects(m, V.HAS_POLARITY) == {V.NEGATIVE}
        assert (m, V.SUBCLASS_OF, V.BE_EMOTION) in closed


@settings(max_examples=50, deadline=None)
@given(chains())
def test_reversed_edge_is_a_cycle(case):
    g, root, members = case
    g.add(Triple(members[-1], V.MORE_INTENSE_THAN, members[0]))
    with pytest.raises(ClosureCycleError) as info:
        infer_closures(g)
    assert info.value.cycle[0] == info.value.cycle[-1]
    report = check_consistency(g)
    assert len(report.by_rule("R1")) == 1


def test_subclass_cycle_is_rejected():
    a, b = IRI("http://example.org/c#A"), IRI("http://example.org/c#B")
    with pytest.raises(ClosureCycleError):
        infer_closures(Graph([Triple(a, V.SUBCLASS_OF, b), Triple(b, V.SUBCLASS_OF, a)]))


# --- bundled ontology --------------------------------------------------------------------

def test_modules_load():
    core = load_bundled_ontology("emocore")
    be = load_bundled_ontology("be")
    both = load_bundled_ontology("all")
    assert len(both) == len(set(core) | set(be))
    with pytest.raises(AssetError):
        load_bundled_ontology("nope")


def test_missing_and_corrupt_assets_raise(tmp_path):
    assets.set_root(tmp_path)
    with pytest.raises(AssetError):
        load_bundled_ontology("be")
    (tmp_path / "be.ttl").write_text("this is not turtle", encoding="utf-8")
    with pytest.raises(AssetError):
        load_bundled_ontology("be")


def test_fear_frame(closed):
    f = emotion_frame(closed, "Fear")
    assert [V.local_name(s) for s in f.sub_emotions] == FEAR_CHAIN
    assert f.polarity == "negative"
    assert names(f.psychopathologies) == FEAR_DISORDERS
    assert names(f.counters.values()) == FEAR_ANTIDOTES
    assert V.local_name(f.personality_trait) == "FearPersonality"
    assert f.personality_description.startswith("A shy or timid person.")
    assert len(f.intensity_pairs()) == 28
    assert json.dumps(f.to_dict())


def test_disgust_frame(closed):
    f = emotion_frame(closed, BE.Disgust)
    assert [V.local_name(s) for s in f.sub_emotions] == DISGUST_CHAIN


def test_every_basic_emotion_has_a_frame(closed):
    for e in V.BASIC_EMOTIONS:
        f = emotion_frame(closed, e)
        assert f.sub_emotions
    assert emotion_frame(closed, "Surprise").polarity == "neutral"
    assert emotion_frame(closed, "Enjoyment").polarity == "positive"


def test_frame_rejects_non_basic(closed):
    with pytest.raises(FrameError):
        emotion_frame(closed, BE.Mood)


def test_frame_needs_closure():
    with pytest.raises(FrameError):
        emotion_frame(load_bundled_ontology(), "Fear")


def test_intensity_direction(closed):
    assert (BE.Trepidation, V.MORE_INTENSE_THAN, BE.Terror) in closed
    assert (BE.Dread, V.LESS_INTENSE_THAN, BE.Anxiety) in closed
    assert (BE.Terror, V.MORE_INTENSE_THAN, BE.Trepidation) not in closed


def test_anxiety_antidote_comment(closed):
    assert closed.value(BE.AnxietyAntidote, V.COMMENT) == Literal(
        "Making a special effort of letting go of ruminations about the past and anticipations of the future.")


def test_competency_questions(closed):
    assert len(answer_cq(closed, 1)) == 6
    assert len(answer_cq(closed, 2)) == 6
    assert names(answer_cq(closed, 3, "Fear").column("psychopathology")) == FEAR_DISORDERS
    cq4 = answer_cq(closed, 4, "Fear")
    assert names(cq4.column("counter")) == FEAR_ANTIDOTES
    assert len(answer_cq(closed, 5, "Fear")) == 28
    assert len(answer_cq(closed, 5, "Disgust")) == 21
    with pytest.raises(OntologyError):
        answer_cq(closed, 5)
    with pytest.raises(OntologyError):
        answer_cq(closed, 6)


def test_bundled_ontology_is_consistent(closed):
    report = check_consistency(closed)
    assert report.passed, report.to_json_lines()
    assert report.summary() == "0 violations"
    assert check_consistency(load_bundled_ontology()).passed


def test_one_r1_violation_on_injected_inverse(closed):
    g = closed.copy()
    g.add(Triple(BE.Terror, V.MORE_INTENSE_THAN, BE.Trepidation))
    report = check_consistency(g)
    assert [v.rule for v in report.violations] == ["R1"]
    line = json.loads(report.to_json_lines())
    assert line["rule"] == "R1"


@pytest.mark.parametrize("triple, rule", [
    (Triple(BE.Joy, V.HAS_ANTIDOTE, BE.AnxietyAntidote), "R2"),
    (Triple(BE.Anxiety, V.HAS_IMPEDIMENT, BE.AnxietyAntidote), "R2"),
    (Triple(BE.Panic, V.HAS_POLARITY, V.POSITIVE), "R3"),
    (Triple(BE.Fear, V.EMOTIONAL_TENDENCY_TOWARDS, BE.Sadness), "R4"),
    (Triple(BE.Panic, V.HAS_ANTIDOTE, BE.Unknown), "R5"),
])
def test_each_rule_fires(closed, triple, rule):
    g = closed.copy()
    g.add(triple)
    assert check_consistency(g).by_rule(rule)

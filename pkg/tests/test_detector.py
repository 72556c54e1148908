import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emoframe.detector import TriggerIndex, annotate, build_sentence_graph, detect, lemmatize, tokenize
from emoframe.errors import EmptyTextError, NoContentError
from emoframe.ontology import vocab as V
from emoframe.rdf import Graph, Triple
from emoframe.rdf.namespaces import expand

COSPLAY = "Cosplaying properly for the first time on Saturday! Pretty nervous..."
WENGER = ("The immense importance of football is sometimes scary. When you don’t win you are "
          "responsible for so many unhappy people. - Arsene Wenger")
WORDS = ["nervous", "scary", "unhappy", "fuming", "blood", "boiling", "cold", "feet", "the", "football",
         "happy", "joy", "grief", "afraid", "anger", "win", "pretty", "so", "!", "...", "Dread", "loathing"]


@pytest.fixture(scope="module")
def index(trigger_kg):
    return TriggerIndex(trigger_kg)


def test_cosplay_sentence_evokes_fear_on_nervous(index):
    sg, prof = detect(COSPLAY, index)
    assert prof.to_dict() == {"Fear": 1}
    [(node, emotion)] = sg.evocations()
    assert emotion == V.FEAR
    assert node.surface == "nervous"
    assert node.sense == expand("wn:synset-nervous-adjectivesatellite-1")


def test_wenger_sentence_evokes_sadness_and_fear(index):
    _, prof = detect(WENGER, index)
    assert prof[V.SADNESS] >= 1 and prof[V.FEAR] >= 1


@pytest.mark.parametrize("text, emotion, count", [
    ("He got cold feet at the altar", V.FEAR, 1),
    ("She was fuming about the delay", V.ANGER, 1),
    ("My blood was boiling", V.ANGER, 2),
])
def test_label_phrases(index, text, emotion, count):
    _, prof = detect(text, index)
    assert prof[emotion] == count


def test_graph_vocabulary(index):
    sg, _ = detect(COSPLAY, index, sentence_id="fig2")
    assert sg.node("nervous").lemma == "nervous"
    assert "the" not in {n.surface.lower() for n in sg.nodes}
    assert sg.graph.count(None, V.TRIGGERS, None) == 1
    assert all(COSPLAY[n.start:n.end] == n.surface for n in sg.nodes)


def test_empty_and_contentless_text(index):
    with pytest.raises(EmptyTextError):
        detect("   ", index)
    with pytest.raises(NoContentError):
        detect("the and of, to!", index)


def test_lemmatizer():
    assert lemmatize("fuming") == "fume"
    assert lemmatize("boiling") == "boil"
    assert lemmatize("feet") == "foot"
    assert lemmatize("Nervous") == "nervous"
    assert lemmatize("xyzzyed") == "xyzzyed"


@settings(max_examples=100, deadline=None)
@given(st.text(max_size=80))
def test_token_offsets_cover_surfaces(text):
    for tok in tokenize(text):
        assert text[tok.start:tok.end] == tok.surface
        assert not any(c.isspace() or c.isdecimal() or c == "_" for c in tok.surface)


sentences = st.lists(st.sampled_from(WORDS), min_size=1, max_size=12).map(" ".join)


@settings(max_examples=100, deadline=None)
@given(sentences, st.data())
def test_removing_triggers_never_increases_counts(trigger_kg, index, text, data):
    triggers = sorted(trigger_kg.subjects(V.TRIGGERS, None), key=lambda t: t.value)
    drop = set(data.draw(st.lists(st.sampled_from(triggers), max_size=40)))
    smaller = Graph(t for t in trigger_kg if t.subject not in drop)
    try:
        sg = build_sentence_graph(text)
    except NoContentError:
        return
    full = annotate(sg, index)
    less = annotate(sg, smaller)
    assert set(less.graph.match(None, V.TRIGGERS, None)) <= set(full.graph.match(None, V.TRIGGERS, None))


@settings(max_examples=100, deadline=None)
@given(sentences)
def test_counts_are_bounded_and_deterministic(index, text):
    try:
        sg, prof = detect(text, index)
    except NoContentError:
        return
    again = detect(text, index)[0]
    assert sg.graph == again.graph
    for emotion, count in prof.counts.items():
        assert 0 < count <= len(sg.nodes)
        assert emotion in V.BASIC_EMOTIONS

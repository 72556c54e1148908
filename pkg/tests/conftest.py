"""Shared fixtures and hypothesis strategies."""

import pytest
from hypothesis import strategies as st

from emoframe import assets
from emoframe.rdf import BNode, Graph, IRI, Literal, Triple
from emoframe.rdf.terms import XSD_DECIMAL, XSD_INTEGER, XSD_STRING

EX = "http://example.org/t#"

iris = st.sampled_from([IRI(EX + n) for n in ("a", "b", "c", "d", "e", "f")])
predicates = st.sampled_from([IRI(EX + n) for n in ("p", "q", "r")])
bnodes = st.sampled_from([BNode(n) for n in ("b0", "b1", "b2")])
_text = st.text(st.characters(blacklist_categories=("Cs",), min_codepoint=0x20), max_size=12)
literals = st.one_of(
    _text.map(Literal),
    st.builds(Literal, _text, st.just(None), st.sampled_from(["en", "it", "en-gb"])),
    st.integers(-50, 50).map(lambda i: Literal(str(i), XSD_INTEGER)),
    st.decimals(-10, 10, places=2).map(lambda d: Literal(str(d), XSD_DECIMAL)),
    _text.map(lambda s: Literal(s, XSD_STRING)),
)
subjects = st.one_of(iris, bnodes)
objects = st.one_of(iris, bnodes, literals)
triples = st.builds(Triple, subjects, predicates, objects)
graphs = st.lists(triples, max_size=60).map(lambda ts: Graph(ts))


@pytest.fixture(autouse=True)
def _default_assets():
    """Tests never leak an asset-root override into each other."""
    assets.set_root(None)
    yield
    assets.set_root(None)


@pytest.fixture(scope="session")
def closed():
    from emoframe.ontology import closed_ontology

    return closed_ontology()


@pytest.fixture(scope="session")
def trigger_kg():
    from emoframe.triggers import build_trigger_kg

    return build_trigger_kg()


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)

"""Query engine against a brute-force all-bindings enumerator."""

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from emoframe.errors import QuerySyntaxError, UnsupportedFeatureError
from emoframe.query import parse_query, run_query
from emoframe.rdf import BNode, Graph, IRI, Literal, Triple
from emoframe.rdf.terms import XSD_INTEGER

EX = "http://example.org/q#"
NODES = [IRI(EX + n) for n in ("a", "b", "c", "d", "e")]
PREDS = [IRI(EX + n) for n in ("p", "q", "r")]
LITS = [Literal(str(i), XSD_INTEGER) for i in (1, 2, 3)] + [Literal("bob"), Literal("abba")]
POOL = NODES + PREDS + LITS
VARS = ["x", "y", "z"]

small_graphs = st.lists(
    st.builds(Triple, st.sampled_from(NODES), st.sampled_from(PREDS), st.sampled_from(NODES + LITS)),
    max_size=200,
).map(Graph)

position = st.one_of(st.sampled_from(VARS).map(lambda v: ("var", v)),
                     st.sampled_from(NODES).map(lambda t: ("const", t)))
obj_position = st.one_of(position, st.sampled_from(LITS).map(lambda t: ("const", t)))
pred_position = st.one_of(
    st.sampled_from(PREDS).map(lambda t: ("const", (t,))),
    st.lists(st.sampled_from(PREDS), min_size=2, max_size=3, unique=True).map(lambda ts: ("const", tuple(ts))),
    st.sampled_from(VARS).map(lambda v: ("var", v)),
)
patterns = st.tuples(position, pred_position, obj_position)
filters = st.one_of(
    st.tuples(st.just("cmp"), st.sampled_from(VARS), st.sampled_from([">", ">=", "<", "<=", "=", "!="]),
              st.integers(0, 4)),
    st.tuples(st.just("regex"), st.sampled_from(VARS), st.sampled_from(["b", "ab", "#c", "zz"])),
)
queries = st.tuples(st.lists(patterns, min_size=2, max_size=4), st.lists(filters, max_size=2), st.booleans())


def _render(term):
    if isinstance(term, IRI):
        return f"<{term.value}>"
    if term.datatype == XSD_INTEGER:
        return term.lexical
    return f'"{term.lexical}"'


def render_query(pats, flts, distinct, selected):
    body = []
    for s, p, o in pats:
        ps = f"?{p[1]}" if p[0] == "var" else "|".join(_render(t) for t in p[1])
        ss = f"?{s[1]}" if s[0] == "var" else _render(s[1])
        os_ = f"?{o[1]}" if o[0] == "var" else _render(o[1])
        body.append(f"  {ss} {ps} {os_} .")
    for f in flts:
        if f[0] == "cmp":
            body.append(f"  FILTER(?{f[1]} {f[2]} {f[3]})")
        else:
            body.append(f'  FILTER(regex(str(?{f[1]}), "{f[2]}"))')
    head = "SELECT DISTINCT" if distinct else "SELECT"
    return f"{head} {' '.join('?' + v for v in selected)} WHERE {{\n" + "\n".join(body) + "\n}\n"


def _lexical(term):
    return term.value if isinstance(term, IRI) else term.lexical


def _filter_ok(f, term):
    if f[0] == "regex":
        return f[2] in _lexical(term)
    if not isinstance(term, Literal):
        return False
    try:
        v = float(term.lexical)
    except ValueError:
        return False
    t = f[3]
    return {">": v > t, ">=": v >= t, "<": v < t, "<=": v <= t, "=": v == t, "!=": v != t}[f[2]]


def brute_force(graph, pats, flts, distinct, selected):
    """Every assignment of every variable over the whole term pool."""
    used = sorted({x[1] for pat in pats for x in pat if x[0] == "var"})
    rows = Counter()
    for values in itertools.product(POOL, repeat=len(used)):
        b = dict(zip(used, values))
        mult = 1
        for s, p, o in pats:
            st_ = b[s[1]] if s[0] == "var" else s[1]
            ot = b[o[1]] if o[0] == "var" else o[1]
            preds = (b[p[1]],) if p[0] == "var" else p[1]
            n = sum(1 for pr in preds if isinstance(st_, IRI) and isinstance(pr, IRI)
                    and Triple(st_, pr, ot) in graph)
            mult *= n
            if not mult:
                break
        if not mult:
            continue
        if not all(f[1] in b and _filter_ok(f, b[f[1]]) for f in flts):
            continue
        rows[tuple(b[v] for v in selected)] += mult
    if distinct:
        return Counter(set(rows))
    return rows


@settings(max_examples=150, deadline=None)
@given(small_graphs, queries, st.data())
def test_matches_brute_force(graph, q, data):
    pats, flts, distinct = q
    used = sorted({x[1] for pat in pats for x in pat if x[0] == "var"})
    # a filter over a variable no pattern binds removes every solution in both engines
    selected = data.draw(st.lists(st.sampled_from(used), min_size=1, unique=True)) if used else []
    if not selected:
        return
    table = run_query(render_query(pats, flts, distinct, selected), graph)
    assert Counter(table.rows) == brute_force(graph, pats, flts, distinct, selected)


@settings(max_examples=100, deadline=None)
@given(small_graphs, st.lists(st.sampled_from(PREDS), min_size=2, max_size=3, unique=True))
def test_alternation_is_union_of_single_runs(graph, preds):
    alt = "|".join(f"<{p.value}>" for p in preds)
    joined = run_query(f"SELECT ?s ?o WHERE {{ ?s {alt} ?o . }}", graph)
    union = Counter()
    for p in preds:
        union.update(run_query(f"SELECT ?s ?o WHERE {{ ?s <{p.value}> ?o . }}", graph).rows)
    assert Counter(joined.rows) == union


@settings(max_examples=100, deadline=None)
@given(small_graphs, st.lists(patterns, min_size=2, max_size=4), st.randoms())
def test_join_order_does_not_matter(graph, pats, rnd):
    used = sorted({x[1] for pat in pats for x in pat if x[0] == "var"})
    if not used:
        return
    shuffled = list(pats)
    rnd.shuffle(shuffled)
    a = run_query(render_query(pats, [], False, used), graph)
    b = run_query(render_query(shuffled, [], False, used), graph)
    assert a == b


@settings(max_examples=100, deadline=None)
@given(small_graphs, st.sampled_from(PREDS), st.integers(0, 4))
def test_adding_a_filter_never_adds_rows(graph, p, t):
    base = f"SELECT ?s ?o WHERE {{ ?s <{p.value}> ?o . }}"
    narrowed = f"SELECT ?s ?o WHERE {{ ?s <{p.value}> ?o . FILTER(?o > {t}) }}"
    assert set(run_query(narrowed, graph).rows) <= set(run_query(base, graph).rows)


def test_prefixes_filters_and_distinct():
    g = Graph([
        Triple(IRI(EX + "a"), IRI(EX + "p"), Literal("5", XSD_INTEGER)),
        Triple(IRI(EX + "b"), IRI(EX + "p"), Literal("1", XSD_INTEGER)),
        Triple(IRI(EX + "b"), IRI(EX + "q"), Literal("1", XSD_INTEGER)),
    ])
    q = f"""PREFIX ex: <{EX}>
    SELECT DISTINCT ?s WHERE {{ ?s ex:p|ex:q ?v . FILTER(?v >= 1 && ?v < 3) }}"""
    assert run_query(q, g).column("s") == [IRI(EX + "b")]
    q2 = f"PREFIX ex: <{EX}> SELECT ?s WHERE {{ ?s ex:p ?v . FILTER(regex(str(?s), \"Q#A\", \"i\")) }}"
    assert run_query(q2, g).column("s") == [IRI(EX + "a")]


def test_results_render_stably():
    g = Graph([Triple(IRI(EX + "a"), IRI(EX + "p"), BNode("n1"))])
    table = run_query("SELECT ?s ?o WHERE { ?s ?p ?o . }", g)
    assert table.to_tsv() == f"s\to\n<{EX}a>\t_:n1\n"
    assert table.to_records() == [{"s": f"<{EX}a>", "o": "_:n1"}]


@pytest.mark.parametrize("text", [
    "SELECT ?s WHERE { ?s ?p ?o . OPTIONAL { ?s ?p ?o } }",
    "SELECT ?s WHERE { { ?s ?p ?o } UNION { ?o ?p ?s } }",
    "SELECT ?s WHERE { ?s ?p ?o . FILTER(?o > 1 || ?o < 0) }",
    "SELECT ?s WHERE { ?s ?p ?o } ORDER BY ?s",
    "CONSTRUCT { ?s ?p ?o } WHERE { ?s ?p ?o }",
])
def test_unsupported_features_are_named(text):
    with pytest.raises(UnsupportedFeatureError):
        parse_query(text)


@pytest.mark.parametrize("text", [
    "SELECT ?s WHERE { ?s ?p }",
    "SELECT ?s WHERE { ?s nope:p ?o . }",
    "SELECT WHERE { ?s ?p ?o . }",
])
def test_syntax_errors(text):
    with pytest.raises(QuerySyntaxError):
        parse_query(text)

"""Tokenizer, stop-word filter, rule-based lemmatizer and sense lexicon."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .. import assets
from ..rdf.namespaces import expand

# letters only, with inner apostrophes kept ("don't", "don’t")
TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’][^\W\d_]+)*")

# (suffix, replacement) tried in order; a candidate is kept only if the
# lexicon knows it
SUFFIX_RULES = (
    ("ies", "y"),
    ("ied", "y"),
    ("iest", "y"),
    ("ier", "y"),
    ("ily", "y"),
    ("sses", "ss"),
    ("es", ""),
    ("es", "e"),
    ("s", ""),
    ("ed", ""),
    ("ed", "e"),
    ("ing", ""),
    ("ing", "e"),
    ("est", ""),
    ("er", ""),
    ("ly", ""),
)
_DOUBLED = re.compile(r"([bdfgklmnprtz])\1$")


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int

    @property
    def norm(self):
        return self.surface.lower().replace("’", "'")


def tokenize(text):
    return [Token(m.group(), m.start(), m.end()) for m in TOKEN_RE.finditer(text)]


def _lines(name):
    for line in assets.read_text(name).splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            yield line


@lru_cache(maxsize=None)
def _stopwords(root):
    return frozenset(_lines("lexicon/stopwords.txt"))


@lru_cache(maxsize=None)
def _exceptions(root):
    return dict(line.split("\t") for line in _lines("lexicon/lemma_exceptions.tsv"))


@lru_cache(maxsize=None)
def _lexicon(root):
    """lemma -> ((pos, sense IRI), ...) in file order."""
    out = {}
    for line in _lines("lexicon/lexicon.tsv"):
        lemma, pos, sense = line.split("\t")
        out.setdefault(lemma, []).append((pos, expand(sense)))
    return {k: tuple(v) for k, v in out.items()}


def stopwords():
    return _stopwords(str(assets.root()))


def exceptions():
    return _exceptions(str(assets.root()))


def lexicon():
    return _lexicon(str(assets.root()))


def is_stopword(token):
    return token.norm in stopwords()


def lemmatize(word):
    """Lemma of ``word``: exception table, then known lemma, then suffix rules.

    Falls back to the lowercased word when no rule yields a known lemma.
    """
    w = word.lower().replace("’", "'")
    exc = exceptions()
    if w in exc:
        return exc[w]
    vocab = lexicon()
    if w in vocab:
        return w
    for suffix, repl in SUFFIX_RULES:
        if len(w) > len(suffix) + 1 and w.endswith(suffix):
            stem = w[: -len(suffix)]
            cand = stem + repl
            if cand in vocab:
                return cand
            if not repl and _DOUBLED.search(stem) and stem[:-1] in vocab:
                return stem[:-1]
    return w


def guess_pos(word, lemma):
    entries = lexicon().get(lemma)
    if entries:
        return entries[0][0]
    if word.endswith("ly"):
        return "ADV"
    if word.endswith(("ing", "ed")):
        return "VERB"
    return "NOUN"


def first_sense(lemma):
    entries = lexicon().get(lemma)
    return entries[0][1] if entries else None

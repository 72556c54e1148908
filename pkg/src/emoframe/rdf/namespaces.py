"""Prefix manifest handling.

The manifest is a plain two-column TSV (prefix, namespace IRI) and is the
single source of truth for namespace IRIs across the package.
"""

from __future__ import annotations

from functools import lru_cache

from .. import assets
from .terms import IRI


def parse_manifest(text):
    prefixes = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"prefix manifest line {lineno}: expected 2 columns")
        prefix, ns = parts[0].strip(), parts[1].strip()
        if prefix in prefixes and prefixes[prefix] != ns:
            raise ValueError(f"prefix manifest line {lineno}: {prefix!r} bound twice")
        prefixes[prefix] = ns
    return prefixes


@lru_cache(maxsize=None)
def _load(root):
    return parse_manifest((root / "prefixes.tsv").read_text(encoding="utf-8"))


def manifest():
    """Return a fresh copy of the bundled prefix map."""
    return dict(_load(assets.root()))


def ns(prefix):
    return manifest()[prefix]


class Namespace:
    """Attribute and item access to IRIs of one namespace: ``BE.Fear``."""

    def __init__(self, base):
        self._base = base

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        return IRI(self._base + name)

    def __getitem__(self, name):
        return IRI(self._base + name)

    def __str__(self):
        return self._base

    def __contains__(self, term):
        return isinstance(term, IRI) and term.value.startswith(self._base)


def expand(curie, prefixes=None):
    """``"be:Fear"`` -> ``IRI(".../be/Fear")``."""
    prefixes = manifest() if prefixes is None else prefixes
    prefix, _, local = curie.partition(":")
    if prefix not in prefixes:
        raise KeyError(f"undefined prefix {prefix!r}")
    return IRI(prefixes[prefix] + local)


def shorten(iri, prefixes=None):
    """Longest-namespace CURIE for ``iri``; the full IRI in angle brackets otherwise."""
    from .turtle import is_pn_local

    prefixes = manifest() if prefixes is None else prefixes
    value = iri.value if isinstance(iri, IRI) else str(iri)
    best = None
    for prefix, base in prefixes.items():
        if value.startswith(base) and (best is None or len(base) > len(best[1])):
            local = value[len(base):]
            if is_pn_local(local):
                best = (prefix, base)
    if best is None:
        return f"<{value}>"
    return f"{best[0]}:{value[len(best[1]):]}"


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
SKOS = Namespace("http://www.w3.org/2004/02/skos/core#")

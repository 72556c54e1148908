"""Loading the bundled ontology modules."""

from __future__ import annotations

from .. import assets
from ..errors import AssetError, TurtleSyntaxError
from ..rdf.graph import merge
from ..rdf.turtle import parse_turtle

MODULES = {"emocore": ("emocore.ttl",), "be": ("be.ttl",), "all": ("emocore.ttl", "be.ttl")}


def _load(name):
    text = assets.read_text(name)
    try:
        return parse_turtle(text)
    except TurtleSyntaxError as exc:
        raise AssetError(f"corrupt asset {name}: {exc}") from exc


def load_bundled_ontology(module="all"):
    """Parse ``emocore``, ``be`` or ``all`` (their merge) from the asset root."""
    if module not in MODULES:
        raise AssetError(f"unknown ontology module {module!r}; expected one of {', '.join(MODULES)}")
    graphs = [_load(name) for name in MODULES[module]]
    return graphs[0] if len(graphs) == 1 else merge(graphs)


def closed_ontology(module="all"):
    from .reasoner import infer_closures

    return infer_closures(load_bundled_ontology(module))

"""Building a snapshot from a live SPARQL endpoint.

The five expansion queries run concurrently. Each response is cached on
disk under ``<cache_dir>/<key>.json`` where ``key`` is the SHA-256 of the
endpoint URL, the emotion IRI and the SHA-256 of the rendered query text.
Cache files are written to a temporary name and renamed into place, so a
crash never leaves a truncated entry behind.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import requests

from .. import assets
from ..errors import ProtocolError, RemoteFetchError
from ..ontology import vocab as V
from ..rdf.graph import Graph
from ..rdf.namespaces import manifest
from ..rdf.terms import BNode, IRI, Literal, Triple
from .snapshot import (CLOSE_MATCH, CONCEPT_LABEL, FRAME_ELEMENT, LEXICAL_UNIT,
                       RELATED_CONCEPT, SUBSUMES, validate_snapshot)

log = logging.getLogger(__name__)

ENDPOINT_ENV = "EMOFRAME_ENDPOINT"
CACHE_ENV = "EMOFRAME_CACHE"

# query name -> variables every binding must carry
QUERIES = {
    "frames": ("frame", "unit"),
    "frame_elements": ("frame", "element"),
    "lexical": ("frame", "entity"),
    "close_match": ("frame", "entity"),
    "concepts": ("concept", "label"),
}


def default_cache_dir():
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else Path.home() / ".cache" / "emoframe"


def render_query(name, slm):
    units = " ".join(json.dumps(u) for u in slm.units)
    return assets.read_text(f"expansion/{name}.rq").replace("{{UNITS}}", units)


def cache_key(endpoint, emotion, query_text):
    qhash = hashlib.sha256(query_text.encode("utf-8")).hexdigest()
    return hashlib.sha256(f"{endpoint}\n{emotion.value}\n{qhash}".encode("utf-8")).hexdigest()


def _read_cache(path):
    try:
        return json.loads(path.read_text(encoding="utf-8"))["response"]
    except FileNotFoundError:
        return None
    except (ValueError, KeyError):
        log.warning("ignoring unreadable cache entry %s", path)
        return None


def _write_cache(path, entry):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _check_response(name, payload):
    """Validate a SPARQL JSON results document; return its bindings."""
    try:
        head_vars = payload["head"]["vars"]
        bindings = payload["results"]["bindings"]
    except (TypeError, KeyError) as exc:
        raise ProtocolError(f"{name}: not a SPARQL JSON results document") from exc
    if not isinstance(head_vars, list) or not isinstance(bindings, list):
        raise ProtocolError(f"{name}: head.vars and results.bindings must be lists")
    missing = [v for v in QUERIES[name] if v not in head_vars]
    if missing:
        raise ProtocolError(f"{name}: response lacks variables {', '.join(missing)}")
    for row in bindings:
        if not isinstance(row, dict):
            raise ProtocolError(f"{name}: binding is not an object")
        for var in QUERIES[name]:
            if var not in row:
                raise ProtocolError(f"{name}: binding lacks ?{var}")
        for var, cell in row.items():
            if not isinstance(cell, dict) or "value" not in cell or cell.get("type") not in (
                    "uri", "literal", "typed-literal", "bnode"):
                raise ProtocolError(f"{name}: malformed value for ?{var}")
    return bindings


def _term(cell):
    kind = cell["type"]
    if kind == "uri":
        return IRI(cell["value"])
    if kind == "bnode":
        return BNode(cell["value"])
    return Literal(cell["value"])


def _text(cell):
    return Literal(cell["value"].strip().lower())


def bindings_to_triples(name, bindings):
    """Map one query's bindings onto snapshot-schema triples."""
    out = []
    for row in bindings:
        if name == "frames":
            frame = _term(row["frame"])
            out.append(Triple(frame, LEXICAL_UNIT, _text(row["unit"])))
            if "frameLabel" in row:
                out.append(Triple(frame, V.LABEL, Literal(row["frameLabel"]["value"])))
        elif name == "frame_elements":
            out.append(Triple(_term(row["frame"]), FRAME_ELEMENT, _term(row["element"])))
        elif name in ("lexical", "close_match"):
            pred = SUBSUMES if name == "lexical" else CLOSE_MATCH
            entity = _term(row["entity"])
            out.append(Triple(_term(row["frame"]), pred, entity))
            if "label" in row:
                out.append(Triple(entity, V.LABEL, Literal(row["label"]["value"])))
        else:
            concept = _term(row["concept"])
            out.append(Triple(concept, CONCEPT_LABEL, _text(row["label"])))
            if "related" in row:
                related = _term(row["related"])
                out.append(Triple(concept, RELATED_CONCEPT, related))
                if "relatedLabel" in row:
                    out.append(Triple(related, CONCEPT_LABEL, _text(row["relatedLabel"])))
    return out


def _post(endpoint, query, timeout):
    resp = requests.post(
        endpoint,
        data={"query": query},
        headers={"Accept": "application/sparql-results+json"},
        timeout=timeout,
    )
    if resp.status_code >= 500:
        raise requests.HTTPError(f"HTTP {resp.status_code}", response=resp)
    if resp.status_code != 200:
        raise ProtocolError(f"endpoint answered HTTP {resp.status_code}")
    try:
        return resp.json()
    except ValueError as exc:
        raise ProtocolError("endpoint response is not JSON") from exc


def fetch_remote(endpoint, emotion, slm, timeout=30.0, cache_dir=None):
    """Run the five expansion queries for ``slm`` and return a snapshot graph.

    Cached responses are reused without touching the network. Network
    failures raise :class:`RemoteFetchError` listing which queries are cached
    and which are still missing; malformed responses raise
    :class:`ProtocolError` and are not cached.
    """
    emotion = V.emotion(emotion)
    cache_dir = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    texts = {name: render_query(name, slm) for name in QUERIES}
    paths = {name: cache_dir / f"{cache_key(endpoint, emotion, texts[name])}.json" for name in QUERIES}

    responses = {}
    for name in QUERIES:
        cached = _read_cache(paths[name])
        if cached is not None:
            responses[name] = cached
    todo = [name for name in QUERIES if name not in responses]

    def run(name):
        payload = _post(endpoint, texts[name], timeout)
        _check_response(name, payload)
        _write_cache(paths[name], {
            "endpoint": endpoint,
            "emotion": emotion.value,
            "query": name,
            "query_sha256": hashlib.sha256(texts[name].encode("utf-8")).hexdigest(),
            "response": payload,
        })
        return payload

    failures = {}
    protocol = []
    if todo:
        log.info("querying %s for %d of %d expansion queries", endpoint, len(todo), len(QUERIES))
        with ThreadPoolExecutor(max_workers=len(todo)) as pool:
            futures = {name: pool.submit(run, name) for name in todo}
            for name, fut in futures.items():
                try:
                    responses[name] = fut.result()
                except ProtocolError as exc:
                    protocol.append(exc)
                except requests.RequestException as exc:
                    failures[name] = exc
    if protocol:
        raise protocol[0]
    if failures:
        first = next(iter(failures.values()))
        raise RemoteFetchError(
            f"{len(failures)} expansion queries failed against {endpoint}: {first}",
            cached=sorted(responses),
            missing=sorted(failures),
        )

    graph = Graph(prefixes=manifest())
    for name in QUERIES:
        graph.update(bindings_to_triples(name, _check_response(name, responses[name])))
    return validate_snapshot(graph)

"""Bundled data files: ontology modules, queries, snapshots, lexicon, fixtures.

Every loader resolves names against an asset root. The default root is this
package directory; the CLI's ``--assets`` flag points elsewhere so tests can
run against a hermetic copy.
"""

from __future__ import annotations

import os
from pathlib import Path

from ..errors import AssetError

DEFAULT_ROOT = Path(__file__).resolve().parent
ENV_VAR = "EMOFRAME_ASSETS"

_root = None


def root():
    if _root is not None:
        return _root
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else DEFAULT_ROOT


def set_root(path):
    """Point every loader at ``path``; ``None`` restores the default."""
    global _root
    _root = Path(path) if path is not None else None


def path(name):
    p = root() / name
    if not p.exists():
        raise AssetError(f"missing asset: {p}")
    return p


def read_text(name):
    return path(name).read_text(encoding="utf-8")

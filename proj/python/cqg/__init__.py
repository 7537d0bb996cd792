"""Compact quantum groups and an exact SU_mu(2) engine.

Structures are passed as dicts (or JSON strings) in the same format as the
command-line tool; reports come back as dicts.
"""

import json

from ._core import (
    AxiomError,
    InputError,
    SumuEngine,
    __version__,
    fnv1a,
    identity_names,
)
from . import _core


def _text(structure):
    return structure if isinstance(structure, str) else json.dumps(structure)


def corpus():
    return {name: json.loads(text) for name, text in _core.corpus().items()}


def check(structure, backend="exact"):
    return json.loads(_core.run_check(_text(structure), backend))


def decompose(structure, backend="exact", seed=1):
    return json.loads(_core.run_decompose(_text(structure), backend, seed))


def compact(structure, backend="exact"):
    return json.loads(_core.run_compact(_text(structure), backend))


def antipode(structure, backend="exact", tolerance=1e-8):
    return json.loads(_core.run_antipode(_text(structure), backend, tolerance))


def sumu(sign=1, degree=6, identity="all", rewriting=False, seed=1):
    return json.loads(_core.run_sumu(sign, degree, identity, rewriting, seed))


__all__ = [
    "AxiomError",
    "InputError",
    "SumuEngine",
    "__version__",
    "antipode",
    "check",
    "compact",
    "corpus",
    "decompose",
    "fnv1a",
    "identity_names",
    "sumu",
]

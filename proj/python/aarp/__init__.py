"""Algebraic revealed preference tests.

Data sets are JSON documents (or dicts) in the same schema the `aarp` CLI reads;
every function returns the report as a dict.
"""

import json

from . import _aarp
from ._aarp import AarpError, CapExceeded, ParseError

__all__ = ["check", "complete", "oracle", "laws", "normalize", "render", "AarpError", "ParseError", "CapExceeded"]


def _text(data):
    return data if isinstance(data, str) else json.dumps(data)


def check(data, axiom, theory="trivial", theory2="trivial", k=2, **limits):
    """Run one axiom; the report's "outcome" is "pass" or "violation"."""
    return json.loads(_aarp.check(_text(data), axiom, theory, theory2, k, **limits))


def complete(data, theory="trivial", closure="transitive"):
    return json.loads(_aarp.complete(_text(data), theory, closure))


def oracle(data, theory="trivial", transitive=False, complete=False, cap=4):
    return json.loads(_aarp.oracle(_text(data), theory, transitive, complete, cap))


def laws(data, theory="trivial", samples=40, seed=1):
    return json.loads(_aarp.laws(_text(data), theory, samples, seed))


def normalize(data):
    """Parse and re-serialize a data set (canonical rationals, validated)."""
    return json.loads(_aarp.normalize(_text(data)))


def render(report):
    """Human-readable text for a report, as printed by the CLI."""
    return _aarp.render(_text(report))

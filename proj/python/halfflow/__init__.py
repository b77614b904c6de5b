"""Half-integral maximum node-capacitated multiflow solver."""

import json

from . import _core
from ._core import (
    UnboundedInstance,
    ValidationError,
    TooLarge,
    classify_type,
    delta_star,
    exchange_capacity,
)

__all__ = [
    "UnboundedInstance",
    "ValidationError",
    "TooLarge",
    "classify_type",
    "delta_star",
    "dual_enum",
    "exchange_capacity",
    "normalize",
    "solve",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def solve(instance):
    """Solve an instance given as a dict or JSON text.

    Returns a dict with value2, paths, dual, multiway_cut, stats and a
    ``verified`` flag from the optimality certificates.
    """
    return json.loads(_core.solve(_text(instance)))


def dual_enum(instance):
    """Exhaustive doubled optimum for small instances."""
    return _core.dual_enum(_text(instance))


def normalize(instance):
    """Validate an instance and return its canonical dict form."""
    return json.loads(_core.normalize(_text(instance)))

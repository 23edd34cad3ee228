"""Small shared helpers: JSON encoding of exact values, seeded hashing."""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

__version__ = "0.1.0"


def rat_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def jsonable(obj):
    """Fractions become ``"p/q"`` strings; numpy scalars and arrays become plain values."""
    if isinstance(obj, Fraction):
        return rat_str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        if math.isnan(v):
            return "nan"
        return v
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        seq = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in seq]
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return rat_str(Fraction(int(obj.numerator), int(obj.denominator)))
    raise TypeError("cannot encode %r" % type(obj))


def dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True)


def as_float(v) -> float:
    return float(v)


# counter-based hashing: every random value is a pure function of its key

_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_GOLD = np.uint64(0x9E3779B97F4A7C15)


def splitmix(x):
    x = np.asarray(x, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = x + _GOLD
        z = (z ^ (z >> np.uint64(30))) * _M1
        z = (z ^ (z >> np.uint64(27))) * _M2
        return z ^ (z >> np.uint64(31))


def keyed(*parts):
    """Hash a tuple of non-negative integers (or int arrays, broadcast) to uint64."""
    acc = np.uint64(0x243F6A8885A308D3)
    for p in parts:
        with np.errstate(over="ignore"):
            acc = splitmix(np.asarray(acc, dtype=np.uint64) ^ np.asarray(p, dtype=np.uint64))
    return acc


def uniform01(*parts):
    return (keyed(*parts) >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def below(n: int, *parts):
    """Uniform integer in [0, n) keyed by ``parts``."""
    return (uniform01(*parts) * n).astype(np.int64)

"""Partial Boolean functions on {0,1}^n, given by explicit truth tables.

Inputs are bit strings; position 1 is the leftmost character.  Internally
each input also has an integer code ``int(z, 2)``, so position ``i``
corresponds to the mask ``1 << (n - i)``.  Indices are 1-based everywhere
in the public API.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

MAX_ARITY = 24


class ParseError(ValueError):
    """Malformed truth table or zoo name."""


def bit_mask(n: int, i: int) -> int:
    return 1 << (n - i)


def to_int(z: str) -> int:
    return int(z, 2) if z else 0


def to_str(code: int, n: int) -> str:
    return format(code, "0{}b".format(n)) if n else ""


def hamming(x: str, y: str) -> int:
    if len(x) != len(y):
        raise ValueError("length mismatch: %d vs %d" % (len(x), len(y)))
    return sum(a != b for a, b in zip(x, y))


def diff_indices(x: str, y: str) -> list[int]:
    """1-based positions where x and y differ."""
    return [i + 1 for i, (a, b) in enumerate(zip(x, y)) if a != b]


def flip_block(z: str, block: Iterable[int]) -> str:
    chars = list(z)
    for i in block:
        if not 1 <= i <= len(z):
            raise IndexError("index %d outside 1..%d" % (i, len(z)))
        chars[i - 1] = "1" if chars[i - 1] == "0" else "0"
    return "".join(chars)


@dataclass(frozen=True)
class PartialBooleanFunction:
    n: int
    values: Mapping[str, int]
    name: str = ""
    zero_set: tuple[str, ...] = field(init=False, repr=False)
    one_set: tuple[str, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ARITY:
            raise ParseError("arity %d outside 0..%d" % (self.n, MAX_ARITY))
        clean = {}
        for z, v in self.values.items():
            if len(z) != self.n or set(z) - {"0", "1"}:
                raise ParseError("bad input string %r for n=%d" % (z, self.n))
            if v not in (0, 1):
                raise ParseError("bad value %r at %s" % (v, z))
            clean[z] = int(v)
        if not clean:
            raise ParseError("empty domain")
        object.__setattr__(self, "values", dict(sorted(clean.items())))
        object.__setattr__(self, "zero_set", tuple(z for z, v in self.values.items() if v == 0))
        object.__setattr__(self, "one_set", tuple(z for z, v in self.values.items() if v == 1))

    def __call__(self, z: str) -> int:
        return self.values[z]

    def __contains__(self, z: str) -> bool:
        return z in self.values

    def __len__(self) -> int:
        return len(self.values)

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(self.values)

    @property
    def is_total(self) -> bool:
        return len(self.values) == 1 << self.n

    @property
    def is_constant(self) -> bool:
        return not self.zero_set or not self.one_set

    def side(self, b: int) -> tuple[str, ...]:
        return self.one_set if b else self.zero_set

    def pairs(self, distance: int | None = None) -> list[tuple[str, str]]:
        """All (x, y) with f(x)=0, f(y)=1, optionally at a fixed Hamming distance."""
        out = []
        for x in self.zero_set:
            for y in self.one_set:
                if distance is None or hamming(x, y) == distance:
                    out.append((x, y))
        return out

    def depends_on_all(self) -> bool:
        """True when every position is sensitive somewhere (total functions)."""
        for i in range(1, self.n + 1):
            if not any(i in sensitive_indices(self, z) for z in self.values):
                return False
        return True

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "values": self.values}, sort_keys=True)

    def label(self) -> str:
        return self.name or "f%d[%d]" % (self.n, len(self.values))


def sensitive_indices(f: PartialBooleanFunction, z: str) -> set[int]:
    if z not in f.values:
        raise KeyError("input %s not in domain" % z)
    v = f.values[z]
    out = set()
    for i in range(1, f.n + 1):
        w = flip_block(z, (i,))
        if w in f.values and f.values[w] != v:
            out.add(i)
    return out


def _no_duplicates(pairs):
    seen = {}
    for k, v in pairs:
        if k in seen:
            raise ParseError("duplicate key %r" % k)
        seen[k] = v
    return seen


def from_truth_table(src, name: str = "") -> PartialBooleanFunction:
    """Build a function from JSON text or an already-decoded mapping.

    Two shapes are accepted: ``{"n": 3, "values": {"000": 0, ...}}`` (or a
    list of ``[z, v]`` pairs) and the compact ``{"n": 3, "table": "0111****"}``
    listing 0/1/* for every input in lexicographic order.
    """
    if isinstance(src, (str, bytes)):
        try:
            src = json.loads(src, object_pairs_hook=_no_duplicates)
        except json.JSONDecodeError as exc:
            raise ParseError("invalid JSON: %s" % exc) from None
    if not isinstance(src, Mapping) or "n" not in src:
        raise ParseError("expected an object with key 'n'")
    n = src["n"]
    if not isinstance(n, int) or isinstance(n, bool) or not 0 <= n <= MAX_ARITY:
        raise ParseError("bad arity %r" % (n,))
    name = name or src.get("name", "")
    if "table" in src:
        table = src["table"]
        if not isinstance(table, str) or len(table) != 1 << n:
            raise ParseError("table must be a string of length 2^n = %d" % (1 << n))
        values = {}
        for code, ch in enumerate(table):
            if ch == "*":
                continue
            if ch not in "01":
                raise ParseError("bad table character %r" % ch)
            values[to_str(code, n)] = int(ch)
        return PartialBooleanFunction(n, values, name)
    raw = src.get("values")
    if isinstance(raw, Mapping):
        items = list(raw.items())
    elif isinstance(raw, list):
        items = []
        for entry in raw:
            if not isinstance(entry, (list, tuple)) or len(entry) != 2:
                raise ParseError("value entries must be [input, value] pairs")
            items.append((entry[0], entry[1]))
    else:
        raise ParseError("missing 'values' or 'table'")
    values = {}
    for z, v in items:
        if not isinstance(z, str):
            raise ParseError("input keys must be strings")
        if z in values:
            raise ParseError("duplicate input %s" % z)
        if isinstance(v, str) and v in ("0", "1"):
            v = int(v)
        values[z] = v
    return PartialBooleanFunction(n, values, name)


def load(path: str) -> PartialBooleanFunction:
    with open(path) as fh:
        return from_truth_table(fh.read())


# -- function zoo -----------------------------------------------------------


def _total(n: int, rule, name: str) -> PartialBooleanFunction:
    if not 1 <= n <= MAX_ARITY:
        raise ParseError("%s needs 1 <= n <= %d" % (name, MAX_ARITY))
    values = {}
    for bits in product("01", repeat=n):
        z = "".join(bits)
        values[z] = int(rule(z))
    return PartialBooleanFunction(n, values, name)


def or_fn(n: int) -> PartialBooleanFunction:
    return _total(n, lambda z: "1" in z, "OR%d" % n)


def and_fn(n: int) -> PartialBooleanFunction:
    return _total(n, lambda z: "0" not in z, "AND%d" % n)


def parity_fn(n: int) -> PartialBooleanFunction:
    return _total(n, lambda z: z.count("1") % 2, "PARITY%d" % n)


def tribes_fn(s: int, t: int) -> PartialBooleanFunction:
    """OR of ``s`` blocks, each an AND of ``t`` consecutive bits."""
    if s < 1 or t < 1 or s * t > MAX_ARITY:
        raise ParseError("TRIBES needs s, t >= 1 and s*t <= %d" % MAX_ARITY)

    def rule(z):
        return any("0" not in z[b * t:(b + 1) * t] for b in range(s))

    f = _total(s * t, rule, "TRIBES%d,%d" % (s, t))
    return f


def unit(n: int, i: int) -> str:
    return "".join("1" if j == i else "0" for j in range(1, n + 1))


def promise_or_fn(n: int) -> PartialBooleanFunction:
    if not 1 <= n <= MAX_ARITY:
        raise ParseError("PROMISE_OR needs 1 <= n <= %d" % MAX_ARITY)
    values = {"0" * n: 0}
    for i in range(1, n + 1):
        values[unit(n, i)] = 1
    return PartialBooleanFunction(n, values, "PROMISE_OR%d" % n)


def gth_fn(n: int) -> PartialBooleanFunction:
    """Weight-one inputs only; value 1 iff the set bit is in the right half."""
    if n < 2 or n % 2 or n > MAX_ARITY:
        raise ParseError("GTH needs an even n in 2..%d" % MAX_ARITY)
    values = {unit(n, i): int(i > n // 2) for i in range(1, n + 1)}
    return PartialBooleanFunction(n, values, "GTH%d" % n)


CELL_CODE = {0: "00", 1: "01", 2: "10"}


def apind_radius(k: int) -> int:
    return max(0, math.floor(k / 2 - math.sqrt(k * math.log2(k)))) if k > 1 else 0


def apind_fn(k: int, radius: int | None = None) -> PartialBooleanFunction:
    """Approximate index over the ternary table, binary-encoded two bits per cell.

    Positions 1..k hold the address; cell ``c`` (address read as a binary
    number) occupies positions ``k+2c+1`` and ``k+2c+2``.
    """
    if radius is None:
        radius = apind_radius(k)
    n = k + 2 * (1 << k)
    if k < 1 or n > MAX_ARITY:
        raise ParseError("APIND needs k >= 1 and k + 2*2^k <= %d" % MAX_ARITY)
    values = {}
    for a in range(1 << k):
        for v in (0, 1):
            cells = []
            for c in range(1 << k):
                near = bin(a ^ c).count("1") <= radius
                cells.append(CELL_CODE[v if near else 2])
            values[to_str(a, k) + "".join(cells)] = v
    return PartialBooleanFunction(n, values, "APIND%d" % k)


ZOO = {
    "or": or_fn,
    "and": and_fn,
    "parity": parity_fn,
    "tribes": tribes_fn,
    "promise_or": promise_or_fn,
    "gth": gth_fn,
    "apind": apind_fn,
}


def zoo(name: str, *params: int) -> PartialBooleanFunction:
    key = name.lower()
    if key not in ZOO:
        raise ParseError("unknown zoo function %r" % name)
    try:
        return ZOO[key](*params)
    except TypeError:
        raise ParseError("wrong parameters %r for %s" % (params, name)) from None


def parse_zoo(text: str) -> PartialBooleanFunction:
    """``"or:3"`` or ``"tribes:2,2"`` style names."""
    name, _, rest = text.partition(":")
    try:
        params = [int(p) for p in rest.split(",") if p.strip()]
    except ValueError:
        raise ParseError("bad zoo parameters in %r" % text) from None
    return zoo(name, *params)


def all_total_functions(n: int, nondegenerate: bool = True) -> list[PartialBooleanFunction]:
    """Every non-constant total function on n bits, optionally only those using every bit."""
    out = []
    size = 1 << n
    for code in range(1, (1 << size) - 1):
        table = format(code, "0{}b".format(size))
        f = from_truth_table({"n": n, "table": table}, name="T%d:%s" % (n, table))
        if nondegenerate and not f.depends_on_all():
            continue
        out.append(f)
    return out


def random_partial(n: int, rng, density: float = 0.6) -> PartialBooleanFunction:
    """Random partial function: each input defined with probability ``density``, both values present."""
    while True:
        values = {}
        for code in range(1 << n):
            if rng.random() < density:
                values[to_str(code, n)] = int(rng.random() < 0.5)
        if 0 in values.values() and 1 in values.values():
            return PartialBooleanFunction(n, values, "P%d:%d" % (n, len(values)))

"""Exact combinatorics of Hamming spheres and balls.

Everything here returns exact integers or ``Fraction`` values; floats appear
only where a result is compared against a transcendental constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

BRUTE_MAX_K = 20


@lru_cache(maxsize=None)
def binomial(k: int, j: int) -> int:
    if j < 0:
        raise ValueError("j must be non-negative")
    if k < 0 or j > k:
        return 0
    return math.comb(k, j)


def _c(k, j):
    return 0 if j < 0 or j > k or k < 0 else binomial(k, j)


@dataclass(frozen=True)
class HypergeomParams:
    k: int
    m: int
    r: int

    def __post_init__(self):
        if not (0 <= self.m <= self.k and 0 <= self.r <= self.k):
            raise ValueError("need 0 <= m <= k and 0 <= r <= k, got %r" % (self,))

    @property
    def mean(self) -> Fraction:
        return Fraction(self.m * self.r, self.k)


def hypergeom_pmf(p: HypergeomParams, j: int) -> Fraction:
    """Probability that a uniform r-subset of [k] hits exactly j of m marked coordinates."""
    if j < 0 or j > p.m:
        return Fraction(0)
    return Fraction(_c(p.m, j) * _c(p.k - p.m, p.r - j), _c(p.k, p.r))


def pmf_table(p: HypergeomParams) -> list[Fraction]:
    return [hypergeom_pmf(p, j) for j in range(p.m + 1)]


def sphere_ball_intersection(k: int, m: int, r: int):
    """Count of radius-r sphere points around a that lie in the radius-r ball around b, d(a,b)=m.

    Returns ``(count, count / C(k, r))``.
    """
    HypergeomParams(k, m, r)
    lo = (m + 1) // 2
    count = sum(_c(m, j) * _c(k - m, r - j) for j in range(lo, m + 1))
    return count, Fraction(count, _c(k, r))


def ball_size(k: int, r: int) -> int:
    return sum(_c(k, j) for j in range(0, min(r, k) + 1)) if r >= 0 else 0


def ball_intersection(k: int, m: int, r: int) -> int:
    """Number of z with d(a,z) <= r and d(b,z) <= r when d(a,b) = m."""
    total = 0
    for j in range(m + 1):
        for l in range(k - m + 1):
            if j + l <= r and m - j + l <= r:
                total += _c(m, j) * _c(k - m, l)
    return total


def ball_intersection_ratio(k: int, m: int, r: int) -> Fraction:
    return Fraction(ball_intersection(k, m, r), ball_size(k, r))


def _popcount(v: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(v)
    out = np.zeros(v.shape, dtype=np.int64)
    while np.any(v):
        out += v & 1
        v = v >> 1
    return out


def brute_force_intersection(a: str, b: str, r: int) -> int:
    """|{z : d(a,z) = r and d(b,z) <= r}| by enumerating all 2^k strings."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    k = len(a)
    if k > BRUTE_MAX_K:
        raise ValueError("brute force limited to k <= %d" % BRUTE_MAX_K)
    z = np.arange(1 << k, dtype=np.uint64)
    da = _popcount(z ^ np.uint64(int(a, 2) if k else 0))
    db = _popcount(z ^ np.uint64(int(b, 2) if k else 0))
    return int(np.count_nonzero((da == r) & (db <= r)))


# -- parameter choices -------------------------------------------------------------


def log_scale_params(k: int, even_m: bool = False) -> HypergeomParams:
    """m = floor(k / log2 k) and r = floor(k/2) - ceil(sqrt(k log2 k)).

    ``even_m`` rounds m down to an even number so the symmetry centre is an integer.
    """
    lg = math.log2(k)
    m = int(k // lg)
    if even_m and m % 2:
        m -= 1
    r = k // 2 - math.ceil(math.sqrt(k * lg))
    if r < 0:
        raise ValueError("k=%d too small: radius k/2 - sqrt(k log k) is negative" % k)
    return HypergeomParams(k, m, r)


# -- distribution shape checks ---------------------------------------------------


@dataclass
class SymmetricCheck:
    min_ratio: Fraction
    argmin: int
    j_max: int
    center: Fraction
    zero_at: int | None

    @property
    def log_min_ratio(self) -> float:
        if self.min_ratio == 0:
            return -math.inf
        return math.log(self.min_ratio.numerator) - math.log(self.min_ratio.denominator)


def check_symmetric(p: HypergeomParams, j_max: int | None = None, c: float = 1.0) -> SymmetricCheck:
    """Minimum over 0 <= j <= j_max of P(m/2 + j) / P(m/2 - j).

    For odd m the pair compared is ((m+1)/2 + j, (m-1)/2 - j), a half-step shift.
    """
    if j_max is None:
        j_max = int(2 * c * math.sqrt(p.m))
    hi0 = p.m // 2 + (p.m % 2)
    lo0 = p.m // 2
    best, arg, zero_at = None, 0, None
    for j in range(j_max + 1):
        if lo0 - j < 0:
            break
        num = hypergeom_pmf(p, hi0 + j)
        den = hypergeom_pmf(p, lo0 - j)
        if den == 0 or num == 0:
            ratio = Fraction(0)
            if zero_at is None:
                zero_at = j
        else:
            ratio = num / den
        if best is None or ratio < best:
            best, arg = ratio, j
    return SymmetricCheck(best, arg, j_max, Fraction(p.m, 2), zero_at)


@dataclass
class MonotoneCheck:
    mode: int
    mean: Fraction
    unimodal: bool
    first_violation: int | None


def check_monotone(p: HypergeomParams) -> MonotoneCheck:
    """P(j+1) >= P(j) for j <= E - 1/2 and P(j+1) <= P(j) beyond, compared exactly."""
    table = pmf_table(p)
    E = p.mean
    violation = None
    for j in range(p.m):
        rising = j <= E - Fraction(1, 2)
        ok = table[j + 1] >= table[j] if rising else table[j + 1] <= table[j]
        if not ok and violation is None:
            violation = j
    mode = max(range(len(table)), key=lambda j: (table[j], -j))
    return MonotoneCheck(mode, E, violation is None, violation)


def tail_mass(p: HypergeomParams, w) -> Fraction:
    """Exact central mass: sum of P(j) over |j - E| <= w."""
    w = Fraction(w)
    E = p.mean
    return sum((hypergeom_pmf(p, j) for j in range(p.m + 1) if abs(j - E) <= w), Fraction(0))


def width(p: HypergeomParams, name: str) -> int:
    if name == "sqrt_r":
        return math.isqrt(p.r - 1) + 1 if p.r > 0 else 0
    if name == "sqrt_m":
        return math.isqrt(p.m - 1) + 1 if p.m > 0 else 0
    return int(name)


def _prefix_binomial_sums(k: int, radii):
    """Exact sum_{j <= r} C(k, j) for each radius, one pass of the row recurrence."""
    radii = sorted(set(radii))
    out = {}
    term, acc, idx = 1, 0, 0
    top = radii[-1]
    for j in range(top + 1):
        acc += term
        while idx < len(radii) and radii[idx] == j:
            out[j] = acc
            idx += 1
        term = term * (k - j) // (j + 1)
    return out


@dataclass
class OuterLayer:
    k: int
    const: float
    inner_radius: int
    outer_radius: int
    ratio: Fraction
    flags: list


def outer_layer_mass(k: int, const: float = 100.0) -> OuterLayer:
    """Ball mass within k/2 - const*sqrt(k log2 k) relative to the ball of radius k/2 - sqrt(k log2 k).

    An empty inner ball (negative inner radius) gives ratio 0 and is flagged;
    a negative outer radius leaves the ratio undefined and raises.
    """
    s = math.sqrt(k * math.log2(k))
    outer = k // 2 - math.ceil(s)
    inner = k // 2 - math.ceil(const * s)
    if outer < 0:
        raise ValueError("k=%d too small: outer radius negative; increase k" % k)
    flags = []
    if const != 100:
        flags.append("scaled_constant")
    if inner < 0:
        flags.append("empty_inner_ball")
        return OuterLayer(k, const, inner, outer, Fraction(0), flags)
    sums = _prefix_binomial_sums(k, [inner, outer])
    return OuterLayer(k, const, inner, outer, Fraction(sums[inner], sums[outer]), flags)

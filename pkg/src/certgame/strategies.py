"""Explicit strategies for the certificate game and their evaluation.

Every strategy exposes the same small surface:

* ``alice(x, seed, draws)`` / ``bob(y, seed, draws)``: outputs for a batch of
  draw indices.  Alice's output is computed from ``x`` and the draw alone,
  which is what makes the pair a legal no-communication strategy.
* ``referee(x, y, a, b)``: shared win predicate used by both evaluators.
* ``exact_success(x, y)``: the winning probability, when it can be computed.
* ``declared_bound``: the worst-case success the construction guarantees.

All randomness is a pure function of ``(seed, draw, stream, index)``
through a counter-based hash, so a hash function over a huge universe is
evaluated only where it is needed.  Outputs are 1-based indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Callable

import numpy as np

from .boolfn import PartialBooleanFunction, diff_indices, hamming, sensitive_indices, tribes_fn
from .hamming import ball_intersection, ball_size
from .measures import certificates, ec_bounds
from ._util import below, uniform01

FALLBACK = 1
SUPPORT_CAP = 10 ** 6
Z99 = 2.5758293035489004

# hash streams
_H, _Z, _A, _B, _PICK, _MIX = 1, 2, 3, 4, 5, 6


@dataclass
class DeterministicPair:
    alice: Callable
    bob: Callable


def differs(x: str, y: str, i: int) -> bool:
    return 1 <= i <= len(x) and x[i - 1] != y[i - 1]


class Strategy:
    name = "strategy"
    declared_bound: object = 0

    def alice(self, x, seed: int, draws: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def bob(self, y, seed: int, draws: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def referee(self, x, y, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        mask = np.zeros(len(x) + 2, dtype=bool)
        for i in diff_indices(x, y):
            mask[i] = True
        a = np.asarray(a)
        ok = (a >= 1) & (a <= len(x))
        return (a == np.asarray(b)) & ok & mask[np.clip(a, 0, len(x) + 1)]

    def simulate(self, x, y, seed: int, draws: np.ndarray) -> np.ndarray:
        return self.referee(x, y, self.alice(x, seed, draws), self.bob(y, seed, draws))

    def draw(self, seed: int, t: int) -> DeterministicPair:
        d = np.array([t], dtype=np.int64)
        return DeterministicPair(lambda x: int(self.alice(x, seed, d)[0]),
                                 lambda y: int(self.bob(y, seed, d)[0]))

    def exact_success(self, x, y):
        raise NotImplementedError("%s has no exact evaluator" % self.name)


# -- finite mixtures and private coins ------------------------------------------


class FiniteStrategy(Strategy):
    """Finite distribution over deterministic pairs given as dicts input -> index."""

    name = "finite"

    def __init__(self, support, declared_bound=0, name="finite"):
        if len(support) > SUPPORT_CAP:
            raise ValueError("support larger than %d" % SUPPORT_CAP)
        total = sum(Fraction(w) for w, _ in support)
        self.support = [(Fraction(w) / total, pair) for w, pair in support]
        self.cum = np.cumsum([float(w) for w, _ in self.support])
        self.declared_bound = declared_bound
        self.name = name

    def _pick(self, seed, draws):
        u = uniform01(seed, draws, _MIX)
        return np.minimum(np.searchsorted(self.cum, u, side="right"), len(self.support) - 1)

    def alice(self, x, seed, draws):
        return np.array([self.support[k][1].alice[x] for k in self._pick(seed, draws)])

    def bob(self, y, seed, draws):
        return np.array([self.support[k][1].bob[y] for k in self._pick(seed, draws)])

    def exact_success(self, x, y):
        return sum((w for w, p in self.support if p.alice[x] == p.bob[y] and differs(x, y, p.alice[x])),
                   Fraction(0))


def uniform_index_strategy(f: PartialBooleanFunction) -> FiniteStrategy:
    """Shared uniform index: both players output the same random i."""
    pairs = [(1, DeterministicPair({x: i for x in f.zero_set}, {y: i for y in f.one_set}))
             for i in range(1, f.n + 1)]
    return FiniteStrategy(pairs, Fraction(1, f.n), "shared_uniform")


class PrivateStrategy(Strategy):
    """Independent distributions p_z over indices, one per input."""

    name = "private"

    def __init__(self, px: dict, py: dict, declared_bound=0, name="private"):
        self.px = {z: [Fraction(v) for v in p] for z, p in px.items()}
        self.py = {z: [Fraction(v) for v in p] for z, p in py.items()}
        self.declared_bound = declared_bound
        self.name = name

    @staticmethod
    def _sample(p, u):
        cum = np.cumsum([float(v) for v in p])
        return np.minimum(np.searchsorted(cum, u, side="right"), len(p) - 1) + 1

    def alice(self, x, seed, draws):
        return self._sample(self.px[x], uniform01(seed, draws, _A))

    def bob(self, y, seed, draws):
        return self._sample(self.py[y], uniform01(seed, draws, _B))

    def exact_success(self, x, y):
        return sum((self.px[x][i] * self.py[y][i] for i in range(len(x)) if x[i] != y[i]), Fraction(0))


def uniform_private_strategy(f: PartialBooleanFunction) -> PrivateStrategy:
    u = [Fraction(1, f.n)] * f.n
    return PrivateStrategy({x: u for x in f.zero_set}, {y: u for y in f.one_set}, 0, "private_uniform")


def private_certificate_strategy(f: PartialBooleanFunction) -> PrivateStrategy:
    """Each player uniform on a minimum certificate of their input."""
    rep = certificates(f)

    def dist(z):
        S = rep.strong_sets[z]
        return [Fraction(1, len(S)) if i + 1 in S else Fraction(0) for i in range(f.n)]

    bound = Fraction(1, rep.c0 * rep.c1)
    return PrivateStrategy({x: dist(x) for x in f.zero_set}, {y: dist(y) for y in f.one_set}, bound,
                           "private_cert")


# -- hashing strategies -----------------------------------------------------------


class HashStrategy(Strategy):
    """Hash the index universe into ``size`` buckets and play inside one bucket.

    ``sets`` maps each input to its candidate indices; with ``weights`` the
    pick inside the bucket is proportional to the weights, otherwise it is
    uniform.  An empty bucket falls back to a fixed index.  With
    ``shared_target`` the bucket is chosen at random, otherwise it is bucket 0.
    """

    def __init__(self, sets: dict, size: int, declared_bound, name: str, weights: dict | None = None,
                 shared_target: bool = False, fallback: int = FALLBACK, correct=None):
        if size < 1:
            raise ValueError("hash range must be non-empty")
        self.sets = {z: sorted(s) for z, s in sets.items()}
        self.size = size
        self.weights = weights
        self.shared_target = shared_target
        self.fallback = fallback
        self.declared_bound = declared_bound
        self.name = name
        self.correct = correct

    def _target(self, seed, draws):
        if self.shared_target:
            return below(self.size, seed, draws, _Z)
        return np.zeros(len(draws), dtype=np.int64)

    def _play(self, z, seed, draws, stream):
        draws = np.asarray(draws, dtype=np.int64)
        cand = np.array(self.sets[z], dtype=np.int64)
        out = np.full(draws.size, self.fallback, dtype=np.int64)
        if cand.size == 0:
            return out
        h = below(self.size, seed, draws[:, None], _H, cand[None, :])
        hit = h == self._target(seed, draws)[:, None]
        if self.weights is None:
            w = hit.astype(float)
        else:
            wz = np.array([float(self.weights[z][i - 1]) if self.weights[z] is not None else 1.0
                           for i in cand]) if not isinstance(self.weights[z], dict) else \
                np.array([float(self.weights[z][i]) for i in cand])
            w = hit * wz[None, :]
        tot = w.sum(axis=1)
        u = uniform01(seed, draws, stream) * tot
        k = (np.cumsum(w, axis=1) <= u[:, None]).sum(axis=1)
        k = np.minimum(k, cand.size - 1)
        picked = cand[k]
        return np.where(tot > 0, picked, out)

    def alice(self, x, seed, draws):
        return self._play(x, seed, draws, _A)

    def bob(self, y, seed, draws):
        return self._play(y, seed, draws, _B)

    def referee(self, x, y, a, b):
        if self.correct is None:
            return super().referee(x, y, a, b)
        a = np.asarray(a)
        return (a == np.asarray(b)) & np.array([self.correct(x, y, int(v)) for v in a], dtype=bool)

    def _is_correct(self, x, y, i):
        return self.correct(x, y, i) if self.correct else differs(x, y, i)

    def exact_success(self, x, y):
        if self.weights is None:
            return self._exact_uniform(x, y)
        return self._exact_subsets(x, y)

    def _exact_uniform(self, x, y):
        """Sum over bucket counts per index class; pick is uniform so only counts matter."""
        A, B = set(self.sets[x]), set(self.sets[y])
        fb = self.fallback
        p = Fraction(1, self.size)
        good = {i for i in A & B if i != fb and self._is_correct(x, y, i)}
        sizes = {
            "ab_good": len(good),
            "ab_bad": len((A & B) - good - {fb}),
            "a": len(A - B - {fb}),
            "b": len(B - A - {fb}),
        }
        fb_in_a, fb_in_b = fb in A, fb in B
        fb_tracked = fb_in_a or fb_in_b
        fb_ok = self._is_correct(x, y, fb)
        pmf = {k: _binom_pmf(s, p) for k, s in sizes.items()}
        total = Fraction(0)
        for e in ((0, 1) if fb_tracked else (0,)):
            pe = (p if e else 1 - p) if fb_tracked else Fraction(1)
            for g, pg in enumerate(pmf["ab_good"]):
                for h, ph in enumerate(pmf["ab_bad"]):
                    for ca, pa in enumerate(pmf["a"]):
                        base = pe * pg * ph * pa
                        if base == 0:
                            continue
                        na = g + h + ca + e * fb_in_a
                        for cb, pb in enumerate(pmf["b"]):
                            nb = g + h + cb + e * fb_in_b
                            prob = base * pb
                            if prob == 0:
                                continue
                            if na and nb:
                                win = Fraction(g + e * (fb_in_a and fb_in_b and fb_ok), na * nb)
                            elif nb:
                                win = Fraction(e * fb_in_b * fb_ok, nb)
                            elif na:
                                win = Fraction(e * fb_in_a * fb_ok, na)
                            else:
                                win = Fraction(int(fb_ok))
                            total += prob * win
        return total

    def _exact_subsets(self, x, y, cap: int = 18):
        """Sum over which relevant indices land in the target bucket."""
        A, B = self.sets[x], self.sets[y]
        R = sorted(set(A) | set(B))
        if len(R) > cap:
            raise ValueError("too many relevant indices for subset enumeration")
        p = Fraction(1, self.size)
        wa = self._wmap(x)
        wb = self._wmap(y)
        total = Fraction(0)
        for mask in range(1 << len(R)):
            H = {R[k] for k in range(len(R)) if mask >> k & 1}
            prob = p ** len(H) * (1 - p) ** (len(R) - len(H))
            da = _pick_dist(H, A, wa, self.fallback)
            db = _pick_dist(H, B, wb, self.fallback)
            win = sum((pa * db.get(i, 0) for i, pa in da.items() if self._is_correct(x, y, i)), Fraction(0))
            total += prob * win
        return total

    def _wmap(self, z):
        if self.weights is None:
            return {i: Fraction(1) for i in self.sets[z]}
        w = self.weights[z]
        if isinstance(w, dict):
            return {i: Fraction(w[i]) for i in self.sets[z]}
        return {i: Fraction(w[i - 1]) for i in self.sets[z]}


def _pick_dist(H, cand, w, fallback):
    inside = [i for i in cand if i in H and w[i] > 0]
    tot = sum((w[i] for i in inside), Fraction(0))
    if not inside or tot == 0:
        return {fallback: Fraction(1)}
    return {i: w[i] / tot for i in inside}


def _binom_pmf(size, p):
    return [math.comb(size, j) * p ** j * (1 - p) ** (size - j) for j in range(size + 1)]


E2 = math.e ** 2


def certificate_hash_strategy(f: PartialBooleanFunction) -> HashStrategy:
    """Bucket count equal to the certificate complexity; candidates are minimum certificates."""
    rep = certificates(f)
    C = rep.strong
    sets = dict(rep.strong_sets)
    return HashStrategy(sets, C, 1 / (E2 * C), "cert_hash")


def sensitivity_hash_strategy(f: PartialBooleanFunction) -> HashStrategy:
    """Bucket count equal to the sensitivity; candidates are sensitive indices (one-bit pairs)."""
    s = max(len(sensitive_indices(f, z)) for z in f.domain)
    if s == 0:
        raise ValueError("function has no sensitive edges")
    sets = {z: sorted(sensitive_indices(f, z)) for z in f.domain}
    return HashStrategy(sets, s, 1 / (E2 * s), "sens_hash")


def ec_hash_strategy(f: PartialBooleanFunction, witness=None, t: int = 5) -> HashStrategy:
    """Weighted pick inside a shared random bucket, weights from a bounded-weight witness."""
    if t <= 3:
        raise ValueError("t must exceed 3")
    if witness is None:
        rep = ec_bounds(f)
        witness = {**rep.witness["zero_weights"], **rep.witness["one_weights"]}
    for z in f.domain:
        if any(not 0 <= Fraction(v) <= 1 for v in witness[z]):
            raise ValueError("witness weights must lie in [0, 1]")
    for x in f.zero_set:
        for y in f.one_set:
            s = sum((Fraction(witness[x][i]) * Fraction(witness[y][i]) for i in range(f.n) if x[i] != y[i]),
                    Fraction(0))
            if s < 1:
                raise ValueError("witness infeasible at (%s, %s)" % (x, y))
    value = max(sum(Fraction(v) for v in witness[z]) for z in f.domain)
    size = math.ceil(value)
    sets = {z: [i + 1 for i in range(f.n) if witness[z][i] != 0] for z in f.domain}
    bound = Fraction(1, t * t) * (1 - Fraction(2, t - 1)) / size
    return HashStrategy(sets, size, bound, "ec_hash", weights=witness, shared_target=True)


def generic_hash_strategy(A_sets: dict, B_sets: dict, L: int, t: int, correct=None,
                          allow_single_bucket: bool = False) -> HashStrategy:
    """Abstract sets of size at most L; ``floor(L / 2t)`` buckets."""
    size = L // (2 * t)
    if size <= 1:
        if not allow_single_bucket:
            raise ValueError("floor(L/(2t)) = %d leaves no room to hash; fall back to another strategy" % size)
        size = 1
    for z, s in list(A_sets.items()) + list(B_sets.items()):
        if len(s) > L:
            raise ValueError("set for %r larger than L" % (z,))
    sets = {**A_sets, **B_sets}
    if correct is None:
        def correct(x, y, i):
            return i in A_sets[x] and i in B_sets[y]
    fb = min(min(s) for s in sets.values() if s) if any(sets.values()) else 1
    return HashStrategy(sets, size, Fraction(1, 18 * t * t), "generic_hash", correct=correct, fallback=fb)


# -- tribes -----------------------------------------------------------------------


class TribesStrategy(Strategy):
    """Random permutations of every block plus a pre-agreed target rank.

    Alice (some zero in every block) keeps the first zero ``a_i`` of each
    block and answers block ``i`` for the first ``i`` with ``sigma_i(a_i)`` equal
    to the target; Bob (an all-ones block ``b``) answers ``sigma_b^{-1}(target)``.
    """

    name = "tribes"

    def __init__(self, k: int, target: int = 1):
        if k < 2:
            raise ValueError("k must be at least 2")
        self.k = k
        self.target = target
        self.f = tribes_fn(k, k) if k * k <= 24 else None
        self.declared_bound = Fraction(1, k) * Fraction(k - 1, k) ** (k - 1)

    def features_x(self, x: str):
        k = self.k
        out = []
        for i in range(k):
            block = x[i * k:(i + 1) * k]
            if "0" not in block:
                raise ValueError("input %s is not a zero of TRIBES" % x)
            out.append(block.index("0"))
        return out

    def feature_y(self, y: str):
        k = self.k
        for i in range(k):
            if "0" not in y[i * k:(i + 1) * k]:
                return i
        raise ValueError("input %s is not a one of TRIBES" % y)

    def _ranks(self, seed, draws):
        """sigma[d, i, j]: 1-based rank of position j in block i for draw d."""
        k = self.k
        keys = np.asarray(uniform01(seed, np.asarray(draws)[:, None, None], _H,
                                    np.arange(k)[None, :, None], np.arange(k)[None, None, :]))
        return keys.argsort(axis=2).argsort(axis=2) + 1

    def alice(self, x, seed, draws):
        a = self.features_x(x)
        sig = self._ranks(seed, draws)
        k = self.k
        hit = np.stack([sig[:, i, a[i]] == self.target for i in range(k)], axis=1)
        first = hit.argmax(axis=1)
        pos = first * k + np.array(a)[first] + 1
        return np.where(hit.any(axis=1), pos, FALLBACK)

    def bob(self, y, seed, draws):
        b = self.feature_y(y)
        sig = self._ranks(seed, draws)
        j = (sig[:, b, :] == self.target).argmax(axis=1)
        return b * self.k + j + 1

    def exact_success(self, x, y):
        if self.k > 3:
            raise ValueError("exact enumeration only for k <= 3")
        return tribes_exact(self.k, self.features_x(x), self.feature_y(y), self.target)

    def canonical_pair(self, a, b):
        """Zero input with a single zero at a_i in block i; one input with only block b all ones."""
        k = self.k
        x = "".join("".join("0" if j == a[i] else "1" for j in range(k)) for i in range(k))
        y = "".join(("1" * k) if i == b else ("0" * k) for i in range(k))
        return x, y

    def canonical_pairs(self):
        return [self.canonical_pair(a, b) for a in product(range(self.k), repeat=self.k) for b in range(self.k)]


def tribes_exact(k: int, a, b: int, target: int) -> Fraction:
    """Exact success over all k-tuples of permutations (inverse ranks)."""
    perms = list(permutations(range(1, k + 1)))
    wins = 0
    total = 0
    for sig in product(perms, repeat=k):
        total += 1
        hits = [i for i in range(k) if sig[i][a[i]] == target]
        if hits and hits[0] == b:
            wins += 1
    return Fraction(wins, total)


def tribes_uniqueness(k: int) -> Fraction:
    """Probability that exactly one block's kept position hits a uniformly random target."""
    perms = list(permutations(range(1, k + 1)))
    good = total = 0
    a = [0] * k
    for sig in product(perms, repeat=k):
        for t in range(1, k + 1):
            total += 1
            good += sum(sig[i][a[i]] == t for i in range(k)) == 1
    return Fraction(good, total)


def tribes_strategy(k: int, target: int = 1) -> TribesStrategy:
    return TribesStrategy(k, target)


# -- decision trees ------------------------------------------------------------------


def tree_path(tree, z: str):
    """Indices queried on input z and the leaf value."""
    path = []
    node = tree
    while node[0] != "leaf":
        _, i, t0, t1 = node
        path.append(i)
        node = t1 if z[i - 1] == "1" else t0
    return path, node[1]


def tree_depth(tree) -> int:
    if tree[0] == "leaf":
        return 0
    return 1 + max(tree_depth(tree[2]), tree_depth(tree[3]))


def scan_tree(n: int, stop: str = "1", order=None):
    """Query in order; the first bit equal to ``stop`` decides."""
    order = list(order or range(1, n + 1))
    hit = 1 if stop == "1" else 0

    def build(k):
        if k == len(order):
            return ("leaf", 1 - hit)
        rest = build(k + 1)
        leaf = ("leaf", hit)
        return ("q", order[k], rest, leaf) if stop == "1" else ("q", order[k], leaf, rest)

    return build(0)


def parity_tree(n: int, i: int = 1, acc: int = 0):
    if i > n:
        return ("leaf", acc)
    return ("q", i, parity_tree(n, i + 1, acc), parity_tree(n, i + 1, acc ^ 1))


def tribes_tree(s: int, t: int):
    """Blocks in order: within a block query until a zero, a full block of ones answers 1."""
    def block(b, j):
        if b == s:
            return ("leaf", 0)
        if j == t:
            return ("leaf", 1)
        i = b * t + j + 1
        return ("q", i, block(b + 1, 0), block(b, j + 1))
    return block(0, 0)


def check_tree_paths(f, trees) -> None:
    """Query sequences on x and y agree up to and including the first index where x and y differ."""
    for _, tree in trees:
        for x in f.zero_set:
            px, _ = tree_path(tree, x)
            for y in f.one_set:
                py, _ = tree_path(tree, y)
                k = 0
                while k < min(len(px), len(py)) and px[k] == py[k] and x[px[k] - 1] == y[px[k] - 1]:
                    k += 1
                assert px[:k] == py[:k]
                if k < min(len(px), len(py)):
                    assert px[k] == py[k], "paths split before a differing query"


def decision_tree_strategy(f: PartialBooleanFunction, trees) -> FiniteStrategy:
    """Shared random tree and shared random step t; both answer the t-th query.

    Trees are ``("leaf", v)`` or ``("q", i, child_if_0, child_if_1)``;
    ``trees`` is a list of ``(weight, tree)`` pairs or a single tree.
    """
    if trees and trees[0] in ("leaf", "q"):
        trees = [(1, trees)]
    total = sum(Fraction(w) for w, _ in trees)
    trees = [(Fraction(w) / total, t) for w, t in trees]
    err = Fraction(0)
    for z, v in f.values.items():
        wrong = sum((w for w, t in trees if tree_path(t, z)[1] != v), Fraction(0))
        err = max(err, wrong)
    if err > Fraction(1, 3):
        raise ValueError("tree distribution errs with probability %s > 1/3" % err)
    check_tree_paths(f, trees)
    D = max(tree_depth(t) for _, t in trees)
    if D == 0:
        raise ValueError("trees make no queries")
    support = []
    for w, tree in trees:
        paths = {z: tree_path(tree, z)[0] for z in f.domain}
        for step in range(D):
            al = {x: (paths[x][step] if step < len(paths[x]) else FALLBACK) for x in f.zero_set}
            bo = {y: (paths[y][step] if step < len(paths[y]) else FALLBACK) for y in f.one_set}
            support.append((w / D, DeterministicPair(al, bo)))
    strat = FiniteStrategy(support, (1 - 2 * err) / D, "dtree")
    strat.depth = D
    strat.error = err
    strat.nominal_bound = Fraction(4, 9) / D
    return strat


# -- approximate index (native representation) ---------------------------------------


class ApIndStrategy(Strategy):
    """Half the time a shared random address bit, half the time ball hashing.

    Inputs are ``(address, value)``: the table holds ``value`` on the radius-r
    ball around the address and 2 elsewhere.  Outputs 1..k are address bits;
    ``k + 1 + c`` is table cell ``c``.  Small balls are hashed cell by cell;
    for large balls the bucket contents are sampled through their exact joint
    law (independent binomial counts on A&B, A-B and B-A).
    """

    name = "apind"
    EXPLICIT_LIMIT = 4096

    def __init__(self, k: int, radius: int | None = None):
        from .boolfn import apind_radius

        self.k = k
        self.r = apind_radius(k) if radius is None else radius
        self.ball = ball_size(k, self.r)
        lg = math.log2(k) if k > 1 else 1.0
        self.size = max(1, math.floor(self.ball / (2 * math.sqrt(lg))))
        self.explicit = self.ball <= self.EXPLICIT_LIMIT
        self.declared_bound = None

    def addr_bit(self, a: int, z: int) -> int:
        return a >> (self.k - z) & 1

    def cells(self, a: int):
        out = []
        for d in range(self.r + 1):
            for flip in combinations(range(self.k), d):
                c = a
                for j in flip:
                    c ^= 1 << j
                out.append(c)
        return sorted(out)

    def table_value(self, inp, c):
        a, v = inp
        return v if bin(a ^ c).count("1") <= self.r else 2

    def referee(self, x, y, a, b):
        a = np.asarray(a)
        out = np.zeros(a.size, dtype=bool)
        for t, (oa, ob) in enumerate(zip(a, np.asarray(b))):
            if oa != ob:
                continue
            if oa <= self.k:
                out[t] = self.addr_bit(x[0], int(oa)) != self.addr_bit(y[0], int(oa))
            else:
                c = int(oa) - self.k - 1
                out[t] = self.table_value(x, c) != self.table_value(y, c)
        return out

    def _play(self, inp, seed, draws, stream):
        draws = np.asarray(draws, dtype=np.int64)
        first = uniform01(seed, draws, _MIX) < 0.5
        addr = below(self.k, seed, draws, _Z) + 1
        cand = np.array(self.cells(inp[0]), dtype=np.int64)
        h = below(self.size, seed, draws[:, None], _H, cand[None, :])
        hit = h == 0
        cnt = hit.sum(axis=1)
        u = (uniform01(seed, draws, stream) * cnt).astype(np.int64)
        k = (np.cumsum(hit, axis=1) <= u[:, None]).sum(axis=1)
        picked = cand[np.minimum(k, cand.size - 1)] + self.k + 1
        hashed = np.where(cnt > 0, picked, FALLBACK)
        return np.where(first, addr, hashed)

    def alice(self, x, seed, draws):
        if not self.explicit:
            raise NotImplementedError("large balls are simulated jointly; use simulate")
        return self._play(x, seed, draws, _A)

    def bob(self, y, seed, draws):
        if not self.explicit:
            raise NotImplementedError("large balls are simulated jointly; use simulate")
        return self._play(y, seed, draws, _B)

    def _sizes(self, a, b):
        m = bin(a ^ b).count("1")
        both = ball_intersection(self.k, m, self.r)
        return both, self.ball - both

    def simulate(self, x, y, seed, draws):
        if self.explicit:
            return super().simulate(x, y, seed, draws)
        draws = np.asarray(draws, dtype=np.int64)
        first = uniform01(seed, draws, _MIX) < 0.5
        addr = below(self.k, seed, draws, _Z) + 1
        bits = np.array([self.addr_bit(x[0], z) != self.addr_bit(y[0], z) for z in range(1, self.k + 1)])
        win1 = bits[addr - 1]
        both, only = self._sizes(x[0], y[0])
        rng = np.random.Generator(np.random.Philox(key=[seed & (2 ** 64 - 1), 0x61706964]))
        p = 1.0 / self.size
        n = draws.size
        cab = rng.binomial(both, p, n)
        ca = rng.binomial(only, p, n)
        cb = rng.binomial(only, p, n)
        na, nb = cab + ca, cab + cb
        ua = (uniform01(seed, draws, _A) * np.maximum(na, 1)).astype(np.int64)
        ub = (uniform01(seed, draws, _B) * np.maximum(nb, 1)).astype(np.int64)
        win2 = (na > 0) & (nb > 0) & (ua == ub) & (ua < cab)
        fb_both = (na == 0) & (nb == 0) & bool(bits[FALLBACK - 1])
        return np.where(first, win1, win2 | fb_both)

    def exact_success(self, x, y):
        """Half the address term plus half the hashing term (floats for large balls)."""
        m = bin(x[0] ^ y[0]).count("1")
        s1 = Fraction(m, self.k)
        both, only = self._sizes(x[0], y[0])
        fb_ok = self.addr_bit(x[0], FALLBACK) != self.addr_bit(y[0], FALLBACK)
        if self.ball <= 64:
            p = Fraction(1, self.size)
            pb, po = _binom_pmf(both, p), _binom_pmf(only, p)
            s2 = Fraction(0)
            for g, pg in enumerate(pb):
                for ca, pa in enumerate(po):
                    for cb, pc in enumerate(po):
                        na, nb = g + ca, g + cb
                        if na and nb:
                            s2 += pg * pa * pc * Fraction(g, na * nb)
                        elif not na and not nb and fb_ok:
                            s2 += pg * pa * pc
            return (s1 + s2) / 2
        from scipy.stats import binom

        p = 1.0 / self.size
        top = int(max(60, 20 * self.ball * p))
        js = np.arange(top)
        pg = binom.pmf(js, both, p)
        po = binom.pmf(js, only, p)
        G, A_, B_ = np.meshgrid(js, js, js, indexing="ij")
        na, nb = G + A_, G + B_
        with np.errstate(divide="ignore", invalid="ignore"):
            term = np.where((na > 0) & (nb > 0), G / (na * nb), 0.0)
        s2 = float((pg[:, None, None] * po[None, :, None] * po[None, None, :] * term).sum())
        if fb_ok:
            s2 += float(pg[0] * po[0] * po[0])
        return (float(s1) + s2) / 2


def apind_strategy(k: int, radius: int | None = None) -> ApIndStrategy:
    return ApIndStrategy(k, radius)


def apind_input(k: int, address: str | int, value: int):
    a = int(address, 2) if isinstance(address, str) else address
    return (a, value)


# -- evaluation -----------------------------------------------------------------------


def eval_exact(strategy: Strategy, f: PartialBooleanFunction | None = None, pairs=None, pair_filter=None):
    """Worst-case exact success and the pair attaining it (first in order on ties)."""
    if pairs is None:
        pairs = f.pairs()
    if pair_filter is not None:
        pairs = [(x, y) for x, y in pairs if pair_filter(x, y)]
    worst, arg = None, None
    for x, y in pairs:
        p = strategy.exact_success(x, y)
        if worst is None or p < worst:
            worst, arg = p, (x, y)
    return worst, arg


def _pair_label(x, y):
    if isinstance(x, tuple):
        return "%s|%s" % (x, y)
    return "%s|%s" % (x, y)


def eval_monte_carlo(strategy: Strategy, pairs, trials: int, seed: int, bound=None):
    """One row per pair: estimate, 99% interval and a 3-sigma check against the bound."""
    if bound is None:
        bound = strategy.declared_bound
    draws = np.arange(trials, dtype=np.int64)
    rows = []
    for x, y in pairs:
        wins = strategy.simulate(x, y, seed, draws)
        succ = int(np.count_nonzero(wins))
        est = succ / trials
        rad = Z99 * math.sqrt(est * (1 - est) / trials)
        row = {"pair": _pair_label(x, y), "trials": trials, "successes": succ, "estimate": est,
               "ci99": [max(0.0, est - rad), min(1.0, est + rad)]}
        if bound is not None:
            b = float(bound)
            sigma = math.sqrt(b * (1 - b) / trials)
            row["declared_bound"] = b
            row["pass"] = est >= b - 3 * sigma
        else:
            row["declared_bound"] = None
            row["pass"] = True
        rows.append(row)
    return rows


STRATEGIES = {
    "cert_hash": certificate_hash_strategy,
    "ec_hash": ec_hash_strategy,
    "sens_hash": sensitivity_hash_strategy,
    "private_cert": private_certificate_strategy,
}

"""Values of the certificate game under different resources.

Alice holds x with f(x)=0, Bob holds y with f(y)=1, and they win when both
output the same index i with x_i != y_i.  ``omega`` is the best worst-case
winning probability; the game value reported is ``1/omega``.

* non-signaling: one exact LP over the conditional distributions
  p(i, j | x, y);
* shared randomness: a zero-sum game between a distribution over input
  pairs and deterministic strategy pairs, solved by cutting planes with an
  exhaustive best-response oracle;
* private randomness: no exact method, only a certified sandwich;
* one-bit-difference variants: closed forms plus cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .boolfn import PartialBooleanFunction, hamming, sensitive_indices
from .linprog import CapError, LinearProgram, LpError, _restricted_lp, solve, solve_zero_sum, to_fraction
from .measures import (
    _weight_arrays,
    alternate_weights,
    certificate_weights,
    certificates,
    exact_weight_margin,
    incidence,
    polish_exact,
    sensitivity,
    spectral_sensitivity,
    top_singular,
    weight_program_upper,
)
from ._util import dumps

NS_MAX_VARS = 500_000
PUB_EXACT_BITS = 20
PUB_STARTS = 64
NS_TOL = 1e-9
E2 = math.e ** 2


@dataclass
class GameReport:
    game: str
    lower: object
    upper: object
    exact: bool
    omega: object
    certificates: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)

    @property
    def value(self):
        if not self.exact:
            raise ValueError("%s is only known as an interval" % self.game)
        return self.upper

    def to_dict(self) -> dict:
        return {"game": self.game, "lower": self.lower, "upper": self.upper, "exact": self.exact,
                "omega": self.omega, "certificates": self.certificates, "flags": self.flags}

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _diff(f):
    return _weight_arrays(f)[2]


# -- non-signaling ----------------------------------------------------------


def ns_lp(f: PartialBooleanFunction):
    """LP for the non-signaling value; returns (lp, var index function, delta index).

    One marginal equality per output index is implied by normalisation and
    is left out, so the equality rows are independent.
    """
    X, Y, n = f.zero_set, f.one_set, f.n
    nx, ny = len(X), len(Y)
    if nx * ny * n * n > NS_MAX_VARS:
        raise CapError("non-signaling LP has more than %d variables" % NS_MAX_VARS)
    D = _diff(f)
    lp = LinearProgram("max")

    def var(a, b, i, j):
        return ((a * ny + b) * n + i) * n + j

    for a in range(nx):
        for b in range(ny):
            for i in range(n):
                for j in range(n):
                    lp.add_var(0, 0, None, "p_%d%d_%d_%d" % (a, b, i + 1, j + 1))
    delta = lp.add_var(1, 0, None, "delta")
    for a in range(nx):
        for b in range(ny):
            lp.add_row({var(a, b, i, j): 1 for i in range(n) for j in range(n)}, "=", 1, "norm_%d_%d" % (a, b))
    for a in range(nx):
        for i in range(n - 1):
            for b in range(1, ny):
                row = {var(a, b, i, j): 1 for j in range(n)}
                row.update({var(a, 0, i, j): -1 for j in range(n)})
                lp.add_row(row, "=", 0, "alice_%d_%d_%d" % (a, i + 1, b))
    for b in range(ny):
        for j in range(n - 1):
            for a in range(1, nx):
                row = {var(a, b, i, j): 1 for i in range(n)}
                row.update({var(0, b, i, j): -1 for i in range(n)})
                lp.add_row(row, "=", 0, "bob_%d_%d_%d" % (b, j + 1, a))
    pair_rows = {}
    for a in range(nx):
        for b in range(ny):
            row = {var(a, b, i, i): 1 for i in range(n) if D[a, b, i]}
            row[delta] = -1
            pair_rows[a, b] = lp.add_row(row, ">=", 0, "win_%d_%d" % (a, b))
    return lp, var, delta, pair_rows


def ns_check(p, tol: float = NS_TOL):
    """(ok, max violation) for normalisation, positivity and no-signaling.

    ``p`` has shape (|X|, |Y|, n, n) and holds p(i, j | x, y).
    """
    P = np.asarray(p, dtype=object if _is_exact(p) else float)
    nx, ny, n, _ = P.shape
    viol = 0
    for a in range(nx):
        for b in range(ny):
            viol = max(viol, abs(sum(P[a, b].ravel()) - 1))
            viol = max(viol, max(-v for v in P[a, b].ravel()) if min(P[a, b].ravel()) < 0 else 0)
    alice = [[[sum(P[a, b, i, :]) for i in range(n)] for b in range(ny)] for a in range(nx)]
    bob = [[[sum(P[a, b, :, j]) for j in range(n)] for b in range(ny)] for a in range(nx)]
    for a in range(nx):
        for b in range(ny):
            for i in range(n):
                viol = max(viol, abs(alice[a][b][i] - alice[a][0][i]))
                viol = max(viol, abs(bob[a][b][i] - bob[0][b][i]))
    return viol <= tol, viol


def _is_exact(p) -> bool:
    arr = np.asarray(p, dtype=object)
    first = arr.ravel()[0] if arr.size else 0
    return isinstance(first, (Fraction, int))


def ns_win(f, p):
    """min over pairs of sum_{i: x_i != y_i} p(i, i | x, y)."""
    D = _diff(f)
    P = np.asarray(p, dtype=object)
    best = None
    for a in range(D.shape[0]):
        for b in range(D.shape[1]):
            w = sum((P[a, b, i, i] for i in range(f.n) if D[a, b, i]), Fraction(0))
            best = w if best is None or w < best else best
    return best


def cg_ns(f: PartialBooleanFunction, mode: str = "exact") -> GameReport:
    lp, var, delta, pair_rows = ns_lp(f)
    sol = solve(lp, mode)
    if not sol.optimal:
        raise LpError("non-signaling LP is %s" % sol.status)
    nx, ny, n = len(f.zero_set), len(f.one_set), f.n
    P = np.empty((nx, ny, n, n), dtype=object)
    for a in range(nx):
        for b in range(ny):
            for i in range(n):
                for j in range(n):
                    P[a, b, i, j] = sol.primal[var(a, b, i, j)]
    omega = sol.value
    mu = {}
    for (a, b), r in pair_rows.items():
        if sol.dual[r] != 0:
            mu["%s|%s" % (f.zero_set[a], f.one_set[b])] = abs(sol.dual[r])
    value = 1 / omega if omega else math.inf
    cert = {"ns_strategy": P.tolist(), "mu": mu, "dual_objective": sol.dual_objective(lp)}
    return GameReport("cgns", value, value, True, omega, cert)


def verify_ns(f: PartialBooleanFunction, report: GameReport) -> bool:
    """Re-check a non-signaling report: strategy valid, attains omega, dual matches."""
    P = np.array(report.certificates["ns_strategy"], dtype=object)
    ok, _ = ns_check(P, 0)
    return ok and ns_win(f, P) == report.omega and report.certificates["dual_objective"] == report.omega


# -- shared randomness --------------------------------------------------------


def _map_digits(idx: np.ndarray, n: int, q: int) -> np.ndarray:
    out = np.empty((idx.size, q), dtype=np.int64)
    rest = idx.copy()
    for k in range(q):
        out[:, k] = rest % n
        rest //= n
    return out


def _enumerate_best(M, D, n, chunk=1 << 15):
    """Best map on the second axis when the first axis best-responds.

    ``M`` is (P, Q) non-negative weights, ``D`` the (P, Q, n) difference mask.
    Returns (value, map over Q, response over P).  Integer weights give
    exact answers.
    """
    P, Q = M.shape
    C = M[:, :, None] * D
    total = n ** Q
    best_v, best_map = None, None
    rowsel = np.arange(P)[None, :]
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        maps = _map_digits(idx, n, Q)
        K = idx.size
        W = np.zeros((K, P, n), dtype=C.dtype)
        ks = np.arange(K)[:, None]
        for q in range(Q):
            mq = maps[:, q]
            W[ks, rowsel, mq[:, None]] += C[:, q, :][:, mq].T
        vals = W.max(axis=2).sum(axis=1)
        k = int(np.argmax(vals))
        if best_v is None or vals[k] > best_v:
            best_v, best_map = vals[k], maps[k].copy()
    resp = _respond(M, D, best_map, n)
    return best_v, best_map, resp


def _respond(M, D, qmap, n):
    """Best response on the first axis to a fixed map on the second (ties to the smallest index)."""
    P, Q = M.shape
    W = np.zeros((P, n), dtype=M.dtype)
    for q in range(Q):
        W[:, qmap[q]] += M[:, q] * D[:, q, qmap[q]]
    return W.argmax(axis=1)


def _payoff(D, A, B, pairs):
    return [int(A[a] == B[b] and D[a, b, A[a]]) for a, b in pairs]


class PublicOracle:
    """Best deterministic strategy pair against a distribution over input pairs."""

    def __init__(self, f: PartialBooleanFunction, pairs, heuristic: bool = False, seed: int = 0):
        self.f = f
        self.D = _diff(f)
        self.pairs = list(pairs)
        self.nx, self.ny = len(f.zero_set), len(f.one_set)
        self.enum_y = self.ny <= self.nx
        self.heuristic = heuristic
        self.seed = seed

    def weights(self, mu, exact):
        if exact:
            fr = [to_fraction(v) for v in mu]
            L = 1
            for v in fr:
                L = L * v.denominator // math.gcd(L, v.denominator)
            if L < (1 << 62) // max(1, len(fr)):
                M = np.zeros((self.nx, self.ny), dtype=np.int64)
                for (a, b), v in zip(self.pairs, fr):
                    M[a, b] = int(v * L)
                return M, Fraction(1, L)
            raise LpError("distribution denominators too large for the integer oracle")
        M = np.zeros((self.nx, self.ny))
        for (a, b), v in zip(self.pairs, mu):
            M[a, b] = float(v)
        return M, 1.0

    def best(self, M):
        n = self.f.n
        if self.enum_y:
            v, B, A = _enumerate_best(M, self.D, n)
        else:
            v, A, B = _enumerate_best(M.T, self.D.transpose(1, 0, 2), n)
        return v, A, B

    def alternate(self, M):
        n = self.f.n
        rng = np.random.default_rng(self.seed)
        Dt = self.D.transpose(1, 0, 2)
        best = None
        for _ in range(PUB_STARTS):
            B = rng.integers(0, n, self.ny)
            A = _respond(M, self.D, B, n)
            for _ in range(50):
                B2 = _respond(M.T, Dt, A, n)
                A2 = _respond(M, self.D, B2, n)
                if np.array_equal(A2, A) and np.array_equal(B2, B):
                    break
                A, B = A2, B2
            v = self.value(M, A, B)
            if best is None or v > best[0]:
                best = (v, A.copy(), B.copy())
        return best

    def value(self, M, A, B):
        return sum(M[a, b] for a, b in self.pairs if A[a] == B[b] and self.D[a, b, A[a]])

    def __call__(self, mu, exact):
        M, scale = self.weights(mu, exact)
        if self.heuristic:
            v, A, B = self.alternate(M)
        else:
            v, A, B = self.best(M)
        value = Fraction(int(v)) * scale if exact else float(v)
        key = (tuple(int(a) for a in A), tuple(int(b) for b in B))
        return value, _payoff(self.D, A, B, self.pairs), key

    def relaxed_bound(self, mu):
        """Upper bound on every strategy pair's mass: each side answering every pair alone."""
        fr = [to_fraction(v) for v in mu]
        by_x = {}
        by_y = {}
        for (a, b), v in zip(self.pairs, fr):
            for i in range(self.f.n):
                if self.D[a, b, i]:
                    by_x[a, i] = by_x.get((a, i), 0) + v
                    by_y[b, i] = by_y.get((b, i), 0) + v
        sx = sum(max((by_x.get((a, i), 0) for i in range(self.f.n)), default=0) for a in range(self.nx))
        sy = sum(max((by_y.get((b, i), 0) for i in range(self.f.n)), default=0) for b in range(self.ny))
        return min(Fraction(sx), Fraction(sy))


def _pub_exact_ok(f, pairs=None) -> bool:
    side = min(len(f.zero_set), len(f.one_set))
    return side * math.log2(max(f.n, 2)) <= PUB_EXACT_BITS


def cg_pub(f: PartialBooleanFunction, mode: str = "exact", distance: int | None = None,
           seed: int = 0, max_rows: int = 10000) -> GameReport:
    """Shared-randomness value.  ``distance`` restricts the pairs the referee may pick."""
    if mode not in ("exact", "interval"):
        raise ValueError("mode must be 'exact' or 'interval'")
    if mode == "exact" and not _pub_exact_ok(f):
        raise CapError("exhaustive oracle needs min(|f^-1(0)|, |f^-1(1)|) * log2 n <= %d" % PUB_EXACT_BITS)
    zi = {x: a for a, x in enumerate(f.zero_set)}
    yi = {y: b for b, y in enumerate(f.one_set)}
    pairs = [(zi[x], yi[y]) for x, y in f.pairs(distance)]
    if not pairs:
        raise ValueError("no input pairs at the requested distance")
    oracle = PublicOracle(f, pairs, heuristic=(mode == "interval"), seed=seed)
    n = f.n
    init = []
    for i in range(n):
        A = np.full(oracle.nx, i)
        B = np.full(oracle.ny, i)
        init.append((_payoff(oracle.D, A, B, pairs), (tuple(A.tolist()), tuple(B.tolist()))))
    res = solve_zero_sum(len(pairs), oracle, init, "exact" if mode == "exact" else "float", max_rows)
    game = "cgpub" if distance is None else "cgpub%d" % distance
    mixture = []
    for w, key in zip(res.weights, res.keys):
        if w != 0:
            A, B = key
            mixture.append({"weight": w,
                            "alice": {f.zero_set[a]: A[a] + 1 for a in range(oracle.nx)},
                            "bob": {f.one_set[b]: B[b] + 1 for b in range(oracle.ny)}})
    if mode == "exact" and res.status == "optimal":
        omega = res.value
        mu = {"%s|%s" % (f.zero_set[a], f.one_set[b]): v for (a, b), v in zip(pairs, res.mu) if v != 0}
        cert = {"mu": mu, "strategy_pairs": mixture, "rows": len(res.keys)}
        return GameReport(game, 1 / omega, 1 / omega, True, omega, cert)
    # interval: the restricted mixture wins with probability >= delta on every pair,
    # and any distribution bounds every strategy's mass from above
    delta = Fraction(res.value).limit_denominator(10 ** 9)
    sol = _restricted_exact(f, res.keys, pairs, oracle)
    win, mu_ex, weights = sol
    if mode == "exact":
        top = oracle(mu_ex, True)[0]
        flags = ["row_cap"]
    else:
        top = oracle.relaxed_bound(mu_ex)
        flags = ["heuristic_oracle"]
    lower = 1 / top if top else math.inf
    upper = 1 / win
    mu = {"%s|%s" % (f.zero_set[a], f.one_set[b]): v for (a, b), v in zip(pairs, mu_ex) if v != 0}
    cert = {"mu": mu, "strategy_pairs": mixture, "rows": len(res.keys), "restricted_value": delta}
    return GameReport(game, lower, upper, lower == upper, [top, win], cert, flags)


def _restricted_exact(f, keys, pairs, oracle):
    rows = [_payoff(oracle.D, np.array(A), np.array(B), pairs) for A, B in keys]
    sol = solve(_restricted_lp(len(pairs), rows), "exact")
    return sol.value, sol.primal[:len(pairs)], [abs(y) for y in sol.dual[1:]]


def verify_public(f: PartialBooleanFunction, report: GameReport, distance: int | None = None) -> bool:
    """Strategy mixture wins with probability omega everywhere; mu caps every strategy at omega."""
    omega = report.omega
    mixture = report.certificates["strategy_pairs"]
    total = sum(Fraction(m["weight"]) for m in mixture)
    for x, y in f.pairs(distance):
        win = Fraction(0)
        for m in mixture:
            i = m["alice"][x]
            if i == m["bob"][y] and x[i - 1] != y[i - 1]:
                win += Fraction(m["weight"])
        if win / total < omega:
            return False
    zi = {x: a for a, x in enumerate(f.zero_set)}
    yi = {y: b for b, y in enumerate(f.one_set)}
    pairs = [(zi[x], yi[y]) for x, y in f.pairs(distance)]
    mu = [Fraction(report.certificates["mu"].get("%s|%s" % (f.zero_set[a], f.one_set[b]), 0)) for a, b in pairs]
    top, _, _ = PublicOracle(f, pairs)(mu, True)
    return top <= omega and sum(mu) == 1


def fc_from_public(f: PartialBooleanFunction, report: GameReport):
    """Weights c * P[A(x) = i] built from a shared-randomness strategy; FC-feasible."""
    c = 1 / report.omega
    mixture = report.certificates["strategy_pairs"]
    total = sum(Fraction(m["weight"]) for m in mixture)
    v = {z: [Fraction(0)] * f.n for z in f.domain}
    for m in mixture:
        w = Fraction(m["weight"]) / total
        for x, i in m["alice"].items():
            v[x][i - 1] += c * w
        for y, i in m["bob"].items():
            v[y][i - 1] += c * w
    return v


def fc_feasible(f: PartialBooleanFunction, v) -> bool:
    for z in f.domain:
        for w in f.side(1 - f.values[z]):
            if sum((v[z][i] for i in range(f.n) if z[i] != w[i]), Fraction(0)) < 1:
                return False
    return True


# -- private randomness -------------------------------------------------------


def private_win(f, PX, PY):
    """Exact worst-case winning probability of independent per-input distributions."""
    best = None
    for a, x in enumerate(f.zero_set):
        for b, y in enumerate(f.one_set):
            s = sum((PX[a][i] * PY[b][i] for i in range(f.n) if x[i] != y[i]), Fraction(0))
            best = s if best is None or s < best else best
    return best


def _normalise(W):
    out = []
    for row in W:
        t = sum(row, Fraction(0))
        out.append([Fraction(v) / t for v in row])
    return out


def cg_private_bounds(f: PartialBooleanFunction, seed: int = 0, with_ns: bool = True) -> GameReport:
    """Certified sandwich for the private-coin value.

    Lower end: squared spectral value and the non-signaling value.  Upper end:
    exact worst-case value of explicit private strategies (uniform on
    certificates, and normalised feasible points of the bounded and unbounded
    weight programs).
    """
    lam = spectral_sensitivity(f).value
    lows = {"lambda_sq": lam * lam}
    if with_ns:
        lows["cg_ns"] = cg_ns(f).value
    rep = certificates(f)
    cx, cy = certificate_weights(f, rep)
    ups = {}
    ups["certificate"] = 1 / private_win(f, _normalise(cx), _normalise(cy))
    ups["C0C1"] = Fraction(rep.c0 * rep.c1)
    ex, ey, ev = weight_program_upper(f, cap=1, seed=seed)
    ups["ec_weights"] = 1 / private_win(f, _normalise(ex), _normalise(ey))
    ux, uy, uv = weight_program_upper(f, cap=None, seed=seed)
    ups["free_weights"] = 1 / private_win(f, _normalise(ux), _normalise(uy))
    lower = max(lows.values())
    key = min(ups, key=lambda k: ups[k])
    upper = ups[key]
    exact = abs(float(upper) - float(lower)) <= 1e-9 * float(upper)
    cert = {"lower_terms": lows, "upper_terms": ups, "best": key,
            "weights": {"ec": [ex, ey], "free": [ux, uy]}}
    if float(lower) > float(upper) * (1 + 1e-9):
        raise AssertionError("private-coin sandwich is empty: %s > %s" % (lower, upper))
    if exact:
        # the float spectral term only differs from the rational upper end by rounding
        lower = upper
    return GameReport("cg", lower, upper, exact, [1 / upper, 1 / lower if lower else math.inf], cert)


# -- one-bit-difference variants ---------------------------------------------


def sensitive_edges(f):
    X = {x: a for a, x in enumerate(f.zero_set)}
    Y = {y: b for b, y in enumerate(f.one_set)}
    edges = []
    for x, a in X.items():
        for i in range(f.n):
            y = x[:i] + ("1" if x[i] == "0" else "0") + x[i + 1:]
            if y in Y:
                edges.append((a, Y[y], i))
    return edges


BETA_SCHEDULE = tuple(4.0 * 4 ** i for i in range(12))


def single_bit_weights(f, betas=BETA_SCHEDULE):
    """Feasible point of the one-bit weight program found in log space.

    Weights are ``e^s`` on Alice's side and ``e^-s`` on Bob's, so every
    product constraint holds with equality and any ``s`` gives a valid
    upper bound ``max_z sum_i w_{z,i}``.  The objective is a smoothed max.
    """
    from scipy.optimize import minimize

    edges = sensitive_edges(f)
    if not edges:
        raise ValueError("no sensitive edges")
    ea = np.array([e[0] for e in edges])
    eb = np.array([e[1] for e in edges])
    nx, ny = len(f.zero_set), len(f.one_set)

    def sums(s):
        ws = np.exp(s)
        return np.bincount(ea, ws, nx), np.bincount(eb, 1 / ws, ny), ws

    def obj(s, beta):
        SA, SB, ws = sums(s)
        vals = np.concatenate([np.log(SA[SA > 0]), np.log(SB[SB > 0])])
        top = vals.max()
        z = np.exp(beta * (vals - top))
        F = top + np.log(z.sum()) / beta
        # gradient
        la = np.where(SA > 0, np.exp(beta * (np.log(np.where(SA > 0, SA, 1)) - top)), 0) / z.sum()
        lb = np.where(SB > 0, np.exp(beta * (np.log(np.where(SB > 0, SB, 1)) - top)), 0) / z.sum()
        g = la[ea] * ws / SA[ea] - lb[eb] * (1 / ws) / SB[eb]
        return F, g

    s = np.zeros(len(edges))
    for beta in betas:
        s = minimize(obj, s, args=(beta,), jac=True, method="L-BFGS-B").x
    SA, SB, ws = sums(s)
    return float(max(SA.max(), SB.max())), s, edges


def cg_single_bit(f: PartialBooleanFunction) -> GameReport:
    """Private-coin value against one-bit-difference pairs, equal to lambda squared.

    Cross-checked by a feasible point of the one-bit weight program, whose
    square must not exceed lambda squared by more than 5%.
    """
    if sensitivity(f).value == 0:
        raise ValueError("function has no sensitive edges; one-bit game undefined")
    lam = spectral_sensitivity(f).value
    value = lam * lam
    check, s, edges = single_bit_weights(f)
    flags = []
    if check * check > value * 1.05 or check < lam * (1 - 1e-6):
        flags.append("cross_check_disagrees")
    cert = {"lambda": lam, "weight_program_upper": check * check, "edge_log_weights": s}
    return GameReport("cg1", value, value, True, 1 / value, cert, flags)


def star_distribution(f: PartialBooleanFunction):
    """Uniform on the sensitive neighbours of a most sensitive input."""
    rep = sensitivity(f)
    z = rep.witness["input"]
    pairs = []
    for i in rep.witness["indices"]:
        w = z[:i - 1] + ("1" if z[i - 1] == "0" else "0") + z[i:]
        pairs.append((z, w) if f.values[z] == 0 else (w, z))
    s = len(pairs)
    return {p: Fraction(1, s) for p in pairs}


def star_bound(f: PartialBooleanFunction, mu) -> Fraction:
    """Largest mass any deterministic pair wins against a star distribution."""
    by_index = {}
    for (x, y), w in mu.items():
        i = [k for k in range(f.n) if x[k] != y[k]][0]
        by_index[i] = by_index.get(i, 0) + w
    return max(by_index.values())


def cg_pub_single_bit(f: PartialBooleanFunction, exact_limit: int = 4) -> GameReport:
    """Interval [s, e^2 s] for shared randomness against one-bit pairs.

    The lower end is certified by the star distribution, the upper end by
    the exact worst case of the sensitivity hashing strategy.  Small inputs
    also get the exact value from the restricted game.
    """
    from .strategies import eval_exact, sensitivity_hash_strategy

    s = sensitivity(f).value
    if s == 0:
        raise ValueError("function has no sensitive edges; one-bit game undefined")
    mu = star_distribution(f)
    top = star_bound(f, mu)
    lower = 1 / top
    strat = sensitivity_hash_strategy(f)
    worst, pair = eval_exact(strat, f, pair_filter=lambda x, y: hamming(x, y) == 1)
    upper = min(Fraction(E2).limit_denominator(10 ** 12) * s, 1 / worst) if worst else E2 * s
    cert = {"mu": {"%s|%s" % p: w for p, w in mu.items()}, "hash_worst": worst, "hash_worst_pair": pair,
            "bounds": [lower, upper], "closed_form": [s, E2 * s]}
    if s <= exact_limit and _pub_exact_ok(f):
        restricted = cg_pub(f, "exact", distance=1)
        cert["restricted"] = restricted.certificates
        v = restricted.value
        return GameReport("cgpub1", v, v, True, restricted.omega, cert)
    return GameReport("cgpub1", lower, upper, False, [1 / upper, 1 / lower], cert)


def cg_star_interval(f: PartialBooleanFunction) -> GameReport:
    """Entanglement-assisted value is not computed; only the enclosing interval is reported."""
    ns = cg_ns(f).value
    pub = cg_pub(f, "exact" if _pub_exact_ok(f) else "interval")
    return GameReport("cgstar", ns, pub.upper, False, None, {}, ["not_computed"])


GAMES = {
    "cgns": cg_ns,
    "cgpub": cg_pub,
    "cg": cg_private_bounds,
    "cg1": cg_single_bit,
    "cgpub1": cg_pub_single_bit,
}

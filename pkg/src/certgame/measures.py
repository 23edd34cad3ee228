"""Complexity measures of partial Boolean functions.

Combinatorial measures (sensitivity, block sensitivity, certificates) are
computed by enumeration.  Fractional certificate, fractional block
sensitivity and the classical adversary value are exact rational LPs.
The spectral value is a power iteration.  The weight programs whose
constraints are products of weights have no exact solver here; they are
reported as certified intervals whose ends come from explicit witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .boolfn import PartialBooleanFunction, bit_mask, sensitive_indices, to_int, to_str
from .linprog import CapError, LinearProgram, solve
from ._util import dumps

BS_MAX_N = 14
CERT_MAX_N = 16
FC_MAX_DOMAIN = 4096
SPECTRAL_MAX_DOMAIN = 4096
CMM_MAX_DOMAIN = 512
WEIGHT_MAX_DOMAIN = 512


@dataclass
class MeasureReport:
    measure: str
    lower: object
    upper: object
    exact: bool
    witness: dict = field(default_factory=dict)
    per_input: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)

    @property
    def value(self):
        if not self.exact:
            raise ValueError("%s is only known as an interval" % self.measure)
        return self.upper

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness": self.witness,
            "per_input": self.per_input,
            "flags": self.flags,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())


def _exact(name, value, witness=None, per_input=None, flags=None) -> MeasureReport:
    return MeasureReport(name, value, value, True, witness or {}, per_input or {}, flags or [])


def _indices(mask: int, n: int) -> list[int]:
    return [i for i in range(1, n + 1) if mask & bit_mask(n, i)]


def _mask(indices, n: int) -> int:
    m = 0
    for i in indices:
        m |= bit_mask(n, i)
    return m


def _minimal(masks) -> list[int]:
    """Masks with no proper submask in the collection."""
    out: list[int] = []
    for m in sorted(set(masks), key=lambda v: (bin(v).count("1"), v)):
        if not any(o & m == o for o in out):
            out.append(m)
    return out


def _opposite_masks(f: PartialBooleanFunction, z: str) -> list[int]:
    zi = to_int(z)
    other = f.side(1 - f.values[z])
    return [zi ^ to_int(w) for w in other]


# -- sensitivity and block sensitivity -------------------------------------


def sensitivity(f: PartialBooleanFunction) -> MeasureReport:
    per = {z: len(sensitive_indices(f, z)) for z in f.domain}
    best = max(per, key=lambda z: (per[z], [-ord(c) for c in z]))
    return _exact("s", per[best], {"input": best, "indices": sorted(sensitive_indices(f, best))}, per)


def _pack(blocks: list[int], n: int) -> list[int]:
    """Largest family of pairwise disjoint masks (branch and bound)."""
    blocks = sorted(blocks, key=lambda b: (bin(b).count("1"), b))
    best: list[int] = []

    def rec(avail, chosen, used):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not avail:
            return
        free = n - bin(used).count("1")
        smallest = bin(avail[0]).count("1")
        if len(chosen) + min(len(avail), free // smallest) <= len(best):
            return
        b = avail[0]
        rec([a for a in avail[1:] if not a & b], chosen + [b], used | b)
        rec(avail[1:], chosen, used)

    rec(blocks, [], 0)
    return best


def block_sensitivity(f: PartialBooleanFunction) -> MeasureReport:
    if f.n > BS_MAX_N:
        raise CapError("block sensitivity limited to n <= %d" % BS_MAX_N)
    per, wit = {}, {}
    for z in f.domain:
        packing = _pack(_minimal(_opposite_masks(f, z)), f.n)
        per[z] = len(packing)
        wit[z] = [_indices(b, f.n) for b in packing]
    best = max(per, key=lambda z: per[z])
    return _exact("bs", per[best], {"input": best, "blocks": wit[best]}, per)


# -- certificates --------------------------------------------------------------


def _min_hitting_set(masks: list[int], n: int, start: int = 0) -> list[int]:
    """Lexicographically first smallest index set meeting every mask."""
    masks = _minimal(masks)
    if not masks:
        return []
    forced = sorted({_indices(m, n)[0] for m in masks if bin(m).count("1") == 1})
    for size in range(max(start, len(forced)), n + 1):
        for S in combinations(range(1, n + 1), size):
            sm = _mask(S, n)
            if all(m & sm for m in masks):
                return list(S)
    raise AssertionError("full index set always hits")


@dataclass
class CertificateReport:
    c0: int
    c1: int
    c0_weak: int
    c1_weak: int
    strong_sets: dict
    weak_sets: dict

    @property
    def strong(self) -> int:
        return max(self.c0, self.c1)

    @property
    def weak(self) -> int:
        return max(self.c0_weak, self.c1_weak)

    def to_dict(self) -> dict:
        return {"C0": self.c0, "C1": self.c1, "C0_weak": self.c0_weak, "C1_weak": self.c1_weak,
                "C_weak": self.weak, "C_strong": self.strong,
                "strong_sets": self.strong_sets, "weak_sets": self.weak_sets}


def certificates(f: PartialBooleanFunction) -> CertificateReport:
    """Per-input minimum certificates, strong and weak.

    A weak b-certificate only has to rule out inputs of value 1-b; a strong
    one must force every consistent input into the domain with value b.
    """
    if f.n > CERT_MAX_N:
        raise CapError("certificates limited to n <= %d" % CERT_MAX_N)
    n = f.n
    strong, weak = {}, {}
    outside = {b: [c for c in range(1 << n) if f.values.get(to_str(c, n)) != b] for b in (0, 1)}
    for z, b in f.values.items():
        zi = to_int(z)
        weak[z] = _min_hitting_set([zi ^ to_int(w) for w in f.side(1 - b)], n)
        size_b = len(f.side(b))
        lower = n - size_b.bit_length() + 1 if size_b else n
        strong[z] = _min_hitting_set([zi ^ c for c in outside[b]], n, max(0, lower))
    def side_max(sets, b):
        return max((len(sets[z]) for z in f.side(b)), default=0)
    return CertificateReport(side_max(strong, 0), side_max(strong, 1), side_max(weak, 0), side_max(weak, 1),
                             strong, weak)


def certificate_complexity(f: PartialBooleanFunction, variant: str = "strong") -> MeasureReport:
    rep = certificates(f)
    sets = rep.strong_sets if variant == "strong" else rep.weak_sets
    value = {"strong": rep.strong, "weak": rep.weak, "0": rep.c0, "1": rep.c1}[variant]
    per = {z: len(s) for z, s in sets.items()}
    return _exact("C_" + variant, value, rep.to_dict(), per)


# -- fractional certificate and its dual ----------------------------------


def fc_lp(f: PartialBooleanFunction, z: str) -> LinearProgram:
    lp = LinearProgram("min")
    for i in range(1, f.n + 1):
        lp.add_var(1, 0, None, "v%d" % i)
    for m in _minimal(_opposite_masks(f, z)):
        lp.add_row({i - 1: 1 for i in _indices(m, f.n)}, ">=", 1)
    return lp


def fbs_lp(f: PartialBooleanFunction, z: str) -> LinearProgram:
    lp = LinearProgram("max")
    others = f.side(1 - f.values[z])
    for w in others:
        lp.add_var(1, 0, None, "u_" + w)
    for i in range(f.n):
        row = {k: 1 for k, w in enumerate(others) if w[i] != z[i]}
        if row:
            lp.add_row(row, "<=", 1, "idx%d" % (i + 1))
    return lp


def _check_domain(f, cap, what):
    if len(f) > cap:
        raise CapError("%s limited to |Dom f| <= %d" % (what, cap))


def fractional_certificate(f: PartialBooleanFunction, mode: str = "exact") -> MeasureReport:
    _check_domain(f, FC_MAX_DOMAIN, "fractional certificate")
    per, weights = {}, {}
    for z in f.domain:
        sol = solve(fc_lp(f, z), mode)
        per[z] = sol.value
        weights[z] = sol.primal
    best = max(per, key=lambda z: per[z])
    return _exact("FC", per[best], {"input": best, "weights": weights}, per)


def fractional_block_sensitivity(f: PartialBooleanFunction, mode: str = "exact") -> MeasureReport:
    _check_domain(f, FC_MAX_DOMAIN, "fractional block sensitivity")
    per, wit = {}, {}
    for z in f.domain:
        sol = solve(fbs_lp(f, z), mode)
        per[z] = sol.value
        others = f.side(1 - f.values[z])
        wit[z] = {w: u for w, u in zip(others, sol.primal) if u != 0}
    best = max(per, key=lambda z: per[z])
    return _exact("fbs", per[best], {"input": best, "block_weights": wit[best]}, per)


# -- spectral sensitivity -----------------------------------------------------


def incidence(f: PartialBooleanFunction) -> np.ndarray:
    """0/1 matrix over zeros x ones, 1 where the two inputs differ in one bit."""
    yi = {y: k for k, y in enumerate(f.one_set)}
    F = np.zeros((len(f.zero_set), len(f.one_set)))
    for r, x in enumerate(f.zero_set):
        for i in range(f.n):
            y = x[:i] + ("1" if x[i] == "0" else "0") + x[i + 1:]
            if y in yi:
                F[r, yi[y]] = 1.0
    return F


def top_singular(F: np.ndarray, rtol: float = 1e-10, max_iter: int = 200000):
    """Largest singular value by power iteration on F^T F from a positive start."""
    if F.size == 0 or not F.any():
        return 0.0, np.zeros(F.shape[0]), np.zeros(F.shape[1]), 0
    v = np.ones(F.shape[1]) / np.sqrt(F.shape[1])
    rho = 0.0
    calm = 0
    for it in range(1, max_iter + 1):
        u = F @ v
        w = F.T @ u
        new = float(v @ w)
        nw = np.linalg.norm(w)
        resid = np.linalg.norm(w - new * v)
        v = w / nw
        if abs(new - rho) <= rtol * 1e-4 * new and resid <= rtol * new:
            calm += 1
            if calm >= 3:
                rho = new
                break
        else:
            calm = 0
        rho = new
    sigma = float(np.sqrt(rho))
    u = F @ v
    u = u / np.linalg.norm(u)
    return sigma, u, v, it


def spectral_sensitivity(f: PartialBooleanFunction) -> MeasureReport:
    _check_domain(f, SPECTRAL_MAX_DOMAIN, "spectral sensitivity")
    F = incidence(f)
    if not F.any():
        return _exact("lambda", 0.0, {"iterations": 0}, flags=["no_sensitive_edges"])
    sigma, u, v, it = top_singular(F)
    return _exact("lambda", sigma, {"iterations": it})


# -- classical adversary (minimax over pairs) -------------------------------


def cmm_lp(f: PartialBooleanFunction):
    n = f.n
    lp = LinearProgram("max")
    p = {}
    for z in f.domain:
        for i in range(n):
            p[z, i] = lp.add_var(0, 0, None, "p_%s_%d" % (z, i + 1))
        lp.add_row({p[z, i]: 1 for i in range(n)}, "=", 1)
    t = lp.add_var(1, 0, None, "t")
    for x, y in f.pairs():
        row = {t: -1}
        for i in range(n):
            if x[i] != y[i]:
                m = lp.add_var(0, 0, None, "m_%s_%s_%d" % (x, y, i + 1))
                lp.add_row({m: 1, p[x, i]: -1}, "<=", 0)
                lp.add_row({m: 1, p[y, i]: -1}, "<=", 0)
                row[m] = 1
        lp.add_row(row, ">=", 0)
    return lp, p, t


def classical_adversary(f: PartialBooleanFunction, mode: str = "exact") -> MeasureReport:
    _check_domain(f, CMM_MAX_DOMAIN, "classical adversary")
    if f.is_constant:
        raise ValueError("classical adversary needs both a 0-input and a 1-input")
    lp, p, t = cmm_lp(f)
    sol = solve(lp, mode)
    value = 1 / sol.primal[t]
    dist = {z: [sol.primal[p[z, i]] for i in range(f.n)] for z in f.domain}
    return _exact("CMM", value, {"p": dist})


# -- product-weight programs: EC and MM ---------------------------------------


def _weight_arrays(f):
    X = np.array([[int(c) for c in x] for x in f.zero_set], dtype=np.int8)
    Y = np.array([[int(c) for c in y] for y in f.one_set], dtype=np.int8)
    D = (X[:, None, :] != Y[None, :, :])
    return X, Y, D


def weight_margin(f, wx, wy, D=None):
    """min over pairs of sum_{i: x_i != y_i} w_{x,i} w_{y,i} (floats)."""
    if D is None:
        D = _weight_arrays(f)[2]
    return float((D * wx[:, None, :] * wy[None, :, :]).sum(axis=2).min())


def exact_weight_margin(f, wx, wy):
    best = None
    for a, x in enumerate(f.zero_set):
        for b, y in enumerate(f.one_set):
            s = sum((wx[a][i] * wy[b][i] for i in range(f.n) if x[i] != y[i]), Fraction(0))
            best = s if best is None or s < best else best
    return best


def _side_step(f, fixed, D, cap, side, mode):
    """Optimise one side's weights with the other side fixed (one LP per input)."""
    count = D.shape[0] if side == 0 else D.shape[1]
    n = f.n
    out = []
    for a in range(count):
        Da = D[a] if side == 0 else D[:, a, :]
        lp = LinearProgram("min")
        for i in range(n):
            lp.add_var(1, 0, cap, "w%d" % (i + 1))
        for b in range(len(fixed)):
            row = {i: fixed[b][i] for i in range(n) if Da[b, i] and fixed[b][i] != 0}
            lp.add_row(row, ">=", 1)
        sol = solve(lp, mode)
        if not sol.optimal:
            return None
        out.append(sol.primal)
    return out


def _objective(wx, wy):
    return max(max(sum(r) for r in wx), max(sum(r) for r in wy))


def alternate_weights(f, wx, wy, cap=1, rounds=12, mode="float"):
    """Alternating LP descent on ``max_z sum_i w_{z,i}`` keeping the product constraints.

    Each half-step is an LP in one side's weights and the current point stays
    feasible, so the objective never increases.
    """
    D = _weight_arrays(f)[2]
    best = _objective(wx, wy)
    for _ in range(rounds):
        nx = _side_step(f, wy, D, cap, 0, mode)
        if nx is None:
            break
        ny = _side_step(f, nx, D, cap, 1, mode)
        if ny is None:
            break
        val = _objective(nx, ny)
        improved = val < best - 1e-12
        wx, wy, best = nx, ny, min(best, val)
        if not improved:
            break
    return wx, wy, best


def polish_exact(f, wx, wy, cap=1, denominator=10 ** 6):
    """Round one side to small rationals, then re-solve both sides exactly."""
    D = _weight_arrays(f)[2]
    fy = [[Fraction(v).limit_denominator(denominator) for v in row] for row in wy]
    ex = _side_step(f, fy, D, cap, 0, "exact")
    if ex is None:
        return None
    ey = _side_step(f, ex, D, cap, 1, "exact")
    if ey is None:
        return None
    return ex, ey, _objective(ex, ey)


def certificate_weights(f, rep: CertificateReport | None = None):
    rep = rep or certificates(f)
    def ind(z):
        return [1 if i + 1 in rep.strong_sets[z] else 0 for i in range(f.n)]
    return [ind(x) for x in f.zero_set], [ind(y) for y in f.one_set]


def weight_program_upper(f, cap=1, restarts=5, seed=0, rounds=12):
    """Certified upper bound for ``min max_z sum_i w_{z,i}`` under the product constraints.

    Starts from certificate indicators (always feasible) and randomly
    enlarged copies of them; the best run is re-solved exactly.
    """
    _check_domain(f, WEIGHT_MAX_DOMAIN, "weight program")
    rng = np.random.default_rng(seed)
    cx, cy = certificate_weights(f)
    starts = [(cx, cy)]
    top = 1.0 if cap is not None else 2.0
    for _ in range(restarts):
        nx = [[min(top, c + rng.uniform(0, top) * (rng.random() < 0.5)) for c in r] for r in cx]
        ny = [[min(top, c + rng.uniform(0, top) * (rng.random() < 0.5)) for c in r] for r in cy]
        starts.append((nx, ny))
    best = None
    for sx, sy in starts:
        wx, wy, val = alternate_weights(f, sx, sy, cap, rounds)
        if best is None or val < best[2]:
            best = (wx, wy, val)
    polished = polish_exact(f, best[0], best[1], cap)
    if polished is None:
        ex = [[Fraction(v) for v in r] for r in cx]
        ey = [[Fraction(v) for v in r] for r in cy]
        polished = (ex, ey, _objective(ex, ey))
    return polished


def ec_bounds(f: PartialBooleanFunction, restarts: int = 5, seed: int = 0) -> MeasureReport:
    """Interval for the bounded-weight program: [FC, best certified feasible point]."""
    fc = fractional_certificate(f).value
    wx, wy, upper = weight_program_upper(f, cap=1, restarts=restarts, seed=seed)
    assert exact_weight_margin(f, wx, wy) >= 1
    upper = max(upper, fc)
    wit = {"zero_weights": dict(zip(f.zero_set, wx)), "one_weights": dict(zip(f.one_set, wy)), "seed": seed}
    return MeasureReport("EC", fc, upper, fc == upper, wit)


def _project_simplex(P: np.ndarray) -> np.ndarray:
    """Row-wise Euclidean projection onto the probability simplex."""
    n = P.shape[1]
    U = -np.sort(-P, axis=1)
    css = np.cumsum(U, axis=1) - 1
    ks = np.arange(1, n + 1)
    cond = U - css / ks > 0
    rho = n - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(P.shape[0]), rho] / (rho + 1)
    return np.maximum(P - theta[:, None], 0)


def mm_score(PX, PY, D):
    """min over pairs of sum_{i: x_i != y_i} sqrt(p_{x,i} p_{y,i})."""
    return float((D * np.sqrt(PX[:, None, :] * PY[None, :, :])).sum(axis=2).min())


def mm_bounds(f: PartialBooleanFunction, iterations: int = 200, restarts: int = 5, seed: int = 0) -> MeasureReport:
    """Interval [lambda, 1/g(p)] for the square-root minimax program.

    The upper end is certified by the distribution ``p`` it reports;
    ``g`` is concave, so projected supergradient ascent on a soft-min
    smoothing is enough to find good points.
    """
    _check_domain(f, WEIGHT_MAX_DOMAIN, "minimax program")
    lam = spectral_sensitivity(f)
    X, Y, D = _weight_arrays(f)
    Df = D.astype(float)
    n = f.n
    rng = np.random.default_rng(seed)
    rep = certificates(f)
    cx, cy = certificate_weights(f, rep)
    starts = [(np.full((len(X), n), 1.0 / n), np.full((len(Y), n), 1.0 / n)),
              (np.array(cx, float) / np.sum(cx, axis=1, keepdims=True),
               np.array(cy, float) / np.sum(cy, axis=1, keepdims=True))]
    for _ in range(restarts - len(starts)):
        starts.append((rng.dirichlet(np.ones(n), len(X)), rng.dirichlet(np.ones(n), len(Y))))
    best_g, best = -1.0, None
    for PX, PY in starts:
        g = mm_score(PX, PY, D)
        if g > best_g:
            best_g, best = g, (PX.copy(), PY.copy())
        beta, eps, step = 50.0, 1e-9, 0.05
        for _ in range(iterations):
            prod = PX[:, None, :] * PY[None, :, :]
            root = np.sqrt(prod + eps)
            G = (Df * root).sum(axis=2)
            wts = np.exp(-beta * (G - G.min()))
            wts /= wts.sum()
            gx = (wts[:, :, None] * Df * 0.5 * PY[None, :, :] / root).sum(axis=1)
            gy = (wts[:, :, None] * Df * 0.5 * PX[:, None, :] / root).sum(axis=0)
            PX = _project_simplex(PX + step * gx / (np.abs(gx).max() + 1e-12))
            PY = _project_simplex(PY + step * gy / (np.abs(gy).max() + 1e-12))
            g = mm_score(PX, PY, D)
            if g > best_g:
                best_g, best = g, (PX.copy(), PY.copy())
            step *= 0.99
    upper = 1.0 / best_g if best_g > 0 else float("inf")
    lower = lam.value
    flags = list(lam.flags)
    if upper < lower:
        # the program's value is at least lambda; anything below is rounding
        if upper < lower * (1 - 1e-9):
            flags.append("upper_below_lambda")
        upper = lower
    wit = {"zero_p": dict(zip(f.zero_set, best[0])), "one_p": dict(zip(f.one_set, best[1])), "seed": seed}
    return MeasureReport("MM", lower, upper, abs(upper - lower) <= 1e-9 * max(1.0, upper), wit, flags=flags)


MEASURES = {
    "s": sensitivity,
    "bs": block_sensitivity,
    "c": certificate_complexity,
    "fc": fractional_certificate,
    "fbs": fractional_block_sensitivity,
    "lambda": spectral_sensitivity,
    "cmm": classical_adversary,
    "ec": ec_bounds,
    "mm": mm_bounds,
}

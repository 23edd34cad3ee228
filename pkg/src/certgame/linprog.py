"""Linear programs with a floating-point and an exact rational engine.

Both engines work on the standard form ``min c.x, A x = b, x >= 0`` built by
``_standardize``.  The float engine is a dense tableau simplex (Dantzig
pricing, Bland's rule once pivots stall).  Exact mode takes the float
optimal basis as a warm start, re-solves the basis systems in rational
arithmetic and certifies primal and dual feasibility; when the certificate
fails it continues with a revised simplex under Bland's rule, which cannot
cycle.  Rationals are ``gmpy2.mpq`` internally when available and are
returned as ``fractions.Fraction``.

``solve_zero_sum`` is a cutting-plane driver for games whose rows are too
many to list: it keeps a restricted LP and asks an oracle for the most
violated row.
"""

from __future__ import annotations

import math
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

FLOAT_TOL = 1e-9
GAP_TOL = 1e-7
EXACT_RETRY_LIMIT = 2000
ZERO = _Q(0)
ONE = _Q(1)


class LpError(Exception):
    pass


class CapError(LpError):
    """A size or iteration cap was hit."""


def to_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, int):
        return Fraction(q)
    if isinstance(q, float):
        return Fraction(q)
    return Fraction(int(q.numerator), int(q.denominator))


def _q(v) -> "_Q":
    if isinstance(v, Fraction):
        return _Q(v.numerator, v.denominator)
    return _Q(v)


_REL = {"<=": "<=", "le": "<=", ">=": ">=", "ge": ">=", "=": "=", "==": "=", "eq": "="}


@dataclass
class LinearProgram:
    """Objective, constraint rows and variable bounds.

    Rows are ``(coeffs, rel, rhs)`` with ``coeffs`` a sparse ``{var: coef}``
    mapping.  Bounds are ``(lo, hi)`` pairs, ``None`` meaning infinite.
    """

    sense: str = "min"
    c: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    bounds: list = field(default_factory=list)
    var_names: list = field(default_factory=list)
    row_names: list = field(default_factory=list)

    def __post_init__(self):
        if self.sense not in ("min", "max"):
            raise LpError("sense must be 'min' or 'max'")

    @property
    def n_vars(self) -> int:
        return len(self.c)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def add_var(self, obj=0, lo=0, hi=None, name: str | None = None) -> int:
        self.c.append(obj)
        self.bounds.append((lo, hi))
        self.var_names.append(name or "x%d" % len(self.c))
        return len(self.c) - 1

    def add_row(self, coeffs, rel: str, rhs, name: str | None = None) -> int:
        if rel not in _REL:
            raise LpError("unknown relation %r" % rel)
        if not isinstance(coeffs, dict):
            coeffs = {j: a for j, a in enumerate(coeffs) if a != 0}
        for j in coeffs:
            if not 0 <= j < self.n_vars:
                raise LpError("row refers to unknown variable %d" % j)
        self.rows.append((dict(coeffs), _REL[rel], rhs))
        self.row_names.append(name or "r%d" % len(self.rows))
        return len(self.rows) - 1

    @classmethod
    def dense(cls, c, A, rels, b, sense="min", bounds=None) -> "LinearProgram":
        lp = cls(sense=sense)
        for j, cj in enumerate(c):
            lo, hi = bounds[j] if bounds is not None else (0, None)
            lp.add_var(cj, lo, hi)
        for row, rel, rhs in zip(A, rels, b):
            lp.add_row(list(row), rel, rhs)
        return lp

    def to_text(self) -> str:
        """Plain-text row format, one line per row."""
        def term(a, j):
            return "%s %s" % (a, self.var_names[j])

        out = ["%s: %s" % (self.sense, " + ".join(term(a, j) for j, a in enumerate(self.c) if a != 0) or "0")]
        for (coeffs, rel, rhs), name in zip(self.rows, self.row_names):
            lhs = " + ".join(term(a, j) for j, a in sorted(coeffs.items()))
            out.append("%s: %s %s %s" % (name, lhs or "0", rel, rhs))
        for j, (lo, hi) in enumerate(self.bounds):
            if (lo, hi) != (0, None):
                out.append("bound %s in [%s, %s]" % (self.var_names[j],
                                                      "-inf" if lo is None else lo,
                                                      "inf" if hi is None else hi))
        return "\n".join(out) + "\n"


@dataclass
class LpSolution:
    status: str
    value: object = None
    primal: list = field(default_factory=list)
    dual: list = field(default_factory=list)
    reduced_costs: list = field(default_factory=list)
    mode: str = "exact"
    basis: tuple = ()
    retried: bool = False

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    def dual_objective(self, lp: LinearProgram):
        """b.y plus the bound terms carried by the reduced costs."""
        exact = self.mode == "exact"
        conv = Fraction if exact else float
        total = conv(0)
        for (coeffs, rel, rhs), y in zip(lp.rows, self.dual):
            total += conv(rhs) * y
        for (lo, hi), d in zip(lp.bounds, self.reduced_costs):
            toward_lower = d > 0 if lp.sense == "min" else d < 0
            if d == 0:
                continue
            bound = lo if toward_lower else hi
            if bound is None:
                return math.inf if lp.sense == "min" else -math.inf
            total += d * conv(bound)
        return total


# -- standard form ----------------------------------------------------------


class _Std:
    """``min cost.x, sum_col cols[col][row] x_col = b[row], x >= 0``."""

    def __init__(self, lp: LinearProgram):
        self.lp = lp
        sgn = 1 if lp.sense == "min" else -1
        self.sgn = sgn
        self.terms: list[list[tuple[int, int]]] = []
        self.shift: list = []
        self.cost: list = []
        self.kind: list[str] = []
        bounded = []
        for j, (lo, hi) in enumerate(lp.bounds):
            cj = _q(lp.c[j]) * sgn
            if lo is not None:
                self.shift.append(_q(lo))
                self.terms.append([(self._new_col(cj, "x"), 1)])
                if hi is not None:
                    if _q(hi) < _q(lo):
                        bounded.append((self.terms[-1][0][0], None))
                    else:
                        bounded.append((self.terms[-1][0][0], _q(hi) - _q(lo)))
            elif hi is not None:
                self.shift.append(_q(hi))
                self.terms.append([(self._new_col(-cj, "x"), -1)])
            else:
                self.shift.append(ZERO)
                self.terms.append([(self._new_col(cj, "x"), 1), (self._new_col(-cj, "x"), -1)])
        rows: list[dict] = []
        rhs: list = []
        rels: list[str] = []
        for coeffs, rel, b in lp.rows:
            row: dict = {}
            bb = _q(b)
            for j, a in coeffs.items():
                a = _q(a)
                if a == 0:
                    continue
                bb -= a * self.shift[j]
                for col, s in self.terms[j]:
                    v = row.get(col, ZERO) + a * s
                    if v == 0:
                        row.pop(col, None)
                    else:
                        row[col] = v
            rows.append(row)
            rhs.append(bb)
            rels.append(rel)
        self.m_orig = len(rows)
        self.infeasible_bounds = False
        for col, ub in bounded:
            if ub is None:
                self.infeasible_bounds = True
                ub = ZERO
            rows.append({col: ONE})
            rhs.append(ub)
            rels.append("<=")
        for i, rel in enumerate(rels):
            if rel == "<=":
                rows[i][self._new_col(ZERO, "slack")] = ONE
            elif rel == ">=":
                rows[i][self._new_col(ZERO, "slack")] = -ONE
        self.row_sign = []
        for i in range(len(rows)):
            if rhs[i] < 0:
                rows[i] = {c: -v for c, v in rows[i].items()}
                rhs[i] = -rhs[i]
                self.row_sign.append(-1)
            else:
                self.row_sign.append(1)
        self.init_basis = []
        for i, row in enumerate(rows):
            pick = None
            for col, v in row.items():
                if self.kind[col] == "slack" and v == 1:
                    pick = col
                    break
            if pick is None:
                pick = self._new_col(ZERO, "art")
                row[pick] = ONE
            self.init_basis.append(pick)
        self.rows = rows
        self.b = rhs
        self.m = len(rows)
        self.N = len(self.cost)
        self.cols: list[dict] = [dict() for _ in range(self.N)]
        for i, row in enumerate(rows):
            for col, v in row.items():
                self.cols[col][i] = v
        self.is_art = [k == "art" for k in self.kind]

    def _new_col(self, cost, kind: str) -> int:
        self.cost.append(cost)
        self.kind.append(kind)
        return len(self.cost) - 1

    def dense(self):
        A = np.zeros((self.m, self.N))
        for i, row in enumerate(self.rows):
            for col, v in row.items():
                A[i, col] = float(v)
        return A, np.array([float(v) for v in self.b]), np.array([float(v) for v in self.cost])

    def recover_primal(self, x_std):
        out = []
        for j, terms in enumerate(self.terms):
            v = self.shift[j]
            for col, s in terms:
                v = v + s * x_std[col]
            out.append(v)
        return out

    def recover_dual(self, y_std):
        return [self.sgn * self.row_sign[i] * y_std[i] for i in range(self.m_orig)]


# -- float engine ------------------------------------------------------------


def _float_simplex(std: _Std, max_iter: int | None = None):
    """Two-phase tableau simplex.  Returns (status, basis, tableau)."""
    A, b, cost = std.dense()
    m, N = A.shape
    if max_iter is None:
        max_iter = 50 * (m + N) + 1000
    T = np.zeros((m, N + 1))
    T[:, :N] = A
    T[:, N] = b
    basis = list(std.init_basis)
    art = np.array(std.is_art, dtype=bool)

    rng = np.random.default_rng(12345)

    def run(d, allowed, phase2):
        stall = 0
        for _ in range(max_iter):
            cand = np.where(allowed & (d[:N] < -FLOAT_TOL))[0]
            if cand.size == 0:
                return "optimal"
            # long degenerate runs: random entering columns break stalls and cycles
            bland = stall > 30
            q = int(rng.choice(cand)) if bland else int(cand[np.argmin(d[cand])])
            u = T[:, q]
            ratios = np.full(m, np.inf)
            pos = u > FLOAT_TOL
            ratios[pos] = np.maximum(T[pos, N], 0.0) / u[pos]
            if phase2:
                blk = art[basis] & (np.abs(u) > FLOAT_TOL)
                ratios[blk] = 0.0
            if not np.isfinite(ratios).any():
                return "unbounded"
            rmin = ratios.min()
            ties = np.where(ratios <= rmin + FLOAT_TOL * (1 + rmin))[0]
            p = int(ties[np.argmax(np.abs(u[ties]))])
            stall = stall + 1 if rmin <= FLOAT_TOL else 0
            _pivot(T, d, p, q)
            basis[p] = q
        return "iteration_limit"

    # phase 1: cost 1 on artificials
    c1 = art.astype(float)
    d = np.concatenate([c1, [0.0]])
    for r, col in enumerate(basis):
        if art[col]:
            d -= T[r]
    allowed = np.ones(N, dtype=bool)
    status = run(d, allowed, False)
    if status != "optimal":
        return status, basis, T
    if -d[N] > FLOAT_TOL * (1 + np.abs(b).max(initial=0.0)) * 10:
        return "infeasible", basis, T
    for r in range(m):
        if art[basis[r]]:
            nz = np.where(~art & (np.abs(T[r, :N]) > FLOAT_TOL))[0]
            if nz.size:
                q = int(nz[np.argmax(np.abs(T[r, nz]))])
                _pivot(T, d, r, q)
                basis[r] = q
    d = np.concatenate([cost, [0.0]])
    for r, col in enumerate(basis):
        if cost[col] != 0:
            d -= cost[col] * T[r]
    status = run(d, ~art, True)
    return status, basis, T


def _pivot(T, d, p, q):
    T[p] /= T[p, q]
    col = T[:, q].copy()
    col[p] = 0.0
    rows = np.nonzero(col)[0]
    if rows.size:
        T[rows] -= np.outer(col[rows], T[p])
    d -= d[q] * T[p]


# -- exact engine ------------------------------------------------------------


def _sparse_solve(rows: list[dict], rhs: list, n: int):
    """Solve a square sparse system exactly; None when singular."""
    rows = [dict(r) for r in rows]
    rhs = list(rhs)
    col_rows: dict[int, set] = {}
    for i, r in enumerate(rows):
        for c in r:
            col_rows.setdefault(c, set()).add(i)
    remaining = set(range(n))
    order = []
    for _ in range(n):
        best = None
        for c in remaining:
            k = len(col_rows.get(c, ()))
            if k == 0:
                return None
            if best is None or k < best[0]:
                best = (k, c)
                if k == 1:
                    break
        j = best[1]
        i = min(col_rows[j], key=lambda r: (len(rows[r]), r))
        prow = rows[i]
        piv = prow[j]
        for r in list(col_rows[j]):
            if r == i:
                continue
            row = rows[r]
            factor = row[j] / piv
            for c, v in prow.items():
                nv = row.get(c, ZERO) - factor * v
                if nv == 0:
                    if c in row:
                        del row[c]
                        col_rows[c].discard(r)
                else:
                    if c not in row:
                        col_rows[c].add(r)
                    row[c] = nv
            rhs[r] = rhs[r] - factor * rhs[i]
        for c in prow:
            col_rows[c].discard(i)
        remaining.discard(j)
        order.append((i, j))
    x = [ZERO] * n
    for i, j in reversed(order):
        s = rhs[i]
        for c, v in rows[i].items():
            if c != j:
                s -= v * x[c]
        x[j] = s / rows[i][j]
    return x


class _Exact:
    def __init__(self, std: _Std):
        self.std = std

    def solve_B(self, basis, rhs):
        pos = {col: k for k, col in enumerate(basis)}
        rows = [dict() for _ in range(self.std.m)]
        for col, k in pos.items():
            for r, v in self.std.cols[col].items():
                rows[r][k] = v
        return _sparse_solve(rows, rhs, self.std.m)

    def solve_BT(self, basis, cb):
        rows = [self.std.cols[col] for col in basis]
        return _sparse_solve(rows, cb, self.std.m)

    def reduced(self, cost, y, col):
        d = cost[col]
        for r, v in self.std.cols[col].items():
            d -= v * y[r]
        return d

    def run(self, basis, cost, phase2, max_iter):
        """Revised simplex with Bland's rule from a primal-feasible basis."""
        std = self.std
        basis = list(basis)
        xB = self.solve_B(basis, std.b)
        if xB is None:
            raise LpError("singular starting basis")
        for _ in range(max_iter):
            y = self.solve_BT(basis, [cost[c] for c in basis])
            inb = set(basis)
            q = None
            for col in range(std.N):
                if col in inb or (phase2 and std.is_art[col]):
                    continue
                if self.reduced(cost, y, col) < 0:
                    q = col
                    break
            if q is None:
                return "optimal", basis, xB, y
            dense = [ZERO] * std.m
            for r, v in std.cols[q].items():
                dense[r] = v
            u = self.solve_B(basis, dense)
            best = None
            for p in range(std.m):
                if phase2 and std.is_art[basis[p]] and u[p] != 0:
                    ratio = ZERO
                elif u[p] > 0:
                    ratio = xB[p] / u[p]
                else:
                    continue
                key = (ratio, basis[p])
                if best is None or key < best[0]:
                    best = (key, p)
            if best is None:
                return "unbounded", basis, xB, y
            theta = best[0][0]
            p = best[1]
            xB = [xB[r] - theta * u[r] for r in range(std.m)]
            xB[p] = theta
            basis[p] = q
        raise CapError("exact simplex iteration limit")

    def certify(self, basis):
        """(primal ok, dual ok, xB, y) for a candidate optimal basis."""
        std = self.std
        xB = self.solve_B(basis, std.b)
        if xB is None:
            return False, False, None, None
        pok = all(v >= 0 for v in xB) and all(
            xB[k] == 0 for k, col in enumerate(basis) if std.is_art[col])
        y = self.solve_BT(basis, [std.cost[c] for c in basis])
        inb = set(basis)
        dok = all(self.reduced(std.cost, y, col) >= 0
                  for col in range(std.N) if col not in inb and not std.is_art[col])
        return pok, dok, xB, y

    def cold(self, max_iter):
        std = self.std
        cost1 = [ONE if a else ZERO for a in std.is_art]
        status, basis, xB, _ = self.run(std.init_basis, cost1, False, max_iter)
        infeas = sum((xB[k] for k, col in enumerate(basis) if std.is_art[col]), ZERO)
        if infeas > 0:
            return "infeasible", basis
        basis = self._drive_out(basis)
        status, basis, xB, y = self.run(basis, std.cost, True, max_iter)
        return status, basis

    def _drive_out(self, basis):
        """Pivot zero-level artificials out of the basis where possible."""
        std = self.std
        basis = list(basis)
        for p in range(std.m):
            if not std.is_art[basis[p]]:
                continue
            e = [ZERO] * std.m
            e[p] = ONE
            row = self.solve_BT(basis, e)
            inb = set(basis)
            for col in range(std.N):
                if col in inb or std.is_art[col]:
                    continue
                if sum((v * row[r] for r, v in std.cols[col].items()), ZERO) != 0:
                    basis[p] = col
                    break
        return basis


def _iter_cap(std):
    return 200 * (std.m + std.N) + 1000


def _finish_exact(lp, std, basis, retried=False) -> LpSolution:
    eng = _Exact(std)
    xB = eng.solve_B(basis, std.b)
    y = eng.solve_BT(basis, [std.cost[c] for c in basis])
    x_std = [ZERO] * std.N
    for k, col in enumerate(basis):
        x_std[col] = xB[k]
    primal = [to_fraction(v) for v in std.recover_primal(x_std)]
    dual = [to_fraction(v) for v in std.recover_dual(y)]
    value = sum((Fraction(lp.c[j]) * primal[j] for j in range(lp.n_vars)), Fraction(0))
    red = []
    for j in range(lp.n_vars):
        red.append(Fraction(lp.c[j]))
    for i, (coeffs, _, _) in enumerate(lp.rows):
        for j, a in coeffs.items():
            red[j] -= Fraction(a) * dual[i]
    return LpSolution("optimal", value, primal, dual, red, "exact", tuple(basis), retried)


def _solve_exact(lp: LinearProgram, std: _Std, warm=None, retried=False) -> LpSolution:
    if std.infeasible_bounds:
        return LpSolution("infeasible", mode="exact")
    eng = _Exact(std)
    cap = _iter_cap(std)
    if warm is not None:
        pok, dok, _, _ = eng.certify(warm)
        if pok and dok:
            return _finish_exact(lp, std, warm, retried)
        if pok:
            status, basis, _, _ = eng.run(warm, std.cost, True, cap)
            if status == "optimal":
                return _finish_exact(lp, std, basis, retried)
            return LpSolution("unbounded", mode="exact")
    status, basis = eng.cold(cap)
    if status == "optimal":
        return _finish_exact(lp, std, basis, retried)
    return LpSolution(status, mode="exact")


def _float_solution(lp, std, basis, T) -> LpSolution:
    m, N = std.m, std.N
    x_std = np.zeros(N)
    x_std[basis] = T[:, N]
    cost = np.array([float(v) for v in std.cost])
    binv = T[:, std.init_basis]
    y_std = cost[basis] @ binv
    primal = [float(v) for v in std.recover_primal(x_std)]
    dual = [float(v) for v in std.recover_dual(list(y_std))]
    value = float(sum(float(lp.c[j]) * primal[j] for j in range(lp.n_vars)))
    red = [float(cj) for cj in lp.c]
    for i, (coeffs, _, _) in enumerate(lp.rows):
        for j, a in coeffs.items():
            red[j] -= float(a) * dual[i]
    return LpSolution("optimal", value, primal, dual, red, "float", tuple(basis))


def _float_ok(lp: LinearProgram, sol: LpSolution) -> bool:
    x = sol.primal
    for (coeffs, rel, rhs), y in zip(lp.rows, sol.dual):
        lhs = sum(float(a) * x[j] for j, a in coeffs.items())
        r = lhs - float(rhs)
        scale = 1 + abs(float(rhs))
        if rel == "<=" and r > FLOAT_TOL * scale or rel == ">=" and r < -FLOAT_TOL * scale:
            return False
        if rel == "=" and abs(r) > FLOAT_TOL * scale:
            return False
    for (lo, hi), v in zip(lp.bounds, x):
        if lo is not None and v < float(lo) - FLOAT_TOL or hi is not None and v > float(hi) + FLOAT_TOL:
            return False
    dobj = sol.dual_objective(lp)
    return abs(dobj - sol.value) <= GAP_TOL * (1 + abs(sol.value))


def _dump(lp: LinearProgram, debug):
    target = debug if isinstance(debug, str) else os.environ.get("CERTGAME_LP_DUMP")
    text = lp.to_text()
    if target and target not in ("1", "-"):
        with open(target, "a") as fh:
            fh.write(text + "\n")
    else:
        sys.stderr.write(text)


def solve(lp: LinearProgram, mode: str = "exact", debug=False) -> LpSolution:
    """Solve ``lp``; ``mode`` is ``"exact"`` (rational) or ``"float"``."""
    if mode not in ("exact", "float"):
        raise LpError("mode must be 'exact' or 'float'")
    if debug or os.environ.get("CERTGAME_LP_DUMP"):
        _dump(lp, debug)
    std = _Std(lp)
    if std.infeasible_bounds:
        return LpSolution("infeasible", mode=mode)
    status, basis, T = _float_simplex(std)
    if mode == "exact":
        return _solve_exact(lp, std, basis if status == "optimal" else None)
    if status in ("infeasible", "unbounded"):
        return LpSolution(status, mode="float")
    if status == "optimal":
        sol = _float_solution(lp, std, basis, T)
        if _float_ok(lp, sol):
            return sol
    if std.m > EXACT_RETRY_LIMIT or std.N > EXACT_RETRY_LIMIT:
        raise LpError("float simplex unstable and the problem is too large for exact retry")
    out = _solve_exact(lp, std, basis if status == "optimal" else None, retried=True)
    return out


# -- cutting planes for zero-sum games -----------------------------------------


@dataclass
class ZeroSumResult:
    status: str
    value: object
    mu: list
    keys: list
    weights: list
    upper_value: object
    iterations: int
    solution: LpSolution


Oracle = Callable[[Sequence, bool], tuple]


def _restricted_lp(n: int, rows: list) -> LinearProgram:
    lp = LinearProgram("min")
    for j in range(n):
        lp.add_var(0, 0, None, "mu%d" % j)
    d = lp.add_var(1, None, None, "delta")
    lp.add_row({j: 1 for j in range(n)}, "=", 1, "simplex")
    for k, row in enumerate(rows):
        coeffs = {j: a for j, a in enumerate(row) if a != 0}
        coeffs[d] = -1
        lp.add_row(coeffs, "<=", 0, "row%d" % k)
    return lp


def solve_zero_sum(n: int, oracle: Oracle, initial_rows: Iterable = (), mode: str = "exact",
                   max_rows: int = 10000, tol: float = FLOAT_TOL) -> ZeroSumResult:
    """Value of ``min_mu max_row row.mu`` over the probability simplex.

    ``oracle(mu, exact)`` returns ``(value, row, key)`` for a row maximising
    ``row.mu``; ``initial_rows`` holds ``(row, key)`` pairs.  Rows are added
    until the oracle finds nothing above the restricted value.  In exact mode
    a float pass runs first and the final rounds are rational.
    """
    rows, keys = [], []
    for row, key in initial_rows:
        rows.append(list(row))
        keys.append(key)
    if not rows:
        _, row, key = oracle([1.0 / n] * n, False)
        rows.append(list(row))
        keys.append(key)
    seen = set(keys)
    it = 0

    def step(m):
        lp = _restricted_lp(n, rows)
        sol = solve(lp, m)
        if not sol.optimal:
            raise LpError("restricted game LP is %s" % sol.status)
        return sol, sol.primal[:n], sol.primal[n]

    capped = False
    while True:
        it += 1
        sol, mu, delta = step("float")
        v, row, key = oracle(mu, False)
        if v <= delta + tol or key in seen:
            break
        if len(rows) >= max_rows:
            capped = True
            break
        rows.append(list(row))
        keys.append(key)
        seen.add(key)
    if mode == "exact" and not capped:
        while True:
            it += 1
            sol, mu, delta = step("exact")
            v, row, key = oracle(mu, True)
            if v <= delta:
                break
            if len(rows) >= max_rows:
                capped = True
                break
            if key in seen:
                raise LpError("oracle returned a row already in the restricted game")
            rows.append(list(row))
            keys.append(key)
            seen.add(key)
    else:
        v, _, _ = oracle(mu, mode == "exact")
    weights = [abs(y) for y in sol.dual[1:]]
    return ZeroSumResult("capped" if capped else "optimal", delta, list(mu), keys, weights, v, it, sol)

"""Command-line front end.

Exit codes: 0 success, 1 property violation, 2 usage or parse error,
3 resource cap.  Errors go to stderr as one line of JSON.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import io
import json
import math
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import hamming as hm
from .boolfn import (ParseError, PartialBooleanFunction, all_total_functions, and_fn, hamming, load, or_fn,
                     parity_fn, parse_zoo, random_partial, tribes_fn)
from .games import GAMES, cg_ns, cg_pub, fc_feasible, fc_from_public, verify_ns, verify_public
from .linprog import CapError, LinearProgram, LpError, solve
from .measures import (MEASURES, block_sensitivity, certificate_complexity, classical_adversary,
                       fractional_block_sensitivity, fractional_certificate, sensitivity, spectral_sensitivity)
from . import strategies as st
from ._util import __version__, jsonable, rat_str

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FLOAT_SLACK = 1e-9


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def threads() -> int:
    raw = os.environ.get("CERTGAME_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError("CERTGAME_THREADS must be a positive integer, got %r" % raw) from None
    if n < 1:
        raise UsageError("CERTGAME_THREADS must be a positive integer, got %r" % raw)
    return n


def load_function(args) -> PartialBooleanFunction:
    if getattr(args, "zoo", None):
        return parse_zoo(args.zoo)
    if getattr(args, "file", None):
        return load(args.file)
    raise UsageError("give --zoo name:params or --file path")


def _measure(name: str, f, mode: str):
    if name in ("c_weak", "c_strong"):
        return certificate_complexity(f, name[2:])
    if name not in MEASURES:
        raise UsageError("unknown measure %r" % name)
    fn = MEASURES[name]
    if "mode" in inspect.signature(fn).parameters:
        return fn(f, mode=mode)
    return fn(f)


def _split(text):
    return [t.strip() for t in text.split(",") if t.strip()]


# -- commands ------------------------------------------------------------------------


def cmd_measure(args):
    names = _split(args.measures)
    for name in names:
        if name not in MEASURES and name not in ("c_weak", "c_strong"):
            raise UsageError("unknown measure %r" % name)
    f = load_function(args)
    results = []
    for name in names:
        rep = _measure(name, f, args.mode).to_dict()
        rep["name"] = name
        if not args.witness:
            rep.pop("witness", None)
            rep.pop("per_input", None)
        results.append(rep)
    return {"function": f.label(), "results": results}, EXIT_OK


def cmd_game(args):
    names = _split(args.game)
    for name in names:
        if name not in GAMES:
            raise UsageError("unknown game %r" % name)
    f = load_function(args)
    if not f.zero_set or not f.one_set:
        raise UsageError("game values need both a 0-input and a 1-input")
    results = []
    for name in names:
        fn = GAMES[name]
        params = inspect.signature(fn).parameters
        kw = {}
        if "mode" in params:
            kw["mode"] = args.mode if name == "cgpub" else ("exact" if args.mode == "interval" else args.mode)
        if "seed" in params:
            kw["seed"] = args.seed
        rep = fn(f, **kw).to_dict()
        if not args.witness:
            rep.pop("certificates", None)
        results.append(rep)
    return {"function": f.label(), "results": results}, EXIT_OK


def _zoo_tree(f: PartialBooleanFunction):
    name = f.name.upper()
    if name.startswith("OR"):
        return st.scan_tree(f.n, "1")
    if name.startswith("AND"):
        return st.scan_tree(f.n, "0")
    if name.startswith("PARITY"):
        return st.parity_tree(f.n)
    if name.startswith("TRIBES"):
        s, t = (int(v) for v in name[len("TRIBES"):].split(","))
        return st.tribes_tree(s, t)
    raise UsageError("no hand-built decision tree for %s" % f.name)


def build_strategy(args):
    """Strategy plus the pairs to simulate and an optional exact worst pair."""
    kind = args.strategy
    if kind == "tribes":
        k = args.k or 4
        s = st.tribes_strategy(k)
        pairs = s.canonical_pairs() if args.pairs == "all" else [s.canonical_pair([0] * k, k - 1)]
        return s, pairs
    if kind == "apind":
        k = args.k or 16
        s = st.apind_strategy(k)
        s.declared_bound = 0.01 / math.log2(k)
        d = max(1, int(k // math.log2(k)))
        far = (1 << d) - 1
        pairs = [((0, 0), (far, 1)), ((0, 0), (0, 1))]
        return s, pairs
    if kind == "generic_hash":
        L, t = args.L, args.t
        overlap = args.overlap if args.overlap is not None else L // t
        A = {"x": set(range(L))}
        B = {"y": set(range(L - overlap, 2 * L - overlap))}
        s = st.generic_hash_strategy(A, B, L, t)
        return s, [("x", "y")]
    f = load_function(args)
    if kind == "dtree":
        s = st.decision_tree_strategy(f, _zoo_tree(f))
    elif kind == "sens_hash":
        s = st.sensitivity_hash_strategy(f)
    elif kind in st.STRATEGIES:
        s = st.STRATEGIES[kind](f)
    else:
        raise UsageError("unknown strategy %r" % kind)
    pair_filter = (lambda x, y: hamming(x, y) == 1) if kind == "sens_hash" else None
    if args.pairs == "all":
        pairs = [p for p in f.pairs() if pair_filter is None or pair_filter(*p)]
    else:
        _, worst = st.eval_exact(s, f, pair_filter=pair_filter)
        pairs = [worst]
    return s, pairs


def cmd_simulate(args):
    if args.seed is None:
        raise UsageError("simulate needs --seed")
    s, pairs = build_strategy(args)
    workers = threads()

    def run(pair):
        return st.eval_monte_carlo(s, [pair], args.trials, args.seed)[0]

    if workers > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, pairs))
    else:
        rows = [run(p) for p in pairs]
    doc = {"strategy": s.name, "declared_bound": s.declared_bound, "results": rows}
    code = EXIT_OK if all(r["pass"] for r in rows) else EXIT_VIOLATION
    return doc, code


# -- verification suites -------------------------------------------------------------


def chain_battery(n: int, count: int, seed: int):
    fs = all_total_functions(n)
    rng = random.Random(seed)
    fs += [random_partial(n, rng) for _ in range(count)]
    return fs


def check_chain(f: PartialBooleanFunction) -> dict:
    """lambda <= s <= bs <= FC <= CMM <= CG^ns <= CG^pub and FC = fbs on every input."""
    lam = spectral_sensitivity(f).value
    s = sensitivity(f).value
    bs = block_sensitivity(f).value
    fc = fractional_certificate(f)
    fbs = fractional_block_sensitivity(f)
    cmm = classical_adversary(f).value
    ns = cg_ns(f)
    pub = cg_pub(f, "exact")
    checks = {
        "lambda<=s": lam <= s + FLOAT_SLACK,
        "s<=bs": s <= bs,
        "bs<=FC": bs <= fc.value,
        "FC<=CMM": fc.value <= cmm,
        "CMM<=CGns": cmm <= ns.value,
        "CGns<=CGpub": ns.value <= pub.value,
        "FC=fbs": fc.per_input == fbs.per_input,
        "ns_certificate": verify_ns(f, ns),
        "pub_certificate": verify_public(f, pub),
    }
    values = {"lambda": lam, "s": s, "bs": bs, "FC": fc.value, "CMM": cmm, "CGns": ns.value, "CGpub": pub.value}
    return {"function": f.label(), "values": values, "checks": checks}


def _summarise(records):
    names = sorted({k for r in records for k in r["checks"]})
    summary = []
    for name in names:
        bad = [r["function"] for r in records if not r["checks"].get(name, True)]
        summary.append({"check": name, "instances": len(records), "violations": len(bad), "failing": bad[:10]})
    return summary


def suite_chain(n: int, count: int, seed: int):
    records = [check_chain(f) for f in chain_battery(n, count, seed)]
    return _summarise(records)


def random_lp(rng: random.Random, nv: int, nr: int) -> LinearProgram:
    lp = LinearProgram("max")
    for j in range(nv):
        lp.add_var(rng.randint(-3, 5), 0, None)
    for _ in range(nr):
        row = {j: rng.randint(-2, 4) for j in range(nv) if rng.random() < 0.7}
        lp.add_row(row, "<=", rng.randint(1, 10))
    return lp


def suite_duality(n: int, count: int, seed: int):
    rng = random.Random(seed)
    records = []
    for _ in range(count):
        lp = random_lp(rng, rng.randint(1, 8), rng.randint(1, 8))
        sol = solve(lp, "exact")
        ok = sol.status != "optimal" or sol.dual_objective(lp) == sol.value
        records.append({"function": "lp", "checks": {"lp_strong_duality": ok}})
    for f in chain_battery(n, count, seed)[:count]:
        fc = fractional_certificate(f)
        fbs = fractional_block_sensitivity(f)
        ns = cg_ns(f)
        pub = cg_pub(f, "exact")
        records.append({"function": f.label(), "checks": {
            "FC=fbs": fc.per_input == fbs.per_input,
            "ns_dual_objective": verify_ns(f, ns) and ns.certificates["dual_objective"] == ns.omega,
            "pub_dominates_fc": fc_feasible(f, fc_from_public(f, pub)) and fc.value <= pub.value,
        }})
    return _summarise(records)


def hamming_report(k: int, c: float = 1.0) -> dict:
    p = hm.log_scale_params(k)
    pe = hm.log_scale_params(k, even_m=True)
    mono = hm.check_monotone(p)
    tail = hm.tail_mass(p, hm.width(p, "sqrt_r"))
    sym = hm.check_symmetric(pe, c=c)
    count, ratio = hm.sphere_ball_intersection(p.k, p.m, p.r)
    return {
        "params": {"k": p.k, "m": p.m, "r": p.r, "mean": p.mean},
        "monotone": {"mode": mono.mode, "unimodal": mono.unimodal, "first_violation": mono.first_violation},
        "tail_sqrt_r": {"exact": tail, "float": float(tail)},
        "symmetric": {"m": pe.m, "j_max": sym.j_max, "argmin": sym.argmin, "log_min_ratio": sym.log_min_ratio,
                      "threshold_log": -16 * c * c},
        "intersection_ratio_times_sqrt_log": float(ratio) * math.sqrt(math.log2(k)),
    }


def suite_hamming(k: int, brute_k: int = 10):
    rep = hamming_report(k)
    checks = {
        "monotone": rep["monotone"]["unimodal"] and abs(rep["monotone"]["mode"] - rep["params"]["mean"]) <= 1,
        "concentration": rep["tail_sqrt_r"]["float"] >= 0.72,
        "symmetric": rep["symmetric"]["log_min_ratio"] >= rep["symmetric"]["threshold_log"],
        "intersection": rep["intersection_ratio_times_sqrt_log"] >= 0.05,
    }
    mismatches = 0
    for kk in range(1, brute_k + 1):
        for m in range(kk + 1):
            a, b = "0" * kk, "1" * m + "0" * (kk - m)
            for r in range(kk + 1):
                mismatches += hm.brute_force_intersection(a, b, r) != hm.sphere_ball_intersection(kk, m, r)[0]
    checks["brute_force_intersection"] = mismatches == 0
    return _summarise([{"function": "k=%d" % k, "checks": checks}]), rep


def suite_tables():
    records = []
    for n in (4, 9, 16):
        f = or_fn(n) if n <= 9 else None
        if f is not None:
            lam = spectral_sensitivity(f).value
            records.append({"function": f.label(), "checks": {
                "FC(OR)=n": fractional_certificate(f).value == n,
                "s(OR)=n": sensitivity(f).value == n,
                "lambda(OR)/sqrt(n)~1": 0.99 <= lam / math.sqrt(n) <= 1.01,
            }})
        g = parity_fn(n) if n <= 9 else None
        if g is not None:
            records.append({"function": g.label(), "checks": {
                "s(PARITY)=n": sensitivity(g).value == n,
                "lambda(PARITY)=n": abs(spectral_sensitivity(g).value - n) <= 1e-6,
            }})
        t = math.isqrt(n)
        h = tribes_fn(t, t)
        records.append({"function": h.label(), "checks": {
            "C(TRIBES)=sqrt(n)": certificate_complexity(h).value == t,
            "s(TRIBES)=sqrt(n)": sensitivity(h).value == t,
        }})
    for n in (4, 6, 8):
        from .boolfn import gth_fn
        g = gth_fn(n)
        records.append({"function": g.label(), "checks": {
            "C_weak(GTH)=1": certificate_complexity(g, "weak").value == 1,
            "C_strong(GTH)>=n/2": certificate_complexity(g, "strong").value >= n // 2,
            "CGns(GTH)>=n/4": cg_ns(g).value >= Fraction(n, 4),
        }})
    return _summarise(records)


def cmd_verify(args):
    if args.suite == "chain":
        summary = suite_chain(args.n, args.count, args.seed)
        extra = None
    elif args.suite == "duality":
        summary = suite_duality(args.n, args.count, args.seed)
        extra = None
    elif args.suite == "hamming":
        summary, extra = suite_hamming(args.k)
    elif args.suite == "tables":
        summary = suite_tables()
        extra = None
    else:
        raise UsageError("unknown suite %r" % args.suite)
    doc = {"suite": args.suite, "results": summary}
    if extra is not None:
        doc["details"] = extra
    code = EXIT_OK if all(row["violations"] == 0 for row in summary) else EXIT_VIOLATION
    return doc, code


def _rat(q):
    return {"exact": rat_str(q), "float": float(q)}


def cmd_hamming(args):
    op = args.op
    if op == "params":
        p = hm.log_scale_params(args.k, even_m=args.even_m)
        return {"results": [{"k": p.k, "m": p.m, "r": p.r, "mean": _rat(p.mean)}]}, EXIT_OK
    if op == "outer":
        o = hm.outer_layer_mass(args.k, args.const)
        return {"results": [{"k": o.k, "const": o.const, "inner_radius": o.inner_radius,
                             "outer_radius": o.outer_radius, "ratio": _rat(o.ratio), "flags": o.flags}]}, EXIT_OK
    p = _params(args)
    if op == "intersect":
        count, ratio = hm.sphere_ball_intersection(p.k, p.m, p.r)
        row = {"count": count, "ratio": _rat(ratio)}
    elif op == "pmf":
        if args.j is None:
            raise UsageError("pmf needs --j")
        row = {"j": args.j, "pmf": _rat(hm.hypergeom_pmf(p, args.j))}
    elif op == "tail":
        w = hm.width(p, args.width)
        row = {"width": w, "mass": _rat(hm.tail_mass(p, w))}
    elif op == "symmetric":
        c = hm.check_symmetric(p, args.j_max)
        row = {"min_ratio": _rat(c.min_ratio), "log_min_ratio": c.log_min_ratio, "argmin": c.argmin,
               "j_max": c.j_max, "zero_at": c.zero_at}
    elif op == "monotone":
        c = hm.check_monotone(p)
        row = {"mode": c.mode, "mean": _rat(c.mean), "unimodal": c.unimodal, "first_violation": c.first_violation}
    else:
        raise UsageError("unknown hamming operation %r" % op)
    row.update({"k": p.k, "m": p.m, "r": p.r})
    return {"results": [row]}, EXIT_OK


def _params(args):
    if args.m is None or args.r is None:
        return hm.log_scale_params(args.k, even_m=args.even_m)
    return hm.HypergeomParams(args.k, args.m, args.r)


# -- output ------------------------------------------------------------------------


def _flatten(row: dict) -> dict:
    out = {}
    for key, val in row.items():
        if isinstance(val, (list, tuple)) and len(val) == 2 and key in ("ci99", "bounds"):
            out[key + "_lower"], out[key + "_upper"] = val
        elif isinstance(val, dict) and set(val) == {"exact", "float"}:
            out[key] = val["exact"]
            out[key + "_float"] = val["float"]
        elif isinstance(val, (dict, list)):
            out[key] = json.dumps(val, sort_keys=True)
        else:
            out[key] = val
    return out


def render(doc: dict, fmt: str) -> str:
    doc = jsonable(doc)
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows = [_flatten(r) for r in doc.get("results", [])]
    cols = sorted({k for r in rows for k in r})
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        return buf.getvalue()
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="certgame", description="Certificate games and Boolean function complexity measures.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, mode_choices=("exact", "float"), mode_default="exact"):
        sp.add_argument("--zoo", help="zoo function, e.g. or:3 or tribes:2,2")
        sp.add_argument("--file", help="truth-table JSON file")
        sp.add_argument("--mode", choices=mode_choices, default=mode_default)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--format", choices=("json", "csv", "table"), default="json")
        sp.add_argument("--output", help="write the report here instead of stdout")
        sp.add_argument("--config", help="JSON file whose keys provide defaults for these flags")
        sp.add_argument("--witness", action="store_true", help="include witnesses and certificates")

    m = sub.add_parser("measure", help="complexity measures")
    common(m)
    m.add_argument("--measures", default="s,bs,c,fc,lambda")

    g = sub.add_parser("game", help="certificate-game values")
    common(g, ("exact", "interval", "float"))
    g.add_argument("--game", default="cgns")

    s = sub.add_parser("simulate", help="Monte Carlo evaluation of explicit strategies")
    common(s)
    s.set_defaults(seed=None)
    s.add_argument("--strategy", required=True,
                   choices=("cert_hash", "ec_hash", "generic_hash", "tribes", "dtree", "sens_hash", "apind",
                            "private_cert"))
    s.add_argument("--trials", type=int, default=100000)
    s.add_argument("--k", type=int)
    s.add_argument("--L", type=int, default=64)
    s.add_argument("--t", type=int, default=4)
    s.add_argument("--overlap", type=int)
    s.add_argument("--pairs", choices=("worst", "all"), default="worst")

    v = sub.add_parser("verify", help="property suites")
    common(v)
    v.add_argument("--suite", required=True, choices=("chain", "duality", "hamming", "tables"))
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--count", type=int, default=50)
    v.add_argument("--k", type=int, default=1024)

    h = sub.add_parser("hamming", help="exact hypergeometric and Hamming-ball combinatorics")
    common(h)
    h.add_argument("op", choices=("intersect", "pmf", "tail", "symmetric", "monotone", "outer", "params"))
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--m", type=int)
    h.add_argument("--r", type=int)
    h.add_argument("--j", type=int)
    h.add_argument("--j-max", dest="j_max", type=int)
    h.add_argument("--width", default="sqrt_r")
    h.add_argument("--const", type=float, default=100.0)
    h.add_argument("--even-m", dest="even_m", action="store_true")
    return p


COMMANDS = {"measure": cmd_measure, "game": cmd_game, "simulate": cmd_simulate, "verify": cmd_verify,
            "hamming": cmd_hamming}


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError("missing subcommand; try --help")
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                conf = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError("cannot read config: %s" % exc) from None
        sp = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest for a in sp._actions}
        unknown = set(conf) - known - {"command"}
        if unknown:
            raise UsageError("unknown config keys: %s" % ", ".join(sorted(unknown)))
        sp.set_defaults(**conf)
        args = parser.parse_args(argv)
    return args


def run(argv=None):
    args = parse_args(sys.argv[1:] if argv is None else argv)
    threads()
    doc, code = COMMANDS[args.command](args)
    doc = {"command": args.command, "version": __version__, "mode": args.mode, "seed": args.seed, **doc}
    return render(doc, args.format), code, args


def _fail(kind: str, exc, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc)}, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    try:
        text, code, args = run(argv)
    except CapError as exc:
        return _fail("cap", exc, EXIT_CAP)
    except (UsageError, ParseError, OSError) as exc:
        return _fail("usage", exc, EXIT_USAGE)
    except (ValueError, LpError) as exc:
        return _fail("invalid", exc, EXIT_USAGE)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

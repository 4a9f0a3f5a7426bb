"""Command-line front end: gen, verify, pair, report.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
infrastructure error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor

from . import chebyshev as cb
from .checks import CHECKS, run_checks
from .muttjeff import jeff, mutt, transform_su, uprime_sqrt
from .polycore import parse_rational
from .rootiso import pair_roots

PAIR_THRESHOLD = 6

KINDS = ("T", "U", "mutt-raw", "mutt-prim", "jeff", "uprime-sqrt", "su")


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def parse_range(text: str, allow_empty: bool = False) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected A..B") from None
    if hi < lo and not allow_empty:
        raise UsageError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _n_values(args, least: int, allow_empty: bool = False) -> range:
    if args.n is not None:
        ns = range(args.n, args.n + 1)
    elif args.n_range is not None:
        ns = parse_range(args.n_range, allow_empty)
    else:
        raise UsageError("one of --n or --n-range is required")
    if len(ns) and ns[0] < least:
        raise UsageError(f"n must be >= {least}")
    return ns


def _map(fn, items, jobs: int):
    # results come back in input order regardless of completion order
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            yield from ex.map(fn, items)
    else:
        for it in items:
            yield fn(it)


# -- gen ---------------------------------------------------------------------


def generate(kind: str, n: int) -> dict:
    if kind not in KINDS:
        raise UsageError(f"unknown kind {kind!r}")
    least = 0 if kind in ("T", "U") else 1
    if n < least:
        raise UsageError(f"--n must be >= {least} for kind {kind}")
    if kind == "su":
        return {"kind": kind, "n": n, "zcoeffs": transform_su(n).to_json()}
    poly = {
        "T": lambda: cb.T(n),
        "U": lambda: cb.U(n),
        "mutt-raw": lambda: mutt(n)[0],
        "mutt-prim": lambda: mutt(n)[1],
        "jeff": lambda: jeff(n),
        "uprime-sqrt": lambda: uprime_sqrt(n),
    }[kind]()
    return {"kind": kind, "n": n, "coeffs": poly.to_json()}


def cmd_gen(args) -> int:
    if args.n is None:
        raise UsageError("--n is required")
    print(_dumps(generate(args.kind, args.n)))
    return 0


# -- verify ------------------------------------------------------------------


class _VerifyJob:
    def __init__(self, names, timings):
        self.names, self.timings = names, timings

    def __call__(self, n: int) -> dict:
        results = run_checks(n, self.names)
        return {
            "n": n,
            "checks": {k: r.to_json(self.timings) for k, r in results.items()},
            "pass": all(r.passed for r in results.values()),
        }


def _check_names(args):
    if not getattr(args, "checks", None):
        return None
    names = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in names if c not in CHECKS]
    if bad:
        raise UsageError(f"unknown checks {bad}; available: {sorted(CHECKS)}")
    return names


def cmd_verify(args) -> int:
    ns = _n_values(args, 1)
    job = _VerifyJob(_check_names(args), args.timings)
    ok = True
    for rep in _map(job, ns, args.jobs):
        print(_dumps(rep), flush=True)
        ok &= rep["pass"]
    return 0 if ok else 1


# -- pair --------------------------------------------------------------------


class _PairJob:
    def __init__(self, width):
        self.width = width

    def __call__(self, n: int) -> dict:
        return pair_roots(n, self.width).to_json()


def _width(args):
    return parse_rational(args.width) if args.width else None


def _pair_ok(rep: dict) -> bool:
    return rep["pass"] or rep["n"] < PAIR_THRESHOLD


def cmd_pair(args) -> int:
    ns = _n_values(args, 2)
    ok = True
    for rep in _map(_PairJob(_width(args)), ns, args.jobs):
        print(_dumps(rep), flush=True)
        ok &= _pair_ok(rep)
    return 0 if ok else 1


# -- report ------------------------------------------------------------------


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-report-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def build_report(ns, jobs: int = 1, width=None, names=None) -> tuple[dict, bool]:
    verify = list(_map(_VerifyJob(names, False), ns, jobs))
    pair = list(_map(_PairJob(width), [n for n in ns if n >= 2], jobs))
    rows = []
    ok = True
    for rep in verify:
        ok &= rep["pass"]
        for name, r in rep["checks"].items():
            rows.append({"n": rep["n"], "check": name, "pass": r["pass"], "value": r["value"]})
    for rep in pair:
        ok &= _pair_ok(rep)
        inside = sum(p["in_window"] for p in rep["pairs"])
        rows.append({
            "n": rep["n"],
            "check": "pairing",
            "pass": rep["pass"],
            "value": f"{inside}/{len(rep['pairs'])} pairs in window",
        })
    rows.sort(key=lambda r: (r["n"], r["check"]))
    return {"verify": verify, "pair": pair, "rows": rows}, ok


def render_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "check", "pass", "value"])
    for r in rows:
        w.writerow([r["n"], r["check"], "true" if r["pass"] else "false", r["value"]])
    return buf.getvalue()


def cmd_report(args) -> int:
    ns = _n_values(args, 1, allow_empty=True)
    data, ok = build_report(ns, args.jobs, _width(args), _check_names(args))
    if args.format == "csv":
        text = render_csv(data["rows"])
    else:
        text = json.dumps(data, sort_keys=True, indent=1) + "\n"
    try:
        _atomic_write(args.out, text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chebdisc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add_n(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--n", type=int)
        g.add_argument("--n-range", metavar="A..B")

    g = sub.add_parser("gen", help="print a polynomial as JSON")
    g.add_argument("--kind", required=True, choices=KINDS)
    g.add_argument("--n", type=int)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="run identity and theorem checks, JSON lines per n")
    add_n(v)
    v.add_argument("--checks", metavar="c1,c2")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("pair", help="pair roots of J and M, JSON lines per n")
    add_n(pr)
    pr.add_argument("--width", metavar="num/den")
    pr.add_argument("--jobs", type=int, default=1)
    pr.set_defaults(func=cmd_pair)

    r = sub.add_parser("report", help="write aggregated verify + pair results")
    add_n(r)
    r.add_argument("--checks", metavar="c1,c2")
    r.add_argument("--width", metavar="num/den")
    r.add_argument("--format", choices=("json", "csv"), default="json")
    r.add_argument("--out", required=True, metavar="PATH")
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # infrastructure failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

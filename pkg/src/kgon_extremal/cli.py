"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import json
import logging
import sys
from pathlib import Path

from . import io
from .circlepack import augment, coin_report, pack
from .construct import construct, make_plan
from .errors import AdjacencyMismatch, InvalidParams, KgonError, MalformedInput, NoConvergence
from .formula import params, t_formula
from .ip_oracle import mu_bruteforce, region_scan
from .search import search
from .svg import render_svg
from .verify import check_extremal, flower_centers

log = logging.getLogger("kgon_extremal")

K3_NOTE = "note: k = 3 is outside the proved range k >= 4; the value 3n - 6 is the trivial maximum"


class UsageError(Exception):
    pass


def _positive(name):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}") from None
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v
    return conv


def _positive_float(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {v}")
    return v


def _read_graph(path):
    p = Path(path)
    if not p.exists():
        raise UsageError(f"input file not found: {path}")
    try:
        return io.read_graph(p)
    except MalformedInput as e:
        raise UsageError(f"malformed graph file {path}: {e}") from None


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def cmd_formula(a) -> int:
    p = params(a.k, a.n)
    if a.k == 3:
        print(K3_NOTE, file=sys.stderr)
    if a.format == "json":
        print(json.dumps({"k": p.k, "n": p.n, "t": p.t, "alpha": p.alpha, "beta": p.beta,
                          "gamma": p.gamma, "j": p.j, "mu": p.mu}))
    else:
        print(p.t)
        print(f"alpha={p.alpha} beta={p.beta} gamma={p.gamma} j={p.j} mu={p.mu}")
    return 0


def cmd_table(a) -> int:
    if a.n_min < a.k or a.n_max < a.n_min:
        raise UsageError(f"need k <= n-min <= n-max, got k={a.k}, n-min={a.n_min}, n-max={a.n_max}")
    rows = [params(a.k, n) for n in range(a.n_min, a.n_max + 1)]
    if a.format == "md":
        print("| n | T_k(n) | alpha | beta |")
        print("|---|---|---|---|")
        for p in rows:
            print(f"| {p.n} | {p.t} | {p.alpha} | {p.beta} |")
    else:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "n", "t", "alpha", "beta"])
        for p in rows:
            w.writerow([p.k, p.n, p.t, p.alpha, p.beta])
        sys.stdout.write(buf.getvalue())
    return 0


def cmd_mu(a) -> int:
    p = params(a.k, a.n)
    out = {"n": a.n, "k": a.k, "mu": p.mu, "gamma": p.gamma}
    status = 0
    if a.oracle:
        sol = mu_bruteforce(a.n, a.k)
        out["oracle"] = {"value": sol.value, "x": sol.minimizer.x, "y": sol.minimizer.y,
                         "agrees": sol.value == p.mu}
        status = 0 if sol.value == p.mu else 1
    if a.scan_csv:
        buf = _io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "y", "objective", "feasible"])
        for x, y, obj, feas in region_scan(a.n, a.k):
            w.writerow([x, y, obj, int(feas)])
        _write(a.scan_csv, buf.getvalue())
    if a.format == "json":
        print(json.dumps(out))
    else:
        print(p.mu)
        if a.oracle:
            o = out["oracle"]
            print(f"oracle: {o['value']} at x={o['x']}, y={o['y']} ({'agrees' if o['agrees'] else 'DISAGREES'})")
    return status


def cmd_construct(a) -> int:
    if a.k == 3:
        print(K3_NOTE, file=sys.stderr)
    if a.k < 3 or a.n < a.k:
        raise UsageError(f"need 3 <= k <= n, got k={a.k}, n={a.n}")
    g = construct(a.k, a.n)
    io.write_graph(a.out, g)
    if a.svg:
        _write(a.svg, render_svg(g))
    summary = {"k": a.k, "n": a.n, "m": g.edge_count, "target": t_formula(a.k, a.n)}
    if a.k >= 4:
        summary["chords"] = len(make_plan(a.k, a.n).chords)
    print(json.dumps(summary))
    return 0


def cmd_verify(a) -> int:
    g = _read_graph(a.input)
    if g.n < a.k:
        raise UsageError(f"graph has {g.n} vertices, fewer than k={a.k}")
    rep = check_extremal(g, a.k)
    text = io.dumps_report(rep)
    if a.report:
        _write(a.report, text)
    sys.stdout.write(text)
    return 0 if rep.extremal else 1


def cmd_search(a) -> int:
    r = search(a.k, a.n, allow_n7=a.allow_n7, threads=a.threads)
    print(json.dumps(io.search_result_to_dict(r), indent=2))
    return 0


def cmd_pack(a) -> int:
    g = _read_graph(a.input)
    try:
        p = pack(augment(g), tol=a.tol, max_iter=a.max_iter)
    except NoConvergence as e:
        print(f"error: {e}", file=sys.stderr)
        if e.best is not None:
            io.write_packing(a.out, e.best)
        return 1
    io.write_packing(a.out, p)
    if a.svg:
        _write(a.svg, render_svg(p, g))
    try:
        rep = coin_report(p, g)
    except AdjacencyMismatch as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(json.dumps(rep.to_json()))
    return 0


def cmd_flowers(a) -> int:
    g = _read_graph(a.input)
    print(json.dumps(flower_centers(g)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kgon", description="Extremal plane graphs with large faces at every vertex.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("text", "json")):
        g = p.add_mutually_exclusive_group()
        for c in choices:
            g.add_argument(f"--{c}", dest="format", action="store_const", const=c)
        p.set_defaults(format=choices[0])

    p = sub.add_parser("formula", help="closed-form T_k(n) and its case parameters")
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--n", type=_positive("n"), required=True)
    fmt(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("table", help="T_k(n) for a range of n")
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--n-min", type=_positive("n-min"), required=True)
    p.add_argument("--n-max", type=_positive("n-max"), required=True)
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("mu", help="integer program minimum, optionally cross-checked")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force solver")
    p.add_argument("--scan-csv", metavar="PATH", help="write the lattice scan (x, y, objective, feasible)")
    fmt(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("construct", help="build the extremal witness graph")
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--out", required=True, metavar="G.json")
    p.add_argument("--svg", metavar="G.svg")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a graph against the formula")
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--in", dest="input", required=True, metavar="G.json")
    p.add_argument("--report", metavar="R.json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive maximum for tiny n")
    p.add_argument("--k", type=_positive("k"), required=True)
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--allow-n7", action="store_true")
    p.add_argument("--threads", type=_positive("threads"), default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("pack", help="realise a graph as a coin graph")
    p.add_argument("--in", dest="input", required=True, metavar="G.json")
    p.add_argument("--out", required=True, metavar="P.json")
    p.add_argument("--svg", metavar="P.svg")
    p.add_argument("--tol", type=_positive_float, default=1e-10)
    p.add_argument("--max-iter", type=_positive("max-iter"), default=10**6)
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("flowers", help="list vertices bordered only by triangles")
    p.add_argument("--in", dest="input", required=True, metavar="G.json")
    p.set_defaults(func=cmd_flowers)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.DEBUG if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return a.func(a)
    except (UsageError, InvalidParams) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KgonError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())

"""Command-line interface.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 a check
failed (or a result failed self-verification), 2 malformed input, 3 the
input contains the forbidden path, 4 an oracle budget was exceeded, 5 an
event the strict-mode analysis rules out was observed.
"""
import argparse
import csv
from dataclasses import asdict, dataclass, field
import json
import logging
import sys
import time

import numpy as np

from . import kernels
from .alphaseq import AlphaSequence, check_alpha, check_smooth
from .coloring import acyclic_coloring, verify_coloring
from .core import find_triangle, vertex_set
from .errors import (BudgetExceeded, DegenerateSize, InvariantViolation, MalformedInput,
                     PatternWitness, PreconditionError)
from .extract import Trace
from .findtrans import find_trans, verify_trans_result
from .generators import (FamilySpec, NotFound, family, random_tournament, search_base,
                         shuffled_transitive, substitution_product)
from .io import digest, format_tournament, parse_sets, parse_tournament, parse_vertex_list
from .oracles import (OracleBudget, dichromatic_exact, find_pk_exhaustive, homogeneous_sets,
                      max_transitive_exact)
from .patterns import check_pk_witness, path_tournament
from .schedule import RELAXED, STRICT, parse_rational, schedule_for

log = logging.getLogger("pathfree")

EXIT_OK, EXIT_FAIL, EXIT_MALFORMED, EXIT_WITNESS, EXIT_BUDGET, EXIT_DEGENERATE = range(6)

CSV_HEADER = ["n", "seed", "mode", "time_ms", "out_size", "classes", "exit"]


@dataclass
class RunReport:
    command: str
    input_digest: str
    n: int
    k_user: int
    k_effective: int
    mode: str
    lam: str
    output: object = None
    witness: list = None
    verified: bool = False
    exit: int = EXIT_OK
    timings_ms: dict = field(default_factory=dict)
    exits: dict = field(default_factory=dict)

    def to_json(self):
        return json.dumps(asdict(self), sort_keys=True)


def _read_tournament(path):
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    return parse_tournament(text)


def _read_text(path):
    return sys.stdin.read() if path == "-" else open(path).read()


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _int_list(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}") from None


def _schedule(args):
    lam = args.lam if args.mode == RELAXED else None
    if args.mode == STRICT and args.lam is not None:
        raise PreconditionError("--lambda only applies to --mode relaxed")
    return schedule_for(args.k, args.mode, lam)


def _emit(args, report, plain_lines):
    if args.json:
        print(report.to_json())
    else:
        for line in plain_lines:
            print(line)


# ---------------------------------------------------------------- gen

def cmd_gen(args):
    kind = args.kind
    comment = None
    if kind == "path":
        T = path_tournament(args.k)
    elif kind == "random":
        T = random_tournament(args.n, args.seed)
    elif kind == "transitive":
        T = shuffled_transitive(args.n, args.seed)
    elif kind == "product":
        if not args.base or not args.factor:
            raise PreconditionError("gen product needs --base and --factor")
        T = substitution_product(_read_tournament(args.base), _read_tournament(args.factor))
    elif kind == "family":
        base = _read_tournament(args.base) if args.base else path_tournament(args.k)
        T = family(FamilySpec(base, args.depth))
        comment = f"family depth {args.depth} over a {base.n}-vertex base"
    elif kind == "base-search":
        budget = OracleBudget(max_nodes_pk_search=args.node_budget)
        try:
            spec = search_base(args.k, args.n, args.tr_max, args.budget, args.seed, budget)
        except NotFound as e:
            print(f"not found: {e.attempts} seeds tried", file=sys.stderr)
            return EXIT_FAIL
        T = spec.base
        comment = f"seed {spec.seed}: P_{args.k}-free, largest transitive set <= {args.tr_max}"
    else:  # pragma: no cover - argparse restricts choices
        raise PreconditionError(kind)
    sys.stdout.write(format_tournament(T, comment))
    return EXIT_OK


# ---------------------------------------------------------- find-trans

def _strict_impossible(sched, trace):
    return sched.strict and trace.unexpected_fallbacks > 0


def cmd_find_trans(args):
    T = _read_tournament(args.file)
    sched = _schedule(args)
    report = RunReport("find-trans", digest(T), T.n, args.k, sched.k, sched.mode, str(sched.lam))
    trace = Trace()
    t0 = time.perf_counter()
    try:
        res = find_trans(T, sched, trace=trace)
    except PatternWitness as w:
        report.timings_ms["find_trans"] = (time.perf_counter() - t0) * 1e3
        report.witness = list(w.vertices)
        report.verified = check_pk_witness(T, w.vertices)
        report.exit = EXIT_WITNESS if report.verified else EXIT_FAIL
        report.exits = dict(trace.exits)
        _emit(args, report, ["witness " + " ".join(map(str, w.vertices))])
        return report.exit
    except DegenerateSize as e:
        print(f"degenerate: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    report.timings_ms["find_trans"] = (time.perf_counter() - t0) * 1e3
    report.output = [int(v) for v in res.vertices]
    report.verified = verify_trans_result(T, res.vertices)
    report.exits = dict(trace.exits)
    report.exit = EXIT_OK if report.verified else EXIT_FAIL
    if report.verified and _strict_impossible(sched, trace):
        report.exit = EXIT_DEGENERATE
    _emit(args, report, [" ".join(map(str, report.output))])
    print(f"k={args.k} (effective {sched.k}) mode={sched.mode} lambda={sched.lam} "
          f"size={len(res)} verified={report.verified} "
          f"time={report.timings_ms['find_trans']:.1f}ms", file=sys.stderr)
    return report.exit


def cmd_color(args):
    T = _read_tournament(args.file)
    sched = _schedule(args)
    report = RunReport("color", digest(T), T.n, args.k, sched.k, sched.mode, str(sched.lam))
    trace = Trace()
    t0 = time.perf_counter()
    try:
        col = acyclic_coloring(T, sched, trace)
    except PatternWitness as w:
        report.witness = list(w.vertices)
        report.verified = check_pk_witness(T, w.vertices)
        report.exit = EXIT_WITNESS if report.verified else EXIT_FAIL
        _emit(args, report, ["witness " + " ".join(map(str, w.vertices))])
        return report.exit
    except DegenerateSize as e:
        print(f"degenerate: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    report.timings_ms["color"] = (time.perf_counter() - t0) * 1e3
    report.output = [[int(v) for v in c] for c in col.classes]
    report.verified = verify_coloring(T, col)
    report.exits = dict(trace.exits)
    report.exit = EXIT_OK if report.verified else EXIT_FAIL
    if report.verified and _strict_impossible(sched, trace):
        report.exit = EXIT_DEGENERATE
    _emit(args, report, [" ".join(map(str, c)) for c in report.output])
    print(f"{len(col)} classes on {T.n} vertices, verified={report.verified}", file=sys.stderr)
    return report.exit


# -------------------------------------------------------------- check

def cmd_check(args):
    T = _read_tournament(args.file)
    what = args.what
    record = {"command": f"check {what}", "input_digest": digest(T)}
    if what == "transitive":
        X = vertex_set(T, parse_vertex_list(args.set))
        tri = find_triangle(T, X)
        ok = tri is None
        record["cycle"] = list(tri) if tri else None
        plain = ["transitive" if ok else "cycle " + " ".join(map(str, tri))]
    elif what == "pk-free":
        budget = OracleBudget(max_nodes_pk_search=args.node_budget)
        w = find_pk_exhaustive(T, args.k, budget)
        ok = w is None
        record["witness"] = list(w) if w else None
        plain = ["free" if ok else "witness " + " ".join(map(str, w))]
    else:
        if args.sets is None:
            raise PreconditionError(f"check {what} needs --sets")
        seq = AlphaSequence(T, tuple(parse_sets(_read_text(args.sets))))
        if what == "alpha":
            if args.c is None:
                raise PreconditionError("check alpha needs --c")
            rep = check_alpha(seq, args.c, args.lam)
        else:
            rep = check_smooth(seq, args.lam)
        ok = rep.passed
        record.update({k: str(v) for k, v in asdict(rep).items()})
        plain = [f"{'pass' if ok else 'fail'} min_relative_size={rep.min_relative_size} "
                 f"min_pair_density={rep.min_pair_density}"
                 + (f" min_vertex_density={rep.min_vertex_density}" if what == "smooth" else "")]
    record["passed"] = ok
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(plain))
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------- oracle

def cmd_oracle(args):
    T = _read_tournament(args.file)
    budget = OracleBudget(max_nodes_pk_search=args.node_budget)
    record = {"command": f"oracle {args.what}", "input_digest": digest(T)}
    if args.what == "max-trans":
        X = max_transitive_exact(T, budget)
        record.update(size=len(X), set=X.tolist())
        plain = [str(len(X)), " ".join(map(str, X))]
    elif args.what == "dichromatic":
        chi, col = dichromatic_exact(T, budget)
        record.update(count=chi, classes=[c.tolist() for c in col.classes])
        plain = [str(chi)] + [" ".join(map(str, c)) for c in col.classes]
    elif args.what == "find-pk":
        w = find_pk_exhaustive(T, args.k, budget)
        record.update(witness=list(w) if w else None)
        plain = ["none" if w is None else " ".join(map(str, w))]
    else:
        hs = homogeneous_sets(T, budget)
        record.update(sets=[h.tolist() for h in hs], prime=not hs)
        plain = [" ".join(map(str, h)) for h in hs] or ["prime"]
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(plain))
    return EXIT_OK


# -------------------------------------------------------------- bench

def bench_cell(n, seed, k, mode, lam, instance="random", color=False):
    """Time one run on a generated instance; returns a CSV row dict."""
    sched = schedule_for(k, mode, lam if mode == RELAXED else None)
    T = random_tournament(n, seed) if instance == "random" else shuffled_transitive(n, seed)
    trace = Trace()
    out_size, classes, code = "", "", EXIT_OK
    t0 = time.perf_counter()
    try:
        if color:
            col = acyclic_coloring(T, sched, trace)
            classes = len(col)
            out_size = max(len(c) for c in col.classes)
            if not verify_coloring(T, col):
                code = EXIT_FAIL
        else:
            res = find_trans(T, sched, trace=trace)
            out_size = len(res)
    except PatternWitness as w:
        out_size = len(w.vertices)
        code = EXIT_WITNESS
    except DegenerateSize:
        code = EXIT_DEGENERATE
    elapsed = (time.perf_counter() - t0) * 1e3
    if not color and code == EXIT_OK and not verify_trans_result(T, res.vertices):
        code = EXIT_FAIL
    return {"n": n, "seed": seed, "mode": mode, "time_ms": f"{elapsed:.3f}",
            "out_size": out_size, "classes": classes, "exit": code}


def cmd_bench(args):
    if args.backend != "auto":
        kernels.use_backend(args.backend)
    print(f"backend={kernels.BACKEND}", file=sys.stderr)
    lam = args.lam if args.mode == RELAXED else None
    if args.mode == RELAXED and lam is None:
        raise PreconditionError("relaxed mode needs --lambda")
    rows = []
    for n in args.sizes:
        for seed in range(args.seeds):
            rows.append(bench_cell(n, seed, args.k, args.mode, lam, args.instance, args.color))
    rows.sort(key=lambda r: (r["n"], r["seed"]))
    w = csv.DictWriter(sys.stdout, fieldnames=CSV_HEADER, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return EXIT_OK


# ------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON object per line")
    common.add_argument("-v", "--verbose", action="store_true")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--k", type=int, required=True, help="forbidden path size")
    alg.add_argument("--mode", choices=[STRICT, RELAXED], default=STRICT)
    alg.add_argument("--lambda", "--λ", dest="lam", type=_rational, default=None,
                     help="relaxed-mode lambda, written p/q")

    p = argparse.ArgumentParser(prog="pathfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a tournament to stdout")
    g.add_argument("kind", choices=["path", "random", "transitive", "product", "family",
                                    "base-search"])
    g.add_argument("--k", type=int, default=4)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--depth", type=int, default=1)
    g.add_argument("--base")
    g.add_argument("--factor")
    g.add_argument("--tr-max", type=int, default=3)
    g.add_argument("--budget", type=int, default=100, help="seeds to try in base-search")
    g.add_argument("--node-budget", type=int, default=OracleBudget().max_nodes_pk_search)
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("find-trans", parents=[common, alg], help="extract a transitive set")
    f.add_argument("file", nargs="?", default="-")
    f.set_defaults(func=cmd_find_trans)

    c = sub.add_parser("color", parents=[common, alg], help="acyclic coloring")
    c.add_argument("file", nargs="?", default="-")
    c.set_defaults(func=cmd_color)

    ch = sub.add_parser("check", parents=[common], help="verify a property")
    ch.add_argument("what", choices=["transitive", "pk-free", "alpha", "smooth"])
    ch.add_argument("file", nargs="?", default="-")
    ch.add_argument("--set", help="comma-separated vertices")
    ch.add_argument("--k", type=int)
    ch.add_argument("--lambda", "--λ", dest="lam", type=_rational, default=None)
    ch.add_argument("--c", type=_rational)
    ch.add_argument("--sets", help="file with one vertex set per line")
    ch.add_argument("--node-budget", type=int, default=OracleBudget().max_nodes_pk_search)
    ch.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", parents=[common], help="exact brute-force answers")
    o.add_argument("what", choices=["max-trans", "dichromatic", "find-pk", "homog"])
    o.add_argument("file", nargs="?", default="-")
    o.add_argument("--k", type=int)
    o.add_argument("--node-budget", type=int, default=OracleBudget().max_nodes_pk_search)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("bench", parents=[common, alg], help="runtime CSV")
    b.add_argument("--sizes", type=_int_list, required=True)
    b.add_argument("--seeds", type=int, default=5)
    b.add_argument("--instance", choices=["random", "transitive"], default="random")
    b.add_argument("--color", action="store_true", help="time the coloring instead")
    b.add_argument("--backend", choices=["auto", "compiled", "python"], default="auto")
    b.set_defaults(func=cmd_bench)
    return p


def _validate(args):
    if args.cmd == "check":
        if args.what == "transitive" and args.set is None:
            raise PreconditionError("check transitive needs --set")
        if args.what == "pk-free" and args.k is None:
            raise PreconditionError("check pk-free needs --k")
        if args.what in ("alpha", "smooth") and args.lam is None:
            raise PreconditionError(f"check {args.what} needs --lambda")
    if args.cmd == "oracle" and args.what == "find-pk" and args.k is None:
        raise PreconditionError("oracle find-pk needs --k")


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        _validate(args)
        return args.func(args)
    except (MalformedInput, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolation as e:
        print(f"invariant violated: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MALFORMED


def run(argv=None):
    sys.exit(main(argv))

"""Command-line surface: compute, eval, verify-critical, reduce, gen, bench.

Exit codes: 0 success (and verification match), 1 verification mismatch,
2 input parse error, 3 guard violation (size, weight, rank).  Data goes
to stdout or --out; diagnostics go to stderr only.

Graph-format inputs describe cycle matroids; their incidence matrices
always have a redundant row per connected component, so they are reduced
to a row basis (which preserves the matroid and the column weights)
before any algorithm runs.
"""

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass, field

from . import reductions as red
from .algos import ALGORITHMS, tutte_poly, tutte_table
from .critical import LinearCode, verify_critical
from .errors import FqTutteError, ParseError
from .gf import ctx_new
from .generate import (
    graphic_matroid_matrix,
    random_connected_graph,
    random_full_rank_matrix,
    random_wt2_matrix,
)
from .matroid import (
    from_graph,
    max_col_weight,
    parse_graph,
    parse_matrix,
    restrict_to_row_basis,
    write_graph,
    write_matrix,
)
from .tutte import poly_from_text, tau_to_tutte

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_GUARD = 3

GUARD_ERRORS = (
    "TooLargeError",
    "TooManyColumnsError",
    "WeightTooHighError",
    "ZeroColumnError",
    "RankDeficientError",
)


@dataclass
class RunReport:
    algorithm: str
    input_digest: str
    wall_time_s: float
    counters: dict = field(default_factory=dict)
    output_path: str = "-"
    verdicts: dict = field(default_factory=dict)

    def line(self):
        extras = " ".join(
            "%s=%s" % (k, v) for k, v in sorted(self.counters.items())
        )
        verdict = " ".join(
            "%s=%s" % (k, v) for k, v in sorted(self.verdicts.items())
        )
        return (
            "algo=%s digest=%s wall=%.3fs out=%s %s %s"
            % (
                self.algorithm,
                self.input_digest[:12],
                self.wall_time_s,
                self.output_path,
                extras,
                verdict,
            )
        ).strip()


def _digest(text):
    return hashlib.sha256(text.encode()).hexdigest()


def _load_matroid(path):
    """Matrix or graph file; graphs get the row-basis reduction."""
    with open(path) as fh:
        text = fh.read()
    first = ""
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            first = line
            break
    n_tok = len(first.split())
    if n_tok == 4:
        return parse_matrix(text), text
    if n_tok == 2:
        k, edges = parse_graph(text)
        return restrict_to_row_basis(from_graph(k, edges)), text
    raise ParseError("input is neither matrix ('p d k m') nor graph ('k m')")


def _emit(text, out_path):
    if out_path and out_path != "-":
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args):
    mat, text = _load_matroid(args.input)
    t0 = time.perf_counter()
    counters = {}
    poly = tutte_poly(mat, args.algo, counters=counters, threads=args.threads)
    report = RunReport(
        algorithm=args.algo,
        input_digest=_digest(text),
        wall_time_s=time.perf_counter() - t0,
        counters=counters,
        output_path=args.out or "-",
    )
    _emit(poly.to_text(), args.out)
    print(report.line(), file=sys.stderr)
    return EXIT_OK


def cmd_eval(args):
    with open(args.poly) as fh:
        poly = poly_from_text(fh.read())
    print(poly.evaluate(int(args.x), int(args.y)))
    return EXIT_OK


def cmd_verify_critical(args):
    mat, text = _load_matroid(args.input)
    code = LinearCode(mat)
    override = None
    if args.poly:
        with open(args.poly) as fh:
            override = poly_from_text(fh.read())
    t0 = time.perf_counter()
    rep = verify_critical(code, d=args.d, algo=args.algo, poly=override)
    run = RunReport(
        algorithm=args.algo,
        input_digest=_digest(text),
        wall_time_s=time.perf_counter() - t0,
        verdicts={"critical": "PASS" if rep.passed else "FAIL"},
    )
    print(rep)
    print(run.line(), file=sys.stderr)
    return EXIT_OK if rep.passed else EXIT_MISMATCH


def _load_csp(path):
    with open(path) as fh:
        text = fh.read()
    first = ""
    for line in text.splitlines():
        line = line.strip()
        if line and not (line.startswith("#") or line.startswith("c ")):
            first = line
            break
    if first.startswith("p cnf"):
        n_vars, clauses = red.parse_dimacs(text)
        return red.cnf_to_bipartite_csp(n_vars, clauses), ("cnf", n_vars, clauses)
    if first.startswith("csp"):
        return red.parse_csp(text), ("csp", None, None)
    raise ParseError("reduce input must be DIMACS CNF or CSP text")


def cmd_reduce(args):
    csp, origin = _load_csp(args.input)
    if args.chain == "thm1":
        result = red.arity2_chain(csp, modulus=args.modulus, group=args.group)
        print(
            "chain=thm1 q=%d k=%d m=%d count_factor=%d"
            % (
                result.ctx.q,
                result.matrix.k,
                result.matrix.m,
                result.count_factor,
            )
        )
    elif args.chain == "thm2":
        if args.ext_degree:
            ctx = ctx_new(2, args.ext_degree)
            if red.find_sidon(ctx, 2 * max(len(d) for d in csp.domains)) is None:
                raise red.NoSidonSetError(
                    "GF(2^%d) has no large enough Sidon set" % args.ext_degree
                )
        else:
            dmax = max(len(d) for d in csp.domains)
            e = 1
            while red.find_sidon(ctx_new(2, e), 2 * dmax) is None:
                e += 1
        ctx = ctx_new(2, args.ext_degree or e)
        result = red.sum_chain(csp, ctx)
        print(
            "chain=thm2 semantic_q=%d base_q=2 k=%d m=%d assignment_factor=q^%d"
            % (
                ctx.q,
                result.matrix.k,
                result.matrix.m,
                result.assignment_factor,
            )
        )
    else:
        raise ParseError("unknown chain %r" % args.chain)
    _emit(write_matrix(result.matrix), args.out)

    if args.verify:
        ok = _verify_chain(args.chain, csp, result)
        print("verify=%s" % ("PASS" if ok else "FAIL"))
        return EXIT_OK if ok else EXIT_MISMATCH
    return EXIT_OK


def _verify_chain(chain, csp, result):
    """Exhaustive count checks at desk scale (small inputs only)."""
    from .critical import count_full_support

    n_sat = red.count_sat(csp)
    if chain == "thm1":
        fs = count_full_support(LinearCode(result.matrix))
        return fs == result.count_factor * n_sat
    reduction = result.meta["reduction"]
    f_norm = red.count_sat(reduction.subsystem)
    n_sys = red.count_sat(result.system)
    if n_sys != f_norm * n_sat:
        return False
    from .critical import extension_code

    ext = extension_code(LinearCode(result.matrix),
                         result.system.ctx.d // result.matrix.ctx.d)
    fs = count_full_support(ext)
    q = result.system.ctx.q
    return n_sys == q**result.assignment_factor * fs


def cmd_gen(args):
    if args.family == "graphic":
        if args.q != 2:
            raise ParseError("graphic family is binary (use --q 2)")
        m = args.m or 2 * args.k
        edges = random_connected_graph(args.k + 1, m, args.seed)
        _emit(write_graph(args.k + 1, edges), args.out)
        return EXIT_OK
    ctx = _ctx_from_q(args.q)
    m = args.m or 2 * args.k
    if args.family == "random-wt2":
        mat = random_wt2_matrix(ctx.p, ctx.d, args.k, m, args.seed)
    elif args.family == "random-general":
        mat = random_full_rank_matrix(ctx.p, ctx.d, args.k, m, args.seed)
    else:
        raise ParseError("unknown family %r" % args.family)
    _emit(write_matrix(mat), args.out)
    return EXIT_OK


def _ctx_from_q(q):
    ctx = red._prime_power_ctx(q)
    if ctx is None:
        raise ParseError("q = %d is not a prime power" % q)
    return ctx


def _bench_instance(family, k, q, m, seed):
    if family == "graphic":
        if q != 2:
            raise ParseError("graphic family is binary")
        return graphic_matroid_matrix(k, m, seed)
    ctx = _ctx_from_q(q)
    if family == "random-wt2":
        return random_wt2_matrix(ctx.p, ctx.d, k, m, seed)
    if family == "random-general":
        return random_full_rank_matrix(ctx.p, ctx.d, k, m, seed)
    raise ParseError("unknown family %r" % family)


BENCH_COLUMNS = (
    "family,algo,k,q,m,seed,rep,wall_s,independent_sets,column_reductions,"
    "transform_adds,entry_mults,division_checks"
)


def cmd_bench(args):
    m = args.m or 2 * args.k
    algos = (
        args.algos.split(",")
        if args.algos
        else (["general", "wt2"] if args.family != "random-general" else ["general"])
        + (["def"] if m <= 20 else [])
    )
    print(BENCH_COLUMNS)
    for rep in range(args.reps):
        mat = _bench_instance(args.family, args.k, args.q, m, args.seed + rep)
        if max_col_weight(mat) > 2 and "wt2" in algos:
            algos = [a for a in algos if a != "wt2"]
        for algo in algos:
            counters = {}
            t0 = time.perf_counter()
            tutte_table(mat, algo, counters=counters, threads=args.threads)
            wall = time.perf_counter() - t0
            print(
                "%s,%s,%d,%d,%d,%d,%d,%.6f,%d,%d,%d,%d,%d"
                % (
                    args.family,
                    algo,
                    args.k,
                    args.q,
                    m,
                    args.seed,
                    rep,
                    wall,
                    counters.get("independent_sets", 0),
                    counters.get("column_reductions", 0),
                    counters.get("transform_adds", 0),
                    counters.get("entry_mults", 0),
                    counters.get("division_checks", 0),
                )
            )
    return EXIT_OK


def build_parser():
    top = argparse.ArgumentParser(
        prog="fqtutte",
        description="Exact Tutte polynomials of linear matroids over GF(q)",
    )
    top.add_argument(
        "--threads", type=int, default=1,
        help="worker threads for subset enumeration (default 1)",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", help="Tutte polynomial of a matrix/graph file")
    c.add_argument("input")
    c.add_argument("--algo", choices=ALGORITHMS, default="general")
    c.add_argument("--out", default=None)
    c.set_defaults(run=cmd_compute)

    e = sub.add_parser("eval", help="evaluate a polynomial file at a point")
    e.add_argument("poly")
    e.add_argument("--x", required=True)
    e.add_argument("--y", required=True)
    e.set_defaults(run=cmd_eval)

    v = sub.add_parser(
        "verify-critical",
        help="full-support tuple count vs signed Tutte evaluation",
    )
    v.add_argument("input")
    v.add_argument("--d", type=int, default=1)
    v.add_argument("--algo", choices=ALGORITHMS, default="general")
    v.add_argument("--poly", default=None, help="polynomial override file")
    v.set_defaults(run=cmd_verify_critical)

    r = sub.add_parser("reduce", help="CSP/CNF to generator matrix chains")
    r.add_argument("input")
    r.add_argument("--chain", choices=("thm1", "thm2"), required=True)
    r.add_argument("--out", default=None)
    r.add_argument("--modulus", type=int, default=None)
    r.add_argument("--group", type=int, default=1)
    r.add_argument("--ext-degree", type=int, default=None)
    r.add_argument("--verify", action="store_true")
    r.set_defaults(run=cmd_reduce)

    g = sub.add_parser("gen", help="deterministic random instances")
    g.add_argument("--family", choices=("graphic", "random-wt2", "random-general"),
                   required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--q", type=int, default=2)
    g.add_argument("--m", type=int, default=None)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=None)
    g.set_defaults(run=cmd_gen)

    b = sub.add_parser("bench", help="timing/counter table as CSV")
    b.add_argument("--family", choices=("graphic", "random-wt2", "random-general"),
                   required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--q", type=int, default=2)
    b.add_argument("--m", type=int, default=None)
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--algos", default=None)
    b.set_defaults(run=cmd_bench)
    return top


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except FqTutteError as exc:
        if type(exc).__name__ in GUARD_ERRORS:
            print("guard violation: %s" % exc, file=sys.stderr)
            return EXIT_GUARD
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print("io error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

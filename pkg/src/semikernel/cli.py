"""Command-line front end.

Every subcommand reads and writes the text formats from `formats`. Exit
codes: 0 on success; 2 when inputs or flags fail to parse or validate; 1
when the computation itself raises a domain error. Each failure prints one
line to standard error naming the error variant.
"""

from __future__ import annotations

import argparse
import random
import sys

import numpy as np

from . import calculus, graphs, solvers, systolic
from .errors import InvariantViolation, ParseError, SemiringError
from .formats import (
    matrix_as_vector,
    parse_function_file,
    parse_graph_file,
    parse_kernel_file,
    parse_matrix_file,
    render_function,
    render_matrix,
)
from .interval import (
    Interval,
    classical_distributivity_witness,
    distributivity_witness,
    interval_over,
)
from .linalg import dot
from .semiring import (
    BOOLEAN,
    DeformedSemiring,
    MAX_MIN,
    MAX_TIMES,
    MIN_PLUS,
    by_name,
    dequantize,
    format_real,
)

_PROBLEMS = {
    "shortest": (graphs.shortest_paths, MIN_PLUS),
    "widest": (graphs.widest_paths, MAX_MIN),
    "reliable": (graphs.most_reliable_paths, MAX_TIMES),
    "reach": (graphs.reachability, BOOLEAN),
}


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="semikernel",
        description="Linear algebra, path problems, and idempotent calculus over interchangeable semirings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("closure", help="matrix closure E + A + A^2 + ...")
    c.add_argument("--input", required=True, help="matrix file")
    c.add_argument("--method", choices=["gauss-jordan", "series"], default="gauss-jordan")
    c.add_argument("--max-terms", type=int, default=None)
    c.add_argument("--output", default=None, help="write the result here instead of stdout")

    s = sub.add_parser("solve", help="least solution of X = A X + B")
    s.add_argument("--a", required=True, help="matrix file for A")
    s.add_argument("--b", required=True, help="matrix file for B")
    s.add_argument("--method", choices=["jacobi", "gauss-seidel"], default="jacobi")
    s.add_argument("--max-iter", type=int, default=None)
    s.add_argument("--output", default=None)

    pa = sub.add_parser("paths", help="all-pairs path problems on a weighted digraph")
    pa.add_argument("--input", required=True, help="graph file")
    pa.add_argument("--problem", choices=sorted(_PROBLEMS), required=True)
    pa.add_argument("--witness", nargs=2, type=int, metavar=("SRC", "DST"), default=None)
    pa.add_argument("--output", default=None)

    d = sub.add_parser("dot", help="semiring scalar product of two vectors")
    d.add_argument("--x", required=True, help="single-row or single-column matrix file")
    d.add_argument("--y", required=True)

    ig = sub.add_parser("integrate", help="idempotent integral / measure / Riemann-style sum")
    ig.add_argument("--input", required=True, help="function file")
    ig.add_argument("--rule", choices=["sup", "riemann"], default="sup")
    ig.add_argument("--subset", default=None, help="comma-separated grid indices to measure")

    lg = sub.add_parser("legendre", help="Legendre transform of a sampled function")
    lg.add_argument("--input", required=True, help="function file over max-plus")
    lg.add_argument("--xi-min", type=float, required=True)
    lg.add_argument("--xi-max", type=float, required=True)
    lg.add_argument("--xi-steps", type=int, required=True)
    lg.add_argument("--negate", action="store_true", help="conjugate form: sup(xi*x - f(x))")
    lg.add_argument("--output", default=None)

    ak = sub.add_parser("apply-kernel", help="apply an integral operator to a function")
    ak.add_argument("--kernel", required=True, help="kernel file")
    ak.add_argument("--input", required=True, help="function file")
    ak.add_argument("--output", default=None)

    dq = sub.add_parser("dequantize", help="h*ln(u), or the deformed sum of two elements")
    dq.add_argument("--h", type=float, required=True)
    dq.add_argument("--u", type=float, default=None)
    dq.add_argument("--w1", type=float, default=None)
    dq.add_argument("--w2", type=float, default=None)

    iv = sub.add_parser("interval-demo", help="interval distributivity: idempotent vs classical")
    iv.add_argument("--inner", default="max-plus")
    iv.add_argument("--trials", type=int, default=1000)
    iv.add_argument("--seed", type=int, default=0)

    sy = sub.add_parser("systolic", help="simulate the systolic-array matrix product")
    sy.add_argument("--a", required=True, help="matrix file for A")
    sy.add_argument("--b", required=True, help="matrix file for B")
    sy.add_argument("--trace", action="store_true", help="emit one event per line on stderr")
    sy.add_argument("--output", default=None)

    return p


# phase 1: read files and validate flags (failures exit 2)

def _load(args):
    cmd = args.command
    if cmd == "closure":
        return {"A": parse_matrix_file(args.input)}
    if cmd == "solve":
        return {"A": parse_matrix_file(args.a), "B": parse_matrix_file(args.b)}
    if cmd == "paths":
        g = parse_graph_file(args.input)
        if args.witness is not None:
            src, dst = args.witness
            if not (0 <= src < g.n and 0 <= dst < g.n):
                raise InvariantViolation(f"witness endpoints ({src}, {dst}) outside node range 0..{g.n - 1}")
        return {"g": g}
    if cmd == "dot":
        return {"X": parse_matrix_file(args.x), "Y": parse_matrix_file(args.y)}
    if cmd == "integrate":
        ctx = {"f": parse_function_file(args.input)}
        if args.subset is not None:
            indices = []
            for part in args.subset.split(","):
                part = part.strip()
                if not part:
                    continue
                if not part.lstrip("+-").isdigit():
                    raise ParseError(0, 0, f"bad grid index {part!r} in --subset")
                indices.append(int(part))
            ctx["subset"] = indices
        return ctx
    if cmd == "legendre":
        if args.xi_steps < 1:
            raise InvariantViolation(f"--xi-steps must be >= 1, got {args.xi_steps}")
        if args.xi_steps > 1 and not args.xi_max > args.xi_min:
            raise InvariantViolation("--xi-max must exceed --xi-min")
        return {"f": parse_function_file(args.input)}
    if cmd == "apply-kernel":
        return {"K": parse_kernel_file(args.kernel), "f": parse_function_file(args.input)}
    if cmd == "dequantize":
        if not float(args.h) > 0.0:
            raise InvariantViolation(f"--h must be positive, got {args.h!r}")
        u_mode = args.u is not None
        w_mode = args.w1 is not None or args.w2 is not None
        if u_mode == w_mode or (w_mode and (args.w1 is None or args.w2 is None)):
            raise ParseError(0, 0, "need either --u or both --w1 and --w2")
        return {}
    if cmd == "interval-demo":
        if args.trials < 1:
            raise InvariantViolation(f"--trials must be >= 1, got {args.trials}")
        return {"inner": interval_over(by_name(args.inner)).inner}
    if cmd == "systolic":
        A = parse_matrix_file(args.a)
        B = parse_matrix_file(args.b)
        if args.trace and max(A.rows, A.cols, B.rows, B.cols) > systolic.TRACE_CAP:
            raise InvariantViolation(f"trace capture is capped at n <= {systolic.TRACE_CAP}")
        return {"A": A, "B": B}
    raise AssertionError(cmd)


# phase 2: compute (failures exit 1)

def _solver_comment(r: solvers.SolveReport) -> str:
    return f"# method={r.method} iterations={r.iterations} stabilized={str(r.stabilized).lower()}\n"


def _run(args, ctx) -> str:
    cmd = args.command
    if cmd == "closure":
        if args.method == "gauss-jordan":
            r = solvers.closure_gauss_jordan(ctx["A"])
        else:
            r = solvers.closure_series(ctx["A"], args.max_terms)
        return _solver_comment(r) + render_matrix(r.solution)
    if cmd == "solve":
        solver = solvers.bellman_jacobi if args.method == "jacobi" else solvers.bellman_gauss_seidel
        r = solver(ctx["A"], ctx["B"], args.max_iter)
        return _solver_comment(r) + render_matrix(r.solution)
    if cmd == "paths":
        solve_fn, S = _PROBLEMS[args.problem]
        if args.witness is not None:
            w = graphs.extract_path(ctx["g"], S, args.witness[0], args.witness[1])
            nodes = " ".join(str(v) for v in w.nodes)
            return f"path {nodes}\nvalue {S.format_token(w.value)}\n"
        return render_matrix(solve_fn(ctx["g"]))
    if cmd == "dot":
        x = matrix_as_vector(ctx["X"])
        y = matrix_as_vector(ctx["Y"])
        v = dot(x, y)
        return x.semiring.format_token(v) + "\n"
    if cmd == "integrate":
        f = ctx["f"]
        if "subset" in ctx:
            v = calculus.idempotent_measure(f, ctx["subset"])
            return f.semiring.format_token(v) + "\n"
        if args.rule == "riemann":
            return format_real(calculus.riemann_sum(f)) + "\n"
        return f.semiring.format_token(calculus.idempotent_integral(f)) + "\n"
    if cmd == "legendre":
        xis = np.linspace(args.xi_min, args.xi_max, args.xi_steps)
        g = calculus.legendre_transform(ctx["f"], xis, negate=args.negate)
        return render_function(g)
    if cmd == "apply-kernel":
        return render_function(calculus.apply_operator(ctx["K"], ctx["f"]))
    if cmd == "dequantize":
        if args.u is not None:
            return format_real(dequantize(args.h, args.u)) + "\n"
        S = DeformedSemiring(args.h)
        v = S.add(S.canonical(args.w1), S.canonical(args.w2))
        return format_real(v) + "\n"
    if cmd == "interval-demo":
        return _interval_demo(ctx["inner"], args.trials, args.seed)
    if cmd == "systolic":
        res = systolic.simulate_matmul(ctx["A"], ctx["B"], trace=args.trace)
        if args.trace:
            S = res.product.semiring
            for ev in res.events:
                ops = " ".join(S.format_token(op) for op in ev.operands)
                print(f"{ev.cycle} {ev.cell[0]} {ev.cell[1]} {ev.action} {ops}", file=sys.stderr)
        return f"# cycles={res.cycles}\n" + render_matrix(res.product)
    raise AssertionError(cmd)


def _sample_scalar(S, rng: random.Random):
    if S.name == "boolean":
        return rng.random() < 0.5
    if S.name == "max-times":
        return round(rng.uniform(0.0, 2.0), 3)
    return round(rng.uniform(-10.0, 10.0), 3)


def _sample_interval(S, rng: random.Random) -> Interval:
    a, b = _sample_scalar(S, rng), _sample_scalar(S, rng)
    return Interval(a, b) if S.leq(a, b) else Interval(b, a)


def _interval_demo(inner, trials: int, seed: int) -> str:
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        a, b, c = (_sample_interval(inner, rng) for _ in range(3))
        if distributivity_witness(inner, a, b, c).equal:
            ok += 1
    lift = interval_over(inner)
    rep = classical_distributivity_witness(Interval(-1.0, 1.0), Interval(1.0, 1.0), Interval(-1.0, -1.0))
    out = [
        f"inner {inner.name}",
        f"distributive {ok}/{trials}",
        f"classical-left {lift.format_token(rep.left)}",
        f"classical-right {lift.format_token(rep.right)}",
        f"classical-distributive {'true' if rep.equal else 'false'}",
    ]
    return "\n".join(out) + "\n"


def _diagnose(exc: BaseException) -> None:
    print(f"{type(exc).__name__}: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    try:
        ctx = _load(args)
    except (SemiringError, OSError) as exc:
        _diagnose(exc)
        return 2

    try:
        out = _run(args, ctx)
    except SemiringError as exc:
        _diagnose(exc)
        return 1

    target = getattr(args, "output", None)
    if target:
        try:
            with open(target, "w", encoding="utf-8") as fh:
                fh.write(out)
        except OSError as exc:
            _diagnose(exc)
            return 2
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

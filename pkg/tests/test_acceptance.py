"""Acceptance gate: nine numbered criteria, one printed pass/fail line each.

Every expected value is produced by an independent oracle (direct evaluation,
exhaustive enumeration, brute-force suprema, numpy's own linear algebra);
tolerances are pinned in each criterion.
"""

import math
import random
import time

import numpy as np
import pytest

import semikernel as sk
from semikernel.cli import main as cli_main
from semikernel.errors import NonStabilizing, StarDiverges

from util import (
    INF,
    INTERVAL_NAMES,
    SIGNATURE_NAMES,
    elements_equal,
    negative_cycle_digraph,
    oracle_closure,
    oracle_legendre,
    random_digraph,
    sample_element,
    sample_matrix,
)


def _announce(capsys, num: int, label: str, ok: bool, extra: str = ""):
    tail = f" ({extra})" if extra else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {label}{tail}"
    # step outside capture so the line is visible in a plain pytest run
    with capsys.disabled():
        print(line)


# criterion 1 -----------------------------------------------------------------

AXIOM_TRIPLES = 1000


def _axioms_hold(S, a, b, c) -> bool:
    eq = lambda x, y: elements_equal(S, x, y)
    add, mul = S.add, S.mul
    checks = [
        eq(add(add(a, b), c), add(a, add(b, c))),
        eq(add(a, b), add(b, a)),
        eq(mul(mul(a, b), c), mul(a, mul(b, c))),
        eq(mul(a, b), mul(b, a)),
        eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
        eq(mul(add(b, c), a), add(mul(b, a), mul(c, a))),
        eq(add(a, S.zero), a),
        eq(mul(a, S.one), a),
        eq(mul(S.one, a), a),
        eq(mul(a, S.zero), S.zero),
        eq(mul(S.zero, a), S.zero),
    ]
    if S.is_idempotent:
        checks.append(eq(add(a, a), a))
    return all(checks)


def test_criterion_1_semiring_axioms(capsys):
    started = time.perf_counter()
    rng = random.Random(101)
    failures = []
    for name in SIGNATURE_NAMES + INTERVAL_NAMES:
        S = sk.by_name(name)
        if name == "boolean":
            triples = [(a, b, c) for a in (False, True) for b in (False, True) for c in (False, True)]
        else:
            triples = [tuple(sample_element(S, rng) for _ in range(3)) for _ in range(AXIOM_TRIPLES)]
        for a, b, c in triples:
            if not _axioms_hold(S, a, b, c):
                failures.append((name, a, b, c))
                break
    elapsed = time.perf_counter() - started
    ok = not failures and elapsed < 5.0
    _announce(capsys, 1, "semiring axioms on all signatures", ok, f"{elapsed:.2f}s")
    assert not failures, failures
    assert elapsed < 5.0, elapsed


# criterion 2 -----------------------------------------------------------------


def test_criterion_2_dequantization_limit(capsys):
    rng = random.Random(103)
    ln2 = math.log(2.0)
    violations = 0
    for h in (1.0, 0.1, 0.01, 0.001):
        S = sk.DeformedSemiring(h)
        for _ in range(10_000):
            w1 = rng.uniform(-100.0, 100.0)
            w2 = rng.uniform(-100.0, 100.0)
            v = S.add(w1, w2)
            m = max(w1, w2)
            if not (m <= v <= m + h * ln2):
                violations += 1
    ok = violations == 0
    _announce(capsys, 2, "deformed addition squeezed between max and max + h ln 2", ok, "40000 pairs")
    assert violations == 0


# criteria 3 and 5 share instances --------------------------------------------

PROBLEMS = {
    "shortest": (sk.MIN_PLUS, "shortest"),
    "widest": (sk.MAX_MIN, "widest"),
    "reliable": (sk.MAX_TIMES, "reliable"),
    "reach": (sk.BOOLEAN, "reach"),
}


def closure_instances():
    """The 200 shared digraph instances for criteria 3 and 5 (fixed seed)."""
    rng = random.Random(107)
    return [random_digraph(rng, rng.randrange(1, 7)) for _ in range(200)]


def _graph_for(problem: str, n, edges):
    if problem == "reliable":
        return sk.Digraph(n, [(s, d, w / 16.0) for s, d, w in edges])
    return sk.Digraph(n, edges)


def _solve(problem: str, g):
    return {
        "shortest": sk.shortest_paths,
        "widest": sk.widest_paths,
        "reliable": sk.most_reliable_paths,
        "reach": sk.reachability,
    }[problem](g)


def test_criterion_3_closure_vs_enumeration(capsys):
    started = time.perf_counter()
    bad = 0
    for n, edges in closure_instances():
        for problem in PROBLEMS:
            got = _solve(problem, _graph_for(problem, n, edges)).to_lists()
            want = oracle_closure(n, edges, problem)
            if problem == "reliable":
                flat = zip(sum(got, []), sum(want, []))
                if any(abs(g - w) > 1e-12 for g, w in flat):
                    bad += 1
            elif got != want:
                bad += 1
    elapsed = time.perf_counter() - started
    ok = bad == 0 and elapsed < 30.0
    _announce(capsys, 3, "200 digraph closures match simple-path enumeration", ok, f"{elapsed:.2f}s")
    assert bad == 0
    assert elapsed < 30.0, elapsed


# criterion 4 -----------------------------------------------------------------


def test_criterion_4_field_closure_residual(capsys):
    rng = random.Random(109)
    worst = 0.0
    for _ in range(100):
        n = rng.randrange(1, 7)
        A = np.array([[rng.uniform(-0.1, 0.1) for _ in range(n)] for _ in range(n)])
        star = sk.closure_gauss_jordan(sk.Matrix(sk.REAL, A.tolist())).solution
        resid = np.abs((np.eye(n) - A) @ np.array(star.to_lists()) - np.eye(n)).max()
        worst = max(worst, resid)
    ok = worst < 1e-9
    _announce(capsys, 4, "field closure solves (I - A) X = I", ok, f"max residual {worst:.2e}")
    assert worst < 1e-9


# criterion 5 -----------------------------------------------------------------


def test_criterion_5_method_agreement(capsys):
    sweep_bound_violations = 0
    mismatches = 0
    for n, edges in closure_instances():
        for problem, (S, _) in PROBLEMS.items():
            A = sk.to_matrix(_graph_for(problem, n, edges), S)
            E = sk.identity(S, n)
            gj = sk.closure_gauss_jordan(A)
            series = sk.closure_series(A)
            jac = sk.bellman_jacobi(A, E)
            gs = sk.bellman_gauss_seidel(A, E)
            for r in (series, jac, gs):
                if not (r.solution.equals(gj.solution) and np.array_equal(r.solution.data, gj.solution.data)):
                    mismatches += 1
            if gs.iterations > jac.iterations:
                sweep_bound_violations += 1

    raised = 0
    rng = random.Random(113)
    neg_instances = [negative_cycle_digraph(rng, rng.randrange(2, 7)) for _ in range(20)]
    for n, edges in neg_instances:
        A = sk.to_matrix(sk.Digraph(n, edges), sk.MIN_PLUS)
        E = sk.identity(sk.MIN_PLUS, n)
        budget = sk.default_budget(n)
        for call in (
            lambda: sk.closure_gauss_jordan(A),
            lambda: sk.closure_series(A, budget),
            lambda: sk.bellman_jacobi(A, E, budget),
            lambda: sk.bellman_gauss_seidel(A, E, budget),
        ):
            with pytest.raises((NonStabilizing, StarDiverges)):
                call()
            raised += 1

    ok = mismatches == 0 and sweep_bound_violations == 0 and raised == 80
    _announce(capsys, 5, "series/jacobi/gauss-seidel bit-identical to elimination; divergence raises", ok)
    assert mismatches == 0
    assert sweep_bound_violations == 0
    assert raised == 80


# criterion 6 -----------------------------------------------------------------


def test_criterion_6_legendre_transform(capsys):
    xs = np.linspace(-5.0, 5.0, 10_001)
    f = sk.SampledFunction(sk.MAX_PLUS, xs, -(xs**2) / 2.0)
    xis = np.array([-1.0, -0.5, 0.0, 0.5, 1.0, 2.0])
    g = sk.legendre_transform(f, xis)
    analytic_err = max(abs(v - xi * xi / 2.0) for xi, v in zip(xis, g.vals))
    oracle_err = max(abs(v - oracle_legendre(xs, f.vals, xi)) for xi, v in zip(xis, g.vals))
    # discrete convexity: slopes of successive chords never decrease
    slopes = np.diff(g.vals) / np.diff(xis)
    convex = bool(np.all(np.diff(slopes) >= -1e-9))
    ok = analytic_err <= 1e-5 and oracle_err == 0.0 and convex
    _announce(capsys, 6, "Legendre transform of -x^2/2 equals xi^2/2", ok, f"max error {analytic_err:.2e}")
    assert analytic_err <= 1e-5
    assert oracle_err == 0.0
    assert convex


# criterion 7 -----------------------------------------------------------------


def test_criterion_7_interval_distributivity(capsys):
    rng = random.Random(127)
    equal = 0
    total = 0
    for name in ("max-plus", "min-plus", "max-min"):
        inner = sk.by_name(name)
        S = sk.interval_over(inner)
        for _ in range(1000):
            a, b, c = (sample_element(S, rng) for _ in range(3))
            total += 1
            if sk.distributivity_witness(inner, a, b, c).equal:
                equal += 1
    rep = sk.classical_distributivity_witness(
        sk.Interval(-1.0, 1.0), sk.Interval(1.0, 1.0), sk.Interval(-1.0, -1.0)
    )
    classical_ok = (
        not rep.equal
        and rep.left == sk.Interval(0.0, 0.0)
        and rep.right == sk.Interval(-2.0, 2.0)
    )
    ok = equal == total == 3000 and classical_ok
    _announce(capsys, 7, "interval lifts distribute; classical interval arithmetic does not", ok, f"{equal}/{total}")
    assert equal == total == 3000
    assert classical_ok


# criterion 8 -----------------------------------------------------------------


def test_criterion_8_systolic_equivalence(capsys):
    rng = random.Random(131)
    checked = 0
    for name in SIGNATURE_NAMES + INTERVAL_NAMES:
        S = sk.by_name(name)
        for n in range(1, 9):
            for _ in range(20):
                A = sample_matrix(S, rng, n)
                B = sample_matrix(S, rng, n)
                res = sk.simulate_matmul(A, B)
                ref = sk.mat_mul(A, B)
                assert res.cycles == 3 * n - 2, (name, n)
                assert res.product.equals(ref), (name, n)
                if S.dtype == np.float64:
                    assert np.array_equal(res.product.data, ref.data), (name, n)
                checked += 1
    ok = checked == len(SIGNATURE_NAMES + INTERVAL_NAMES) * 8 * 20
    _announce(capsys, 8, "systolic product bit-exact with mat_mul in 3n - 2 cycles", ok, f"{checked} instances")
    assert ok


# criterion 9 -----------------------------------------------------------------


def test_criterion_9_round_trip_and_error_codes(tmp_path, capsys):
    rng = random.Random(137)
    names = SIGNATURE_NAMES + INTERVAL_NAMES
    trips = 0
    for i in range(500):
        S = sk.by_name(names[i % len(names)])
        M = sample_matrix(S, rng, rng.randrange(1, 6), rng.randrange(1, 6))
        again = sk.parse_matrix_text(sk.render_matrix(M))
        assert again.semiring == S
        assert again.equals(M)
        if S.dtype == np.float64:
            assert np.array_equal(again.data, M.data)
        trips += 1

    def w(name, text):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)

    variants = {
        "ParseError": (2, ["closure", "--input", w("pe.txt", "semiring max-plus\nshape 1 2\n0\n")]),
        "CarrierMismatch": (2, ["closure", "--input", w("cm.txt", "semiring max-plus\nshape 1 1\ninf\n")]),
        "InvariantViolation": (2, ["closure", "--input", w("iv.txt", "semiring interval:max-plus\nshape 1 1\n[3,1]\n")]),
        "NotIdempotent": (1, ["closure", "--method", "series", "--input", w("ni.txt", "semiring real\nshape 1 1\n0.5\n")]),
        "StarDiverges": (1, ["closure", "--input", w("sd.txt", "semiring min-plus\nshape 1 1\n-1\n")]),
        "NonStabilizing": (1, ["closure", "--method", "series", "--input", w("ns.txt", "semiring min-plus\nshape 1 1\n-1\n")]),
        "ShapeMismatch": (1, ["closure", "--input", w("sm.txt", "semiring min-plus\nshape 1 2\n0 1\n")]),
        "SemiringMismatch": (1, ["dot", "--x", w("mx.txt", "semiring max-plus\nshape 1 1\n0\n"), "--y", w("my.txt", "semiring min-plus\nshape 1 1\n0\n")]),
        "NoPath": (1, ["paths", "--input", w("np.txt", "graph 2\n"), "--problem", "shortest", "--witness", "0", "1"]),
        "WeightOutOfCarrier": (1, ["paths", "--input", w("wo.txt", "graph 2\nedge 0 1 3\n"), "--problem", "reliable"]),
        "NegativeInput": (1, ["dequantize", "--h", "0.1", "--u", "-2"]),
        "NotMaxPlus": (1, ["integrate", "--rule", "riemann", "--input", w("nm.txt", "function min-plus\n0 1\n1 2\n")]),
        "EmptyDomain": (1, ["legendre", "--negate", "--input", w("ed.txt", "function max-plus\n0 -inf\n1 -inf\n"), "--xi-min", "0", "--xi-max", "1", "--xi-steps", "2"]),
        "EmptySubset": (1, ["integrate", "--subset", "", "--input", w("es.txt", "function max-plus\n0 1\n1 2\n")]),
        "GridMismatch": (1, ["apply-kernel", "--kernel", w("gk.txt", "kernel max-plus\nxs 0 1\nys 0 2\n0 1\n1 0\n"), "--input", w("gf.txt", "function max-plus\n0 0\n1 5\n")]),
    }
    for variant, (want_code, argv) in variants.items():
        code = cli_main(argv)
        captured = capsys.readouterr()
        assert code == want_code, (variant, code, captured.err)
        assert captured.err.startswith(variant + ":"), (variant, captured.err)

    # the remaining two documented variants have no CLI route (no subcommand
    # takes multiplicative inverses); exercised directly
    with pytest.raises(sk.NotSemifield):
        sk.MAX_MIN.inverse(1.0)
    with pytest.raises(sk.ZeroDivision):
        sk.MAX_PLUS.inverse(-INF)

    # the golden CLI example: closure of the 2-node file prints the known matrix
    f = w("golden.txt", "semiring min-plus\nshape 2 2\ninf 1\n2 inf\n")
    code = cli_main(["closure", "--input", f])
    out = capsys.readouterr().out
    assert code == 0
    assert sk.parse_matrix_text(out).to_lists() == [[0.0, 1.0], [2.0, 0.0]]

    code = cli_main(["dequantize", "--h", "0.1", "--w1", "0", "--w2", "0"])
    out = capsys.readouterr().out
    assert code == 0 and out == "0.0693147181\n"

    ok = trips == 500
    _announce(capsys, 9, "500 matrix round-trips and all error variants with exit codes", ok)
    assert ok

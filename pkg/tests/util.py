"""Shared samplers and independent oracles for the test suite.

The oracles re-derive expected values from scratch: explicit sums, simple
path enumeration, brute-force suprema. They never call the algorithms under
test. Float samples are drawn from dyadic grids so that sums and products
are exact and bit-level equality assertions are legitimate.
"""

import math
import random
from fractions import Fraction

import semikernel as sk

INF = float("inf")

SCALAR_NAMES = ["max-plus", "min-plus", "max-min", "boolean", "max-times", "real", "rational"]
SIGNATURE_NAMES = SCALAR_NAMES + ["deformed:1", "deformed:0.1"]
INTERVAL_NAMES = ["interval:max-plus", "interval:min-plus", "interval:max-min"]


# oracle scalar operations, restated independently of the library
def oracle_ops(name):
    if name == "max-plus":
        return max, lambda a, b: a + b, -INF, 0.0
    if name == "min-plus":
        return min, lambda a, b: a + b, INF, 0.0
    if name == "max-min":
        return max, min, -INF, INF
    if name == "boolean":
        return (lambda a, b: a or b), (lambda a, b: a and b), False, True
    if name == "max-times":
        return max, lambda a, b: a * b, 0.0, 1.0
    if name == "real":
        return (lambda a, b: a + b), (lambda a, b: a * b), 0.0, 1.0
    if name == "rational":
        return (lambda a, b: a + b), (lambda a, b: a * b), Fraction(0), Fraction(1)
    raise KeyError(name)


def sample_element(S, rng: random.Random):
    name = S.name
    if name.startswith("interval:"):
        a = sample_element(S.inner, rng)
        b = sample_element(S.inner, rng)
        return sk.Interval(a, b) if S.inner.leq(a, b) else sk.Interval(b, a)
    r = rng.random()
    if r < 0.08:
        return S.zero
    if r < 0.16:
        return S.one
    if name == "boolean":
        return rng.random() < 0.5
    if name == "max-times":
        return rng.randrange(0, 33) / 16.0
    if name == "rational":
        return Fraction(rng.randrange(-12, 13), rng.randrange(1, 9))
    if name.startswith("deformed"):
        # 4 decimals keeps tokens within the 9-significant-digit rendering
        return round(rng.uniform(-3.0, 3.0), 4)
    return rng.randrange(-24, 25) / 8.0


def elements_equal(S, x, y) -> bool:
    if S.name.startswith("deformed"):
        if x == y:
            return True
        return math.isclose(x, y, rel_tol=1e-12, abs_tol=1e-12)
    return x == y


def sample_matrix(S, rng: random.Random, n: int, m=None) -> "sk.Matrix":
    m = n if m is None else m
    return sk.Matrix(S, [[sample_element(S, rng) for _ in range(m)] for _ in range(n)])


def random_digraph(rng: random.Random, n: int, p: float = 0.4):
    """Simple random digraph with integer weights 0..9 and no parallel edges."""
    edges = []
    for s in range(n):
        for d in range(n):
            if s != d and rng.random() < p:
                edges.append((s, d, float(rng.randrange(0, 10))))
    return n, edges


def negative_cycle_digraph(rng: random.Random, n: int):
    """Random digraph guaranteed to contain a strictly negative cycle."""
    _, edges = random_digraph(rng, n)
    k = rng.randrange(2, n + 1)
    cycle = rng.sample(range(n), k)
    edges = [e for e in edges if (e[0], e[1]) not in {(cycle[i], cycle[(i + 1) % k]) for i in range(k)}]
    total = 0
    for i in range(k):
        w = rng.randrange(-3, 4)
        if i == k - 1 and total + w >= 0:
            w = -(total + 1)
        total += w
        edges.append((cycle[i], cycle[(i + 1) % k], float(w)))
    return n, edges


def problem_weight(problem: str, w: float):
    if problem == "reliable":
        # integers 0..9 scaled by a power of two: products stay exact in floats
        return w / 16.0
    if problem == "reach":
        return True
    return w


_PROBLEM_OPS = {
    "shortest": ("min-plus", "shortest"),
    "widest": ("max-min", "widest"),
    "reliable": ("max-times", "reliable"),
    "reach": ("boolean", "reach"),
}


def enumerate_simple_paths(n, edge_pairs):
    """Yields (src, dst, node tuple) for every simple path of >= 1 edge."""
    succ = [[] for _ in range(n)]
    for s, d in edge_pairs:
        succ[s].append(d)
    out = []

    def dfs(start, node, visited, trail):
        for d in succ[node]:
            if d in visited:
                continue
            out.append((start, d, trail + (d,)))
            dfs(start, d, visited | {d}, trail + (d,))

    for s in range(n):
        dfs(s, s, {s}, (s,))
    return out


def oracle_closure(n, edges, problem: str):
    """Closure of the path problem by exhaustive simple-path enumeration."""
    name, _ = _PROBLEM_OPS[problem]
    add, mul, zero, one = oracle_ops(name)
    w = {(s, d): problem_weight(problem, wt) for s, d, wt in edges}
    table = [[zero] * n for _ in range(n)]
    for i in range(n):
        table[i][i] = one
    for s, d, nodes in enumerate_simple_paths(n, list(w)):
        val = one
        for a, b in zip(nodes, nodes[1:]):
            val = mul(val, w[(a, b)])
        table[s][d] = add(table[s][d], val)
    return table


def oracle_matmul(a, b, name: str):
    add, mul, zero, _ = oracle_ops(name)
    n, m, p = len(a), len(b), len(b[0])
    out = [[zero] * p for _ in range(n)]
    for i in range(n):
        for j in range(p):
            acc = zero
            for k in range(m):
                acc = add(acc, mul(a[i][k], b[k][j]))
            out[i][j] = acc
    return out


def oracle_legendre(xs, vals, xi: float) -> float:
    return max(xi * x + v for x, v in zip(xs, vals))

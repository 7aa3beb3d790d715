"""Graph-problem front-end: the semiring is the problem.

Shortest path, bottleneck (widest) path, most-reliable path, and reachability
are all the same closure computation over different signatures. A witness
path can be reconstructed from pivot tracking during the elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from .errors import InvariantViolation, NoPath, NotIdempotent
from .linalg import Matrix, _full
from .semiring import BOOLEAN, MAX_MIN, MAX_TIMES, MIN_PLUS, Semiring
from .solvers import closure_gauss_jordan


@dataclass(frozen=True)
class Digraph:
    """Directed graph on nodes 0..n-1 with real edge weights; parallel edges allowed."""

    n: int
    edges: Tuple[Tuple[int, int, float], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvariantViolation(f"graphs need at least one node, got n={self.n}")
        object.__setattr__(self, "edges", tuple((int(s), int(d), float(w)) for s, d, w in self.edges))
        for s, d, _w in self.edges:
            if not (0 <= s < self.n and 0 <= d < self.n):
                raise InvariantViolation(f"edge ({s}, {d}) outside node range 0..{self.n - 1}")


@dataclass(frozen=True)
class PathWitness:
    """A concrete path and its weight, re-evaluated edge by edge."""

    nodes: Tuple[int, ...]
    value: object


def to_matrix(g: Digraph, S: Semiring) -> Matrix:
    """Adjacency matrix over S; parallel edges combine by the semiring add."""
    if not S.is_idempotent:
        raise NotIdempotent(f"graph problems need an idempotent semiring, got {S.name}")
    data = _full(S, (g.n, g.n), S.zero)
    for s, d, w in g.edges:
        data[s, d] = S.add(data[s, d], S.from_weight(w))
    return Matrix._wrap(S, data)


def shortest_paths(g: Digraph) -> Matrix:
    return closure_gauss_jordan(to_matrix(g, MIN_PLUS)).solution


def widest_paths(g: Digraph) -> Matrix:
    return closure_gauss_jordan(to_matrix(g, MAX_MIN)).solution


def most_reliable_paths(g: Digraph) -> Matrix:
    return closure_gauss_jordan(to_matrix(g, MAX_TIMES)).solution


def reachability(g: Digraph) -> Matrix:
    return closure_gauss_jordan(to_matrix(g, BOOLEAN)).solution


def _closure_with_via(S: Semiring, a: np.ndarray):
    """Elimination closure recording, per entry, the last pivot that strictly improved it."""
    m = a.copy()
    n = m.shape[0]
    via = np.full((n, n), -1, dtype=np.int64)
    for k in range(n):
        s = S.star(m[k, k])
        rowk = m[k, :].copy()
        colk = m[:, k].copy()
        for i in range(n):
            cis = S.mul(colk[i], s)
            for j in range(n):
                upd = S.add(m[i, j], S.mul(cis, rowk[j]))
                if not S.eq(upd, m[i, j]):
                    m[i, j] = upd
                    via[i, j] = k
    for i in range(n):
        m[i, i] = S.add(m[i, i], S.one)
    return m, via


def extract_path(g: Digraph, S: Semiring, src: int, dst: int) -> PathWitness:
    """A path whose weight equals the closure entry (src, dst); ties prefer small pivots."""
    if not S.is_idempotent:
        raise NotIdempotent(f"path extraction needs an idempotent semiring, got {S.name}")
    if not (0 <= src < g.n and 0 <= dst < g.n):
        raise InvariantViolation(f"endpoints ({src}, {dst}) outside node range 0..{g.n - 1}")
    M0 = to_matrix(g, S)
    if src == dst:
        return PathWitness((src,), S.one)
    closure, via = _closure_with_via(S, M0.data)
    if S.eq(closure[src, dst], S.zero):
        raise NoPath(f"no path from {src} to {dst}")

    nodes = [src]
    budget = g.n * g.n + 1

    def expand(i, j):
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise InvariantViolation("path reconstruction did not terminate")
        k = int(via[i, j])
        if k < 0:
            if S.eq(M0.data[i, j], S.zero):
                raise InvariantViolation(f"reconstruction lost the edge ({i}, {j})")
            nodes.append(j)
            return
        expand(i, k)
        expand(k, j)

    expand(src, dst)
    value = S.one
    for u, v in zip(nodes, nodes[1:]):
        value = S.mul(value, M0.data[u, v])
    if isinstance(value, np.generic):
        value = value.item()
    return PathWitness(tuple(nodes), value)

"""Universal solvers: matrix closure and the generalized equation X = AX + B.

One elimination routine serves every signature: over idempotent semirings the
closure is the supremum of path weights, over fields the same sweep computes
(I - A)^-1. Iterative solvers (series, Jacobi, Gauss-Seidel) are restricted
to idempotent signatures, where exact stabilization is detectable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .errors import NonStabilizing, NotIdempotent, ShapeMismatch, StarDiverges
from .linalg import Matrix, _decode, _encode, _require_same_semiring, identity, mat_add, mat_mul
from .semiring import Semiring


@dataclass(frozen=True)
class SolveReport:
    """Solver outcome: the solution plus how it was reached."""

    solution: Matrix
    method: str
    iterations: int
    stabilized: bool
    residual_ok: bool


def default_budget(n: int) -> int:
    # one detection step past the n-1 relaxations that suffice without bad cycles
    return 2 * n + 1


def _require_square(A: Matrix):
    if A.rows != A.cols:
        raise ShapeMismatch(f"square matrix required, got {A.shape}")


def _matrices_close(S: Semiring, x: np.ndarray, y: np.ndarray) -> bool:
    if S.name == "real":
        return x.shape == y.shape and bool(np.max(np.abs(x - y)) <= 1e-9)
    return S.array_eq(x, y)


def verify_closure(A: Matrix, X: Matrix) -> bool:
    """Check X = A*X + E, the defining equation of the closure."""
    E = identity(A.semiring, A.rows)
    lhs = mat_add(mat_mul(A, X), E)
    return _matrices_close(A.semiring, lhs.data, X.data)


def verify_bellman(A: Matrix, B: Matrix, X: Matrix) -> bool:
    """Check X = A*X + B exactly on exact carriers, within 1e-9 on real ones."""
    _require_same_semiring(A, B)
    _require_same_semiring(A, X)
    _require_square(A)
    if A.cols != B.rows or B.shape != X.shape:
        raise ShapeMismatch(f"A {A.shape}, B {B.shape}, X {X.shape} do not conform")
    lhs = mat_add(mat_mul(A, X), B)
    return _matrices_close(A.semiring, lhs.data, X.data)


def _closure_generic(S: Semiring, a: np.ndarray) -> np.ndarray:
    m = a.copy()
    n = m.shape[0]
    analytic = not S.is_idempotent
    for k in range(n):
        try:
            s = S.star(m[k, k], analytic=analytic)
        except StarDiverges as exc:
            raise StarDiverges(f"elimination pivot {k}: {exc}") from exc
        rowk = m[k, :].copy()
        colk = m[:, k].copy()
        for i in range(n):
            cis = S.mul(colk[i], s)
            for j in range(n):
                m[i, j] = S.add(m[i, j], S.mul(cis, rowk[j]))
    for i in range(n):
        m[i, i] = S.add(m[i, i], S.one)
    return m


def closure_gauss_jordan(A: Matrix) -> SolveReport:
    """A* = E + A + A^2 + ... by in-place elimination over any signature."""
    _require_square(A)
    S = A.semiring
    spec = S.kernel_spec
    if spec is not None:
        m, ok, k = kernels.closure(_encode(S, A.data), spec.add_op, spec.mul_op, spec.one)
        if not ok:
            raise StarDiverges(f"elimination pivot {k}: star of {S.format_token(m[k, k].item())} diverges")
        sol = Matrix._wrap(S, _decode(S, m))
    else:
        sol = Matrix._wrap(S, _closure_generic(S, A.data))
    ok = verify_closure(A, sol)
    return SolveReport(sol, "gauss-jordan", A.rows, ok, ok)


def closure_series(A: Matrix, max_terms: Optional[int] = None) -> SolveReport:
    """Partial sums P_k = E + A + ... + A^k until they stop changing."""
    _require_square(A)
    S = A.semiring
    if not S.is_idempotent:
        raise NotIdempotent(f"series closure needs an idempotent semiring, got {S.name}")
    n = A.rows
    if max_terms is None:
        max_terms = default_budget(n)
    E = identity(S, n)
    prev = E
    for k in range(1, max_terms + 1):
        cur = mat_add(E, mat_mul(A, prev))
        if cur.equals(prev):
            ok = verify_closure(A, cur)
            return SolveReport(cur, "series", k - 1, ok, ok)
        prev = cur
    raise NonStabilizing(f"series closure did not stabilize within {max_terms} terms")


def _check_bellman_inputs(A: Matrix, B: Matrix):
    _require_same_semiring(A, B)
    _require_square(A)
    if A.cols != B.rows:
        raise ShapeMismatch(f"A {A.shape} against B {B.shape}")
    if not A.semiring.is_idempotent:
        raise NotIdempotent(f"iterative solvers need an idempotent semiring, got {A.semiring.name}")


def bellman_jacobi(A: Matrix, B: Matrix, max_iter: Optional[int] = None) -> SolveReport:
    """Iterate X <- A*X + B from X = B; returns the least solution A* B."""
    _check_bellman_inputs(A, B)
    if max_iter is None:
        max_iter = default_budget(A.rows)
    X = B
    for k in range(1, max_iter + 1):
        X_new = mat_add(mat_mul(A, X), B)
        if X_new.equals(X):
            ok = verify_bellman(A, B, X_new)
            return SolveReport(X_new, "jacobi", k, ok, ok)
        X = X_new
    raise NonStabilizing(f"jacobi did not stabilize within {max_iter} iterations")


def bellman_gauss_seidel(A: Matrix, B: Matrix, max_iter: Optional[int] = None) -> SolveReport:
    """Same fixed point as bellman_jacobi; each sweep reuses rows already updated."""
    _check_bellman_inputs(A, B)
    S = A.semiring
    n, m = B.rows, B.cols
    if max_iter is None:
        max_iter = default_budget(n)
    X = B.data.copy()
    a = A.data
    b = B.data
    row = np.empty(m, dtype=S.dtype)
    for sweep in range(1, max_iter + 1):
        X_old = X.copy()
        for i in range(n):
            for c in range(m):
                acc = S.zero
                for j in range(n):
                    acc = S.add(acc, S.mul(a[i, j], X[j, c]))
                row[c] = S.add(acc, b[i, c])
            X[i, :] = row
        if S.array_eq(X, X_old):
            sol = Matrix._wrap(S, X)
            ok = verify_bellman(A, B, sol)
            return SolveReport(sol, "gauss-seidel", sweep, ok, ok)
    raise NonStabilizing(f"gauss-seidel did not stabilize within {max_iter} sweeps")

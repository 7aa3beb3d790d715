"""Pure-numpy float64 kernels.

Each loop accumulates in ascending k, entrywise identical to the scalar
triple loop, so results are bit-identical to the jitted backend.
"""

from __future__ import annotations

import numpy as np

ADD_MAX, ADD_MIN, ADD_SUM = 0, 1, 2
MUL_PLUS, MUL_MIN, MUL_TIMES = 0, 1, 2


def _add(x, y, op):
    if op == ADD_MAX:
        return np.where(y > x, y, x)
    if op == ADD_MIN:
        return np.where(y < x, y, x)
    return x + y


def _mul(x, y, op):
    if op == MUL_PLUS:
        return x + y
    if op == MUL_MIN:
        return np.where(x < y, x, y)
    return x * y


def matmul(a: np.ndarray, b: np.ndarray, add_op: int, mul_op: int, zero: float) -> np.ndarray:
    n, m = a.shape
    p = b.shape[1]
    out = np.full((n, p), zero)
    for k in range(m):
        t = _mul(a[:, k : k + 1], b[k : k + 1, :], mul_op)
        out = _add(out, t, add_op)
    return out


def closure(a: np.ndarray, add_op: int, mul_op: int, one: float):
    """Elimination sweep for the matrix closure; returns (matrix, ok, bad_pivot)."""
    m = a.copy()
    n = m.shape[0]
    for k in range(n):
        akk = m[k, k]
        if add_op == ADD_MAX:
            if not akk <= one:
                return m, False, k
            s = one
        elif add_op == ADD_MIN:
            if not akk >= one:
                return m, False, k
            s = one
        else:
            if akk == 1.0:
                return m, False, k
            s = 1.0 / (1.0 - akk)
        rowk = m[k, :].copy()
        colk = m[:, k].copy()
        cis = _mul(colk, s, mul_op)
        t = _mul(cis[:, None], rowk[None, :], mul_op)
        m = _add(m, t, add_op)
    idx = np.arange(n)
    m[idx, idx] = _add(m[idx, idx], one, add_op)
    return m, True, -1


def legendre(xis: np.ndarray, xs: np.ndarray, vals: np.ndarray) -> np.ndarray:
    """max over x of (xi*x + vals(x)) for each xi; plain max-plus matrix action."""
    k = xis[:, None] * xs[None, :]
    return np.max(k + vals[None, :], axis=1)

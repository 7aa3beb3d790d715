"""Jitted float64 kernels; bit-compatible with the numpy backend.

The scalar update order matches _numpy exactly: ascending-k accumulation,
products associated as (col * s) * row. Opcode constants are inlined literals
so the jit can fold the branches.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def matmul(a, b, add_op, mul_op, zero):
    n, m = a.shape
    p = b.shape[1]
    out = np.empty((n, p))
    for i in range(n):
        for j in range(p):
            acc = zero
            for k in range(m):
                if mul_op == 0:
                    t = a[i, k] + b[k, j]
                elif mul_op == 1:
                    t = a[i, k] if a[i, k] < b[k, j] else b[k, j]
                else:
                    t = a[i, k] * b[k, j]
                if add_op == 0:
                    acc = t if t > acc else acc
                elif add_op == 1:
                    acc = t if t < acc else acc
                else:
                    acc = acc + t
            out[i, j] = acc
    return out


@njit(cache=True)
def closure(a, add_op, mul_op, one):
    m = a.copy()
    n = m.shape[0]
    rowk = np.empty(n)
    colk = np.empty(n)
    for k in range(n):
        akk = m[k, k]
        if add_op == 0:
            if not akk <= one:
                return m, False, k
            s = one
        elif add_op == 1:
            if not akk >= one:
                return m, False, k
            s = one
        else:
            if akk == 1.0:
                return m, False, k
            s = 1.0 / (1.0 - akk)
        for i in range(n):
            rowk[i] = m[k, i]
            colk[i] = m[i, k]
        for i in range(n):
            if mul_op == 0:
                cis = colk[i] + s
            elif mul_op == 1:
                cis = colk[i] if colk[i] < s else s
            else:
                cis = colk[i] * s
            for j in range(n):
                if mul_op == 0:
                    t = cis + rowk[j]
                elif mul_op == 1:
                    t = cis if cis < rowk[j] else rowk[j]
                else:
                    t = cis * rowk[j]
                if add_op == 0:
                    if t > m[i, j]:
                        m[i, j] = t
                elif add_op == 1:
                    if t < m[i, j]:
                        m[i, j] = t
                else:
                    m[i, j] = m[i, j] + t
    for i in range(n):
        d = m[i, i]
        if add_op == 0:
            if one > d:
                m[i, i] = one
        elif add_op == 1:
            if one < d:
                m[i, i] = one
        else:
            m[i, i] = d + one
    return m, True, -1


@njit(cache=True)
def legendre(xis, xs, vals):
    nk = xis.shape[0]
    nx = xs.shape[0]
    out = np.empty(nk)
    for i in range(nk):
        acc = -np.inf
        for j in range(nx):
            t = xis[i] * xs[j] + vals[j]
            if t > acc:
                acc = t
        out[i] = acc
    return out

"""Dense matrices and vectors over one semiring signature.

Matrices are immutable after construction. Products accumulate in ascending
inner index with a fixed association, so float results are deterministic and
bit-identical across the kernel backends and the generic scalar path.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import kernels
from .errors import SemiringMismatch, ShapeMismatch
from .semiring import ADD_MAX, ADD_MIN, Semiring


def _encode(S: Semiring, arr: np.ndarray) -> np.ndarray:
    # always a fresh writable C array: keeps the jit at one compiled signature
    # (boolean matrices run on the float kernels as 0.0/1.0 with max/min opcodes)
    return np.array(arr, dtype=np.float64, order="C")


def _decode(S: Semiring, arr: np.ndarray) -> np.ndarray:
    if S.dtype == np.dtype(bool):
        return arr > 0.5
    return arr


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr


class Matrix:
    """Rectangular array of carrier elements over one signature."""

    __slots__ = ("semiring", "data")

    def __init__(self, semiring: Semiring, rows: Iterable[Iterable]):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ShapeMismatch("matrices need at least one row and one column")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ShapeMismatch("ragged rows in matrix constructor")
        data = np.empty((len(rows), cols), dtype=semiring.dtype)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                data[i, j] = semiring.canonical(x)
        self.semiring = semiring
        self.data = _freeze(data)

    @classmethod
    def _wrap(cls, semiring: Semiring, data: np.ndarray) -> "Matrix":
        m = cls.__new__(cls)
        m.semiring = semiring
        m.data = _freeze(data)
        return m

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def entry(self, i: int, j: int):
        v = self.data[i, j]
        return v.item() if isinstance(v, np.generic) else v

    def to_lists(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def equals(self, other: "Matrix") -> bool:
        return self.semiring == other.semiring and self.semiring.array_eq(self.data, other.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self):
        return f"<{self.rows}x{self.cols} matrix over {self.semiring.name}>"


class Vector:
    """Element of the free semimodule S^n."""

    __slots__ = ("semiring", "data")

    def __init__(self, semiring: Semiring, values: Iterable):
        values = list(values)
        if not values:
            raise ShapeMismatch("vectors need at least one entry")
        data = np.empty(len(values), dtype=semiring.dtype)
        for i, x in enumerate(values):
            data[i] = semiring.canonical(x)
        self.semiring = semiring
        self.data = _freeze(data)

    @classmethod
    def _wrap(cls, semiring: Semiring, data: np.ndarray) -> "Vector":
        v = cls.__new__(cls)
        v.semiring = semiring
        v.data = _freeze(data)
        return v

    def __len__(self):
        return self.data.shape[0]

    def entry(self, i: int):
        v = self.data[i]
        return v.item() if isinstance(v, np.generic) else v

    def to_list(self):
        return [self.entry(i) for i in range(len(self))]

    def equals(self, other: "Vector") -> bool:
        return self.semiring == other.semiring and self.semiring.array_eq(self.data, other.data)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self):
        return f"<{len(self)}-vector over {self.semiring.name}>"


def _require_same_semiring(a, b):
    if a.semiring != b.semiring:
        raise SemiringMismatch(f"{a.semiring.name} vs {b.semiring.name}")


def _full(S: Semiring, shape, value) -> np.ndarray:
    out = np.empty(shape, dtype=S.dtype)
    if S.dtype == np.dtype(object):
        flat = out.ravel()
        for i in range(flat.size):
            flat[i] = value
    else:
        out[...] = value
    return out


def _elementwise(S: Semiring, f, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    out = np.empty(x.shape, dtype=S.dtype)
    fo, fx, fy = out.ravel(), x.ravel(), y.ravel()
    for i in range(fx.size):
        fo[i] = f(fx[i], fy[i])
    return out


def _add_arrays(S: Semiring, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if S.dtype == np.dtype(bool):
        return np.logical_or(x, y)
    spec = S.kernel_spec
    if spec is not None and S.dtype == np.dtype(np.float64):
        if spec.add_op == ADD_MAX:
            return np.where(y > x, y, x)
        if spec.add_op == ADD_MIN:
            return np.where(y < x, y, x)
        return x + y
    return _elementwise(S, S.add, x, y)


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    _require_same_semiring(A, B)
    if A.shape != B.shape:
        raise ShapeMismatch(f"{A.shape} vs {B.shape}")
    return Matrix._wrap(A.semiring, _add_arrays(A.semiring, A.data, B.data))


def _matmul_generic(S: Semiring, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n, m = a.shape
    p = b.shape[1]
    out = np.empty((n, p), dtype=S.dtype)
    add, mul, zero = S.add, S.mul, S.zero
    for i in range(n):
        for j in range(p):
            acc = zero
            for k in range(m):
                acc = add(acc, mul(a[i, k], b[k, j]))
            out[i, j] = acc
    return out


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _require_same_semiring(A, B)
    if A.cols != B.rows:
        raise ShapeMismatch(f"inner dimensions differ: {A.shape} vs {B.shape}")
    S = A.semiring
    spec = S.kernel_spec
    if spec is not None:
        out = kernels.matmul(_encode(S, A.data), _encode(S, B.data), spec.add_op, spec.mul_op, spec.zero)
        return Matrix._wrap(S, _decode(S, out))
    return Matrix._wrap(S, _matmul_generic(S, A.data, B.data))


def mat_vec(A: Matrix, v: Vector) -> Vector:
    _require_same_semiring(A, v)
    if A.cols != len(v):
        raise ShapeMismatch(f"matrix {A.shape} against vector of length {len(v)}")
    col = Matrix._wrap(A.semiring, v.data.reshape(-1, 1))
    out = mat_mul(A, col)
    return Vector._wrap(A.semiring, out.data.reshape(-1).copy())


def identity(S: Semiring, n: int) -> Matrix:
    if n < 1:
        raise ShapeMismatch("identity needs n >= 1")
    data = _full(S, (n, n), S.zero)
    for i in range(n):
        data[i, i] = S.one
    return Matrix._wrap(S, data)


def zero_matrix(S: Semiring, n: int, m: int) -> Matrix:
    if n < 1 or m < 1:
        raise ShapeMismatch("zero_matrix needs n, m >= 1")
    return Matrix._wrap(S, _full(S, (n, m), S.zero))


def dot(x: Vector, y: Vector):
    _require_same_semiring(x, y)
    if len(x) != len(y):
        raise ShapeMismatch(f"vector lengths differ: {len(x)} vs {len(y)}")
    S = x.semiring
    acc = S.zero
    for i in range(len(x)):
        acc = S.add(acc, S.mul(x.data[i], y.data[i]))
    return acc.item() if isinstance(acc, np.generic) else acc


def scale(lam, v: Vector) -> Vector:
    S = v.semiring
    lam = S.canonical(lam)
    out = np.empty(len(v), dtype=S.dtype)
    for i in range(len(v)):
        out[i] = S.mul(lam, v.data[i])
    return Vector._wrap(S, out)


def mat_pow(A: Matrix, k: int) -> Matrix:
    if A.rows != A.cols:
        raise ShapeMismatch("powers need a square matrix")
    if k < 0:
        raise ShapeMismatch("powers need k >= 0")
    result = identity(A.semiring, A.rows)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result

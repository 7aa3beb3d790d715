"""Finite models of idempotent analysis.

Functions are finite samples on explicit real grids; integration is the
semiring sum of sample values (a supremum for max-plus), integral operators
are matrix actions on sample vectors, and the Legendre transform is the
integral operator with kernel xi*x.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import (
    EmptyDomain,
    EmptySubset,
    GridMismatch,
    InvariantViolation,
    NotIdempotent,
    NotMaxPlus,
    SemiringMismatch,
)
from .linalg import Matrix, Vector, dot, mat_vec
from .semiring import MAX_PLUS, Semiring


def _check_grid(xs) -> np.ndarray:
    xs = np.asarray([float(x) for x in xs], dtype=np.float64)
    if xs.size == 0:
        raise EmptyDomain("empty sample grid")
    if not np.all(np.isfinite(xs)):
        raise InvariantViolation("grid points must be finite reals")
    if xs.size > 1 and not np.all(np.diff(xs) > 0):
        raise InvariantViolation("grid points must be strictly increasing")
    xs.flags.writeable = False
    return xs


def _canonical_vals(S: Semiring, vals) -> np.ndarray:
    vals = list(vals)
    out = np.empty(len(vals), dtype=S.dtype)
    for i, v in enumerate(vals):
        out[i] = S.canonical(v)
    out.flags.writeable = False
    return out


class SampledFunction:
    """Finite sample of a map X -> S on a strictly increasing real grid."""

    __slots__ = ("semiring", "xs", "vals")

    def __init__(self, semiring: Semiring, xs, vals):
        if not semiring.is_idempotent:
            raise NotIdempotent(f"sampled functions need an idempotent semiring, got {semiring.name}")
        self.semiring = semiring
        self.xs = _check_grid(xs)
        self.vals = _canonical_vals(semiring, vals)
        if self.vals.size != self.xs.size:
            raise InvariantViolation(f"{self.xs.size} grid points against {self.vals.size} values")

    @classmethod
    def _wrap(cls, semiring: Semiring, xs: np.ndarray, vals: np.ndarray) -> "SampledFunction":
        f = cls.__new__(cls)
        f.semiring = semiring
        f.xs = xs
        vals.flags.writeable = False
        f.vals = vals
        return f

    def __len__(self):
        return self.xs.size

    def value(self, i: int):
        v = self.vals[i]
        return v.item() if isinstance(v, np.generic) else v


class SampledKernel:
    """Finite sample of a two-argument kernel K(x, y) on a grid product."""

    __slots__ = ("semiring", "xs", "ys", "vals")

    def __init__(self, semiring: Semiring, xs, ys, vals):
        if not semiring.is_idempotent:
            raise NotIdempotent(f"sampled kernels need an idempotent semiring, got {semiring.name}")
        self.semiring = semiring
        self.xs = _check_grid(xs)
        self.ys = _check_grid(ys)
        rows = [list(r) for r in vals]
        if len(rows) != self.xs.size or any(len(r) != self.ys.size for r in rows):
            raise InvariantViolation(
                f"kernel values must form a {self.xs.size} x {self.ys.size} table"
            )
        data = np.empty((self.xs.size, self.ys.size), dtype=semiring.dtype)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                data[i, j] = semiring.canonical(v)
        data.flags.writeable = False
        self.vals = data


def idempotent_integral(f: SampledFunction):
    """Semiring sum of all sample values; the sup of the samples for max-plus."""
    if len(f) == 0:
        raise EmptyDomain("cannot integrate an empty sample")
    S = f.semiring
    acc = S.zero
    for v in f.vals:
        acc = S.add(acc, v)
    return acc.item() if isinstance(acc, np.generic) else acc


def riemann_sum(f: SampledFunction):
    """max over i >= 1 of vals[i] + (xs[i] - xs[i-1]); max-plus only."""
    if f.semiring != MAX_PLUS:
        raise NotMaxPlus(f"riemann_sum is defined over max-plus, got {f.semiring.name}")
    if len(f) < 2:
        raise EmptyDomain("riemann_sum needs at least two samples")
    acc = -np.inf
    for i in range(1, len(f)):
        t = f.vals[i] + (f.xs[i] - f.xs[i - 1])
        if t > acc:
            acc = t
    return float(acc)


def idempotent_measure(f: SampledFunction, indices):
    """Semiring sum of the values at a subset of grid indices."""
    idx = sorted({int(i) for i in indices})
    if not idx:
        raise EmptySubset("measure of the empty index set is undefined")
    if idx[0] < 0 or idx[-1] >= len(f):
        raise InvariantViolation(f"indices {idx} outside grid range 0..{len(f) - 1}")
    S = f.semiring
    acc = S.zero
    for i in idx:
        acc = S.add(acc, f.vals[i])
    return acc.item() if isinstance(acc, np.generic) else acc


def scalar_product(f: SampledFunction, g: SampledFunction):
    """Integral of f(x) * g(x); coincides with the vector dot on the sample values."""
    if f.semiring != g.semiring:
        raise SemiringMismatch(f"{f.semiring.name} vs {g.semiring.name}")
    if not np.array_equal(f.xs, g.xs):
        raise GridMismatch("scalar_product needs identical grids")
    return dot(Vector._wrap(f.semiring, f.vals), Vector._wrap(g.semiring, g.vals))


def apply_operator(K: SampledKernel, f: SampledFunction) -> SampledFunction:
    """(K f)(x) = semiring sum over y of K(x, y) * f(y); linear over the semimodule."""
    if K.semiring != f.semiring:
        raise SemiringMismatch(f"{K.semiring.name} vs {f.semiring.name}")
    if not np.array_equal(K.ys, f.xs):
        raise GridMismatch("kernel column grid must equal the function grid")
    out = mat_vec(Matrix._wrap(K.semiring, K.vals), Vector._wrap(f.semiring, f.vals))
    return SampledFunction._wrap(K.semiring, K.xs, out.data.copy())


def legendre_transform(f: SampledFunction, xis, negate: bool = False) -> SampledFunction:
    """For each xi: max over samples of xi*x + f(x) (or xi*x - f(x) with negate).

    With negate set, samples where f is -inf carry no support and are skipped;
    if none remain the transform has an empty domain.
    """
    if f.semiring != MAX_PLUS:
        raise NotMaxPlus(f"legendre_transform is defined over max-plus, got {f.semiring.name}")
    xis = _check_grid(xis)
    xs = f.xs
    vals = f.vals
    if negate:
        finite = np.isfinite(vals)
        if not np.any(finite):
            raise EmptyDomain("negated transform of a function with no finite samples")
        xs = xs[finite]
        vals = -vals[finite]
    out = kernels.legendre(
        np.array(xis, dtype=np.float64),
        np.array(xs, dtype=np.float64),
        np.array(vals, dtype=np.float64),
    )
    return SampledFunction._wrap(MAX_PLUS, xis, out)

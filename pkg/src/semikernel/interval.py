"""Interval lift of idempotent semirings, plus a classical-arithmetic contrast demo.

Both operations act endpointwise, which is sound because add and mul of every
idempotent built-in are monotone in the standard partial order. Unlike
classical real-interval arithmetic, the lifted operations keep distributivity
exactly; distributivity_witness exposes the contrast.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import CarrierMismatch, InvariantViolation, NotIdempotent, StarDiverges
from .semiring import Semiring


class Interval(NamedTuple):
    """Order interval [lo, hi] of an idempotent carrier, lo <= hi in the standard order."""

    lo: object
    hi: object


class IntervalSemiring(Semiring):
    """Endpointwise lift of an idempotent scalar semiring to order intervals."""

    is_semifield = False
    dtype = np.dtype(object)
    kernel_spec = None

    def __init__(self, inner: Semiring):
        if isinstance(inner, IntervalSemiring):
            raise InvariantViolation("interval semirings cannot be nested")
        if not inner.is_idempotent:
            raise NotIdempotent(f"interval lift needs an idempotent inner semiring, got {inner.name}")
        self.inner = inner
        self.name = f"interval:{inner.name}"
        self.zero = Interval(inner.zero, inner.zero)
        self.one = Interval(inner.one, inner.one)

    def add(self, a, b):
        return Interval(self.inner.add(a.lo, b.lo), self.inner.add(a.hi, b.hi))

    def mul(self, a, b):
        return Interval(self.inner.mul(a.lo, b.lo), self.inner.mul(a.hi, b.hi))

    def eq(self, a, b) -> bool:
        return self.inner.eq(a.lo, b.lo) and self.inner.eq(a.hi, b.hi)

    def canonical(self, x):
        if not isinstance(x, Interval):
            if isinstance(x, tuple) and len(x) == 2:
                x = Interval(*x)
            else:
                raise CarrierMismatch(f"{x!r} is not an interval")
        lo = self.inner.canonical(x.lo)
        hi = self.inner.canonical(x.hi)
        if not self.inner.leq(lo, hi):
            raise InvariantViolation(
                f"interval [{self.inner.format_token(lo)},{self.inner.format_token(hi)}]"
                f" violates lo <= hi in the {self.inner.name} order"
            )
        return Interval(lo, hi)

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        try:
            return Interval(self.inner.star(a.lo), self.inner.star(a.hi))
        except StarDiverges as exc:
            raise StarDiverges(f"{self.name} star of {self.format_token(a)} diverges") from exc

    def from_weight(self, w: float):
        v = self.inner.from_weight(w)
        return Interval(v, v)

    def parse_token(self, tok: str):
        if tok == "zero":
            return self.zero
        if tok == "one":
            return self.one
        if not (tok.startswith("[") and tok.endswith("]")) or tok.count(",") != 1:
            raise CarrierMismatch(f"{tok!r} is not an interval token (expected [lo,hi])")
        lo_tok, hi_tok = tok[1:-1].split(",")
        lo = self.inner.parse_token(lo_tok.strip())
        hi = self.inner.parse_token(hi_tok.strip())
        return self.canonical(Interval(lo, hi))

    def format_token(self, x) -> str:
        return f"[{self.inner.format_token(x.lo)},{self.inner.format_token(x.hi)}]"


@lru_cache(maxsize=None)
def _interval_cache(inner_name: str) -> IntervalSemiring:
    from .semiring import by_name

    return IntervalSemiring(by_name(inner_name))


def interval_over(inner: Semiring) -> IntervalSemiring:
    """The (cached) interval semiring over a given idempotent scalar semiring."""
    if isinstance(inner, IntervalSemiring):
        raise InvariantViolation("interval semirings cannot be nested")
    if not inner.is_idempotent:
        raise NotIdempotent(f"interval lift needs an idempotent inner semiring, got {inner.name}")
    return _interval_cache(inner.name)


def interval_add(inner: Semiring, a: Interval, b: Interval) -> Interval:
    S = interval_over(inner)
    return S.add(S.canonical(a), S.canonical(b))


def interval_mul(inner: Semiring, a: Interval, b: Interval) -> Interval:
    S = interval_over(inner)
    return S.mul(S.canonical(a), S.canonical(b))


@dataclass(frozen=True)
class DistributivityReport:
    """Both sides of a*(b+c) = a*b + a*c and whether they agree."""

    left: Interval
    right: Interval
    equal: bool


def distributivity_witness(inner: Semiring, a: Interval, b: Interval, c: Interval) -> DistributivityReport:
    """Evaluate both sides of distributivity in the idempotent interval lift."""
    S = interval_over(inner)
    a, b, c = S.canonical(a), S.canonical(b), S.canonical(c)
    left = S.mul(a, S.add(b, c))
    right = S.add(S.mul(a, b), S.mul(a, c))
    return DistributivityReport(left, right, S.eq(left, right))


def _classical_add(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo + b.lo + 0.0, a.hi + b.hi + 0.0)


def _classical_mul(a: Interval, b: Interval) -> Interval:
    # + 0.0 turns the -0.0 that products like -1.0 * 0.0 leave behind into 0.0
    prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(prods) + 0.0, max(prods) + 0.0)


def classical_distributivity_witness(a: Interval, b: Interval, c: Interval) -> DistributivityReport:
    """Same check under ordinary real-interval arithmetic, where only containment holds."""
    for iv in (a, b, c):
        if not iv.lo <= iv.hi:
            raise InvariantViolation(f"classical interval {iv} violates lo <= hi")
    left = _classical_mul(a, _classical_add(b, c))
    right = _classical_add(_classical_mul(a, b), _classical_mul(a, c))
    return DistributivityReport(left, right, left == right)

"""Semiring signatures: the interchangeable arithmetics the rest of the package is generic over.

A signature bundles a carrier, the two operations, their identities, and the
derived structure (standard partial order, scalar star, inverses where they
exist). Every algorithm downstream is written once against this interface;
swapping the signature swaps the problem being solved.

Built-in signatures and their CLI/file names:

    max-plus      reals with -inf, add = max, mul = +
    min-plus      reals with +inf, add = min, mul = +
    max-min       extended reals,  add = max, mul = min
    boolean       {false, true},   add = or,  mul = and
    max-times     [0, inf),        add = max, mul = *
    real          ordinary field arithmetic
    rational      exact field arithmetic on fractions
    deformed:<h>  log-sum-exp deformation of (R+, +, *) at temperature h
    interval:<x>  endpointwise interval lift of an idempotent signature x
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .errors import (
    CarrierMismatch,
    InvariantViolation,
    NegativeInput,
    NotIdempotent,
    NotSemifield,
    ParseError,
    StarDiverges,
    WeightOutOfCarrier,
    ZeroDivision,
)

INF = float("inf")

# Opcodes shared with the float64 kernels.
ADD_MAX, ADD_MIN, ADD_SUM = 0, 1, 2
MUL_PLUS, MUL_MIN, MUL_TIMES = 0, 1, 2

_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")
_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?\Z")


def format_real(x: float) -> str:
    """Render a real with 9 significant digits; specials as inf / -inf."""
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return "%.9g" % x


class KernelSpec(NamedTuple):
    """How to run this signature on the float64 fast-path kernels."""

    add_op: int
    mul_op: int
    zero: float
    one: float


class Semiring:
    """Base class: one arithmetic with zero, one, add, mul and derived order/star."""

    name: str = ""
    is_idempotent: bool = True
    is_semifield: bool = False
    dtype: np.dtype = np.dtype(np.float64)
    kernel_spec: Optional[KernelSpec] = None
    zero: object = None
    one: object = None

    # required per signature
    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def canonical(self, x):
        """Validate x as a carrier element and return its normal form."""
        raise NotImplementedError

    def parse_token(self, tok: str):
        raise NotImplementedError

    def format_token(self, x) -> str:
        raise NotImplementedError

    def _invert(self, a):
        raise NotImplementedError

    # derived structure
    def eq(self, a, b) -> bool:
        """Equality used for stabilization tests; exact unless overridden."""
        return a == b

    def array_eq(self, x: np.ndarray, y: np.ndarray) -> bool:
        if x.shape != y.shape:
            return False
        if self.dtype == np.dtype(object):
            return all(self.eq(u, v) for u, v in zip(x.flat, y.flat))
        return bool(np.array_equal(x, y))

    def leq(self, a, b) -> bool:
        """Standard partial order: a <= b iff a + b = b."""
        if not self.is_idempotent:
            raise NotIdempotent(f"{self.name} is not idempotent; the standard order is undefined")
        return self.eq(self.add(a, b), b)

    def inverse(self, a):
        if not self.is_semifield:
            raise NotSemifield(f"{self.name} has non-invertible nonzero elements")
        a = self.canonical(a)
        if self.eq(a, self.zero):
            raise ZeroDivision(f"inverse of the zero of {self.name}")
        return self._invert(a)

    def star(self, a, analytic: bool = False):
        """Least solution of x = one + a*x, i.e. the limit of one + a + a^2 + ...

        For idempotent signatures this is one whenever a <= one and diverges
        otherwise. Field signatures use series semantics (|a| < 1) unless
        `analytic` is set, which accepts any a != 1 via 1/(1 - a).
        """
        raise NotImplementedError

    def from_weight(self, w: float):
        """Carrier element encoding a raw graph edge weight."""
        try:
            return self.canonical(float(w))
        except CarrierMismatch as exc:
            raise WeightOutOfCarrier(f"weight {w!r} not in the carrier of {self.name}") from exc

    def __repr__(self):
        return f"<semiring {self.name}>"

    def __eq__(self, other):
        return isinstance(other, Semiring) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


def _check_float(name: str, x) -> float:
    # bool is an int subclass; keep it out of the numeric carriers
    if isinstance(x, bool) or isinstance(x, np.bool_):
        raise CarrierMismatch(f"boolean value {x!r} is not an element of {name}")
    if not isinstance(x, (int, float, np.integer, np.floating)):
        raise CarrierMismatch(f"{x!r} is not an element of {name}")
    x = float(x)
    if math.isnan(x):
        raise CarrierMismatch(f"NaN is not an element of {name}")
    return x + 0.0 if x == 0.0 else x  # normalize -0.0


class MaxPlusSemiring(Semiring):
    name = "max-plus"
    is_semifield = True
    zero = -INF
    one = 0.0
    kernel_spec = KernelSpec(ADD_MAX, MUL_PLUS, -INF, 0.0)

    def add(self, a, b):
        return a if a > b else b

    def mul(self, a, b):
        return a + b

    def canonical(self, x):
        x = _check_float(self.name, x)
        if x == INF:
            raise CarrierMismatch(f"+inf is not an element of {self.name}")
        return x

    def _invert(self, a):
        return -a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a <= 0.0:
            return 0.0
        raise StarDiverges(f"{self.name} star of {a!r}: series is unbounded")

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


class MinPlusSemiring(Semiring):
    name = "min-plus"
    is_semifield = True
    zero = INF
    one = 0.0
    kernel_spec = KernelSpec(ADD_MIN, MUL_PLUS, INF, 0.0)

    def add(self, a, b):
        return a if a < b else b

    def mul(self, a, b):
        return a + b

    def canonical(self, x):
        x = _check_float(self.name, x)
        if x == -INF:
            raise CarrierMismatch(f"-inf is not an element of {self.name}")
        return x

    def _invert(self, a):
        return -a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a >= 0.0:
            return 0.0
        raise StarDiverges(f"{self.name} star of {a!r}: series is unbounded")

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


class MaxMinSemiring(Semiring):
    name = "max-min"
    zero = -INF
    one = INF
    kernel_spec = KernelSpec(ADD_MAX, MUL_MIN, -INF, INF)

    def add(self, a, b):
        return a if a > b else b

    def mul(self, a, b):
        return a if a < b else b

    def canonical(self, x):
        return _check_float(self.name, x)

    def star(self, a, analytic: bool = False):
        self.canonical(a)
        return INF  # a <= one = +inf always holds

    def from_weight(self, w: float):
        w = float(w)
        if math.isinf(w) or math.isnan(w):
            raise WeightOutOfCarrier(f"{self.name} path weights must be finite, got {w!r}")
        return self.canonical(w)

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


class BooleanSemiring(Semiring):
    name = "boolean"
    zero = False
    one = True
    dtype = np.dtype(bool)
    # encoded as 0.0/1.0 floats: or = max, and = min
    kernel_spec = KernelSpec(ADD_MAX, MUL_MIN, 0.0, 1.0)

    def add(self, a, b):
        return bool(a or b)

    def mul(self, a, b):
        return bool(a and b)

    def canonical(self, x):
        if isinstance(x, (bool, np.bool_)):
            return bool(x)
        # exact 0/1 numerics reinterpret cleanly, e.g. when retargeting a 0/1 matrix
        if isinstance(x, (int, float, np.integer, np.floating)) and float(x) in (0.0, 1.0):
            return bool(x)
        raise CarrierMismatch(f"{x!r} is not a boolean")

    def star(self, a, analytic: bool = False):
        self.canonical(a)
        return True

    def from_weight(self, w: float):
        float(w)  # any weighted edge marks presence
        return True

    def parse_token(self, tok: str):
        if tok in ("true", "one"):
            return True
        if tok in ("false", "zero"):
            return False
        raise CarrierMismatch(f"{tok!r} is not a boolean token")

    def format_token(self, x) -> str:
        return "true" if x else "false"


class MaxTimesSemiring(Semiring):
    name = "max-times"
    is_semifield = True
    zero = 0.0
    one = 1.0
    kernel_spec = KernelSpec(ADD_MAX, MUL_TIMES, 0.0, 1.0)

    def add(self, a, b):
        return a if a > b else b

    def mul(self, a, b):
        return a * b

    def canonical(self, x):
        x = _check_float(self.name, x)
        if x < 0.0 or x == INF:
            raise CarrierMismatch(f"{x!r} is outside [0, inf), the carrier of {self.name}")
        return x

    def _invert(self, a):
        return 1.0 / a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a <= 1.0:
            return 1.0
        raise StarDiverges(f"{self.name} star of {a!r}: series is unbounded")

    def from_weight(self, w: float):
        w = float(w)
        if not 0.0 <= w <= 1.0:
            raise WeightOutOfCarrier(f"{self.name} path weights must lie in [0, 1], got {w!r}")
        return w

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


class RealFieldSemiring(Semiring):
    name = "real"
    is_idempotent = False
    is_semifield = True
    zero = 0.0
    one = 1.0
    kernel_spec = KernelSpec(ADD_SUM, MUL_TIMES, 0.0, 1.0)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def canonical(self, x):
        x = _check_float(self.name, x)
        if math.isinf(x):
            raise CarrierMismatch(f"{x!r} is not a finite real")
        return x

    def _invert(self, a):
        return 1.0 / a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a == 1.0:
            raise StarDiverges("real star of 1.0 has no value")
        if analytic or abs(a) < 1.0:
            return 1.0 / (1.0 - a)
        raise StarDiverges(f"real star of {a!r}: series |a| >= 1 does not converge")

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


class RationalFieldSemiring(Semiring):
    name = "rational"
    is_idempotent = False
    is_semifield = True
    dtype = np.dtype(object)
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def canonical(self, x):
        if isinstance(x, bool) or isinstance(x, np.bool_):
            raise CarrierMismatch(f"{x!r} is not a rational")
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        raise CarrierMismatch(f"{x!r} is not a rational (use Fraction or int)")

    def _invert(self, a):
        return 1 / a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a == 1:
            raise StarDiverges("rational star of 1 has no value")
        if analytic or abs(a) < 1:
            return 1 / (1 - a)
        raise StarDiverges(f"rational star of {a!r}: series |a| >= 1 does not converge")

    def from_weight(self, w: float):
        return Fraction(float(w))  # exact binary expansion

    def parse_token(self, tok: str):
        if tok == "zero":
            return Fraction(0)
        if tok == "one":
            return Fraction(1)
        m = _RATIONAL_RE.match(tok)
        if not m:
            raise CarrierMismatch(f"{tok!r} is not a rational token (expected p or p/q)")
        num, den = m.group(1), m.group(2)
        if den is None:
            return Fraction(int(num))
        if int(den) == 0:
            raise CarrierMismatch(f"{tok!r} has a zero denominator")
        return Fraction(int(num), int(den))

    def format_token(self, x) -> str:
        return str(x)


class DeformedSemiring(Semiring):
    """Image of (R+, +, *) under u -> h*ln(u): add is log-sum-exp, mul is +.

    Not idempotent for any h > 0; as h -> 0 its add tends to max from above,
    never exceeding max by more than h*ln 2.
    """

    is_idempotent = False
    is_semifield = True
    zero = -INF
    one = 0.0
    kernel_spec = None  # exp/log stay on one scalar code path for determinism

    def __init__(self, h: float):
        h = float(h)
        if not (h > 0.0) or math.isinf(h):
            raise InvariantViolation(f"deformation parameter h must be a positive real, got {h!r}")
        self.h = h
        self.name = "deformed:%s" % ("%g" % h)

    def add(self, a, b):
        if a == -INF:
            return b
        if b == -INF:
            return a
        m = a if a > b else b
        return m + self.h * math.log1p(math.exp(-abs(a - b) / self.h))

    def mul(self, a, b):
        return a + b

    def eq(self, a, b) -> bool:
        return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)

    def array_eq(self, x: np.ndarray, y: np.ndarray) -> bool:
        if x.shape != y.shape:
            return False
        return bool(np.allclose(x, y, rtol=1e-12, atol=1e-12))

    def canonical(self, x):
        x = _check_float(self.name, x)
        if x == INF:
            raise CarrierMismatch(f"+inf is not an element of {self.name}")
        return x

    def _invert(self, a):
        return -a

    def star(self, a, analytic: bool = False):
        a = self.canonical(a)
        if a == -INF:
            return 0.0
        if a < 0.0:
            # h*ln(1/(1 - e^(a/h))), the dequantized geometric series
            return -self.h * math.log1p(-math.exp(a / self.h))
        raise StarDiverges(f"{self.name} star of {a!r}: series does not converge for a >= 0")

    def parse_token(self, tok: str):
        return _parse_real_token(self, tok)

    def format_token(self, x) -> str:
        return format_real(x)


def _parse_real_token(S: Semiring, tok: str):
    if tok == "zero":
        return S.zero
    if tok == "one":
        return S.one
    if tok == "inf":
        return S.canonical(INF)
    if tok == "-inf":
        return S.canonical(-INF)
    if not _DECIMAL_RE.match(tok):
        raise CarrierMismatch(f"{tok!r} is not a numeric token")
    return S.canonical(float(tok))


MAX_PLUS = MaxPlusSemiring()
MIN_PLUS = MinPlusSemiring()
MAX_MIN = MaxMinSemiring()
BOOLEAN = BooleanSemiring()
MAX_TIMES = MaxTimesSemiring()
REAL = RealFieldSemiring()
RATIONAL = RationalFieldSemiring()

_SCALAR_SINGLETONS = {
    s.name: s for s in (MAX_PLUS, MIN_PLUS, MAX_MIN, BOOLEAN, MAX_TIMES, REAL, RATIONAL)
}


def by_name(name: str) -> Semiring:
    """Resolve a semiring name string, e.g. 'min-plus', 'deformed:0.1', 'interval:max-plus'."""
    key = name.strip()
    if key in _SCALAR_SINGLETONS:
        return _SCALAR_SINGLETONS[key]
    if key.startswith("deformed:"):
        arg = key[len("deformed:"):]
        if not _DECIMAL_RE.match(arg):
            raise ParseError(0, 0, f"bad deformation parameter {arg!r} in {name!r}")
        return DeformedSemiring(float(arg))
    if key.startswith("interval:"):
        from .interval import interval_over

        inner = by_name(key[len("interval:"):])
        return interval_over(inner)
    raise ParseError(0, 0, f"unknown semiring name {name!r}")


class HomomorphismReport(NamedTuple):
    add_residual: float
    mul_residual: float


def dequantize(h: float, u) -> float:
    """Change of variables u -> h*ln(u), sending 0 to -inf and 1 to 0."""
    if not (float(h) > 0.0):
        raise InvariantViolation(f"deformation parameter h must be positive, got {h!r}")
    u = float(u)
    if math.isnan(u) or u < 0.0:
        raise NegativeInput(f"dequantization needs u >= 0, got {u!r}")
    if u == 0.0:
        return -INF
    return float(h) * math.log(u)


def homomorphism_check(h: float, u1, u2) -> HomomorphismReport:
    """Residuals of D_h(u1 + u2) = D_h(u1) (+)_h D_h(u2) and the product analog."""
    u1, u2 = float(u1), float(u2)
    if u1 < 0.0 or u2 < 0.0:
        raise NegativeInput("homomorphism check needs nonnegative inputs")
    S = DeformedSemiring(h)
    w1, w2 = dequantize(h, u1), dequantize(h, u2)
    add_lhs = dequantize(h, u1 + u2)
    add_rhs = S.add(w1, w2)
    mul_lhs = dequantize(h, u1 * u2)
    mul_rhs = S.mul(w1, w2)

    def residual(lhs, rhs):
        if lhs == rhs:  # covers the -inf cases exactly
            return 0.0
        return abs(lhs - rhs)

    return HomomorphismReport(residual(add_lhs, add_rhs), residual(mul_lhs, mul_rhs))

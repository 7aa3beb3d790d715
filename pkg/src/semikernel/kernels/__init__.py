"""Backend dispatch for the float64 hot kernels (matmul, closure, legendre).

Two interchangeable implementations: a numba-jitted one and a pure-numpy one.
The active backend is chosen by the SEMIKERNEL_BACKEND environment variable
("numba" or "numpy") at import time, defaulting to numba when it is
importable; set_backend() overrides at runtime. Both backends produce
bit-identical results, so the choice is purely a speed knob.
"""

from __future__ import annotations

import os

import numpy as np

from . import _numpy

try:
    from . import _numba

    HAS_NUMBA = True
except ImportError:  # numba is optional at runtime
    _numba = None
    HAS_NUMBA = False


def available_backends():
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def _validated(name: str) -> str:
    name = name.strip().lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"backend must be 'numba' or 'numpy', got {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("backend 'numba' requested but numba is not importable")
    return name


def _initial_backend() -> str:
    env = os.environ.get("SEMIKERNEL_BACKEND", "")
    if env.strip():
        return _validated(env)
    return "numba" if HAS_NUMBA else "numpy"


_active = _initial_backend()


def get_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    _active = _validated(name)


def _mod():
    return _numba if _active == "numba" else _numpy


def matmul(a: np.ndarray, b: np.ndarray, add_op: int, mul_op: int, zero: float) -> np.ndarray:
    return _mod().matmul(a, b, add_op, mul_op, zero)


def closure(a: np.ndarray, add_op: int, mul_op: int, one: float):
    return _mod().closure(a, add_op, mul_op, one)


def legendre(xis: np.ndarray, xs: np.ndarray, vals: np.ndarray) -> np.ndarray:
    return _mod().legendre(xis, xs, vals)


def warmup() -> None:
    """Force one jit compilation per kernel so later calls are compile-free."""
    if _active != "numba":
        return
    a = np.zeros((1, 1))
    v = np.zeros(1)
    _numba.matmul(a, a, 0, 0, -np.inf)
    _numba.closure(a, 0, 0, 0.0)
    _numba.legendre(v, v, v)

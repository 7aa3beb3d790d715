"""Cycle-accurate simulator of an output-stationary systolic mesh.

The n x n cell grid computes a semiring matrix product: row i of A enters
from the west skewed by i cycles, column j of B from the north skewed by j,
and cell (i, j) multiply-accumulates A[i, k] with B[k, j] at cycle i + j + k.
The last update fires at cycle 3(n - 1), so every run takes exactly 3n - 2
cycles. Accumulation order is ascending k, making the product bit-identical
to the reference matrix multiply. Swapping the semiring re-targets the same
cell program without touching the schedule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .errors import InvariantViolation, ShapeMismatch
from .linalg import Matrix, _full, _require_same_semiring
from .semiring import Semiring

TRACE_CAP = 8  # traced runs are bounded to keep event lists small

RECEIVE = "receive"
MULACC = "mulacc"
FORWARD = "forward"


@dataclass(frozen=True)
class TraceEvent:
    cycle: int
    cell: Tuple[int, int]
    action: str
    operands: Tuple


@dataclass(frozen=True)
class SimResult:
    product: Matrix
    cycles: int
    events: Tuple[TraceEvent, ...]


@dataclass(frozen=True)
class SystolicConfig:
    """The swappable part of the array: which arithmetic the cells run."""

    semiring: Semiring


def swap_operations(config: SystolicConfig, S: Semiring) -> SystolicConfig:
    """Re-target the cell program to another signature; schedule is unchanged."""
    return SystolicConfig(S)


def _pyval(v):
    return v.item() if isinstance(v, np.generic) else v


def simulate_matmul(
    A: Matrix,
    B: Matrix,
    trace: bool = False,
    config: Optional[SystolicConfig] = None,
) -> SimResult:
    """Run the wavefront schedule and return the product plus the cycle count."""
    _require_same_semiring(A, B)
    if A.rows != A.cols or B.rows != B.cols or A.rows != B.rows:
        raise ShapeMismatch(f"systolic array needs equal square operands, got {A.shape} and {B.shape}")
    S = A.semiring
    a, b = A.data, B.data
    if config is not None and config.semiring != S:
        # reinterpret the same entries under the swapped arithmetic
        S = config.semiring
        a = Matrix(S, A.to_lists()).data
        b = Matrix(S, B.to_lists()).data
    n = A.rows
    if trace and n > TRACE_CAP:
        raise InvariantViolation(f"trace capture is capped at n <= {TRACE_CAP}, got n={n}")

    acc = _full(S, (n, n), S.zero)
    events = []
    total = 3 * n - 2
    for t in range(total):
        for i in range(n):
            for j in range(n):
                k = t - i - j
                if not 0 <= k < n:
                    continue
                av, bv = a[i, k], b[k, j]
                if trace:
                    if j == 0:
                        events.append(TraceEvent(t, (i, j), RECEIVE, (_pyval(av),)))
                    if i == 0:
                        events.append(TraceEvent(t, (i, j), RECEIVE, (_pyval(bv),)))
                acc[i, j] = S.add(acc[i, j], S.mul(av, bv))
                if trace:
                    events.append(TraceEvent(t, (i, j), MULACC, (_pyval(av), _pyval(bv))))
                    if j < n - 1:
                        events.append(TraceEvent(t, (i, j), FORWARD, (_pyval(av),)))
                    if i < n - 1:
                        events.append(TraceEvent(t, (i, j), FORWARD, (_pyval(bv),)))

    return SimResult(Matrix._wrap(S, acc), total, tuple(events))

"""Text formats for matrices, graphs, sampled functions, and sampled kernels.

All formats are line-oriented: `#` starts a comment, blank lines are ignored,
tokens are whitespace-separated. Failures carry 1-based line and column.
Rendering is the exact inverse on values that fit 9 significant digits, so
parse(render(x)) is the identity for results of idempotent computations.
"""

from __future__ import annotations

import re

from .calculus import SampledFunction, SampledKernel
from .errors import InvariantViolation, ParseError, SemiringError, ShapeMismatch
from .graphs import Digraph
from .linalg import Matrix, Vector
from .semiring import Semiring, by_name, format_real

_TOKEN_RE = re.compile(r"\S+")
_INT_RE = re.compile(r"[+-]?\d+\Z")
_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?\Z")


def _locate(exc: SemiringError, line: int, col: int) -> SemiringError:
    """Re-raise a domain error with its source location, preserving the type."""
    if isinstance(exc, ParseError):
        return ParseError(line, col, exc.reason)
    return type(exc)(f"line {line} col {col}: {exc}")


class _Lines:
    """Comment-stripping reader over logical lines with token positions."""

    def __init__(self, text: str):
        self.items = []
        self.total = 0
        for ln, raw in enumerate(text.splitlines(), start=1):
            self.total = ln
            body = raw.split("#", 1)[0]
            toks = [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(body)]
            if toks:
                self.items.append((ln, toks))
        self.pos = 0

    def next(self, what: str):
        if self.pos >= len(self.items):
            raise ParseError(self.total + 1, 1, f"unexpected end of input, expected {what}")
        item = self.items[self.pos]
        self.pos += 1
        return item

    def done(self):
        if self.pos < len(self.items):
            ln, toks = self.items[self.pos]
            raise ParseError(ln, toks[0][1], f"unexpected trailing content {toks[0][0]!r}")


def _expect_keyword(ln, toks, keyword: str, shape: str):
    if toks[0][0] != keyword:
        raise ParseError(ln, toks[0][1], f"expected {shape!r}, got {toks[0][0]!r}")


def _parse_int(ln, tok, col, what: str) -> int:
    if not _INT_RE.match(tok):
        raise ParseError(ln, col, f"expected {what} (an integer), got {tok!r}")
    return int(tok)


def _parse_decimal(ln, tok, col, what: str) -> float:
    if not _DECIMAL_RE.match(tok):
        raise ParseError(ln, col, f"expected {what} (a decimal), got {tok!r}")
    return float(tok)


def _parse_semiring(ln, toks, keyword: str) -> Semiring:
    _expect_keyword(ln, toks, keyword, f"{keyword} <semiring>")
    if len(toks) != 2:
        raise ParseError(ln, toks[-1][1] if len(toks) > 2 else toks[0][1], f"expected {keyword!r} and one semiring name")
    name, col = toks[1]
    try:
        return by_name(name)
    except SemiringError as exc:
        raise _locate(exc, ln, col) from None


def _parse_value(S: Semiring, ln, tok, col):
    try:
        return S.parse_token(tok)
    except SemiringError as exc:
        raise _locate(exc, ln, col) from None


# matrices

def parse_matrix_text(text: str) -> Matrix:
    lines = _Lines(text)
    ln, toks = lines.next("'semiring <name>'")
    S = _parse_semiring(ln, toks, "semiring")
    ln, toks = lines.next("'shape <rows> <cols>'")
    _expect_keyword(ln, toks, "shape", "shape <rows> <cols>")
    if len(toks) != 3:
        raise ParseError(ln, toks[0][1], "expected 'shape <rows> <cols>'")
    rows = _parse_int(ln, toks[1][0], toks[1][1], "row count")
    cols = _parse_int(ln, toks[2][0], toks[2][1], "column count")
    if rows < 1 or cols < 1:
        raise ParseError(ln, toks[1][1], f"matrix shape must be positive, got {rows} x {cols}")
    data = []
    for _ in range(rows):
        ln, toks = lines.next(f"a row of {cols} tokens")
        if len(toks) != cols:
            raise ParseError(ln, toks[0][1], f"expected {cols} tokens in this row, got {len(toks)}")
        data.append([_parse_value(S, ln, tok, col) for tok, col in toks])
    lines.done()
    return Matrix(S, data)


def render_matrix(M: Matrix) -> str:
    S = M.semiring
    out = [f"semiring {S.name}", f"shape {M.rows} {M.cols}"]
    for i in range(M.rows):
        out.append(" ".join(S.format_token(M.data[i, j]) for j in range(M.cols)))
    return "\n".join(out) + "\n"


def matrix_as_vector(M: Matrix) -> Vector:
    """Read a 1 x n or n x 1 matrix as a vector."""
    if M.rows == 1:
        return Vector._wrap(M.semiring, M.data[0, :].copy())
    if M.cols == 1:
        return Vector._wrap(M.semiring, M.data[:, 0].copy())
    raise ShapeMismatch(f"expected a single-row or single-column matrix, got {M.shape}")


# graphs

def parse_graph_text(text: str) -> Digraph:
    lines = _Lines(text)
    ln, toks = lines.next("'graph <n>'")
    _expect_keyword(ln, toks, "graph", "graph <n>")
    if len(toks) != 2:
        raise ParseError(ln, toks[0][1], "expected 'graph <n>'")
    n = _parse_int(ln, toks[1][0], toks[1][1], "node count")
    if n < 1:
        raise ParseError(ln, toks[1][1], f"node count must be positive, got {n}")
    edges = []
    while lines.pos < len(lines.items):
        ln, toks = lines.next("'edge <src> <dst> <w>'")
        _expect_keyword(ln, toks, "edge", "edge <src> <dst> <w>")
        if len(toks) != 4:
            raise ParseError(ln, toks[0][1], "expected 'edge <src> <dst> <w>'")
        s = _parse_int(ln, toks[1][0], toks[1][1], "source node")
        d = _parse_int(ln, toks[2][0], toks[2][1], "target node")
        w = _parse_decimal(ln, toks[3][0], toks[3][1], "edge weight")
        if not (0 <= s < n and 0 <= d < n):
            raise InvariantViolation(f"line {ln} col {toks[1][1]}: edge ({s}, {d}) outside node range 0..{n - 1}")
        edges.append((s, d, w))
    return Digraph(n, tuple(edges))


def render_graph(g: Digraph) -> str:
    out = [f"graph {g.n}"]
    for s, d, w in g.edges:
        out.append(f"edge {s} {d} {format_real(w)}")
    return "\n".join(out) + "\n"


# sampled functions

def parse_function_text(text: str) -> SampledFunction:
    lines = _Lines(text)
    header_ln, toks = lines.next("'function <semiring>'")
    header_col = toks[0][1]
    S = _parse_semiring(header_ln, toks, "function")
    xs, vals = [], []
    while lines.pos < len(lines.items):
        ln, toks = lines.next("'<x> <value>'")
        if len(toks) != 2:
            raise ParseError(ln, toks[0][1], "expected '<x> <value>'")
        x = _parse_decimal(ln, toks[0][0], toks[0][1], "grid point")
        if xs and x <= xs[-1]:
            raise ParseError(ln, toks[0][1], f"grid points must be strictly increasing, {x!r} after {xs[-1]!r}")
        xs.append(x)
        vals.append(_parse_value(S, ln, toks[1][0], toks[1][1]))
    if not xs:
        raise ParseError(lines.total + 1, 1, "expected at least one '<x> <value>' sample line")
    try:
        return SampledFunction(S, xs, vals)
    except SemiringError as exc:
        raise _locate(exc, header_ln, header_col) from None


def render_function(f: SampledFunction) -> str:
    S = f.semiring
    out = [f"function {S.name}"]
    for i in range(len(f)):
        out.append(f"{format_real(float(f.xs[i]))} {S.format_token(f.vals[i])}")
    return "\n".join(out) + "\n"


# sampled kernels

def parse_kernel_text(text: str) -> SampledKernel:
    lines = _Lines(text)
    header_ln, toks = lines.next("'kernel <semiring>'")
    header_col = toks[0][1]
    S = _parse_semiring(header_ln, toks, "kernel")
    grids = {}
    for axis in ("xs", "ys"):
        ln, toks = lines.next(f"'{axis} <points...>'")
        _expect_keyword(ln, toks, axis, f"{axis} <points...>")
        if len(toks) < 2:
            raise ParseError(ln, toks[0][1], f"expected at least one grid point after {axis!r}")
        pts = [_parse_decimal(ln, tok, col, "grid point") for tok, col in toks[1:]]
        for prev, cur in zip(pts, pts[1:]):
            if cur <= prev:
                raise ParseError(ln, toks[0][1], f"{axis} grid must be strictly increasing")
        grids[axis] = pts
    rows = []
    for _ in range(len(grids["xs"])):
        ln, toks = lines.next(f"a row of {len(grids['ys'])} tokens")
        if len(toks) != len(grids["ys"]):
            raise ParseError(ln, toks[0][1], f"expected {len(grids['ys'])} tokens in this row, got {len(toks)}")
        rows.append([_parse_value(S, ln, tok, col) for tok, col in toks])
    lines.done()
    try:
        return SampledKernel(S, grids["xs"], grids["ys"], rows)
    except SemiringError as exc:
        raise _locate(exc, header_ln, header_col) from None


def render_kernel(K: SampledKernel) -> str:
    S = K.semiring
    out = [f"kernel {S.name}"]
    out.append("xs " + " ".join(format_real(float(x)) for x in K.xs))
    out.append("ys " + " ".join(format_real(float(y)) for y in K.ys))
    for i in range(K.xs.size):
        out.append(" ".join(S.format_token(K.vals[i, j]) for j in range(K.ys.size)))
    return "\n".join(out) + "\n"


# file wrappers

def _read(path) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def parse_matrix_file(path) -> Matrix:
    return parse_matrix_text(_read(path))


def parse_graph_file(path) -> Digraph:
    return parse_graph_text(_read(path))


def parse_function_file(path) -> SampledFunction:
    return parse_function_text(_read(path))


def parse_kernel_file(path) -> SampledKernel:
    return parse_kernel_text(_read(path))

"""Generic linear algebra, path solvers, and idempotent calculus over semirings.

One set of algorithms (matrix product, Gauss-Jordan closure, fixed-point
solvers, integral operators, a systolic-array simulator) runs unchanged over
interchangeable carriers: max-plus, min-plus, max-min, boolean, max-times,
the real and rational fields, a deformation family that interpolates between
ordinary and max-plus arithmetic, and an interval lift over any idempotent
carrier. Hot float kernels are JIT-compiled via numba when available; set
SEMIKERNEL_BACKEND=numpy to force the pure-numpy path.
"""

from . import kernels
from .calculus import (
    SampledFunction,
    SampledKernel,
    apply_operator,
    idempotent_integral,
    idempotent_measure,
    legendre_transform,
    riemann_sum,
    scalar_product,
)
from .errors import (
    CarrierMismatch,
    EmptyDomain,
    EmptySubset,
    GridMismatch,
    InvariantViolation,
    NegativeInput,
    NoPath,
    NonStabilizing,
    NotIdempotent,
    NotMaxPlus,
    NotSemifield,
    ParseError,
    SemiringError,
    SemiringMismatch,
    ShapeMismatch,
    StarDiverges,
    WeightOutOfCarrier,
    ZeroDivision,
)
from .formats import (
    matrix_as_vector,
    parse_function_file,
    parse_function_text,
    parse_graph_file,
    parse_graph_text,
    parse_kernel_file,
    parse_kernel_text,
    parse_matrix_file,
    parse_matrix_text,
    render_function,
    render_graph,
    render_kernel,
    render_matrix,
)
from .graphs import (
    Digraph,
    PathWitness,
    extract_path,
    most_reliable_paths,
    reachability,
    shortest_paths,
    to_matrix,
    widest_paths,
)
from .interval import (
    Interval,
    classical_distributivity_witness,
    distributivity_witness,
    interval_add,
    interval_mul,
    interval_over,
)
from .linalg import (
    Matrix,
    Vector,
    dot,
    identity,
    mat_add,
    mat_mul,
    mat_pow,
    mat_vec,
    scale,
    zero_matrix,
)
from .semiring import (
    BOOLEAN,
    MAX_MIN,
    MAX_PLUS,
    MAX_TIMES,
    MIN_PLUS,
    RATIONAL,
    REAL,
    DeformedSemiring,
    Semiring,
    by_name,
    dequantize,
    format_real,
    homomorphism_check,
)
from .solvers import (
    SolveReport,
    bellman_gauss_seidel,
    bellman_jacobi,
    closure_gauss_jordan,
    closure_series,
    default_budget,
    verify_bellman,
    verify_closure,
)
from .systolic import SimResult, SystolicConfig, TraceEvent, simulate_matmul, swap_operations

__version__ = "0.1.0"

__all__ = [
    "BOOLEAN",
    "CarrierMismatch",
    "DeformedSemiring",
    "Digraph",
    "EmptyDomain",
    "EmptySubset",
    "GridMismatch",
    "Interval",
    "InvariantViolation",
    "MAX_MIN",
    "MAX_PLUS",
    "MAX_TIMES",
    "MIN_PLUS",
    "Matrix",
    "NegativeInput",
    "NoPath",
    "NonStabilizing",
    "NotIdempotent",
    "NotMaxPlus",
    "NotSemifield",
    "ParseError",
    "PathWitness",
    "RATIONAL",
    "REAL",
    "SampledFunction",
    "SampledKernel",
    "Semiring",
    "SemiringError",
    "SemiringMismatch",
    "ShapeMismatch",
    "SimResult",
    "SolveReport",
    "StarDiverges",
    "SystolicConfig",
    "TraceEvent",
    "Vector",
    "WeightOutOfCarrier",
    "ZeroDivision",
    "apply_operator",
    "bellman_gauss_seidel",
    "bellman_jacobi",
    "by_name",
    "classical_distributivity_witness",
    "closure_gauss_jordan",
    "closure_series",
    "default_budget",
    "dequantize",
    "distributivity_witness",
    "dot",
    "extract_path",
    "format_real",
    "homomorphism_check",
    "idempotent_integral",
    "idempotent_measure",
    "identity",
    "interval_add",
    "interval_mul",
    "interval_over",
    "kernels",
    "legendre_transform",
    "mat_add",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "matrix_as_vector",
    "most_reliable_paths",
    "parse_function_file",
    "parse_function_text",
    "parse_graph_file",
    "parse_graph_text",
    "parse_kernel_file",
    "parse_kernel_text",
    "parse_matrix_file",
    "parse_matrix_text",
    "reachability",
    "render_function",
    "render_graph",
    "render_kernel",
    "render_matrix",
    "riemann_sum",
    "scalar_product",
    "scale",
    "shortest_paths",
    "simulate_matmul",
    "swap_operations",
    "to_matrix",
    "verify_bellman",
    "verify_closure",
    "widest_paths",
    "zero_matrix",
]

"""Exact floor/ceiling power sums and floor/ceiling generalizations of Hurwitz zeta."""
from .bernoulli import bernoulli_number, bernoulli_poly_eval, faulhaber_sum
from .errors import (
    BudgetExceeded,
    DomainError,
    FloorZetaError,
    InternalInconsistency,
    InvalidArgument,
)
from .exact_arith import (
    ExponentA,
    ceil_pow,
    floor_pow,
    int_root_ceil,
    int_root_floor,
    rational_root_ceil,
    rational_root_floor,
)
from .fc_zeta import FCZetaSpec, SeriesEval, fc_zeta_direct, fc_zeta_equivalent
from .floor_sums import sum_ceil, sum_ceil_closed, sum_floor, sum_floor_closed
from .zeta_numeric import ZetaResult, hurwitz_zeta, riemann_zeta

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DomainError",
    "ExponentA",
    "FCZetaSpec",
    "FloorZetaError",
    "InternalInconsistency",
    "InvalidArgument",
    "SeriesEval",
    "ZetaResult",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "ceil_pow",
    "faulhaber_sum",
    "fc_zeta_direct",
    "fc_zeta_equivalent",
    "floor_pow",
    "hurwitz_zeta",
    "int_root_ceil",
    "int_root_floor",
    "rational_root_ceil",
    "rational_root_floor",
    "riemann_zeta",
    "sum_ceil",
    "sum_ceil_closed",
    "sum_floor",
    "sum_floor_closed",
]

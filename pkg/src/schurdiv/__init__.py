"""Exact kernel for division remainders as Schur determinants.

Everything is computed over arbitrary-precision rationals; there is no
floating point anywhere in the package.
"""

from .alphabet import (
    Alphabet,
    DiffArgument,
    Symbol,
    X,
    X_INV,
    complete_series,
    complete_sym,
    diff_arg,
    dual,
    prod_u,
    reciprocal_root_poly,
    resultant,
    root_poly,
    vandermonde_delta,
)
from .companion import (
    ColumnRange,
    GiambelliBlocks,
    HookLabel,
    RecurrentSeq,
    companion_column,
    companion_submatrix,
    double_companion,
    double_vandermonde,
    giambelli_block,
    giambelli_general,
    houmu_ratio,
    recur_extend,
)
from .division import (
    EuclidTrace,
    TailSymmetricExpr,
    euclid_remainder_multischur,
    euclid_remainders,
    head_complete_expr,
    head_power_expr,
    inverse_power_rect_form,
    lagrange_functional,
    reciprocal_roots_remainder_form,
    reconstruction_expr,
    remainder_laurent,
    remainder_x_pow,
)
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionError,
    DomainError,
    KernelError,
    ParseError,
    PoleError,
)
from .laurent import (
    LaurentPoly,
    lagrange_interpolate,
    laurent_split,
    poly_divmod,
    remainder_via_interpolation,
)
from .linalg import Matrix, det, det_cofactor, mat_inverse, mat_mul, mat_pow_signed
from .rationals import format_rational, parse_rational
from .schur import (
    FrobeniusCoords,
    MultiSchurSpec,
    box_complement,
    frobenius,
    gschur,
    hook_amp,
    is_partition,
    is_weakly_increasing,
    multi_schur,
    multi_schur_uniform,
    schur_partition,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ColumnRange",
    "ConsistencyError",
    "DegeneracyError",
    "DiffArgument",
    "DimensionError",
    "DomainError",
    "EuclidTrace",
    "FrobeniusCoords",
    "GiambelliBlocks",
    "HookLabel",
    "KernelError",
    "LaurentPoly",
    "Matrix",
    "MultiSchurSpec",
    "ParseError",
    "PoleError",
    "RecurrentSeq",
    "Symbol",
    "TailSymmetricExpr",
    "X",
    "X_INV",
    "box_complement",
    "companion_column",
    "companion_submatrix",
    "complete_series",
    "complete_sym",
    "det",
    "det_cofactor",
    "diff_arg",
    "double_companion",
    "double_vandermonde",
    "dual",
    "euclid_remainder_multischur",
    "euclid_remainders",
    "format_rational",
    "frobenius",
    "giambelli_block",
    "giambelli_general",
    "gschur",
    "head_complete_expr",
    "head_power_expr",
    "hook_amp",
    "houmu_ratio",
    "inverse_power_rect_form",
    "is_partition",
    "is_weakly_increasing",
    "lagrange_functional",
    "lagrange_interpolate",
    "laurent_split",
    "mat_inverse",
    "mat_mul",
    "mat_pow_signed",
    "multi_schur",
    "multi_schur_uniform",
    "parse_rational",
    "poly_divmod",
    "prod_u",
    "reciprocal_root_poly",
    "reciprocal_roots_remainder_form",
    "reconstruction_expr",
    "recur_extend",
    "remainder_laurent",
    "remainder_via_interpolation",
    "remainder_x_pow",
    "resultant",
    "root_poly",
    "schur_partition",
    "vandermonde_delta",
]

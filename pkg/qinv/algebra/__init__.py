from qinv.algebra.coeff_ring import (
    GF,
    QQ,
    ZZ,
    CoefficientRing,
    PrimeField,
    PrimeFieldElement,
    ff_inv,
    integer_content,
    rat_normalize,
    ring_for,
)
from qinv.algebra.linalg import Echelon, LinearSystem
from qinv.algebra.mpoly import (
    CYCLE,
    IDENTITY,
    INFINITY,
    S3,
    S12,
    S13,
    S23,
    ExponentVector,
    Permutation,
    Polynomial,
    apply_permutation,
    elementary_symmetric,
    format_poly,
    is_symmetric,
    m_d_polynomial,
    reduce_mod_p,
    valuation_along,
    vandermonde,
)
from qinv.algebra.poly_parser import parse_poly

__all__ = (
    "CYCLE",
    "CoefficientRing",
    "Echelon",
    "ExponentVector",
    "GF",
    "IDENTITY",
    "INFINITY",
    "LinearSystem",
    "Permutation",
    "Polynomial",
    "PrimeField",
    "PrimeFieldElement",
    "QQ",
    "S12",
    "S13",
    "S23",
    "S3",
    "ZZ",
    "apply_permutation",
    "elementary_symmetric",
    "ff_inv",
    "format_poly",
    "integer_content",
    "is_symmetric",
    "m_d_polynomial",
    "parse_poly",
    "rat_normalize",
    "reduce_mod_p",
    "ring_for",
    "valuation_along",
    "vandermonde",
)

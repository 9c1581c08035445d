from .cyclo import (
    CycloElement,
    cyclo_add,
    cyclo_from_json,
    cyclo_inv,
    cyclo_mul,
    cyclotomic_polynomial,
    is_rational,
    parse_rational,
    rational_to_json,
    root_of_unity,
    totient,
)
from .linalg import (
    Matrix,
    bezout_projectors,
    companion_matrix,
    det_cofactor,
    det_exact,
    poly_at_matrix,
    rank,
    rref,
    rref_rows,
)
from .poly import PolyQ, poly_extended_gcd
from .roots import Eigenvalue

__all__ = [
    "CycloElement",
    "Eigenvalue",
    "Matrix",
    "PolyQ",
    "bezout_projectors",
    "companion_matrix",
    "cyclo_add",
    "cyclo_from_json",
    "cyclo_inv",
    "cyclo_mul",
    "cyclotomic_polynomial",
    "det_cofactor",
    "det_exact",
    "is_rational",
    "parse_rational",
    "poly_at_matrix",
    "poly_extended_gcd",
    "rank",
    "rational_to_json",
    "root_of_unity",
    "rref",
    "rref_rows",
    "totient",
]

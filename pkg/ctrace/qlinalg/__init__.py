from .rational import (
    Rational,
    RationalVector,
    as_vector,
    format_rational,
    parse_rational,
)
from .qmatrix import QMatrix, apply, kernel_basis, rank

__all__ = [
    "Rational",
    "RationalVector",
    "as_vector",
    "format_rational",
    "parse_rational",
    "QMatrix",
    "apply",
    "kernel_basis",
    "rank",
]

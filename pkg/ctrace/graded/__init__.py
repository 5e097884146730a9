from .laurent_polynomial import LaurentPolynomial
from .graded_space import (
    GradedSpace,
    TensorPair,
    negate_grading,
    poincare_series,
    tensor,
    tensor_pairs,
    truncated_tensor,
)
from .bigraded_element import BigradedElement, generator_label

__all__ = [
    "LaurentPolynomial",
    "GradedSpace",
    "TensorPair",
    "negate_grading",
    "poincare_series",
    "tensor",
    "tensor_pairs",
    "truncated_tensor",
    "BigradedElement",
    "generator_label",
]

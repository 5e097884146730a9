import pytest
from hypothesis import given, settings

from ctrace.graded import poincare_series, tensor, truncated_tensor
from ctrace.tests.oracles import polynomial_product
from ctrace.tests.strategies import graded_spaces


@pytest.mark.property
class TestGradedProperties:
    """The Poincaré series is a ring homomorphism for ⊗"""

    @settings(max_examples=250, deadline=None)
    @given(graded_spaces("v"), graded_spaces("w"))
    def test_tensor_multiplies_series(self, v, w):
        series = poincare_series(tensor(v, w))
        assert dict(series.coefficients) == polynomial_product(v.dims(), w.dims())

    @settings(max_examples=250, deadline=None)
    @given(graded_spaces("v"), graded_spaces("w"))
    def test_truncation_keeps_nonnegative_part(self, v, w):
        expected = (poincare_series(v) * poincare_series(w)).nonnegative_part()
        assert poincare_series(truncated_tensor(v, w)) == expected

    @settings(max_examples=200, deadline=None)
    @given(graded_spaces("v"), graded_spaces("w"))
    def test_truncation_has_no_negative_degrees(self, v, w):
        assert all(degree >= 0 for degree in truncated_tensor(v, w).degrees())

    @settings(max_examples=200, deadline=None)
    @given(graded_spaces("v"), graded_spaces("w"))
    def test_total_dimension_multiplies(self, v, w):
        assert len(tensor(v, w)) == len(v) * len(w)

    @settings(max_examples=200, deadline=None)
    @given(graded_spaces("v"), graded_spaces("w"))
    def test_tensor_dims_commute(self, v, w):
        assert tensor(v, w).dims() == tensor(w, v).dims()

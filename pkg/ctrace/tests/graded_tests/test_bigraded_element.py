import pytest

from ctrace.graded import BigradedElement, generator_label
from ctrace.shared import InvalidProfileError


class TestBigradedElement:
    def test_degrees(self):
        x = BigradedElement("x_3", -3, 3)
        assert x.bidegree == (-3, 5)
        assert x.total_degree == 2
        assert x.label == "x_3⊗s_5"
        assert x.pretty_label == "x_3⊗s_5"

    def test_unit_is_elided_in_pretty_label(self):
        x = BigradedElement("1", 0, 2)
        assert x.label == "1⊗s_3"
        assert x.pretty_label == "s_3"

    def test_product_unit_is_elided_in_pretty_label(self):
        """Over T^2 the degree-0 class is 1⊗1"""

        x = BigradedElement("1⊗1", 0, 1)
        assert x.label == "1⊗1⊗s_1"
        assert x.pretty_label == "s_1"
        assert BigradedElement("1⊗x_1", -1, 2).pretty_label == "1⊗x_1⊗s_3"

    def test_generator_label(self):
        assert generator_label(1) == "s_1"
        assert generator_label(4) == "s_7"

    @pytest.mark.parametrize("p, j", [(1, 1), (0, 0)])
    def test_invalid(self, p, j):
        with pytest.raises(InvalidProfileError):
            BigradedElement("c", p, j)

    def test_sort_key(self):
        """Same total degree: p descending, then j"""

        elements = [
            BigradedElement("c^2", -4, 3),
            BigradedElement("1", 0, 1),
            BigradedElement("c", -2, 2),
        ]
        ordered = sorted(elements, key=lambda x: x.sort_key)
        assert [x.label for x in ordered] == ["1⊗s_1", "c⊗s_3", "c^2⊗s_5"]

    def test_json(self):
        x = BigradedElement("c", -2, 2)
        assert x.to_json() == {"c": "c", "p": -2, "j": 2, "q": 3}
        assert BigradedElement.from_json(x.to_json()) == x

    def test_json_checks_q(self):
        with pytest.raises(InvalidProfileError):
            BigradedElement.from_json({"c": "c", "p": -2, "j": 2, "q": 5})

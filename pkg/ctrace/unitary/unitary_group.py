"""Rational homotopy and homology of U_n

pi_*(U_n)⊗Q is spanned by s_1, s_3, ..., s_{2n-1}; H_*(U_n; Q) is the
exterior algebra on g_1, g_3, ..., g_{2n-1} and the Hurewicz map sends s to g
"""

from itertools import combinations

from ctrace.graded import GradedSpace, generator_label
from ctrace.shared import UNIT_LABEL, InvalidAlgebraSpecError


def _check_size(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidAlgebraSpecError(f"Matrix size n must be an int >= 1, got {n}")


def unitary_generators(n: int) -> GradedSpace:
    """<s_1, s_3, ..., s_{2n-1}> with |s_{2j-1}| = 2j - 1"""

    _check_size(n)
    return GradedSpace({2 * j - 1: [generator_label(j)] for j in range(1, n + 1)})


def _homology_label(odd_degrees: tuple[int, ...]) -> str:
    if not odd_degrees:
        return UNIT_LABEL
    return "".join(f"g_{q}" for q in odd_degrees)


def exterior_homology(n: int) -> GradedSpace:
    """Exterior algebra on g_1, ..., g_{2n-1}, one basis monomial per subset

    Its Poincaré polynomial is prod_j (1 + t^{2j-1})
    """

    _check_size(n)
    odd_degrees = [2 * j - 1 for j in range(1, n + 1)]
    basis: dict[int, list[str]] = {}
    for size in range(n + 1):
        for subset in combinations(odd_degrees, size):
            basis.setdefault(sum(subset), []).append(_homology_label(subset))
    return GradedSpace(basis)


def hurewicz_image(n: int) -> GradedSpace:
    """Span of the generators g_{2j-1} inside exterior_homology(n)

    Products such as g_1g_3 are not hit
    """

    _check_size(n)
    return GradedSpace({2 * j - 1: [f"g_{2 * j - 1}"] for j in range(1, n + 1)})

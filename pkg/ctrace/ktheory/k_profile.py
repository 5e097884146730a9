from typing import Any

from ctrace.shared import UnsupportedCaseError, ctrace_logger
from ctrace.unitary import AlgebraSpec

BOTT_NOTE: str = "dims(j) = dims(j + 2) for j >= 1 (Bott periodicity, not collapsed)"


class KProfile:
    """Z+-graded rational K-theory dimensions of A_ζ

    K_j is kept for every j >= 0 rather than collapsed mod 2, so even and
    odd dimensions are stored once and repeated on lookup
    """

    __slots__ = ("spec", "even", "odd")

    stable_period_note: str = BOTT_NOTE

    def __init__(self, spec: AlgebraSpec, even: int, odd: int) -> None:
        self.spec: AlgebraSpec = spec
        self.even: int = even
        self.odd: int = odd

    def dim(self, j: int) -> int:
        if j < 0:
            raise ValueError(f"K-theory is only defined for j >= 0, got {j}")
        return self.even if j % 2 == 0 else self.odd

    def dims(self, max_degree: int) -> dict[int, int]:
        return {j: self.dim(j) for j in range(max_degree + 1)}

    @property
    def dd_trivial(self) -> bool:
        return self.spec.dd_trivial

    @property
    def vanishes(self) -> bool:
        return self.even == 0 and self.odd == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, KProfile):
            return (self.spec, self.even, self.odd) == (
                other.spec,
                other.even,
                other.odd,
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.even, self.odd))

    def __repr__(self) -> str:
        return f"KProfile({self.spec}, even={self.even}, odd={self.odd})"

    def to_json(self) -> dict[str, Any]:
        return {"even": self.even, "odd": self.odd, "dd_trivial": self.dd_trivial}


def rational_k_theory(spec: AlgebraSpec) -> KProfile:
    """Dimensions of K_*(A_ζ)⊗Q

    Trivial Dixmier-Douady class: A_ζ is Morita equivalent to C(X), and the
    Chern character gives even = sum of even Betti numbers, odd = sum of odd.
    Nonzero class: K_*(A_ζ; Q) = 0, only established here for X = S^3
    """

    if spec.dd_trivial:
        betti = spec.space.betti_numbers
        return KProfile(spec, even=sum(betti[0::2]), odd=sum(betti[1::2]))

    if spec.space.is_sphere(3):
        ctrace_logger.debug(f"{spec}: nonzero Dixmier-Douady class over S^3")
        return KProfile(spec, even=0, odd=0)

    raise UnsupportedCaseError(
        f"Rational K-theory for a nonzero Dixmier-Douady class over "
        f"{spec.space.space_name} is not computed: the vanishing is only "
        "established for X = S^3"
    )

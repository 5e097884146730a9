from functools import cached_property

from ctrace.graded import (
    BigradedElement,
    GradedSpace,
    negate_grading,
    tensor_pairs,
    truncated_tensor,
)
from ctrace.shared import InvalidAlgebraSpecError, ctrace_logger

from .algebra_spec import AlgebraSpec
from .pi_profile import PiProfile
from .unitary_group import unitary_generators


class UnitaryHomotopyEngine:
    """Rational homotopy of the unitary group of A_ζ

    pi_*((UA_ζ)∘)⊗Q ≅ H^*(X; Q) ⊗~ <s_1, s_3, ..., s_{2n-1}> with cohomology in
    degrees <= 0 and ⊗~ keeping tensors of total degree >= 0
    """

    def __init__(self, spec: AlgebraSpec) -> None:
        self.spec: AlgebraSpec = spec

    @cached_property
    def cohomology_space(self) -> GradedSpace:
        return negate_grading(self.spec.space)

    @cached_property
    def generators(self) -> GradedSpace:
        return unitary_generators(self.spec.n)

    @cached_property
    def graded_answer(self) -> GradedSpace:
        """The ⊗~ product as a plain graded space"""

        return truncated_tensor(self.cohomology_space, self.generators)

    @cached_property
    def pi_profile(self) -> PiProfile:
        pairs = tensor_pairs(self.cohomology_space, self.generators, truncate=True)
        profile = PiProfile(
            (
                BigradedElement(
                    cohomology_label=pair.left_label,
                    cohomology_degree=pair.left_degree,
                    generator_index=(pair.right_degree + 1) // 2,
                )
                for pair in pairs
            ),
            spec=self.spec,
        )
        # Both views of the same tensor product must agree degree by degree
        assert profile.dims() == self.graded_answer.dims()
        ctrace_logger.debug(f"{self.spec}: pi dims {profile.dims()}")
        return profile

    @cached_property
    def split(self) -> tuple[PiProfile, PiProfile]:
        """(based, free) along evaluation at the basepoint

        The constant-map section makes p_* split: the free part is the
        1⊗s classes, the based part everything from reduced cohomology
        """

        if self.spec.space.betti(0) != 1:
            raise InvalidAlgebraSpecError(
                f"{self.spec.space.space_name} has b0 = {self.spec.space.betti(0)}; "
                "the based/free split needs a connected pointed space"
            )
        based = PiProfile((x for x in self.pi_profile if x.p < 0), spec=self.spec)
        free = PiProfile((x for x in self.pi_profile if x.p == 0), spec=self.spec)
        return based, free

    @property
    def pi_zero_dimension(self) -> int:
        return self.pi_profile.dim(0)

    @cached_property
    def bidegree_collisions(self) -> dict[int, tuple[BigradedElement, ...]]:
        return bidegree_collisions(self.pi_profile)


def bidegree_collisions(pi: PiProfile) -> dict[int, tuple[BigradedElement, ...]]:
    """Total degrees where two or more different bidegrees meet

    Both Z/2- and Z+-graded K-theory only see the total degree, so these
    classes land in the same K-group
    """

    return {
        degree: block
        for degree, block in pi.by_total_degree.items()
        if len({x.bidegree for x in block}) > 1
    }


##################
# Functional API #
##################


def rational_homotopy(spec: AlgebraSpec) -> PiProfile:
    return UnitaryHomotopyEngine(spec).pi_profile


def based_free_split(spec: AlgebraSpec) -> tuple[PiProfile, PiProfile]:
    return UnitaryHomotopyEngine(spec).split


def pi_zero_dimension(spec: AlgebraSpec) -> int:
    return UnitaryHomotopyEngine(spec).pi_zero_dimension

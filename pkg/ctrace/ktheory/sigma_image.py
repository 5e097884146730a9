from typing import Any

from frozendict import frozendict

from ctrace.graded import BigradedElement
from ctrace.shared import Notes, SpecMismatchError
from ctrace.unitary import AlgebraSpec, PiProfile, rational_homotopy

from .k_profile import KProfile, rational_k_theory

# Nontriviality of sigma is only known for the worked examples
CONFIDENCE: str = "per-paper-examples"


class SigmaImage:
    """Where the stabilization map σ: pi_*⊗Q -> K_{*+1}⊗Q sends each basis element

    The hits are candidate image generators, placed by degree
    """

    __slots__ = ("hits", "k_profile", "confidence")

    def __init__(
        self,
        hits: dict[int, tuple[BigradedElement, ...]],
        k_profile: KProfile,
    ) -> None:
        self.hits: frozendict[int, tuple[BigradedElement, ...]] = frozendict(
            sorted(hits.items())
        )
        self.k_profile: KProfile = k_profile
        self.confidence: str = CONFIDENCE

    @property
    def hit_degrees(self) -> frozenset[int]:
        return frozenset(self.hits)

    def labels(self, k_degree: int) -> tuple[str, ...]:
        return tuple(x.label for x in self.hits.get(k_degree, ()))

    def target_dim(self, k_degree: int) -> int:
        return self.k_profile.dim(k_degree)

    def annotation(self, k_degree: int) -> str:
        return Notes.TARGET_VANISHES.value if self.target_dim(k_degree) == 0 else ""

    def __repr__(self) -> str:
        hits = {d: self.labels(d) for d in self.hits}
        return f"SigmaImage({hits})"

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "k_degree": k_degree,
                "labels": list(self.labels(k_degree)),
                "target_dim": self.target_dim(k_degree),
            }
            for k_degree in self.hits
        ]


def sigma_image(pi: PiProfile, k: KProfile) -> SigmaImage:
    """Each element of total degree d is recorded under K-degree d + 1"""

    if pi.spec is not None and pi.spec != k.spec:
        raise SpecMismatchError(f"PiProfile of {pi.spec} vs KProfile of {k.spec}")
    hits: dict[int, list[BigradedElement]] = {}
    for element in pi:
        hits.setdefault(element.total_degree + 1, []).append(element)
    return SigmaImage({d: tuple(v) for d, v in hits.items()}, k)


def sigma_range(spec: AlgebraSpec) -> frozenset[int]:
    """K-degrees hit by σ, an invariant with values in Z+-graded K-theory

    The hit degrees only depend on the bigraded basis, so no K-theory branch
    is consulted here
    """

    return frozenset(x.total_degree + 1 for x in rational_homotopy(spec))


def distinguishes(spec_a: AlgebraSpec, spec_b: AlgebraSpec) -> bool:
    """Whether the range of σ tells the two algebras apart

    ex: M_n and M_k for n != k
    """

    return sigma_range(spec_a) != sigma_range(spec_b)


def collapse_mod_two(sigma: SigmaImage) -> dict[str, tuple[str, ...]]:
    """The σ-image seen through Z/2-graded K-theory

    Every bidegree distinction, and the Z+ degree itself, is lost
    """

    collapsed: dict[str, list[str]] = {"even": [], "odd": []}
    for k_degree in sigma.hits:
        parity = "even" if k_degree % 2 == 0 else "odd"
        collapsed[parity].extend(sigma.labels(k_degree))
    return {parity: tuple(labels) for parity, labels in collapsed.items()}


def sigma_for_spec(spec: AlgebraSpec) -> SigmaImage:
    return sigma_image(rational_homotopy(spec), rational_k_theory(spec))

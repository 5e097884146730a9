from dataclasses import dataclass
from typing import Any

from ctrace.shared import TENSOR_SEPARATOR, InvalidProfileError, is_unit_label


def generator_label(j: int) -> str:
    """Label of the odd generator s_{2j-1}"""

    return f"s_{2 * j - 1}"


@dataclass(frozen=True, slots=True)
class BigradedElement:
    """Basis tensor c⊗s_q with bidegree (p, q)

    p <= 0 is the (negated) cohomology degree of c and q = 2j - 1 is the
    degree of the generator s_q
    """

    cohomology_label: str
    cohomology_degree: int
    generator_index: int

    def __post_init__(self) -> None:
        if self.cohomology_degree > 0:
            raise InvalidProfileError(
                f"Cohomology degree must be <= 0, got {self.cohomology_degree}"
            )
        if self.generator_index < 1:
            raise InvalidProfileError(
                f"Generator index must be >= 1, got {self.generator_index}"
            )

    @property
    def p(self) -> int:
        return self.cohomology_degree

    @property
    def j(self) -> int:
        return self.generator_index

    @property
    def generator_degree(self) -> int:
        return 2 * self.generator_index - 1

    @property
    def q(self) -> int:
        return self.generator_degree

    @property
    def total_degree(self) -> int:
        return self.p + self.q

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.p, self.q

    @property
    def generator_label(self) -> str:
        return generator_label(self.generator_index)

    @property
    def label(self) -> str:
        """Canonical label, always with both factors"""

        return f"{self.cohomology_label}{TENSOR_SEPARATOR}{self.generator_label}"

    @property
    def pretty_label(self) -> str:
        """Label with the unit factor elided (1⊗s_3 and 1⊗1⊗s_3 -> s_3)"""

        if is_unit_label(self.cohomology_label):
            return self.generator_label
        return self.label

    @property
    def sort_key(self) -> tuple[int, int, int]:
        """Total degree, then p descending, then j"""

        return self.total_degree, -self.p, self.j

    def to_json(self) -> dict[str, Any]:
        return {"c": self.cohomology_label, "p": self.p, "j": self.j, "q": self.q}

    @classmethod
    def from_json(cls, json_obj: dict[str, Any]) -> "BigradedElement":
        element = cls(
            cohomology_label=str(json_obj["c"]),
            cohomology_degree=int(json_obj["p"]),
            generator_index=int(json_obj["j"]),
        )
        if "q" in json_obj and int(json_obj["q"]) != element.q:
            raise InvalidProfileError(f"q must be 2j - 1 in {json_obj}")
        return element

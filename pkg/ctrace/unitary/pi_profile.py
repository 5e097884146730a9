from collections.abc import Iterable, Iterator
from functools import cached_property
from typing import Any

from frozendict import frozendict

from ctrace.graded import BigradedElement, LaurentPolynomial
from ctrace.shared import InvalidProfileError

from .algebra_spec import AlgebraSpec


class PiProfile:
    """Bigraded basis of the rational homotopy of (UA_ζ)∘

    Elements are kept sorted by total degree, then p descending, then j
    """

    def __init__(
        self,
        elements: Iterable[BigradedElement],
        spec: AlgebraSpec | None = None,
    ) -> None:
        # Spec the profile was computed from, None when read back from JSON
        self.spec: AlgebraSpec | None = spec
        self.elements: tuple[BigradedElement, ...] = tuple(
            sorted(elements, key=lambda x: x.sort_key)
        )
        negative = [x.label for x in self.elements if x.total_degree < 0]
        if negative:
            raise InvalidProfileError(f"Elements of negative total degree: {negative}")
        labels = [x.label for x in self.elements]
        if len(set(labels)) != len(labels):
            raise InvalidProfileError("Repeated elements in a PiProfile")

    def __eq__(self, other) -> bool:
        if isinstance(other, PiProfile):
            return self.elements == other.elements
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.elements)

    def __iter__(self) -> Iterator[BigradedElement]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, label: object) -> bool:
        return label in self.labels

    def __repr__(self) -> str:
        return f"PiProfile({[f'{x.label}@{x.total_degree}' for x in self.elements]})"

    ###########
    # Queries #
    ###########

    @cached_property
    def by_total_degree(self) -> frozendict[int, tuple[BigradedElement, ...]]:
        grouped: dict[int, list[BigradedElement]] = {}
        for element in self.elements:
            grouped.setdefault(element.total_degree, []).append(element)
        return frozendict({d: tuple(v) for d, v in grouped.items()})

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(x.label for x in self.elements)

    def dim(self, degree: int) -> int:
        return len(self.by_total_degree.get(degree, ()))

    def dims(self) -> dict[int, int]:
        return {d: len(v) for d, v in self.by_total_degree.items()}

    def poincare_series(self) -> LaurentPolynomial:
        return LaurentPolynomial(self.dims())

    def element(self, label: str) -> BigradedElement:
        for x in self.elements:
            if x.label == label:
                return x
        raise KeyError(label)

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> list[dict[str, Any]]:
        return [
            {
                "total_degree": degree,
                "dim": len(block),
                "basis": [x.to_json() for x in block],
            }
            for degree, block in self.by_total_degree.items()
        ]

    @classmethod
    def from_json(cls, json_obj: list[dict[str, Any]]) -> "PiProfile":
        return cls(
            BigradedElement.from_json(x) for block in json_obj for x in block["basis"]
        )

from collections.abc import Iterable, Mapping
from typing import Any

from frozendict import frozendict

from ctrace.shared import TENSOR_SEPARATOR, UNIT_LABEL, InvalidProfileError


class CohomologyProfile:
    """Labeled basis of the rational cohomology of a space

    Degrees are stored as non-negative integers (cohomological convention).
    Negating them is left to ctrace.graded, the only owner of that convention
    """

    __slots__ = ("entries", "space_name")

    def __init__(
        self,
        entries: Mapping[int, Iterable[str]],
        space_name: str = "X",
    ) -> None:
        self.space_name: str = space_name
        self.entries: frozendict[int, tuple[str, ...]] = self._validate(entries)

    @staticmethod
    def _validate(
        entries: Mapping[int, Iterable[str]],
    ) -> frozendict[int, tuple[str, ...]]:
        """Drops empty degrees, rejects negative degrees and repeated labels"""

        validated: dict[int, tuple[str, ...]] = {}
        seen: set[str] = set()
        for degree, labels in entries.items():
            try:
                k = int(degree)
            except (TypeError, ValueError) as e:
                raise InvalidProfileError(f"Degree {degree!r} is not an int") from e
            if k < 0:
                raise InvalidProfileError(f"Cohomology degree {k} is negative")
            if not isinstance(labels, (list, tuple)):
                raise InvalidProfileError(
                    f"Degree {k} needs a list of labels, got {labels!r}"
                )
            label_tuple = tuple(str(x) for x in labels)
            repeated = seen.intersection(label_tuple) or (
                len(set(label_tuple)) != len(label_tuple)
            )
            if repeated:
                raise InvalidProfileError(f"Repeated basis labels in degree {k}")
            seen.update(label_tuple)
            if label_tuple:
                validated[k] = validated.get(k, ()) + label_tuple
        return frozendict(sorted(validated.items()))

    @classmethod
    def from_betti_numbers(
        cls, betti_numbers: Iterable[int], space_name: str = "X"
    ) -> "CohomologyProfile":
        """Auto-labels classes h{k}_{i}; a lone degree-0 class is labeled "1" """

        entries: dict[int, list[str]] = {}
        for k, b in enumerate(betti_numbers):
            if b < 0:
                raise InvalidProfileError(f"Negative Betti number b_{k} = {b}")
            if k == 0 and b == 1:
                entries[0] = [UNIT_LABEL]
            elif b:
                entries[k] = [f"h{k}_{i}" for i in range(b)]
        return cls(entries, space_name=space_name)

    def __eq__(self, other) -> bool:
        if isinstance(other, CohomologyProfile):
            return self.entries == other.entries
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"CohomologyProfile({self.space_name}, {dict(self.entries)})"

    ###########
    # Queries #
    ###########

    def betti(self, k: int) -> int:
        return len(self.entries.get(k, ()))

    def labels(self, k: int) -> tuple[str, ...]:
        return self.entries.get(k, ())

    @property
    def max_degree(self) -> int:
        return max(self.entries, default=0)

    @property
    def betti_numbers(self) -> tuple[int, ...]:
        """(b_0, ..., b_top), or () for the empty space"""

        if not self.entries:
            return ()
        return tuple(self.betti(k) for k in range(self.max_degree + 1))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(labels) for k, labels in self.entries.items())

    @property
    def is_connected(self) -> bool:
        return self.betti(0) == 1

    def is_sphere(self, k: int) -> bool:
        """Betti pattern of S^k: b_0 = b_k = 1 and nothing else"""

        return self.betti_numbers == tuple(int(i in (0, k)) for i in range(k + 1))

    def reduced(self) -> "CohomologyProfile":
        """Reduced cohomology: one degree-0 class removed"""

        if not self.betti(0):
            raise InvalidProfileError(f"{self.space_name} has nothing in degree 0")
        entries = dict(self.entries)
        entries[0] = entries[0][1:]
        return CohomologyProfile(entries, space_name=f"reduced {self.space_name}")

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> dict[str, list[str]]:
        return {str(k): list(labels) for k, labels in self.entries.items()}

    @classmethod
    def from_json(
        cls, json_obj: Mapping[str, Any], space_name: str = "X"
    ) -> "CohomologyProfile":
        if not isinstance(json_obj, Mapping):
            raise InvalidProfileError("A profile is a map from degree to labels")
        return cls(json_obj, space_name=space_name)


def kunneth(a: CohomologyProfile, b: CohomologyProfile) -> CohomologyProfile:
    """Rational Künneth: H*(A x B) is the graded tensor product

    Labels are pair labels u⊗v
    """

    entries: dict[int, list[str]] = {}
    for i, left_labels in a.entries.items():
        for j, right_labels in b.entries.items():
            entries.setdefault(i + j, []).extend(
                f"{u}{TENSOR_SEPARATOR}{v}" for u in left_labels for v in right_labels
            )
    return CohomologyProfile(
        entries, space_name=f"{a.space_name}×{b.space_name}"
    )

from collections.abc import Iterable, Iterator, Mapping
from typing import Any, NamedTuple

from frozendict import frozendict

from ctrace.shared import TENSOR_SEPARATOR, InvalidProfileError
from ctrace.spaces import CohomologyProfile

from .laurent_polynomial import LaurentPolynomial


class TensorPair(NamedTuple):
    """One basis tensor a⊗b together with the degrees of both factors"""

    left_label: str
    left_degree: int
    right_label: str
    right_degree: int

    @property
    def degree(self) -> int:
        return self.left_degree + self.right_degree

    @property
    def label(self) -> str:
        return f"{self.left_label}{TENSOR_SEPARATOR}{self.right_label}"


class GradedSpace:
    """Z-graded vector space with a labeled basis

    Degrees may be negative. Labels are unique across the whole space
    """

    __slots__ = ("basis",)

    def __init__(self, basis: Mapping[int, Iterable[str]] | None = None) -> None:
        validated: dict[int, tuple[str, ...]] = {}
        seen: set[str] = set()
        for degree, labels in (basis or {}).items():
            label_tuple = tuple(labels)
            if seen.intersection(label_tuple) or len(set(label_tuple)) != len(
                label_tuple
            ):
                raise InvalidProfileError(f"Repeated basis labels in degree {degree}")
            seen.update(label_tuple)
            if label_tuple:
                validated[int(degree)] = label_tuple
        self.basis: frozendict[int, tuple[str, ...]] = frozendict(
            sorted(validated.items())
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedSpace):
            return self.basis == other.basis
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"GradedSpace({dict(self.basis)})"

    def __iter__(self) -> Iterator[tuple[int, str]]:
        """(degree, label) pairs, by degree"""

        for degree, labels in self.basis.items():
            for label in labels:
                yield degree, label

    def __len__(self) -> int:
        return self.total_dimension

    ###########
    # Queries #
    ###########

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    def dims(self) -> dict[int, int]:
        return {degree: len(labels) for degree, labels in self.basis.items()}

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.basis)

    def labels(self, degree: int) -> tuple[str, ...]:
        return self.basis.get(degree, ())

    @property
    def total_dimension(self) -> int:
        return sum(len(labels) for labels in self.basis.values())

    def to_json(self) -> dict[str, Any]:
        return {str(k): list(v) for k, v in self.basis.items()}


##############
# Operations #
##############


def negate_grading(profile: CohomologyProfile) -> GradedSpace:
    """Cohomology placed in degrees <= 0: degree k moves to -k"""

    return GradedSpace({-k: labels for k, labels in profile.entries.items()})


def tensor_pairs(
    v: GradedSpace, w: GradedSpace, truncate: bool = False
) -> Iterator[TensorPair]:
    """Basis tensors of v⊗w, optionally only those of degree >= 0"""

    for left_degree, left_labels in v.basis.items():
        for right_degree, right_labels in w.basis.items():
            if truncate and left_degree + right_degree < 0:
                continue
            for left_label in left_labels:
                for right_label in right_labels:
                    yield TensorPair(left_label, left_degree, right_label, right_degree)


def _from_pairs(pairs: Iterable[TensorPair]) -> GradedSpace:
    basis: dict[int, list[str]] = {}
    for pair in pairs:
        basis.setdefault(pair.degree, []).append(pair.label)
    return GradedSpace(basis)


def tensor(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    """v⊗w graded by |a| + |b|"""

    return _from_pairs(tensor_pairs(v, w))


def truncated_tensor(v: GradedSpace, w: GradedSpace) -> GradedSpace:
    """v⊗w keeping only tensors of non-negative degree (degree 0 included)"""

    return _from_pairs(tensor_pairs(v, w, truncate=True))


def poincare_series(v: GradedSpace) -> LaurentPolynomial:
    return LaurentPolynomial(v.dims())

from collections.abc import Mapping
from typing import Any

from frozendict import frozendict

from ctrace.qlinalg import QMatrix, parse_rational
from ctrace.shared import InvalidProfileError, ShapeError, is_unit_label

from .cohomology_profile import CohomologyProfile


class CohomologyEndomorphism:
    """Graded linear map f* acting on a CohomologyProfile

    Column i of the degree-k block holds the image of the i-th basis label of
    degree k. Degrees without a block act as the identity
    """

    __slots__ = ("profile", "blocks")

    def __init__(
        self,
        profile: CohomologyProfile,
        blocks: Mapping[int, QMatrix] | None = None,
    ) -> None:
        self.profile: CohomologyProfile = profile
        full_blocks: dict[int, QMatrix] = {
            k: QMatrix.identity(len(labels)) for k, labels in profile.entries.items()
        }
        for degree, block in (blocks or {}).items():
            k = int(degree)
            size = profile.betti(k)
            if size == 0:
                raise InvalidProfileError(
                    f"{profile.space_name} has no classes in degree {k}"
                )
            if block.shape != (size, size):
                raise ShapeError(
                    f"Degree {k} block has shape {block.shape}, expected "
                    f"({size}, {size})"
                )
            full_blocks[k] = block
        self.blocks: frozendict[int, QMatrix] = frozendict(sorted(full_blocks.items()))

    @classmethod
    def identity(cls, profile: CohomologyProfile) -> "CohomologyEndomorphism":
        return cls(profile)

    def __eq__(self, other) -> bool:
        if isinstance(other, CohomologyEndomorphism):
            return self.profile == other.profile and self.blocks == other.blocks
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.profile, self.blocks))

    def __repr__(self) -> str:
        return f"CohomologyEndomorphism({self.profile.space_name}, {dict(self.blocks)})"

    def block(self, k: int) -> QMatrix:
        return self.blocks.get(k, QMatrix.identity(0))

    def compose(self, other: "CohomologyEndomorphism") -> "CohomologyEndomorphism":
        """self ∘ other, degree by degree"""

        if self.profile != other.profile:
            raise ShapeError("Endomorphisms of different profiles can't be composed")
        return CohomologyEndomorphism(
            self.profile,
            {k: self.blocks[k] @ other.blocks[k] for k in self.blocks},
        )

    @property
    def is_identity(self) -> bool:
        return all(
            block == QMatrix.identity(block.rows) for block in self.blocks.values()
        )

    @property
    def is_basepoint_preserving(self) -> bool:
        """The unit class in degree 0 ("1", or "1⊗1" for a product) is fixed"""

        labels = self.profile.labels(0)
        column = next((i for i, c in enumerate(labels) if is_unit_label(c)), None)
        if column is None:
            return False
        block = self.blocks[0]
        return all(
            block[row, column] == int(row == column) for row in range(block.rows)
        )

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> dict[str, Any]:
        return {
            "degree_blocks": {
                str(k): block.to_json()["entries"] for k, block in self.blocks.items()
            }
        }

    @classmethod
    def from_json(
        cls, json_obj: Mapping[str, Any], profile: CohomologyProfile
    ) -> "CohomologyEndomorphism":
        """Reads {"degree_blocks": {"3": [[2]]}}

        Entries are ints or "p/q" strings; unlisted degrees are the identity
        """

        raw_blocks = json_obj.get("degree_blocks")
        if not isinstance(raw_blocks, Mapping):
            raise InvalidProfileError("Endomorphism needs a degree_blocks map")
        blocks: dict[int, QMatrix] = {}
        for degree, rows in raw_blocks.items():
            try:
                k = int(degree)
            except ValueError as e:
                raise InvalidProfileError(f"Degree {degree!r} is not an int") from e
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise InvalidProfileError(f"Degree {k} block must be a list of rows")
            blocks[k] = QMatrix.from_rows(
                [[parse_rational(x) for x in row] for row in rows]
            )
        return cls(profile, blocks)

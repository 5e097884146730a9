from collections.abc import Iterable
from functools import cached_property
from itertools import combinations
from typing import Any

from ctrace.qlinalg import QMatrix
from ctrace.shared import InvalidComplexError, ctrace_logger

from .cohomology_profile import CohomologyProfile

Simplex = tuple[str, ...]


class SimplicialComplex:
    """Finite simplicial complex given by its facets

    The complex is the downward closure of the facets. Simplices are tuples of
    sorted vertex labels and every dimension is ordered lexicographically,
    which fixes the bases of the cochain groups
    """

    ##############
    # Init Funcs #
    ##############

    def __init__(
        self,
        vertices: Iterable[Any],
        facets: Iterable[Iterable[Any]],
        name: str = "K",
    ) -> None:
        self.name: str = name
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        self.facets: tuple[Simplex, ...] = self._normalize_facets(facets)

    def _normalize_facets(self, facets: Iterable[Iterable[Any]]) -> tuple[Simplex, ...]:
        """Validates and deduplicates facets"""

        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidComplexError(f"Duplicate vertex labels in {self.vertices}")

        vertex_set = set(self.vertices)
        normalized: set[Simplex] = set()
        for facet in facets:
            simplex = tuple(sorted({str(v) for v in facet}))
            if not simplex:
                raise InvalidComplexError("Facets must be nonempty")
            unknown = [v for v in simplex if v not in vertex_set]
            if unknown:
                raise InvalidComplexError(
                    f"Facet {list(simplex)} references unknown vertices {unknown}"
                )
            normalized.add(simplex)

        if not normalized:
            raise InvalidComplexError("A complex needs at least one facet")

        covered = {v for simplex in normalized for v in simplex}
        orphans = sorted(vertex_set - covered)
        if orphans:
            raise InvalidComplexError(f"Vertices {orphans} appear in no facet")
        return tuple(sorted(normalized))

    def __eq__(self, other) -> bool:
        if isinstance(other, SimplicialComplex):
            return set(self.vertices) == set(other.vertices) and set(
                self.simplices
            ) == set(other.simplices)
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.simplices))

    def __repr__(self) -> str:
        return f"SimplicialComplex({self.name}, f={self.f_vector})"

    #########
    # Faces #
    #########

    @cached_property
    def simplices(self) -> tuple[Simplex, ...]:
        """Every simplex of the downward closure, by dimension then lexicographic"""

        closure: set[Simplex] = set()
        for facet in self.facets:
            for size in range(1, len(facet) + 1):
                closure.update(combinations(facet, size))
        return tuple(sorted(closure, key=lambda s: (len(s), s)))

    @cached_property
    def _faces_by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        faces: dict[int, list[Simplex]] = {}
        for simplex in self.simplices:
            faces.setdefault(len(simplex) - 1, []).append(simplex)
        return {k: tuple(v) for k, v in faces.items()}

    @property
    def dimension(self) -> int:
        return max(self._faces_by_dim)

    def faces(self, k: int) -> tuple[Simplex, ...]:
        """k-simplices in lexicographic order"""

        return self._faces_by_dim.get(k, ())

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.faces(k)) for k in range(self.dimension + 1))

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * count for k, count in enumerate(self.f_vector))

    ##############
    # Cohomology #
    ##############

    def coboundary_matrix(self, k: int) -> QMatrix:
        """Matrix of the coboundary C^k -> C^{k+1}

        Rows are (k+1)-simplices and columns k-simplices. The entry for a
        (k+1)-simplex and its face missing the i-th vertex is (-1)^i
        """

        if k < 0:
            raise InvalidComplexError(f"Coboundary degree must be >= 0, got {k}")

        domain = self.faces(k)
        codomain = self.faces(k + 1)
        column_of = {simplex: j for j, simplex in enumerate(domain)}
        entries = [0] * (len(codomain) * len(domain))
        for i, simplex in enumerate(codomain):
            for omitted in range(len(simplex)):
                face = simplex[:omitted] + simplex[omitted + 1 :]
                entries[i * len(domain) + column_of[face]] = (-1) ** omitted
        return QMatrix(len(codomain), len(domain), entries)

    @cached_property
    def betti_numbers(self) -> tuple[int, ...]:
        """b_k = dim ker d^k - rank d^{k-1}"""

        betti: list[int] = []
        previous_rank = 0
        for k in range(self.dimension + 1):
            coboundary = self.coboundary_matrix(k)
            betti.append(coboundary.nullity - previous_rank)
            previous_rank = coboundary.rank
        ctrace_logger.debug(f"Betti numbers of {self.name}: {betti}")
        return tuple(betti)

    def cohomology(self) -> CohomologyProfile:
        """Rational cohomology with labels h{k}_{i}

        A connected complex gets the label "1" in degree 0
        """

        return CohomologyProfile.from_betti_numbers(
            self.betti_numbers, space_name=self.name
        )

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": list(self.vertices),
            "facets": [list(facet) for facet in self.facets],
        }

    @classmethod
    def from_json(
        cls, json_obj: dict[str, Any], name: str = "K"
    ) -> "SimplicialComplex":
        try:
            return cls(
                vertices=json_obj["vertices"], facets=json_obj["facets"], name=name
            )
        except (KeyError, TypeError) as e:
            raise InvalidComplexError(f"Malformed complex description: {e}") from e


###########################
# Standard triangulations #
###########################


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """Boundary of the (k+1)-simplex, a triangulated S^k"""

    if k < 1:
        raise InvalidComplexError(f"Sphere dimension must be >= 1, got {k}")
    vertices = [f"v{i}" for i in range(k + 2)]
    return SimplicialComplex(
        vertices=vertices,
        facets=combinations(vertices, k + 1),
        name=f"boundary of the {k + 1}-simplex",
    )


def seven_vertex_torus() -> SimplicialComplex:
    """Möbius' minimal triangulation of the torus (7 vertices, 14 triangles)"""

    facets = [
        [(i + offset) % 7 for offset in offsets]
        for i in range(7)
        for offsets in ((0, 1, 3), (0, 2, 3))
    ]
    return SimplicialComplex(vertices=range(7), facets=facets, name="T^2")


##################
# Functional API #
##################


def validate(complex_: SimplicialComplex | dict[str, Any]) -> SimplicialComplex:
    """Returns a normalized complex, raising InvalidComplexError if malformed"""

    if isinstance(complex_, SimplicialComplex):
        return complex_
    return SimplicialComplex.from_json(complex_)


def coboundary_matrix(complex_: SimplicialComplex, k: int) -> QMatrix:
    return complex_.coboundary_matrix(k)


def cohomology(complex_: SimplicialComplex) -> CohomologyProfile:
    return complex_.cohomology()


def euler_characteristic(complex_: SimplicialComplex) -> int:
    return complex_.euler_characteristic

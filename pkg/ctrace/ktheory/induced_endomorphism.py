from frozendict import frozendict

from ctrace.qlinalg import QMatrix
from ctrace.shared import ShapeError
from ctrace.spaces import CohomologyEndomorphism
from ctrace.unitary import AlgebraSpec, PiProfile, rational_homotopy


def induced_endomorphism(
    f: CohomologyEndomorphism,
    spec: AlgebraSpec,
    pi: PiProfile | None = None,
) -> frozendict[int, QMatrix]:
    """φ(h) = f*⊗1 as one matrix per total degree

    Rows and columns follow the PiProfile order inside each total degree.
    c⊗s_q maps to f*(c)⊗s_q, so the matrix is block diagonal across the
    generators s_q
    """

    space = spec.space
    if f.profile.betti_numbers != space.betti_numbers:
        raise ShapeError(
            f"Endomorphism of {f.profile.space_name} (Betti numbers "
            f"{f.profile.betti_numbers}) doesn't act on {space.space_name} "
            f"(Betti numbers {space.betti_numbers})"
        )

    pi = pi if pi is not None else rational_homotopy(spec)
    matrices: dict[int, QMatrix] = {}
    for total_degree, block in pi.by_total_degree.items():
        position = {(x.p, x.j, x.cohomology_label): i for i, x in enumerate(block)}
        entries = [[0] * len(block) for _ in block]
        for column, element in enumerate(block):
            k = -element.p
            cohomology_block = f.block(k)
            source = space.labels(k).index(element.cohomology_label)
            for target, target_label in enumerate(space.labels(k)):
                row = position[(element.p, element.j, target_label)]
                entries[row][column] = cohomology_block[target, source]
        matrices[total_degree] = QMatrix.from_rows(entries, cols=len(block))
    return frozendict(matrices)


def conjugation_endomorphism(spec: AlgebraSpec) -> CohomologyEndomorphism:
    """Inner automorphisms act trivially: U_n is path connected, so φ is 1"""

    return CohomologyEndomorphism.identity(spec.space)

from .cohomology_profile import CohomologyProfile, kunneth
from .cohomology_endomorphism import CohomologyEndomorphism
from .simplicial_complex import (
    SimplicialComplex,
    boundary_of_simplex,
    coboundary_matrix,
    cohomology,
    euler_characteristic,
    seven_vertex_torus,
    validate,
)
from .builtin_spaces import BuiltinSpaceFactory, builtin_space
from .space_loader import load_complex, load_endomorphism, load_space, read_json

__all__ = [
    "CohomologyProfile",
    "kunneth",
    "CohomologyEndomorphism",
    "SimplicialComplex",
    "boundary_of_simplex",
    "coboundary_matrix",
    "cohomology",
    "euler_characteristic",
    "seven_vertex_torus",
    "validate",
    "BuiltinSpaceFactory",
    "builtin_space",
    "load_complex",
    "load_endomorphism",
    "load_space",
    "read_json",
]

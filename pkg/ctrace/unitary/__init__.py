from .algebra_spec import AlgebraSpec
from .unitary_group import exterior_homology, hurewicz_image, unitary_generators
from .pi_profile import PiProfile
from .homotopy_engine import (
    UnitaryHomotopyEngine,
    based_free_split,
    bidegree_collisions,
    pi_zero_dimension,
    rational_homotopy,
)

__all__ = [
    "AlgebraSpec",
    "exterior_homology",
    "hurewicz_image",
    "unitary_generators",
    "PiProfile",
    "UnitaryHomotopyEngine",
    "based_free_split",
    "bidegree_collisions",
    "pi_zero_dimension",
    "rational_homotopy",
]

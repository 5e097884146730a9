from .k_profile import KProfile, rational_k_theory
from .sigma_image import (
    SigmaImage,
    collapse_mod_two,
    distinguishes,
    sigma_for_spec,
    sigma_image,
    sigma_range,
)
from .induced_endomorphism import conjugation_endomorphism, induced_endomorphism

__all__ = [
    "KProfile",
    "rational_k_theory",
    "SigmaImage",
    "collapse_mod_two",
    "distinguishes",
    "sigma_for_spec",
    "sigma_image",
    "sigma_range",
    "conjugation_endomorphism",
    "induced_endomorphism",
]

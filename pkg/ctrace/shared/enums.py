from enum import IntEnum, StrEnum


class ExitCodes(IntEnum):
    """CLI exit codes. Stable across releases, do NOT renumber"""

    SUCCESS = 0
    PARSE_ERROR = 2
    VALIDATION_ERROR = 3
    UNSUPPORTED_CASE = 4


class DDClass(StrEnum):
    """Whether the Dixmier-Douady class of the bundle vanishes"""

    TRIVIAL = "trivial"
    NONZERO = "nonzero"

    @property
    def is_trivial(self) -> bool:
        return self == DDClass.TRIVIAL


class BuiltinSpaces(StrEnum):
    """Spaces with known rational cohomology"""

    POINT = "point"
    SPHERE = "sphere"
    CP = "cp"
    TORUS = "torus"
    PRODUCT = "product"


class Notes(StrEnum):
    """Caveats attached to every report that needs them"""

    DEGREE_ZERO = (
        "Total degree 0 is reported as the rationalized component count: for "
        "X = S^3 the class x_3⊗s_3 accounts for pi_0(F(S^3, U_n)), although the "
        "isomorphism itself concerns the identity component."
    )
    SIGMA_CANDIDATES = (
        "sigma hits are candidate image generators placed by degree shift "
        "(K-degree = total degree + 1); nontriviality is only established for "
        "the worked examples (per-paper-examples confidence)."
    )
    DD_TENSION = (
        "Rational equivalence of unitary groups gives K_*(A)⊗Q ≅ Q in every degree "
        "for X = S^3, while for a nonzero Dixmier-Douady class K_*(A;Q) = 0. Both "
        "statements are reported as stated; the --dd flag selects the branch."
    )
    TARGET_VANISHES = "target vanishes"

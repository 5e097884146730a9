class ShapeError(ValueError):
    """Raised when matrix or vector dimensions don't line up"""

    pass


class InvalidComplexError(ValueError):
    """Raised when a simplicial complex is malformed

    ex: a facet references an unknown vertex, or there are no facets
    """

    pass


class InvalidProfileError(ValueError):
    """Raised when a cohomology profile, endomorphism or rational is malformed"""

    pass


class UnknownBuiltinSpaceError(ValueError):
    """Raised when a builtin space name or its parameters are rejected"""

    pass


class InvalidAlgebraSpecError(ValueError):
    """Raised when an AlgebraSpec can't be used

    ex: n < 1, empty degree 0, or a based/free split of a space with b0 != 1
    """

    pass


class SpecMismatchError(ValueError):
    """Raised when a PiProfile and KProfile come from different specs"""

    pass


class SpaceFileParseError(ValueError):
    """Raised when a space or endomorphism file can't be parsed"""

    pass


class UnsupportedCaseError(RuntimeError):
    """Raised for cases that are only established for S^3

    ex: rational K-theory for a nontrivial Dixmier-Douady class over X != S^3
    """

    pass

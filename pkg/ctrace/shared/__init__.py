from .constants import (
    COLOR_ENV_VAR,
    TENSOR_SEPARATOR,
    UNIT_LABEL,
    color_enabled,
    ctrace_logger,
    is_unit_label,
)
from .exceptions import (
    ShapeError,
    InvalidComplexError,
    InvalidProfileError,
    UnknownBuiltinSpaceError,
    InvalidAlgebraSpecError,
    SpecMismatchError,
    SpaceFileParseError,
    UnsupportedCaseError,
)
from .enums import BuiltinSpaces, DDClass, ExitCodes, Notes

__all__ = [
    "COLOR_ENV_VAR",
    "TENSOR_SEPARATOR",
    "UNIT_LABEL",
    "color_enabled",
    "ctrace_logger",
    "is_unit_label",
    "ShapeError",
    "InvalidComplexError",
    "InvalidProfileError",
    "UnknownBuiltinSpaceError",
    "InvalidAlgebraSpecError",
    "SpecMismatchError",
    "SpaceFileParseError",
    "UnsupportedCaseError",
    "BuiltinSpaces",
    "DDClass",
    "ExitCodes",
    "Notes",
]

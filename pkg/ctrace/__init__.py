from . import (  # isort: skip
    shared,
    qlinalg,
    spaces,
    graded,
    unitary,
    ktheory,
    cli,
)


__all__ = [
    "shared",
    "qlinalg",
    "spaces",
    "graded",
    "unitary",
    "ktheory",
    "cli",
]

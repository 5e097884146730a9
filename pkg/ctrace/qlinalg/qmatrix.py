from collections.abc import Iterable, Sequence
from fractions import Fraction
from functools import cached_property
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from ctrace.shared import ShapeError

from .rational import RationalVector, as_vector, format_rational, parse_rational


class QMatrix:
    """Dense, immutable matrix over the rationals

    Entries are stored row-major. Zero-dimensional matrices (0 x n, n x 0)
    are allowed, coboundaries of empty dimensions produce them
    """

    def __init__(self, rows: int, cols: int, entries: Iterable[Any] = ()) -> None:
        if rows < 0 or cols < 0:
            raise ShapeError(f"Negative shape ({rows}, {cols})")
        self.rows: int = rows
        self.cols: int = cols
        self.entries: RationalVector = as_vector(entries)
        if len(self.entries) != rows * cols:
            raise ShapeError(
                f"{len(self.entries)} entries don't fill a {rows}x{cols} matrix"
            )

    ################
    # Constructors #
    ################

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], cols: int | None = None):
        """Builds a matrix from a list of rows

        cols is only needed to shape a matrix with no rows
        """

        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ShapeError("Ragged rows")
            if cols is not None and cols != width:
                raise ShapeError(f"Rows have {width} columns, expected {cols}")
        else:
            width = cols or 0
        return cls(len(rows), width, [x for row in rows for x in row])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    ##################
    # Dunder methods #
    ##################

    def __eq__(self, other) -> bool:
        if isinstance(other, QMatrix):
            return (self.rows, self.cols, self.entries) == (
                other.rows,
                other.cols,
                other.entries,
            )
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}, {self.cols}, {self.to_json()['entries']})"

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def __matmul__(self, other):
        if isinstance(other, QMatrix):
            return self.matmul(other)
        else:
            return NotImplemented

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> RationalVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    ##############
    # Arithmetic #
    ##############

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            [self[i, j] for j in range(self.cols) for i in range(self.rows)],
        )

    def apply(self, vector: Iterable[Any]) -> RationalVector:
        """Exact matrix-vector product"""

        v = as_vector(vector)
        if len(v) != self.cols:
            raise ShapeError(
                f"Vector of length {len(v)} can't be applied to a "
                f"{self.rows}x{self.cols} matrix"
            )
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v, strict=True)), Fraction(0))
            for i in range(self.rows)
        )

    def matmul(self, other: "QMatrix") -> "QMatrix":
        """self @ other"""

        if self.cols != other.rows:
            raise ShapeError(f"Shape mismatch: {self.shape} @ {other.shape}")
        other_cols = [
            [other[i, j] for i in range(other.rows)] for j in range(other.cols)
        ]
        return QMatrix(
            self.rows,
            other.cols,
            [
                sum((a * b for a, b in zip(self.row(i), col, strict=True)), Fraction(0))
                for i in range(self.rows)
                for col in other_cols
            ],
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    ##################
    # Linear algebra #
    ##################

    @cached_property
    def domain_matrix(self) -> DomainMatrix:
        """The same matrix as a sympy DomainMatrix over QQ"""

        return DomainMatrix.from_list(
            [
                [(x.numerator, x.denominator) for x in self.row(i)]
                for i in range(self.rows)
            ],
            QQ,
        )

    @classmethod
    def from_domain_matrix(cls, dm: DomainMatrix) -> "QMatrix":
        rows, cols = dm.shape
        return cls(rows, cols, [_to_fraction(x) for x in dm.to_list_flat()])

    @property
    def _is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    @cached_property
    def rank(self) -> int:
        """Dimension of the row space

        Denominators are cleared first, then eliminated fraction-free
        (Bareiss) over ZZ
        """

        if self._is_empty:
            return 0
        _reduced, _den, pivots = self.domain_matrix.rref_den(method="CD")
        return len(pivots)

    @cached_property
    def _rref(self) -> tuple["QMatrix", tuple[int, ...]]:
        if self._is_empty:
            return self, ()
        reduced, pivots = self.domain_matrix.rref()
        return QMatrix.from_domain_matrix(reduced), tuple(pivots)

    def rref(self) -> tuple["QMatrix", tuple[int, ...]]:
        """Reduced row echelon form and pivot columns"""

        return self._rref

    @cached_property
    def kernel_basis(self) -> tuple[RationalVector, ...]:
        """Basis of {v : self @ v = 0}

        One vector per free column, free columns in ascending order, each
        with a 1 in its own free column (reduced-echelon parametrization)
        """

        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis: list[RationalVector] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for row_index, pivot_col in enumerate(pivots):
                vec[pivot_col] = -reduced[row_index, free]
            basis.append(tuple(vec))
        return tuple(basis)

    @property
    def nullity(self) -> int:
        return self.cols - self.rank

    ##############
    # JSON funcs #
    ##############

    def to_json(self) -> dict[str, Any]:
        """Rationals are written as "p/q" strings, never floats"""

        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [
                [format_rational(x) for x in self.row(i)] for i in range(self.rows)
            ],
        }

    @classmethod
    def from_json(cls, json_obj: dict[str, Any]) -> "QMatrix":
        return cls.from_rows(
            [[parse_rational(x) for x in row] for row in json_obj["entries"]],
            cols=json_obj.get("cols"),
        )


##################
# Functional API #
##################


def rank(m: QMatrix) -> int:
    return m.rank


def kernel_basis(m: QMatrix) -> tuple[RationalVector, ...]:
    return m.kernel_basis


def apply(m: QMatrix, v: Iterable[Any]) -> RationalVector:
    return m.apply(v)


def _to_fraction(x: Any) -> Fraction:
    """QQ elements (PythonMPQ or gmpy2 mpq) to Fraction"""

    return Fraction(int(x.numerator), int(x.denominator))

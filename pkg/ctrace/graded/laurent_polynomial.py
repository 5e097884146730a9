from collections.abc import Mapping
from fractions import Fraction

from frozendict import frozendict


class LaurentPolynomial:
    """Integer Laurent polynomial in t, stored as degree -> nonzero coefficient"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Mapping[int, int] | None = None) -> None:
        self.coefficients: frozendict[int, int] = frozendict(
            sorted((int(d), int(c)) for d, c in (coefficients or {}).items() if c)
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPolynomial):
            return self.coefficients == other.coefficients
        else:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            total = dict(self.coefficients)
            for d, c in other.coefficients.items():
                total[d] = total.get(d, 0) + c
            return LaurentPolynomial(total)
        else:
            return NotImplemented

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            product: dict[int, int] = {}
            for d1, c1 in self.coefficients.items():
                for d2, c2 in other.coefficients.items():
                    product[d1 + d2] = product.get(d1 + d2, 0) + c1 * c2
            return LaurentPolynomial(product)
        else:
            return NotImplemented

    def coefficient(self, degree: int) -> int:
        return self.coefficients.get(degree, 0)

    def nonnegative_part(self) -> "LaurentPolynomial":
        """Terms of degree >= 0"""

        return LaurentPolynomial(
            {d: c for d, c in self.coefficients.items() if d >= 0}
        )

    def evaluate(self, t: int | Fraction) -> Fraction:
        value = Fraction(t)
        return sum(
            (c * value**d for d, c in self.coefficients.items()), start=Fraction(0)
        )

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms: list[str] = []
        for d, c in self.coefficients.items():
            if d == 0:
                monomial = ""
            elif d == 1:
                monomial = "t"
            else:
                monomial = f"t^{d}"
            coefficient = str(abs(c)) if abs(c) != 1 or not monomial else ""
            sign = "-" if c < 0 else "+"
            terms.append(f"{sign} {coefficient}{monomial}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

"""
Formal rational combinations of normalized monomials
"""

from fractions import Fraction
from typing import Dict, Iterator, Tuple

from algebra.monomials import NormalizedMonomial, label
from arith.exact import rational_to_text


class CohClass:
    """Finite combination sum c_k x_k; zero coefficients are never stored"""

    def __init__(self, terms: Dict[Tuple, Fraction] = None):
        self.terms: Dict[Tuple, Fraction] = {}
        for key, coeff in (terms or {}).items():
            self._accumulate(key, Fraction(coeff))

    @classmethod
    def from_monomial(cls, x: NormalizedMonomial) -> "CohClass":
        if x.is_zero:
            return cls()
        return cls({x.key: x.coeff})

    def _accumulate(self, key: Tuple, coeff: Fraction) -> None:
        total = self.terms.get(key, Fraction(0)) + coeff
        if total == 0:
            self.terms.pop(key, None)
        else:
            self.terms[key] = total

    def __add__(self, other: "CohClass") -> "CohClass":
        result = CohClass(self.terms)
        for key, coeff in other.terms.items():
            result._accumulate(key, coeff)
        return result

    def scale(self, factor) -> "CohClass":
        factor = Fraction(factor)
        if factor == 0:
            return CohClass()
        return CohClass({key: coeff * factor for key, coeff in self.terms.items()})

    def monomials(self) -> Iterator[NormalizedMonomial]:
        """Terms as NormalizedMonomials, in insertion order"""
        for (f_exp, a_exp, b_set, gamma_set, gamma_full_exp), coeff in self.terms.items():
            yield NormalizedMonomial(coeff, f_exp, a_exp, b_set, gamma_set, gamma_full_exp)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, CohClass) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"CohClass({self.render()!r})"

    def render(self) -> str:
        """Text such as "b3", "-1/4 f" or "b3 - 1/2 f a" """
        if not self.terms:
            return "0"
        pieces = []
        for x in self.monomials():
            body = label(x)
            magnitude = abs(x.coeff)
            if body == "1":
                text = rational_to_text(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{rational_to_text(magnitude)} {body}"
            if not pieces:
                pieces.append(text if x.coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if x.coeff > 0 else f"- {text}")
        return " ".join(pieces)

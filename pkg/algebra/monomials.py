"""
Monomials of the graded-commutative ring generated by f, a, b_1..b_2g and gamma
classes, and their Koszul-sign normal form.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from arith.exact import rational_to_text
from utils.errors import IndexOutOfRange

F_DEGREE = 2
A_DEGREE = 4
B_DEGREE = 3
GAMMA_DEGREE = 6


@dataclass(frozen=True)
class Monomial:
    """
    A product as written: b_word keeps its order until normalize() is called.

    gamma_indices holds the gamma_k symbols, gamma_full_exp the power of the
    summed class gamma = 2 (gamma_1 + ... + gamma_g).
    """
    coeff: Fraction = Fraction(1)
    f_exp: int = 0
    a_exp: int = 0
    b_word: Tuple[int, ...] = ()
    gamma_indices: Tuple[int, ...] = ()
    gamma_full_exp: int = 0

    @property
    def degree(self) -> int:
        return (F_DEGREE * self.f_exp + A_DEGREE * self.a_exp + B_DEGREE * len(self.b_word)
                + GAMMA_DEGREE * (len(self.gamma_indices) + self.gamma_full_exp))


@dataclass(frozen=True)
class NormalizedMonomial:
    """Sorted, repeat-free normal form; coeff carries the accumulated Koszul sign"""
    coeff: Fraction = Fraction(1)
    f_exp: int = 0
    a_exp: int = 0
    b_set: Tuple[int, ...] = ()
    gamma_set: Tuple[int, ...] = ()
    gamma_full_exp: int = 0

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    @property
    def degree(self) -> int:
        return (F_DEGREE * self.f_exp + A_DEGREE * self.a_exp + B_DEGREE * len(self.b_set)
                + GAMMA_DEGREE * (len(self.gamma_set) + self.gamma_full_exp))

    @property
    def key(self) -> Tuple:
        """Everything except the coefficient; identifies the basis element"""
        return (self.f_exp, self.a_exp, self.b_set, self.gamma_set, self.gamma_full_exp)

    def with_coeff(self, coeff) -> "NormalizedMonomial":
        coeff = Fraction(coeff)
        if coeff == 0:
            return ZERO
        return NormalizedMonomial(coeff, self.f_exp, self.a_exp, self.b_set,
                                  self.gamma_set, self.gamma_full_exp)

    def __str__(self) -> str:
        return render(self)


ZERO = NormalizedMonomial(coeff=Fraction(0))
ONE = NormalizedMonomial()


def count_inversions(word: Iterable[int]) -> int:
    """Number of pairs i < j with word[i] > word[j]"""
    word = list(word)
    inversions = 0
    for i, left in enumerate(word):
        for right in word[i + 1:]:
            if left > right:
                inversions += 1
    return inversions


def koszul_sign(word: Iterable[int]) -> int:
    """Sign picked up by sorting a word of odd-degree letters"""
    return -1 if count_inversions(word) % 2 else 1


def _check_indices(b_word, gamma_indices, g: int) -> None:
    for index in b_word:
        if not 1 <= index <= 2 * g:
            raise IndexOutOfRange(f"b{index} is out of range for genus {g} (expected 1..{2 * g})")
    for index in gamma_indices:
        if not 1 <= index <= g:
            raise IndexOutOfRange(f"gamma{index} is out of range for genus {g} (expected 1..{g})")


def normalize(m: Monomial, g: int) -> NormalizedMonomial:
    """
    Bring a monomial to normal form

    The b word is sorted and the coefficient multiplied by (-1)^inversions. A
    repeated b index, or a repeated gamma_k (gamma_k^2 contains b_k twice), gives
    the zero monomial. Gamma symbols have even degree and are sorted without sign;
    the summed class gamma stays symbolic.

    Args:
        m (Monomial): Product as written
        g (int): Genus, bounding the indices

    Returns:
        NormalizedMonomial: Normal form, or ZERO
    """
    if isinstance(m, NormalizedMonomial):
        m = Monomial(m.coeff, m.f_exp, m.a_exp, m.b_set, m.gamma_set, m.gamma_full_exp)
    _check_indices(m.b_word, m.gamma_indices, g)

    coeff = Fraction(m.coeff)
    if coeff == 0:
        return ZERO
    if len(set(m.b_word)) != len(m.b_word):
        return ZERO
    if len(set(m.gamma_indices)) != len(m.gamma_indices):
        return ZERO

    coeff *= koszul_sign(m.b_word)
    return NormalizedMonomial(
        coeff=coeff,
        f_exp=m.f_exp,
        a_exp=m.a_exp,
        b_set=tuple(sorted(m.b_word)),
        gamma_set=tuple(sorted(m.gamma_indices)),
        gamma_full_exp=m.gamma_full_exp,
    )


def multiply(x: NormalizedMonomial, y: NormalizedMonomial, g: int) -> NormalizedMonomial:
    """Ring product x * y; the b sets are concatenated in that order and renormalized"""
    if x.is_zero or y.is_zero:
        return ZERO
    product = Monomial(
        coeff=x.coeff * y.coeff,
        f_exp=x.f_exp + y.f_exp,
        a_exp=x.a_exp + y.a_exp,
        b_word=x.b_set + y.b_set,
        gamma_indices=x.gamma_set + y.gamma_set,
        gamma_full_exp=x.gamma_full_exp + y.gamma_full_exp,
    )
    return normalize(product, g)


def _power(symbol: str, exponent: int):
    if exponent == 0:
        return []
    if exponent == 1:
        return [symbol]
    return [f"{symbol}^{exponent}"]


def label(x: NormalizedMonomial) -> str:
    """Canonical text of the basis element, without coefficient; "1" for the unit"""
    parts = []
    parts += _power("f", x.f_exp)
    parts += _power("a", x.a_exp)
    parts += [f"b{index}" for index in x.b_set]
    parts += [f"gamma{index}" for index in x.gamma_set]
    parts += _power("gamma", x.gamma_full_exp)
    return " ".join(parts) if parts else "1"


def render(x: NormalizedMonomial) -> str:
    """
    Canonical text including the coefficient

    Examples: "b1 b3", "-b1 b3", "-1/4 f", "1", "0".
    """
    if x.is_zero:
        return "0"
    body = label(x)
    if x.coeff == 1:
        return body
    if body == "1":
        return rational_to_text(x.coeff)
    if x.coeff == -1:
        return f"-{body}"
    return f"{rational_to_text(x.coeff)} {body}"

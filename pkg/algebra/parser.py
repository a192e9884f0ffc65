"""
Parser for monomial text
This module turns strings such as "f^2 a b1 b3 gamma" into Monomial values.

Grammar:
    monomial := term { WS term } ;
    term     := base [ "^" UINT ] ;
    base     := "f" | "a" | "b" UINT | "gamma" [ UINT ] ;

A single "*" may replace the whitespace between two terms; it may not lead, trail
or repeat. Whitespace around the whole text is ignored, and the literal "1" is
the unit monomial.
"""

import re
from fractions import Fraction

from algebra.monomials import Monomial
from utils.errors import IndexOutOfRange, MonomialSyntaxError
from utils.logging_utils import logger

# gamma must be tried before the single letters
_TERM_PATTERN = re.compile(r"(gamma(?P<gamma>\d+)?|b(?P<b>\d+)|f|a)(?:\^(?P<exp>\d+))?")
_SEPARATOR_PATTERN = re.compile(r"\s*\*\s*|\s+")
_WHITESPACE_PATTERN = re.compile(r"\s*")


def parse_monomial(text: str, g: int) -> Monomial:
    """
    Parse monomial text, honoring the written order of the b factors

    Args:
        text (str): Monomial in the grammar above
        g (int): Genus, bounding b indices by 2g and gamma indices by g

    Returns:
        Monomial: Unnormalized product; exponents expand to repeated factors

    Raises:
        MonomialSyntaxError: With the byte offset of the first bad character
        IndexOutOfRange: For an index outside its range
    """
    if text.strip() == "1":
        return Monomial()

    f_exp = 0
    a_exp = 0
    b_word = []
    gamma_indices = []
    gamma_full_exp = 0

    position = _WHITESPACE_PATTERN.match(text).end()
    if position >= len(text):
        raise MonomialSyntaxError("Empty monomial", len(text.encode("utf-8")))

    while True:
        match = _TERM_PATTERN.match(text, position)
        if not match:
            raise MonomialSyntaxError(f"Unexpected {text[position]!r}", _byte_offset(text, position))
        exponent = int(match.group("exp")) if match.group("exp") is not None else 1
        base = match.group(1)

        if match.group("b") is not None:
            index = int(match.group("b"))
            if not 1 <= index <= 2 * g:
                raise IndexOutOfRange(f"b{index} is out of range for genus {g} (expected 1..{2 * g})")
            b_word.extend([index] * exponent)
        elif base.startswith("gamma"):
            if match.group("gamma") is None:
                gamma_full_exp += exponent
            else:
                index = int(match.group("gamma"))
                if not 1 <= index <= g:
                    raise IndexOutOfRange(f"gamma{index} is out of range for genus {g} (expected 1..{g})")
                gamma_indices.extend([index] * exponent)
        elif base == "f":
            f_exp += exponent
        else:
            a_exp += exponent

        position = match.end()
        if _WHITESPACE_PATTERN.match(text, position).end() == len(text):
            break
        separator = _SEPARATOR_PATTERN.match(text, position)
        if not separator:
            raise MonomialSyntaxError(f"Expected a separator before {text[position]!r}",
                                      _byte_offset(text, position))
        if separator.end() == len(text):
            raise MonomialSyntaxError("Trailing separator", _byte_offset(text, separator.start()))
        position = separator.end()

    monomial = Monomial(Fraction(1), f_exp, a_exp, tuple(b_word), tuple(gamma_indices), gamma_full_exp)
    logger.debug(f"Parsed {text!r} as {monomial}")
    return monomial


def _byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode("utf-8"))

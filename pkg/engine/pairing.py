"""
Intersection pairings against the fundamental class of M_g

Exponent binding: m is the power of f (degree 2), n the power of a (degree 4)
and p the number of gamma factors, so an evaluation is nonzero only when
m + 2n + 3p = 3g - 3.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

from algebra.monomials import NormalizedMonomial
from arith.exact import bernoulli, binomial, factorial_quotient
from utils.errors import GenusOutOfRange, IndexOutOfRange
from utils.logging_utils import logger


class PairingConvention(str, Enum):
    """
    Global sign of the closed a^n f^m formula.

    CONSISTENT uses (-1)^g and gives the single point M_1 the value 1.
    PAPER_LITERAL uses (-1)^(g-1) as printed; it gives M_1 the value -1.
    """
    CONSISTENT = "consistent"
    PAPER_LITERAL = "paper_literal"

    @classmethod
    def from_text(cls, text: str) -> "PairingConvention":
        return cls(text.strip().lower().replace("-", "_"))


@dataclass(frozen=True)
class PairingQuery:
    g: int
    m: int
    n: int
    p: int

    @property
    def admissible(self) -> bool:
        return self.m + 2 * self.n + 3 * self.p == 3 * self.g - 3


def _sign(g: int, conv: PairingConvention) -> int:
    exponent = g if conv == PairingConvention.CONSISTENT else g - 1
    return -1 if exponent % 2 else 1


def eq5_closed_form(g: int, m: int, conv: PairingConvention = PairingConvention.CONSISTENT) -> Fraction:
    """
    Closed form of a^n f^m [M_g] (n is forced by the degree)

        sign(g) * m!/(m-g+1)! * 2^(2g-2) * (2^(m-g+1) - 2) * B_(m-g+1)

    The factorial quotient is 0 when m - g + 1 < 0.
    """
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    if m < 0:
        raise ValueError(f"f exponent must be nonnegative, got {m}")
    j = m - g + 1
    quotient = factorial_quotient(m, j)
    if quotient == 0:
        return Fraction(0)
    return _sign(g, conv) * quotient * 2 ** (2 * g - 2) * (2 ** j - 2) * bernoulli(j)


def pair_mnp(q: PairingQuery, conv: PairingConvention = PairingConvention.CONSISTENT) -> Fraction:
    """
    f^m a^n gamma^p [M_g] with the handle recursion fully unrolled

    Each gamma factor collapses one handle and contributes 2g, so the value is
    2^p g!/(g-p)! times the closed form on M_(g-p).
    """
    if q.g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {q.g}")
    if min(q.m, q.n, q.p) < 0:
        raise ValueError(f"Exponents must be nonnegative: {q}")
    if not q.admissible:
        return Fraction(0)
    return 2 ** q.p * factorial_quotient(q.g, q.g - q.p) * eq5_closed_form(q.g - q.p, q.m, conv)


def pair_gamma_subset(g: int, m: int, n: int, p: int,
                      conv: PairingConvention = PairingConvention.CONSISTENT) -> Fraction:
    """
    Common value of f^m a^n gamma_i1 ... gamma_ip [M_g] over any p distinct handles

    gamma^p expands into 2^p p! C(g, p) such terms (ordered choices of distinct
    handles), all with the same value.
    """
    if p < 0:
        raise ValueError(f"Number of gamma factors must be nonnegative, got {p}")
    total = pair_mnp(PairingQuery(g, m, n, p), conv)
    if total == 0:
        return Fraction(0)
    if p > g:
        raise IndexOutOfRange(f"Cannot choose {p} distinct handles out of {g}")
    return total / (2 ** p * factorial_quotient(p, 0) * binomial(g, p))


def b_pairs(b_set: Tuple[int, ...], g: int):
    """
    Handles k with b_set = union of {k, k+g}, or None if b_set is not such a union.

    b_set is sorted, so its lower half lists the k and its upper half the k+g.
    """
    lower = [index for index in b_set if index <= g]
    upper = [index - g for index in b_set if index > g]
    if lower != upper:
        return None
    return lower


def pair_monomial(x: NormalizedMonomial, g: int,
                  conv: PairingConvention = PairingConvention.CONSISTENT) -> Fraction:
    """
    Evaluate a normalized monomial against [M_g]

    Steps:
      - zero unless the degree is 6g - 6
      - zero unless the b set is a union of pairs {k, k+g}
      - the sorted pair union b_k1..b_kp b_(k1+g)..b_(kp+g) regroups into
        gamma_k1..gamma_kp with sign (-1)^(p(p-1)/2)
      - explicit gamma_k must avoid the handles used by the b pairs
      - gamma^q expands into 2^q times the ordered q-tuples of distinct unused
        handles; colliding tuples vanish
    """
    if x.is_zero or x.degree != 6 * g - 6:
        return Fraction(0)

    pairs = b_pairs(x.b_set, g)
    if pairs is None:
        return Fraction(0)
    if set(pairs) & set(x.gamma_set):
        return Fraction(0)

    paired = len(pairs)
    interleave = -1 if (paired * (paired - 1) // 2) % 2 else 1
    used = paired + len(x.gamma_set)
    free = g - used
    q = x.gamma_full_exp
    expansion = 2 ** q * factorial_quotient(free, free - q)
    if expansion == 0:
        return Fraction(0)

    value = pair_gamma_subset(g, x.f_exp, x.a_exp, used + q, conv)
    return x.coeff * interleave * expansion * value


def collapse_handle(x: NormalizedMonomial, i: int, g: int) -> NormalizedMonomial:
    """
    Relabel a monomial on M_g that avoids handle i onto M_(g-1)

    Deleting handle i is order preserving on the b indices, so no sign appears.
    pair_monomial(gamma_i * x, g) == pair_monomial(collapse_handle(x, i, g), g - 1).
    """
    if g < 2:
        raise GenusOutOfRange(f"Collapsing a handle needs genus at least 2, got {g}")
    if not 1 <= i <= g:
        raise IndexOutOfRange(f"Handle {i} is out of range for genus {g}")
    if i in x.b_set or i + g in x.b_set or i in x.gamma_set:
        raise IndexOutOfRange(f"Monomial involves handle {i}; it does not restrict to the collapsed space")

    def relabel_b(index: int) -> int:
        if index <= g:
            return index if index < i else index - 1
        k = index - g
        return (g - 1) + (k if k < i else k - 1)

    return NormalizedMonomial(
        coeff=x.coeff,
        f_exp=x.f_exp,
        a_exp=x.a_exp,
        b_set=tuple(relabel_b(index) for index in x.b_set),
        gamma_set=tuple(k if k < i else k - 1 for k in x.gamma_set),
        gamma_full_exp=x.gamma_full_exp,
    )


def admissible_triples(g: int) -> List[Tuple[int, int, int]]:
    """(m, n, p) with m + 2n + 3p = 3g - 3, lexicographic in (p, n, m)"""
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    target = 3 * g - 3
    triples = []
    for p in range(target // 3 + 1):
        for n in range((target - 3 * p) // 2 + 1):
            m = target - 3 * p - 2 * n
            triples.append((m, n, p))
    return triples


def table(g: int, conv: PairingConvention = PairingConvention.CONSISTENT,
          mapper=map) -> List[Tuple[int, int, int, Fraction]]:
    """
    Every admissible (m, n, p) with its pairing

    Args:
        g (int): Genus, at least 1
        conv (PairingConvention): Sign convention
        mapper: map-like callable; an executor's map evaluates rows in parallel
            while keeping their order

    Returns:
        list: (m, n, p, value) rows in (p, n, m) order
    """
    triples = admissible_triples(g)
    values = list(mapper(lambda t: pair_mnp(PairingQuery(g, *t), conv), triples))
    logger.info(f"Pairing table for genus {g}: {len(triples)} rows ({conv.value})")
    return [(m, n, p, value) for (m, n, p), value in zip(triples, values)]

"""
Exact rational arithmetic for the pairing engine
Every pairing is a Fraction; nothing in this module ever rounds.
"""

import re
import threading
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List

from utils.logging_utils import logger

_RATIONAL_PATTERN = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")

# B_0 and B_1 (first convention, B_1 = -1/2); extended on demand
_bernoulli_memo: List[Fraction] = [Fraction(1), Fraction(-1, 2)]
_bernoulli_lock = threading.Lock()


def bernoulli(k: int) -> Fraction:
    """
    Return the Bernoulli number B_k with B_1 = -1/2

    Values come from the recurrence sum_{j=0..m} C(m+1, j) B_j = 0 and are
    memoized up to the largest index requested so far.

    Args:
        k (int): Nonnegative index

    Returns:
        Fraction: B_k
    """
    if k < 0:
        raise ValueError(f"Bernoulli index must be nonnegative, got {k}")
    if k < len(_bernoulli_memo):
        return _bernoulli_memo[k]

    with _bernoulli_lock:
        # another thread may have extended the table while we waited
        while len(_bernoulli_memo) <= k:
            m = len(_bernoulli_memo)
            if m % 2 == 1:
                _bernoulli_memo.append(Fraction(0))
                continue
            # C(m+1, m) B_m = -sum_{j<m} C(m+1, j) B_j
            s = sum(comb(m + 1, j) * _bernoulli_memo[j] for j in range(m))
            _bernoulli_memo.append(-s / (m + 1))
        logger.debug(f"Bernoulli table extended to index {len(_bernoulli_memo) - 1}")
    return _bernoulli_memo[k]


def factorial_quotient(m: int, j: int) -> Fraction:
    """
    m! / j! with the reciprocal factorial of a negative integer taken as 0

    For 0 <= j <= m this is m (m-1) ... (j+1). The j < 0 branch is what makes
    the closed pairing formula vanish whenever m < g - 1.
    """
    if m < 0:
        raise ValueError(f"factorial_quotient needs m >= 0, got {m}")
    if j < 0:
        return Fraction(0)
    if j <= m:
        result = 1
        for factor in range(j + 1, m + 1):
            result *= factor
        return Fraction(result)
    return Fraction(factorial(m), factorial(j))


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n"""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def rational_to_text(x: Fraction, explicit: bool = False) -> str:
    """
    Render a rational in canonical text form

    Args:
        x (Fraction): Value to render
        explicit (bool): Keep the "/1" on integers (machine formats)

    Returns:
        str: "p/q" with q > 0 and gcd(|p|, q) = 1, or "p" for integers
    """
    x = Fraction(x)
    if x.denominator == 1 and not explicit:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of rational_to_text; accepts "p", "p/q" and "-p/q" """
    match = _RATIONAL_PATTERN.match(text)
    if not match:
        raise ValueError(f"Not a rational: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def rational_to_json(x: Fraction) -> Dict[str, str]:
    """JSON form with string fields so consumers never truncate big integers"""
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}

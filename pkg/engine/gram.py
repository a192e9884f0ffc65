"""
Gram matrices of the Poincare pairing and exact elimination over the rationals
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, List, Tuple

from algebra.classes import CohClass
from algebra.monomials import NormalizedMonomial, label, multiply
from arith.exact import rational_to_json
from engine.pairing import PairingConvention, pair_monomial
from utils.errors import DegreeOutOfRange
from utils.logging_utils import logger


def top_degree(g: int) -> int:
    return 6 * g - 6


def enumerate_monomials(g: int, d: int) -> List[NormalizedMonomial]:
    """
    All f^m a^n b_S of degree d with coefficient 1 (gamma symbols excluded)

    Canonical order: by |S|, then S lexicographically, then ascending power of f
    (equivalently descending power of a), so degree 4 on M_2 lists a before f^2.
    """
    if not 0 <= d <= top_degree(g):
        raise DegreeOutOfRange(f"Degree {d} is outside 0..{top_degree(g)} for genus {g}")

    monomials = []
    for size in range(2 * g + 1):
        remainder = d - 3 * size
        if remainder < 0:
            break
        if remainder % 2:
            continue
        for b_set in combinations(range(1, 2 * g + 1), size):
            for f_exp in range(remainder // 2 + 1):
                rest = remainder - 2 * f_exp
                if rest % 4 == 0:
                    monomials.append(NormalizedMonomial(Fraction(1), f_exp, rest // 4, b_set))
    return monomials


@dataclass
class GramMatrix:
    g: int
    d: int
    rows: List[NormalizedMonomial]
    cols: List[NormalizedMonomial]
    entries: List[List[Fraction]]

    @property
    def row_labels(self) -> List[str]:
        return [label(x) for x in self.rows]

    @property
    def col_labels(self) -> List[str]:
        return [label(x) for x in self.cols]

    def to_dict(self) -> Dict:
        return {
            "genus": self.g,
            "degree": self.d,
            "rows": self.row_labels,
            "cols": self.col_labels,
            "entries": [[rational_to_json(value) for value in row] for row in self.entries],
        }


def gram(g: int, d: int, conv: PairingConvention = PairingConvention.CONSISTENT,
         mapper=map) -> GramMatrix:
    """
    Matrix of <rows[i] * cols[j]> over degree d against degree 6g - 6 - d

    Args:
        g (int): Genus
        d (int): Row degree
        conv (PairingConvention): Sign convention
        mapper: map-like callable used for the cells; order is preserved

    Returns:
        GramMatrix: Exact entries
    """
    rows = enumerate_monomials(g, d)
    cols = enumerate_monomials(g, top_degree(g) - d)
    cells = [(i, j) for i in range(len(rows)) for j in range(len(cols))]

    def evaluate(cell: Tuple[int, int]) -> Fraction:
        i, j = cell
        value = pair_monomial(multiply(rows[i], cols[j], g), g, conv)
        logger.debug(f"<{label(rows[i])} * {label(cols[j])}>[M_{g}] = {value}")
        return value

    values = list(mapper(evaluate, cells))
    entries = [values[i * len(cols):(i + 1) * len(cols)] for i in range(len(rows))]
    logger.info(f"Gram matrix genus {g} degree {d}: {len(rows)} x {len(cols)}")
    return GramMatrix(g, d, rows, cols, entries)


def bareiss_rank(matrix: List[List[Fraction]]) -> int:
    """
    Rank by fraction-free elimination

    Rows are first cleared of denominators; every division afterwards is exact
    (each entry is a minor of the integer matrix).
    """
    work = []
    for row in matrix:
        scale = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        work.append([int(Fraction(v) * scale) for v in row])
    if not work or not work[0]:
        return 0

    n_rows, n_cols = len(work), len(work[0])
    rank = 0
    previous_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, n_rows):
            for k in range(col + 1, n_cols):
                work[r][k] = (pivot * work[r][k] - work[r][col] * work[rank][k]) // previous_pivot
            work[r][col] = 0
        previous_pivot = pivot
        rank += 1
    return rank


def null_space(matrix: List[List[Fraction]], n_cols: int) -> List[List[Fraction]]:
    """Basis of {v : matrix v = 0} from the reduced row echelon form"""
    work = [[Fraction(v) for v in row] for row in matrix]
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(row, len(work)) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[row], work[pivot_row] = work[pivot_row], work[row]
        pivot = work[row][col]
        work[row] = [v / pivot for v in work[row]]
        for r in range(len(work)):
            if r != row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
        if row == len(work):
            break

    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        vector = [Fraction(0)] * n_cols
        vector[free] = Fraction(1)
        for r, col in enumerate(pivots):
            vector[col] = -work[r][free]
        basis.append(vector)
    return basis


def rank_and_radical(gm: GramMatrix) -> Tuple[int, List[CohClass]]:
    """
    Exact rank and a basis of the left kernel, as combinations of row monomials

    A row combination in the radical pairs to zero with every complementary
    monomial, so it is invisible to the pairing (for instance a^g).
    """
    rank = bareiss_rank(gm.entries)
    transpose = [[gm.entries[i][j] for i in range(len(gm.rows))] for j in range(len(gm.cols))]
    radical = []
    for vector in null_space(transpose, len(gm.rows)):
        element = CohClass()
        for coeff, x in zip(vector, gm.rows):
            if coeff != 0:
                element = element + CohClass.from_monomial(x.with_coeff(coeff))
        radical.append(element)
    logger.info(f"Gram genus {gm.g} degree {gm.d}: rank {rank}, radical dimension {len(radical)}")
    return rank, radical

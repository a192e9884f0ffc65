"""
Numerical checks on the fiber M_g = mu^-1(-I) in SU(2)^2g

mu(A_1..A_g, B_1..B_g) = [A_1, B_1] ... [A_g, B_g]. The checks measure the rank
of d mu (regular value), the rank of the infinitesimal conjugation action
(freeness modulo the center) and the resulting dimension counts.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import pi
from typing import Dict, List, Sequence, Tuple

import numpy as np

from geometry.quaternion import I, J, K, MINUS_ONE, NORM_TOLERANCE, ONE, UnitQuaternion
from utils.errors import DegenerateInput, GenusOutOfRange, IndexOutOfRange, StepTooLarge
from utils.logging_utils import logger

RANK_CUTOFF = 1e-6
DEFAULT_STEP = 1e-5
MAX_STEP = 1e-2
STEPS = (1e-4, 1e-5, 1e-6)
EXPECTED_RANK = 3  # dim SU(2)


@dataclass(frozen=True)
class SU2Tuple:
    A: Tuple[UnitQuaternion, ...]
    B: Tuple[UnitQuaternion, ...]

    def __post_init__(self):
        if len(self.A) != len(self.B) or not self.A:
            raise GenusOutOfRange(f"Need g >= 1 matching A and B components, got {len(self.A)} and {len(self.B)}")
        drifted = [k for k, c in enumerate(self.A + self.B) if not c.is_unit()]
        if drifted:
            raise DegenerateInput(f"Components {drifted} are not unit quaternions within {NORM_TOLERANCE}")

    @property
    def genus(self) -> int:
        return len(self.A)

    def components(self) -> List[UnitQuaternion]:
        return list(self.A) + list(self.B)

    @classmethod
    def from_components(cls, components: Sequence[UnitQuaternion]) -> "SU2Tuple":
        g = len(components) // 2
        return cls(tuple(components[:g]), tuple(components[g:]))

    def conjugate(self, u: UnitQuaternion) -> "SU2Tuple":
        u_inv = u.inverse()
        return SU2Tuple(tuple((u * a * u_inv).normalized() for a in self.A),
                        tuple((u * b * u_inv).normalized() for b in self.B))


def commutator(a: UnitQuaternion, b: UnitQuaternion) -> UnitQuaternion:
    return a * b * a.inverse() * b.inverse()


def mu(t: SU2Tuple) -> UnitQuaternion:
    """Ordered product of the commutators [A_j, B_j], renormalized once at the end"""
    result = ONE
    for a, b in zip(t.A, t.B):
        result = result * commutator(a, b)
    return result.normalized()


def mu_residual(t: SU2Tuple) -> float:
    return mu(t).distance(MINUS_ONE)


def base_point(g: int) -> SU2Tuple:
    """A = (i, 1, ..., 1), B = (j, 1, ..., 1); [i, j] = -1 and the other handles are trivial"""
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    return SU2Tuple((I,) + (ONE,) * (g - 1), (J,) + (ONE,) * (g - 1))


def _random_unit(rng: np.random.Generator, size: int) -> np.ndarray:
    v = rng.standard_normal(size)
    return v / np.linalg.norm(v)


def random_fiber_point(g: int, seed: int) -> SU2Tuple:
    """
    A point of mu^-1(-I) built algebraically

    The first handle is the base pair conjugated by a uniform u; every other
    handle is a commuting pair exp(s n), exp(t n) around one random axis n.
    """
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    rng = np.random.default_rng(seed)
    u = UnitQuaternion.from_array(_random_unit(rng, 4))
    u_inv = u.inverse()
    a_parts = [u * I * u_inv]
    b_parts = [u * J * u_inv]
    for _ in range(g - 1):
        axis = _random_unit(rng, 3)
        s, t = rng.uniform(-pi, pi, size=2)
        a_parts.append(UnitQuaternion.exp(axis, float(s)))
        b_parts.append(UnitQuaternion.exp(axis, float(t)))
    return SU2Tuple(tuple(a_parts), tuple(b_parts))


def embed_lower_genus(t: SU2Tuple, i: int) -> SU2Tuple:
    """Insert a trivial handle at position i (1-based); mu is unchanged"""
    if not 1 <= i <= t.genus + 1:
        raise IndexOutOfRange(f"Handle {i} is out of range for genus {t.genus + 1}")
    return SU2Tuple(t.A[:i - 1] + (ONE,) + t.A[i - 1:], t.B[:i - 1] + (ONE,) + t.B[i - 1:])


def _numerical_rank(matrix: np.ndarray) -> Tuple[int, float]:
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if singular_values.size == 0:
        return 0, 0.0
    largest = float(singular_values[0])
    if largest == 0:
        return 0, largest
    return int(np.sum(singular_values / largest > RANK_CUTOFF)), largest


def jacobian(t: SU2Tuple, h: float = DEFAULT_STEP) -> np.ndarray:
    """
    Central-difference Jacobian of mu, a 4 x 6g matrix

    Column (c, e) perturbs component c to c * exp(+-h e) for e in {i, j, k}.
    """
    components = t.components()
    columns = []
    for c in range(len(components)):
        for direction in (I, J, K):
            axis = (direction.x, direction.y, direction.z)
            plus = list(components)
            minus = list(components)
            plus[c] = components[c] * UnitQuaternion.exp(axis, h)
            minus[c] = components[c] * UnitQuaternion.exp(axis, -h)
            delta = mu(SU2Tuple.from_components(plus)).as_array() - mu(SU2Tuple.from_components(minus)).as_array()
            columns.append(delta / (2 * h))
    return np.column_stack(columns)


def jacobian_rank(t: SU2Tuple, h: float = DEFAULT_STEP) -> int:
    """
    Numerical rank of d mu at t; 3 means mu is a submersion there

    Raises:
        StepTooLarge: h > 1e-2
        DegenerateInput: the largest singular value is below 1e-12
    """
    if h <= 0:
        raise ValueError(f"Finite-difference step must be positive, got {h}")
    if h > MAX_STEP:
        raise StepTooLarge(f"Finite-difference step {h} exceeds {MAX_STEP}")
    rank, largest = _numerical_rank(jacobian(t, h))
    if largest < 1e-12:
        raise DegenerateInput(f"Jacobian vanishes at this point (largest singular value {largest:.3e})")
    return rank


def stabilizer_rank(t: SU2Tuple) -> int:
    """
    Rank of q -> (q A_k - A_k q, q B_k - B_k q)_k on the quaternions

    Rank 3 means the kernel is the real line, so only +-1 fix the tuple under
    conjugation.
    """
    blocks = [c.right_matrix() - c.left_matrix() for c in t.components()]
    rank, _ = _numerical_rank(np.vstack(blocks))
    return rank


@dataclass(frozen=True)
class DimensionReport:
    genus: int
    ambient: int
    fiber: int
    quotient: int

    def to_dict(self) -> Dict[str, int]:
        return {"ambient": self.ambient, "fiber": self.fiber, "quotient": self.quotient}


def dimension_report(g: int) -> DimensionReport:
    """Ambient 6g, fiber 6g - rank d mu, quotient fiber - stabilizer rank, measured at base_point(g)"""
    point = base_point(g)
    ambient = 6 * g
    fiber = ambient - jacobian_rank(point)
    quotient = fiber - stabilizer_rank(point)
    logger.info(f"Dimensions for genus {g}: ambient {ambient}, fiber {fiber}, quotient {quotient}")
    return DimensionReport(g, ambient, fiber, quotient)


@dataclass
class RepVarietyReport:
    genus: int
    samples: int
    mu_residual_max: float
    jacobian_rank_histogram: Dict[int, int]
    stabilizer_rank_histogram: Dict[int, int]
    dims: DimensionReport
    failures: List[Dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "genus": self.genus,
            "samples": self.samples,
            "mu_residual_max": self.mu_residual_max,
            "jacobian_rank_histogram": {str(k): v for k, v in sorted(self.jacobian_rank_histogram.items())},
            "stabilizer_rank_histogram": {str(k): v for k, v in sorted(self.stabilizer_rank_histogram.items())},
            "dims": self.dims.to_dict(),
            "failures": self.failures,
            "passed": self.passed,
        }


def _check_sample(args) -> Dict:
    g, seed, steps = args
    point = random_fiber_point(g, seed)
    residual = mu_residual(point)
    ranks = {step: jacobian_rank(point, step) for step in steps}
    return {
        "seed": seed,
        "residual": residual,
        "jacobian_ranks": ranks,
        "stabilizer_rank": stabilizer_rank(point),
    }


def verify_samples(g: int, seed: int, samples: int, tol: float = 1e-12,
                   steps: Sequence[float] = STEPS, mapper=map) -> RepVarietyReport:
    """
    Run the fiber, regularity and freeness checks on seeded sample points

    Sample k uses seed + k, so batches can run in any order; results are
    aggregated in seed order. The rank histograms use the default step, the
    other steps only have to agree with it.
    """
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    if DEFAULT_STEP not in steps:
        steps = tuple(steps) + (DEFAULT_STEP,)
    results = list(mapper(_check_sample, [(g, seed + k, tuple(steps)) for k in range(samples)]))

    failures = []
    for result in results:
        problems = []
        if result["residual"] > tol:
            problems.append(f"mu residual {result['residual']:.3e} exceeds {tol:.1e}")
        bad_steps = [step for step, rank in result["jacobian_ranks"].items() if rank != EXPECTED_RANK]
        if bad_steps:
            problems.append(f"jacobian rank != {EXPECTED_RANK} at steps {bad_steps}")
        if result["stabilizer_rank"] != EXPECTED_RANK:
            problems.append(f"stabilizer rank {result['stabilizer_rank']} != {EXPECTED_RANK}")
        if problems:
            failures.append({"seed": result["seed"], "problems": problems})

    report = RepVarietyReport(
        genus=g,
        samples=samples,
        mu_residual_max=max((r["residual"] for r in results), default=0.0),
        jacobian_rank_histogram=dict(Counter(r["jacobian_ranks"][DEFAULT_STEP] for r in results)),
        stabilizer_rank_histogram=dict(Counter(r["stabilizer_rank"] for r in results)),
        dims=dimension_report(g),
        failures=failures,
    )
    if failures:
        logger.error(f"Rep-variety check for genus {g}: {len(failures)} of {samples} samples failed")
    else:
        logger.info(f"Rep-variety check for genus {g}: {samples} samples passed")
    return report

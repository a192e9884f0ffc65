"""
Dual partners of the ring generators and pairing-level checks

The Poincare dual of a generator x is characterized by the functional
<x * -> on the complementary degree; a dual partner is a complementary class
pairing to 1 with x.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from algebra.classes import CohClass
from algebra.monomials import NormalizedMonomial, label, multiply
from arith.exact import rational_to_text
from engine.gram import enumerate_monomials, top_degree
from engine.pairing import PairingConvention, collapse_handle, pair_monomial
from utils.errors import (DegreeOutOfRange, GenusOutOfRange, IndexOutOfRange, MonomialSyntaxError,
                          NoDualFound)
from utils.logging_utils import logger

_GENERATOR_PATTERN = re.compile(r"^(f|a|b(\d+))$")


def parse_generator(token: str, g: int) -> NormalizedMonomial:
    """Turn "f", "a" or "b<k>" (1 <= k <= 2g) into the generator monomial"""
    match = _GENERATOR_PATTERN.match(token.strip())
    if not match:
        raise MonomialSyntaxError(f"Unknown generator {token!r}; expected f, a or b1..b{2 * g}", 0)
    if match.group(1) == "f":
        return NormalizedMonomial(f_exp=1)
    if match.group(1) == "a":
        return NormalizedMonomial(a_exp=1)
    index = int(match.group(2))
    if not 1 <= index <= 2 * g:
        raise IndexOutOfRange(f"b{index} is out of range for genus {g} (expected 1..{2 * g})")
    return NormalizedMonomial(b_set=(index,))


def functional(g: int, x: NormalizedMonomial, conv: PairingConvention = PairingConvention.CONSISTENT,
               mapper=map) -> List[Fraction]:
    """Pairings <x * y> for y over enumerate_monomials(g, 6g - 6 - deg x), in canonical order"""
    if x.degree > top_degree(g):
        raise DegreeOutOfRange(f"Degree {x.degree} exceeds {top_degree(g)} for genus {g}")
    basis = enumerate_monomials(g, top_degree(g) - x.degree)
    return list(mapper(lambda y: pair_monomial(multiply(x, y, g), g, conv), basis))


def dual_partner(g: int, generator, conv: PairingConvention = PairingConvention.CONSISTENT,
                 mapper=map) -> CohClass:
    """
    Complementary class y with <generator * y>[M_g] = 1

    y is supported on the first monomial, in canonical order, that pairs
    nontrivially with the generator. Any other partner differs from it by an
    element of the radical.

    Args:
        g (int): Genus, at least 2
        generator: NormalizedMonomial or token "f", "a", "b<k>"
        conv (PairingConvention): Sign convention

    Returns:
        CohClass: The partner
    """
    partner, _, _ = dual_partner_with_functional(g, generator, conv, mapper)
    return partner


def dual_partner_with_functional(g: int, generator, conv: PairingConvention = PairingConvention.CONSISTENT,
                                 mapper=map) -> Tuple[CohClass, List[NormalizedMonomial], List[Fraction]]:
    """dual_partner together with the complementary basis and the functional it was read from"""
    if g < 2:
        raise GenusOutOfRange(f"Dual partners need genus at least 2, got {g}")
    if isinstance(generator, str):
        generator = parse_generator(generator, g)

    values = functional(g, generator, conv, mapper)
    basis = enumerate_monomials(g, top_degree(g) - generator.degree)
    for y, value in zip(basis, values):
        if value != 0:
            partner = CohClass.from_monomial(y.with_coeff(1 / value))
            logger.info(f"Dual partner of {label(generator)} on M_{g}: {partner.render()}")
            return partner, basis, values
    logger.error(f"No complementary monomial pairs with {label(generator)} on M_{g}")
    raise NoDualFound(f"Every complementary monomial pairs to zero with {label(generator)} on M_{g}")


@dataclass
class NewsteadReport:
    genus: int
    vacuous: bool
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "genus": self.genus,
            "vacuous": self.vacuous,
            "checked": self.checked,
            "violations": self.violations,
            "passed": self.passed,
        }


def newstead_check(g: int, conv: PairingConvention = PairingConvention.CONSISTENT,
                   mapper=map) -> NewsteadReport:
    """
    Check that a^g pairs to zero with every complementary monomial

    For g < 3 the class a^g has degree above 6g - 6 and the check is vacuous.
    """
    if g < 1:
        raise GenusOutOfRange(f"Genus must be at least 1, got {g}")
    a_power = NormalizedMonomial(a_exp=g)
    if a_power.degree > top_degree(g):
        logger.warning(f"Newstead check on M_{g} is vacuous: deg a^{g} = {4 * g} > {top_degree(g)}")
        return NewsteadReport(genus=g, vacuous=True)

    complements = enumerate_monomials(g, top_degree(g) - a_power.degree)
    values = list(mapper(lambda z: pair_monomial(multiply(a_power, z, g), g, conv), complements))
    violations = [
        f"a^{g} * {label(z)} = {rational_to_text(value)}"
        for z, value in zip(complements, values) if value != 0
    ]
    report = NewsteadReport(genus=g, vacuous=False, checked=len(complements), violations=violations)
    if violations:
        logger.error(f"Newstead check on M_{g}: {len(violations)} violations")
    else:
        logger.info(f"Newstead check on M_{g}: {report.checked} pairings vanish")
    return report


@dataclass
class CollapseReport:
    genus: int
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {"genus": self.genus, "checked": self.checked,
                "violations": self.violations, "passed": self.passed}


def handle_collapse_check(g: int, conv: PairingConvention = PairingConvention.CONSISTENT) -> CollapseReport:
    """
    Compare gamma_i * x on M_g with the collapsed x on M_(g-1)

    Runs over every handle i and every monomial x of degree 6g - 12 that
    avoids handle i.
    """
    if g < 2:
        raise GenusOutOfRange(f"Collapsing a handle needs genus at least 2, got {g}")
    report = CollapseReport(genus=g)
    for i in range(1, g + 1):
        gamma_i = NormalizedMonomial(gamma_set=(i,))
        for x in enumerate_monomials(g, top_degree(g) - 6):
            if i in x.b_set or i + g in x.b_set:
                continue
            upstairs = pair_monomial(multiply(gamma_i, x, g), g, conv)
            downstairs = pair_monomial(collapse_handle(x, i, g), g - 1, conv)
            report.checked += 1
            if upstairs != downstairs:
                report.violations.append(
                    f"handle {i}, {label(x)}: {rational_to_text(upstairs)} != {rational_to_text(downstairs)}")
    logger.info(f"Handle collapse check on M_{g}: {report.checked} cases, {len(report.violations)} violations")
    return report

"""
Tests for dual partners and the pairing-level checks
"""

from fractions import Fraction

import pytest

import engine.duality as duality
from algebra.monomials import NormalizedMonomial, multiply
from engine.duality import dual_partner, functional, newstead_check, parse_generator
from engine.pairing import PairingConvention, pair_monomial
from utils.errors import DegreeOutOfRange, GenusOutOfRange, IndexOutOfRange, MonomialSyntaxError, NoDualFound


@pytest.mark.parametrize("generator, expected", [
    ("b1", "b3"),
    ("b2", "b4"),
    ("b3", "-b1"),
    ("a", "-1/4 f"),
    ("f", "-1/4 a"),
])
def test_dual_partners_on_m2(generator, expected):
    assert dual_partner(2, generator).render() == expected


def test_partner_pairs_to_one():
    for g in range(2, 5):
        tokens = ["f", "a"] + [f"b{k}" for k in range(1, 2 * g + 1)]
        for token in tokens:
            generator = parse_generator(token, g)
            partner = dual_partner(g, generator)
            total = sum(pair_monomial(multiply(generator, y, g), g) for y in partner.monomials())
            assert total == 1, token


def test_partner_flips_with_convention():
    consistent = dual_partner(3, "a")
    literal = dual_partner(3, "a", PairingConvention.PAPER_LITERAL)
    assert literal == consistent.scale(-1)


def test_dual_needs_genus_two():
    with pytest.raises(GenusOutOfRange):
        dual_partner(1, "f")


def test_functional_values():
    assert functional(2, NormalizedMonomial(b_set=(1,))) == [0, 0, 1, 0]
    assert functional(2, NormalizedMonomial(f_exp=1)) == [-4, 4]
    assert functional(1, NormalizedMonomial()) == [1]


def test_functional_rejects_excess_degree():
    with pytest.raises(DegreeOutOfRange):
        functional(2, NormalizedMonomial(a_exp=2))


@pytest.mark.parametrize("token, g, error", [
    ("x", 2, MonomialSyntaxError),
    ("f2", 2, MonomialSyntaxError),
    ("gamma", 2, MonomialSyntaxError),
    ("b5", 2, IndexOutOfRange),
    ("b0", 2, IndexOutOfRange),
])
def test_parse_generator_errors(token, g, error):
    with pytest.raises(error):
        parse_generator(token, g)


def test_parse_generator_values():
    assert parse_generator("f", 2) == NormalizedMonomial(f_exp=1)
    assert parse_generator(" a ", 2) == NormalizedMonomial(a_exp=1)
    assert parse_generator("b4", 2) == NormalizedMonomial(b_set=(4,))


def test_no_dual_found(monkeypatch):
    monkeypatch.setattr(duality, "functional", lambda g, x, conv, mapper: [Fraction(0)] * 4)
    with pytest.raises(NoDualFound):
        dual_partner(2, "b1")


def test_newstead_vacuous_below_genus_three():
    for g in (1, 2):
        report = newstead_check(g)
        assert report.vacuous
        assert report.passed
        assert report.checked == 0


@pytest.mark.parametrize("g, checked", [(3, 1), (4, 1)])
def test_newstead_small_genus(g, checked):
    report = newstead_check(g)
    assert not report.vacuous
    assert report.checked == checked
    assert report.passed


def test_newstead_holds_up_to_genus_eight():
    for g in range(3, 9):
        report = newstead_check(g)
        assert report.passed, report.violations
        assert report.to_dict()["passed"] is True


def test_newstead_holds_under_either_convention():
    assert newstead_check(5, PairingConvention.PAPER_LITERAL).passed

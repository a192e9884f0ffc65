"""
Tests for intersection pairings on M_g
"""

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from algebra.monomials import Monomial, NormalizedMonomial, multiply, normalize
from algebra.parser import parse_monomial
from arith.exact import binomial, factorial_quotient
from engine.duality import handle_collapse_check
from engine.pairing import (PairingConvention, PairingQuery, admissible_triples, collapse_handle,
                            eq5_closed_form, pair_gamma_subset, pair_mnp, pair_monomial, table)
from utils.errors import GenusOutOfRange, IndexOutOfRange

CONSISTENT = PairingConvention.CONSISTENT
LITERAL = PairingConvention.PAPER_LITERAL


def pair_text(text, g):
    return pair_monomial(normalize(parse_monomial(text, g), g), g)


def transposition_sign(word, target):
    """Sign of sorting word into target order by explicit adjacent swaps of odd letters"""
    word = list(word)
    sign = 1
    for position, letter in enumerate(target):
        k = word.index(letter, position)
        while k > position:
            word[k - 1], word[k] = word[k], word[k - 1]
            sign = -sign
            k -= 1
    return sign


def oracle_pair_b_word(word, g, m):
    """f^m b_word on M_g without the normal form: zero unless the letters form handle pairs"""
    if len(set(word)) != len(word):
        return Fraction(0)
    handles = sorted(index for index in word if index <= g)
    if sorted(word) != sorted(handles + [k + g for k in handles]):
        return Fraction(0)
    p = len(handles)
    if m + 3 * p != 3 * g - 3:
        return Fraction(0)
    target = [letter for k in handles for letter in (k, k + g)]
    return transposition_sign(word, target) * pair_gamma_subset(g, m, 0, p)


@pytest.mark.parametrize("g, m, expected", [
    (1, 0, 1),
    (2, 3, 4),
    (2, 1, -4),
    (3, 0, 0),
    (3, 6, 224),
    (3, 4, -64),
    (3, 2, 32),
])
def test_eq5_closed_form_values(g, m, expected):
    assert eq5_closed_form(g, m, CONSISTENT) == expected


def test_literal_sign_contradicts_single_point():
    # M_1 is one point, so the empty pairing must be 1; only the consistent sign gives that
    assert eq5_closed_form(1, 0, LITERAL) == -1
    assert eq5_closed_form(1, 0, CONSISTENT) == 1
    assert pair_mnp(PairingQuery(2, 0, 0, 1), LITERAL) == -4
    assert pair_mnp(PairingQuery(2, 0, 0, 1), CONSISTENT) == 4


def test_conventions_differ_by_global_sign():
    for g in range(1, 7):
        for m in range(3 * g):
            assert eq5_closed_form(g, m, LITERAL) == -eq5_closed_form(g, m, CONSISTENT)


@pytest.mark.parametrize("query, expected", [
    (PairingQuery(1, 0, 0, 0), 1),
    (PairingQuery(2, 0, 0, 1), 4),
    (PairingQuery(3, 0, 0, 2), 24),
    (PairingQuery(2, 1, 1, 0), -4),
    (PairingQuery(3, 0, 3, 0), 0),
    (PairingQuery(2, 1, 0, 0), 0),
])
def test_pair_mnp_values(query, expected):
    assert pair_mnp(query) == expected


def test_pair_mnp_rejects_genus_zero():
    with pytest.raises(GenusOutOfRange):
        pair_mnp(PairingQuery(0, 0, 0, 0))


def test_recursion_matches_closed_form():
    checked = 0
    for g in range(2, 9):
        for m, n, p in admissible_triples(g):
            if p >= 1:
                assert pair_mnp(PairingQuery(g, m, n, p)) == 2 * g * pair_mnp(PairingQuery(g - 1, m, n, p - 1))
                checked += 1
    assert checked > 100


@pytest.mark.parametrize("g, m, n, p, expected", [
    (2, 0, 0, 1, 1),
    (3, 0, 0, 2, 1),
    (3, 1, 1, 1, -4),
    (3, 1, 0, 1, 0),
])
def test_pair_gamma_subset_values(g, m, n, p, expected):
    assert pair_gamma_subset(g, m, n, p) == expected


def test_expansion_normalization():
    for g in range(1, 8):
        for m, n, p in admissible_triples(g):
            expected = pair_mnp(PairingQuery(g, m, n, p))
            count = 2 ** p * factorial_quotient(p, 0) * binomial(g, p)
            assert count * pair_gamma_subset(g, m, n, p) == expected


def test_gamma_power_term_by_term_expansion():
    # gamma^p = 2^p * sum over all p-tuples of handles of gamma_k1 ... gamma_kp
    for g in range(1, 6):
        for m, n, p in admissible_triples(g):
            total = Fraction(0)
            for handles in itertools.product(range(1, g + 1), repeat=p):
                term = normalize(Monomial(f_exp=m, a_exp=n, gamma_indices=handles), g)
                total += 2 ** p * pair_monomial(term, g)
            assert total == pair_mnp(PairingQuery(g, m, n, p))
            symbolic = normalize(Monomial(f_exp=m, a_exp=n, gamma_full_exp=p), g)
            assert pair_monomial(symbolic, g) == total


def test_all_gamma_pairings_have_two_to_g_g_factorial():
    for g in range(2, 6):
        assert pair_mnp(PairingQuery(g, 0, 0, g - 1)) == 2 ** (g - 1) * factorial_quotient(g, 1)


@pytest.mark.parametrize("text, g, expected", [
    ("b1 b3", 2, 1),
    ("b3 b1", 2, -1),
    ("b1 b2 b4 b5", 3, -1),
    ("gamma gamma1", 3, 4),
    ("b1 b2", 2, 0),
    ("gamma", 2, 4),
    ("gamma1", 2, 1),
    ("gamma^2", 3, 24),
    ("b1 b4 gamma1", 3, 0),
    ("b1 b4 gamma2", 3, 1),
    ("f a", 2, -4),
])
def test_pair_monomial_values(text, g, expected):
    assert pair_text(text, g) == expected


def test_gamma_sum_against_gamma_k():
    g = 3
    gamma_square = pair_text("gamma^2", g)
    assert sum(pair_text(f"gamma gamma{k}", g) for k in range(1, g + 1)) == gamma_square / 2


def test_degree_gate():
    rng = random.Random(17)
    for _ in range(500):
        g = rng.randint(1, 6)
        x = normalize(Monomial(
            Fraction(1), rng.randint(0, 6), rng.randint(0, 4),
            tuple(rng.sample(range(1, 2 * g + 1), rng.randint(0, min(4, 2 * g)))),
            tuple(rng.sample(range(1, g + 1), rng.randint(0, min(2, g)))), rng.randint(0, 2)), g)
        if x.degree != 6 * g - 6:
            assert pair_monomial(x, g) == 0


def test_b_sets_that_are_not_handle_pairs_vanish_exhaustively():
    for g in range(1, 4):
        for size in range(2 * g + 1):
            for b_set in itertools.combinations(range(1, 2 * g + 1), size):
                lower = {k for k in b_set if k <= g}
                upper = {k - g for k in b_set if k > g}
                for m in range(3 * g):
                    x = NormalizedMonomial(f_exp=m, b_set=b_set)
                    if lower != upper:
                        assert pair_monomial(x, g) == 0
                    assert pair_monomial(x, g) == oracle_pair_b_word(b_set, g, m)


def test_random_b_words_match_sign_oracle():
    rng = random.Random(2024)
    for _ in range(10_000):
        g = rng.randint(1, 6)
        length = rng.randint(0, min(8, 2 * g))
        if rng.random() < 0.5 and length // 2 <= g:
            handles = rng.sample(range(1, g + 1), length // 2)
            word = [letter for k in handles for letter in (k, k + g)]
            rng.shuffle(word)
        else:
            word = [rng.randint(1, 2 * g) for _ in range(length)]
        m = 3 * g - 3 - 3 * (len(word) // 2)
        if m < 0:
            continue
        x = normalize(Monomial(f_exp=m, b_word=tuple(word)), g)
        assert pair_monomial(x, g) == oracle_pair_b_word(word, g, m)


def test_pair_value_independent_of_handle_choice():
    for g in range(1, 6):
        for m, n, p in admissible_triples(g):
            values = {
                pair_monomial(NormalizedMonomial(f_exp=m, a_exp=n, gamma_set=subset), g)
                for subset in itertools.combinations(range(1, g + 1), p)
            }
            assert values == {pair_gamma_subset(g, m, n, p)}


def test_table_rows():
    assert table(1) == [(0, 0, 0, 1)]
    assert table(2) == [(3, 0, 0, 4), (1, 1, 0, -4), (0, 0, 1, 4)]
    rows = {(m, n, p): value for m, n, p, value in table(3)}
    assert rows[(6, 0, 0)] == 224
    assert rows[(4, 1, 0)] == -64
    assert rows[(2, 2, 0)] == 32
    assert rows[(0, 3, 0)] == 0
    assert rows[(0, 0, 2)] == 24


def test_table_order_is_p_n_m():
    for g in range(1, 7):
        keys = [(p, n, m) for m, n, p, _ in table(g)]
        assert keys == sorted(keys)


def test_parallel_table_is_identical():
    with ThreadPoolExecutor(max_workers=4) as pool:
        assert table(7, mapper=pool.map) == table(7)


def test_collapse_handle_relabels_indices():
    x = NormalizedMonomial(f_exp=1, b_set=(1, 3, 4, 6), gamma_set=(3,))
    lowered = collapse_handle(x, 2, 3)
    assert lowered.b_set == (1, 2, 3, 4)
    assert lowered.gamma_set == (2,)


def test_collapse_handle_rejects_own_handle():
    with pytest.raises(IndexOutOfRange):
        collapse_handle(NormalizedMonomial(b_set=(2,)), 2, 3)
    with pytest.raises(IndexOutOfRange):
        collapse_handle(NormalizedMonomial(), 4, 3)


def test_gamma_i_restricts_to_collapsed_space():
    for g in range(2, 6):
        report = handle_collapse_check(g)
        assert report.checked > 0
        assert report.passed, report.violations


def test_gamma_i_with_summed_gamma_restricts():
    g = 4
    gamma_2 = NormalizedMonomial(gamma_set=(2,))
    x = normalize(parse_monomial("gamma b1 b5", g), g)
    upstairs = pair_monomial(multiply(gamma_2, x, g), g)
    assert upstairs == pair_monomial(collapse_handle(x, 2, g), g - 1)
    assert upstairs != 0

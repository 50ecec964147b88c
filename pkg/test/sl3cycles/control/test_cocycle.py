from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sl3cycles.control.cocycle import (
    boundary,
    displayed_sigma_hat,
    four_loop,
    phi,
    random_cycle,
    random_rational,
    shift_chain,
    sigma,
    sigma_hat,
    sigma_words,
)
from sl3cycles.model.chains import LinkChain
from sl3cycles.model.poly import Poly
from sl3cycles.model.unipotent import Unipotent

rationals = st.fractions(min_value=-10, max_value=10, max_denominator=5)


def _expected_projection() -> LinkChain:
    return (
        LinkChain.edge(0, 0, 2)
        - LinkChain.edge(-1, 0)
        + LinkChain.edge(-1, 1)
        - LinkChain.edge(0, 1)
        - LinkChain.edge(0, -1)
        + LinkChain.edge(1, -1)
        - LinkChain.edge(1, 0)
    )


def test_projected_cycle_has_seven_terms():
    for n in range(9):
        assert sigma_hat(n) == _expected_projection()
        assert len(sigma_hat(n)) == 7


def test_cocycle_is_minus_two_on_projected_cycles():
    for n in range(9):
        assert phi(sigma_hat(n)) == -2


def test_projected_cycles_are_closed():
    for n in range(9):
        assert boundary(sigma_hat(n)).is_zero()


def test_words_alternate_in_sign():
    assert [sign for sign, _ in sigma_words(3)] == [1, -1, 1, -1, 1, -1, 1, -1]
    assert len(sigma(3)) == 8


def test_words_are_distinct():
    for n in range(9):
        words = [word for _, word in sigma_words(n)]
        assert len(set(words)) == 8


def test_fifth_word_is_the_commutator():
    for n in range(9):
        _, word = sigma_words(n)[4]
        assert word == Unipotent.e13(Poly.monomial(-1, 2 * n))


def test_fifth_word_vanishes_in_the_quotient_for_positive_index():
    assert not sigma_words(0)[4][1].mod(0).is_identity()
    for n in range(1, 9):
        assert sigma_words(n)[4][1].mod(n).is_identity()


def test_negative_index_is_rejected():
    with pytest.raises(ValueError):
        sigma_words(-1)


def test_printed_chain_is_not_closed():
    displayed = displayed_sigma_hat()
    assert phi(displayed) == -2
    assert not boundary(displayed).is_zero()
    assert displayed - sigma_hat(1) == LinkChain.edge(-1, 0, 2)


@given(rationals, rationals, rationals, rationals)
def test_four_loop_value(q1, r1, q2, r2):
    loop = four_loop(q1, r1, q2, r2)
    assert boundary(loop).is_zero()
    assert phi(loop) == (q1 - q2) * (r1 - r2)


@given(rationals, rationals)
def test_projected_cycle_value_is_shift_invariant(a, b):
    assert phi(shift_chain(sigma_hat(2), a, b)) == -2


def test_random_cycles_are_shift_invariant(rng):
    for _ in range(200):
        cycle = random_cycle(rng)
        a, b = random_rational(rng), random_rational(rng)
        assert boundary(cycle).is_zero()
        assert phi(shift_chain(cycle, a, b)) == phi(cycle)


def test_shift_changes_value_of_open_chain():
    chain = LinkChain.edge(1, 1)
    assert phi(chain) == 1
    assert phi(shift_chain(chain, 1, 0)) == 2


def test_random_rationals_stay_in_bounds(rng):
    for _ in range(100):
        value = random_rational(rng, bound=4)
        assert isinstance(value, Fraction)
        assert abs(value) <= 4

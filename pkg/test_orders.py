#!/usr/bin/env python3
"""
Monomial order tests
"""

import random
import sys

import pytest

from sagbi.errors import InvalidInputError
from sagbi.orders import (
    Blocks,
    Comparison,
    Eliminate,
    GRevLex,
    Lex,
    Weights,
    compare_monomials,
    order_matrix,
    SortKey,
)


def test_lex_and_grevlex_disagree_on_x1x3_against_x2_squared():
    assert compare_monomials(Lex(), (1, 0, 1), (0, 2, 0)) == Comparison.GREATER
    assert compare_monomials(GRevLex(), (1, 0, 1), (0, 2, 0)) == Comparison.LESS


def test_grevlex_is_graded_first():
    assert compare_monomials(GRevLex(), (0, 0, 3), (2, 0, 0)) == Comparison.GREATER
    assert compare_monomials(GRevLex(), (2, 1), (1, 2)) == Comparison.GREATER
    assert compare_monomials(GRevLex(), (1, 1), (1, 1)) == Comparison.EQUAL


def test_weights_dominate_then_tiebreak():
    order = Weights((1, 2))
    assert compare_monomials(order, (0, 1), (1, 0)) == Comparison.GREATER
    assert compare_monomials(order, (2, 0), (0, 1)) == Comparison.GREATER
    assert compare_monomials(Weights((1, 1), Lex()), (1, 1), (0, 2)) == Comparison.GREATER


def test_eliminate_puts_leading_block_first():
    order = Eliminate(1)
    assert compare_monomials(order, (1, 0, 0), (0, 5, 5)) == Comparison.GREATER
    assert compare_monomials(Eliminate(3, Lex()), (0, 0, 1, 0), (0, 0, 0, 9)) == Comparison.GREATER


def test_blocks_compare_block_by_block():
    order = Blocks(((1, Lex()), (2, GRevLex())))
    assert compare_monomials(order, (1, 0, 0), (0, 4, 4)) == Comparison.GREATER
    assert compare_monomials(order, (0, 2, 0), (0, 0, 2)) == Comparison.GREATER
    assert order.blocks(3) == [[0], [1, 2]]


def test_order_specs_print_in_script_grammar():
    assert GRevLex().spec() == "grevlex"
    assert Weights((1, 2, 3)).spec() == "weights(1,2,3)"
    assert Eliminate(3, Lex()).spec() == "eliminate(3):lex"
    assert Blocks(((1, Lex()), (2, GRevLex()))).spec() == "blocks(1:lex, 2:grevlex)"


def test_invalid_orders_are_rejected():
    with pytest.raises(InvalidInputError):
        Weights((1, -1))
    with pytest.raises(InvalidInputError):
        order_matrix(Weights((1, 2)), 3)
    with pytest.raises(InvalidInputError):
        order_matrix(Eliminate(3), 2)
    with pytest.raises(InvalidInputError):
        order_matrix(Blocks(((1, Lex()), (1, Lex()))), 3)
    with pytest.raises(InvalidInputError):
        compare_monomials(GRevLex(), (1, 0), (1, 0, 0))


def test_sort_key_agrees_with_comparison():
    rng = random.Random(11)
    for order in (Lex(), GRevLex(), Weights((3, 1, 2)), Eliminate(1), Blocks(((2, Lex()), (1, GRevLex())))):
        key = SortKey(order, 3)
        for _ in range(30):
            a = tuple(rng.randint(0, 4) for _ in range(3))
            b = tuple(rng.randint(0, 4) for _ in range(3))
            expected = compare_monomials(order, a, b)
            actual = (key(a) > key(b)) - (key(a) < key(b))
            assert actual == int(expected)


def test_order_axioms_randomized():
    """Total, multiplicative and global on random exponent triples."""
    rng = random.Random(2024)
    orders = [Lex(), GRevLex(), Weights((2, 0, 1)), Eliminate(2, Lex()),
              Blocks(((1, GRevLex()), (2, Lex())))]
    for case in range(120):
        order = orders[case % len(orders)]
        a, b, c = (tuple(rng.randint(0, 5) for _ in range(3)) for _ in range(3))
        ab = compare_monomials(order, a, b)
        ba = compare_monomials(order, b, a)
        assert int(ab) == -int(ba)
        assert (ab == Comparison.EQUAL) == (a == b)
        shifted_a = tuple(x + y for x, y in zip(a, c))
        shifted_b = tuple(x + y for x, y in zip(b, c))
        assert compare_monomials(order, shifted_a, shifted_b) == ab
        if any(c):
            assert compare_monomials(order, shifted_a, a) == Comparison.GREATER
        if ab == Comparison.GREATER and compare_monomials(order, b, c) == Comparison.GREATER:
            assert compare_monomials(order, a, c) == Comparison.GREATER


def main():
    from suite_runner import exit_with, run_suite
    exit_with(run_suite("MONOMIAL ORDER TESTS", sys.modules[__name__]))


if __name__ == "__main__":
    main()

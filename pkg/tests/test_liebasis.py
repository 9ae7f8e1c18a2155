import numpy as np
import pytest

from liewb._exceptions import BudgetExceeded, DomainError, InternalError
from liewb.LieBasis import (
    bracket_tree,
    concatenation_power,
    expansion,
    format_tree,
    induced_action,
    is_lyndon,
    lie_power_rep,
    lyndon_basis,
    lyndon_words,
    restricted_basis,
    restricted_lie_power_rep,
    standard_factorization,
)
from liewb.MatRep import jordan_block, jordan_type, tensor_power
from liewb.Utils import witt_number


def test_lyndon_words_small_cases():
    assert lyndon_words(2, 3) == [(0, 0, 1), (0, 1, 1)]
    assert lyndon_words(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert lyndon_words(1, 2) == []
    assert lyndon_words(1, 1) == [(0,)]


@pytest.mark.parametrize("a, d", [(2, 6), (3, 4), (2, 8), (4, 3)])
def test_lyndon_counts_are_witt_numbers(a, d):
    words = lyndon_words(a, d)
    assert len(words) == witt_number(a, d)
    assert words == sorted(words)
    assert all(is_lyndon(w) for w in words)


def test_lyndon_words_reject_empty_alphabet():
    with pytest.raises(DomainError):
        lyndon_words(0, 3)


def test_standard_factorization_and_brackets():
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert standard_factorization((0, 1, 1)) == ((0, 1), (1,))
    assert format_tree(bracket_tree((0, 0, 1))) == "[x,[x,y]]"
    assert lyndon_basis(2, 3).brackets() == ["[x,[x,y]]", "[[x,y],y]"]


def test_bracket_expansion():
    assert expansion((0, 1)) == {(0, 1): 1, (1, 0): -1}
    assert expansion((0, 0, 1)) == {(0, 0, 1): 1, (0, 1, 0): -2, (1, 0, 0): 1}


def test_expansion_leads_with_its_word():
    for w in lyndon_words(3, 4):
        vector = expansion(w)
        assert vector[w] == 1
        assert min(vector) == w


def test_basis_matrix_has_full_rank():
    basis = lyndon_basis(2, 5)
    matrix = basis.matrix()
    assert matrix.shape == (32, 6)
    assert np.linalg.matrix_rank(matrix.astype(float)) == 6


def test_concatenation_power():
    assert concatenation_power({(0,): 1, (1,): 1}, 2) == {(0, 0): 1, (0, 1): 1, (1, 0): 1, (1, 1): 1}


@pytest.mark.parametrize("d, expected", [(1, (2,)), (2, (1,)), (3, (2,)), (4, (2, 1))])
def test_lie_powers_of_J2_at_p2(d, expected):
    assert jordan_type(lie_power_rep(jordan_block(2, 2), d)) == expected


def test_lie_power_dimensions():
    L = lie_power_rep(jordan_block(3, 3), 4)
    assert L.dim == 18
    L.check()
    assert lie_power_rep(tensor_power(jordan_block(2, 2), 2), 3).dim == witt_number(4, 3)


def test_lie_power_over_budget(small_budget):
    with pytest.raises(BudgetExceeded):
        lie_power_rep(jordan_block(2, 2), 7)


def test_restricted_basis_sizes():
    assert len(restricted_basis(2, 2, 2)) == 3
    assert len(restricted_basis(2, 4, 2)) == 3 + 1 + 2


def test_restricted_lie_powers_of_J2():
    R2 = restricted_lie_power_rep(jordan_block(2, 2), 2)
    assert R2.dim == 3
    R2.check()
    assert restricted_lie_power_rep(jordan_block(2, 2), 4).dim == 6


def test_induced_action_rejects_a_non_invariant_span():
    # g(x (x) y) = x (x) x + x (x) y leaves the span of x (x) y
    with pytest.raises(InternalError):
        induced_action(jordan_block(2, 2), 2, [((0, 1), {(0, 1): 1})])


def test_induced_action_on_an_invariant_span():
    X = induced_action(jordan_block(2, 2), 2, [((0, 0), {(0, 0): 1})])
    assert X.dim == 1
    assert X.g.tolist() == [[1]]

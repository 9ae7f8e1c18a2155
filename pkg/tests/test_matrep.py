import numpy as np
import pytest

from liewb._exceptions import BudgetExceeded, DomainError, InvalidRep
from liewb.MatRep import (
    MatRep,
    direct_sum,
    jordan_block,
    jordan_type,
    monomial_basis,
    rank_mod_p,
    sym_power,
    tensor,
    tensor_power,
    trivial_rep,
)


def test_entries_are_reduced_and_frozen():
    M = MatRep(3, [[4, 5], [0, 7]])
    assert M.g.tolist() == [[1, 2], [0, 1]]
    with pytest.raises(ValueError):
        M.g[0, 0] = 2


def test_non_square_generator_is_rejected():
    with pytest.raises(InvalidRep):
        MatRep(2, np.ones((2, 3), dtype=np.int64))


def test_jordan_block():
    assert jordan_block(3, 3).g.tolist() == [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
    assert jordan_type(jordan_block(5, 4)) == (4,)
    with pytest.raises(DomainError):
        jordan_block(2, 3)


def test_block_too_large_for_p_is_not_a_module():
    M = MatRep(2, [[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    with pytest.raises(InvalidRep):
        M.check()


def test_rank_mod_p():
    assert rank_mod_p(np.array([[2, 4], [1, 2]]), 2) == 1
    assert rank_mod_p(np.array([[1, 2], [3, 4]]), 5) == 2
    assert rank_mod_p(np.zeros((0, 0), dtype=np.int64), 3) == 0


def test_direct_sum_and_trivial():
    M = direct_sum(jordan_block(3, 2), jordan_block(3, 3), trivial_rep(3, 1))
    assert M.dim == 6
    assert jordan_type(M) == (3, 2, 1)
    assert direct_sum(trivial_rep(2, 0)).dim == 0


def test_tensor_squares_of_J2():
    assert jordan_type(tensor(jordan_block(2, 2), jordan_block(2, 2))) == (2, 2)
    assert jordan_type(tensor(jordan_block(3, 2), jordan_block(3, 2))) == (3, 1)


def test_tensor_power():
    assert tensor_power(jordan_block(2, 2), 0) == trivial_rep(2, 1)
    assert tensor_power(jordan_block(2, 2), 3).dim == 8
    with pytest.raises(DomainError):
        tensor_power(jordan_block(2, 2), -1)


def test_mixed_primes_are_rejected():
    with pytest.raises(DomainError):
        tensor(jordan_block(2, 2), jordan_block(3, 2))


def test_monomial_basis():
    assert monomial_basis(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(monomial_basis(3, 3)) == 10


def test_symmetric_powers_of_J2_at_p2():
    V = jordan_block(2, 2)
    assert jordan_type(sym_power(V, 2)) == (2, 1)
    assert jordan_type(sym_power(V, 3)) == (2, 2)
    assert sym_power(V, 0).dim == 1


def test_symmetric_square_of_J2_at_p3():
    assert jordan_type(sym_power(jordan_block(3, 2), 2)) == (3,)


def test_symmetric_power_is_a_module():
    S = sym_power(jordan_block(3, 3), 4)
    S.check()
    assert S.dim == 15


def test_tensor_power_budget(small_budget):
    assert tensor_power(jordan_block(2, 2), 6).dim == 64
    with pytest.raises(BudgetExceeded):
        tensor_power(jordan_block(2, 2), 7)

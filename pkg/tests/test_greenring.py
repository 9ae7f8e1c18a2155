from fractions import Fraction

import pytest

from liewb import GreenRing
from liewb._exceptions import BudgetExceeded, DomainError, NegativeCoords
from liewb.GreenRing import (
    GreenCarrier,
    GreenElement,
    J,
    adams_green,
    decompose,
    explore_rho,
    lie_power_green,
    parse_green,
    phi_green,
    rep_of,
    restricted_lie_power_green,
    rho_green,
    structure_constants,
    sym_power_green,
)
from liewb.MatRep import jordan_type
from liewb.Utils import mobius, witt_number

J1, J2 = J(2, 1), J(2, 2)


def test_coordinates_and_dimension():
    x = GreenElement(3, (1, 0, 2))
    assert x.dim == 7
    assert x.items() == [(1, 1), (3, 2)]
    assert x.is_actual()
    assert not (x - J(3, 2)).is_actual()
    assert not (x / 2).is_actual()
    with pytest.raises(DomainError):
        GreenElement(3, (1, 0))
    with pytest.raises(DomainError):
        J(2, 3)


def test_str():
    assert str(2 * J1 - 2 * J2) == "2J1 - 2J2"
    assert str(-J2) == "-J2"
    assert str(J1 / 2) == "(1/2)J1"
    assert str(GreenElement.zero(2)) == "0"


def test_json_round_trip():
    x = J(3, 3) * Fraction(2, 3) - J(3, 1)
    assert x.to_json() == {"p": 3, "coords": ["-1/1", "0/1", "2/3"]}
    assert GreenElement.from_json(x.to_json()) == x
    with pytest.raises(DomainError):
        GreenElement.from_json({"coords": []})


def test_products_from_kronecker_decomposition():
    assert J2 * J2 == 2 * J2
    assert J(3, 2) * J(3, 2) == J(3, 1) + J(3, 3)
    assert J(3, 3) * J(3, 2) == 2 * J(3, 3)
    assert J(5, 1) * J(5, 4) == J(5, 4)


def test_structure_constants_are_commutative():
    table = structure_constants(5)
    for a in range(5):
        for b in range(5):
            assert table[a][b] == table[b][a]
            assert table[a][b].dim == (a + 1) * (b + 1)


def test_mixed_primes_are_rejected():
    with pytest.raises(DomainError):
        J(2, 2) + J(3, 2)


def test_decompose_and_realise():
    x = GreenElement.from_jordan_type(3, (3, 2, 2))
    assert x == J(3, 3) + 2 * J(3, 2)
    assert decompose(rep_of(x)) == x
    assert jordan_type(rep_of(x)) == (3, 2, 2)
    with pytest.raises(NegativeCoords):
        rep_of(-J1)


def test_symmetric_powers():
    assert sym_power_green(J2, 2) == J2 + J1
    assert sym_power_green(J2, 3) == 2 * J2
    assert sym_power_green(J(3, 2), 2) == J(3, 3)


def test_symmetric_power_budget(small_budget):
    with pytest.raises(BudgetExceeded):
        sym_power_green(J(3, 3), 12)


def test_adams_operations_at_p2():
    assert adams_green(J2, 1) == J2
    assert adams_green(J2, 2) == 2 * J1
    assert adams_green(J2, 3) == J2
    with pytest.raises(DomainError):
        adams_green(J2, 3, D=2)


def test_resolvents_at_p2():
    assert phi_green(J2, 1) == J2
    assert phi_green(J2, 2) == 2 * J1 - 2 * J2
    assert phi_green(J2, 3) == -J2
    assert phi_green(J2, 6) == 2 * J2 - 2 * J1
    assert phi_green(J2, 6) == phi_green(phi_green(J2, 3), 2)


@pytest.mark.parametrize("r", range(2, 7))
def test_resolvent_methods_agree(r):
    assert phi_green(J2, r, "direct") == phi_green(J2, r, "recursive")
    assert phi_green(J(3, 2), r, "direct") == phi_green(J(3, 2), r, "recursive")


def test_unknown_method():
    with pytest.raises(DomainError):
        phi_green(J2, 2, "clever")


def test_resolvent_is_adams_off_p():
    for r in (3, 5):
        assert phi_green(J2, r) == adams_green(J2, r) * mobius(r)
    assert phi_green(J(3, 3), 2) == -adams_green(J(3, 3), 2)


def test_rho_values():
    assert rho_green(J2, 1) == J2
    assert rho_green(J2, 2) == 2 * J1 - J2
    assert rho_green(J2, 3).is_zero()
    assert rho_green(J2, 4).is_zero()


def test_lie_powers_at_p2():
    assert lie_power_green(J2, 2) == J1
    assert lie_power_green(J2, 3) == J2
    assert lie_power_green(J2, 4) == J1 + J2
    assert lie_power_green(J2, 4, "recursive") == lie_power_green(J2, 4, "direct")


def test_lie_power_of_a_sum():
    x = J(3, 2) + J(3, 1)
    assert lie_power_green(x, 3).dim == witt_number(3, 3)
    assert lie_power_green(x, 3) == lie_power_green(x, 3, "recursive")
    with pytest.raises(NegativeCoords):
        lie_power_green(-x, 2)


def test_restricted_lie_powers():
    assert restricted_lie_power_green(J2, 2).dim == 3
    assert restricted_lie_power_green(J2, 4).dim == 6


def test_parse_green():
    assert parse_green("J2*J2 + 2*J1", 2) == 2 * J1 + 2 * J2
    assert parse_green("1/2*J3 - J1", 3) == J(3, 3) / 2 - J(3, 1)
    assert parse_green("(J2 + J1)**2", 2) == 4 * J2 + J1
    with pytest.raises(DomainError):
        parse_green("J5", 3)
    with pytest.raises(DomainError):
        parse_green("J2 +", 2)


def test_green_carrier():
    carrier = GreenCarrier(2)
    assert carrier.one() == J1
    assert carrier.psi(J2, 2) == 2 * J1
    assert carrier.phi(J2, 3) == -J2
    assert carrier.encode(J2) == {"p": 2, "coords": ["0/1", "1/1"]}


def test_explore_rho_reports_budget_stops(small_budget):
    rows = explore_rho(J2, 4)
    assert rows[0] == (0, J2)
    assert rows[1] == (1, 2 * J1 - J2)
    assert rows[-1] == (4, None)


def test_realisations_respect_the_budget(small_budget):
    with pytest.raises(BudgetExceeded):
        rep_of(J2 * 40)
    with pytest.raises(BudgetExceeded):
        lie_power_green(J2 * 5, 2)
    with pytest.raises(BudgetExceeded):
        restricted_lie_power_green(J2 * 5, 2)


def test_first_lie_power_is_not_realised(small_budget):
    big = J2 * 128
    assert lie_power_green(big, 1) == big
    assert lie_power_green(big, 1, "recursive") == big
    assert restricted_lie_power_green(big, 1) == big


def test_direct_resolvent_refuses_before_building(small_budget, monkeypatch):
    def no_tensor_powers(*args):
        raise AssertionError("tensor power built past the budget")

    monkeypatch.setattr(GreenRing, "tensor_power", no_tensor_powers)
    with pytest.raises(BudgetExceeded):
        phi_green(J(7, 2), 7, "direct")


@pytest.mark.parametrize("method", ["recursive", "direct"])
def test_sixth_resolvent_of_J3_factorises(method):
    J3 = J(3, 3)
    expected = 3 * J3 - 3 * J(3, 2)
    assert phi_green(J3, 6, method) == expected
    assert phi_green(phi_green(J3, 2), 3) == expected

from fractions import Fraction

import pytest

from liewb._exceptions import DomainError
from liewb.Utils import (
    as_fraction,
    divisors,
    format_fraction,
    int_list,
    is_integral,
    is_power_of,
    mobius,
    p_part,
    pretty_fraction,
    require_prime,
    witt_number,
)


@pytest.mark.parametrize(
    "r, expected",
    [(1, 1), (2, -1), (3, -1), (4, 0), (5, -1), (6, 1), (8, 0), (30, -1), (12, 0)],
)
def test_mobius(r, expected):
    assert mobius(r) == expected


def test_mobius_rejects_zero():
    with pytest.raises(DomainError):
        mobius(0)


def test_divisors_are_sorted():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert divisors(1) == (1,)


def test_p_part():
    assert p_part(12, 2) == (2, 3)
    assert p_part(9, 3) == (2, 1)
    assert p_part(5, 2) == (0, 5)
    assert p_part(2**20 * 7, 2) == (20, 7)
    with pytest.raises(DomainError):
        p_part(0, 2)


def test_is_power_of():
    assert is_power_of(1, 2)
    assert is_power_of(8, 2)
    assert not is_power_of(6, 2)
    assert is_power_of(27, 3)
    assert not is_power_of(0, 3)


def test_require_prime():
    assert require_prime(7) == 7
    with pytest.raises(DomainError):
        require_prime(4)


def test_witt_numbers_two_letters():
    assert [witt_number(2, r) for r in range(1, 7)] == [2, 1, 2, 3, 6, 9]


def test_witt_number_three_letters():
    assert witt_number(3, 4) == 18


def test_fraction_helpers():
    assert as_fraction("3/6") == Fraction(1, 2)
    assert format_fraction(2) == "2/1"
    assert format_fraction(Fraction(-1, 2)) == "-1/2"
    assert pretty_fraction(Fraction(4, 2)) == "2"
    assert pretty_fraction(Fraction(1, 3)) == "1/3"
    assert is_integral(Fraction(6, 3))
    assert not is_integral(Fraction(1, 2))


def test_int_list():
    assert int_list("2,3") == [2, 3]
    assert int_list("[4]") == [4]
    assert int_list("") == []

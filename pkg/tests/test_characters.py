from fractions import Fraction

import pytest

from liewb import _globals
from liewb._exceptions import DomainError
from liewb.Characters import (
    NATURAL,
    CharCarrier,
    ghost_solve,
    lie_char,
    random_character,
    resolvent_char,
    restricted_lie_char,
    verify_char0,
    verify_char_identities,
)
from liewb.LieBasis import lyndon_words
from liewb.Series import TruncSeries, script_L
from liewb.SymFunc import (
    SymFunc,
    chi,
    elementary,
    eval_dim,
    homogeneous,
    is_schur_positive,
    power_sum,
    schur,
)
from liewb.Utils import witt_number


def test_second_lie_power_is_exterior_square():
    assert lie_char(NATURAL, 2) == elementary(2)
    assert lie_char(NATURAL, 1) == NATURAL


def test_third_lie_power_is_s21():
    assert lie_char(NATURAL, 3) == schur(2, 1)


@pytest.mark.parametrize("r", range(1, 7))
def test_lie_dimensions_match_witt_numbers(r):
    assert eval_dim(lie_char(NATURAL, r), 2) == witt_number(2, r)
    assert eval_dim(lie_char(NATURAL, r), 3) == witt_number(3, r)


def test_lie_characters_are_schur_positive():
    for r in range(2, 8):
        assert is_schur_positive(lie_char(NATURAL, r)).ok
    assert is_schur_positive(lie_char(schur(2), 3)).ok


@pytest.mark.slow
@pytest.mark.parametrize("r", [8, 9, 10])
def test_high_degree_lie_characters_are_schur_positive(r):
    L = lie_char(NATURAL, r)
    assert is_schur_positive(L).ok
    assert eval_dim(L, 2) == witt_number(2, r)


def test_lie_char_respects_degree_cap(monkeypatch):
    monkeypatch.setattr(_globals, "MAX_DEGREE", 4)
    with pytest.raises(DomainError):
        lie_char(NATURAL, 5)


def test_resolvent_character():
    assert resolvent_char(NATURAL, 2) == -power_sum(2)
    assert resolvent_char(NATURAL, 6) == power_sum(6)
    assert resolvent_char(NATURAL, 4).is_zero()


def test_restricted_lie_character():
    f = restricted_lie_char(NATURAL, 2, 1, 1)
    assert f == power_sum(2) + elementary(2)
    assert eval_dim(f, 2) == 3
    with pytest.raises(DomainError):
        restricted_lie_char(NATURAL, 2, 1, 2)


def test_ghost_solution_p2_k3():
    solution = ghost_solve(NATURAL, 2, 3, 1, (2,))
    assert solution.b[0] == lie_char(NATURAL, 3)
    assert solution.dims == [[2], [8]]
    assert all(report.ok for report in solution.positivity())


def test_ghost_solution_p3_k2():
    solution = ghost_solve(NATURAL, 3, 2, 1, (2,))
    assert solution.dims == [[1], [9]]
    data = solution.to_json()
    assert data["schur_positive"] == [True, True]
    assert data["n"] == [2]


def test_ghost_solution_k1_tail_vanishes():
    solution = ghost_solve(NATURAL, 2, 1, 2)
    assert solution.b[0] == NATURAL
    assert all(b.is_zero() for b in solution.b[1:])


def test_ghost_solve_rejects_k_divisible_by_p():
    with pytest.raises(DomainError):
        ghost_solve(NATURAL, 2, 2, 1)
    with pytest.raises(DomainError):
        ghost_solve(NATURAL, 4, 1, 1)


def test_lie_decomposition_for_symmetric_square():
    f = homogeneous(2)
    solution = ghost_solve(f, 2, 3, 1)
    assert lie_char(f, 6) == solution.b[1] + lie_char(solution.b[0], 2)
    assert all(report.ok for report in solution.positivity())


def test_script_L_over_characters_gives_lie_characters():
    D = 5
    carrier = CharCarrier.for_base(NATURAL, D)
    series = script_L(TruncSeries.monomial(carrier, D, NATURAL))
    for r in range(1, D + 1):
        assert series.coeff(r) == lie_char(NATURAL, r)


def test_char_carrier_families():
    carrier = CharCarrier(6)
    assert carrier.psi(NATURAL, 3) == chi(NATURAL, 3)
    assert carrier.phi(NATURAL, 3) == -power_sum(3)
    assert carrier.mul(power_sum(4), power_sum(3)).is_zero()


def test_random_character_is_seeded_and_actual():
    f = random_character(11, 4)
    assert f == random_character(11, 4)
    assert is_schur_positive(f).ok
    assert 1 <= f.degree <= 4


@pytest.mark.parametrize("point", _globals.VERIFY_GRID["char"])
def test_character_identities_on_default_grid(point):
    report = verify_char_identities(point)
    assert report.ok, report.render("table")
    assert report.by_identity("lie-decomposition")[0].passed


def test_character_identities_for_non_natural_module():
    report = verify_char_identities({"f": schur(2), "p": 2, "k": 3, "m": 1, "r": 3, "s": 2, "D": 4})
    assert report.ok, report.render("table")


def test_non_coprime_factorisation_is_skipped():
    report = verify_char_identities({"p": 2, "k": 1, "m": 1, "r": 2, "s": 4})
    (check,) = report.by_identity("resolvent-factorisation")
    assert check.passed is None
    assert report.exit_code() == 3


def test_char0_suite_passes():
    report = verify_char0(D=6, seed=0, samples=2)
    assert report.ok, report.render("table")
    names = {check.identity for check in report.checks}
    assert {"pbw-geometric", "star-S-inverts-star-L", "plus-op-filtration"} <= names
    assert all(check.params["seed"] == 0 for check in report.checks)


def test_integral_dimension_of_b_class():
    solution = ghost_solve(NATURAL, 2, 3, 1, (2, 3))
    assert solution.dims[1][1] == (witt_number(9, 3) - witt_number(3, 3) ** 2) // 2
    assert eval_dim(solution.b[1], 3) == Fraction(solution.dims[1][1])


@pytest.mark.parametrize("n", [2, 3])
def test_lie_dimensions_match_lyndon_counts(n):
    for r in range(1, 11):
        assert eval_dim(lie_char(NATURAL, r), n) == len(lyndon_words(n, r))


@pytest.mark.parametrize("r, s", [(2, 3), (3, 4), (2, 5)])
def test_resolvent_characters_factorise(r, s):
    for seed in range(20):
        f = random_character(seed, 4)
        assert resolvent_char(f, r * s) == resolvent_char(resolvent_char(f, s), r)


@pytest.mark.parametrize(
    "p, k, m",
    [
        (2, 1, 2),
        (2, 3, 1),
        (3, 1, 2),
        (3, 2, 1),
        pytest.param(2, 3, 2, marks=pytest.mark.slow),
    ],
)
def test_ghost_solutions_are_actual_and_decompose(p, k, m):
    solution = ghost_solve(NATURAL, p, k, m, (2,))
    assert all(report.ok for report in solution.positivity())
    rhs = sum((lie_char(solution.b[m - i], p**i) for i in range(m + 1)), SymFunc("p"))
    assert lie_char(NATURAL, p**m * k) == rhs


@pytest.mark.parametrize("k, m", [(1, 1), (1, 2), (3, 1)])
def test_restricted_decomposition_dimensions(k, m):
    solution = ghost_solve(NATURAL, 2, k, m)
    rhs = sum((restricted_lie_char(solution.b[m - i], 2, i, 1) for i in range(m + 1)), SymFunc("p"))
    assert restricted_lie_char(NATURAL, 2, m, k) == rhs
    assert eval_dim(restricted_lie_char(NATURAL, 2, m, k), 2) == eval_dim(rhs, 2)


def test_virtual_characters_are_rejected_up_front():
    with pytest.raises(DomainError):
        lie_char(-NATURAL, 2)
    with pytest.raises(DomainError):
        lie_char(power_sum(1, 1) / 2, 1)
    with pytest.raises(DomainError):
        ghost_solve(schur(1, 1) - schur(2), 2, 1, 1)
    with pytest.raises(DomainError):
        restricted_lie_char(-schur(2), 2, 1, 1)
    assert lie_char(schur(2) - schur(1, 1), 2) == lie_char(power_sum(2), 2)

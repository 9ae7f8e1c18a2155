"""A module for Lie powers at the level of formal characters.

Characters of GL_n-modules are symmetric functions. Adams operations act
as ``chi(., r)`` and, because a character only sees composition factors,
the r-th Lie resolvent acts as ``mobius(r) * chi(., r)``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import _globals
from ._exceptions import DomainError, IntegralityError
from .Report import Report, describe_difference
from .Series import (
    CarrierRing,
    TruncSeries,
    geometric,
    plus_L,
    plus_S,
    plus_op,
    random_series,
    script_L,
    series_Exp,
    series_Log,
    series_exp,
    series_log,
    star_L,
    star_S,
    subst_power,
)
from .SymFunc import (
    M,
    P,
    PositivityReport,
    SymFunc,
    chi,
    constant,
    eval_dim,
    homogeneous,
    is_actual_character,
    is_schur_positive,
    partitions_of,
    power_sum,
    schur,
    to_basis,
)
from .Utils import divisors, mobius, require_prime, witt_number

characters_logger = logging.getLogger("characters")

NATURAL = power_sum(1)


def _check_degree(degree: int) -> None:
    if degree > _globals.MAX_DEGREE:
        raise DomainError(
            "total degree {} exceeds the character degree cap {}".format(degree, _globals.MAX_DEGREE)
        )


def _require_actual(f: SymFunc, what: str) -> None:
    if not is_actual_character(f):
        raise DomainError("{} needs an actual character, got {}".format(what, f))


def _require_integral(f: SymFunc, what: str) -> SymFunc:
    for la, coeff in to_basis(f, M).items():
        if coeff.denominator != 1:
            raise IntegralityError(
                "{} has non-integral coefficient {} at m[{}]".format(
                    what, coeff, ",".join(str(x) for x in la)
                )
            )
    return f


class CharCarrier(CarrierRing):
    """Symmetric functions as a series carrier.

    Parameters
    ----------
    max_degree : int, optional
        Products are truncated above this total degree. For a series in
        ``f t`` up to t**D this is ``D * f.degree``.
    """

    name = "character"

    def __init__(self, max_degree: Optional[int] = None) -> None:
        if max_degree is not None:
            _check_degree(max_degree)
        self.max_degree = max_degree

    @classmethod
    def for_base(cls, f: SymFunc, D: int) -> "CharCarrier":
        return cls(D * max(f.degree, 1))

    def zero(self) -> SymFunc:
        return SymFunc(P)

    def one(self) -> SymFunc:
        return constant(1)

    def mul(self, x: SymFunc, y: SymFunc) -> SymFunc:
        product = x * y
        if self.max_degree is not None:
            product = product.truncate(self.max_degree)
        return product

    def is_zero(self, x: SymFunc) -> bool:
        return x.is_zero()

    def psi(self, x: SymFunc, r: int) -> SymFunc:
        return chi(x, r)

    def phi(self, x: SymFunc, r: int) -> SymFunc:
        return resolvent_char(x, r)

    def random_element(self, rng: np.random.Generator, degree: int) -> SymFunc:
        """One or two Schur functions of weight `degree` with small integer coefficients."""
        shapes = partitions_of(degree)
        out = SymFunc(P)
        for _ in range(int(rng.integers(1, 3))):
            la = shapes[int(rng.integers(len(shapes)))]
            coeff = int(rng.choice([-2, -1, 1, 2]))
            out = out + to_basis(schur(*la), P) * coeff
        return out


def resolvent_char(f: SymFunc, r: int) -> SymFunc:
    """Character of the r-th Lie resolvent, ``mobius(r) * chi(f, r)``."""
    mu = mobius(r)
    if not mu:
        return SymFunc(P)
    return chi(f, r) * mu


def lie_char(f: SymFunc, r: int) -> SymFunc:
    """Character of the r-th Lie power of a module with character `f`.

    Parameters
    ----------
    f : SymFunc
        An actual character.
    r : int
        The degree, r >= 1.

    Returns
    -------
    SymFunc
        ``(1/r) * sum over d | r of mobius(d) * chi(f**(r/d), d)``.

    Raises
    ------
    DomainError
        If `f` is not an actual character.
    IntegralityError
        If the result has a non-integral monomial coefficient.
    """
    if r < 1:
        raise DomainError("lie_char needs r >= 1, got {}".format(r))
    _require_actual(f, "lie_char")
    return _lie_char(f, r)


def _lie_char(f: SymFunc, r: int) -> SymFunc:
    if r == 1:
        return f
    _check_degree(r * f.degree)
    total = SymFunc(P)
    for d in divisors(r):
        mu = mobius(d)
        if mu:
            total = total + chi(f ** (r // d), d) * mu
    return _require_integral(total / r, "ch L^{}".format(r))


def restricted_lie_char(f: SymFunc, p: int, i: int, k: int) -> SymFunc:
    """Character of the restricted Lie power of degree p**i * k.

    A basis is given by the p**s-th associative powers of Lie basis
    elements of degree p**j * k with s + j = i, hence
    ``sum over j <= i of chi(lie_char(f, p**j k), p**(i-j))``.
    """
    require_prime(p)
    if k < 1 or k % p == 0:
        raise DomainError("restricted_lie_char needs k >= 1 coprime to p={}, got {}".format(p, k))
    if i < 0:
        raise DomainError("restricted_lie_char needs i >= 0, got {}".format(i))
    _check_degree(p**i * k * f.degree)
    total = SymFunc(P)
    for j in range(i + 1):
        total = total + chi(lie_char(f, p**j * k), p ** (i - j))
    return total


@dataclass(frozen=True)
class GhostSolution:
    """Witt coordinates ``b[i] = ch B_{p**i k}`` and ghosts ``ch L^k(V**(p**i))``."""

    p: int
    k: int
    m: int
    b: List[SymFunc]
    ghosts: List[SymFunc]
    ns: Tuple[int, ...] = (2,)

    @property
    def dims(self) -> List[List[int]]:
        """For each b[i], its dimension in each number of variables in `ns`."""
        return [[int(eval_dim(b_i, n)) for n in self.ns] for b_i in self.b]

    def positivity(self) -> List[PositivityReport]:
        return [is_schur_positive(b_i) for b_i in self.b]

    def to_json(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "n": list(self.ns),
            "b": [b_i.to_json() for b_i in self.b],
            "ghosts": [g.to_json() for g in self.ghosts],
            "dims": self.dims,
            "schur_positive": [report.ok for report in self.positivity()],
        }


def ghost_solve(f: SymFunc, p: int, k: int, m: int, ns: Sequence[int] = (2,)) -> GhostSolution:
    """Solve the Witt equations for the characters of B_k, ..., B_{p**m k}.

    ``b_0 = lie_char(f, k)`` and
    ``b_i = (lie_char(f**(p**i), k) - sum_{j<i} p**j * b_j**(p**(i-j))) / p**i``.

    Raises
    ------
    DomainError
        If `p` divides `k` or `f` is not an actual character.
    IntegralityError
        If a division by p**i leaves a remainder.
    """
    require_prime(p)
    if k < 1 or k % p == 0:
        raise DomainError("ghost_solve needs k >= 1 coprime to p={}, got {}".format(p, k))
    if m < 0:
        raise DomainError("ghost_solve needs m >= 0, got {}".format(m))
    _require_actual(f, "ghost_solve")
    _check_degree(p**m * k * f.degree)
    b: List[SymFunc] = []
    ghosts: List[SymFunc] = []
    for i in range(m + 1):
        ghost = _lie_char(f ** (p**i), k)
        ghosts.append(ghost)
        rest = ghost
        for j in range(i):
            rest = rest - (b[j] ** (p ** (i - j))) * p**j
        b.append(_require_integral(rest / p**i, "B_{} (division by {})".format(p**i * k, p**i)))
        characters_logger.debug("solved B_%d for p=%d", p**i * k, p)
    return GhostSolution(p, k, m, b, ghosts, tuple(ns))


def random_character(
    rng: Union[np.random.Generator, int, None], max_degree: int, terms: int = 3
) -> SymFunc:
    """A seeded actual character: a sum of Schur functions of weight 1..max_degree."""
    rng = np.random.default_rng(rng)
    out = SymFunc(P)
    for _ in range(terms):
        degree = int(rng.integers(1, max_degree + 1))
        shapes = partitions_of(degree)
        la = shapes[int(rng.integers(len(shapes)))]
        out = out + to_basis(schur(*la), P) * int(rng.integers(1, 3))
    return out


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


def _h_series(D: int) -> TruncSeries:
    carrier = CharCarrier(D)
    return TruncSeries(carrier, D, [constant(1)] + [homogeneous(r) for r in range(1, D + 1)])


def verify_char_identities(config: Dict[str, Any]) -> Report:
    """Check the character-level shadows of the decomposition theorems.

    Parameters
    ----------
    config : Dict[str, Any]
        Keys ``f`` (SymFunc, default the natural character p[1]), ``p``,
        ``k``, ``m``, ``r``, ``s``, ``D`` and ``n``.

    Returns
    -------
    Report
        One `Check` per identity; failures are recorded, never raised.
    """
    f = config.get("f", NATURAL)
    p = int(config.get("p", 2))
    k = int(config.get("k", 1))
    m = int(config.get("m", 1))
    r = int(config.get("r", 2))
    s = int(config.get("s", 3))
    D = int(config.get("D", 8))
    n = int(config.get("n", 2))
    report = Report()
    base = {"p": p, "k": k, "m": m, "n": n}

    solution: List[GhostSolution] = []

    def solve():
        solution.append(ghost_solve(f, p, k, m, (n,)))
        return True

    report.run("ghost-integrality", base, solve)
    if solution:
        ghost = solution[0]

        def witt_equation():
            for i in range(m + 1):
                total = SymFunc(P)
                for j in range(i + 1):
                    total = total + (ghost.b[j] ** (p ** (i - j))) * p**j
                passed, witness = describe_difference(total, ghost.ghosts[i])
                if not passed:
                    return False, "i={}: {}".format(i, witness)
            return True

        report.run("witt-ghost-equation", base, witt_equation)

        for i, positivity in enumerate(ghost.positivity()):
            witness = None
            if not positivity.ok:
                la, coeff = positivity.violations[0]
                witness = "s[{}] coefficient {}".format(",".join(str(x) for x in la), coeff)
            report.add("ghost-schur-positivity", dict(base, i=i, dims=ghost.dims[i]), positivity.ok, witness)

        def lie_decomposition():
            rhs = SymFunc(P)
            for i in range(m + 1):
                rhs = rhs + lie_char(ghost.b[m - i], p**i)
            return describe_difference(lie_char(f, p**m * k), rhs)

        report.run("lie-decomposition", base, lie_decomposition)

        def restricted_decomposition():
            rhs = SymFunc(P)
            for i in range(m + 1):
                rhs = rhs + restricted_lie_char(ghost.b[m - i], p, i, 1)
            return describe_difference(restricted_lie_char(f, p, m, k), rhs)

        report.run("restricted-decomposition", base, restricted_decomposition)

    factor_params = {"r": r, "s": s}
    if gcd(r, s) != 1:
        report.add("resolvent-factorisation", factor_params, None, "skipped: r and s are not coprime")
    else:
        report.run(
            "resolvent-factorisation",
            factor_params,
            lambda: describe_difference(
                resolvent_char(f, r * s), resolvent_char(resolvent_char(f, s), r)
            ),
        )

    def lie_series():
        carrier = CharCarrier.for_base(f, r)
        series = script_L(TruncSeries.monomial(carrier, r, f))
        return describe_difference(series.coeff(r), lie_char(f, r))

    report.run("lie-character-series", {"r": r}, lie_series)
    report.run(
        "lie-dimension-witt",
        {"r": r, "n": n},
        lambda: describe_difference(
            eval_dim(lie_char(f, r), n), Fraction(witt_number(int(eval_dim(f, n)), r))
        ),
    )
    report.run(
        "lie-schur-positivity",
        {"r": r},
        lambda: is_schur_positive(lie_char(f, r)).ok,
    )

    def log_h_series():
        logged = series_log(_h_series(D))
        for q in range(1, D + 1):
            passed, witness = describe_difference(logged.coeff(q), power_sum(q) / q)
            if not passed:
                return False, "t^{}: {}".format(q, witness)
        return True

    report.run("log-symmetric-series", {"D": D}, log_h_series)

    def divisor_sum():
        top = max(1, _globals.MAX_DEGREE // max(f.degree, 1))
        for q in range(1, min(D, top) + 1):
            lhs = SymFunc(P)
            for d in divisors(q):
                lhs = lhs + lie_char(f ** (q // d), d) * (mobius(q // d) * d)
            passed, witness = describe_difference(lhs, resolvent_char(f, q))
            if not passed:
                return False, "r={}: {}".format(q, witness)
        return True

    report.run("resolvent-divisor-sum", {"D": D}, divisor_sum)
    characters_logger.info(
        "character identities: %d checks, %d failed", len(report.checks), len(report.failed)
    )
    return report


def verify_char0(D: int = 10, seed: int = 0, samples: int = 3) -> Report:
    """Seeded characteristic-0 checks of the series operator calculus.

    Runs over the character carrier, where ``phi = mobius * psi``; there
    the symmetric and Lie power operators are mutually inverse.
    """
    rng = np.random.default_rng(seed)
    carrier = CharCarrier(D)
    report = Report(seed=seed)
    params = {"D": D, "samples": samples}

    def over_samples(check):
        def run():
            for sample in range(samples):
                outcome = check()
                passed, witness = outcome if isinstance(outcome, tuple) else (outcome, None)
                if not passed:
                    return False, "sample {}: {}".format(sample, witness)
            return True

        return run

    def in_t():
        return random_series(carrier, D, rng, "t")

    def in_one_plus():
        return random_series(carrier, D, rng, "1+t")

    def round_trip(draw, there, back):
        def check():
            x = draw()
            return describe_difference(back(there(x)), x)

        return over_samples(check)

    report.run("exp-log-inverse", params, round_trip(in_t, series_exp, series_log))
    report.run("log-exp-inverse", params, round_trip(in_one_plus, series_log, series_exp))
    report.run("Exp-Log-inverse", params, round_trip(in_t, series_Log, series_Exp))
    report.run("Log-Exp-inverse", params, round_trip(in_t, series_Exp, series_Log))

    for family_name in ("psi", "phi"):
        family = getattr(carrier, family_name)

        def linearity(family=family):
            f, g = in_t(), in_t()
            c = Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))
            return describe_difference(plus_op(f + g * c, family), plus_op(f, family) + plus_op(g, family) * c)

        def subst(family=family):
            f = in_t()
            q = int(rng.integers(2, 4))
            return describe_difference(plus_op(subst_power(f, q), family), subst_power(plus_op(f, family), q))

        def filtration(family=family):
            q = int(rng.integers(2, D + 1))
            f = in_t()
            shifted = TruncSeries(carrier, D, [carrier.zero()] * q + list(f.coeffs[q:]))
            image = plus_op(shifted, family)
            low = next((j for j in range(q) if not carrier.is_zero(image.coeff(j))), None)
            return low is None, None if low is None else "t^{} nonzero".format(low)

        def additivity(family=family):
            # sum of f_i in t^i Pi, one summand per degree
            parts = []
            for i in range(1, D + 1):
                f = in_t()
                parts.append(TruncSeries(carrier, D, [carrier.zero()] * i + list(f.coeffs[i:])))
            total = parts[0]
            image = plus_op(parts[0], family)
            for part in parts[1:]:
                total = total + part
                image = image + plus_op(part, family)
            return describe_difference(plus_op(total, family), image)

        fam = {"family": family_name}
        report.run("plus-op-linearity", dict(params, **fam), over_samples(linearity))
        report.run("plus-op-substitution", dict(params, **fam), over_samples(subst))
        report.run("plus-op-filtration", dict(params, **fam), over_samples(filtration))
        report.run("plus-op-additivity", dict(params, **fam), over_samples(additivity))

    def multiplicative():
        f, g = in_t(), in_t()
        return describe_difference(star_S(f + g), star_S(f) * star_S(g))

    def additive():
        f, g = in_one_plus(), in_one_plus()
        return describe_difference(star_L(f * g), star_L(f) + star_L(g))

    def functional_equation():
        f, g = in_t(), in_t()
        return describe_difference(script_L(f) + script_L(g), script_L(f + g - f * g))

    def star_vs_plus():
        f = in_t()
        return describe_difference(star_L(star_S(f)), plus_L(plus_S(f)))

    report.run("star-S-multiplicative", params, over_samples(multiplicative))
    report.run("star-L-additive", params, over_samples(additive))
    report.run("script-L-functional-equation", params, over_samples(functional_equation))
    report.run("star-L-star-S-equals-plus", params, over_samples(star_vs_plus))
    report.run("star-L-inverts-star-S", params, round_trip(in_t, star_S, star_L))
    report.run("star-S-inverts-star-L", params, round_trip(in_one_plus, star_L, star_S))

    def pbw():
        g = in_t()
        return describe_difference(star_S(script_L(g)), geometric(g))

    report.run("pbw-geometric", params, over_samples(pbw))
    characters_logger.info("char0 suite: %d checks, %d failed", len(report.checks), len(report.failed))
    return report

"""A module for the rational Green ring of the cyclic group of prime order p.

Elements are rational combinations of the indecomposables J_1, ..., J_p
(J_a is one Jordan block of size a, J_1 the trivial module and the ring
identity). Products, Adams operations, Lie resolvents and Lie powers are
all computed from explicit matrices over F_p and cached per prime.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, Symbol
from sympy.parsing.sympy_parser import parse_expr

from . import _globals
from ._exceptions import BudgetExceeded, DomainError, NegativeCoords
from .LieBasis import lie_power_rep, restricted_lie_power_rep
from .MatRep import MatRep, check_budget, direct_sum, jordan_block, jordan_type, sym_power, tensor, tensor_power
from .Series import CarrierRing, TruncSeries, series_log
from .Utils import as_fraction, divisors, format_fraction, is_integral, mobius, pretty_fraction, require_prime

modular_logger = logging.getLogger("modular")

METHODS = ("direct", "recursive")


@dataclass(frozen=True)
class GreenElement:
    """A rational combination of J_1, ..., J_p; ``coords[a - 1]`` is the coefficient of J_a."""

    p: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coords = tuple(as_fraction(c) for c in self.coords)
        if len(coords) != self.p:
            raise DomainError("a Green-ring element for p={} has {} coordinates, got {}".format(
                self.p, self.p, len(coords)))
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, p: int) -> "GreenElement":
        return cls(p, (0,) * p)

    @classmethod
    def one(cls, p: int) -> "GreenElement":
        return cls.J(p, 1)

    @classmethod
    def J(cls, p: int, a: int) -> "GreenElement":
        """The indecomposable J_a."""
        if not 1 <= a <= p:
            raise DomainError("J_a needs 1 <= a <= p={}, got {}".format(p, a))
        coords = [0] * p
        coords[a - 1] = 1
        return cls(p, tuple(coords))

    @classmethod
    def from_jordan_type(cls, p: int, parts: Sequence[int]) -> "GreenElement":
        coords = [0] * p
        for part in parts:
            coords[part - 1] += 1
        return cls(p, tuple(coords))

    @property
    def dim(self) -> Fraction:
        return sum((a * c for a, c in enumerate(self.coords, start=1)), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_actual(self) -> bool:
        """Whether this is the class of a module: non-negative integer coordinates."""
        return all(c >= 0 and is_integral(c) for c in self.coords)

    def items(self) -> List[Tuple[int, Fraction]]:
        return [(a, c) for a, c in enumerate(self.coords, start=1) if c]

    def _check_same(self, other: "GreenElement") -> None:
        if other.p != self.p:
            raise DomainError("Green-ring elements for different primes {} and {}".format(self.p, other.p))

    def __add__(self, other):
        if isinstance(other, GreenElement):
            self._check_same(other)
            return GreenElement(self.p, tuple(x + y for x, y in zip(self.coords, other.coords)))
        if isinstance(other, (int, Fraction)):
            return self + GreenElement.one(self.p) * other
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GreenElement":
        return GreenElement(self.p, tuple(-c for c in self.coords))

    def __sub__(self, other):
        if isinstance(other, (GreenElement, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GreenElement):
            return green_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return GreenElement(self.p, tuple(c * other for c in self.coords))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "GreenElement":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("only non-negative integer powers, got {!r}".format(exponent))
        result = GreenElement.one(self.p)
        for _ in range(exponent):
            result = green_mul(result, self)
        return result

    def __str__(self) -> str:
        pieces = []
        for a, c in self.items():
            magnitude = abs(c)
            if magnitude == 1:
                body = "J{}".format(a)
            elif magnitude.denominator == 1:
                body = "{}J{}".format(magnitude, a)
            else:
                body = "({})J{}".format(pretty_fraction(magnitude), a)
            pieces.append(("-" if c < 0 else "+", body))
        if not pieces:
            return "0"
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += " {} {}".format(sign, body)
        return text

    def to_json(self) -> Dict:
        return {"p": self.p, "coords": [format_fraction(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data: Dict) -> "GreenElement":
        try:
            return cls(int(data["p"]), tuple(as_fraction(c) for c in data["coords"]))
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError("malformed GreenElement JSON: {}".format(e)) from e


def J(p: int, a: int) -> GreenElement:
    return GreenElement.J(p, a)


def _require_actual(x: GreenElement) -> None:
    if not x.is_actual():
        raise NegativeCoords("{} is not the class of a module".format(x))


def decompose(M: MatRep) -> GreenElement:
    """The class of `M`: the multiplicity of each J_a in its Jordan type."""
    return GreenElement.from_jordan_type(M.p, jordan_type(M))


def rep_of(x: GreenElement) -> MatRep:
    """A block-diagonal module realising an actual Green-ring class."""
    _require_actual(x)
    check_budget(int(x.dim))
    blocks = []
    for a, c in x.items():
        blocks.extend([jordan_block(x.p, a)] * int(c))
    if not blocks:
        return MatRep(x.p, np.zeros((0, 0), dtype=np.int64))
    return direct_sum(*blocks)


@lru_cache(maxsize=None)
def structure_constants(p: int) -> Tuple[Tuple[GreenElement, ...], ...]:
    """``table[a-1][b-1]`` is the class of J_a (x) J_b, from explicit Kronecker products."""
    require_prime(p)
    modular_logger.debug("computing Green-ring structure constants for p=%d", p)
    blocks = [jordan_block(p, a) for a in range(1, p + 1)]
    return tuple(tuple(decompose(tensor(A, B)) for B in blocks) for A in blocks)


def green_mul(x: GreenElement, y: GreenElement) -> GreenElement:
    x._check_same(y)
    table = structure_constants(x.p)
    out = [Fraction(0)] * x.p
    for a, cx in x.items():
        for b, cy in y.items():
            for c, k in table[a - 1][b - 1].items():
                out[c - 1] += cx * cy * k
    return GreenElement(x.p, tuple(out))


def _extend_linearly(x: GreenElement, value: Callable[[int], GreenElement]) -> GreenElement:
    total = GreenElement.zero(x.p)
    for a, c in x.items():
        total = total + value(a) * c
    return total


def sym_power_green(x: GreenElement, r: int) -> GreenElement:
    """Class of the r-th symmetric power of an actual element."""
    _require_actual(x)
    dim = int(x.dim)
    if comb(dim + r - 1, r) > _globals.BUDGET:
        raise BudgetExceeded("S^{} of a {}-dimensional module is over budget".format(r, dim))
    return decompose(sym_power(rep_of(x), r))


# ---------------------------------------------------------------------------
# Adams operations, Lie resolvents, rho
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _adams_indecomposable(p: int, b: int, r: int) -> GreenElement:
    J_b = GreenElement.J(p, b)
    carrier = GreenCarrier(p)
    coeffs = [carrier.one()] + [sym_power_green(J_b, j) for j in range(1, r + 1)]
    logged = series_log(TruncSeries(carrier, r, coeffs))
    return logged.coeff(r) * r


def adams_green(x: GreenElement, r: int, D: Optional[int] = None) -> GreenElement:
    """The r-th Adams operation, ``r * [t^r] log S(x, t)``.

    Evaluated on each indecomposable from explicit symmetric powers and
    extended Q-linearly.

    Parameters
    ----------
    x : GreenElement
        Any element.
    r : int
        r >= 1.
    D : int, optional
        Truncation degree of the symmetric-power series; must be >= r.
    """
    if r < 1:
        raise DomainError("adams_green needs r >= 1, got {}".format(r))
    if D is not None and r > D:
        raise DomainError("psi^{} is beyond the truncation degree {}".format(r, D))
    if r == 1:
        return x
    return _extend_linearly(x, lambda b: _adams_indecomposable(x.p, b, r))


@lru_cache(maxsize=None)
def _lie_indecomposable(p: int, b: int, d: int) -> GreenElement:
    modular_logger.debug("L^%d(J_%d) at p=%d by matrices", d, b, p)
    return decompose(lie_power_rep(jordan_block(p, b), d))


@lru_cache(maxsize=None)
def _phi_indecomposable(p: int, b: int, r: int, method: str) -> GreenElement:
    J_b = GreenElement.J(p, b)
    if method == "direct":
        # every term lives in T^r(J_b)
        check_budget(b, r)
        V = jordan_block(p, b)
        total = GreenElement.zero(p)
        for d in divisors(r):
            mu = mobius(r // d)
            if mu:
                total = total + decompose(lie_power_rep(tensor_power(V, r // d), d)) * (mu * d)
        return total
    # r L^r(V) = sum over d | r of Phi^d(V^(r/d)); only L^r(V) needs matrices
    total = _lie_indecomposable(p, b, r) * r
    for d in divisors(r)[:-1]:
        total = total - phi_green(J_b ** (r // d), d, method)
    return total


def phi_green(x: GreenElement, r: int, method: str = "recursive") -> GreenElement:
    """The r-th Lie resolvent, extended Z-linearly from the indecomposables.

    Parameters
    ----------
    x : GreenElement
        Any element.
    r : int
        r >= 1.
    method : str
        ``"direct"`` evaluates ``sum over d | r of mobius(r/d) d L^d(V^(r/d))``
        with explicit matrices for every term; ``"recursive"`` computes only
        L^r(J_b) by matrices and reduces the other terms to lower resolvents.
    """
    if method not in METHODS:
        raise DomainError("unknown method {!r}; expected one of {}".format(method, METHODS))
    if r < 1:
        raise DomainError("phi_green needs r >= 1, got {}".format(r))
    if r == 1:
        return x
    return _extend_linearly(x, lambda b: _phi_indecomposable(x.p, b, r, method))


def rho_green(x: GreenElement, r: int) -> GreenElement:
    """``rho^r = (1/r) sum over d | r of Phi^d(psi^(r/d)(x))``."""
    if r < 1:
        raise DomainError("rho_green needs r >= 1, got {}".format(r))
    total = GreenElement.zero(x.p)
    for d in divisors(r):
        total = total + phi_green(adams_green(x, r // d), d)
    return total / r


def lie_power_green(x: GreenElement, d: int, method: str = "direct") -> GreenElement:
    """Class of the d-th Lie power of an actual element.

    ``"direct"`` builds L^d on a realisation of `x`; ``"recursive"`` uses
    ``(1/d) sum over e | d of Phi^e(x^(d/e))``.
    """
    if method not in METHODS:
        raise DomainError("unknown method {!r}; expected one of {}".format(method, METHODS))
    if d < 1:
        raise DomainError("lie_power_green needs d >= 1, got {}".format(d))
    _require_actual(x)
    if d == 1:
        return x
    if method == "recursive":
        total = GreenElement.zero(x.p)
        for e in divisors(d):
            total = total + phi_green(x ** (d // e), e)
        return total / d
    if len(x.items()) == 1 and x.items()[0][1] == 1:
        return _lie_indecomposable(x.p, x.items()[0][0], d)
    check_budget(int(x.dim), d)
    return decompose(lie_power_rep(rep_of(x), d))


def restricted_lie_power_green(x: GreenElement, d: int) -> GreenElement:
    """Class of the degree-d restricted Lie power of an actual element."""
    _require_actual(x)
    if d < 1:
        raise DomainError("restricted_lie_power_green needs d >= 1, got {}".format(d))
    if d == 1:
        return x
    check_budget(int(x.dim), d)
    return decompose(restricted_lie_power_rep(rep_of(x), d))


class GreenCarrier(CarrierRing):
    """The rational Green ring of C_p as a series carrier."""

    name = "green"

    def __init__(self, p: int) -> None:
        self.p = require_prime(p)

    def zero(self) -> GreenElement:
        return GreenElement.zero(self.p)

    def one(self) -> GreenElement:
        return GreenElement.one(self.p)

    def is_zero(self, x: GreenElement) -> bool:
        return x.is_zero()

    def psi(self, x: GreenElement, r: int) -> GreenElement:
        return adams_green(x, r)

    def phi(self, x: GreenElement, r: int) -> GreenElement:
        return phi_green(x, r)

    def random_element(self, rng: np.random.Generator, degree: int) -> GreenElement:
        return GreenElement(self.p, tuple(int(c) for c in rng.integers(0, 3, size=self.p)))


def parse_green(expr: str, p: int) -> GreenElement:
    """Evaluate a polynomial expression in J1, ..., Jp, e.g. ``"J2*J2 + 2*J1"``."""
    require_prime(p)
    symbols = {"J{}".format(a): Symbol("J{}".format(a)) for a in range(1, p + 1)}
    try:
        parsed = parse_expr(expr, local_dict=symbols)
    except Exception as e:
        raise DomainError("cannot parse {!r}: {}".format(expr, e)) from e
    unknown = {str(s) for s in parsed.free_symbols} - set(symbols)
    if unknown:
        raise DomainError("unknown symbols {} for p={}".format(sorted(unknown), p))
    gens = list(symbols.values())
    try:
        terms = [
            (exponents, Fraction(int(coeff.p), int(coeff.q)))
            for exponents, coeff in Poly(parsed, *gens).terms()
        ]
    except Exception as e:
        raise DomainError("{!r} is not a polynomial in J1..J{} with rational coefficients".format(expr, p)) from e
    total = GreenElement.zero(p)
    for exponents, coeff in terms:
        term = GreenElement.one(p) * coeff
        for a, e in enumerate(exponents, start=1):
            if e:
                term = term * GreenElement.J(p, a) ** e
        total = total + term
    return total


def explore_rho(x: GreenElement, max_m: int) -> List[Tuple[int, Optional[GreenElement]]]:
    """``rho^(p^m)(x)`` for m = 0..max_m, None where the budget runs out.

    Exploratory only: nothing is asserted about the values.
    """
    rows: List[Tuple[int, Optional[GreenElement]]] = []
    for m in range(max_m + 1):
        try:
            rows.append((m, rho_green(x, x.p**m)))
        except BudgetExceeded as e:
            modular_logger.info("explore_rho stopped at m=%d: %s", m, e)
            rows.append((m, None))
    return rows

"""A module for truncated power series over a carrier ring and the operator calculus on them.

A carrier is any commutative unital Q-algebra whose elements support
exact ``+``, ``-``, ``*`` by rationals and ``==``, and which supplies two
families of Q-linear self-maps: the Adams operations ``psi(x, r)`` and
the Lie resolvents ``phi(x, r)``. One operator layer then serves the
symmetric-function backend and the Green ring alike.
"""
import logging
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Callable, List, Optional, Sequence, Union

import numpy as np

from ._exceptions import DomainError
from .Utils import divisors, is_power_of, mobius, require_prime

series_logger = logging.getLogger("series")

ComponentFamily = Callable[[Any, int], Any]


class CarrierRing(ABC):
    """Abstract contract for the coefficient ring of a `TruncSeries`."""

    name = "carrier"

    @abstractmethod
    def zero(self) -> Any:
        ...

    @abstractmethod
    def one(self) -> Any:
        ...

    def mul(self, x: Any, y: Any) -> Any:
        return x * y

    def scale(self, x: Any, c: Fraction) -> Any:
        return x * c

    def is_zero(self, x: Any) -> bool:
        return x == self.zero()

    @abstractmethod
    def psi(self, x: Any, r: int) -> Any:
        """The r-th Adams operation."""

    @abstractmethod
    def phi(self, x: Any, r: int) -> Any:
        """The r-th Lie resolvent."""

    def encode(self, x: Any) -> Any:
        return x.to_json()

    @abstractmethod
    def random_element(self, rng: np.random.Generator, degree: int) -> Any:
        """A small random element suitable as the coefficient of t**degree."""


class RationalCarrier(CarrierRing):
    """The rationals viewed as the character ring of the trivial module.

    Adams operations are the identity and, in characteristic 0,
    ``phi(x, r) = mobius(r) * x``.
    """

    name = "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def psi(self, x: Fraction, r: int) -> Fraction:
        return Fraction(x)

    def phi(self, x: Fraction, r: int) -> Fraction:
        return mobius(r) * Fraction(x)

    def encode(self, x: Fraction) -> str:
        return "{}/{}".format(Fraction(x).numerator, Fraction(x).denominator)

    def random_element(self, rng: np.random.Generator, degree: int) -> Fraction:
        return Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))


class TruncSeries:
    """A power series ``c_0 + c_1 t + ... + c_D t**D`` over a carrier.

    Parameters
    ----------
    carrier : CarrierRing
        The coefficient ring.
    D : int
        Truncation degree; coefficients beyond it are discarded.
    coeffs : Sequence, optional
        Coefficients from degree 0 upwards; missing ones are zero.
    """

    __slots__ = ("carrier", "D", "_coeffs")

    def __init__(self, carrier: CarrierRing, D: int, coeffs: Optional[Sequence] = None) -> None:
        if D < 1:
            raise DomainError("truncation degree must be positive, got {}".format(D))
        coeffs = list(coeffs or [])[: D + 1]
        coeffs += [carrier.zero()] * (D + 1 - len(coeffs))
        self.carrier = carrier
        self.D = D
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, carrier: CarrierRing, D: int, value: Any, r: int = 1) -> "TruncSeries":
        """The series ``value * t**r``."""
        coeffs = [carrier.zero()] * (D + 1)
        if r <= D:
            coeffs[r] = value
        return cls(carrier, D, coeffs)

    @classmethod
    def constant(cls, carrier: CarrierRing, D: int, value: Any = None) -> "TruncSeries":
        return cls(carrier, D, [carrier.one() if value is None else value])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, r: int) -> Any:
        """Coefficient of t**r, for 0 <= r <= D."""
        if not 0 <= r <= self.D:
            raise DomainError("coefficient {} is beyond the truncation degree {}".format(r, self.D))
        return self._coeffs[r]

    def in_t_pi(self) -> bool:
        return self.carrier.is_zero(self._coeffs[0])

    def in_one_plus_t_pi(self) -> bool:
        return self._coeffs[0] == self.carrier.one()

    def truncate(self, D: int) -> "TruncSeries":
        return TruncSeries(self.carrier, D, self._coeffs[: D + 1])

    def _align(self, other: "TruncSeries"):
        D = min(self.D, other.D)
        return D, self._coeffs[: D + 1], other._coeffs[: D + 1]

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            D, a, b = self._align(other)
            return TruncSeries(self.carrier, D, [x + y for x, y in zip(a, b)])
        return NotImplemented

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.carrier, self.D, [self.carrier.scale(x, Fraction(-1)) for x in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return self + (-other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            D, a, b = self._align(other)
            carrier = self.carrier
            out = [carrier.zero() for _ in range(D + 1)]
            for i, x in enumerate(a):
                if carrier.is_zero(x):
                    continue
                for j in range(D + 1 - i):
                    if carrier.is_zero(b[j]):
                        continue
                    out[i + j] = out[i + j] + carrier.mul(x, b[j])
            return TruncSeries(carrier, D, out)
        if isinstance(other, (int, Fraction)):
            return TruncSeries(
                self.carrier, self.D, [self.carrier.scale(x, Fraction(other)) for x in self._coeffs]
            )
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def first_difference(self, other: "TruncSeries") -> Optional[int]:
        """Lowest degree at which the two series differ, up to the common D."""
        _, a, b = self._align(other)
        for r, (x, y) in enumerate(zip(a, b)):
            if x != y:
                return r
        return None

    def __eq__(self, other) -> bool:
        # compared through the smaller truncation degree
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.first_difference(other) is None

    __hash__ = None

    def __repr__(self) -> str:
        return "TruncSeries(D={}, coeffs={!r})".format(self.D, list(self._coeffs))

    def __str__(self) -> str:
        terms = []
        for r, c in enumerate(self._coeffs):
            if self.carrier.is_zero(c):
                continue
            terms.append("({})".format(c) + ("" if r == 0 else " t^{}".format(r)))
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"D": self.D, "coeffs": [self.carrier.encode(c) for c in self._coeffs]}


def _require_t_pi(f: TruncSeries, op: str) -> None:
    if not f.in_t_pi():
        raise DomainError("{} needs a series with zero constant term".format(op))


def _require_one_plus(g: TruncSeries, op: str) -> None:
    if not g.in_one_plus_t_pi():
        raise DomainError("{} needs a series with constant term 1".format(op))


def series_exp(f: TruncSeries) -> TruncSeries:
    """``exp(f) = 1 + f + f**2/2! + ...`` for f in tPi.

    Uses the recurrence ``n g_n = sum_k k f_k g_{n-k}`` from ``g' = f' g``.
    """
    _require_t_pi(f, "exp")
    carrier = f.carrier
    g = [carrier.one()]
    for n in range(1, f.D + 1):
        total = carrier.zero()
        for k in range(1, n + 1):
            if carrier.is_zero(f.coeffs[k]):
                continue
            total = total + carrier.scale(carrier.mul(f.coeffs[k], g[n - k]), Fraction(k))
        g.append(carrier.scale(total, Fraction(1, n)))
    return TruncSeries(carrier, f.D, g)


def series_log(g: TruncSeries) -> TruncSeries:
    """``log(g) = (g-1) - (g-1)**2/2 + ...`` for g in 1+tPi."""
    _require_one_plus(g, "log")
    carrier = g.carrier
    h = [carrier.zero()]
    for n in range(1, g.D + 1):
        total = carrier.zero()
        for k in range(1, n):
            if carrier.is_zero(h[k]):
                continue
            total = total + carrier.scale(carrier.mul(h[k], g.coeffs[n - k]), Fraction(k))
        h.append(g.coeffs[n] - carrier.scale(total, Fraction(1, n)))
    return TruncSeries(carrier, g.D, h)


def series_Exp(f: TruncSeries) -> TruncSeries:
    """``Exp(f) = 1 - exp(-f)``, a bijection of tPi."""
    _require_t_pi(f, "Exp")
    one = TruncSeries.constant(f.carrier, f.D)
    return one - series_exp(-f)


def series_Log(f: TruncSeries) -> TruncSeries:
    """``Log(f) = -log(1 - f) = f + f**2/2 + ...``, the inverse of `series_Exp`."""
    _require_t_pi(f, "Log")
    one = TruncSeries.constant(f.carrier, f.D)
    return -series_log(one - f)


def subst_power(f: TruncSeries, r: int) -> TruncSeries:
    """Replace t by t**r."""
    if r < 1:
        raise DomainError("subst_power needs r >= 1, got {}".format(r))
    carrier = f.carrier
    out = [carrier.zero()] * (f.D + 1)
    for j in range(0, f.D // r + 1):
        out[j * r] = f.coeffs[j]
    return TruncSeries(carrier, f.D, out)


def plus_op(f: TruncSeries, family: ComponentFamily) -> TruncSeries:
    """The additive operator built from a component family.

    Parameters
    ----------
    f : TruncSeries
        A series in tPi.
    family : ComponentFamily
        ``family(x, d)`` is the d-th component map.

    Returns
    -------
    TruncSeries
        The series whose coefficient at t**r is
        ``sum over d | r of (1/d) * family(f_{r/d}, d)``.
    """
    _require_t_pi(f, "plus_op")
    carrier = f.carrier
    out = [carrier.zero()]
    for r in range(1, f.D + 1):
        total = carrier.zero()
        for d in divisors(r):
            value = f.coeffs[r // d]
            if carrier.is_zero(value):
                continue
            total = total + carrier.scale(family(value, d), Fraction(1, d))
        out.append(total)
    return TruncSeries(carrier, f.D, out)


def plus_S(f: TruncSeries) -> TruncSeries:
    return plus_op(f, f.carrier.psi)


def plus_L(f: TruncSeries) -> TruncSeries:
    return plus_op(f, f.carrier.phi)


def star_S(f: TruncSeries) -> TruncSeries:
    """The symmetric-power operator: ``exp`` after the Adams plus operator."""
    return series_exp(plus_S(f))


def star_L(g: TruncSeries) -> TruncSeries:
    """The Lie-power operator: the resolvent plus operator after ``log``."""
    return plus_L(series_log(g))


def script_L(f: TruncSeries) -> TruncSeries:
    """The Lie module function, resolvent plus operator after ``Log``.

    On ``V t`` its coefficient at t**r is the class of the r-th Lie power of V.
    """
    return plus_L(series_Log(f))


def is_p_typical(f: TruncSeries, p: int) -> bool:
    """Whether the only nonzero coefficients sit at powers of `p`."""
    require_prime(p)
    if not f.in_t_pi():
        return False
    return all(
        f.carrier.is_zero(c) or is_power_of(r, p) for r, c in enumerate(f.coeffs) if r >= 1
    )


def series_inverse(g: TruncSeries) -> TruncSeries:
    """Multiplicative inverse of g in 1+tPi."""
    _require_one_plus(g, "series_inverse")
    carrier = g.carrier
    v = [carrier.one()]
    for n in range(1, g.D + 1):
        total = carrier.zero()
        for k in range(1, n + 1):
            if carrier.is_zero(g.coeffs[k]):
                continue
            total = total + carrier.mul(g.coeffs[k], v[n - k])
        v.append(carrier.scale(total, Fraction(-1)))
    return TruncSeries(carrier, g.D, v)


def geometric(g: TruncSeries) -> TruncSeries:
    """``(1 - g)**-1 = 1 + g + g**2 + ...`` for g in tPi."""
    _require_t_pi(g, "geometric")
    return series_inverse(TruncSeries.constant(g.carrier, g.D) - g)


def random_series(
    carrier: CarrierRing,
    D: int,
    rng: Union[np.random.Generator, int, None] = None,
    region: str = "t",
    density: float = 0.75,
) -> TruncSeries:
    """A seeded random series in tPi (``region="t"``) or 1+tPi (``region="1+t"``).

    The coefficient of t**r is drawn by ``carrier.random_element(rng, r)``
    so that graded carriers keep it homogeneous of degree r.
    """
    if region not in ("t", "1+t"):
        raise DomainError("region must be 't' or '1+t', got {!r}".format(region))
    rng = np.random.default_rng(rng)
    coeffs: List[Any] = [carrier.zero() if region == "t" else carrier.one()]
    for r in range(1, D + 1):
        if rng.random() < density:
            coeffs.append(carrier.random_element(rng, r))
        else:
            coeffs.append(carrier.zero())
    series_logger.debug("random %s series over %s with D=%d", region, carrier.name, D)
    return TruncSeries(carrier, D, coeffs)

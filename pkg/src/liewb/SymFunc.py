"""A module for formal characters: partitions and symmetric functions.

Elements live in the inverse-limit ring of symmetric functions over the
rationals, graded by degree. The power-sum basis is the working basis:
products and the endomorphisms ``chi(., r)`` are trivial there. The
monomial and Schur bases are only reached when a report needs them.
"""
import json
import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Tuple, Union

from sympy.utilities.iterables import partitions as _sympy_partitions

from ._exceptions import DomainError
from .Utils import Scalar, as_fraction, format_fraction, pretty_fraction

symfunc_logger = logging.getLogger("symfunc")

Partition = Tuple[int, ...]
Terms = Dict[Partition, Fraction]


class Basis(str, Enum):
    """The five classical bases, tagged by their one-letter wire names."""

    POWER_SUM = "p"
    MONOMIAL = "m"
    HOMOGENEOUS = "h"
    ELEMENTARY = "e"
    SCHUR = "s"

    @classmethod
    def parse(cls, tag: Union[str, "Basis"]) -> "Basis":
        """Accept a `Basis`, a one-letter tag or a long name such as "powerSum"."""
        if isinstance(tag, Basis):
            return tag
        aliases = {
            "powersum": "p",
            "monomial": "m",
            "homogeneous": "h",
            "elementary": "e",
            "schur": "s",
        }
        key = aliases.get(str(tag).lower(), str(tag))
        try:
            return cls(key)
        except ValueError:
            raise DomainError("unknown basis {!r}".format(tag)) from None


P, M, H, E, S = Basis.POWER_SUM, Basis.MONOMIAL, Basis.HOMOGENEOUS, Basis.ELEMENTARY, Basis.SCHUR


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _partitions(d: int, max_len: Optional[int]) -> Tuple[Partition, ...]:
    found = []
    kwargs = {} if max_len is None else {"m": max_len}
    for multiplicities in _sympy_partitions(d, **kwargs):
        parts: List[int] = []
        for part in sorted(multiplicities, reverse=True):
            parts.extend([part] * multiplicities[part])
        found.append(tuple(parts))
    return tuple(sorted(found, reverse=True))


def partitions_of(d: int, max_len: Optional[int] = None) -> List[Partition]:
    """List the partitions of `d` in descending lexicographic order.

    Parameters
    ----------
    d : int
        The weight, d >= 0.
    max_len : int, optional
        Keep only partitions with at most this many parts.

    Returns
    -------
    List[Partition]
        For example ``partitions_of(3)`` is ``[(3,), (2, 1), (1, 1, 1)]``.
    """
    if d < 0:
        raise DomainError("partitions are of non-negative integers, got {}".format(d))
    if max_len is not None and max_len < 1:
        raise DomainError("max_len must be positive, got {}".format(max_len))
    if d == 0:
        return [()]
    return list(_partitions(d, max_len))


def normalize_partition(parts: Iterable[int]) -> Partition:
    """Sort `parts` into a partition, rejecting non-positive parts."""
    parts = tuple(sorted((int(x) for x in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise DomainError("partition parts must be positive, got {}".format(parts))
    return parts


def merge(la: Partition, mu: Partition) -> Partition:
    """The partition whose parts are those of `la` and `mu` together."""
    return tuple(sorted(la + mu, reverse=True))


def z_index(la: Partition) -> int:
    """Order of the centraliser of a permutation of cycle type `la`."""
    z = 1
    for part in set(la):
        count = la.count(part)
        z *= part**count * factorial(count)
    return z


def dominates(la: Partition, mu: Partition) -> bool:
    """Whether `la` dominates `mu` (partial sums of `la` are never smaller)."""
    if sum(la) != sum(mu):
        return False
    total_la = total_mu = 0
    for i in range(max(len(la), len(mu))):
        total_la += la[i] if i < len(la) else 0
        total_mu += mu[i] if i < len(mu) else 0
        if total_la < total_mu:
            return False
    return True


def conjugate(la: Partition) -> Partition:
    if not la:
        return ()
    return tuple(sum(1 for part in la if part > i) for i in range(la[0]))


# ---------------------------------------------------------------------------
# Basis transitions (memoised, keyed by partition)
# ---------------------------------------------------------------------------


def _clean(terms: Mapping[Partition, Fraction]) -> Terms:
    return {key: value for key, value in terms.items() if value}


def _accumulate(out: Terms, expansion: Mapping[Partition, Fraction], coeff: Fraction) -> None:
    for key, value in expansion.items():
        out[key] = out.get(key, 0) + coeff * value


def _multiply_terms(a: Mapping[Partition, Fraction], b: Mapping[Partition, Fraction]) -> Terms:
    """Product in a multiplicative basis (p, h or e): indices merge."""
    out: Terms = {}
    for la, ca in a.items():
        for mu, cb in b.items():
            key = merge(la, mu)
            out[key] = out.get(key, 0) + ca * cb
    return _clean(out)


@lru_cache(maxsize=None)
def _part_in_p(basis: Basis, n: int) -> Terms:
    # h_n and e_n as class-function sums over cycle types
    out = {}
    for mu in partitions_of(n):
        coeff = Fraction(1, z_index(mu))
        if basis is E and (n - len(mu)) % 2:
            coeff = -coeff
        out[mu] = coeff
    return out


@lru_cache(maxsize=None)
def _multiplicative_in_p(basis: Basis, la: Partition) -> Terms:
    out: Terms = {(): Fraction(1)}
    for part in la:
        out = _multiply_terms(out, _part_in_p(basis, part))
    return out


@lru_cache(maxsize=None)
def _p_part_in(basis: Basis, n: int) -> Terms:
    """p_n in the h or e basis, by the Newton identities."""
    out: Terms = {(n,): Fraction(n)}
    for i in range(1, n):
        # h: p_n = n h_n - sum p_i h_{n-i}
        # e: p_n = (-1)^(n-1) (n e_n - sum (-1)^(i-1) p_i e_{n-i})
        coeff = Fraction(-1) if basis is H else Fraction((-1) ** i)
        _accumulate(out, _multiply_terms(_p_part_in(basis, i), {(n - i,): Fraction(1)}), coeff)
    if basis is E and (n - 1) % 2:
        out = {key: -value for key, value in out.items()}
    return _clean(out)


@lru_cache(maxsize=None)
def _p_in_multiplicative(basis: Basis, la: Partition) -> Terms:
    out: Terms = {(): Fraction(1)}
    for part in la:
        out = _multiply_terms(out, _p_part_in(basis, part))
    return out


@lru_cache(maxsize=None)
def _schur_in_h(la: Partition) -> Terms:
    """Jacobi-Trudi: s_la = det(h_{la_i - i + j}), expanded row by row."""
    length = len(la)

    @lru_cache(maxsize=None)
    def expand(row: int, used: int) -> Mapping[Partition, int]:
        if row == length:
            return {(): 1}
        out: Dict[Partition, int] = {}
        for col in range(length):
            if used >> col & 1:
                continue
            k = la[row] - row + col
            if k < 0:
                continue
            sign = -1 if bin(used >> (col + 1)).count("1") % 2 else 1
            for key, value in expand(row + 1, used | (1 << col)).items():
                new_key = merge((k,), key) if k > 0 else key
                out[new_key] = out.get(new_key, 0) + sign * value
        return {key: value for key, value in out.items() if value}

    return {key: Fraction(value) for key, value in expand(0, 0).items()}


@lru_cache(maxsize=None)
def _schur_in_p(la: Partition) -> Terms:
    out: Terms = {}
    for mu, coeff in _schur_in_h(la).items():
        _accumulate(out, _multiplicative_in_p(H, mu), coeff)
    return _clean(out)


def _count_assignments(parts: Partition, bins: Partition) -> int:
    """Ways to send each part to a bin so that the bins fill exactly."""

    @lru_cache(maxsize=None)
    def count(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(parts):
            return int(not any(remaining))
        total = 0
        for j, room in enumerate(remaining):
            if room >= parts[i]:
                total += count(i + 1, remaining[:j] + (room - parts[i],) + remaining[j + 1 :])
        return total

    return count(0, bins)


@lru_cache(maxsize=None)
def _p_in_m(la: Partition) -> Terms:
    out = {}
    for mu in partitions_of(sum(la)):
        c = _count_assignments(la, mu)
        if c:
            out[mu] = Fraction(c)
    return out


@lru_cache(maxsize=None)
def _m_in_p(la: Partition) -> Terms:
    # p_la = L(la, la) m_la + (terms in strictly coarser partitions)
    expansion = _p_in_m(la)
    out: Terms = {la: Fraction(1)}
    for mu, coeff in expansion.items():
        if mu != la:
            _accumulate(out, _m_in_p(mu), -coeff)
    diagonal = expansion[la]
    return {key: value / diagonal for key, value in out.items() if value}


@lru_cache(maxsize=None)
def _schur_in_m(la: Partition) -> Terms:
    symfunc_logger.debug("Kostka row for %s", la)
    out: Terms = {}
    for mu, coeff in _schur_in_p(la).items():
        _accumulate(out, _p_in_m(mu), coeff)
    return _clean(out)


def kostka(la: Partition, mu: Partition) -> int:
    """Kostka number K(la, mu): the coefficient of m_mu in s_la."""
    return int(_schur_in_m(normalize_partition(la)).get(normalize_partition(mu), 0))


def _m_to_schur(terms: Mapping[Partition, Fraction]) -> Terms:
    """Triangular solve against the unitriangular Kostka matrix."""
    remaining = dict(terms)
    out: Terms = {}
    while remaining:
        la = max(remaining)
        coeff = remaining.pop(la)
        if not coeff:
            continue
        out[la] = coeff
        for mu, k in _schur_in_m(la).items():
            if mu == la:
                continue
            value = remaining.get(mu, 0) - coeff * k
            if value:
                remaining[mu] = value
            else:
                remaining.pop(mu, None)
    return out


def _to_power_sum(basis: Basis, terms: Mapping[Partition, Fraction]) -> Terms:
    if basis is P:
        return dict(terms)
    out: Terms = {}
    for la, coeff in terms.items():
        if basis is H or basis is E:
            expansion = _multiplicative_in_p(basis, la)
        elif basis is S:
            expansion = _schur_in_p(la)
        else:
            expansion = _m_in_p(la)
        _accumulate(out, expansion, coeff)
    return _clean(out)


def _from_power_sum(terms: Mapping[Partition, Fraction], target: Basis) -> Terms:
    if target is P:
        return dict(terms)
    if target is S:
        return _m_to_schur(_from_power_sum(terms, M))
    out: Terms = {}
    for la, coeff in terms.items():
        if target is M:
            expansion = _p_in_m(la)
        else:
            expansion = _p_in_multiplicative(target, la)
        _accumulate(out, expansion, coeff)
    return _clean(out)


# ---------------------------------------------------------------------------
# The element type
# ---------------------------------------------------------------------------


class SymFunc:
    """An immutable element of the symmetric functions over Q.

    Parameters
    ----------
    basis : Union[str, Basis]
        The basis the coefficients refer to, "p", "m", "h", "e" or "s".
    terms : Mapping, optional
        Map from partitions (any iterable of positive ints) to rationals.
        Zero coefficients are dropped.
    """

    __slots__ = ("_basis", "_terms")

    def __init__(self, basis: Union[str, Basis] = P, terms: Optional[Mapping] = None) -> None:
        collected: Terms = {}
        for key, coeff in (terms or {}).items():
            key = normalize_partition(key)
            collected[key] = collected.get(key, 0) + as_fraction(coeff)
        self._basis = Basis.parse(basis)
        self._terms = MappingProxyType(_clean(collected))

    @classmethod
    def _raw(cls, basis: Basis, terms: Terms) -> "SymFunc":
        obj = cls.__new__(cls)
        obj._basis = basis
        obj._terms = MappingProxyType(_clean(terms))
        return obj

    @property
    def basis(self) -> Basis:
        return self._basis

    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return self._terms

    @property
    def degree(self) -> int:
        """Largest weight present (0 for constants and for zero)."""
        return max((sum(la) for la in self._terms), default=0)

    def items(self) -> List[Tuple[Partition, Fraction]]:
        """Terms in canonical (descending lexicographic) partition order."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def to_basis(self, target: Union[str, Basis]) -> "SymFunc":
        return to_basis(self, target)

    def power_sum_terms(self) -> Terms:
        return _to_power_sum(self._basis, self._terms)

    def homogeneous_component(self, d: int) -> "SymFunc":
        return SymFunc._raw(self._basis, {la: c for la, c in self._terms.items() if sum(la) == d})

    def truncate(self, max_degree: int) -> "SymFunc":
        """Drop every term of weight above `max_degree`."""
        return SymFunc._raw(
            self._basis, {la: c for la, c in self._terms.items() if sum(la) <= max_degree}
        )

    # arithmetic -----------------------------------------------------------

    def _coerce_pair(self, other: "SymFunc") -> Tuple[Basis, Terms, Terms]:
        if other._basis is self._basis:
            return self._basis, dict(self._terms), dict(other._terms)
        return P, self.power_sum_terms(), other.power_sum_terms()

    def __add__(self, other):
        if isinstance(other, SymFunc):
            basis, mine, theirs = self._coerce_pair(other)
            _accumulate(mine, theirs, Fraction(1))
            return SymFunc._raw(basis, mine)
        if isinstance(other, (int, Fraction)):
            mine = dict(self._terms)
            mine[()] = mine.get((), Fraction(0)) + Fraction(other)
            return SymFunc._raw(self._basis, mine)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw(self._basis, {la: -c for la, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (SymFunc, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return sym_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return SymFunc._raw(self._basis, {la: c * other for la, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "SymFunc":
        if not isinstance(exponent, int) or exponent < 0:
            raise DomainError("only non-negative integer powers, got {!r}".format(exponent))
        result = SymFunc._raw(P, {(): Fraction(1)})
        base = self
        while exponent:
            if exponent & 1:
                result = sym_mul(result, base)
            exponent >>= 1
            if exponent:
                base = sym_mul(base, base)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFunc._raw(P, {(): Fraction(other)})
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other._basis is self._basis:
            return dict(self._terms) == dict(other._terms)
        return self.power_sum_terms() == other.power_sum_terms()

    def __hash__(self) -> int:
        return hash(frozenset(self.power_sum_terms().items()))

    def __repr__(self) -> str:
        return "SymFunc({!r}, {})".format(self._basis.value, dict(self.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for la, coeff in self.items():
            label = "{}[{}]".format(self._basis.value, ",".join(str(x) for x in la))
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            body = label if magnitude == 1 else "{}*{}".format(pretty_fraction(magnitude), label)
            pieces.append((sign, body))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += " {} {}".format(sign, body)
        return text

    # wire format ------------------------------------------------------------

    def to_json(self) -> Dict:
        """Encode as ``{"basis": ..., "terms": [[[parts...], "num/den"], ...]}``."""
        return {
            "basis": self._basis.value,
            "terms": [[list(la), format_fraction(c)] for la, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Union[str, Mapping]) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["basis"], {tuple(parts): as_fraction(c) for parts, c in data["terms"]})
        except (KeyError, TypeError, ValueError) as e:
            raise DomainError("malformed SymFunc JSON: {}".format(e)) from e


def power_sum(*parts: int) -> SymFunc:
    return SymFunc(P, {parts: 1})


def monomial(*parts: int) -> SymFunc:
    return SymFunc(M, {parts: 1})


def homogeneous(*parts: int) -> SymFunc:
    return SymFunc(H, {parts: 1})


def elementary(*parts: int) -> SymFunc:
    return SymFunc(E, {parts: 1})


def schur(*parts: int) -> SymFunc:
    return SymFunc(S, {parts: 1})


def constant(value: Scalar) -> SymFunc:
    return SymFunc(P, {(): value})


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def sym_mul(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product of two symmetric functions, returned in the power-sum basis."""
    return SymFunc._raw(P, _multiply_terms(f.power_sum_terms(), g.power_sum_terms()))


def to_basis(f: SymFunc, target: Union[str, Basis]) -> SymFunc:
    """Express `f` in the `target` basis.

    Conversions go through the power sums except for the direct
    Schur <-> monomial step, which uses the Kostka matrix.
    """
    target = Basis.parse(target)
    if f.basis is target:
        return f
    if f.basis is M and target is S:
        return SymFunc._raw(S, _m_to_schur(f.terms))
    if f.basis is S and target is M:
        out: Terms = {}
        for la, coeff in f.terms.items():
            _accumulate(out, _schur_in_m(la), coeff)
        return SymFunc._raw(M, out)
    return SymFunc._raw(target, _from_power_sum(f.power_sum_terms(), target))


def chi(f: SymFunc, r: int) -> SymFunc:
    """Image of `f` under t_i -> t_i**r, i.e. p_la -> p_{r la}."""
    if r < 1:
        raise DomainError("chi needs r >= 1, got {}".format(r))
    if r == 1:
        return f
    return SymFunc._raw(
        P, {tuple(r * part for part in la): c for la, c in f.power_sum_terms().items()}
    )


def eval_dim(f: SymFunc, n: int) -> Fraction:
    """Dimension of the virtual module with character `f` in `n` variables."""
    if n < 1:
        raise DomainError("eval_dim needs n >= 1, got {}".format(n))
    return sum((c * n ** len(la) for la, c in f.power_sum_terms().items()), Fraction(0))


class PositivityReport(NamedTuple):
    ok: bool
    violations: List[Tuple[Partition, Fraction]]


def is_schur_positive(f: SymFunc) -> PositivityReport:
    """Check that every Schur coefficient of `f` is a non-negative integer."""
    violations = [
        (la, c) for la, c in to_basis(f, S).items() if c < 0 or c.denominator != 1
    ]
    return PositivityReport(not violations, violations)


def is_actual_character(f: SymFunc) -> bool:
    """Whether all monomial coefficients of `f` are non-negative integers."""
    return all(c >= 0 and c.denominator == 1 for c in to_basis(f, M).terms.values())


def restrict_vars(f: SymFunc, n: int) -> SymFunc:
    """Specialise to `n` variables: drop m_la with more than `n` parts."""
    if n < 1:
        raise DomainError("restrict_vars needs n >= 1, got {}".format(n))
    as_monomials = to_basis(f, M)
    return SymFunc._raw(M, {la: c for la, c in as_monomials.terms.items() if len(la) <= n})

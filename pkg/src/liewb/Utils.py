"""A module for helper functions."""
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple, Union

from sympy import divisors as _divisors
from sympy import factorint, isprime, multiplicity

from ._exceptions import DomainError

Scalar = Union[int, Fraction]


@lru_cache(maxsize=None)
def mobius(r: int) -> int:
    """Return the Mobius function of `r`.

    Parameters
    ----------
    r : int
        A positive integer.

    Returns
    -------
    int
        0 if `r` has a square factor, otherwise (-1) to the number of
        prime factors of `r`.
    """
    if r < 1:
        raise DomainError("mobius is defined for positive integers, got {}".format(r))
    exponents = factorint(r)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


@lru_cache(maxsize=None)
def divisors(r: int) -> Tuple[int, ...]:
    """Return the positive divisors of `r` in increasing order."""
    if r < 1:
        raise DomainError("divisors are taken of positive integers, got {}".format(r))
    return tuple(int(d) for d in _divisors(r))


def require_prime(p: int) -> int:
    """Raise `DomainError` unless `p` is prime, else return it."""
    if not isprime(p):
        raise DomainError("{} is not a prime".format(p))
    return p


def p_part(r: int, p: int) -> Tuple[int, int]:
    """Split `r` as p**m * k with k not divisible by `p`.

    Parameters
    ----------
    r : int
        A positive integer.
    p : int
        A prime.

    Returns
    -------
    Tuple[int, int]
        The exponent `m` and the cofactor `k`.
    """
    if r < 1:
        raise DomainError("p_part needs a positive integer, got {}".format(r))
    m = int(multiplicity(p, r))
    return m, r // p**m


def is_power_of(r: int, p: int) -> bool:
    """Whether `r` equals p**i for some i >= 0."""
    if r < 1:
        return False
    return p_part(r, p)[1] == 1


def witt_number(n: int, r: int) -> int:
    """Number of Lyndon words of length `r` over an `n`-letter alphabet.

    This is the necklace polynomial (1/r) * sum over d | r of
    mu(d) * n**(r/d), the dimension of the r-th Lie power of an
    n-dimensional module.
    """
    total = sum(mobius(d) * n ** (r // d) for d in divisors(r))
    return total // r


def as_fraction(x: Union[Scalar, str]) -> Fraction:
    """Coerce an int, `Fraction` or "num/den" string to a `Fraction`."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def format_fraction(x: Scalar) -> str:
    """Encode a rational as the wire string "num/den"."""
    x = Fraction(x)
    return "{}/{}".format(x.numerator, x.denominator)


def pretty_fraction(x: Scalar) -> str:
    """Short human form: "3" for integers, "1/2" otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "{}/{}".format(x.numerator, x.denominator)


def is_integral(x: Scalar) -> bool:
    return Fraction(x).denominator == 1


def int_list(text: str) -> List[int]:
    """Parse "3,2,1" (or "[3,2,1]") into a list of ints."""
    text = text.strip().strip("[]")
    if not text:
        return []
    return [int(part) for part in text.split(",")]

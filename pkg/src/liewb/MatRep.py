"""A module for explicit F_p matrix models of modules for the cyclic group of order p.

A module is recorded by the matrix of a fixed generator g, acting on
column vectors: ``g e_j = sum_i g[i, j] e_i``. Modules for C_p are exactly
those with ``(g - 1)**p = 0``; they are classified by the Jordan type of
the nilpotent part ``N = g - 1``.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Tuple

import galois
import numpy as np
import sympy
from scipy.linalg import block_diag

from . import _globals
from ._exceptions import BudgetExceeded, DomainError, InvalidRep
from .Utils import require_prime

modular_logger = logging.getLogger("modular")


def check_budget(dim: int, d: int = 1) -> int:
    """Return dim**d, raising `BudgetExceeded` if it is over `_globals.BUDGET`."""
    size = dim**d
    if size > _globals.BUDGET:
        raise BudgetExceeded(
            "T^{} of a {}-dimensional module has dimension {} > budget {}".format(
                d, dim, size, _globals.BUDGET
            )
        )
    return size


@lru_cache(maxsize=None)
def prime_field(p: int) -> "type[galois.FieldArray]":
    """The field array class for GF(p)."""
    return galois.GF(require_prime(p))


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix reduced modulo `p`."""
    if matrix.size == 0:
        return 0
    GF = prime_field(p)
    return int(np.linalg.matrix_rank(GF(np.asarray(matrix, dtype=np.int64) % p)))


@dataclass(frozen=True, eq=False)
class MatRep:
    """A finite-dimensional F_p C_p-module given by the matrix of the generator.

    Parameters
    ----------
    p : int
        The prime.
    g : np.ndarray
        A square integer matrix; entries are reduced modulo `p`.
    """

    p: int
    g: np.ndarray

    def __post_init__(self) -> None:
        g = np.array(self.g, dtype=np.int64)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise InvalidRep("generator matrix must be square, got shape {}".format(g.shape))
        g %= self.p
        g.setflags(write=False)
        object.__setattr__(self, "g", g)

    @property
    def dim(self) -> int:
        return self.g.shape[0]

    def nilpotent(self) -> np.ndarray:
        """N = g - 1 modulo p."""
        return (self.g - np.eye(self.dim, dtype=np.int64)) % self.p

    def check(self) -> "MatRep":
        """Raise `InvalidRep` unless (g - 1)**p = 0."""
        jordan_type(self)
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatRep):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.g, other.g)

    __hash__ = None

    def __repr__(self) -> str:
        return "MatRep(p={}, dim={})".format(self.p, self.dim)


def jordan_block(p: int, a: int) -> MatRep:
    """The indecomposable J_a: a single unipotent Jordan block of size `a`."""
    require_prime(p)
    if not 1 <= a <= p:
        raise DomainError("J_a needs 1 <= a <= p={}, got {}".format(p, a))
    g = np.eye(a, dtype=np.int64)
    for i in range(a - 1):
        g[i, i + 1] = 1
    return MatRep(p, g)


def trivial_rep(p: int, dim: int) -> MatRep:
    return MatRep(p, np.eye(dim, dtype=np.int64))


def direct_sum(*reps: MatRep) -> MatRep:
    if not reps:
        raise DomainError("direct_sum needs at least one summand")
    p = _common_prime(reps)
    blocks = [rep.g for rep in reps if rep.dim]
    if not blocks:
        return MatRep(p, np.zeros((0, 0), dtype=np.int64))
    return MatRep(p, block_diag(*blocks))


def tensor(A: MatRep, B: MatRep) -> MatRep:
    """The Kronecker action on A (x) B."""
    p = _common_prime((A, B))
    return MatRep(p, np.kron(A.g, B.g) % p)


def tensor_power(M: MatRep, r: int) -> MatRep:
    """M tensored with itself `r` times (the trivial module for r = 0)."""
    if r < 0:
        raise DomainError("tensor_power needs r >= 0, got {}".format(r))
    check_budget(M.dim, r)
    result = trivial_rep(M.p, 1)
    for _ in range(r):
        result = tensor(result, M)
    return result


def monomial_basis(dim: int, r: int) -> Tuple[Tuple[int, ...], ...]:
    """Exponent vectors of the degree-`r` monomials in `dim` variables."""
    basis = []
    for combo in combinations_with_replacement(range(dim), r):
        exponents = [0] * dim
        for j in combo:
            exponents[j] += 1
        basis.append(tuple(exponents))
    return tuple(basis)


def sym_power(M: MatRep, r: int) -> MatRep:
    """The r-th symmetric power, acting on degree-r monomials.

    Each basis vector e_j is a variable x_j sent to ``sum_i g[i, j] x_i``;
    a monomial is mapped to the product of the images, expanded over F_p.
    """
    if r < 0:
        raise DomainError("sym_power needs r >= 0, got {}".format(r))
    p, n = M.p, M.dim
    if r == 0:
        return trivial_rep(p, 1)
    if n == 0:
        return MatRep(p, np.zeros((0, 0), dtype=np.int64))
    gens = sympy.symbols("x0:{}".format(n))
    images = [
        sympy.Poly(sum(int(M.g[i, j]) * gens[i] for i in range(n)), *gens, modulus=p)
        for j in range(n)
    ]
    basis = monomial_basis(n, r)
    index: Dict[Tuple[int, ...], int] = {exponents: i for i, exponents in enumerate(basis)}
    g = np.zeros((len(basis), len(basis)), dtype=np.int64)
    for col, exponents in enumerate(basis):
        product = sympy.Poly(1, *gens, modulus=p)
        for j, e in enumerate(exponents):
            if e:
                product = product * images[j] ** e
        for monomial, coeff in product.terms():
            g[index[monomial], col] = int(coeff) % p
    modular_logger.debug("S^%d of a %d-dimensional module, p=%d", r, n, p)
    return MatRep(p, g)


def jordan_type(M: MatRep) -> Tuple[int, ...]:
    """Block sizes of the Jordan form of g, largest first.

    The number of blocks of size at least s is
    ``rank(N**(s-1)) - rank(N**s)``.

    Raises
    ------
    InvalidRep
        If (g - 1)**p is not zero.
    """
    p, n = M.p, M.dim
    if n == 0:
        return ()
    GF = prime_field(p)
    N = GF(M.nilpotent())
    ranks = [n]
    power = GF(np.eye(n, dtype=np.int64))
    while ranks[-1] and len(ranks) <= p:
        power = power @ N
        ranks.append(int(np.linalg.matrix_rank(power)))
    if ranks[-1]:
        raise InvalidRep("(g - 1)^{} is not zero; not a module for C_{}".format(p, p))
    at_least = [ranks[s - 1] - ranks[s] for s in range(1, len(ranks))] + [0]
    parts = []
    for size in range(len(at_least) - 1, 0, -1):
        parts.extend([size] * (at_least[size - 1] - at_least[size]))
    return tuple(parts)


def _common_prime(reps) -> int:
    primes = {rep.p for rep in reps}
    if len(primes) != 1:
        raise DomainError("modules over different primes: {}".format(sorted(primes)))
    return primes.pop()

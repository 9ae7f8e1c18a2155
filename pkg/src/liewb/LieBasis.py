"""A module for Lyndon bases of free Lie algebras and induced actions on Lie powers.

Letters of an a-letter alphabet are the integers 0..a-1 (printed as
x, y, z, ...). The bracketing of a Lyndon word uses its standard
factorisation w = uv, v the longest proper Lyndon suffix. Expanded in the
tensor algebra, the bracket of w is w plus lexicographically larger words,
which is what makes the induced-action solve triangular.
"""
import logging
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix

from ._exceptions import DomainError, InternalError
from .MatRep import MatRep, check_budget, prime_field
from .Utils import p_part, require_prime

modular_logger = logging.getLogger("modular")

Word = Tuple[int, ...]
Tree = Union[int, Tuple["Tree", "Tree"]]

LETTERS = "xyzuvw"

# largest dense block (entries) built at once while applying g to basis vectors
_CHUNK_ENTRIES = 2_000_000


def lyndon_words(a: int, d: int) -> List[Word]:
    """All Lyndon words of length `d` over `a` letters, in lexicographic order."""
    if a < 1 or d < 1:
        raise DomainError("lyndon_words needs a >= 1 and d >= 1, got a={}, d={}".format(a, d))
    words = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            words.append(tuple(w))
        while len(w) < d:
            w.append(w[len(w) - m])
        while w and w[-1] == a - 1:
            w.pop()
    return words


def is_lyndon(word: Sequence[int]) -> bool:
    """Whether `word` is strictly smaller than each of its proper rotations."""
    word = tuple(word)
    return bool(word) and all(word < word[i:] + word[:i] for i in range(1, len(word)))


def standard_factorization(word: Word) -> Tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as uv with v its longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise DomainError("{} has no standard factorisation".format(word))


def bracket_tree(word: Word) -> Tree:
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (bracket_tree(u), bracket_tree(v))


def letter(i: int) -> str:
    return LETTERS[i] if i < len(LETTERS) else "a{}".format(i)


def format_tree(tree: Tree) -> str:
    """Render a bracketing, e.g. ``[x,[x,y]]``."""
    if isinstance(tree, int):
        return letter(tree)
    return "[{},{}]".format(format_tree(tree[0]), format_tree(tree[1]))


@lru_cache(maxsize=None)
def expansion(word: Word) -> Mapping[Word, int]:
    """The bracket of a Lyndon word expanded as an integer combination of words."""
    if len(word) == 1:
        return {word: 1}
    u, v = standard_factorization(word)
    out: Dict[Word, int] = {}
    for x, cx in expansion(u).items():
        for y, cy in expansion(v).items():
            out[x + y] = out.get(x + y, 0) + cx * cy
            out[y + x] = out.get(y + x, 0) - cx * cy
    return {w: c for w, c in out.items() if c}


def concatenation_power(vector: Mapping[Word, int], e: int) -> Dict[Word, int]:
    """The e-th power of a tensor in the associative (concatenation) product."""
    out: Dict[Word, int] = {(): 1}
    for _ in range(e):
        step: Dict[Word, int] = {}
        for x, cx in out.items():
            for y, cy in vector.items():
                step[x + y] = step.get(x + y, 0) + cx * cy
        out = {w: c for w, c in step.items() if c}
    return out


def word_index(word: Word, a: int) -> int:
    """Row-major position of e_{w_1} (x) ... (x) e_{w_d} in the tensor space."""
    index = 0
    for ch in word:
        index = index * a + ch
    return index


class LyndonBasis:
    """The Lyndon basis of the degree-d Lie power of an a-dimensional space.

    Parameters
    ----------
    a : int
        Alphabet size.
    d : int
        Degree.
    """

    def __init__(self, a: int, d: int) -> None:
        self.a = a
        self.d = d
        self.words = lyndon_words(a, d)

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    @property
    def tensor_dim(self) -> int:
        return self.a**self.d

    def brackets(self) -> List[str]:
        return [format_tree(bracket_tree(w)) for w in self.words]

    def vector(self, word: Word) -> np.ndarray:
        """Dense expansion of the bracket of `word` in T^d coordinates."""
        out = np.zeros(self.tensor_dim, dtype=np.int64)
        for w, c in expansion(word).items():
            out[word_index(w, self.a)] = c
        return out

    def matrix(self) -> np.ndarray:
        """Expansion vectors stacked as columns (only sensible for small a**d)."""
        if not self.words:
            return np.zeros((self.tensor_dim, 0), dtype=np.int64)
        return np.stack([self.vector(w) for w in self.words], axis=1)


def lyndon_basis(a: int, d: int) -> LyndonBasis:
    return LyndonBasis(a, d)


# ---------------------------------------------------------------------------
# Induced actions over F_p
# ---------------------------------------------------------------------------

def _apply_tensor_power(g: np.ndarray, d: int, block: np.ndarray, p: int) -> np.ndarray:
    """Apply g tensored d times to each column of `block`, modulo p."""
    n = g.shape[0]
    columns = block.shape[1]
    tensor = block.reshape((n,) * d + (columns,))
    for axis in range(d):
        tensor = np.moveaxis(np.tensordot(g, tensor, axes=([1], [axis])), 0, axis) % p
    return tensor.reshape(n**d, columns)


def induced_action(M: MatRep, d: int, basis: Sequence[Tuple[Word, Mapping[Word, int]]]) -> MatRep:
    """Matrix of g on a g-invariant subspace of T^d(M) spanned by `basis`.

    Parameters
    ----------
    M : MatRep
        The module.
    d : int
        Tensor degree.
    basis : Sequence[Tuple[Word, Mapping[Word, int]]]
        Pairs (lead word, integer expansion); each expansion is its lead
        word with coefficient 1 plus lexicographically larger words.

    Returns
    -------
    MatRep
        X with ``B X = g^{(x) d} B`` over F_p, B the basis as columns,
        in the order of increasing lead word.

    Raises
    ------
    InternalError
        If the solution found on the lead-word rows does not satisfy
        the full system on every row of T^d.
    """
    p, n = M.p, M.dim
    size = check_budget(n, d)
    basis = sorted(basis, key=lambda item: item[0])
    count = len(basis)
    if count == 0:
        return MatRep(p, np.zeros((0, 0), dtype=np.int64))
    GF = prime_field(p)
    lead_rows = np.array([word_index(w, n) for w, _ in basis], dtype=np.int64)
    rows, columns, values = [], [], []
    for j, (_, vector) in enumerate(basis):
        for w, c in vector.items():
            if c % p:
                rows.append(word_index(w, n))
                columns.append(j)
                values.append(c % p)
    B = csr_matrix((np.array(values, dtype=np.int64), (rows, columns)), shape=(size, count))
    columns_view = B.tocsc()
    B_lead_inverse = np.linalg.inv(GF(B[lead_rows].toarray() % p))

    X = np.zeros((count, count), dtype=np.int64)
    step = max(1, _CHUNK_ENTRIES // size)
    for start in range(0, count, step):
        stop = min(start + step, count)
        block = columns_view[:, start:stop].toarray()
        image = _apply_tensor_power(M.g, d, block, p)
        X_chunk = np.asarray(B_lead_inverse @ GF(image[lead_rows]), dtype=np.int64)
        if not np.array_equal((B @ X_chunk) % p, image):
            raise InternalError(
                "induced action on a degree-{} subspace is inconsistent in columns {}..{}".format(
                    d, start, stop - 1
                )
            )
        X[:, start:stop] = X_chunk
    modular_logger.debug("induced action: %d basis vectors in T^%d (dim %d), p=%d", count, d, size, p)
    return MatRep(p, X)


def lie_power_rep(M: MatRep, d: int) -> MatRep:
    """The d-th Lie power L^d(M) as an explicit module."""
    if d < 1:
        raise DomainError("lie_power_rep needs d >= 1, got {}".format(d))
    if d == 1:
        return M
    check_budget(M.dim, d)
    basis = [(w, expansion(w)) for w in lyndon_words(M.dim, d)] if M.dim else []
    return induced_action(M, d, basis)


def restricted_basis(a: int, d: int, p: int) -> List[Tuple[Word, Dict[Word, int]]]:
    """Basis of the degree-d restricted Lie power inside T^d.

    It consists of the p**s-th associative powers of the Lyndon brackets
    of degree d / p**s, for every p**s dividing d.
    """
    m, _ = p_part(d, p)
    basis = []
    for s in range(m + 1):
        e = p**s
        for w in lyndon_words(a, d // e):
            basis.append((w * e, concatenation_power(expansion(w), e)))
    return basis


def restricted_lie_power_rep(M: MatRep, d: int) -> MatRep:
    """The degree-d restricted Lie power R^d(M) as an explicit module."""
    require_prime(M.p)
    if d < 1:
        raise DomainError("restricted_lie_power_rep needs d >= 1, got {}".format(d))
    if d == 1:
        return M
    check_budget(M.dim, d)
    basis = restricted_basis(M.dim, d, M.p) if M.dim else []
    return induced_action(M, d, basis)

"""Exponent matrices of tiled orders and the data derived from them.

A tiled order ``(p^{mu_ij})`` is stored as its integer exponent matrix.  Everything
else in the package works with two derived objects:

* the structural invariants ``m[i, j, l] = mu_ij + mu_jl - mu_il`` (an ``n x n x n``
  read-only integer array), and
* the vertex types ``t_j = sum_i mu_ij mod n`` of the distinguished vertices
  (the columns of the matrix).

Indices are 0-based internally; error messages and cycle strings are 1-based.
"""
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import (
    DimensionMismatch,
    EntryOverflow,
    NonzeroDiagonal,
    NotSquare,
    RingConditionViolated,
)
from .perm import identity, inverse, parse_cycles

__all__ = [
    "ExponentMatrix",
    "MonomialMatrix",
    "validate",
    "structural_invariants",
    "six_tuple",
    "vertex_types",
    "conjugate_by_monomial",
    "monomial_type",
    "shifted",
    "is_maximal",
]

ENTRY_LIMIT = 2**31


def _ring_violation(mu):
    """First failing (i, j, k), scanning the middle index outermost; None if valid."""
    lhs = mu[:, :, None] + mu[None, :, :]
    bad = np.argwhere((lhs < mu[:, None, :]).transpose(1, 0, 2))
    if len(bad) == 0:
        return None
    j, i, k = (int(x) for x in bad[0])
    return i, j, k


@dataclass(frozen=True)
class ExponentMatrix:
    """Validated exponent matrix; construction raises on invalid input.

    >>> ExponentMatrix(((0, 1, 1), (0, 0, 1), (0, 1, 0))).n
    3
    """

    mu: tuple

    def __post_init__(self):
        try:
            rows = tuple(tuple(int(x) for x in row) for row in self.mu)
        except TypeError:
            raise NotSquare("exponent matrix must be a list of rows") from None
        n = len(rows)
        if n < 2 or any(len(r) != n for r in rows):
            raise NotSquare(f"expected an n x n matrix with n >= 2, got {n} rows")
        if any(abs(x) >= ENTRY_LIMIT for r in rows for x in r):
            raise EntryOverflow("entries must satisfy |mu_ij| < 2**31")
        for i in range(n):
            if rows[i][i] != 0:
                raise NonzeroDiagonal(i + 1)
        bad = _ring_violation(np.array(rows, dtype=np.int64))
        if bad is not None:
            raise RingConditionViolated(*(x + 1 for x in bad))
        object.__setattr__(self, "mu", rows)

    @property
    def n(self):
        return len(self.mu)

    @property
    def array(self):
        return np.array(self.mu, dtype=np.int64)

    @classmethod
    def zero(cls, n):
        return cls(tuple((0,) * n for _ in range(n)))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.mu) + "]"


def validate(n, mu):
    """Check ``mu`` against the stated size and return the ExponentMatrix."""
    if len(mu) != n:
        raise NotSquare(f"stated n = {n} but matrix has {len(mu)} rows")
    return ExponentMatrix(mu)


@dataclass(frozen=True)
class MonomialMatrix:
    """The monomial matrix with entry ``pi^alpha[i]`` at row i, column sigma[i]."""

    sigma: tuple
    alpha: tuple

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        alpha = tuple(int(a) for a in self.alpha)
        if sorted(sigma) != list(range(len(sigma))):
            raise ValueError(f"{sigma} is not a permutation of 0..{len(sigma) - 1}")
        if len(alpha) != len(sigma):
            raise DimensionMismatch("sigma and alpha have different lengths")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)

    @property
    def n(self):
        return len(self.sigma)

    @classmethod
    def from_cycles(cls, text, alpha):
        return cls(parse_cycles(text, len(alpha)), tuple(alpha))

    @classmethod
    def diagonal(cls, alpha):
        return cls(identity(len(alpha)), tuple(alpha))

    def inverse(self):
        inv = inverse(self.sigma)
        return MonomialMatrix(inv, tuple(-self.alpha[inv[i]] for i in range(self.n)))

    @property
    def type(self):
        return monomial_type(self)


def structural_invariants(E):
    """Dense read-only tensor ``m[i, j, l] = mu_ij + mu_jl - mu_il``."""
    mu = E.array
    m = mu[:, :, None] + mu[None, :, :] - mu[:, None, :]
    m.setflags(write=False)
    return m


def six_tuple(m):
    """(m_123, m_132, m_213, m_231, m_312, m_321) for a 3 x 3 x 3 tensor."""
    if m.shape != (3, 3, 3):
        raise DimensionMismatch("the six-tuple is only defined for n = 3")
    return tuple(int(m[p]) for p in permutations(range(3)))


def vertex_types(E):
    """Types of the distinguished vertices: column sums of mu reduced mod n."""
    return tuple(int(x) for x in E.array.sum(axis=0) % E.n)


def monomial_type(xi):
    return sum(xi.alpha) % xi.n


def conjugate_by_monomial(E, xi):
    """Exponent matrix of ``xi Gamma xi^-1``: ``alpha_i - alpha_j + mu[sigma_i, sigma_j]``."""
    if xi.n != E.n:
        raise DimensionMismatch(f"monomial of size {xi.n} cannot act on n = {E.n}")
    mu = E.array
    s = np.array(xi.sigma)
    a = np.array(xi.alpha, dtype=np.int64)
    out = a[:, None] - a[None, :] + mu[np.ix_(s, s)]
    return ExponentMatrix(out.tolist())


def shifted(E, s):
    """Conjugate by diag(pi^s, 1, ..., 1): same invariants, every type moved by +s."""
    return conjugate_by_monomial(E, MonomialMatrix.diagonal((s,) + (0,) * (E.n - 1)))


def is_maximal(E):
    return not structural_invariants(E).any()

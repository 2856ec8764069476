"""Smith normal form over Z and finite abelian groups given by invariant factors."""
from dataclasses import dataclass
from math import gcd, prod

from .errors import DimensionMismatch

__all__ = ["smith_normal_form", "FinAbGroup", "quotient_by", "power_quotient_size"]


def smith_normal_form(A):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns ``min(rows, cols)`` nonnegative entries ``s_1 | s_2 | ...``; trailing
    zeros mark a rank deficit.  Works on Python ints, so pivots never overflow.

    >>> smith_normal_form([[2, 0], [0, 8], [0, 2]])
    (2, 2)
    """
    M = [[int(x) for x in row] for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise DimensionMismatch("ragged matrix")
    diag = []
    for s in range(min(rows, cols)):
        nonzero = [(abs(M[i][j]), i, j) for i in range(s, rows) for j in range(s, cols) if M[i][j]]
        if not nonzero:
            diag.extend([0] * (min(rows, cols) - s))
            break
        _, pi, pj = min(nonzero)
        M[s], M[pi] = M[pi], M[s]
        for row in M:
            row[s], row[pj] = row[pj], row[s]
        while True:
            p = M[s][s]
            # clear column s below the pivot, moving any smaller remainder up
            for i in range(s + 1, rows):
                q = M[i][s] // p
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[s])]
                if M[i][s]:
                    M[s], M[i] = M[i], M[s]
                    break
            else:
                for j in range(s + 1, cols):
                    q = M[s][j] // p
                    if q:
                        for row in M:
                            row[j] -= q * row[s]
                    if M[s][j]:
                        for row in M:
                            row[s], row[j] = row[j], row[s]
                        break
                else:
                    # pivot must divide the remaining block
                    bad = next(
                        (i for i in range(s + 1, rows) for j in range(s + 1, cols) if M[i][j] % p),
                        None,
                    )
                    if bad is None:
                        break
                    M[s] = [a + b for a, b in zip(M[s], M[bad])]
        diag.append(abs(M[s][s]))
    return tuple(diag)


@dataclass(frozen=True)
class FinAbGroup:
    """Z/d_1 x ... x Z/d_k with d_1 | d_2 | ... | d_k; factors equal to 1 are dropped.

    Elements are coordinate tuples with respect to these factors.
    """

    invariant_factors: tuple = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        if any(d < 1 for d in fs):
            raise ValueError(f"invariant factors must be positive: {fs}")
        fs = tuple(d for d in fs if d != 1)
        if any(b % a for a, b in zip(fs, fs[1:])):
            raise ValueError(f"{fs} is not a divisibility chain")
        object.__setattr__(self, "invariant_factors", fs)

    @property
    def rank(self):
        return len(self.invariant_factors)

    @property
    def order(self):
        return prod(self.invariant_factors)

    def element(self, coords):
        if len(coords) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(int(c) % d for c, d in zip(coords, self.invariant_factors))

    def __str__(self):
        return " x ".join(f"Z/{d}" for d in self.invariant_factors) or "trivial"


def quotient_by(G, rels):
    """G / <rels> as a FinAbGroup."""
    rels = [G.element(r) for r in rels]
    k = G.rank
    if k == 0:
        return FinAbGroup(())
    matrix = [[d if i == j else 0 for j in range(k)] for i, d in enumerate(G.invariant_factors)]
    matrix += [list(r) for r in rels]
    return FinAbGroup(smith_normal_form(matrix))


def power_quotient_size(G, n):
    """#(G / G^n) = prod gcd(d_i, n)."""
    if n < 1:
        raise ValueError("n must be positive")
    return prod(gcd(d, n) for d in G.invariant_factors)

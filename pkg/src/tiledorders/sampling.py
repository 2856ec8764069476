"""Random valid exponent matrices for property testing.

An order is the intersection of the maximal orders at a finite set V of
apartment vertices, i.e. ``mu_ij = max_{v in V} (v_i - v_j)``; the entrywise
maximum of valid matrices is again valid.  Closing V under a monomial matrix
xi with ``xi^k`` scalar gives orders normalized by xi, so small norm exponents
show up often.
"""
import numpy as np

from .core import ExponentMatrix, MonomialMatrix, conjugate_by_monomial

__all__ = ["vertex_hull", "random_monomial", "random_exponent_matrix"]


def vertex_hull(vertices):
    V = np.asarray(vertices, dtype=np.int64)
    mu = (V[:, :, None] - V[:, None, :]).max(axis=0)
    return ExponentMatrix(mu.tolist())


def random_monomial(rng, n, spread=2):
    return MonomialMatrix(tuple(int(x) for x in rng.permutation(n)),
                          tuple(int(x) for x in rng.integers(-spread, spread + 1, n)))


def _orbit(vertices, xi, limit):
    """Close a vertex set under v -> (alpha_i + v_sigma(i)), up to homothety."""
    s = np.array(xi.sigma)
    a = np.array(xi.alpha, dtype=np.int64)
    seen = {tuple(v - v[0]) for v in vertices}
    frontier = list(seen)
    while frontier:
        v = np.array(frontier.pop())
        w = a + v[s]
        w = tuple(w - w[0])
        if w not in seen:
            if len(seen) >= limit:
                return None
            seen.add(w)
            frontier.append(w)
    return sorted(seen)


def random_exponent_matrix(rng, n, entry_bound=3, symmetric=None, max_tries=1000):
    """A valid n x n exponent matrix with entries in [-entry_bound, entry_bound].

    ``symmetric`` forces (True) or forbids (False) closing the vertex set under a
    random monomial; by default it is chosen at random.
    """
    for _ in range(max_tries):
        sym = rng.random() < 0.5 if symmetric is None else symmetric
        k = int(rng.integers(1, 3 if sym else 4))
        V = rng.integers(-1 if sym else -2, 2 if sym else 3, size=(k, n))
        if sym:
            xi = MonomialMatrix(tuple(int(x) for x in rng.permutation(n)),
                                tuple(int(x) for x in rng.integers(0, 2, n)))
            V = _orbit(V, xi, limit=3 * n)
            if V is None:
                continue
        E = vertex_hull(V)
        if rng.random() < 0.5:
            E = conjugate_by_monomial(E, random_monomial(rng, n))
        if rng.random() < 0.3:
            E = ExponentMatrix(np.maximum(E.array, vertex_hull(rng.integers(-1, 2, size=(1, n))).array).tolist())
        if np.abs(E.array).max() <= entry_bound:
            return E
    raise RuntimeError(f"no matrix with entries within {entry_bound} after {max_tries} tries")

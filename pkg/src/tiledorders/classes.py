"""Isomorphism, normalizer permutations and reflection classes of tiled orders.

Two orders are *reflection equivalent* when some sigma in S_n carries both the
structural invariants and the vertex types of one onto the other::

    m'[i, j, l] == m[sigma(i), sigma(j), sigma(l)]   and   t'[i] == t[sigma(i)]  (mod n)

The number ``d`` of reflection classes among the translates of an order equals
the exponent in ``nr(N(Gamma)) = (k^x)^d R^x``.  It is computed three ways here:

* :func:`reflection_class_count` scans divisors of n, searching permutations that
  shift every type by the divisor;
* :func:`reflection_class_count_prime` is the shortcut for prime n;
* :func:`norm_exponent` takes the gcd of the types of the normalizer lifts;

and :func:`oracle_reflection_class_count` checks all of them by exhaustive,
unpruned enumeration of S_n.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from math import gcd

import numpy as np

from .core import shifted, structural_invariants, vertex_types
from .errors import DimensionMismatch, NotPrime, TooLarge
from .perm import cycle_lengths

__all__ = [
    "NormalizerData",
    "ReflectionClassLabel",
    "are_isomorphic",
    "reflection_equivalent",
    "normalizer",
    "norm_exponent",
    "reflection_class_count",
    "reflection_class_count_prime",
    "oracle_reflection_class_count",
    "class_label",
    "divisors",
    "is_prime",
]

BRUTE_FORCE_MAX_N = 9
PARALLEL_MIN_N = 9
_CHUNK = 4096


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def is_prime(n):
    return n >= 2 and all(n % p for p in range(2, int(n**0.5) + 1))


def _check_same_n(E1, E2):
    if E1.n != E2.n:
        raise DimensionMismatch(f"orders have sizes {E1.n} and {E2.n}")


# -- backtracking search -----------------------------------------------------

def _consistent(src, dst, assigned, k):
    """Do the triples touching position k agree between dst and src under the partial map?"""
    s = assigned
    v = s[k]
    r = slice(0, k + 1)
    return (
        np.array_equal(dst[k, r, r], src[v][np.ix_(s, s)])
        and np.array_equal(dst[r, k, r], src[:, v][np.ix_(s, s)])
        and np.array_equal(dst[r, r, k], src[:, :, v][np.ix_(s, s)])
    )


def _search(src, dst, allowed, leaf_ok=None):
    """Yield every sigma (image tuple) with dst[i,j,l] == src[sigma i, sigma j, sigma l].

    ``allowed[i]`` lists the admissible images of i, in the order they are tried.
    Permutations come out in lexicographic order of their image tuples.
    """
    n = len(allowed)
    assigned = []
    used = [False] * n

    def rec(k):
        if k == n:
            sigma = tuple(assigned)
            if leaf_ok is None or leaf_ok(sigma):
                yield sigma
            return
        for v in allowed[k]:
            if used[v]:
                continue
            assigned.append(v)
            if _consistent(src, dst, assigned, k):
                used[v] = True
                yield from rec(k + 1)
                used[v] = False
            assigned.pop()

    yield from rec(0)


def _fewest_moved(src, dst, allowed):
    """The solution of :func:`_search` moving fewest points, lexicographically first among ties."""
    n = len(allowed)
    best = [None, n + 1]
    assigned = []
    used = [False] * n

    def rec(k, moved):
        if moved >= best[1]:
            return
        if k == n:
            best[0], best[1] = tuple(assigned), moved
            return
        for v in allowed[k]:
            if used[v]:
                continue
            assigned.append(v)
            if _consistent(src, dst, assigned, k):
                used[v] = True
                rec(k + 1, moved + (v != k))
                used[v] = False
            assigned.pop()

    rec(0, 0)
    return best[0]


def _signatures(m):
    return [tuple(sorted(m[i, :, i].tolist())) for i in range(m.shape[0])]


def _allowed_by_signature(m_src, m_dst, extra=None):
    """Candidate images per index; None when the multisets of m_iji already differ."""
    sig_src, sig_dst = _signatures(m_src), _signatures(m_dst)
    if sorted(sig_src) != sorted(sig_dst):
        return None
    n = len(sig_src)
    allowed = []
    for i in range(n):
        cand = [k for k in range(n) if sig_src[k] == sig_dst[i] and (extra is None or extra(i, k))]
        if not cand:
            return None
        allowed.append(cand)
    return allowed


# -- isomorphism and reflection equivalence ----------------------------------

def are_isomorphic(E1, E2):
    """A permutation sigma with m2[i,j,l] == m1[sigma i, sigma j, sigma l], or None.

    Among all such sigma the one moving fewest points is returned.
    """
    _check_same_n(E1, E2)
    m1, m2 = structural_invariants(E1), structural_invariants(E2)
    allowed = _allowed_by_signature(m1, m2)
    if allowed is None:
        return None
    return _fewest_moved(m1, m2, allowed)


def reflection_equivalent(E1, E2):
    """Like :func:`are_isomorphic`, additionally requiring t2[i] == t1[sigma i] (mod n)."""
    _check_same_n(E1, E2)
    m1, m2 = structural_invariants(E1), structural_invariants(E2)
    t1, t2 = vertex_types(E1), vertex_types(E2)
    if sorted(t1) != sorted(t2):
        return None
    allowed = _allowed_by_signature(m1, m2, extra=lambda i, k: t1[k] == t2[i])
    if allowed is None:
        return None
    return _fewest_moved(m1, m2, allowed)


# -- normalizer --------------------------------------------------------------

@dataclass(frozen=True)
class NormalizerData:
    """Permutations preserving the invariants, the types of their monomial lifts, and d."""

    h: tuple
    xi_types: tuple
    d: int


def xi_type(E, sigma):
    """Type of the lift ``(pi^(mu_i1 - mu_sigma(i)sigma(1)) delta_sigma(i)j)`` of sigma."""
    mu = E.mu
    return sum(mu[i][0] - mu[sigma[i]][sigma[0]] for i in range(E.n)) % E.n


def normalizer(E):
    m = structural_invariants(E)
    allowed = _allowed_by_signature(m, m)
    h = tuple(_search(m, m, allowed))
    types = tuple(xi_type(E, s) for s in h)
    return NormalizerData(h=h, xi_types=types, d=reduce(gcd, types, E.n))


def norm_exponent(E):
    """d with nr(N(Gamma)) = (k^x)^d R^x."""
    return normalizer(E).d


# -- reflection class counts -------------------------------------------------

def _cycles_share_factor(n):
    return lambda sigma: all(gcd(length, n) > 1 for length in cycle_lengths(sigma))


def _shift_realized(m, t, d):
    """Is there sigma preserving m with t[j] + d == t[sigma j] (mod n)?"""
    n = len(t)
    allowed = [[k for k in range(n) if t[k] == (t[j] + d) % n] for j in range(n)]
    if any(not a for a in allowed):
        return False
    return next(_search(m, m, allowed, _cycles_share_factor(n)), None) is not None


def _shift_job(args):
    return _shift_realized(*args)


def reflection_class_count(E, workers=None):
    """Smallest divisor d of n for which some admissible sigma shifts all types by d.

    With ``workers > 1`` and n >= 9 the proper divisors are tested in parallel
    processes; the answer is still the least succeeding divisor.
    """
    n = E.n
    m = np.asarray(structural_invariants(E))
    t = vertex_types(E)
    proper = divisors(n)[:-1]
    if workers and workers > 1 and n >= PARALLEL_MIN_N and len(proper) > 1:
        with ProcessPoolExecutor(max_workers=min(workers, len(proper))) as pool:
            hits = list(pool.map(_shift_job, [(m, t, d) for d in proper]))
        return next((d for d, ok in zip(proper, hits) if ok), n)
    for d in proper:
        if _shift_realized(m, t, d):
            return d
    return n


def reflection_class_count_prime(E):
    p = E.n
    if not is_prime(p):
        raise NotPrime(f"n = {p} is not prime")
    t = vertex_types(E)
    if len(set(t)) < p:
        return p
    where = {ti: i for i, ti in enumerate(t)}
    sigma = tuple(where[(t[j] + 1) % p] for j in range(p))
    m = structural_invariants(E)
    s = np.array(sigma)
    return 1 if np.array_equal(m, m[np.ix_(s, s, s)]) else p


# -- exhaustive oracle and canonical labels ----------------------------------

def _all_permutations(n):
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"exhaustive S_n enumeration is limited to n <= {BRUTE_FORCE_MAX_N}")
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    for start in range(0, len(perms), _CHUNK):
        yield perms[start:start + _CHUNK]


def _permuted(m, t, P):
    """Stack of (m[P_i, P_j, P_l], t[P_i]) for every row P of the permutation block."""
    mp = m[P[:, :, None, None], P[:, None, :, None], P[:, None, None, :]]
    return mp, t[P]


def _brute_equivalent(m1, t1, m2, t2, n):
    for P in _all_permutations(n):
        mp, tp = _permuted(m1, t1, P)
        ok = (mp == m2).reshape(len(P), -1).all(axis=1) & ((tp - t2) % n == 0).all(axis=1)
        if ok.any():
            return True
    return False


def oracle_reflection_class_count(E):
    """Least s in 1..n whose translate Gamma_s is reflection equivalent to Gamma, by full S_n scan."""
    n = E.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"oracle is limited to n <= {BRUTE_FORCE_MAX_N}")
    m0 = np.asarray(structural_invariants(E))
    t0 = np.array(vertex_types(E))
    for s in range(1, n + 1):
        Es = shifted(E, s)
        ms, ts = np.asarray(structural_invariants(Es)), np.array(vertex_types(Es))
        if _brute_equivalent(m0, t0, ms, ts, n):
            return s
    raise AssertionError("Gamma_n always equals Gamma_0")  # pragma: no cover


@dataclass(frozen=True, order=True)
class ReflectionClassLabel:
    n: int
    canonical_invariants: tuple
    canonical_types: tuple


def _lex_min_row(rows):
    idx = np.arange(len(rows))
    for col in range(rows.shape[1]):
        vals = rows[idx, col]
        idx = idx[vals == vals.min()]
        if len(idx) == 1:
            break
    return rows[idx[0]]


def class_label(E):
    """Lexicographic minimum of (permuted invariants, permuted types) over S_n."""
    n = E.n
    m = np.asarray(structural_invariants(E))
    t = np.array(vertex_types(E))
    best = None
    for P in _all_permutations(n):
        mp, tp = _permuted(m, t, P)
        rows = np.concatenate([mp.reshape(len(P), -1), tp], axis=1)
        cand = _lex_min_row(rows)
        if best is None or tuple(cand) < tuple(best):
            best = cand
    flat = tuple(int(x) for x in best)
    return ReflectionClassLabel(n, flat[: n**3], flat[n**3:])


def default_workers():
    env = os.environ.get("TILED_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1

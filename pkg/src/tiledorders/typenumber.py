"""Type number of an everywhere locally tiled order from class-group data.

The caller supplies the ray class group ``Cl_Omega(K)`` by invariant factors and,
for every finite prime where the local norm exponent ``d`` is a proper divisor
of the degree, the class of a prime ``q`` with ``[q] = [p^d]``.  Either that class
(``kind="q_class"``) or the class of ``p`` itself (``kind="p_class"``, multiplied
by ``d`` here) may be given.  Then::

    Cl_T_hat = Cl_Omega / <[q]>        G(Gamma) = #(Cl_T_hat / Cl_T_hat^n)
"""
import warnings
from dataclasses import dataclass, field

from .abgroup import FinAbGroup, power_quotient_size, quotient_by
from .classes import is_prime
from .errors import InvalidLocalExponent, NotPrime

__all__ = [
    "TPrime",
    "GlobalProblem",
    "TypeNumberReport",
    "type_number",
    "prime_degree_type_number",
]

KINDS = ("q_class", "p_class")


@dataclass(frozen=True)
class TPrime:
    label: str
    d: int
    vector: tuple
    kind: str = "q_class"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        object.__setattr__(self, "vector", tuple(int(v) for v in self.vector))

    def relation(self, G):
        """Class vector of q in G."""
        scale = self.d if self.kind == "p_class" else 1
        return G.element([scale * v for v in self.vector])


@dataclass(frozen=True)
class GlobalProblem:
    degree: int
    class_group: FinAbGroup
    t_primes: tuple = ()
    omega: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("degree must be at least 2")
        object.__setattr__(self, "t_primes", tuple(self.t_primes))
        object.__setattr__(self, "omega", tuple(self.omega))


@dataclass(frozen=True)
class TypeNumberReport:
    cl_T_hat: FinAbGroup
    type_number: int
    max_bound: int
    filtered: tuple = ()


def _relations(P):
    """Relation vectors of the primes that stay in T; d == n entries are dropped with a warning."""
    n = P.degree
    rels, filtered = [], []
    for tp in P.t_primes:
        if tp.d < 1 or n % tp.d:
            raise InvalidLocalExponent(tp.label, f"d = {tp.d} does not divide n = {n}")
        if tp.d == n:
            warnings.warn(f"{tp.label}: d = n contributes nothing and is ignored", stacklevel=3)
            filtered.append(tp.label)
            continue
        rels.append(tp.relation(P.class_group))
    return rels, tuple(filtered)


def type_number(P):
    rels, filtered = _relations(P)
    cl = quotient_by(P.class_group, rels)
    return TypeNumberReport(
        cl_T_hat=cl,
        type_number=power_quotient_size(cl, P.degree),
        max_bound=power_quotient_size(P.class_group, P.degree),
        filtered=filtered,
    )


def prime_degree_type_number(P):
    """Prime degree p >= 3: every T-prime has d = 1 and enters through its own class."""
    p = P.degree
    if p < 3 or not is_prime(p):
        raise NotPrime(f"degree {p} is not an odd prime")
    for tp in P.t_primes:
        if tp.d not in (1, p):
            raise InvalidLocalExponent(tp.label, f"d must be 1 or {p} in prime degree")
    return type_number(P)

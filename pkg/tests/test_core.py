import numpy as np
import pytest
from hypothesis import given, settings

from orders import CHAMBER, DIAMOND, DIAMOND_CONJ, FOUR_D2, TRIV, TRIV_OTHER, exponent_matrices, monomials
from tiledorders.core import (
    ExponentMatrix,
    MonomialMatrix,
    conjugate_by_monomial,
    is_maximal,
    monomial_type,
    shifted,
    six_tuple,
    structural_invariants,
    validate,
    vertex_types,
)
from tiledorders.errors import (
    DimensionMismatch,
    EntryOverflow,
    NonzeroDiagonal,
    NotSquare,
    RingConditionViolated,
)
from tiledorders.perm import compose, format_cycles, inverse, parse_cycles
from tiledorders.sampling import random_exponent_matrix


class TestValidate:
    def test_diamond_is_valid(self):
        assert validate(3, [[0, 1, 1], [0, 0, 1], [0, 1, 0]]).mu == ((0, 1, 1), (0, 0, 1), (0, 1, 0))

    def test_zero_matrix(self):
        assert validate(3, [[0] * 3] * 3) == ExponentMatrix.zero(3)

    def test_ring_condition_reports_triple(self):
        with pytest.raises(RingConditionViolated) as exc:
            validate(2, [[0, 0], [-1, 0]])
        assert exc.value.triple == (2, 1, 2)

    def test_nonzero_diagonal(self):
        with pytest.raises(NonzeroDiagonal) as exc:
            validate(2, [[0, 1], [0, 1]])
        assert exc.value.i == 2

    @pytest.mark.parametrize("n, mu", [(2, [[0, 1]]), (3, [[0, 0], [0, 0]]), (1, [[0]]), (2, [[0, 0], [0]])])
    def test_not_square(self, n, mu):
        with pytest.raises(NotSquare):
            validate(n, mu)

    def test_overflow(self):
        with pytest.raises(EntryOverflow):
            validate(2, [[0, 2**31], [0, 0]])

    def test_negative_entries_allowed(self):
        assert validate(3, [[0, -1, -1], [3, 0, 1], [2, 1, 0]]).mu[0][1] == -1


class TestInvariantsAndTypes:
    def test_diamond_six_tuple(self):
        assert six_tuple(structural_invariants(DIAMOND)) == (1, 1, 0, 1, 0, 1)

    def test_zero_tensor(self):
        assert not structural_invariants(ExponentMatrix.zero(4)).any()

    def test_other_six_tuple(self):
        assert six_tuple(structural_invariants(TRIV_OTHER)) == (0, 2, 1, 1, 0, 1)

    def test_tensor_is_read_only(self):
        with pytest.raises(ValueError):
            structural_invariants(DIAMOND)[0, 0, 0] = 1

    def test_six_tuple_needs_n3(self):
        with pytest.raises(DimensionMismatch):
            six_tuple(structural_invariants(FOUR_D2))

    @pytest.mark.parametrize(
        "E, expected",
        [(FOUR_D2, (1, 3, 3, 1)), (ExponentMatrix.zero(3), (0, 0, 0)), (TRIV, (0, 2, 0))],
    )
    def test_vertex_types(self, E, expected):
        assert vertex_types(E) == expected


class TestMonomial:
    def test_conjugation_reproduces_example(self):
        xi = MonomialMatrix.from_cycles("(1 3)", (0, 1, 1))
        assert conjugate_by_monomial(DIAMOND, xi) == DIAMOND_CONJ

    def test_identity_conjugation(self):
        assert conjugate_by_monomial(FOUR_D2, MonomialMatrix.diagonal((0,) * 4)) == FOUR_D2

    @pytest.mark.parametrize("s", [-3, 1, 2, 5])
    def test_diagonal_shift(self, s):
        E = shifted(FOUR_D2, s)
        assert np.array_equal(structural_invariants(E), structural_invariants(FOUR_D2))
        assert vertex_types(E) == tuple((t + s) % 4 for t in vertex_types(FOUR_D2))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            conjugate_by_monomial(DIAMOND, MonomialMatrix.diagonal((0, 0)))

    def test_types(self):
        assert monomial_type(MonomialMatrix.from_cycles("(1 3)", (0, 1, 1))) == 2
        assert monomial_type(MonomialMatrix.diagonal((0, 0, 0))) == 0
        assert monomial_type(MonomialMatrix.diagonal((7, 0, 0, 0))) == 3

    def test_bad_permutation(self):
        with pytest.raises(ValueError):
            MonomialMatrix((0, 0), (0, 0))


class TestIsMaximal:
    def test_zero(self):
        assert is_maximal(ExponentMatrix.zero(3))

    def test_potential_difference(self):
        c = (1, 0, 2)
        assert is_maximal(ExponentMatrix([[c[i] - c[j] for j in range(3)] for i in range(3)]))

    def test_diamond_is_not(self):
        assert not is_maximal(DIAMOND)
        assert not is_maximal(CHAMBER)


class TestPermutations:
    def test_round_trip(self):
        for text in ["()", "(1 3)", "(1 2)(3 4)", "(1 3 2 4)"]:
            assert format_cycles(parse_cycles(text, 4)) == text

    def test_composition_right_to_left(self):
        assert parse_cycles("(1 2)(2 3)", 3) == compose(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3))
        assert parse_cycles("(1 2)(2 3)", 3)[2] == 0

    def test_inverse(self):
        s = parse_cycles("(1 2 3 4)", 4)
        assert compose(s, inverse(s)) == (0, 1, 2, 3)

    @pytest.mark.parametrize("bad", ["(1 5)", "(1 1)", "1 2", "(1 2"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_cycles(bad, 4)


@settings(max_examples=150, deadline=None)
@given(exponent_matrices())
def test_invariant_identities(E):
    m = structural_invariants(E)
    n = E.n
    assert (m >= 0).all()
    for i in range(n):
        for j in range(n):
            assert m[i, j, j] == 0
            for l in range(n):
                assert m[i, j, i] == m[i, j, l] + m[j, i, l]


@settings(max_examples=150, deadline=None)
@given(exponent_matrices().flatmap(lambda E: monomials(E.n).map(lambda xi: (E, xi))))
def test_conjugation_covariance(pair):
    E, xi = pair
    F = conjugate_by_monomial(E, xi)
    s = np.array(xi.sigma)
    assert np.array_equal(structural_invariants(F), structural_invariants(E)[np.ix_(s, s, s)])
    t = vertex_types(E)
    assert vertex_types(F) == tuple((monomial_type(xi) + t[s[i]]) % E.n for i in range(E.n))
    assert conjugate_by_monomial(F, xi.inverse()) == E


def test_generated_matrices_are_valid(rng):
    for _ in range(200):
        n = int(rng.integers(2, 7))
        E = random_exponent_matrix(rng, n)
        assert validate(n, [list(r) for r in E.mu]) == E
        assert np.abs(E.array).max() <= 3

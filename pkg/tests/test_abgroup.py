import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from tiledorders.abgroup import FinAbGroup, power_quotient_size, quotient_by, smith_normal_form


class TestSmith:
    def test_diagonal(self):
        assert smith_normal_form([[2, 0], [0, 8]]) == (2, 8)

    def test_relations_with_extra_generator(self):
        A = [[2, 0], [0, 8], [0, 2]]
        # determinantal divisors 2, 4 give elementary divisors 2, 2
        assert oracles.determinantal_divisors(A) == [2, 4]
        assert smith_normal_form(A) == (2, 2)

    def test_unit(self):
        assert smith_normal_form([[1]]) == (1,)

    def test_zero_and_rank_deficit(self):
        assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
        assert smith_normal_form([[2, 4], [1, 2]]) == (1, 0)

    def test_reorders_to_divisibility_chain(self):
        assert smith_normal_form([[6, 0], [0, 4]]) == (2, 12)

    def test_big_entries_do_not_overflow(self):
        big = 2**80
        assert smith_normal_form([[big, 0], [0, big * 3]]) == (big, 3 * big)

    @settings(max_examples=300, deadline=None)
    @given(st.integers(1, 5).flatmap(
        lambda r: st.integers(1, 5).flatmap(
            lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r))))
    def test_against_minors(self, A):
        s = smith_normal_form(A)
        dets = oracles.determinantal_divisors(A)
        running = 1
        for k, dk in enumerate(dets):
            running *= s[k]
            assert running == dk
        for a, b in zip(s, s[1:]):
            assert b % a == 0 if a else b == 0


class TestGroup:
    def test_strips_units(self):
        assert FinAbGroup((1, 2, 8)).invariant_factors == (2, 8)
        assert FinAbGroup((1, 1)) == FinAbGroup(())

    def test_rejects_broken_chain(self):
        with pytest.raises(ValueError):
            FinAbGroup((4, 6))
        with pytest.raises(ValueError):
            FinAbGroup((0,))

    def test_order_and_reduction(self):
        G = FinAbGroup((2, 8))
        assert G.order == 16
        assert G.element((3, -1)) == (1, 7)


class TestQuotient:
    def test_even_subgroup(self):
        order, counts = oracles.quotient_torsion_counts((2, 8), [(0, 2)])
        assert order == 4
        assert counts == oracles.torsion_counts_of((2, 2), 4)
        assert quotient_by(FinAbGroup((2, 8)), [(0, 2)]) == FinAbGroup((2, 2))

    def test_empty_relations(self):
        G = FinAbGroup((3, 9))
        assert quotient_by(G, []) == G

    def test_all_generators(self):
        assert quotient_by(FinAbGroup((2, 4, 4)), [(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == FinAbGroup(())

    def test_trivial_group(self):
        assert quotient_by(FinAbGroup(()), []) == FinAbGroup(())


class TestPowerQuotient:
    def test_klein_four(self):
        assert power_quotient_size(FinAbGroup((2, 2)), 4) == 4

    def test_against_brute_force(self):
        assert oracles.power_quotient_brute((2, 8), 4) == 8
        assert power_quotient_size(FinAbGroup((2, 8)), 4) == 8

    def test_trivial(self):
        assert power_quotient_size(FinAbGroup(()), 7) == 1

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            power_quotient_size(FinAbGroup((2,)), 0)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(2, 6), min_size=1, max_size=3), st.data())
def test_quotient_shrinks_power_quotient(chain_seed, data):
    # build a divisibility chain from cumulative products
    fs, acc = [], 1
    for x in chain_seed:
        acc *= x
        fs.append(acc)
    if acc > 256:
        return
    G = FinAbGroup(tuple(fs))
    rels = data.draw(st.lists(st.tuples(*(st.integers(0, d - 1) for d in fs)), max_size=3))
    Q = quotient_by(G, rels)
    for n in (2, 3, 4, 6):
        assert power_quotient_size(G, n) % power_quotient_size(Q, n) == 0

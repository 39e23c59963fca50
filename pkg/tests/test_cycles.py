import itertools
import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_cycle_gain, brute_cycles, det_coefficients, gain_graphs, to_nx, unit
from gainsym.constructions import example2_fixture, fig3a, sylvester_double
from gainsym.core import ComplexUnit, GainGraph, converse, underlying_properties
from gainsym.cycles import (
    Cycle, CycleCensus, census_is_negation_symmetric, cycle_census, cycle_edge_mask, cycle_gain,
    cycle_space_dimension, elementary_subgraphs, enumerate_cycles, fundamental_cycle_basis, gf2_rank,
    odd_cycle_basis, sachs_coefficient, sachs_coefficients, satisfies_edge_bound,
)
from gainsym.errors import Bipartite, BudgetExceeded, NotACycle, NotTwoConnected, TooLarge
from gainsym.spectra import char_poly


def K(n, gain=1.0):
    return GainGraph(n, [(u, v, gain) for u in range(n) for v in range(u + 1, n)])


def C(n, gains=None):
    gains = gains or [1.0] * n
    return GainGraph(n, [(i, (i + 1) % n, gains[i]) for i in range(n)])


def rank_of(g, cycles):
    index = g.edge_index()
    return gf2_rank([cycle_edge_mask(g, c, index) for c in cycles])


class TestCycle:
    def test_canonical_form(self):
        assert Cycle([3, 1, 2]) == (1, 2, 3)
        assert Cycle([2, 0, 3, 1]) == (0, 2, 1, 3)
        assert Cycle([0, 3, 1, 2]) == (0, 2, 1, 3)

    def test_rejects_short_or_repeating(self):
        with pytest.raises(NotACycle):
            Cycle([0, 1])
        with pytest.raises(NotACycle):
            Cycle([0, 1, 0])

    def test_gain_triangle(self):
        a, b, c = unit(0.3), unit(1.1), unit(-0.4)
        g = GainGraph(3, [(0, 1, a), (1, 2, b), (0, 2, c.conjugate())])
        assert cycle_gain(g, Cycle([0, 1, 2])).isclose(a * b * c, 1e-12)

    def test_gain_c4(self):
        assert cycle_gain(C(4), Cycle([0, 1, 2, 3])) == 1

    def test_real_part_direction_free(self):
        g = GainGraph(3, [(0, 1), (1, 2), (0, 2, 1j)])
        assert abs(cycle_gain(g, [0, 1, 2]).re) < 1e-15
        assert abs(cycle_gain(g, [0, 2, 1]).re) < 1e-15

    def test_not_a_cycle(self):
        with pytest.raises(NotACycle):
            cycle_gain(C(4), [0, 1, 3])


class TestBases:
    def test_c5(self):
        b = fundamental_cycle_basis(C(5))
        assert len(b) == 1 and len(b.cycles[0]) == 5

    def test_tree(self):
        assert len(fundamental_cycle_basis(GainGraph(4, [(0, 1), (1, 2), (1, 3)]))) == 0

    def test_k4(self):
        assert len(fundamental_cycle_basis(K(4))) == 3

    def test_dimension(self):
        assert cycle_space_dimension(GainGraph(4, [(0, 1), (1, 2), (2, 3)])) == 0
        assert cycle_space_dimension(C(5)) == 1
        two = GainGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert cycle_space_dimension(two) == 2

    def test_edge_bound(self):
        assert satisfies_edge_bound(fig3a())
        assert not satisfies_edge_bound(K(4))
        assert satisfies_edge_bound(GainGraph(4, [(0, 1), (1, 2), (2, 3)]))

    @given(gain_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_basis_rank_and_span(self, g):
        b = fundamental_cycle_basis(g)
        dim = cycle_space_dimension(g)
        assert len(b) == dim and rank_of(g, b.cycles) == dim
        for c in b.cycles:
            cycle_gain(g, c)  # raises unless every arc is an edge
        if g.n <= 8 and g.m <= 14:
            index = g.edge_index()
            basis_masks = [cycle_edge_mask(g, c, index) for c in b.cycles]
            for c in enumerate_cycles(g, g.n) if g.n >= 3 else []:
                assert gf2_rank(basis_masks + [cycle_edge_mask(g, c, index)]) == dim

    def test_odd_basis_k4(self):
        b = odd_cycle_basis(K(4))
        assert len(b) == 3 and all(len(c) == 3 for c in b.cycles) and rank_of(K(4), b.cycles) == 3

    def test_odd_basis_c5(self):
        assert odd_cycle_basis(C(5)).cycles == (Cycle(range(5)),)

    def test_odd_basis_errors(self):
        with pytest.raises(Bipartite):
            odd_cycle_basis(C(4))
        with pytest.raises(NotTwoConnected):
            odd_cycle_basis(fig3a())

    @given(gain_graphs(min_n=3, max_n=9, connected=True))
    @settings(max_examples=60, deadline=None)
    def test_odd_basis_property(self, g):
        props = underlying_properties(g)
        if not props.two_connected or props.bipartite:
            return
        b = odd_cycle_basis(g)
        assert all(len(c) % 2 for c in b.cycles)
        assert len(b) == g.m - g.n + 1 == rank_of(g, b.cycles)


class TestEnumeration:
    def test_k4(self):
        cycles = enumerate_cycles(K(4), 4)
        assert len(cycles) == 7
        assert sum(len(c) == 3 for c in cycles) == 4
        assert cycles == sorted(cycles)

    def test_c6_short(self):
        assert enumerate_cycles(C(6), 5) == []

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            enumerate_cycles(K(7), 7, budget=100)

    @given(gain_graphs(max_n=8), st.integers(3, 8))
    @settings(max_examples=80, deadline=None)
    def test_matches_networkx(self, g, max_len):
        ours = enumerate_cycles(g, max_len)
        assert len(set(ours)) == len(ours)
        as_sets = {frozenset(frozenset(e) for e in c.arcs()) for c in ours}
        assert as_sets == brute_cycles(g, max_len)
        for c in ours:
            assert Cycle(c) == c


class TestCensus:
    def test_triangle(self):
        assert cycle_census(K(3), 3).buckets == {1.0: 1}

    def test_k4(self):
        assert cycle_census(K(4), 3).buckets == {1.0: 4}

    def test_c6_empty(self):
        assert cycle_census(C(6), 3).buckets == {}

    def test_merge_within_tolerance(self):
        g = GainGraph(4, [(0, 1), (1, 2), (0, 2), (2, 3), (1, 3, unit(1e-6))])
        c = cycle_census(g, 3)
        assert len(c.buckets) == 1 and c.total == 2
        c = cycle_census(g, 3, tol=1e-15)
        assert len(c.buckets) == 2

    def test_negation_symmetry(self):
        assert not census_is_negation_symmetric(CycleCensus(9, {0.91: 620, -0.91: 628}))
        assert census_is_negation_symmetric(CycleCensus(3, {0.0: 5}))
        assert census_is_negation_symmetric(CycleCensus(3, {1.0: 2, -1.0: 2}))

    @given(gain_graphs(max_n=7), st.integers(3, 7))
    @settings(max_examples=60, deadline=None)
    def test_total_matches_enumeration(self, g, k):
        assert cycle_census(g, k).total == sum(len(c) == k for c in enumerate_cycles(g, k))

    @given(gain_graphs(max_n=7, turns=True), st.integers(3, 7))
    @settings(max_examples=60, deadline=None)
    def test_exact_turns_agree_with_floats(self, g, k):
        floats = GainGraph(g.n, [(u, v, gain.value) for u, v, gain in g.edges])
        exact, approx = cycle_census(g, k), cycle_census(floats, k)
        assert sorted(exact.buckets.values()) == sorted(approx.buckets.values())
        for a, b in zip(exact.rows(), approx.rows()):
            assert abs(a[0] - b[0]) < 1e-9


class TestExample2Census:
    """Frozen nine-cycle counts of the Sylvester double of the five-vertex fixture.

    Each count was cross-checked with networkx.simple_cycles and a complex
    product per cycle.
    """

    MU = 0.9135454576426009

    @staticmethod
    def nx_counts(g, mu):
        neg = pos = total = 0
        for c in nx.simple_cycles(to_nx(g), length_bound=9):
            if len(c) != 9:
                continue
            total += 1
            re = brute_cycle_gain(g, c).real
            neg += abs(re + mu) < 1e-9
            pos += abs(re - mu) < 1e-9
        return neg, pos, total

    def test_printed_matrix_at_tenth_turn(self):
        d = sylvester_double(example2_fixture(), ComplexUnit(turns=Fraction(1, 10)))
        c = cycle_census(d, 9)
        assert c.total == 6656
        assert (c.count_near(-self.MU), c.count_near(self.MU)) == (625, 633)
        assert self.nx_counts(d, self.MU) == (625, 633, 6656)
        assert not census_is_negation_symmetric(c)

    def test_printed_matrix_generic_z(self):
        z = ComplexUnit(turns=Fraction(1, 7))
        mu = 0.5 * (math.sqrt(3) * z.im + z.re)
        c = cycle_census(sylvester_double(example2_fixture(), z), 9)
        assert (c.count_near(-mu), c.count_near(mu)) == (620, 628)

    def test_conversed_matrix_generic_z(self):
        z = ComplexUnit(turns=Fraction(1, 7))
        mu = 0.5 * (math.sqrt(3) * z.im + z.re)
        c = cycle_census(sylvester_double(converse(example2_fixture()), z), 9)
        assert (c.count_near(-mu), c.count_near(mu)) == (628, 620)


class TestSachs:
    def test_triangle(self):
        phi = unit(0.9)
        g = GainGraph(3, [(0, 1), (1, 2), (0, 2, phi.conjugate())])
        assert sachs_coefficient(g, 2) == pytest.approx(-3)
        assert sachs_coefficient(g, 3) == pytest.approx(-2 * phi.real)

    def test_c4(self):
        assert np.allclose(sachs_coefficients(C(4)), [1, 0, -4, 0, 0])

    def test_elementary_counts(self):
        assert len(elementary_subgraphs(K(3), 2)) == 3
        assert len(elementary_subgraphs(K(3), 3)) == 1
        assert len(elementary_subgraphs(K(4), 4)) == 6

    def test_elementary_k4_brute_force(self):
        # every edge subset whose components are single edges or cycles, on 4 vertices
        g = K(4)
        edges = [(u, v) for u, v, _ in g.edges]
        count = 0
        for r in range(1, len(edges) + 1):
            for sub in itertools.combinations(edges, r):
                h = nx.Graph(sub)
                if h.number_of_nodes() != 4:
                    continue
                comps = [h.subgraph(c) for c in nx.connected_components(h)]
                if all(c.number_of_edges() == 1 or all(d == 2 for _, d in c.degree()) for c in comps):
                    count += 1
        assert count == len(elementary_subgraphs(g, 4))

    def test_cap(self):
        with pytest.raises(TooLarge):
            sachs_coefficient(C(15), 2)

    def test_a1_zero(self):
        assert sachs_coefficient(K(5, 1j), 1) == 0

    @given(gain_graphs(max_n=8))
    @settings(max_examples=60, deadline=None)
    def test_matches_determinant(self, g):
        assert np.allclose(sachs_coefficients(g), det_coefficients(g), atol=1e-8, rtol=0)
        assert np.allclose(sachs_coefficients(g), char_poly(g), atol=1e-8, rtol=0)

    @given(gain_graphs(max_n=7, turns=True))
    @settings(max_examples=30, deadline=None)
    def test_exact_turns_match_determinant(self, g):
        assert np.allclose(sachs_coefficients(g), det_coefficients(g), atol=1e-8, rtol=0)

    def test_single_coefficient_agrees(self):
        g = GainGraph(5, [(0, 1, 1j), (1, 2), (2, 3, -1), (3, 4), (0, 4, unit(0.4)), (1, 3)])
        all_ = sachs_coefficients(g)
        for j in range(g.n + 1):
            assert sachs_coefficient(g, j) == pytest.approx(all_[j], abs=1e-12)

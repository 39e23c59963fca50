import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import gain_graphs, switchings, unit
from gainsym.constructions import fig3a, fig3b
from gainsym.core import GainGraph, switch
from gainsym.cycles import cycle_gain
from gainsym.search import (
    SUCCESS_THRESHOLD, AnnealConfig, anneal_search, distinct_solutions, symmetry_objective,
)
from gainsym.spectra import eigenvalues, is_spectrally_symmetric

FAST = AnnealConfig(iterations=6000, restarts=2)


def fig3b_parameters(g):
    """``(alpha, beta, gamma)`` read off as the gains of the three drawn cycles."""
    return tuple(complex(cycle_gain(g, c)) for c in ([0, 1, 2], [3, 1, 2], [5, 3, 2, 4]))


class TestObjective:
    def test_triangle_imaginary(self):
        assert symmetry_objective(GainGraph(3, [(0, 1), (1, 2), (0, 2, 1j)])) == pytest.approx(0, abs=1e-24)

    def test_triangle_ones(self):
        assert symmetry_objective(GainGraph(3, [(0, 1), (1, 2), (0, 2)])) == pytest.approx(6)

    @given(gain_graphs(max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_bipartite_zero(self, g):
        h = GainGraph(g.n, [(u, v, gain) for u, v, gain in g.edges if (u + v) % 2])
        assert symmetry_objective(h) <= 1e-9

    @given(gain_graphs(max_n=7), st.data())
    @settings(max_examples=40, deadline=None)
    def test_switching_invariant_and_nonnegative(self, g, data):
        f = symmetry_objective(g)
        assert f >= 0
        assert symmetry_objective(switch(g, data.draw(switchings(g.n)))) == pytest.approx(f, abs=1e-9)

    @given(gain_graphs(max_n=7))
    @settings(max_examples=40, deadline=None)
    def test_zero_iff_symmetric(self, g):
        f = symmetry_objective(g)
        verdict = is_spectrally_symmetric(g)
        if f <= 1e-18:
            assert verdict
        if verdict:
            radius = max(1.0, float(np.abs(eigenvalues(g)).max(initial=0.0)))
            assert f <= g.n * (1e-9 * radius) ** 2


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        {"iterations": 0}, {"restarts": 0}, {"t0": 0}, {"cooling": 1.0}, {"cooling": 0}, {"step_sigma0": -1},
    ])
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            AnnealConfig(**kwargs)


class TestAnneal:
    def test_reproducible(self):
        a = anneal_search(fig3b(), FAST)
        b = anneal_search(fig3b(), FAST)
        assert a.angles == b.angles and a.objective == b.objective and a.history == b.history

    def test_seed_matters(self):
        a = anneal_search(fig3b(), AnnealConfig(iterations=300, restarts=1, seed=1))
        b = anneal_search(fig3b(), AnnealConfig(iterations=300, restarts=1, seed=2))
        assert a.angles != b.angles

    def test_history_non_increasing(self):
        res = anneal_search(fig3a(), AnnealConfig(iterations=3000, restarts=1, seed=4))
        assert all(x >= y for x, y in zip(res.history, res.history[1:]))

    def test_objective_reported(self):
        res = anneal_search(fig3a(), FAST)
        assert res.objective == pytest.approx(symmetry_objective(res.gains), abs=1e-12)
        assert len(res.basis_gains) == 2

    def test_bipartite_done_at_start(self):
        c6 = GainGraph(6, [(i, (i + 1) % 6, unit(0.4 * i)) for i in range(6)])
        res = anneal_search(c6)
        assert res.objective <= 1e-20 and res.restart_index == 0 and res.accepted_moves == 0
        assert all(gain == 1 for _, _, gain in res.gains.edges)

    def test_fig3a(self):
        res = anneal_search(fig3a())
        assert res.objective < SUCCESS_THRESHOLD
        assert all(abs(gain.re) < 1e-3 for _, gain in res.basis_gains)
        assert all(len(c) == 3 for c, _ in res.basis_gains)

    @pytest.mark.parametrize("seed", range(4))
    def test_fig3b_printed_equations(self, seed):
        res = anneal_search(fig3b(), AnnealConfig(seed=seed))
        assert res.objective < SUCCESS_THRESHOLD
        alpha, beta, gamma = fig3b_parameters(res.gains)
        assert abs(-2 * alpha.real - 2 * beta.real) < 1e-3
        assert abs(4 * alpha.real + 2 * beta.real - 2 * (beta * gamma).real) < 1e-3


class TestDistinct:
    def test_tree(self):
        reps = distinct_solutions(GainGraph(4, [(0, 1), (1, 2), (1, 3)]), FAST, runs=3)
        assert len(reps) == 1 and reps[0].objective == pytest.approx(0, abs=1e-20)

    def test_runs_positive(self):
        with pytest.raises(ValueError):
            distinct_solutions(fig3a(), FAST, runs=0)

    def test_fig3a_single_class(self):
        reps = distinct_solutions(fig3a(), FAST, runs=6)
        assert len(reps) == 1

    def test_fig3b_several_classes(self):
        reps = distinct_solutions(fig3b(), FAST, runs=4)
        assert len(reps) >= 2


def test_fig3b_solutions_off_the_r3_family():
    # alpha = beta = i, gamma = 1 solves both equations with Re(gamma) = +1
    g = fig3b(1j, 1j, 1)
    assert is_spectrally_symmetric(g)
    _, beta, gamma = fig3b_parameters(g)
    assert gamma.real == pytest.approx(1) and (beta * (1 + gamma)).real == pytest.approx(0)


def test_fig3b_solution_branches():
    # with r2 = -r1 the second equation reduces to Re(beta (1 + gamma)) = 0
    for res in (anneal_search(fig3b(), AnnealConfig(seed=s)) for s in range(3)):
        _, beta, gamma = fig3b_parameters(res.gains)
        assert abs(gamma.real + 1) < 1e-3 or abs((beta * (1 + gamma)).real) < 1e-3

"""Simulated annealing for gain functions with a symmetric spectrum.

The spanning tree is pinned to gain 1, which removes the switching freedom;
the search variables are then one angle per cotree edge, i.e. one per
fundamental cycle.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

from .core import GainGraph, spanning_forest
from .cycles import fundamental_cycle_basis, cycle_gain
from .equivalence import AUTOMORPHISM_MAX_N, is_switching_isomorphic
from .spectra import eigenvalues

__all__ = [
    "AnnealConfig",
    "SearchResult",
    "SUCCESS_THRESHOLD",
    "symmetry_objective",
    "anneal_search",
    "search_runs",
    "distinct_solutions",
]

SUCCESS_THRESHOLD = 1e-6


@dataclass(frozen=True)
class AnnealConfig:
    iterations: int = 20000
    restarts: int = 5
    t0: float = 1.0
    cooling: float = 0.995
    step_sigma0: float = 0.5
    seed: int = 0
    # a restart ends once its best objective is this small; later restarts
    # are skipped as well
    stop_below: float = 1e-20

    def __post_init__(self):
        if self.iterations < 1 or self.restarts < 1:
            raise ValueError("iterations and restarts must be positive")
        if self.t0 <= 0 or self.step_sigma0 <= 0:
            raise ValueError("t0 and step_sigma0 must be positive")
        if not 0 < self.cooling < 1:
            raise ValueError("cooling must lie in (0, 1)")


@dataclass(frozen=True)
class SearchResult:
    gains: GainGraph
    objective: float
    basis_gains: list
    accepted_moves: int
    restart_index: int
    angles: tuple = ()
    history: tuple = ()   # best objective after every iteration of the winning restart


def _objective_from_values(vals: np.ndarray) -> float:
    return float(np.sum((vals + vals[::-1]) ** 2))


def symmetry_objective(g: GainGraph) -> float:
    """``sum_j (lambda_j + lambda_{n+1-j})^2`` over the descending spectrum."""
    return _objective_from_values(eigenvalues(g))


class _Landscape:
    """Gain matrix of a fixed graph with cotree angles as the free variables."""

    def __init__(self, g: GainGraph):
        forest = spanning_forest(g)
        self.graph = g
        self.tree = [(u, v) for u, v, _ in g.edges if forest.parent[v] == u or forest.parent[u] == v]
        self.cotree = [(u, v) for u, v, _ in g.edges if not (forest.parent[v] == u or forest.parent[u] == v)]
        self.base = np.zeros((g.n, g.n), dtype=complex)
        for u, v in self.tree:
            self.base[u, v] = self.base[v, u] = 1.0

    def matrix(self, angles) -> np.ndarray:
        a = self.base.copy()
        for (u, v), th in zip(self.cotree, angles):
            z = cmath.exp(1j * th)
            a[u, v] = z
            a[v, u] = z.conjugate()
        return a

    def objective(self, angles) -> float:
        if self.graph.n == 0:
            return 0.0
        return _objective_from_values(np.linalg.eigvalsh(self.matrix(angles))[::-1])

    def graph_for(self, angles) -> GainGraph:
        gains = dict(zip(self.cotree, angles))
        return GainGraph(self.graph.n, [
            (u, v, cmath.exp(1j * gains[u, v]) if (u, v) in gains else 1.0)
            for u, v, _ in self.graph.edges
        ])


def _run_restart(land: _Landscape, cfg: AnnealConfig, restart: int):
    rng = np.random.default_rng([cfg.seed, restart])
    dim = len(land.cotree)
    if restart == 0:
        cur = np.zeros(dim)
    else:
        cur = rng.uniform(-math.pi, math.pi, dim)
    f_cur = land.objective(cur)
    best, f_best = cur.copy(), f_cur
    history = [f_best]
    accepted = 0
    temp = cfg.t0
    for _ in range(cfg.iterations):
        if dim == 0 or f_best <= cfg.stop_below:
            break
        prop = cur.copy()
        k = rng.integers(dim)
        # width ~ sqrt(T): at temperature T the chain spreads over f ~ T, i.e. a
        # distance ~ sqrt(T) from a quadratic minimum
        prop[k] += rng.normal(0.0, cfg.step_sigma0 * math.sqrt(temp / cfg.t0))
        f_prop = land.objective(prop)
        delta = f_prop - f_cur
        if delta <= 0 or rng.random() < math.exp(-delta / temp):
            cur, f_cur = prop, f_prop
            accepted += 1
            if f_cur < f_best:
                best, f_best = cur.copy(), f_cur
        history.append(f_best)
        temp *= cfg.cooling
    best = (best + math.pi) % (2 * math.pi) - math.pi
    return best, f_best, accepted, history


def anneal_search(underlying: GainGraph, cfg: AnnealConfig = AnnealConfig()) -> SearchResult:
    """Minimize the spectral symmetry objective over gain functions on ``underlying``.

    Gains of ``underlying`` are ignored. Each restart runs a Metropolis
    chain with temperature ``t0 * cooling**k`` and Gaussian single-angle
    steps of width ``step_sigma0 * sqrt(cooling**k)``; restart 0 starts from all
    gains 1, the others from uniform random angles. The best result wins,
    ties going to the lower restart index. Identical configurations give
    identical results.
    """
    land = _Landscape(underlying)
    winner = None
    for r in range(cfg.restarts):
        angles, f, accepted, history = _run_restart(land, cfg, r)
        if winner is None or f < winner[1]:
            winner = (angles, f, accepted, history, r)
        if winner[1] <= cfg.stop_below:
            break
    angles, f, accepted, history, r = winner
    g = land.graph_for(angles)
    basis = fundamental_cycle_basis(g)
    return SearchResult(
        gains=g,
        objective=symmetry_objective(g),
        basis_gains=[(c, cycle_gain(g, c)) for c in basis.cycles],
        accepted_moves=accepted,
        restart_index=r,
        angles=tuple(float(a) for a in angles),
        history=tuple(history),
    )


def search_runs(underlying: GainGraph, cfg: AnnealConfig = AnnealConfig(), runs: int = 20) -> list:
    """``runs`` independent searches; run ``r`` uses the seed derived from ``(cfg.seed, r)``."""
    if runs < 1:
        raise ValueError("runs must be at least 1")
    out = []
    for r in range(runs):
        seed = int(np.random.SeedSequence([cfg.seed, r]).generate_state(1)[0])
        out.append(anneal_search(underlying, replace(cfg, seed=seed)))
    return out


def distinct_solutions(underlying: GainGraph, cfg: AnnealConfig = AnnealConfig(), runs: int = 20,
                       threshold: float = SUCCESS_THRESHOLD, tol: float = 1e-3,
                       max_n: int = AUTOMORPHISM_MAX_N) -> list:
    """Representatives of the switching classes reached by ``runs`` searches.

    The searches are those of :func:`search_runs`. Results with objective
    below ``threshold`` are kept and merged when they are switching
    isomorphic with gains matching to ``tol``.
    """
    reps = []
    for res in search_runs(underlying, cfg, runs):
        if res.objective >= threshold:
            continue
        if any(is_switching_isomorphic(rep.gains, res.gains, tol=tol, max_n=max_n) for rep in reps):
            continue
        reps.append(res)
    return reps

"""Hypothesis strategies and brute-force oracles shared by the tests."""
import cmath
import itertools
import math

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from gainsym.core import ComplexUnit, GainGraph, relabel, converse


def unit(theta):
    return cmath.exp(1j * theta)


angles = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)


@st.composite
def gain_graphs(draw, min_n=1, max_n=7, p=None, connected=False, turns=False):
    """Random gain graphs; with ``turns`` the gains are exact sixth/eighth roots."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        mask = [draw(st.floats(0, 1)) < p for _ in pairs]
    edges = []
    for (u, v), keep in zip(pairs, mask):
        if connected and v == u + 1:
            keep = True
        if keep:
            if turns:
                q = draw(st.sampled_from([6, 8]))
                gain = ComplexUnit(turns=f"{draw(st.integers(0, q - 1))}/{q}")
            else:
                gain = unit(draw(angles))
            edges.append((u, v, gain))
    return GainGraph(n, edges)


@st.composite
def switchings(draw, n):
    return [unit(draw(angles)) for _ in range(n)]


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _ in g.edges)
    return h


def brute_cycles(g, max_len):
    """Simple cycles as frozensets of edges, via networkx."""
    out = set()
    for c in nx.simple_cycles(to_nx(g), length_bound=max_len):
        if len(c) >= 3:
            out.add(frozenset(frozenset(e) for e in zip(c, c[1:] + c[:1])))
    return out


def brute_cycle_gain(g, c):
    z = 1 + 0j
    for a, b in zip(c, list(c[1:]) + [c[0]]):
        z *= complex(g.gain(a, b))
    return z


def brute_automorphisms(g):
    edges = {frozenset((u, v)) for u, v, _ in g.edges}
    return sorted(
        p for p in itertools.permutations(range(g.n))
        if {frozenset((p[u], p[v])) for u, v, _ in g.edges} == edges
    )


def brute_switching_iso(g1, g2, tol=1e-9):
    """Cycle-gain criterion over every cycle (not only a basis), all permutations, both orientations."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    cycles = [list(c) for c in nx.simple_cycles(to_nx(g1)) if len(c) >= 3]
    for p in itertools.permutations(range(g1.n)):
        h = relabel(g1, p)
        if {(u, v) for u, v, _ in h.edges} != {(u, v) for u, v, _ in g2.edges}:
            continue
        for conv in (False, True):
            hh = converse(h) if conv else h
            if all(abs(brute_cycle_gain(hh, [p[x] for x in c]) - brute_cycle_gain(g2, [p[x] for x in c])) <= tol
                   for c in cycles):
                return True
    return False


def det_coefficients(g):
    """Characteristic polynomial via numpy's eigenvalues, as an oracle."""
    from gainsym.core import gain_matrix
    if g.n == 0:
        return np.ones(1)
    return np.real(np.poly(np.linalg.eigvals(gain_matrix(g))))

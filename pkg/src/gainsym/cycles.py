"""Cycle space machinery for gain graphs.

Spanning trees and fundamental cycle bases, odd cycle bases, simple cycle
enumeration with a census of cycle gains, elementary subgraphs, and the
combinatorial (Harary-Sachs) characteristic polynomial coefficients.

Cycles are vertex tuples in canonical form: they start at their smallest
vertex and the second vertex is the smaller neighbour of the start.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .core import ComplexUnit, GainGraph, components, spanning_forest, underlying_properties
from .errors import Bipartite, BudgetExceeded, NotACycle, NotTwoConnected, TooLarge

__all__ = [
    "Cycle",
    "CycleBasis",
    "CycleCensus",
    "ElementarySubgraph",
    "CENSUS_TOL",
    "DEFAULT_BUDGET",
    "SACHS_MAX_N",
    "cycle_gain",
    "cycle_edge_mask",
    "gf2_rank",
    "fundamental_cycle_basis",
    "odd_cycle_basis",
    "enumerate_cycles",
    "cycle_census",
    "census_is_negation_symmetric",
    "elementary_subgraphs",
    "sachs_coefficient",
    "sachs_coefficients",
    "cycle_space_dimension",
    "satisfies_edge_bound",
]

CENSUS_TOL = 1e-9
DEFAULT_BUDGET = 10**7
SACHS_MAX_N = 14


class Cycle(tuple):
    """A simple cycle as a canonical vertex tuple (closed implicitly)."""

    __slots__ = ()

    def __new__(cls, vertices: Sequence[int]):
        vs = [int(v) for v in vertices]
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise NotACycle(f"{vs} is not a list of >= 3 distinct vertices")
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[-1] < vs[1]:
            vs = [vs[0]] + vs[:0:-1]
        return super().__new__(cls, vs)

    def arcs(self):
        """Consecutive vertex pairs along the canonical traversal."""
        k = len(self)
        return [(self[i], self[(i + 1) % k]) for i in range(k)]

    def __repr__(self):
        return f"Cycle({list(self)})"


def _check_cycle(g: GainGraph, vertices: Sequence[int]) -> None:
    if len(vertices) < 3 or len(set(vertices)) != len(vertices):
        raise NotACycle(f"{list(vertices)} is not a simple cycle")
    k = len(vertices)
    for i in range(k):
        u, v = vertices[i], vertices[(i + 1) % k]
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise NotACycle(f"{u}-{v} is not an edge")


def cycle_gain(g: GainGraph, c: Sequence[int]) -> ComplexUnit:
    """Product of the arc gains along ``c`` in the order given.

    The real part does not depend on the traversal direction.
    """
    _check_cycle(g, c)
    k = len(c)
    gain = g.gain(c[0], c[1])
    for i in range(1, k):
        gain = gain * g.gain(c[i], c[(i + 1) % k])
    return gain


def cycle_edge_mask(g: GainGraph, c: Sequence[int], index: dict | None = None) -> int:
    """Edge indicator vector of ``c`` over GF(2), as an int bitmask."""
    index = g.edge_index() if index is None else index
    mask = 0
    k = len(c)
    for i in range(k):
        u, v = c[i], c[(i + 1) % k]
        mask |= 1 << index[min(u, v), max(u, v)]
    return mask


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of int-bitmask vectors."""
    pivots = {}
    rank = 0
    for vec in vectors:
        while vec:
            top = vec.bit_length() - 1
            if top in pivots:
                vec ^= pivots[top]
            else:
                pivots[top] = vec
                rank += 1
                break
    return rank


@dataclass(frozen=True)
class CycleBasis:
    cycles: tuple
    tree_edges: tuple | None = None

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def gains(self, g: GainGraph) -> list:
        return [cycle_gain(g, c) for c in self.cycles]


def cycle_space_dimension(g: GainGraph) -> int:
    """``m - n + c`` with ``c`` the number of connected components."""
    return g.m - g.n + len(components(g))


def satisfies_edge_bound(g: GainGraph) -> bool:
    """Whether ``m <= 3/2 (n - 1)``."""
    return 2 * g.m <= 3 * (g.n - 1)


def _tree_path_cycle(parent, depth, u, v) -> list:
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor, right repeats it
    return left + right[-2::-1]


def fundamental_cycle_basis(g: GainGraph) -> CycleBasis:
    """One cycle per cotree edge of a BFS spanning forest.

    Examples
    --------
    >>> from gainsym.core import GainGraph
    >>> k4 = GainGraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    >>> len(fundamental_cycle_basis(k4))
    3
    """
    forest = spanning_forest(g)
    parent, depth = forest.parent, forest.depth
    tree = []
    cycles = []
    for u, v, _ in g.edges:
        if parent[v] == u or parent[u] == v:
            tree.append((u, v))
        else:
            cycles.append(Cycle(_tree_path_cycle(parent, depth, u, v)))
    return CycleBasis(tuple(cycles), tuple(tree))


def _mask_to_cycle(g: GainGraph, mask: int) -> Cycle | None:
    """The simple cycle whose edge set is ``mask``, or None if it is not one."""
    adj = {}
    for i, (u, v, _) in enumerate(g.edges):
        if mask >> i & 1:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
    if len(adj) < 3 or any(len(nb) != 2 for nb in adj.values()):
        return None
    start = min(adj)
    walk = [start]
    prev, cur = None, start
    while True:
        a, b = adj[cur]
        nxt = a if a != prev else b
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    if len(walk) != len(adj):
        return None
    return Cycle(walk)


def odd_cycle_basis(g: GainGraph, max_len: int | None = None, budget: int = DEFAULT_BUDGET) -> CycleBasis:
    """A cycle basis made of odd cycles only.

    Starts from a fundamental basis and replaces each even member ``E`` by
    ``E xor O`` for an odd member ``O``, as long as that symmetric difference
    is a simple cycle. When no such pair exists, the shortest odd simple
    cycle that keeps the basis independent is swapped in instead.

    Raises
    ------
    NotTwoConnected, Bipartite
    """
    props = underlying_properties(g)
    if not props.two_connected:
        raise NotTwoConnected("odd cycle bases need a 2-connected graph")
    if props.bipartite:
        raise Bipartite("a bipartite graph has no odd cycles")
    index = g.edge_index()
    basis = list(fundamental_cycle_basis(g).cycles)
    masks = [cycle_edge_mask(g, c, index) for c in basis]
    full = len(basis)
    odd_pool = None

    def independent_with(i, mask):
        return gf2_rank(masks[:i] + [mask] + masks[i + 1:]) == full

    for i in range(full):
        if len(basis[i]) % 2:
            continue
        replacement = None
        for j in sorted(range(full), key=lambda j: len(basis[j])):
            if j == i or len(basis[j]) % 2 == 0 or not masks[i] & masks[j]:
                continue
            cyc = _mask_to_cycle(g, masks[i] ^ masks[j])
            if cyc is not None:
                replacement = cyc, masks[i] ^ masks[j]
                break
        if replacement is None:
            if odd_pool is None:
                limit = g.n if max_len is None else max_len
                odd_pool = sorted(
                    (c for c in enumerate_cycles(g, limit, budget) if len(c) % 2),
                    key=lambda c: (len(c), c),
                )
            for cyc in odd_pool:
                mask = cycle_edge_mask(g, cyc, index)
                if independent_with(i, mask):
                    replacement = cyc, mask
                    break
        if replacement is None:  # pragma: no cover - excluded by the 2-connected check
            raise NotTwoConnected("could not complete an odd cycle basis")
        basis[i], masks[i] = replacement
    return CycleBasis(tuple(basis), None)


def _walk_cycles(g: GainGraph, min_len: int, max_len: int, budget: int) -> Iterator:
    """Depth-first enumeration of canonical simple cycles with their gains.

    Yields ``(vertices, gain)`` where gain is a complex number, or an integer
    number of ``1/denom`` turns when every edge carries exact turns (the
    denominator is stored on the generator's first yield as ``("denom", d)``).
    """
    n = g.n
    exact = g.m > 0 and all(gain.turns is not None for _, _, gain in g.edges)
    if exact:
        denom = math.lcm(*(gain.turns.denominator for _, _, gain in g.edges))
        weight = {}
        for u, v, gain in g.edges:
            t = int(gain.turns * denom)
            weight[u, v] = t
            weight[v, u] = -t
        yield ("denom", denom)
    else:
        weight = {}
        for u, v, gain in g.edges:
            weight[u, v] = gain.value
            weight[v, u] = gain.value.conjugate()
    adj = [g.neighbors(u) for u in range(n)]
    count = 0
    for s in range(n):
        up = [w for w in adj[s] if w > s]
        if len(up) < 2:
            continue
        closers = set(up)
        path = [s]
        acc = [0 if exact else 1.0]
        on_path = 1 << s
        stack = [iter(up)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                last = path.pop()
                acc.pop()
                on_path &= ~(1 << last)
                continue
            if on_path >> nxt & 1 or nxt < s:
                continue
            prev = path[-1]
            if exact:
                val = acc[-1] + weight[prev, nxt]
            else:
                val = acc[-1] * weight[prev, nxt]
            length = len(path) + 1
            path.append(nxt)
            acc.append(val)
            on_path |= 1 << nxt
            if length >= 3 and length >= min_len and nxt in closers and path[1] < nxt:
                count += 1
                if count > budget:
                    raise BudgetExceeded(f"more than {budget} cycles")
                close = val + weight[nxt, s] if exact else val * weight[nxt, s]
                yield tuple(path), close
            if length < max_len:
                stack.append(iter(adj[nxt]))
            else:
                path.pop()
                acc.pop()
                on_path &= ~(1 << nxt)


def enumerate_cycles(g: GainGraph, max_len: int, budget: int = DEFAULT_BUDGET) -> list:
    """Every simple cycle of length ``<= max_len``, each once, sorted.

    Raises
    ------
    BudgetExceeded
        When more than ``budget`` cycles exist.
    """
    if max_len < 3:
        raise ValueError("max_len must be at least 3")
    out = [Cycle.__new__(Cycle, c) for c, _ in _walk_cycles(g, 3, max_len, budget) if c != "denom"]
    out.sort()
    return out


@dataclass(frozen=True)
class CycleCensus:
    """Counts of order-``k`` cycles bucketed by the real part of their gain."""

    k: int
    buckets: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.buckets.values())

    def count_near(self, value: float, tol: float = 1e-6) -> int:
        return sum(c for key, c in self.buckets.items() if abs(key - value) <= tol)

    def rows(self) -> list:
        return sorted(self.buckets.items())


def _bucket(values, tol: float) -> dict:
    values = sorted(values)
    buckets = {}
    group = []
    for x in values:
        if group and x - group[-1] > tol:
            buckets[float(np.mean(group))] = len(group)
            group = []
        group.append(x)
    if group:
        buckets[float(np.mean(group))] = len(group)
    return buckets


def cycle_census(g: GainGraph, k: int, budget: int = DEFAULT_BUDGET, tol: float = CENSUS_TOL) -> CycleCensus:
    """Bucket all order-``k`` cycles by ``Re`` of their gain.

    Values within ``tol`` of their sorted neighbour share a bucket, whose
    key is the mean of its members.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    walk = _walk_cycles(g, k, k, budget)
    first = next(walk, None)
    if first is None:
        return CycleCensus(k, {})
    if first[0] == "denom":
        denom = first[1]
        tally = {}
        for _, t in walk:
            t %= denom
            tally[t] = tally.get(t, 0) + 1
        values = []
        for t, c in tally.items():
            values.extend([math.cos(2 * math.pi * t / denom)] * c)
    else:
        values = [first[1].real] + [gain.real for _, gain in walk]
    return CycleCensus(k, _bucket(values, tol))


def census_is_negation_symmetric(c: CycleCensus, tol: float = CENSUS_TOL) -> bool:
    """True iff each bucket ``mu`` has a partner ``-mu`` with the same count."""
    keys = list(c.buckets)
    for mu, count in c.buckets.items():
        partner = [k for k in keys if abs(k + mu) <= max(tol, 1e-9)]
        if sum(c.buckets[k] for k in partner) != count:
            return False
    return True


@dataclass(frozen=True)
class ElementarySubgraph:
    edges: tuple
    cycles: tuple

    @property
    def order(self) -> int:
        return 2 * len(self.edges) + sum(len(c) for c in self.cycles)

    @property
    def components(self) -> int:
        return len(self.edges) + len(self.cycles)


def _cycle_table(g: GainGraph, budget: int):
    by_min = [[] for _ in range(g.n)]
    for c, gain in _walk_cycles(g, 3, g.n, budget):
        if c == "denom":
            continue
        mask = 0
        for v in c:
            mask |= 1 << v
        by_min[c[0]].append((mask, len(c), c, gain))
    return by_min


def _elementary_walk(g: GainGraph, j: int | None, max_n: int, budget: int, emit) -> None:
    if g.n > max_n:
        raise TooLarge(f"elementary subgraph enumeration capped at n={max_n}")
    n = g.n
    table = _cycle_table(g, budget)
    exact_denom = None
    if g.m and all(gain.turns is not None for _, _, gain in g.edges):
        exact_denom = math.lcm(*(gain.turns.denominator for _, _, gain in g.edges))
    cyc_re = {}
    for v in range(n):
        for entry in table[v]:
            gain = entry[3]
            if exact_denom is not None:
                cyc_re[entry[2]] = math.cos(2 * math.pi * (gain % exact_denom) / exact_denom)
            else:
                cyc_re[entry[2]] = gain.real
    up_adj = [[w for w in g.neighbors(v) if w > v] for v in range(n)]
    target = j

    def rec(v, covered, order, edges, cycles):
        while v < n and covered >> v & 1:
            v += 1
        if target is not None:
            if order > target:
                return
            free = n - v - bin(covered >> v).count("1") if v < n else 0
            if order + free < target:
                return
        if v == n:
            if target is None or order == target:
                emit(order, edges, cycles)
            return
        bit = 1 << v
        rec(v + 1, covered | bit, order, edges, cycles)
        for w in up_adj[v]:
            if not covered >> w & 1:
                rec(v + 1, covered | bit | (1 << w), order + 2, edges + ((v, w),), cycles)
        for mask, length, c, _ in table[v]:
            if not mask & covered:
                rec(v + 1, covered | mask, order + length, edges, cycles + (c,))

    rec(0, 0, 0, (), ())
    return cyc_re


def elementary_subgraphs(g: GainGraph, j: int, max_n: int = SACHS_MAX_N, budget: int = DEFAULT_BUDGET) -> list:
    """All elementary subgraphs (disjoint edges and cycles) on exactly ``j`` vertices."""
    if not 0 <= j <= g.n:
        raise ValueError(f"order {j} outside 0..{g.n}")
    out = []
    _elementary_walk(
        g, j, max_n, budget,
        lambda order, edges, cycles: out.append(
            ElementarySubgraph(edges, tuple(Cycle.__new__(Cycle, c) for c in cycles))
        ),
    )
    return out


def sachs_coefficients(g: GainGraph, max_n: int = SACHS_MAX_N, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """All characteristic polynomial coefficients ``a_0..a_n`` from elementary subgraphs.

    ``a_j`` is the sum over order-``j`` elementary subgraphs ``H`` of
    ``(-1)^p(H) 2^c(H) prod Re(gain(C))`` where ``p`` counts components and
    ``c`` counts cycles.
    """
    coeffs = np.zeros(g.n + 1)
    pending = []

    def emit(order, edges, cycles):
        pending.append((order, len(edges), cycles))

    cyc_re = _elementary_walk(g, None, max_n, budget, emit)
    for order, n_edges, cycles in pending:
        term = (-1.0) ** (n_edges + len(cycles)) * 2.0 ** len(cycles)
        for c in cycles:
            term *= cyc_re[c]
        coeffs[order] += term
    return coeffs


def sachs_coefficient(g: GainGraph, j: int, max_n: int = SACHS_MAX_N, budget: int = DEFAULT_BUDGET) -> float:
    """The ``j``-th characteristic polynomial coefficient, computed combinatorially."""
    if not 0 <= j <= g.n:
        raise ValueError(f"order {j} outside 0..{g.n}")
    collected = []
    cyc_re = _elementary_walk(
        g, j, max_n, budget, lambda order, edges, cycles: collected.append((len(edges), cycles))
    )
    total = 0.0
    for n_edges, cycles in collected:
        term = (-1.0) ** (n_edges + len(cycles)) * 2.0 ** len(cycles)
        for c in cycles:
            term *= cyc_re[c]
        total += term
    return total

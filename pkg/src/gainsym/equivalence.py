"""Automorphisms, switching isomorphism and sign-symmetry.

Vertices of the first graph are placed in BFS order, so every vertex after
a component root is mapped next to the image of its tree parent. That
fixes the switching value of each newly mapped vertex from a single tree
edge; every other edge back into the mapped set is then a cycle closure and
is checked immediately. A complete mapping is therefore an isomorphism
together with an explicit switching function.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from .core import ComplexUnit, GainGraph, converse, negate, relabel, spanning_forest, switch
from .cycles import CENSUS_TOL, CycleCensus, census_is_negation_symmetric, cycle_census
from .errors import BudgetExceeded, TooLarge

log = logging.getLogger(__name__)

__all__ = [
    "AUTOMORPHISM_MAX_N",
    "CENSUS_MAX_K",
    "SwitchingWitness",
    "SwitchingResult",
    "SignSymmetryResult",
    "isomorphisms",
    "automorphisms",
    "is_structurally_symmetric",
    "is_switching_isomorphic",
    "census_obstruction",
    "is_sign_symmetric",
]

AUTOMORPHISM_MAX_N = 16
CENSUS_MAX_K = 9
CENSUS_BUDGET = 10**6


@dataclass(frozen=True)
class SwitchingWitness:
    """``switch(converse?(relabel(g1, perm)), switching) == g2``."""

    perm: tuple
    conversed: bool
    switching: tuple | None = None

    def apply(self, g: GainGraph) -> GainGraph:
        h = relabel(g, self.perm)
        if self.conversed:
            h = converse(h)
        if self.switching is not None:
            h = switch(h, self.switching)
        return h


@dataclass(frozen=True)
class SwitchingResult:
    result: bool
    witness: SwitchingWitness | None = None
    reason: str = ""

    def __bool__(self):
        return self.result


@dataclass(frozen=True)
class SignSymmetryResult:
    result: bool
    witness: SwitchingWitness | None = None
    obstruction: CycleCensus | None = None
    reason: str = ""

    def __bool__(self):
        return self.result


def _signature(g: GainGraph, u: int) -> tuple:
    return g.degree(u), tuple(sorted(g.degree(w) for w in g.neighbors(u)))


def _search(g1: GainGraph, g2: GainGraph, gains: bool, conversed: bool = False, tol: float = 1e-9) -> Iterator:
    """Yield ``(perm, x)`` for every isomorphism of Gamma(g1) onto Gamma(g2).

    With ``gains`` set, only isomorphisms that extend to a switching
    isomorphism are produced and ``x`` is the switching function (complex
    numbers indexed by vertices of ``g2``); otherwise ``x`` is None.
    """
    n = g1.n
    if n != g2.n or g1.m != g2.m:
        return
    sig1 = [_signature(g1, u) for u in range(n)]
    sig2 = [_signature(g2, v) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return
    forest = spanning_forest(g1)
    order, parent = forest.order, forest.parent
    pos = {u: i for i, u in enumerate(order)}
    # neighbours of order[i] that are placed before it
    back = [[w for w in g1.neighbors(u) if pos[w] < pos[u]] for u in order]
    if gains:
        arc1 = {}
        for u, v, gain in g1.edges:
            val = gain.value.conjugate() if conversed else gain.value
            arc1[u, v] = val
            arc1[v, u] = val.conjugate()
        arc2 = {}
        for u, v, gain in g2.edges:
            arc2[u, v] = gain.value
            arc2[v, u] = gain.value.conjugate()
    nbr2 = [set(g2.neighbors(v)) for v in range(n)]
    perm = [-1] * n
    used = [False] * n
    x = [0j] * n

    def rec(i):
        if i == n:
            yield tuple(perm), (tuple(x) if gains else None)
            return
        u = order[i]
        p = parent[u]
        cands = sorted(g2.neighbors(perm[p])) if p >= 0 else range(n)
        mapped_back = [perm[w] for w in back[i]]
        for c in cands:
            if used[c] or sig2[c] != sig1[u]:
                continue
            # images of earlier neighbours must be exactly the earlier-mapped neighbours of c
            if any(t not in nbr2[c] for t in mapped_back):
                continue
            if sum(1 for t in nbr2[c] if used[t]) != len(mapped_back):
                continue
            if gains:
                if p >= 0:
                    # x[c] from the tree edge p -> u
                    xc = arc2[perm[p], c].conjugate() * x[perm[p]] * arc1[p, u]
                else:
                    xc = 1 + 0j
                ok = True
                for w in back[i]:
                    t = perm[w]
                    if abs(arc2[t, c] - x[t] * arc1[w, u] * xc.conjugate()) > tol:
                        ok = False
                        break
                if not ok:
                    continue
                x[c] = xc
            perm[u] = c
            used[c] = True
            yield from rec(i + 1)
            used[c] = False
            perm[u] = -1

    yield from rec(0)


def isomorphisms(g1: GainGraph, g2: GainGraph, max_n: int = AUTOMORPHISM_MAX_N) -> Iterator[tuple]:
    """Isomorphisms of the underlying graphs, as tuples ``perm[u] = image of u``."""
    if max(g1.n, g2.n) > max_n:
        raise TooLarge(f"isomorphism search capped at n={max_n}")
    for perm, _ in _search(g1, g2, gains=False):
        yield perm


def automorphisms(g: GainGraph, max_n: int = AUTOMORPHISM_MAX_N) -> list:
    """All automorphisms of the underlying graph (gains ignored), sorted.

    Examples
    --------
    >>> from gainsym.core import GainGraph
    >>> automorphisms(GainGraph(3, [(0, 1), (1, 2)]))
    [(0, 1, 2), (2, 1, 0)]
    """
    return sorted(isomorphisms(g, g, max_n))


def is_structurally_symmetric(g: GainGraph, max_n: int = AUTOMORPHISM_MAX_N) -> bool:
    identity = tuple(range(g.n))
    return any(p != identity for p in isomorphisms(g, g, max_n))


def is_switching_isomorphic(g1: GainGraph, g2: GainGraph, tol: float = 1e-9,
                            max_n: int = AUTOMORPHISM_MAX_N) -> SwitchingResult:
    """Decide whether ``g2`` arises from ``g1`` by relabeling, converse and switching.

    Every isomorphism of the underlying graphs is tried, first as is and
    then with all gains conjugated. The first match in search order is
    returned as a witness.
    """
    if g1.n != g2.n:
        return SwitchingResult(False, reason="different order")
    if max(g1.n, g2.n) > max_n:
        raise TooLarge(f"isomorphism search capped at n={max_n}")
    for conversed in (False, True):
        for perm, x in _search(g1, g2, gains=True, conversed=conversed, tol=tol):
            witness = SwitchingWitness(perm, conversed, tuple(ComplexUnit(v) for v in x))
            return SwitchingResult(True, witness)
    if next(_search(g1, g2, gains=False), None) is None:
        return SwitchingResult(False, reason="different underlying graph")
    return SwitchingResult(False, reason="no isomorphism matches the cycle gains")


def census_obstruction(g: GainGraph, max_k: int = CENSUS_MAX_K, budget: int = CENSUS_BUDGET,
                       tol: float = CENSUS_TOL) -> CycleCensus | None:
    """First odd-order cycle census whose ``+mu`` and ``-mu`` counts differ.

    Returns None when every odd ``k <= max_k`` is balanced, or when the
    enumeration budget runs out first.
    """
    for k in range(3, min(max_k, g.n) + 1, 2):
        try:
            census = cycle_census(g, k, budget=budget, tol=tol)
        except BudgetExceeded:
            log.debug("census at k=%d exceeded budget %d; skipped", k, budget)
            return None
        if not census_is_negation_symmetric(census, tol):
            return census
    return None


def is_sign_symmetric(g: GainGraph, census_k: int = CENSUS_MAX_K, use_census: bool = True,
                      census_budget: int = CENSUS_BUDGET, tol: float = 1e-9,
                      max_n: int = AUTOMORPHISM_MAX_N) -> SignSymmetryResult:
    """Decide whether ``g`` is switching isomorphic to its negation.

    An unbalanced odd-order cycle census settles the question negatively
    without any search; otherwise the full isomorphism search runs.
    """
    if use_census:
        census = census_obstruction(g, census_k, census_budget)
        if census is not None:
            return SignSymmetryResult(False, obstruction=census,
                                      reason=f"unbalanced cycle census at k={census.k}")
    res = is_switching_isomorphic(g, negate(g), tol=tol, max_n=max_n)
    return SignSymmetryResult(res.result, witness=res.witness, reason=res.reason)

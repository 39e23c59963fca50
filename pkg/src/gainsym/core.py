"""Complex unit gain graphs and their elementary transformations.

A gain graph stores one complex unit per undirected edge, in the canonical
orientation ``u < v``; the reverse gain is the conjugate and is never stored.
All objects are immutable after construction.
"""
from __future__ import annotations

import cmath
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateEdge,
    IndexOutOfRange,
    NonUnitGain,
    NotAPermutation,
    SelfLoop,
)

__all__ = [
    "UNIT_TOL",
    "ComplexUnit",
    "as_unit",
    "GainGraph",
    "GraphProperties",
    "validate",
    "gain_matrix",
    "switch",
    "negate",
    "converse",
    "relabel",
    "disjoint_union",
    "underlying_properties",
    "components",
    "spanning_forest",
    "tree_gauge",
    "random_gain_graph",
]

UNIT_TOL = 1e-12

# exp(2 pi i t) for the quarter turns, exactly
_EXACT = {
    Fraction(0): complex(1.0, 0.0),
    Fraction(1, 4): complex(0.0, 1.0),
    Fraction(1, 2): complex(-1.0, 0.0),
    Fraction(3, 4): complex(0.0, -1.0),
}


class ComplexUnit:
    """A point on the complex unit circle.

    Optionally carries an exact rational number of turns ``t`` (the unit is
    ``exp(2 pi i t)``); turns survive multiplication, conjugation and
    negation as long as every operand has them.

    Parameters
    ----------
    value : complex
        Any complex number within ``UNIT_TOL`` of the unit circle. It is
        renormalized to modulus one.
    turns : Fraction or str, optional
        Exact angle in turns; when given, ``value`` is ignored.
    """

    __slots__ = ("value", "turns")

    def __init__(self, value: complex = 1.0, turns=None):
        if turns is not None:
            turns = Fraction(turns) % 1
            value = _EXACT.get(turns)
            if value is None:
                value = cmath.exp(2j * math.pi * float(turns))
        else:
            value = complex(value)
            mod = abs(value)
            if not math.isfinite(mod) or abs(mod - 1.0) > UNIT_TOL:
                raise NonUnitGain(f"gain {value!r} has modulus {mod!r}")
            # leave values that are already unit to rounding alone, so that
            # parse/write round trips are idempotent
            if abs(mod - 1.0) > 4e-16:
                value = value / mod
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "turns", turns)

    def __setattr__(self, name, val):
        raise AttributeError("ComplexUnit is immutable")

    @classmethod
    def from_angle(cls, theta: float) -> "ComplexUnit":
        return cls(cmath.exp(1j * theta))

    @property
    def re(self) -> float:
        return self.value.real

    @property
    def im(self) -> float:
        return self.value.imag

    @property
    def angle(self) -> float:
        return cmath.phase(self.value)

    def conjugate(self) -> "ComplexUnit":
        if self.turns is not None:
            return ComplexUnit(turns=-self.turns)
        return ComplexUnit(self.value.conjugate())

    def __mul__(self, other):
        if isinstance(other, ComplexUnit):
            if self.turns is not None and other.turns is not None:
                return ComplexUnit(turns=self.turns + other.turns)
            return ComplexUnit(self.value * other.value)
        return NotImplemented

    def __neg__(self) -> "ComplexUnit":
        if self.turns is not None:
            return ComplexUnit(turns=self.turns + Fraction(1, 2))
        return ComplexUnit(-self.value)

    def __complex__(self) -> complex:
        return self.value

    def __eq__(self, other):
        if isinstance(other, ComplexUnit):
            return self.value == other.value
        if isinstance(other, (int, float, complex)):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def isclose(self, other, tol: float = 1e-9) -> bool:
        return abs(self.value - complex(other)) <= tol

    def __repr__(self):
        if self.turns is not None:
            return f"ComplexUnit(turns={self.turns})"
        return f"ComplexUnit({self.value!r})"


def as_unit(x) -> ComplexUnit:
    """Coerce a complex number (or ComplexUnit) into a ComplexUnit."""
    if isinstance(x, ComplexUnit):
        return x
    return ComplexUnit(x)


def _normalize_edges(n: int, edges: Iterable) -> tuple:
    seen = set()
    out = []
    for idx, edge in enumerate(edges):
        if len(edge) == 2:
            (u, v), gain = edge, 1.0
        else:
            u, v, gain = edge
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge {idx} ({u}, {v}) out of range for n={n}")
        if u == v:
            raise SelfLoop(f"edge {idx} is a loop at vertex {u}")
        gain = as_unit(gain)
        if u > v:
            u, v, gain = v, u, gain.conjugate()
        if (u, v) in seen:
            raise DuplicateEdge(f"edge {idx} ({u}, {v}) appears twice")
        seen.add((u, v))
        out.append((u, v, gain))
    out.sort(key=lambda e: (e[0], e[1]))
    return tuple(out)


class GainGraph:
    """Undirected simple graph on vertices ``0..n-1`` with unit edge gains.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable
        Triples ``(u, v, gain)`` meaning ``psi(uv) = gain``; pairs ``(u, v)``
        get gain 1. Edges given with ``u > v`` are stored reversed with the
        conjugate gain.

    Raises
    ------
    NonUnitGain, DuplicateEdge, SelfLoop, IndexOutOfRange
    """

    __slots__ = ("n", "edges", "_adj", "_gain")

    def __init__(self, n: int, edges: Iterable = ()):
        n = int(n)
        if n < 0:
            raise IndexOutOfRange("vertex count must be nonnegative")
        self.n = n
        self.edges = _normalize_edges(n, edges)
        adj = [[] for _ in range(n)]
        gain = {}
        for u, v, g in self.edges:
            adj[u].append(v)
            adj[v].append(u)
            gain[u, v] = g
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._gain = gain

    @classmethod
    def from_matrix(cls, a, tol: float = UNIT_TOL) -> "GainGraph":
        """Build from a Hermitian matrix with entries in the unit circle or zero."""
        a = np.asarray(a, dtype=complex)
        n = a.shape[0]
        if a.shape != (n, n):
            raise DimensionMismatch(f"expected a square matrix, got {a.shape}")
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if abs(a[u, v]) > tol:
                    edges.append((u, v, a[u, v]))
        return cls(n, edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> tuple:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._gain

    def gain(self, u: int, v: int) -> ComplexUnit:
        """Gain of the arc ``u -> v``; conjugated when ``u > v``."""
        if u < v:
            return self._gain[u, v]
        return self._gain[v, u].conjugate()

    def edge_index(self) -> dict:
        """Map ``(u, v)`` with ``u < v`` to the position of the edge."""
        return {(u, v): i for i, (u, v, _) in enumerate(self.edges)}

    def with_gains(self, gains: Sequence) -> "GainGraph":
        """Same underlying graph, new gains listed in edge order."""
        if len(gains) != self.m:
            raise DimensionMismatch(f"expected {self.m} gains, got {len(gains)}")
        return GainGraph(self.n, [(u, v, g) for (u, v, _), g in zip(self.edges, gains)])

    def __eq__(self, other):
        if not isinstance(other, GainGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"GainGraph(n={self.n}, m={self.m})"

    def isclose(self, other: "GainGraph", tol: float = 1e-9) -> bool:
        if self.n != other.n or self.m != other.m:
            return False
        return all(
            (a[0], a[1]) == (b[0], b[1]) and a[2].isclose(b[2], tol)
            for a, b in zip(self.edges, other.edges)
        )


def validate(g: GainGraph) -> None:
    """Check every invariant of ``g``; raise the matching error if one fails."""
    _normalize_edges(g.n, g.edges)
    for u, v, gain in g.edges:
        if u >= v:
            raise IndexOutOfRange(f"edge ({u}, {v}) not in canonical orientation")
        if abs(abs(gain.value) - 1.0) > UNIT_TOL:
            raise NonUnitGain(f"edge ({u}, {v}) gain {gain!r}")


def gain_matrix(g: GainGraph) -> np.ndarray:
    """The Hermitian gain matrix ``A`` with ``A[u, v] = psi(uv)``."""
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v, gain in g.edges:
        a[u, v] = gain.value
        a[v, u] = gain.value.conjugate()
    return a


def switch(g: GainGraph, x: Sequence) -> GainGraph:
    """Diagonal switching: ``psi'(uv) = x[u] psi(uv) conj(x[v])``."""
    if len(x) != g.n:
        raise DimensionMismatch(f"switching function has length {len(x)}, expected {g.n}")
    x = [as_unit(xi) for xi in x]
    return GainGraph(g.n, [(u, v, x[u] * gain * x[v].conjugate()) for u, v, gain in g.edges])


def negate(g: GainGraph) -> GainGraph:
    return GainGraph(g.n, [(u, v, -gain) for u, v, gain in g.edges])


def converse(g: GainGraph) -> GainGraph:
    return GainGraph(g.n, [(u, v, gain.conjugate()) for u, v, gain in g.edges])


def relabel(g: GainGraph, p: Sequence[int]) -> GainGraph:
    """Move vertex ``u`` to ``p[u]``, carrying gains along."""
    p = [int(i) for i in p]
    if len(p) != g.n or sorted(p) != list(range(g.n)):
        raise NotAPermutation(f"{p} is not a permutation of range({g.n})")
    return GainGraph(g.n, [(p[u], p[v], gain) for u, v, gain in g.edges])


def disjoint_union(g1: GainGraph, g2: GainGraph) -> GainGraph:
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift, gain) for u, v, gain in g2.edges]
    return GainGraph(g1.n + g2.n, edges)


def components(g: GainGraph, removed: int | None = None) -> list:
    """Connected components as sorted vertex lists, optionally with one vertex deleted."""
    seen = [False] * g.n
    if removed is not None:
        seen[removed] = True
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


class Forest(NamedTuple):
    parent: list   # parent[root] == -1
    order: list    # BFS order, components concatenated
    roots: list
    depth: list


def spanning_forest(g: GainGraph) -> Forest:
    """BFS spanning forest, one tree per component, rooted at its smallest vertex."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    order, roots = [], []
    for s in range(g.n):
        if depth[s] >= 0:
            continue
        roots.append(s)
        depth[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
    return Forest(parent, order, roots, depth)


def tree_gauge(g: GainGraph, forest: Forest | None = None) -> tuple:
    """Switching that sets every spanning-forest edge to gain 1.

    Returns ``(x, switched)`` with ``switched == switch(g, x)``; ``x`` is 1 at
    every root. The cotree gains of ``switched`` are then the gains of the
    fundamental cycles.
    """
    forest = spanning_forest(g) if forest is None else forest
    x = [ComplexUnit(1.0)] * g.n
    for u in forest.order:
        p = forest.parent[u]
        if p >= 0:
            # x[p] psi(pu) conj(x[u]) == 1
            x[u] = x[p] * g.gain(p, u)
    return x, switch(g, x)


@dataclass(frozen=True)
class GraphProperties:
    connected: bool
    bipartite: bool
    two_connected: bool
    m: int


def _is_bipartite(g: GainGraph) -> bool:
    depth = spanning_forest(g).depth
    return all((depth[u] - depth[v]) % 2 for u, v, _ in g.edges)


def underlying_properties(g: GainGraph) -> GraphProperties:
    """Connectivity, bipartiteness and 2-connectivity of the underlying graph."""
    connected = len(components(g)) <= 1
    two_connected = (
        connected
        and g.n >= 3
        and all(len(components(g, removed=v)) == 1 for v in range(g.n))
    )
    return GraphProperties(connected, _is_bipartite(g), two_connected, g.m)


def random_gain_graph(n: int, p: float = 0.5, rng=None, gains: str = "unit") -> GainGraph:
    """Erdos-Renyi ``G(n, p)`` with random gains.

    ``gains`` is ``"unit"`` (uniform angle), ``"signed"`` (random +-1) or
    ``"ones"``.
    """
    rng = np.random.default_rng(rng)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                if gains == "unit":
                    gain = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
                elif gains == "signed":
                    gain = float(rng.choice((-1.0, 1.0)))
                elif gains == "ones":
                    gain = 1.0
                else:
                    raise ValueError(f"unknown gain model {gains!r}")
                edges.append((u, v, gain))
    return GainGraph(n, edges)

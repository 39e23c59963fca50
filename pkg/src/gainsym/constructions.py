"""Doubling constructions with symmetric spectra, and the built-in fixtures.

Every double places a copy of ``A`` and a copy of ``-A`` on vertex blocks
``0..n-1`` and ``n..2n-1`` and differs only in how the copies are joined.
"""
from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np

from .core import ComplexUnit, GainGraph, as_unit, spanning_forest, tree_gauge
from .errors import DimensionMismatch, IndexOutOfRange, NonUnitEntry, NotHermitian

__all__ = [
    "DoubleKind",
    "hermitian_double",
    "identity_block_double",
    "odd_anchor_double",
    "sylvester_double",
    "build_double",
    "in_t4",
    "is_switching_equivalent_to_signed",
    "example2_fixture",
    "gamma_s",
    "fig3a",
    "fig3b",
    "all_imaginary",
    "FIXTURES",
    "fixture",
]


class DoubleKind(enum.Enum):
    HERMITIAN_BLOCK = "hermitian"
    IDENTITY_BLOCK = "identity"
    ODD_ANCHOR = "odd"
    SYLVESTER = "sylvester"


def _two_copies(g: GainGraph) -> list:
    n = g.n
    return list(g.edges) + [(u + n, v + n, -gain) for u, v, gain in g.edges]


def hermitian_double(g: GainGraph, b) -> GainGraph:
    """Gain graph with matrix ``[[A, B], [B*, -A]]`` for a Hermitian ``B``.

    ``B`` must have entries on the unit circle or zero so that the result
    is still a gain graph.
    """
    n = g.n
    b = np.asarray(b, dtype=complex)
    if b.shape != (n, n):
        raise DimensionMismatch(f"B has shape {b.shape}, expected {(n, n)}")
    if not np.allclose(b, b.conj().T, rtol=0, atol=1e-12):
        raise NotHermitian("B must equal its conjugate transpose")
    mod = np.abs(b)
    if np.any((mod > 1e-12) & (np.abs(mod - 1) > 1e-12)):
        raise NonUnitEntry("entries of B must be unit complex numbers or zero")
    edges = _two_copies(g)
    for u in range(n):
        for v in range(n):
            if mod[u, v] > 1e-12:
                edges.append((u, v + n, b[u, v]))
    return GainGraph(2 * n, edges)


def identity_block_double(g: GainGraph, z=1.0) -> GainGraph:
    """``[[A, zI], [conj(z) I, -A]]``: the copies joined by a perfect matching of gain ``z``."""
    n = g.n
    z = as_unit(z)
    return GainGraph(2 * n, _two_copies(g) + [(u, u + n, z) for u in range(n)])


def odd_anchor_double(g: GainGraph, anchor: int = 0) -> GainGraph:
    """``(2n-1)``-vertex double sharing one anchor vertex.

    Writing ``A = [[0, a], [a*, A']]`` with the anchor first, the result is
    ``[[0, a, -a], [a*, A', 0], [-a*, 0, -A']]``. Vertex 0 of the result is the
    anchor; the other vertices keep their relative order in both copies.
    """
    n = g.n
    if not 0 <= anchor < n:
        raise IndexOutOfRange(f"anchor {anchor} out of range")
    rest = [v for v in range(n) if v != anchor]
    idx = {v: i + 1 for i, v in enumerate(rest)}
    shift = n - 1
    edges = []
    for u, v, gain in g.edges:
        if u == anchor:
            edges.append((0, idx[v], gain))
            edges.append((0, idx[v] + shift, -gain))
        elif v == anchor:
            edges.append((idx[u], 0, gain))
            edges.append((idx[u] + shift, 0, -gain))
        else:
            edges.append((idx[u], idx[v], gain))
            edges.append((idx[u] + shift, idx[v] + shift, -gain))
    return GainGraph(2 * n - 1, edges)


def sylvester_double(g: GainGraph, z=None) -> GainGraph:
    """``[[A, A + zI], [A + conj(z) I, -A]]``.

    Parameters
    ----------
    z : complex unit, 0 or None
        Gain of the matching between the copies; ``0`` or ``None`` leaves the
        matching out.
    """
    n = g.n
    edges = _two_copies(g)
    for u, v, gain in g.edges:
        edges.append((u, v + n, gain))
        edges.append((v, u + n, gain.conjugate()))
    if z is None or (not isinstance(z, ComplexUnit) and z == 0):
        return GainGraph(2 * n, edges)
    z = as_unit(z)
    edges.extend((u, u + n, z) for u in range(n))
    return GainGraph(2 * n, edges)


def build_double(kind: DoubleKind | str, g: GainGraph, z=1.0, anchor: int = 0, b=None) -> GainGraph:
    kind = DoubleKind(kind)
    if kind is DoubleKind.HERMITIAN_BLOCK:
        return hermitian_double(g, np.eye(g.n) if b is None else b)
    if kind is DoubleKind.IDENTITY_BLOCK:
        return identity_block_double(g, z)
    if kind is DoubleKind.ODD_ANCHOR:
        return odd_anchor_double(g, anchor)
    return sylvester_double(g, z)


def in_t4(z, tol: float = 1e-12) -> bool:
    """Whether ``z`` is one of the fourth roots of unity."""
    z = complex(z)
    return any(abs(z - w) <= tol for w in (1, -1, 1j, -1j))


def is_switching_equivalent_to_signed(g: GainGraph, tol: float = 1e-9) -> bool:
    """Whether some switching makes every gain real (+-1).

    After switching every spanning-tree edge to gain 1 the cotree gains
    are the fundamental cycle gains; all of them must be real.
    """
    _, h = tree_gauge(g, spanning_forest(g))
    return all(abs(gain.im) <= tol for _, _, gain in h.edges)


def _turns(t) -> ComplexUnit:
    return ComplexUnit(turns=Fraction(t))


def example2_fixture() -> GainGraph:
    """The 5-vertex gain graph of the not-sign-symmetric Sylvester example.

    Its upper triangle holds ``1, 1, conj(w), conj(w)^2`` in row 0,
    ``conj(w)^2, conj(w)^2`` in row 1 and ``conj(w)^2`` at (2, 4), with
    ``w = exp(i pi / 3)``.
    """
    w_bar = _turns(Fraction(-1, 6))
    w2_bar = _turns(Fraction(-1, 3))
    one = _turns(0)
    return GainGraph(5, [
        (0, 1, one), (0, 2, one), (0, 3, w_bar), (0, 4, w2_bar),
        (1, 2, w2_bar), (1, 3, w2_bar),
        (2, 4, w2_bar),
    ])


def gamma_s(s: int) -> GainGraph:
    """Signed graph on ``6 + s`` vertices: a hexagon with two chords plus ``s`` twins.

    Hexagon vertices ``0..5`` (drawn counterclockwise from the right), chord
    0-3 with gain -1, chord 3-5 with gain +1, and vertices ``6..5+s`` each
    joined to 0 and 4.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    one, neg = _turns(0), _turns(Fraction(1, 2))
    edges = [(i, (i + 1) % 6, one) for i in range(6)]
    edges += [(0, 3, neg), (3, 5, one)]
    for t in range(6, 6 + s):
        edges += [(0, t, one), (4, t, one)]
    return GainGraph(6 + s, edges)


def fig3a(alpha=1.0, beta=1.0) -> GainGraph:
    """Bowtie with a pendant: triangles 0-1-2 and 2-3-4 sharing vertex 2, leaf 5 on 4.

    ``alpha`` sits on arc 0 -> 1 and ``beta`` on arc 4 -> 3; the other
    (tree) edges have gain 1.
    """
    return GainGraph(6, [
        (0, 2), (0, 1, alpha), (1, 2), (3, 2), (4, 3, beta), (2, 4), (4, 5),
    ])


def fig3b(alpha=1.0, beta=1.0, gamma=1.0) -> GainGraph:
    """Two triangles and a square: cycles 0-1-2 (alpha), 1-2-3 (beta), 2-3-5-4 (gamma).

    Vertex ``k`` here is vertex ``k + 2`` of the drawing. Tree edges 0-2,
    2-1, 2-4, 2-3, 5-4 carry gain 1.
    """
    return GainGraph(6, [
        (0, 2), (0, 1, alpha), (2, 1), (3, 1, beta), (2, 4), (2, 3), (5, 4), (5, 3, gamma),
    ])


def all_imaginary(g: GainGraph) -> GainGraph:
    """Same underlying graph with every gain set to ``i`` (so every cycle gain is a power of ``i``)."""
    i = _turns(Fraction(1, 4))
    return GainGraph(g.n, [(u, v, i) for u, v, _ in g.edges])


FIXTURES = ("example2", "gamma_s:<s>", "fig3a", "fig3b")


def fixture(name: str) -> GainGraph:
    """Look up a built-in fixture by name (see ``FIXTURES``)."""
    if name == "example2":
        return example2_fixture()
    if name == "fig3a":
        return fig3a()
    if name == "fig3b":
        return fig3b()
    if name.startswith("gamma_s:"):
        return gamma_s(int(name.split(":", 1)[1]))
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")

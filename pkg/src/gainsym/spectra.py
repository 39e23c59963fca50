"""Eigenvalues, characteristic polynomial and the spectral symmetry test."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import GainGraph, gain_matrix
from .errors import ConvergenceFailure, InternalConsistencyError, TooLarge

__all__ = [
    "CHARPOLY_MAX_N",
    "SYMMETRY_TOL",
    "SymmetryVerdict",
    "eigenvalues",
    "char_poly",
    "char_poly_from_eigenvalues",
    "pairing_residual",
    "is_spectrally_symmetric",
]

CHARPOLY_MAX_N = 64
SYMMETRY_TOL = 1e-9
# How far past its threshold a path must be before a disagreement is an error
# rather than a borderline call.
_GREY_ZONE = 1e3


def eigenvalues(g: GainGraph) -> np.ndarray:
    """Real eigenvalues of the gain matrix, sorted in descending order."""
    if g.n == 0:
        return np.zeros(0)
    try:
        vals = np.linalg.eigvalsh(gain_matrix(g))
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc
    return vals[::-1].copy()


def char_poly(g: GainGraph, max_n: int = CHARPOLY_MAX_N) -> np.ndarray:
    """Coefficients ``[1, a_1, ..., a_n]`` of ``det(lambda I - A)``.

    Uses the Faddeev-LeVerrier trace recurrence on the complex gain matrix,
    so it is independent of the eigensolver.

    Examples
    --------
    >>> from gainsym.core import GainGraph
    >>> char_poly(GainGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])).round(12).tolist()
    [1.0, 0.0, -4.0, 0.0, 0.0]
    """
    n = g.n
    if n > max_n:
        raise TooLarge(f"characteristic polynomial capped at n={max_n}")
    a = gain_matrix(g)
    coeffs = np.zeros(n + 1, dtype=complex)
    coeffs[0] = 1.0
    m = np.eye(n, dtype=complex)
    for k in range(1, n + 1):
        am = a @ m
        coeffs[k] = -np.trace(am) / k
        m = am + coeffs[k] * np.eye(n)
    scale = max(1.0, float(np.abs(coeffs).max()))
    if np.abs(coeffs.imag).max(initial=0.0) > 1e-9 * scale:
        raise InternalConsistencyError("characteristic polynomial has an imaginary residue")
    return coeffs.real + 0.0  # also clears negative zeros


def char_poly_from_eigenvalues(g: GainGraph) -> np.ndarray:
    """Same coefficients as :func:`char_poly`, expanded from the spectrum."""
    return np.real(np.poly(eigenvalues(g))) if g.n else np.ones(1)


def pairing_residual(values: np.ndarray) -> float:
    """``max_j |lambda_j + lambda_{n+1-j}|`` for a descending spectrum."""
    if len(values) == 0:
        return 0.0
    return float(np.abs(values + values[::-1]).max())


@dataclass(frozen=True)
class SymmetryVerdict:
    symmetric: bool
    residual: float            # max |a_j| over odd j (nan if skipped)
    pairing_residual: float    # max |lambda_j + lambda_{n+1-j}|

    def __bool__(self):
        return self.symmetric


def is_spectrally_symmetric(g: GainGraph, tol: float = SYMMETRY_TOL, max_n: int = CHARPOLY_MAX_N) -> SymmetryVerdict:
    """Decide whether the spectrum is invariant under negation.

    Two routes are taken: all odd characteristic polynomial coefficients
    vanish (relative to the largest coefficient), and the descending
    eigenvalues pair up as ``lambda_j = -lambda_{n+1-j}`` (relative to the
    spectral radius). Above ``max_n`` only the eigenvalue route runs.

    Raises
    ------
    InternalConsistencyError
        If one route accepts while the other rejects by a wide margin.
    """
    vals = eigenvalues(g)
    pair = pairing_residual(vals)
    pair_limit = tol * max(1.0, float(np.abs(vals).max(initial=0.0)))
    eig_ok = pair <= pair_limit
    if g.n > max_n:
        return SymmetryVerdict(eig_ok, float("nan"), pair)

    coeffs = char_poly(g, max_n)
    odd = np.abs(coeffs[1::2])
    resid = float(odd.max(initial=0.0))
    coef_limit = tol * max(1.0, float(np.abs(coeffs).max()))
    coef_ok = resid <= coef_limit
    if coef_ok != eig_ok:
        failing, limit = (resid, coef_limit) if eig_ok else (pair, pair_limit)
        if failing > _GREY_ZONE * limit:
            raise InternalConsistencyError(
                f"symmetry routes disagree: odd-coefficient residual {resid:.3g}, "
                f"eigenvalue pairing residual {pair:.3g}"
            )
    return SymmetryVerdict(eig_ok, resid, pair)

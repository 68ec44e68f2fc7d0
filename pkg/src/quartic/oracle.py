"""Real-space finite-difference reference for the same Hamiltonian.

Second-order central differences on a uniform grid over [-L, L] with
Dirichlet walls. This approximates the spectrum in a completely different
way from the ladder basis and serves as an independent check on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import tridiagonal_eigenvalues
from .errors import DomainError
from .operators import OscillatorParams
from .wkb import wkb_energy


@dataclass(frozen=True)
class GridSpec:
    """``points`` interior nodes on [-half_width, half_width]; spacing 2L/(M+1)."""

    half_width: float
    points: int

    def __post_init__(self):
        if not (math.isfinite(self.half_width) and self.half_width > 0):
            raise DomainError(f"half_width must be > 0, got {self.half_width}")
        if int(self.points) != self.points or self.points < 3:
            raise DomainError(f"need at least 3 grid points, got {self.points}")

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / (self.points + 1)

    def nodes(self) -> np.ndarray:
        return -self.half_width + self.spacing * np.arange(1, self.points + 1)

    def refined(self) -> "GridSpec":
        """Same box at half the spacing."""
        return GridSpec(self.half_width, 2 * self.points + 1)


def default_half_width(params: OscillatorParams, count: int) -> float:
    """Box half-width with V(L) at least three times the highest wanted level.

    For the pure quartic this is L = (12 E_max / lam)^(1/4), rounded up,
    with E_max taken from the WKB estimate.
    """
    n = count - 1
    if params.lam > 0:
        e_max = wkb_energy(n, params.lam)
        if params.k > 0:
            e_max += (n + 0.5) * math.sqrt(params.k)
        width = (12 * e_max / params.lam) ** 0.25
    else:
        e_max = (n + 0.5) * math.sqrt(params.k)
        width = math.sqrt(6 * e_max / params.k)
    while params.potential(width) < 3 * e_max:
        width *= 1.1
    return float(math.ceil(width))


def fd_spectrum(params: OscillatorParams, grid: GridSpec, count: int = 1) -> list[float]:
    """Lowest ``count`` eigenvalues of the discretized Hamiltonian (error O(h^2))."""
    if int(count) != count or count < 1:
        raise DomainError(f"count must be an integer >= 1, got {count}")
    if count > grid.points:
        raise DomainError(f"asked for {count} levels from {grid.points} grid points")
    h = grid.spacing
    diag = 1 / (h * h) + params.potential(grid.nodes())
    off = np.full(grid.points - 1, -0.5 / (h * h))
    return tridiagonal_eigenvalues(diag, off, count)


def richardson_pair(params: OscillatorParams, grid: GridSpec, count: int = 1) -> list[float]:
    """Combine spacings h and h/2 as (4 E_{h/2} - E_h) / 3, cancelling the h^2 error."""
    coarse = fd_spectrum(params, grid, count)
    fine = fd_spectrum(params, grid.refined(), count)
    return [(4 * f - c) / 3 for c, f in zip(coarse, fine)]

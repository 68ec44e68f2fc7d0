"""Ladder-operator matrix elements and the truncated Hamiltonian.

Units are mu = hbar = 1. The number basis |0>, |1>, ... belongs to a harmonic
oscillator of frequency ``omega``, which is a free parameter of the
representation rather than of the physics:

    x = (a + a^dag) / sqrt(2 omega),    p = i sqrt(omega / 2) (a^dag - a)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

HAMILTONIAN_BANDS = frozenset({0, 2, 4})


@dataclass(frozen=True)
class OscillatorParams:
    """Couplings of H = p^2/2 + (k/2) x^2 + (lam/4) x^4.

    ``lam`` must be non-negative; ``lam == 0`` is only bounded below when
    ``k > 0``. Negative ``k`` (a double well) is admitted.
    """

    k: float = 0.0
    lam: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.k) and math.isfinite(self.lam)):
            raise DomainError(f"couplings must be finite, got k={self.k}, lambda={self.lam}")
        if self.lam < 0:
            raise DomainError(f"quartic coupling must be >= 0, got {self.lam}")
        if self.lam == 0 and self.k <= 0:
            raise DomainError("lambda = 0 requires k > 0, otherwise H has no bound states")

    @property
    def is_pure_quartic(self) -> bool:
        return self.k == 0 and self.lam > 0

    def potential(self, x):
        """V(x) = k x^2 / 2 + lam x^4 / 4 (works on scalars and arrays)."""
        x2 = np.multiply(x, x)
        return 0.5 * self.k * x2 + 0.25 * self.lam * x2 * x2


@dataclass(frozen=True)
class BasisSpec:
    """Truncation to the kets |0> ... |n_basis - 1> at ladder frequency ``omega``."""

    n_basis: int
    omega: float

    def __post_init__(self):
        if int(self.n_basis) != self.n_basis or self.n_basis < 1:
            raise DomainError(f"n_basis must be an integer >= 1, got {self.n_basis}")
        if not (math.isfinite(self.omega) and self.omega > 0):
            raise DomainError(f"omega must be > 0, got {self.omega}")


@dataclass(frozen=True, eq=False)
class SymmetricMatrix:
    """Dense real symmetric matrix with declared nonzero diagonals.

    ``band_offsets`` holds non-negative offsets ``|i - j|`` that may be
    nonzero; ``None`` means no structure is claimed. Both symmetry and the
    band pattern are verified on construction.
    """

    entries: np.ndarray
    band_offsets: frozenset[int] | None = field(default=None)

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError(f"expected a square matrix, got shape {a.shape}")
        if not np.array_equal(a, a.T):
            raise DomainError("matrix is not exactly symmetric")
        if self.band_offsets is not None:
            offsets = frozenset(abs(int(o)) for o in self.band_offsets)
            object.__setattr__(self, "band_offsets", offsets)
            i, j = np.nonzero(a)
            stray = set(np.abs(i - j).tolist()) - offsets
            if stray:
                raise DomainError(f"nonzero entries at undeclared offsets {sorted(stray)}")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self.entries))

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries
        return self.entries.astype(dtype)


def hamiltonian_element(n: int, m: int, params: OscillatorParams, omega: float) -> float:
    """<n|H|m> in the number basis of frequency ``omega``.

    Only offsets 0, 2 and 4 couple; the result is symmetric in (n, m) by
    construction because everything is evaluated at the smaller index.
    For ``k == omega**2`` and ``lam == 0`` the kinetic and quadratic pieces
    cancel exactly off the diagonal and the diagonal is (n + 1/2) omega.
    """
    if n < 0 or m < 0:
        raise DomainError(f"basis indices must be >= 0, got ({n}, {m})")
    if not omega > 0:
        raise DomainError(f"omega must be > 0, got {omega}")
    lo, offset = min(n, m), abs(n - m)
    k, lam = params.k, params.lam
    w2 = omega * omega
    if offset == 0:
        # (p^2 + k x^2)/2 diagonal: (n + 1/2)(omega + k/omega)/2
        harmonic = (lo + 0.5) * (omega + k / omega) / 2
        return harmonic + lam * (6 * lo * lo + 6 * lo + 3) / (16 * w2)
    if offset == 2:
        s = math.sqrt((lo + 1) * (lo + 2))
        return s * ((k / omega - omega) / 4 + lam * (2 * lo + 3) / (8 * w2))
    if offset == 4:
        return lam * math.sqrt((lo + 1) * (lo + 2) * (lo + 3) * (lo + 4)) / (16 * w2)
    return 0.0


def build_hamiltonian(params: OscillatorParams, basis: BasisSpec) -> SymmetricMatrix:
    """Truncated Hamiltonian matrix; the upper triangle is computed and mirrored."""
    size, omega = basis.n_basis, basis.omega
    h = np.zeros((size, size))
    for i in range(size):
        for off in (0, 2, 4):
            j = i + off
            if j < size:
                h[i, j] = h[j, i] = hamiltonian_element(i, j, params, omega)
    return SymmetricMatrix(h, HAMILTONIAN_BANDS)


def parity_blocks(h: SymmetricMatrix) -> tuple[SymmetricMatrix, SymmetricMatrix]:
    """Split a matrix coupling only even offsets into even-n and odd-n blocks.

    Each block keeps the original index order, so offsets 2 and 4 become
    offsets 1 and 2 inside the block.
    """
    a = np.asarray(h)
    i, j = np.nonzero(a)
    if np.any((i - j) % 2):
        raise DomainError("matrix couples states of opposite parity; cannot split")
    even, odd = a[0::2, 0::2], a[1::2, 1::2]
    bands = frozenset({0, 1, 2})
    return SymmetricMatrix(even, bands), SymmetricMatrix(odd, bands)


# Ladder-operator representations, exact within the truncated space.

def _check_size(size, omega):
    BasisSpec(size, omega)


def position_matrix(size: int, omega: float) -> np.ndarray:
    """<m|x|n> = sqrt(1/(2 omega)) (sqrt(n) d_{m,n-1} + sqrt(n+1) d_{m,n+1})."""
    _check_size(size, omega)
    off = np.sqrt(np.arange(1, size))
    return (np.diag(off, 1) + np.diag(off, -1)) / math.sqrt(2 * omega)


def momentum_matrix(size: int, omega: float) -> np.ndarray:
    """<m|p|n> = -i sqrt(omega/2) (sqrt(n) d_{m,n-1} - sqrt(n+1) d_{m,n+1}); complex Hermitian."""
    _check_size(size, omega)
    off = np.sqrt(np.arange(1, size))
    return -1j * math.sqrt(omega / 2) * (np.diag(off, 1) - np.diag(off, -1))


def _even_band(size, diag, band2, band4=None):
    out = np.diag(diag)
    if size > 2:
        out += np.diag(band2, 2) + np.diag(band2, -2)
    if band4 is not None and size > 4:
        out += np.diag(band4, 4) + np.diag(band4, -4)
    return out


def position_squared(size: int, omega: float) -> np.ndarray:
    _check_size(size, omega)
    n = np.arange(size, dtype=float)
    lo = n[: max(size - 2, 0)]
    return _even_band(size, 2 * n + 1, np.sqrt((lo + 1) * (lo + 2))) / (2 * omega)


def momentum_squared(size: int, omega: float) -> np.ndarray:
    _check_size(size, omega)
    n = np.arange(size, dtype=float)
    lo = n[: max(size - 2, 0)]
    return -omega / 2 * _even_band(size, -(2 * n + 1), np.sqrt((lo + 1) * (lo + 2)))


def position_fourth(size: int, omega: float) -> np.ndarray:
    """Projection of x^4 onto the truncated space (not the fourth power of the truncated x)."""
    _check_size(size, omega)
    n = np.arange(size, dtype=float)
    lo2 = n[: max(size - 2, 0)]
    lo4 = n[: max(size - 4, 0)]
    return _even_band(
        size,
        6 * n * n + 6 * n + 3,
        2 * np.sqrt((lo2 + 1) * (lo2 + 2)) * (2 * lo2 + 3),
        np.sqrt((lo4 + 1) * (lo4 + 2) * (lo4 + 3) * (lo4 + 4)),
    ) / (4 * omega * omega)

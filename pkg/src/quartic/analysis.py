"""Spectra, lambda-scaling, ladder-frequency optimization and basis convergence."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .eigensolver import DEFAULT_TOL, solve_symmetric
from .errors import DomainError
from .operators import BasisSpec, OscillatorParams, build_hamiltonian, parity_blocks

CONVERGENCE_THRESHOLD = 1e-8

_INV_PHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class Spectrum:
    """Lowest Rayleigh-Ritz values of the truncated Hamiltonian.

    These are upper bounds on the exact levels, not the levels themselves.
    ``sweeps`` is the larger Jacobi sweep count of the two parity blocks.
    """

    levels: tuple[float, ...]
    params: OscillatorParams
    basis: BasisSpec
    solver_tol: float
    count_requested: int
    sweeps: int = 0


@dataclass(frozen=True)
class ConvergenceReport:
    omega: float
    sizes: tuple[int, ...]
    ground_energies: tuple[float, ...]
    deltas: tuple[float, ...]
    converged: bool
    threshold: float = CONVERGENCE_THRESHOLD


def compute_spectrum(
    params: OscillatorParams,
    basis: BasisSpec,
    count: int = 10,
    tol: float = DEFAULT_TOL,
) -> Spectrum:
    """Build H, diagonalize its even and odd blocks, merge, keep the lowest ``count``."""
    if int(count) != count or count < 1:
        raise DomainError(f"count must be an integer >= 1, got {count}")
    even, odd = parity_blocks(build_hamiltonian(params, basis))
    values = []
    sweeps = 0
    for block in (even, odd):
        if block.dim:
            dec = solve_symmetric(block, tol)
            values.extend(dec.values.tolist())
            sweeps = max(sweeps, dec.sweeps_used)
    levels = tuple(sorted(values)[:count])
    return Spectrum(levels, params, basis, tol, int(count), sweeps)


def scale_spectrum(base: Spectrum, lambda_target: float) -> Spectrum:
    """Map a pure-quartic lambda = 1 spectrum to coupling ``lambda_target``.

    Energies scale as lambda^(1/3). Omega is rescaled by the same factor,
    which makes the mapping an exact identity of the truncated matrices.
    """
    if base.params.k != 0 or base.params.lam != 1:
        raise DomainError("scaling needs a pure quartic base spectrum (k = 0, lambda = 1)")
    if not (math.isfinite(lambda_target) and lambda_target > 0):
        raise DomainError(f"target lambda must be > 0, got {lambda_target}")
    factor = lambda_target ** (1 / 3)
    return dataclasses.replace(
        base,
        levels=tuple(factor * e for e in base.levels),
        params=OscillatorParams(k=0.0, lam=lambda_target),
        basis=BasisSpec(base.basis.n_basis, factor * base.basis.omega),
    )


def ground_energy(params: OscillatorParams, n_basis: int, omega: float, tol: float = DEFAULT_TOL) -> float:
    return compute_spectrum(params, BasisSpec(n_basis, omega), 1, tol).levels[0]


def golden_section(f, lo: float, hi: float, tol: float):
    """Minimize a unimodal ``f`` on [lo, hi]; returns (x, f(x)) for the best point seen."""
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def optimize_omega(
    params: OscillatorParams,
    n_basis: int,
    lo: float = 0.5,
    hi: float = 6.0,
    tol: float = 1e-4,
) -> tuple[float, float]:
    """Ladder frequency minimizing the truncated ground-state energy.

    Golden-section search, so the objective is assumed unimodal on
    [lo, hi]; this is not checked. Returns ``(omega_star, e0)``.
    """
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol}")
    BasisSpec(n_basis, lo)
    return golden_section(lambda w: ground_energy(params, n_basis, w), lo, hi, tol)


def convergence_study(params: OscillatorParams, omega: float, sizes) -> ConvergenceReport:
    """Ground-state energy for a sequence of nested bases.

    By Cauchy interlacing the energies cannot increase with N (up to
    rounding); ``converged`` flags a final step below the threshold.
    """
    sizes = tuple(int(s) for s in sizes)
    if not sizes:
        raise DomainError("need at least one basis size")
    if sizes[0] < 1 or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise DomainError(f"sizes must be strictly increasing and >= 1, got {sizes}")
    energies = tuple(ground_energy(params, n, omega) for n in sizes)
    deltas = tuple(float(x) for x in np.abs(np.diff(energies)))
    converged = bool(deltas) and deltas[-1] < CONVERGENCE_THRESHOLD
    return ConvergenceReport(float(omega), sizes, energies, deltas, converged)

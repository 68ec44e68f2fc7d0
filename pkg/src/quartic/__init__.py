"""Spectra of the quartic oscillator H = p^2/2 + k x^2/2 + lambda x^4/4.

The Hamiltonian is represented in a harmonic-oscillator number basis with a
free ladder frequency omega, truncated to N kets and diagonalized by cyclic
Jacobi rotations. Semiclassical (WKB) energies and a finite-difference
real-space oracle are provided for comparison.
"""

from .errors import ConvergenceError, DomainError, QuarticError
from .operators import (
    BasisSpec,
    OscillatorParams,
    SymmetricMatrix,
    build_hamiltonian,
    hamiltonian_element,
    parity_blocks,
)
from .eigensolver import (
    EigenDecomposition,
    eigenvalues_sorted,
    solve_symmetric,
    tridiagonal_eigenvalues,
)
from .wkb import WkbConstants, WkbLevel, wkb_action, wkb_constants, wkb_energy, wkb_table
from .analysis import (
    ConvergenceReport,
    Spectrum,
    compute_spectrum,
    convergence_study,
    optimize_omega,
    scale_spectrum,
)
from .oracle import GridSpec, default_half_width, fd_spectrum, richardson_pair

__version__ = "0.1.0"

__all__ = [
    "BasisSpec",
    "ConvergenceError",
    "ConvergenceReport",
    "DomainError",
    "EigenDecomposition",
    "GridSpec",
    "OscillatorParams",
    "QuarticError",
    "Spectrum",
    "SymmetricMatrix",
    "WkbConstants",
    "WkbLevel",
    "build_hamiltonian",
    "compute_spectrum",
    "convergence_study",
    "default_half_width",
    "eigenvalues_sorted",
    "fd_spectrum",
    "hamiltonian_element",
    "optimize_omega",
    "parity_blocks",
    "richardson_pair",
    "scale_spectrum",
    "solve_symmetric",
    "tridiagonal_eigenvalues",
    "wkb_action",
    "wkb_constants",
    "wkb_energy",
    "wkb_table",
]

"""Semiclassical energies of the pure quartic oscillator V(x) = lam x^4 / 4.

Bohr-Sommerfeld quantization, sqrt(2) * closed-loop integral of
sqrt(E - V) dx = 2 pi (n + 1/2), has the closed-form solution

    E_n = C (n + 1/2)^(4/3) lam^(1/3),
    C = 3^(4/3) pi^2 / (2^(2/3) Gamma(1/4)^(8/3)).

:func:`wkb_action` evaluates the left-hand side by quadrature so the two
routes can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

QUADRATURE_NODES = 200


@dataclass(frozen=True)
class WkbLevel:
    n: int
    energy: float


@dataclass(frozen=True)
class WkbConstants:
    """``coefficient`` is C above; ``elliptic_k_minus_1`` is K(m = -1).

    The action at unit energy and coupling is (16/3) K(-1), so
    K(-1) = 3 pi / (8 C^(3/4)).
    """

    coefficient: float
    elliptic_k_minus_1: float


@lru_cache(maxsize=None)
def wkb_constants() -> WkbConstants:
    g = math.gamma(0.25)
    c = 3 ** (4 / 3) * math.pi**2 / (2 ** (2 / 3) * g ** (8 / 3))
    return WkbConstants(coefficient=c, elliptic_k_minus_1=3 * math.pi / (8 * c**0.75))


def _check_lambda(lam):
    if not (math.isfinite(lam) and lam > 0):
        raise DomainError(f"lambda must be > 0, got {lam}")


def wkb_energy(n: int, lam: float = 1.0) -> float:
    """WKB level ``n`` of p^2/2 + lam x^4/4."""
    if int(n) != n or n < 0:
        raise DomainError(f"quantum number must be an integer >= 0, got {n}")
    _check_lambda(lam)
    return wkb_constants().coefficient * (n + 0.5) ** (4 / 3) * lam ** (1 / 3)


@lru_cache(maxsize=None)
def _theta_rule():
    # Gauss-Legendre on [-pi/2, pi/2]; integrand cos^2 t sqrt(1 + sin^2 t) is smooth there.
    t, w = np.polynomial.legendre.leggauss(QUADRATURE_NODES)
    theta = 0.5 * math.pi * t
    s2 = np.sin(theta) ** 2
    return float(np.dot(0.5 * math.pi * w, np.cos(theta) ** 2 * np.sqrt(1 + s2)))


def wkb_action(e: float, lam: float = 1.0) -> float:
    """Closed-orbit action sqrt(2) * loop integral of sqrt(E - lam x^4/4) dx.

    With turning point x_t = (4E/lam)^(1/4) and x = x_t sin(theta), the
    half-orbit integral becomes sqrt(E) x_t times the smooth integral of
    cos^2(theta) sqrt(1 + sin^2(theta)) over [-pi/2, pi/2].
    """
    if not (math.isfinite(e) and e > 0):
        raise DomainError(f"energy must be > 0, got {e}")
    _check_lambda(lam)
    x_t = (4 * e / lam) ** 0.25
    return 2 * math.sqrt(2) * math.sqrt(e) * x_t * _theta_rule()


def wkb_table(count: int, lam: float = 1.0) -> list[WkbLevel]:
    if int(count) != count or count < 1:
        raise DomainError(f"count must be an integer >= 1, got {count}")
    return [WkbLevel(n, wkb_energy(n, lam)) for n in range(count)]

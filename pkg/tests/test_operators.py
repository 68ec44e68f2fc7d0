import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartic import (
    BasisSpec,
    DomainError,
    OscillatorParams,
    SymmetricMatrix,
    build_hamiltonian,
    eigenvalues_sorted,
    hamiltonian_element,
    parity_blocks,
)
from quartic.operators import (
    momentum_matrix,
    momentum_squared,
    position_fourth,
    position_matrix,
    position_squared,
)

from _reference import REFERENCE_OMEGA, REFERENCE_TABLE, printed_element

PURE = OscillatorParams(k=0.0, lam=1.0)


@pytest.mark.parametrize(
    "n, m, expected",
    [(0, 0, 0.5801878), (0, 2, -0.6500072), (0, 4, 0.0656263)],
)
def test_printed_elements_frozen(n, m, expected):
    # frozen from a 40-digit evaluation of the printed formulas
    value = hamiltonian_element(n, m, PURE, REFERENCE_OMEGA)
    assert value == pytest.approx(expected, abs=5e-8)
    assert value == pytest.approx(float(printed_element(n, m, REFERENCE_OMEGA)), rel=1e-15)


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.16, 3.7])
def test_reduces_to_printed_formulas(omega):
    for n in range(21):
        for m in range(n, n + 5):
            got = hamiltonian_element(n, m, PURE, omega)
            want = float(printed_element(n, m, omega))
            assert got == pytest.approx(want, rel=1e-14, abs=1e-15), (n, m)


def test_offsets_outside_band_vanish():
    assert hamiltonian_element(3, 8, OscillatorParams(k=-2.0, lam=5.0), 0.3) == 0.0
    for off in (1, 3, 5, 6, 7):
        assert hamiltonian_element(4, 4 + off, PURE, 2.16) == 0.0


@given(
    n=st.integers(0, 60),
    m=st.integers(0, 60),
    k=st.floats(-5, 5),
    lam=st.floats(0.01, 100),
    omega=st.floats(0.05, 20),
)
def test_element_symmetry_and_band(n, m, k, lam, omega):
    params = OscillatorParams(k=k, lam=lam)
    a = hamiltonian_element(n, m, params, omega)
    assert a == hamiltonian_element(m, n, params, omega)
    if abs(n - m) not in (0, 2, 4):
        assert a == 0.0


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.16])
@pytest.mark.parametrize("size", [1, 5, 20])
def test_harmonic_identity_is_exact(omega, size):
    h = build_hamiltonian(OscillatorParams(k=omega * omega, lam=0.0), BasisSpec(size, omega))
    np.testing.assert_array_equal(h.entries, np.diag([(n + 0.5) * omega for n in range(size)]))


def test_harmonic_diagonal_example():
    h = build_hamiltonian(OscillatorParams(k=1.0, lam=0.0), BasisSpec(5, 1.0))
    np.testing.assert_array_equal(h.entries, np.diag([0.5, 1.5, 2.5, 3.5, 4.5]))


def test_single_ket_matrix():
    h = build_hamiltonian(PURE, BasisSpec(1, REFERENCE_OMEGA))
    assert h.dim == 1
    assert h.entries[0, 0] == pytest.approx(0.5801878, abs=5e-8)


def test_matrix_matches_elements_and_is_mirrored():
    params = OscillatorParams(k=0.7, lam=2.5)
    h = build_hamiltonian(params, BasisSpec(17, 1.3))
    assert h.band_offsets == frozenset({0, 2, 4})
    assert np.array_equal(h.entries, h.entries.T)
    for i in range(17):
        for j in range(17):
            assert h.entries[i, j] == hamiltonian_element(i, j, params, 1.3)


@pytest.mark.parametrize("lam", [0.125, 8.0, 1000.0])
def test_omega_scaling_of_matrix(lam):
    c = lam ** (1 / 3)
    scaled = build_hamiltonian(OscillatorParams(k=0.0, lam=lam), BasisSpec(30, c * REFERENCE_OMEGA))
    base = build_hamiltonian(PURE, BasisSpec(30, REFERENCE_OMEGA))
    # off-diagonal terms cancel, so compare at the scale of the matrix
    ref = c * base.entries
    scale = np.max(np.abs(ref))
    assert np.max(np.abs(scaled.entries - ref)) <= 8 * np.finfo(float).eps * scale


@pytest.mark.parametrize("omega", [0.7, 2.16])
def test_ladder_closed_forms_agree_with_operator_products(omega):
    size, big = 12, 20
    x = position_matrix(big, omega)
    p = momentum_matrix(big, omega)
    s = slice(0, size)
    np.testing.assert_allclose(position_squared(big, omega)[s, s], (x @ x)[s, s], atol=1e-13)
    np.testing.assert_allclose(momentum_squared(big, omega)[s, s], (p @ p).real[s, s], atol=1e-13)
    assert np.allclose((p @ p).imag, 0)
    x2 = position_squared(big, omega)
    np.testing.assert_allclose(position_fourth(big, omega)[s, s], (x2 @ x2)[s, s], atol=1e-12)
    # [x, p] = i away from the truncation edge
    comm = x @ p - p @ x
    np.testing.assert_allclose(comm[s, s], 1j * np.eye(size), atol=1e-13)


@pytest.mark.parametrize("omega", [0.4, 1.0, 2.16])
def test_harmonic_identity_from_operators(omega):
    size = 15
    h0 = momentum_squared(size, omega) / 2 + omega**2 * position_squared(size, omega) / 2
    np.testing.assert_allclose(h0, np.diag((np.arange(size) + 0.5) * omega), atol=1e-12)


@pytest.mark.parametrize("k, lam, omega", [(0.0, 1.0, 2.16), (1.3, 0.2, 0.9), (-2.0, 3.0, 1.7), (4.0, 0.0, 1.0)])
def test_general_elements_equal_operator_sum(k, lam, omega):
    size = 14
    expected = (
        momentum_squared(size, omega) / 2
        + k / 2 * position_squared(size, omega)
        + lam / 4 * position_fourth(size, omega)
    )
    h = build_hamiltonian(OscillatorParams(k=k, lam=lam), BasisSpec(size, omega))
    np.testing.assert_allclose(h.entries, expected, rtol=1e-13, atol=1e-13)


def test_parity_blocks_of_reference_matrix():
    h = build_hamiltonian(PURE, BasisSpec(10, REFERENCE_OMEGA))
    even, odd = parity_blocks(h)
    assert (even.dim, odd.dim) == (5, 5)
    assert even.band_offsets == odd.band_offsets == frozenset({0, 1, 2})
    np.testing.assert_array_equal(even.entries, h.entries[0::2, 0::2])
    merged = sorted(eigenvalues_sorted(even) + eigenvalues_sorted(odd))
    np.testing.assert_allclose(merged, eigenvalues_sorted(h), atol=1e-10)
    np.testing.assert_allclose(merged, REFERENCE_TABLE, atol=1e-4)
    np.testing.assert_allclose(eigenvalues_sorted(even), REFERENCE_TABLE[0::2], atol=1e-4)


def test_parity_blocks_small_cases():
    even, odd = parity_blocks(SymmetricMatrix(np.array([[3.0]])))
    assert even.entries.tolist() == [[3.0]]
    assert odd.dim == 0

    h = build_hamiltonian(OscillatorParams(k=1.0, lam=0.0), BasisSpec(6, 1.0))
    even, odd = parity_blocks(h)
    np.testing.assert_array_equal(even.entries, np.diag([0.5, 2.5, 4.5]))
    np.testing.assert_array_equal(odd.entries, np.diag([1.5, 3.5, 5.5]))


def test_parity_blocks_rejects_odd_coupling():
    a = np.array([[1.0, 0.5, 0.0], [0.5, 2.0, 0.0], [0.0, 0.0, 3.0]])
    with pytest.raises(DomainError):
        parity_blocks(SymmetricMatrix(a))


@pytest.mark.parametrize(
    "call",
    [
        lambda: hamiltonian_element(-1, 0, PURE, 1.0),
        lambda: hamiltonian_element(0, -3, PURE, 1.0),
        lambda: hamiltonian_element(0, 0, PURE, 0.0),
        lambda: hamiltonian_element(0, 0, PURE, -2.0),
        lambda: BasisSpec(0, 1.0),
        lambda: BasisSpec(3, 0.0),
        lambda: BasisSpec(2.5, 1.0),
        lambda: OscillatorParams(k=1.0, lam=-0.1),
        lambda: OscillatorParams(k=0.0, lam=0.0),
        lambda: OscillatorParams(k=-1.0, lam=0.0),
        lambda: OscillatorParams(k=math.nan, lam=1.0),
    ],
)
def test_domain_errors(call):
    with pytest.raises(DomainError):
        call()


def test_negative_k_is_admitted():
    assert OscillatorParams(k=-3.0, lam=1.0).k == -3.0


def test_symmetric_matrix_validation():
    with pytest.raises(DomainError):
        SymmetricMatrix(np.array([[1.0, 2.0], [2.0 + 1e-15, 1.0]]))
    with pytest.raises(DomainError):
        SymmetricMatrix(np.ones((2, 3)))
    with pytest.raises(DomainError):
        SymmetricMatrix(np.ones((3, 3)), frozenset({0}))
    m = SymmetricMatrix(np.eye(3), frozenset({0, -2}))
    assert m.band_offsets == frozenset({0, 2})
    with pytest.raises(ValueError):
        m.entries[0, 0] = 5.0


@settings(max_examples=25)
@given(omega=st.floats(0.2, 6), size=st.integers(1, 30), lam=st.floats(0.1, 10))
def test_potential_energy_positive_definite(omega, size, lam):
    # <H> >= 0 for V >= 0, so every truncated eigenvalue is positive
    h = build_hamiltonian(OscillatorParams(k=0.0, lam=lam), BasisSpec(size, omega))
    assert np.all(np.linalg.eigvalsh(h.entries) > 0)

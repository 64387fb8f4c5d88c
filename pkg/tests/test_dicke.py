import numpy as np
import pytest

from isingsym import (
    InvalidArgumentError,
    StateVector,
    basis_state,
    dicke_basis,
    dicke_state,
    evolve_xdiag,
    is_symmetric,
    is_symmetric_by_transpositions,
    random_state,
    symmetric_decomposition,
)


def test_w3_amplitudes():
    w3 = dicke_state(3, 0.5)
    expect = np.zeros(8)
    expect[[1, 2, 4]] = 1 / np.sqrt(3)
    np.testing.assert_allclose(w3.amplitudes, expect)


def test_four_qubit_m0_normalized():
    # six two-excitation strings, amplitude 1/sqrt(6) each (a flat 1/2
    # prefactor would not normalize)
    st = dicke_state(4, 0)
    nz = st.amplitudes[np.abs(st.amplitudes) > 0]
    assert len(nz) == 6
    np.testing.assert_allclose(nz, 1 / np.sqrt(6))


def test_two_qubit_triplet():
    st = dicke_state(2, 0)
    np.testing.assert_allclose(st.amplitudes, [0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0])


def test_dicke_m_validation():
    with pytest.raises(InvalidArgumentError):
        dicke_state(3, 1.0)  # wrong parity
    with pytest.raises(InvalidArgumentError):
        dicke_state(3, 2.5)  # out of range
    with pytest.raises(InvalidArgumentError):
        dicke_state(4, 0.3)


def test_dicke_normalization_all_n():
    for n in range(1, 13):
        for k in range(n + 1):
            st = dicke_state(n, n / 2 - k)
            assert abs(np.sum(np.abs(st.amplitudes) ** 2) - 1.0) < 1e-14


def test_basis_orthonormal():
    for n in (2, 5, 8):
        b = dicke_basis(n).matrix()
        gram = b.conj().T @ b
        np.testing.assert_allclose(gram, np.eye(n + 1), atol=1e-13)


def test_projector_identity():
    for n in range(2, 9):
        b = dicke_basis(n).matrix()
        p = b @ b.conj().T
        np.testing.assert_allclose(p @ p, p, atol=1e-12)
        np.testing.assert_allclose(p, p.conj().T, atol=1e-12)


def test_decomposition_basis_element():
    dec = symmetric_decomposition(dicke_state(4, 1))
    np.testing.assert_allclose(dec.coefficients, [0, 1, 0, 0, 0], atol=1e-14)
    assert dec.symmetric_weight == pytest.approx(1.0)
    assert dec.leakage < 1e-13


def test_decomposition_single_string():
    dec = symmetric_decomposition(basis_state(4, "0011"))
    assert dec.coefficients[2] == pytest.approx(1 / np.sqrt(6))
    assert dec.symmetric_weight == pytest.approx(1 / 6)
    assert dec.leakage == pytest.approx(np.sqrt(5 / 6))


def test_decomposition_weight_leakage_consistent():
    rng = np.random.default_rng(0)
    for _ in range(50):
        dec = symmetric_decomposition(random_state(5, rng))
        assert 0.0 <= dec.symmetric_weight <= 1.0 + 1e-12
        assert abs(dec.leakage**2 + dec.symmetric_weight - 1.0) < 1e-10


def test_is_symmetric_examples():
    assert is_symmetric(dicke_state(5, 1.5), 1e-10)
    assert not is_symmetric(basis_state(4, "0011"), 1e-10)


def test_w_type_span_retains_symmetry():
    rng = np.random.default_rng(42)
    for _ in range(10):
        a, b = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        v = a * dicke_state(4, 1).amplitudes + b * dicke_state(4, -1).amplitudes
        v /= np.linalg.norm(v)
        theta = rng.uniform(0, 2 * np.pi)
        evolved = evolve_xdiag(StateVector(4, v), theta)
        assert is_symmetric(evolved, 1e-10)
        assert is_symmetric_by_transpositions(evolved, 1e-10)


def test_symmetry_tests_agree_on_random_states():
    rng = np.random.default_rng(7)
    for n in range(2, 7):
        for _ in range(1000):
            psi = random_state(n, rng)
            assert is_symmetric(psi, 1e-10) == is_symmetric_by_transpositions(
                psi, 1e-10
            )


def test_symmetry_tests_agree_on_symmetric_states():
    rng = np.random.default_rng(8)
    for n in range(2, 7):
        b = dicke_basis(n).matrix()
        for _ in range(20):
            c = rng.standard_normal(n + 1) + 1j * rng.standard_normal(n + 1)
            v = b @ (c / np.linalg.norm(c))
            psi = StateVector(n, v)
            assert is_symmetric(psi, 1e-10)
            assert is_symmetric_by_transpositions(psi, 1e-10)


def test_is_symmetric_tol_validation():
    with pytest.raises(InvalidArgumentError):
        is_symmetric(basis_state(2, "00"), 0.0)

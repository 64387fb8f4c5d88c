"""Symmetric-subspace (Dicke) basis and symmetry diagnostics."""

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InvalidArgumentError
from .qstate import StateVector, apply_transposition, inner_product

SYMMETRY_TOL = 1e-10


def _two_m(n_qubits: int, m) -> int:
    two_m = int(round(2 * m))
    if abs(2 * m - two_m) > 1e-12:
        raise InvalidArgumentError(f"m must be a half-integer, got {m}")
    if (n_qubits - two_m) % 2 != 0 or abs(two_m) > n_qubits:
        raise InvalidArgumentError(
            f"m={m} invalid for N={n_qubits}: need N/2 - m integer in 0..N"
        )
    return two_m


def m_label(n_qubits: int, m) -> str:
    two_m = _two_m(n_qubits, m)
    if two_m % 2 == 0:
        return f"m={two_m // 2}"
    return f"m={two_m}/2"


def dicke_state(n_qubits: int, m) -> StateVector:
    """|N/2, m>: equal superposition of all strings with N/2 - m ones."""
    two_m = _two_m(n_qubits, m)
    k = (n_qubits - two_m) // 2
    idx = np.arange(1 << n_qubits)
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[np.bitwise_count(idx) == k] = 1.0 / np.sqrt(comb(n_qubits, k))
    return StateVector(n_qubits, amps)


@dataclass(frozen=True)
class DickeBasis:
    """The N+1 states |N/2, m>, m descending from N/2 to -N/2."""

    n_qubits: int
    states: tuple

    @property
    def ms(self):
        n = self.n_qubits
        return [n / 2 - k for k in range(n + 1)]

    @property
    def labels(self):
        return [m_label(self.n_qubits, m) for m in self.ms]

    def matrix(self) -> np.ndarray:
        """dim x (N+1) matrix with the Dicke states as columns."""
        return np.column_stack([s.amplitudes for s in self.states])


@lru_cache(maxsize=32)
def dicke_basis(n_qubits: int) -> DickeBasis:
    n = n_qubits
    states = tuple(dicke_state(n, n / 2 - k) for k in range(n + 1))
    return DickeBasis(n, states)


@dataclass(frozen=True)
class SymmetricDecomposition:
    """Dicke coefficients c_m = <N/2,m|psi>, symmetric weight, and leakage."""

    coefficients: np.ndarray
    symmetric_weight: float
    leakage: float


def symmetric_decomposition(psi: StateVector) -> SymmetricDecomposition:
    basis = dicke_basis(psi.n_qubits)
    b = basis.matrix()
    coeffs = b.conj().T @ psi.amplitudes
    weight = float(np.sum(np.abs(coeffs) ** 2))
    # leakage from the residual, not sqrt(1 - weight): the latter loses
    # half the digits to cancellation when the state is nearly symmetric
    residual = psi.amplitudes - b @ coeffs
    leakage = float(np.linalg.norm(residual))
    return SymmetricDecomposition(coeffs, weight, leakage)


def is_symmetric(psi: StateVector, tol: float = SYMMETRY_TOL) -> bool:
    """True iff the component outside the symmetric subspace has norm <= tol."""
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    return symmetric_decomposition(psi).leakage <= tol


def is_symmetric_by_transpositions(
    psi: StateVector, tol: float = SYMMETRY_TOL
) -> bool:
    """Independent oracle: invariance (up to global phase) under every swap.

    Does not presuppose the Dicke construction; |<psi|swap psi>| = 1 within
    tol for every pair.
    """
    n = psi.n_qubits
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            ov = inner_product(psi, apply_transposition(psi, a, b))
            if abs(abs(ov) - 1.0) > tol:
                return False
    return True

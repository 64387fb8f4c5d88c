"""State vectors, basis conventions, and elementary operations.

Index convention: qubit alpha in {1..N} occupies bit position N - alpha of
the integer basis index, so qubit 1 is the most significant bit.  Bit value
0 is |0> (spin up), 1 is |1> (spin down).  For N=3, |001> has index 1 and
|100> has index 4.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import InvalidArgumentError

MAX_QUBITS = 14
NORM_TOL = 1e-8


@dataclass(frozen=True)
class StateVector:
    """Normalized amplitude vector over the 2^N computational basis."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not (1 <= self.n_qubits <= MAX_QUBITS):
            raise InvalidArgumentError(
                f"n_qubits must be in 1..{MAX_QUBITS}, got {self.n_qubits}"
            )
        amps = np.ascontiguousarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n_qubits,):
            raise InvalidArgumentError(
                f"expected {1 << self.n_qubits} amplitudes, got shape {amps.shape}"
            )
        nrm = np.linalg.norm(amps)
        if abs(nrm - 1.0) > NORM_TOL:
            raise InvalidArgumentError(f"state not normalized: |psi| = {nrm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return 1 << self.n_qubits

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def bit_mask(n_qubits: int, site: int) -> int:
    """Index-bit mask for qubit `site` (1-based, MSB first)."""
    if not (1 <= site <= n_qubits):
        raise InvalidArgumentError(f"site {site} out of range 1..{n_qubits}")
    return 1 << (n_qubits - site)


def basis_state(n_qubits: int, bits: str) -> StateVector:
    """Computational basis state from a bit string, qubit 1 first."""
    if len(bits) != n_qubits:
        raise InvalidArgumentError(
            f"bit string length {len(bits)} != n_qubits {n_qubits}"
        )
    if any(c not in "01" for c in bits):
        raise InvalidArgumentError(f"bit string must be over {{0,1}}: {bits!r}")
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[int(bits, 2)] = 1.0
    return StateVector(n_qubits, amps)


def random_state(n_qubits: int, rng: np.random.Generator) -> StateVector:
    """Haar-ish random normalized state (Gaussian amplitudes)."""
    dim = 1 << n_qubits
    amps = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    amps /= np.linalg.norm(amps)
    return StateVector(n_qubits, amps)


def inner_product(bra: StateVector, ket: StateVector) -> complex:
    """<bra|ket>, conjugate-linear in the first argument."""
    if bra.n_qubits != ket.n_qubits:
        raise InvalidArgumentError("inner_product: qubit counts differ")
    return complex(np.vdot(bra.amplitudes, ket.amplitudes))


def apply_transposition(psi: StateVector, a: int, b: int) -> StateVector:
    """Exchange qubits a and b (1-based)."""
    n = psi.n_qubits
    ma, mb = bit_mask(n, a), bit_mask(n, b)
    idx = np.arange(psi.dim)
    differ = ((idx & ma) != 0) != ((idx & mb) != 0)
    swapped = np.where(differ, idx ^ (ma | mb), idx)
    return StateVector(n, psi.amplitudes[swapped])


def permute_qubits(psi: StateVector, perm) -> StateVector:
    """Relabel qubits: input qubit alpha moves to site perm[alpha-1].

    `perm` is a permutation of 1..N.  Mostly a testing aid (transpositions
    generate it), kept here because cyclic shifts are needed to check the
    ring Hamiltonian's translation invariance.
    """
    n = psi.n_qubits
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidArgumentError(f"not a permutation of 1..{n}: {perm!r}")
    idx = np.arange(psi.dim)
    dest = np.zeros(psi.dim, dtype=np.int64)
    for alpha, target in enumerate(perm, start=1):
        bit = (idx >> (n - alpha)) & 1
        dest |= bit << (n - target)
    out = np.empty(psi.dim, dtype=np.complex128)
    out[dest] = psi.amplitudes
    return StateVector(n, out)


def _fwht_normalized(amps: np.ndarray) -> np.ndarray:
    a = np.array(amps, dtype=np.complex128, copy=True)
    kernels.fwht(a)
    a *= 1.0 / np.sqrt(a.size)
    return a


def x_basis_transform(psi: StateVector) -> StateVector:
    """Per-qubit rotation between the z basis and the sigma_x eigenbasis.

    Normalized Walsh-Hadamard transform; self-inverse, O(N 2^N).
    """
    return StateVector(psi.n_qubits, _fwht_normalized(psi.amplitudes))

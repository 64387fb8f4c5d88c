"""Pauli-string operators, Hamiltonian builders, and commutator norms.

All Hamiltonians are dimensionless: hbar = 1 and the chain coupling is
scaled out, so evolution is exp(-i theta A) with theta the dimensionless
time.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import InvalidArgumentError, ResourceCapError
from .qstate import StateVector

PAULI_LETTERS = "IXYZ"
DENSE_CAP_QUBITS = 10
COMMUTATOR_CAP_QUBITS = 12


@dataclass(frozen=True)
class PauliString:
    """coefficient * (letter_1 x ... x letter_N), letter alpha on qubit alpha."""

    coefficient: complex
    letters: str

    def __post_init__(self):
        if any(c not in PAULI_LETTERS for c in self.letters):
            raise InvalidArgumentError(f"bad Pauli letters {self.letters!r}")


@dataclass(frozen=True)
class OperatorSpec:
    n_qubits: int
    terms: tuple

    def __post_init__(self):
        for t in self.terms:
            if len(t.letters) != self.n_qubits:
                raise InvalidArgumentError(
                    f"term {t.letters!r} does not act on {self.n_qubits} qubits"
                )
        object.__setattr__(self, "terms", tuple(self.terms))


@dataclass(frozen=True)
class IsingX:
    """Periodic nearest-neighbor XX chain."""


@dataclass(frozen=True)
class HeisenbergXYZ:
    """Periodic nearest-neighbor chain with per-axis couplings."""

    cx: float
    cy: float
    cz: float


ChainModel = Union[IsingX, HeisenbergXYZ]


def _merged(n_qubits: int, raw_terms) -> OperatorSpec:
    acc: dict = {}
    for coeff, letters in raw_terms:
        acc[letters] = acc.get(letters, 0.0) + coeff
    terms = tuple(
        PauliString(c, s) for s, c in acc.items() if abs(c) > 0.0
    )
    return OperatorSpec(n_qubits, terms)


def _pair_string(n: int, alpha: int, beta: int, letter: str) -> str:
    chars = ["I"] * n
    chars[alpha - 1] = letter
    chars[beta - 1] = letter
    return "".join(chars)


def ising_hamiltonian(n_qubits: int) -> OperatorSpec:
    """Dimensionless ring Hamiltonian A = (1/4) sum_a X_a X_{a+1}, periodic.

    The literal sum over a = 1..N is kept, so N=2 carries both X1X2 terms
    and the merged coefficient is 1/2.
    """
    if n_qubits < 2:
        raise InvalidArgumentError("ising_hamiltonian needs N >= 2")
    raw = []
    for alpha in range(1, n_qubits + 1):
        beta = alpha % n_qubits + 1
        raw.append((0.25, _pair_string(n_qubits, alpha, beta, "X")))
    return _merged(n_qubits, raw)


def heisenberg_xyz_hamiltonian(
    n_qubits: int, cx: float, cy: float, cz: float
) -> OperatorSpec:
    """Periodic XYZ chain: (1/4) sum_a (cx XX + cy YY + cz ZZ)."""
    if n_qubits < 2:
        raise InvalidArgumentError("heisenberg_xyz_hamiltonian needs N >= 2")
    if not all(np.isfinite([cx, cy, cz])):
        raise InvalidArgumentError("couplings must be finite")
    raw = []
    for alpha in range(1, n_qubits + 1):
        beta = alpha % n_qubits + 1
        for c, letter in ((cx, "X"), (cy, "Y"), (cz, "Z")):
            raw.append((0.25 * c, _pair_string(n_qubits, alpha, beta, letter)))
    return _merged(n_qubits, raw)


def chain_hamiltonian(model: ChainModel, n_qubits: int) -> OperatorSpec:
    if isinstance(model, IsingX):
        return ising_hamiltonian(n_qubits)
    if isinstance(model, HeisenbergXYZ):
        return heisenberg_xyz_hamiltonian(n_qubits, model.cx, model.cy, model.cz)
    raise InvalidArgumentError(f"unknown chain model {model!r}")


def collective_operator(n_qubits: int, axis: str) -> OperatorSpec:
    """J_axis = (1/2) sum_a sigma_{a,axis}."""
    if axis not in ("x", "y", "z"):
        raise InvalidArgumentError(f"axis must be x, y or z, got {axis!r}")
    letter = axis.upper()
    raw = []
    for alpha in range(1, n_qubits + 1):
        chars = ["I"] * n_qubits
        chars[alpha - 1] = letter
        raw.append((0.5, "".join(chars)))
    return _merged(n_qubits, raw)


def j_squared(n_qubits: int) -> OperatorSpec:
    """J^2 = Jx^2 + Jy^2 + Jz^2 expanded into Pauli strings.

    Equals (3N/4) I + (1/2) sum_{a<b} sum_axis sigma_a sigma_b.
    """
    raw = [(0.75 * n_qubits, "I" * n_qubits)]
    for alpha in range(1, n_qubits + 1):
        for beta in range(alpha + 1, n_qubits + 1):
            for letter in "XYZ":
                raw.append((0.5, _pair_string(n_qubits, alpha, beta, letter)))
    return _merged(n_qubits, raw)


@lru_cache(maxsize=64)
def _string_action(n_qubits: int, letters: str):
    """(flip mask, per-index phase factor) for a unit-coefficient string."""
    dim = 1 << n_qubits
    xmask = ymask = zmask = 0
    for alpha, letter in enumerate(letters, start=1):
        m = 1 << (n_qubits - alpha)
        if letter == "X":
            xmask |= m
        elif letter == "Y":
            ymask |= m
        elif letter == "Z":
            zmask |= m
    idx = np.arange(dim)
    parity = np.bitwise_count(idx & (ymask | zmask)) & 1
    sign = 1.0 - 2.0 * parity
    factor = (1j) ** bin(ymask).count("1") * sign
    return xmask | ymask, factor


def apply_array(op: OperatorSpec, arr: np.ndarray) -> np.ndarray:
    """Exact action of `op` on raw amplitudes; axis 0 is the basis index."""
    out = np.zeros_like(arr, dtype=np.complex128)
    idx = np.arange(arr.shape[0])
    for term in op.terms:
        flip, factor = _string_action(op.n_qubits, term.letters)
        vals = term.coefficient * factor * arr.T
        out[idx ^ flip] += vals.T
    return out


def apply(op: OperatorSpec, psi: StateVector) -> np.ndarray:
    """op |psi> as an unnormalized amplitude array."""
    if op.n_qubits != psi.n_qubits:
        raise InvalidArgumentError("apply: qubit counts differ")
    return apply_array(op, np.asarray(psi.amplitudes))


def dense_matrix(op: OperatorSpec) -> np.ndarray:
    """Dense 2^N x 2^N materialization (capped at N=10)."""
    if op.n_qubits > DENSE_CAP_QUBITS:
        raise ResourceCapError(
            f"dense materialization capped at N={DENSE_CAP_QUBITS}"
        )
    return apply_array(op, np.eye(1 << op.n_qubits, dtype=np.complex128))


def commutator_norm(a: OperatorSpec, b: OperatorSpec) -> float:
    """Frobenius norm of AB - BA, computed column-blockwise."""
    if a.n_qubits != b.n_qubits:
        raise InvalidArgumentError("commutator_norm: qubit counts differ")
    n = a.n_qubits
    if n > COMMUTATOR_CAP_QUBITS:
        raise ResourceCapError(
            f"commutator_norm capped at N={COMMUTATOR_CAP_QUBITS}"
        )
    dim = 1 << n
    block = min(dim, 512)
    total = 0.0
    for start in range(0, dim, block):
        width = min(block, dim - start)
        cols = np.zeros((dim, width), dtype=np.complex128)
        cols[start : start + width, :] = np.eye(width)
        ab = apply_array(a, apply_array(b, cols))
        ba = apply_array(b, apply_array(a, cols))
        total += float(np.sum(np.abs(ab - ba) ** 2))
    return float(np.sqrt(total))

"""Exact spin-chain simulation and exchange-symmetry diagnostics.

State vectors live in the full 2^N computational basis.  Hamiltonians are
sums of Pauli strings; the periodic transverse-coupling (XX) chain is the
main model.  The package provides three independent time-evolution engines,
Dicke-basis symmetry diagnostics, invariant-subspace computation, and a
spin-squeezing measure, plus a CLI front end.
"""

from .errors import (
    DegenerateDirectionError,
    InvalidArgumentError,
    ResourceCapError,
)
from .qstate import (
    StateVector,
    basis_state,
    inner_product,
    apply_transposition,
    permute_qubits,
    random_state,
    x_basis_transform,
)
from .operators import (
    PauliString,
    OperatorSpec,
    IsingX,
    HeisenbergXYZ,
    ising_hamiltonian,
    heisenberg_xyz_hamiltonian,
    chain_hamiltonian,
    collective_operator,
    j_squared,
    apply,
    dense_matrix,
    commutator_norm,
)
from .dicke import (
    DickeBasis,
    SymmetricDecomposition,
    dicke_basis,
    dicke_state,
    symmetric_decomposition,
    is_symmetric,
    is_symmetric_by_transpositions,
)
from .evolve import (
    evolve_xdiag,
    evolve_dense_oracle,
    evolve_closed_form_n4,
    table1_coefficients,
    table2_coefficients,
    phase_align,
)
from .analysis import (
    SymmetryReport,
    SubspaceBasis,
    default_theta_grid,
    symmetry_retention_report,
    invariant_symmetric_subspace,
    heisenberg_symmetry_scan,
    spin_squeezing_xi2,
)

__version__ = "0.1.0"

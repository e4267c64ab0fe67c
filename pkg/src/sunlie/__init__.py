"""su(N) toolkit: generalized Gell-Mann basis, closed-form structure constants,
adjoint representation, and generalized spin-precession dynamics."""

from .adjoint import AdjointReport, adjoint_matrix, adjoint_stack, verify_adjoint_commutators
from .dynamics import (
    HamiltonianCoefficients,
    IntegrationSpec,
    Trajectory,
    bloch_from_states,
    bloch_tdse_deviation,
    decompose_hamiltonian,
    hamiltonian_from_coefficients,
    integrate_bloch,
    integrate_tdse,
    precession_matrix,
    precession_rhs,
    reconstruct_density,
    state_to_bloch,
)
from .generators import AlgebraConfig, all_generators, decompose_diagonal, make_generator
from .indexing import (
    ANTISYMMETRIC,
    DIAGONAL,
    SYMMETRIC,
    GeneratorLabel,
    all_labels,
    antisymmetric,
    diagonal,
    index_to_label,
    label_to_index,
    symmetric,
)
from .structure_constants import (
    D_KIND,
    F_KIND,
    ConstantTable,
    ConstantTriple,
    build_d_table,
    build_f_table,
)
from .trace_oracle import (
    OracleConsistencyError,
    OracleCostError,
    d_trace,
    f_trace,
    full_oracle_table,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointReport",
    "AlgebraConfig",
    "ANTISYMMETRIC",
    "ConstantTable",
    "ConstantTriple",
    "D_KIND",
    "DIAGONAL",
    "F_KIND",
    "GeneratorLabel",
    "HamiltonianCoefficients",
    "IntegrationSpec",
    "OracleConsistencyError",
    "OracleCostError",
    "SYMMETRIC",
    "Trajectory",
    "adjoint_matrix",
    "adjoint_stack",
    "all_generators",
    "all_labels",
    "antisymmetric",
    "bloch_from_states",
    "bloch_tdse_deviation",
    "build_d_table",
    "build_f_table",
    "d_trace",
    "decompose_diagonal",
    "decompose_hamiltonian",
    "diagonal",
    "f_trace",
    "full_oracle_table",
    "hamiltonian_from_coefficients",
    "index_to_label",
    "integrate_bloch",
    "integrate_tdse",
    "label_to_index",
    "make_generator",
    "precession_matrix",
    "precession_rhs",
    "reconstruct_density",
    "state_to_bloch",
    "symmetric",
    "verify_adjoint_commutators",
]

"""entroflow: entropy growth in isolated quantum systems.

Evolves multipartite density operators unitarily, collapses them to product
states the way a part-wise entropy measurement does, and machine-checks the
information-theoretic inequalities that force the measured entropy sequence
to grow.
"""

from ._backend import BACKEND
from .composite import (
    JointDistribution,
    Partition,
    collapse_to_product,
    composite_index,
    joint_diagonal_distribution,
    partial_trace,
    split_index,
    tensor_product_state,
)
from .dynamics import (
    CycleConfig,
    Hamiltonian,
    SecondLawReport,
    Trajectory,
    TrajectoryStep,
    evolve,
    max_entropy_bound,
    random_hamiltonian,
    run_cycle_experiment,
    verify_second_law,
)
from .lemmas import (
    DoublyStochasticMatrix,
    ProbabilityVector,
    contract_distribution,
    joint_subadditivity_gap,
    mixing_inequality_gap,
    unistochastic_from_unitary,
    xlnx_gap,
)
from .linalg import (
    EigenDecomposition,
    frobenius_distance,
    hermitian_eig,
    kron,
)
from .measures import (
    EntropyReport,
    ObservableBasis,
    basis_information,
    correlation_information,
    entropy_of_partition,
    information,
)
from .rng import RngSeed
from .states import (
    DensityOperator,
    Unitary,
    haar_unitary,
    maximally_mixed,
    pure_state_density,
    random_density,
    validate_density,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    "CycleConfig",
    "DensityOperator",
    "DoublyStochasticMatrix",
    "EigenDecomposition",
    "EntropyReport",
    "Hamiltonian",
    "JointDistribution",
    "ObservableBasis",
    "Partition",
    "ProbabilityVector",
    "RngSeed",
    "SecondLawReport",
    "Trajectory",
    "TrajectoryStep",
    "Unitary",
    "basis_information",
    "collapse_to_product",
    "composite_index",
    "contract_distribution",
    "correlation_information",
    "entropy_of_partition",
    "evolve",
    "frobenius_distance",
    "haar_unitary",
    "hermitian_eig",
    "information",
    "joint_diagonal_distribution",
    "joint_subadditivity_gap",
    "kron",
    "max_entropy_bound",
    "maximally_mixed",
    "mixing_inequality_gap",
    "partial_trace",
    "pure_state_density",
    "random_density",
    "random_hamiltonian",
    "run_cycle_experiment",
    "split_index",
    "tensor_product_state",
    "unistochastic_from_unitary",
    "validate_density",
    "verify_second_law",
    "xlnx_gap",
]

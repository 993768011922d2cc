"""The entangle-collapse protocol and its second-law verifier.

One cycle: record the information and part-wise entropies of the current
state, collapse it to the product of its marginals (the nonselective
measurement), then evolve unitarily under a random Hamiltonian so the parts
entangle again. Between measurements the information is conserved exactly;
at each collapse the correlation information is surrendered, which is what
drives the recorded entropy sequence upward.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .composite import Partition, collapse_to_product
from .errors import DimensionMismatch, NotHermitian, TooFewEvents
from .linalg import (
    HERMITICITY_RTOL,
    as_complex_matrix,
    dagger,
    frobenius_norm,
    hermitian_eig,
    hermitize,
)
from .measures import entropy_of_partition, information
from .rng import RngSeed, complex_gaussian
from .states import DensityOperator, pure_state_density, random_density, validate_density

INITIAL_STATE_KINDS = ("pure-random", "mixed-random", "explicit")

#: Sub-stream indices hung off the experiment seed.
_INIT_STREAM = 0
_HAMILTONIAN_STREAM = 1


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Hermitian generator of the time evolution (hbar = 1)."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        m = as_complex_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise NotHermitian(f"Hamiltonian must be square, got shape {m.shape}")
        dev = frobenius_norm(m - dagger(m))
        if dev > 1e-10 * frobenius_norm(m):
            raise NotHermitian(f"relative deviation from Hermiticity {dev:.3e}")
        m = np.ascontiguousarray(hermitize(m))
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "dim", m.shape[0])

    def __repr__(self):
        return f"Hamiltonian(dim={self.dim})"


def gaussian_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """GUE-style random Hermitian matrix: Hermitian part of a Ginibre draw."""
    g = complex_gaussian((dim, dim), rng)
    return hermitize(g)


def _embed(op: np.ndarray, part: int, dims) -> np.ndarray:
    """Lift a single-part operator to the composite space."""
    left = 1
    for d in dims[:part]:
        left *= d
    right = 1
    for d in dims[part + 1:]:
        right *= d
    return np.kron(np.kron(np.eye(left, dtype=np.complex128), op),
                   np.eye(right, dtype=np.complex128))


def random_hamiltonian(p: Partition, local_strength: float, coupling_strength: float,
                       seed: RngSeed) -> Hamiltonian:
    """Random interaction: independent local terms plus a global coupling.

    H = local_strength * sum_i (I x ... x h_i x ... x I)
      + coupling_strength * G
    with each h_i and G drawn GUE-style from the seeded stream.
    """
    if local_strength < 0.0 or coupling_strength < 0.0:
        raise ValueError("strengths must be nonnegative")
    rng = seed.generator()
    h = np.zeros((p.total, p.total), dtype=np.complex128)
    for i, d in enumerate(p.dims):
        local = gaussian_hermitian(d, rng)
        h += local_strength * _embed(local, i, p.dims)
    h += coupling_strength * gaussian_hermitian(p.total, rng)
    return Hamiltonian(dim=p.total, matrix=h)


def evolve(rho: DensityOperator, h: Hamiltonian, t: float) -> DensityOperator:
    """U rho U† with U = exp(-iHt) built from the exact eigendecomposition.

    Conserves the information functional to round-off; no Trotter error.
    """
    if rho.dim != h.dim:
        raise DimensionMismatch(f"state dim {rho.dim} != Hamiltonian dim {h.dim}")
    eig = hermitian_eig(h.matrix)
    v = eig.eigenvectors
    u = (v * np.exp(-1j * eig.eigenvalues * t)) @ dagger(v)
    return validate_density(u @ rho.matrix @ dagger(u))


@dataclass(frozen=True, eq=False)
class CycleConfig:
    """Everything a cycle experiment needs, RNG identity included."""

    partition: Partition
    cycles: int
    seed: RngSeed
    dt: float = 1.0
    local_strength: float = 1.0
    coupling_strength: float = 1.0
    k_B: float = 1.0
    initial_state: str = "pure-random"
    initial_rank: int | None = None
    initial_matrix: np.ndarray | None = None
    fixed_hamiltonian: bool = False

    def __post_init__(self):
        if self.cycles < 1:
            raise ValueError(f"cycles must be >= 1, got {self.cycles}")
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.local_strength < 0.0 or self.coupling_strength < 0.0:
            raise ValueError("strengths must be nonnegative")
        if self.k_B <= 0.0:
            raise ValueError(f"k_B must be positive, got {self.k_B}")
        if self.initial_state not in INITIAL_STATE_KINDS:
            raise ValueError(f"initial_state must be one of {INITIAL_STATE_KINDS}")
        if self.initial_state == "explicit" and self.initial_matrix is None:
            raise ValueError("explicit initial state needs initial_matrix")
        if self.initial_matrix is not None:
            shape = np.asarray(self.initial_matrix).shape
            want = (self.partition.total, self.partition.total)
            if shape != want:
                raise ValueError(f"initial_matrix shape {shape} does not match {want}")
        if self.initial_rank is not None and not 1 <= self.initial_rank <= self.partition.total:
            raise ValueError(f"initial_rank must be in [1, {self.partition.total}]")


@dataclass(frozen=True, eq=False)
class TrajectoryStep:
    """One measurement event of the protocol.

    ``information_after_collapse`` is computed from the collapsed state's own
    spectrum, a different numerical path than -entropy_total/k_B; comparing
    the two audits the bookkeeping identity I = -S/k_B at each collapse.
    """

    cycle: int
    time: float
    information_nats: float
    entropy_total: float
    entropy_parts: tuple[float, ...]
    correlation_surrendered: float
    information_after_collapse: float


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Time-ordered record of the measured entropies of one experiment."""

    partition: Partition
    k_B: float
    steps: tuple[TrajectoryStep, ...] = field(default_factory=tuple)

    @property
    def entropies(self) -> np.ndarray:
        return np.array([s.entropy_total for s in self.steps])


def _initial_state(cfg: CycleConfig) -> DensityOperator:
    seed = cfg.seed.child(_INIT_STREAM)
    dim = cfg.partition.total
    if cfg.initial_state == "pure-random":
        return pure_state_density(complex_gaussian(dim, seed.generator()))
    if cfg.initial_state == "mixed-random":
        rank = cfg.initial_rank if cfg.initial_rank is not None else dim
        return random_density(dim, rank, seed)
    return validate_density(cfg.initial_matrix)


def run_cycle_experiment(cfg: CycleConfig) -> Trajectory:
    """Run measure -> collapse -> evolve for the configured number of cycles.

    Every cycle ends with a fresh seeded Hamiltonian (or the cycle-0 one
    when fixed_hamiltonian is set). The recorded entropy sequence is the
    quantity the second law constrains; nothing here forces monotonicity.
    """
    p = cfg.partition
    rho = _initial_state(cfg)
    steps = []
    for k in range(cfg.cycles):
        info_pre = information(rho)
        report = entropy_of_partition(rho, p, cfg.k_B)
        rho = collapse_to_product(rho, p)
        steps.append(TrajectoryStep(
            cycle=k,
            time=k * cfg.dt,
            information_nats=info_pre,
            entropy_total=report.total,
            entropy_parts=report.per_part,
            correlation_surrendered=info_pre - report.information_sum,
            information_after_collapse=information(rho),
        ))
        if k < cfg.cycles - 1:
            h_index = 0 if cfg.fixed_hamiltonian else k
            h_seed = cfg.seed.child(_HAMILTONIAN_STREAM).child(h_index)
            h = random_hamiltonian(p, cfg.local_strength, cfg.coupling_strength, h_seed)
            rho = evolve(rho, h, cfg.dt)
    return Trajectory(partition=p, k_B=cfg.k_B, steps=tuple(steps))


@dataclass(frozen=True)
class SecondLawReport:
    """Outcome of checking a measured entropy sequence for monotonicity."""

    passed: bool
    worst_increment: float
    worst_index: int

    @property
    def worst_violation(self) -> float:
        return max(0.0, -self.worst_increment)


def verify_second_law(traj: Trajectory, tol: float = 1e-8) -> SecondLawReport:
    """Pass iff S[k+1] >= S[k] - tol for every consecutive measurement pair.

    Reports the most negative increment and the index of the later event.
    """
    s = traj.entropies
    if s.size < 2:
        raise TooFewEvents(f"need at least 2 measurement events, got {s.size}")
    increments = np.diff(s)
    worst = int(np.argmin(increments))
    worst_increment = float(increments[worst])
    return SecondLawReport(
        passed=bool(worst_increment >= -tol),
        worst_increment=worst_increment,
        worst_index=worst + 1,
    )


def max_entropy_bound(p: Partition, k_B: float = 1.0) -> float:
    """k_B * sum_i ln d_i, the ceiling of the measured entropy."""
    return k_B * float(sum(np.log(d) for d in p.dims))

"""Partitioned Hilbert spaces: indexing, partial trace, and collapse.

Index convention, shared by every module: big-endian mixed radix, part 0
most significant. The composite basis state |n_0 n_1 ... n_{k-1}> sits at
flat index sum_i n_i * prod_{j>i} d_j, which is exactly the layout produced
by chaining Kronecker products left to right.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionOverflow,
    EmptyKeepSet,
    IndexOutOfRange,
    NotBipartite,
    NotPositive,
    PartitionMismatch,
)
from .linalg import DIM_CAP, kron
from .states import DensityOperator, validate_density


@dataclass(frozen=True)
class Partition:
    """Ordered part dimensions of a composite system."""

    dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        if len(dims) == 0:
            raise ValueError("partition needs at least one part")
        if any(d < 2 for d in dims):
            raise ValueError(f"every part dimension must be >= 2, got {dims}")
        total = 1
        for d in dims:
            total *= d
        if total > DIM_CAP:
            raise DimensionOverflow(f"total dimension {total} exceeds cap {DIM_CAP}")
        object.__setattr__(self, "dims", dims)

    @property
    def total(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    @property
    def parts(self) -> int:
        return len(self.dims)


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Bipartite outcome probabilities W[n_a, n_b], summing to 1."""

    dims: tuple[int, int]
    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.shape != tuple(self.dims):
            raise ValueError(f"weights shape {w.shape} does not match dims {self.dims}")
        if np.any(w < 0.0):
            raise ValueError("weights must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"weights sum to {total!r}, not 1")
        w = np.ascontiguousarray(w)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "dims", (int(self.dims[0]), int(self.dims[1])))


def composite_index(p: Partition, part_indices) -> int:
    """Flatten per-part basis indices into the composite index."""
    idx = tuple(int(n) for n in part_indices)
    if len(idx) != p.parts:
        raise PartitionMismatch(f"expected {p.parts} part indices, got {len(idx)}")
    n = 0
    for i, d in zip(idx, p.dims):
        if not 0 <= i < d:
            raise IndexOutOfRange(f"part index {i} outside [0, {d})")
        n = n * d + i
    return n


def split_index(p: Partition, n: int) -> tuple[int, ...]:
    """Inverse of composite_index."""
    if not 0 <= n < p.total:
        raise IndexOutOfRange(f"composite index {n} outside [0, {p.total})")
    out = []
    for d in reversed(p.dims):
        n, r = divmod(n, d)
        out.append(r)
    return tuple(reversed(out))


def tensor_product_state(factors, dim_cap: int = DIM_CAP) -> DensityOperator:
    """Kronecker product of density operators (the factorized joint state)."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    if len(factors) == 1:
        return factors[0]
    out = factors[0].matrix
    for f in factors[1:]:
        out = kron(out, f.matrix, dim_cap=dim_cap)
    return validate_density(out)


def _check_partition(rho: DensityOperator, p: Partition):
    if rho.dim != p.total:
        raise PartitionMismatch(f"operator dim {rho.dim} != partition total {p.total}")


def partial_trace(rho: DensityOperator, p: Partition, keep) -> DensityOperator:
    """Reduced density operator on the kept parts (in original part order)."""
    _check_partition(rho, p)
    kept = sorted(set(int(i) for i in keep))
    if not kept:
        raise EmptyKeepSet("keep set must name at least one part")
    if kept[0] < 0 or kept[-1] >= p.parts:
        raise PartitionMismatch(f"keep set {kept} is not a subset of 0..{p.parts - 1}")
    if len(kept) == p.parts:
        return rho

    k = p.parts
    letters = string.ascii_letters
    row = list(letters[:k])
    col = list(letters[k:2 * k])
    for i in range(k):
        if i not in kept:
            col[i] = row[i]
    out_sub = "".join(row[i] for i in kept) + "".join(col[i] for i in kept)
    sub = "".join(row) + "".join(col) + "->" + out_sub

    arr = rho.matrix.reshape(p.dims + p.dims)
    reduced = np.einsum(sub, arr)
    dk = 1
    for i in kept:
        dk *= p.dims[i]
    return validate_density(reduced.reshape(dk, dk))


def collapse_to_product(rho: DensityOperator, p: Partition) -> DensityOperator:
    """Nonselective measurement of every part: keep the marginals, drop the
    inter-part correlations, i.e. return the product of the reductions."""
    _check_partition(rho, p)
    marginals = [partial_trace(rho, p, {i}) for i in range(p.parts)]
    return tensor_product_state(marginals)


def joint_diagonal_distribution(rho: DensityOperator, p: Partition) -> JointDistribution:
    """Outcome probabilities of both parts in the product basis: the diagonal
    of the density matrix laid out as a d_a x d_b table."""
    if p.parts != 2:
        raise NotBipartite(f"need exactly 2 parts, got {p.parts}")
    _check_partition(rho, p)
    diag = np.diag(rho.matrix).real.copy()
    if np.any(diag < -1e-9):
        raise NotPositive(f"diagonal entry {diag.min():.3e} below -1e-9")
    diag[diag < 0.0] = 0.0
    return JointDistribution(dims=(p.dims[0], p.dims[1]), weights=diag.reshape(p.dims))

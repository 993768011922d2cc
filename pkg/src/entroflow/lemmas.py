"""Classical probability inequalities behind the entropy-growth argument.

Four facts about nonnegative numbers: the x ln x >= x - 1 bound, its
averaged (mixing) form, contraction of sum(W ln W) under doubly stochastic
maps, and subadditivity of a joint table against its marginals. Each
operation returns the inequality's gap so callers can audit sign and
equality conditions numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .composite import JointDistribution
from .errors import (
    LengthMismatch,
    NonPositiveEntry,
    NonPositiveInput,
    NonPositiveProbability,
    NonPositiveWeight,
    SizeMismatch,
)
from .states import Unitary

#: Entries below this are treated as violating strict positivity.
POSITIVITY_FLOOR = 1e-300


@dataclass(frozen=True, eq=False)
class ProbabilityVector:
    """Nonnegative weights summing to 1."""

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64).reshape(-1)
        if np.any(w < 0.0):
            raise ValueError("probabilities must be nonnegative")
        total = float(w.sum())
        if abs(total - 1.0) > 1e-10:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        w = np.ascontiguousarray(w)
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def size(self) -> int:
        return self.weights.size


@dataclass(frozen=True, eq=False)
class DoublyStochasticMatrix:
    """Nonnegative matrix with every row and column summing to 1."""

    size: int
    entries: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.entries, dtype=np.float64)
        if t.ndim != 2 or t.shape[0] != t.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {t.shape}")
        if np.any(t < 0.0):
            raise ValueError("entries must be nonnegative")
        row_dev = float(np.max(np.abs(t.sum(axis=1) - 1.0)))
        col_dev = float(np.max(np.abs(t.sum(axis=0) - 1.0)))
        if max(row_dev, col_dev) > 1e-10:
            raise ValueError(f"row/column sums deviate from 1 by {max(row_dev, col_dev):.3e}")
        t = np.ascontiguousarray(t)
        t.setflags(write=False)
        object.__setattr__(self, "entries", t)
        object.__setattr__(self, "size", t.shape[0])


def xlnx_gap(x: float) -> float:
    """x ln x - (x - 1), nonnegative for x > 0, zero only at x = 1."""
    x = float(x)
    if x <= 0.0:
        raise NonPositiveInput(f"x must be positive, got {x}")
    return x * np.log(x) - (x - 1.0)


def mixing_inequality_gap(x: ProbabilityVector, w) -> float:
    """Gap of the averaged bound: sum x_i w_i ln w_i - wbar ln wbar >= 0."""
    wv = np.asarray(w, dtype=np.float64).reshape(-1)
    if wv.size != x.size:
        raise LengthMismatch(f"lengths differ: {x.size} vs {wv.size}")
    if np.any(wv <= 0.0):
        raise NonPositiveWeight("all w_i must be strictly positive")
    xv = x.weights
    wbar = float(np.dot(xv, wv))
    return float(np.dot(xv, wv * np.log(wv)) - wbar * np.log(wbar))


def contract_distribution(w: ProbabilityVector, t: DoublyStochasticMatrix):
    """Push a strictly positive distribution through a doubly stochastic map.

    Returns (W', gap) where W'_j = sum_i W_i T_ij and
    gap = sum W_i ln W_i - sum W'_j ln W'_j >= 0: mixing can only lose
    information.
    """
    if w.size != t.size:
        raise SizeMismatch(f"vector size {w.size} != matrix size {t.size}")
    if np.any(w.weights < POSITIVITY_FLOOR):
        raise NonPositiveProbability("W entries must be strictly positive")
    wv = w.weights
    out = wv @ t.entries
    gap = float(np.dot(wv, np.log(wv)) - np.dot(out, np.log(out)))
    return ProbabilityVector(out), gap


def joint_subadditivity_gap(w: JointDistribution):
    """Gap of joint-vs-marginal information for a strictly positive table.

    Returns (row marginals, column marginals, gap) with
    gap = sum W_ij ln W_ij - sum W_i ln W_i - sum W'_j ln W'_j >= 0,
    zero exactly when the table factorizes as W_ij = W_i W'_j.
    """
    table = w.weights
    if np.any(table < POSITIVITY_FLOOR):
        raise NonPositiveEntry("joint table entries must be strictly positive")
    rows = table.sum(axis=1)
    cols = table.sum(axis=0)
    gap = float(
        np.sum(table * np.log(table))
        - np.dot(rows, np.log(rows))
        - np.dot(cols, np.log(cols))
    )
    return ProbabilityVector(rows), ProbabilityVector(cols), gap


def unistochastic_from_unitary(u: Unitary) -> DoublyStochasticMatrix:
    """The transition matrix |U_nm|^2 between two orthonormal bases."""
    t = np.abs(u.matrix) ** 2
    return DoublyStochasticMatrix(size=u.dim, entries=t)

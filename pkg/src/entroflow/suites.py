"""Randomized audit suites behind the CLI and the acceptance checks.

Each suite returns a plain dict of worst-case gaps plus pass flags, built
deterministically from its seed so reports are byte-identical across runs.
"""

from __future__ import annotations

import numpy as np

from .composite import (
    JointDistribution,
    Partition,
    joint_diagonal_distribution,
    partial_trace,
    tensor_product_state,
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
from .linalg import hermitian_eig
from .measures import ObservableBasis, basis_information, correlation_information, information
from .oracles import information_matrix_log, naive_partial_trace
from .rng import RngSeed
from .states import haar_unitary, random_density, validate_density

#: Dimension ladder used by the conservation and oracle sweeps.
CHECK_DIMS = (2, 4, 8, 16, 36, 64)

#: Partition shapes used by the subadditivity sweep.
SUBADDITIVITY_SHAPES = ((2, 2), (2, 3), (3, 3), (2, 2, 2))

#: Dimension ladder for the basis-information bound.
BASIS_DIMS = (2, 3, 4, 8, 16)

TOL_LEMMA1 = 1e-12
TOL_LEMMA2 = 1e-12
TOL_LEMMA3 = 1e-10
TOL_LEMMA4 = 1e-10
TOL_FACTORIZED = 1e-10
TOL_PERTURBED = 1e-5
TOL_CONSERVATION = 1e-8
TOL_SUBADDITIVITY = 1e-8
TOL_BASIS_BOUND = 1e-8
TOL_EIGENBASIS = 1e-9
TOL_PARTIAL_TRACE = 1e-12
TOL_INFORMATION_ORACLE = 1e-8


def _positive_simplex(rng: np.random.Generator, n: int) -> np.ndarray:
    """Strictly positive probability vector, uniform on the simplex."""
    x = rng.exponential(1.0, n)
    return x / x.sum()


def _floored_simplex(rng: np.random.Generator, n: int) -> np.ndarray:
    """Simplex point with every entry >= 1/(2n), for perturbation tests."""
    return 0.5 * _positive_simplex(rng, n) + 0.5 / n


def lemma_audit(samples: int, max_size: int, seed: RngSeed) -> dict:
    """Randomized audit of the four classical inequalities.

    ``samples`` draws for the vector/matrix inequalities; the scalar bound
    gets 10x that, log-uniform over [1e-9, 1e3].
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if max_size < 2:
        raise ValueError(f"max_size must be >= 2, got {max_size}")

    report = {"samples": samples, "max_size": max_size,
              "seed": seed.seed, "stream": seed.stream}

    # x ln x >= x - 1, zero only at x = 1
    rng = seed.child(1).generator()
    xs = 10.0 ** rng.uniform(-9.0, 3.0, 10 * samples)
    gaps = np.array([xlnx_gap(x) for x in xs])
    away = np.abs(xs - 1.0) > 1e-6
    report["lemma1"] = {
        "samples": int(xs.size),
        "worst_gap": float(gaps.min()),
        "min_gap_away_from_one": float(gaps[away].min()) if away.any() else None,
        "passed": bool(gaps.min() >= -TOL_LEMMA1 and (not away.any() or gaps[away].min() > 0.0)),
    }

    # averaged form: sum x_i w_i ln w_i >= wbar ln wbar
    rng = seed.child(2).generator()
    worst2 = np.inf
    for _ in range(samples):
        n = int(rng.integers(1, max_size + 1))
        x = rng.random(n)
        total = x.sum()
        x = x / total if total > 0.0 else np.full(n, 1.0 / n)
        w = 10.0 ** rng.uniform(-3.0, 3.0, n)
        worst2 = min(worst2, mixing_inequality_gap(ProbabilityVector(x), w))
    report["lemma2"] = {"samples": samples, "worst_gap": float(worst2),
                        "passed": bool(worst2 >= -TOL_LEMMA2)}

    # doubly stochastic contraction loses information
    rng = seed.child(3).generator()
    worst3 = np.inf
    worst_sum_dev = 0.0
    for j in range(samples):
        n = int(rng.integers(2, max_size + 1))
        w = ProbabilityVector(_positive_simplex(rng, n))
        t = unistochastic_from_unitary(haar_unitary(n, seed.child(3).child(j)))
        out, gap = contract_distribution(w, t)
        worst3 = min(worst3, gap)
        worst_sum_dev = max(worst_sum_dev, abs(float(out.weights.sum()) - 1.0))
    report["lemma3"] = {"samples": samples, "worst_gap": float(worst3),
                        "worst_marginal_sum_error": float(worst_sum_dev),
                        "passed": bool(worst3 >= -TOL_LEMMA3)}

    # joint table dominates its marginals; equality iff factorized
    rng = seed.child(4).generator()
    worst4 = np.inf
    worst_fact = 0.0
    min_perturbed = np.inf
    for _ in range(samples):
        da = int(rng.integers(2, max_size + 1))
        db = int(rng.integers(2, max_size + 1))
        table = _positive_simplex(rng, da * db).reshape(da, db)
        _, _, gap = joint_subadditivity_gap(JointDistribution((da, db), table))
        worst4 = min(worst4, gap)

        # factorized table: gap vanishes
        outer = np.outer(_floored_simplex(rng, da), _floored_simplex(rng, db))
        _, _, gap0 = joint_subadditivity_gap(JointDistribution((da, db), outer))
        worst_fact = max(worst_fact, abs(gap0))

        # bump the smallest cell: equality must detectably break
        bumped = outer.copy()
        i, j = np.unravel_index(np.argmin(bumped), bumped.shape)
        bumped[i, j] += 0.01
        bumped /= bumped.sum()
        _, _, gap1 = joint_subadditivity_gap(JointDistribution((da, db), bumped))
        min_perturbed = min(min_perturbed, gap1)
    report["lemma4"] = {"samples": samples, "worst_gap": float(worst4),
                        "worst_factorized_gap": float(worst_fact),
                        "min_perturbed_gap": float(min_perturbed),
                        "passed": bool(worst4 >= -TOL_LEMMA4
                                       and worst_fact <= TOL_FACTORIZED
                                       and min_perturbed > TOL_PERTURBED)}

    report["passed"] = all(report[k]["passed"] for k in ("lemma1", "lemma2", "lemma3", "lemma4"))
    return report


def _partition_shapes(max_total: int):
    """All ordered factorizations into parts >= 2 with product <= max_total."""
    shapes = []

    def extend(prefix, prod):
        if prefix:
            shapes.append(tuple(prefix))
        d = 2
        while prod * d <= max_total:
            extend(prefix + [d], prod * d)
            d += 1

    extend([], 1)
    return shapes


def conservation_check(trials: int, seed: RngSeed, dims=CHECK_DIMS) -> dict:
    """|I(U rho U†) - I(rho)| over seeded (state, Haar unitary) pairs."""
    worst = 0.0
    for j in range(trials):
        dim = dims[j % len(dims)]
        rho = random_density(dim, dim, seed.child(j).child(0))
        u = haar_unitary(dim, seed.child(j).child(1))
        rotated = validate_density(u.matrix @ rho.matrix @ u.matrix.conj().T)
        worst = max(worst, abs(information(rotated) - information(rho)))
    return {"trials": trials, "dims": list(dims), "worst_information_drift": worst,
            "passed": bool(worst <= TOL_CONSERVATION)}


def subadditivity_check(trials: int, seed: RngSeed, shapes=SUBADDITIVITY_SHAPES) -> dict:
    """Correlation information >= 0, and = 0 for product states."""
    worst_corr = np.inf
    worst_product = 0.0
    for s_index, shape in enumerate(shapes):
        p = Partition(shape)
        for j in range(trials):
            sub = seed.child(s_index).child(j)
            rho = random_density(p.total, p.total, sub.child(0))
            worst_corr = min(worst_corr, correlation_information(rho, p))
            product = tensor_product_state(
                [random_density(d, d, sub.child(1 + i)) for i, d in enumerate(shape)]
            )
            worst_product = max(worst_product, abs(correlation_information(product, p)))
    return {"trials_per_shape": trials, "shapes": [list(s) for s in shapes],
            "min_correlation_information": float(worst_corr),
            "worst_product_state_deviation": float(worst_product),
            "passed": bool(worst_corr >= -TOL_SUBADDITIVITY
                           and worst_product <= TOL_SUBADDITIVITY)}


def basis_bound_check(trials: int, seed: RngSeed, dims=BASIS_DIMS) -> dict:
    """Basis information <= information, with equality in the eigenbasis."""
    worst_excess = -np.inf
    worst_eigenbasis = 0.0
    for j in range(trials):
        dim = dims[j % len(dims)]
        rho = random_density(dim, dim, seed.child(j).child(0))
        basis = ObservableBasis(dim, haar_unitary(dim, seed.child(j).child(1)).matrix)
        info = information(rho)
        worst_excess = max(worst_excess, basis_information(rho, basis) - info)
        eigen = ObservableBasis(dim, hermitian_eig(rho.matrix).eigenvectors)
        worst_eigenbasis = max(worst_eigenbasis, abs(basis_information(rho, eigen) - info))
    return {"trials": trials, "dims": list(dims),
            "worst_bound_excess": float(worst_excess),
            "worst_eigenbasis_deviation": float(worst_eigenbasis),
            "passed": bool(worst_excess <= TOL_BASIS_BOUND
                           and worst_eigenbasis <= TOL_EIGENBASIS)}


def partial_trace_oracle_check(seed: RngSeed, max_total: int = 36) -> dict:
    """Production partial trace vs brute-force index summation, all shapes."""
    worst = 0.0
    shapes = _partition_shapes(max_total)
    for s_index, shape in enumerate(shapes):
        p = Partition(shape)
        rho = random_density(p.total, p.total, seed.child(s_index))
        for mask in range(1, 2 ** p.parts):
            keep = {i for i in range(p.parts) if mask & (1 << i)}
            got = partial_trace(rho, p, keep).matrix
            want = naive_partial_trace(rho.matrix, shape, keep)
            worst = max(worst, float(np.max(np.abs(got - want))))
    return {"shapes_checked": len(shapes), "max_total": max_total,
            "worst_elementwise_deviation": worst,
            "passed": bool(worst <= TOL_PARTIAL_TRACE)}


def information_oracle_check(trials: int, seed: RngSeed, dims=CHECK_DIMS) -> dict:
    """Eigenvalue-sum information vs the matrix-logarithm path."""
    worst = 0.0
    for j in range(trials):
        dim = dims[j % len(dims)]
        rho = random_density(dim, dim, seed.child(j))
        worst = max(worst, abs(information(rho) - information_matrix_log(rho.matrix)))
    return {"trials": trials, "dims": list(dims), "worst_deviation": worst,
            "passed": bool(worst <= TOL_INFORMATION_ORACLE)}


def joint_distribution_bridge_check(trials: int, seed: RngSeed) -> dict:
    """Classical shadow of subadditivity: the diagonal joint table obeys it."""
    worst = np.inf
    p = Partition((2, 3))
    for j in range(trials):
        rho = random_density(p.total, p.total, seed.child(j))
        w = joint_diagonal_distribution(rho, p)
        _, _, gap = joint_subadditivity_gap(w)
        worst = min(worst, gap)
    return {"trials": trials, "min_gap": float(worst),
            "passed": bool(worst >= -TOL_LEMMA4)}


def quantum_checks(max_dim: int, trials: int, seed: RngSeed) -> dict:
    """The invariant suite behind `entroflow check`."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if max_dim < 2:
        raise ValueError(f"max_dim must be >= 2, got {max_dim}")

    dims = tuple(d for d in CHECK_DIMS if d <= max_dim) or (2,)
    shapes = tuple(s for s in SUBADDITIVITY_SHAPES
                   if int(np.prod(s)) <= max_dim) or ((2, 2),)
    basis_dims = tuple(d for d in BASIS_DIMS if d <= max_dim) or (2,)

    report = {"max_dim": max_dim, "trials": trials,
              "seed": seed.seed, "stream": seed.stream}
    report["unitary_invariance"] = conservation_check(trials, seed.child(10), dims)
    report["subadditivity"] = subadditivity_check(trials, seed.child(11), shapes)
    report["basis_bound"] = basis_bound_check(trials, seed.child(12), basis_dims)
    report["partial_trace_oracle"] = partial_trace_oracle_check(
        seed.child(13), max_total=min(36, max_dim))
    report["information_oracle"] = information_oracle_check(trials, seed.child(14), dims)
    report["joint_distribution_bridge"] = joint_distribution_bridge_check(
        min(trials, 200), seed.child(15))
    report["passed"] = all(
        report[k]["passed"]
        for k in ("unitary_invariance", "subadditivity", "basis_bound",
                  "partial_trace_oracle", "information_oracle",
                  "joint_distribution_bridge")
    )
    return report

"""Quantum encodings of machine states and the quantum memory cost.

Each machine state ``k`` is mapped to a pure state on the composite
space (successor state) x (emitted symbol),

    |psi_k> = sum_{j, x} sqrt(T[k, x, j]) |S_j>|x>,

with real non-negative amplitudes and basis index ``j * n_symbols + x``.
Running the machine with these signal states instead of classical
labels costs ``S(rho)`` qubits of memory, the von Neumann entropy of
the stationary mixture ``rho = sum_k pi_k |psi_k><psi_k|``.  Since the
signal states can overlap, this is at most the Shannon cost of the
classical labels.

The spectrum of ``rho`` is computed from the weighted Gram matrix
``M[j, k] = sqrt(pi_j pi_k) <psi_j|psi_k>``, which has the same nonzero
eigenvalues as ``rho`` but only one row per machine state;
``density_operator`` builds the full-dimensional ``rho`` for
cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolationError
from .numerics import hermitian_eigenvalues, von_neumann_entropy
from .process import (EpsilonMachine, build_and_process, build_xor_process,
                      minimize, stationary, statistical_complexity)

VECTOR_NORM_ATOL = 1e-12

PROCESS_FAMILIES = {
    "and": build_and_process,
    "xor": build_xor_process,
}


@dataclass(frozen=True)
class QuantumCausalEnsemble:
    """Signal states for one machine: one unit vector per machine state,
    weighted by the stationary distribution.

    ``minimal`` records whether the machine was already in reduced form;
    the quantum memory cost is only meaningful over causal states, so a
    False flag means the ensemble describes a redundant presentation.
    """

    machine: EpsilonMachine
    vectors: np.ndarray = field(repr=False)   # (n_states, n_states * n_symbols)
    weights: np.ndarray = field(repr=False)
    minimal: bool

    def __post_init__(self):
        norms = np.linalg.norm(self.vectors, axis=1)
        if np.max(np.abs(norms - 1.0)) > VECTOR_NORM_ATOL:
            raise ContractViolationError("ensemble vectors are not unit norm")
        self.vectors.flags.writeable = False
        self.weights.flags.writeable = False


def causal_state_vectors(machine: EpsilonMachine) -> QuantumCausalEnsemble:
    """Encode each state of a valid machine as a signal vector.

    An unminimized machine is accepted, but the result is flagged so
    callers know the ensemble lives on a redundant state set.
    """
    pi = stationary(machine)                  # also enforces validity
    n, nx = machine.n_states, machine.n_symbols
    vectors = np.sqrt(machine.probs.transpose(0, 2, 1).reshape(n, n * nx))
    # Row sums are 1 within the stochasticity tolerance; rescale so the
    # vectors are unit norm to working precision.
    vectors = vectors / np.linalg.norm(vectors, axis=1)[:, None]
    is_minimal = minimize(machine).n_states == n
    return QuantumCausalEnsemble(
        machine=machine, vectors=vectors, weights=pi, minimal=is_minimal)


def gram_matrix(ensemble: QuantumCausalEnsemble) -> np.ndarray:
    """Overlap matrix G[j, k] = <psi_j|psi_k>; real symmetric, unit diagonal."""
    g = ensemble.vectors @ ensemble.vectors.T
    g = (g + g.T) / 2.0
    # Self-overlaps of unit vectors are 1 by definition; the float dot
    # product misses by an ulp, which matters at the one-state fixpoint.
    np.fill_diagonal(g, 1.0)
    return g


def weighted_gram(ensemble: QuantumCausalEnsemble) -> np.ndarray:
    """sqrt(pi_j pi_k) G[j, k]; shares its nonzero spectrum with the
    stationary mixture of the signal states."""
    root = np.sqrt(ensemble.weights)
    return gram_matrix(ensemble) * np.outer(root, root)


def density_operator(ensemble: QuantumCausalEnsemble) -> np.ndarray:
    """The stationary mixture rho itself, on the full product space.

    Dimension (n_states * n_symbols)^2; exists as the direct route that
    the weighted Gram shortcut is checked against.
    """
    return np.einsum("k,ki,kj->ij", ensemble.weights,
                     ensemble.vectors, ensemble.vectors)


def quantum_complexity(machine: EpsilonMachine) -> float:
    """Quantum memory cost of the process, in qubits.

    The machine is minimized first: the cost is defined over causal
    states, and a redundant presentation would inflate it.
    """
    reduced = minimize(machine)
    ensemble = causal_state_vectors(reduced)
    spectrum = hermitian_eigenvalues(weighted_gram(ensemble))
    return von_neumann_entropy(spectrum)


@dataclass(frozen=True)
class SweepTable:
    """Complexity-versus-p table for one process family."""

    family: str
    columns: tuple
    rows: tuple   # of tuples of floats, ascending in p

    def to_csv(self) -> str:
        lines = [",".join(self.columns)]
        for row in self.rows:
            lines.append(",".join("%.12g" % value for value in row))
        return "\n".join(lines) + "\n"


def complexity_sweep(family: str, grid, *, include_raw: bool = False) -> SweepTable:
    """Evaluate (C_mu, C_q) across gate parameters for a built-in family.

    Rows use minimized machines.  With ``include_raw``, two extra
    columns report the same quantities on the fixed 5-state topology,
    which stays nonzero at p = 1/2 where the minimized machine
    collapses.
    """
    if family not in PROCESS_FAMILIES:
        raise ContractViolationError(
            f"unknown process family {family!r}, expected one of "
            f"{sorted(PROCESS_FAMILIES)}")
    build = PROCESS_FAMILIES[family]
    grid = sorted(float(p) for p in grid)
    columns = ("p", "c_mu_bits", "c_q_qubits")
    if include_raw:
        columns += ("c_mu_raw_bits", "c_q_raw_qubits")
    rows = []
    for p in grid:
        machine = build(p)
        reduced = minimize(machine)
        row = (p, statistical_complexity(reduced), _ensemble_entropy(reduced))
        if include_raw:
            row += (statistical_complexity(machine), _ensemble_entropy(machine))
        rows.append(row)
    return SweepTable(family=family, columns=columns, rows=tuple(rows))


def _ensemble_entropy(machine: EpsilonMachine) -> float:
    ensemble = causal_state_vectors(machine)
    return von_neumann_entropy(hermitian_eigenvalues(weighted_gram(ensemble)))

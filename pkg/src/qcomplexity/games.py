"""Measurement games where shared correlations act as a computing resource.

Two settings are covered.  In the two-site game Alice and Bob each hold
one qubit of a shared pair, receive one input bit each, measure in an
input-dependent basis, and win when the XOR of their outcome bits
equals the AND of the inputs.  The quality of their correlations is
summarised by the CHSH combination

    C = 2 (p_AB + p_Ab + p_aB - p_ab - 1),

where p_xy is the probability of equal outcomes for that setting pair.
Any local deterministic strategy has |C| <= 2, shared entanglement
reaches 2*sqrt(2), and the average success probability is C/8 + 1/2
either way.

In the three-site game the players share a GHZ state, receive input
bits (a, b, a XOR b), measure in the x- or y-basis according to their
bit, and win when the XOR of the three outcome bits equals a AND b.
The quantum protocol wins every round; deterministic strategies top out
at 3/4.

Outcome bits follow the convention + -> 0, - -> 1.  All functions are
pure; strategies and protocols are immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import ContractViolationError
from .numerics import tensor_product

STATE_NORM_ATOL = 1e-9
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)
CHSH_SLACK = 1e-9
OUTCOME_CONSISTENCY_ATOL = 1e-12
PLANE_ATOL = 1e-12

_IDENTITY = np.eye(2, dtype=complex)
_PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)


@dataclass(frozen=True)
class MeasurementBasis:
    """Binary projective qubit measurement along a Bloch direction.

    ``polar`` and ``azimuth`` are radians; the + outcome projects onto
    the (polar, azimuth) axis, the - outcome onto its antipode.
    """

    polar: float
    azimuth: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.polar) and math.isfinite(self.azimuth)):
            raise ContractViolationError("measurement angles must be finite")

    def bloch_direction(self) -> np.ndarray:
        return np.array([
            math.sin(self.polar) * math.cos(self.azimuth),
            math.sin(self.polar) * math.sin(self.azimuth),
            math.cos(self.polar),
        ])

    def projectors(self) -> tuple:
        """(P_plus, P_minus); complete and idempotent by construction."""
        axis = np.tensordot(self.bloch_direction(), _PAULI, axes=1)
        return (_IDENTITY + axis) / 2.0, (_IDENTITY - axis) / 2.0


X_BASIS = MeasurementBasis(polar=math.pi / 2, azimuth=0.0)
Y_BASIS = MeasurementBasis(polar=math.pi / 2, azimuth=math.pi / 2)
Z_BASIS = MeasurementBasis(polar=0.0)


def _as_state(vector, n_qubits: int) -> np.ndarray:
    psi = np.asarray(vector, dtype=complex)
    dim = 2 ** n_qubits
    if psi.shape != (dim,):
        raise ContractViolationError(
            f"expected a {n_qubits}-qubit state of dimension {dim}, "
            f"got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if abs(norm - 1.0) > STATE_NORM_ATOL:
        raise ContractViolationError(f"state norm is {norm!r}, expected 1")
    return psi


def bell_state() -> np.ndarray:
    """(|00> + |11>) / sqrt(2)."""
    zero = np.array([1.0, 0.0])
    one = np.array([0.0, 1.0])
    return (tensor_product(zero, zero) + tensor_product(one, one)) / math.sqrt(2.0)


def ghz_state() -> np.ndarray:
    """(|001> + |110>) / sqrt(2)."""
    zero = np.array([1.0, 0.0])
    one = np.array([0.0, 1.0])
    return (tensor_product(tensor_product(zero, zero), one)
            + tensor_product(tensor_product(one, one), zero)) / math.sqrt(2.0)


@dataclass(frozen=True)
class BipartiteStrategy:
    """Shared 2-qubit state plus one measurement basis per input bit
    and party.  ``alice[i]`` is Alice's basis on input ``i``."""

    shared_state: np.ndarray = field(repr=False)
    alice: tuple
    bob: tuple

    def __post_init__(self):
        psi = _as_state(self.shared_state, 2)
        psi.flags.writeable = False
        object.__setattr__(self, "shared_state", psi)
        for name in ("alice", "bob"):
            pair = tuple(getattr(self, name))
            if len(pair) != 2 or not all(isinstance(b, MeasurementBasis) for b in pair):
                raise ContractViolationError(
                    f"{name} needs one MeasurementBasis per input bit")
            object.__setattr__(self, name, pair)


@dataclass(frozen=True)
class GameOutcome:
    """Evaluation record of one bipartite strategy: the four same-outcome
    probabilities (indexed [alice setting][bob setting]), the CHSH
    combination, and the AND-game success probability."""

    same_outcome: tuple
    chsh: float
    success: float

    def __post_init__(self):
        flat = [p for row in self.same_outcome for p in row]
        if len(flat) != 4:
            raise ContractViolationError("same_outcome must be 2x2")
        if min(flat) < -OUTCOME_CONSISTENCY_ATOL or max(flat) > 1.0 + OUTCOME_CONSISTENCY_ATOL:
            raise ContractViolationError("same-outcome probability outside [0, 1]")
        if abs(self.chsh - chsh_from_same_outcome(self.same_outcome)) > OUTCOME_CONSISTENCY_ATOL:
            raise ContractViolationError("chsh value inconsistent with probabilities")


def chsh_from_same_outcome(same_outcome) -> float:
    """CHSH combination of the four same-outcome probabilities."""
    (p00, p01), (p10, p11) = same_outcome
    return 2.0 * (p00 + p01 + p10 - p11 - 1.0)


def same_outcome_probability(state, basis_a: MeasurementBasis,
                             basis_b: MeasurementBasis) -> float:
    """Probability that both parties see the same outcome on a shared
    2-qubit state."""
    psi = _as_state(state, 2)
    a_plus, a_minus = basis_a.projectors()
    b_plus, b_minus = basis_b.projectors()
    both = tensor_product(a_plus, b_plus) + tensor_product(a_minus, b_minus)
    p = float(np.real(psi.conj() @ both @ psi))
    return min(max(p, 0.0), 1.0)


def chsh_value(strategy: BipartiteStrategy) -> GameOutcome:
    """Evaluate a strategy: same-outcome table, CHSH value, success rate."""
    rows = []
    for basis_a in strategy.alice:
        rows.append(tuple(
            same_outcome_probability(strategy.shared_state, basis_a, basis_b)
            for basis_b in strategy.bob))
    same = tuple(rows)
    c = chsh_from_same_outcome(same)
    if abs(c) > TSIRELSON_BOUND + CHSH_SLACK:
        raise ContractViolationError(f"CHSH value {c!r} exceeds the quantum bound")
    return GameOutcome(same_outcome=same, chsh=c, success=c / 8.0 + 0.5)


def success_from_chsh(c: float) -> float:
    """AND-game success probability as a function of the CHSH value."""
    if abs(c) > TSIRELSON_BOUND + CHSH_SLACK:
        raise ContractViolationError(
            f"CHSH value {c!r} outside [-2*sqrt(2), 2*sqrt(2)]")
    return c / 8.0 + 0.5


def and_game_success(strategy: BipartiteStrategy) -> float:
    """Average winning probability of the two-site AND game, computed
    from the raw measurement statistics (not via the CHSH shortcut).

    Inputs are uniform; input bit i selects basis i; the game is won
    when the outcome XOR equals the input AND.
    """
    psi = strategy.shared_state
    total = 0.0
    for a, b in product((0, 1), repeat=2):
        alice = strategy.alice[a].projectors()
        bob = strategy.bob[b].projectors()
        for m1, m2 in product((0, 1), repeat=2):
            if m1 ^ m2 != a & b:
                continue
            joint = tensor_product(alice[m1], bob[m2])
            total += float(np.real(psi.conj() @ joint @ psi))
    return total / 4.0


def deterministic_chsh_table() -> tuple:
    """CHSH value of every deterministic local strategy.

    Each party's strategy is a pair (output on input 0, output on input
    1); rows are ((alice outputs), (bob outputs), C) in lexicographic
    order, 16 in total.
    """
    rows = []
    for a0, a1, b0, b1 in product((0, 1), repeat=4):
        alice = (a0, a1)
        bob = (b0, b1)
        same = tuple(
            tuple(1.0 if alice[i] == bob[j] else 0.0 for j in (0, 1))
            for i in (0, 1))
        rows.append((alice, bob, chsh_from_same_outcome(same)))
    return tuple(rows)


def classical_chsh_max() -> tuple:
    """Largest |C| over deterministic local strategies, with a witness.

    Shared randomness cannot help: C is linear in the strategy mixture,
    so the maximum over the convex hull is attained at a deterministic
    vertex.  Returns (max |C|, (alice outputs, bob outputs)), taking the
    lexicographically first witness.
    """
    best = None
    for alice, bob, c in deterministic_chsh_table():
        if best is None or abs(c) > best[0]:
            best = (abs(c), (alice, bob))
    return best


def embed_deterministic_strategy(alice_outputs, bob_outputs) -> BipartiteStrategy:
    """Deterministic local strategy as a product-state quantum strategy.

    The shared state is |00> and each party measures along +z or -z, so
    the outcome bit equals the scripted output with certainty.
    """
    zero = np.array([1.0, 0.0])
    fixed = {0: Z_BASIS, 1: MeasurementBasis(polar=math.pi)}
    return BipartiteStrategy(
        shared_state=tensor_product(zero, zero),
        alice=tuple(fixed[bit] for bit in alice_outputs),
        bob=tuple(fixed[bit] for bit in bob_outputs))


@dataclass(frozen=True)
class ChshOptimizationResult:
    strategy: BipartiteStrategy
    outcome: GameOutcome
    converged: bool
    sweeps: int


def _correlation_matrix(psi: np.ndarray) -> np.ndarray:
    k = np.empty((3, 3))
    for u in range(3):
        for v in range(3):
            op = tensor_product(_PAULI[u], _PAULI[v])
            k[u, v] = float(np.real(psi.conj() @ op @ psi))
    return k


def optimize_chsh(initial: BipartiteStrategy, iterations: int = 200, *,
                  tol: float = 1e-6, grid_points: int = 33) -> ChshOptimizationResult:
    """Coordinate ascent over the four measurement angles on a Bell pair.

    The search stays in the azimuth-0 plane of the Bloch sphere, where
    the Bell state's optimal measurements live; the strategy to improve
    must already be in that plane on a Bell state.  Each sweep scans a
    centred grid per angle; when no single angle improves, pairs of
    angles are scanned jointly (the all-equal-angles start is a saddle
    that single-angle moves cannot leave), and only then is the grid
    span halved.  Deterministic for a given initial strategy.

    Stops when C is within ``tol`` of 2*sqrt(2) or after ``iterations``
    sweeps; the result's ``converged`` flag reports which happened.
    """
    psi = initial.shared_state
    if abs(abs(np.vdot(bell_state(), psi)) - 1.0) > STATE_NORM_ATOL:
        raise ContractViolationError("optimization requires a Bell shared state")
    bases = list(initial.alice) + list(initial.bob)
    for basis in bases:
        if abs(basis.azimuth) > PLANE_ATOL:
            raise ContractViolationError(
                "optimization requires measurement bases in the azimuth-0 plane")

    # In-plane directions only need the polar angle; with K the shared
    # state's Pauli correlation matrix, E_ij = n(alpha_i)^T K n(beta_j).
    k = _correlation_matrix(psi)

    def direction(theta):
        return np.stack([np.sin(theta), np.zeros_like(theta), np.cos(theta)], axis=-1)

    def chsh_of(angles):
        e = np.einsum("...ui,ij,...vj->...uv",
                      direction(angles[..., :2]), k, direction(angles[..., 2:]))
        return e[..., 0, 0] + e[..., 0, 1] + e[..., 1, 0] - e[..., 1, 1]

    angles = np.array([b.polar for b in bases], dtype=float)
    best = float(chsh_of(angles))
    span = math.pi
    sweeps = 0
    converged = False
    offsets = np.linspace(-1.0, 1.0, grid_points)
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    while sweeps < iterations:
        sweeps += 1
        improved = False
        for axis in range(4):
            candidates = np.tile(angles, (grid_points, 1))
            candidates[:, axis] += span * offsets
            values = chsh_of(candidates)
            pick = int(np.argmax(values))
            if values[pick] > best + 1e-15:
                best = float(values[pick])
                angles = candidates[pick]
                improved = True
        if not improved:
            for i, j in pairs:
                candidates = np.tile(angles, (grid_points * grid_points, 1))
                di, dj = np.meshgrid(span * offsets, span * offsets, indexing="ij")
                candidates[:, i] += di.ravel()
                candidates[:, j] += dj.ravel()
                values = chsh_of(candidates)
                pick = int(np.argmax(values))
                if values[pick] > best + 1e-15:
                    best = float(values[pick])
                    angles = candidates[pick]
                    improved = True
                    break
        if best >= TSIRELSON_BOUND - tol:
            converged = True
            break
        if not improved:
            span /= 2.0
            if span < 1e-12:
                break

    strategy = BipartiteStrategy(
        shared_state=psi,
        alice=(MeasurementBasis(angles[0]), MeasurementBasis(angles[1])),
        bob=(MeasurementBasis(angles[2]), MeasurementBasis(angles[3])))
    return ChshOptimizationResult(
        strategy=strategy, outcome=chsh_value(strategy),
        converged=converged, sweeps=sweeps)


@dataclass(frozen=True)
class TripartiteProtocol:
    """Three-site measurement protocol with the fixed wiring of the
    three-player AND game: on input bit 0 measure x, on input bit 1
    measure y; outcome + is bit 0, outcome - is bit 1."""

    shared_state: np.ndarray = field(repr=False)

    def __post_init__(self):
        psi = _as_state(self.shared_state, 3)
        psi.flags.writeable = False
        object.__setattr__(self, "shared_state", psi)

    def round_distribution(self, a: int, b: int) -> np.ndarray:
        """Distribution over (m1, m2, m3), flattened as m1*4 + m2*2 + m3,
        when the sites receive inputs (a, b, a XOR b)."""
        if a not in (0, 1) or b not in (0, 1):
            raise ContractViolationError(f"inputs must be bits, got ({a!r}, {b!r})")
        psi = self.shared_state
        site_projectors = [
            (X_BASIS if bit == 0 else Y_BASIS).projectors()
            for bit in (a, b, a ^ b)]
        dist = np.empty(8)
        for m in range(8):
            bits = (m >> 2 & 1, m >> 1 & 1, m & 1)
            op = site_projectors[0][bits[0]]
            for site in (1, 2):
                op = tensor_product(op, site_projectors[site][bits[site]])
            dist[m] = max(float(np.real(psi.conj() @ op @ psi)), 0.0)
        return dist

    def round_success(self, a: int, b: int) -> float:
        """Probability that m1 XOR m2 XOR m3 equals a AND b."""
        dist = self.round_distribution(a, b)
        return float(sum(
            dist[m] for m in range(8)
            if (m >> 2 & 1) ^ (m >> 1 & 1) ^ (m & 1) == (a & b)))

    def average_success(self) -> float:
        return sum(self.round_success(a, b)
                   for a, b in product((0, 1), repeat=2)) / 4.0


def ghz_round(a: int, b: int) -> np.ndarray:
    """Outcome distribution of one GHZ-state round on inputs (a, b)."""
    return TripartiteProtocol(ghz_state()).round_distribution(a, b)


def ghz_success() -> float:
    """Average success of the GHZ protocol over the four input pairs."""
    return TripartiteProtocol(ghz_state()).average_success()


def classical_ghz_game_max() -> tuple:
    """Best average success of deterministic three-site strategies under
    the same wiring, by exhaustive enumeration of the 64 site response
    functions.  Returns (max success, ((site1 outputs), (site2 outputs),
    (site3 outputs))), lexicographically first witness.

    No assignment wins all four rounds: XOR-summing the winning
    conditions makes the left side cancel and the right side odd.
    """
    best = None
    for responses in product(product((0, 1), repeat=2), repeat=3):
        total = 0
        for a, b in product((0, 1), repeat=2):
            outs = (responses[0][a], responses[1][b], responses[2][a ^ b])
            if outs[0] ^ outs[1] ^ outs[2] == a & b:
                total += 1
        if best is None or total > best[0]:
            best = (total, responses)
    return best[0] / 4.0, best[1]

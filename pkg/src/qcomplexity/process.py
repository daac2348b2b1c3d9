"""Finite-state edge-emitting machines and their classical statistics.

A machine has a finite state set, a finite symbol alphabet, and
transition probabilities ``T[i, x, j]``: the probability, from state
``i``, of emitting symbol ``x`` while moving to state ``j``.  Rows
``T[i, :, :]`` sum to one.  The machines built here are unifilar (the
pair ``(i, x)`` determines ``j``), but nothing below assumes it except
where documented.

The module covers validation, stationary distributions, the Shannon
memory cost of the state (statistical complexity), minimisation by
partition refinement, trajectory sampling, and a JSON interchange
format.
"""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import ContractViolationError, MachineFormatError, ReducibleMachineError
from .numerics import shannon_entropy

ROW_SUM_ATOL = 1e-9
PROB_RANGE_ATOL = 1e-12
STATIONARY_RESIDUAL_ATOL = 1e-9
MERGE_TOL = 1e-9
RETRODICTION_ATOL = 1e-12


@dataclass(frozen=True)
class EpsilonMachine:
    """Immutable container for states, alphabet, and transition tensor.

    Parameters
    ----------
    states : tuple of str
        State labels, in a fixed order.
    alphabet : tuple of str
        Symbol labels, in a fixed order.
    probs : ndarray, shape (n_states, n_symbols, n_states)
        ``probs[i, x, j]`` is the probability of the labelled edge
        ``i --x--> j``.  Entries are read-only after construction.
    """

    states: tuple
    alphabet: tuple
    probs: np.ndarray = field(repr=False)

    def __post_init__(self):
        states = tuple(str(s) for s in self.states)
        alphabet = tuple(str(x) for x in self.alphabet)
        if len(set(states)) != len(states):
            raise ContractViolationError("duplicate state labels")
        if len(set(alphabet)) != len(alphabet):
            raise ContractViolationError("duplicate symbols in alphabet")
        if not states or not alphabet:
            raise ContractViolationError("states and alphabet must be nonempty")
        probs = np.array(self.probs, dtype=float)
        expected = (len(states), len(alphabet), len(states))
        if probs.shape != expected:
            raise ContractViolationError(
                f"transition tensor has shape {probs.shape}, expected {expected}")
        if not np.all(np.isfinite(probs)):
            raise ContractViolationError("transition tensor has non-finite entries")
        probs.flags.writeable = False
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "probs", probs)

    @classmethod
    def from_transitions(cls, states, alphabet, transitions) -> "EpsilonMachine":
        """Build from an iterable of ``(from, symbol, to, probability)``."""
        states = tuple(str(s) for s in states)
        alphabet = tuple(str(x) for x in alphabet)
        s_index = {s: i for i, s in enumerate(states)}
        x_index = {x: i for i, x in enumerate(alphabet)}
        probs = np.zeros((len(states), len(alphabet), len(states)))
        seen = set()
        for frm, symbol, to, p in transitions:
            frm, symbol, to = str(frm), str(symbol), str(to)
            if frm not in s_index or to not in s_index:
                raise ContractViolationError(f"unknown state in transition {frm!r} -> {to!r}")
            if symbol not in x_index:
                raise ContractViolationError(f"unknown symbol {symbol!r}")
            key = (frm, symbol, to)
            if key in seen:
                raise ContractViolationError(f"duplicate transition {key}")
            seen.add(key)
            probs[s_index[frm], x_index[symbol], s_index[to]] = float(p)
        return cls(states, alphabet, probs)

    def transitions(self):
        """Yield ``(from, symbol, to, probability)`` for every positive edge,
        in (state, symbol, target) order."""
        for i, frm in enumerate(self.states):
            for x, symbol in enumerate(self.alphabet):
                for j, to in enumerate(self.states):
                    p = self.probs[i, x, j]
                    if p > 0.0:
                        yield frm, symbol, to, float(p)

    def symbol_matrix(self) -> np.ndarray:
        """State-to-state transition matrix with symbols summed out."""
        return self.probs.sum(axis=1)

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_symbols(self) -> int:
        return len(self.alphabet)


@dataclass(frozen=True)
class Violation:
    """One validation finding.  ``kind`` is a short category tag."""

    kind: str
    message: str
    state: str = None
    symbol: str = None
    magnitude: float = None

    def __str__(self):
        return self.message


def validate(machine: EpsilonMachine, *,
             row_sum_atol: float = ROW_SUM_ATOL,
             range_atol: float = PROB_RANGE_ATOL) -> list:
    """Check stochasticity, probability ranges, and reachability.

    Returns a list of :class:`Violation`; an empty list means the
    machine satisfies the contract assumed by every other function in
    this module.  Findings are data, not exceptions, so callers can
    report all of them at once.
    """
    found = []
    probs = machine.probs
    low = probs.min()
    high = probs.max()
    if low < -range_atol or high > 1.0 + range_atol:
        bad = np.unravel_index(
            np.argmax(np.maximum(-probs, probs - 1.0)), probs.shape)
        i, x, j = bad
        found.append(Violation(
            kind="probability-range",
            state=machine.states[i], symbol=machine.alphabet[x],
            magnitude=float(probs[bad]),
            message=(f"edge {machine.states[i]} --{machine.alphabet[x]}--> "
                     f"{machine.states[j]} has probability {probs[bad]!r} "
                     f"outside [0, 1]")))
    row_sums = probs.sum(axis=(1, 2))
    for i, total in enumerate(row_sums):
        if abs(total - 1.0) > row_sum_atol:
            found.append(Violation(
                kind="stochasticity",
                state=machine.states[i], magnitude=float(total),
                message=(f"outgoing probabilities of state "
                         f"{machine.states[i]} sum to {total!r}, expected 1")))
    for i in _not_strongly_connected(machine):
        found.append(Violation(
            kind="reachability",
            state=machine.states[i],
            message=f"state {machine.states[i]} is not on a cycle through "
                    f"state {machine.states[0]}"))
    return found


def _reachable_from_first(adjacency) -> set:
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in np.flatnonzero(adjacency[i]):
            if j not in seen:
                seen.add(int(j))
                frontier.append(int(j))
    return seen


def _not_strongly_connected(machine: EpsilonMachine) -> list:
    # Strong connectivity over positive edges: every state must be
    # reachable from state 0 and reach state 0 back.
    adjacency = machine.symbol_matrix() > 0.0
    forward = _reachable_from_first(adjacency)
    backward = _reachable_from_first(adjacency.T)
    return [i for i in range(machine.n_states)
            if i not in forward or i not in backward]


def _require_valid(machine: EpsilonMachine):
    problems = validate(machine)
    if problems:
        raise ContractViolationError("; ".join(str(v) for v in problems))


def stationary(machine: EpsilonMachine, *,
               residual_atol: float = STATIONARY_RESIDUAL_ATOL) -> np.ndarray:
    """Stationary distribution of the state process.

    Solves ``pi (M - I) = 0`` with the normalisation ``sum(pi) = 1``
    folded in as the last equation, where ``M`` is the symbol-summed
    transition matrix.  The solve is checked against the fixed-point
    residual; failure of either the solve or the check means the chain
    is reducible and :class:`ReducibleMachineError` is raised.
    """
    problems = validate(machine)
    if problems:
        if any(v.kind == "reachability" for v in problems):
            raise ReducibleMachineError(
                "no unique stationary distribution: "
                + "; ".join(str(v) for v in problems if v.kind == "reachability"))
        raise ContractViolationError("; ".join(str(v) for v in problems))
    m = machine.symbol_matrix()
    n = machine.n_states
    a = m.T - np.eye(n)
    a[-1, :] = 1.0
    b = np.zeros(n)
    b[-1] = 1.0
    try:
        pi = np.linalg.solve(a, b)
    except np.linalg.LinAlgError:
        raise ReducibleMachineError(
            "no unique stationary distribution: the state graph has more "
            "than one recurrent class") from None
    residual = float(np.max(np.abs(pi @ m - pi)))
    if residual > residual_atol or pi.min() < -1e-9:
        raise ReducibleMachineError(
            "no unique stationary distribution: the state graph has more "
            "than one recurrent class")
    pi = np.where(pi < 0.0, 0.0, pi)
    return pi / pi.sum()


def statistical_complexity(machine: EpsilonMachine) -> float:
    """Shannon entropy, in bits, of the stationary state distribution.

    This is the memory cost of running the machine as a predictor: the
    average number of bits needed to store the current state.  It is a
    property of the presented machine; minimise first if the question
    is about the process rather than this particular presentation.
    """
    return shannon_entropy(stationary(machine))


def minimize(machine: EpsilonMachine, *, tol: float = MERGE_TOL) -> EpsilonMachine:
    """Merge states that generate the same future symbol distribution.

    Partition refinement: all states start in one block, and a block is
    split whenever two member states disagree, by more than ``tol`` in
    total variation, about the joint distribution of (next symbol, block
    of the successor).  When no block splits any further, states of a
    block are observationally equivalent and are collapsed to a single
    state whose label joins the member labels with ``+``.

    Merged rows are averaged over the block members.  For states that
    are genuinely equivalent the rows agree within ``tol`` anyway, so
    the average is a tie-break, not a model change.
    """
    _require_valid(machine)
    n = machine.n_states
    blocks = [0] * n
    n_blocks = 1
    while True:
        signatures = []
        for i in range(n):
            sig = np.zeros((machine.n_symbols, n_blocks))
            for x in range(machine.n_symbols):
                for j in range(n):
                    sig[x, blocks[j]] += machine.probs[i, x, j]
            signatures.append(sig.ravel())
        new_blocks = [-1] * n
        representatives = []   # (new block id, old block id, signature)
        for i in range(n):
            for b, old, sig in representatives:
                if old != blocks[i]:
                    continue
                if 0.5 * np.sum(np.abs(sig - signatures[i])) <= tol:
                    new_blocks[i] = b
                    break
            if new_blocks[i] < 0:
                new_blocks[i] = len(representatives)
                representatives.append((new_blocks[i], blocks[i], signatures[i]))
        if new_blocks == blocks:
            break
        blocks = new_blocks
        n_blocks = len(representatives)

    if n_blocks == n:
        return machine
    members = [[] for _ in range(n_blocks)]
    for i in range(n):
        members[blocks[i]].append(i)
    order = sorted(range(n_blocks), key=lambda b: members[b][0])
    rank = {b: k for k, b in enumerate(order)}
    labels = tuple(
        "+".join(machine.states[i] for i in members[b]) for b in order)
    probs = np.zeros((n_blocks, machine.n_symbols, n_blocks))
    for b in range(n_blocks):
        rows = machine.probs[members[b]]           # (len(block), n_symbols, n)
        mean = rows.mean(axis=0)
        for j in range(n):
            probs[rank[b], :, rank[blocks[j]]] += mean[:, j]
    return EpsilonMachine(labels, machine.alphabet, probs)


def _block_machine(p: float, b_row, d_row) -> EpsilonMachine:
    if not 0.0 <= p <= 1.0:
        raise ContractViolationError(f"gate parameter p={p!r} outside [0, 1]")
    edges = [
        ("A", "0", "B", 0.5), ("A", "1", "D", 0.5),
        ("C", "0", "A", p), ("C", "1", "A", 1.0 - p),
        ("E", "1", "A", p), ("E", "0", "A", 1.0 - p),
    ]
    edges += [("B", sym, to, pr) for sym, to, pr in b_row]
    edges += [("D", sym, to, pr) for sym, to, pr in d_row]
    edges = [e for e in edges if e[3] > 0.0]
    return EpsilonMachine.from_transitions(
        "ABCDE", ("0", "1"), edges)


def build_and_process(p: float) -> EpsilonMachine:
    """Machine emitting blocks ``x1 x2 y`` where ``y = x1 AND x2`` with
    probability ``p`` (and the flipped bit otherwise).

    The inputs ``x1, x2`` are fair coin flips.  States: ``A`` at a block
    boundary, ``B``/``D`` after a first bit of 0/1, ``C``/``E`` when the
    pending gate output is 0/1.
    """
    return _block_machine(
        p,
        b_row=[("0", "C", 0.5), ("1", "C", 0.5)],
        d_row=[("0", "C", 0.5), ("1", "E", 0.5)])


def build_xor_process(p: float) -> EpsilonMachine:
    """Same block structure as :func:`build_and_process` with XOR as the gate."""
    return _block_machine(
        p,
        b_row=[("0", "C", 0.5), ("1", "E", 0.5)],
        d_row=[("0", "E", 0.5), ("1", "C", 0.5)])


@dataclass(frozen=True)
class SymbolSequence:
    """A sampled trajectory: emitted symbols plus the visited state path.

    ``states`` has one more entry than ``symbols`` (it includes the
    initial state), so ``states[t] --symbols[t]--> states[t+1]``.
    """

    symbols: tuple
    states: tuple
    seed: int

    def __len__(self):
        return len(self.symbols)


def sample(machine: EpsilonMachine, n: int, seed: int) -> SymbolSequence:
    """Draw ``n`` steps starting from the stationary state distribution.

    Sampling is driven by ``numpy.random.default_rng(seed)``, so equal
    seeds give byte-identical trajectories.
    """
    if n < 0:
        raise ContractViolationError(f"sample length {n} is negative")
    pi = stationary(machine)
    rng = np.random.default_rng(seed)

    # Per-state cumulative edge tables; bisect keeps the hot loop cheap.
    tables = []
    for i in range(machine.n_states):
        flat = machine.probs[i].ravel()
        idx = np.flatnonzero(flat > 0.0)
        cum = np.cumsum(flat[idx])
        cum[-1] = 1.0
        edges = [(int(k) // machine.n_states, int(k) % machine.n_states) for k in idx]
        tables.append((cum.tolist(), edges))

    state = int(rng.choice(machine.n_states, p=pi))
    path = [state]
    symbols = []
    draws = rng.random(n)
    for t in range(n):
        cum, edges = tables[state]
        x, state = edges[bisect.bisect_right(cum, draws[t])]
        symbols.append(machine.alphabet[x])
        path.append(state)
    return SymbolSequence(
        symbols=tuple(symbols),
        states=tuple(machine.states[i] for i in path),
        seed=seed)


def is_retrodictively_deterministic(machine: EpsilonMachine, *,
                                    atol: float = RETRODICTION_ATOL) -> bool:
    """Whether each (symbol, target state) pair has at most one source.

    Machines with this property can be run backwards without ambiguity,
    and their quantum encodings keep the causal states orthogonal.
    """
    _require_valid(machine)
    for j in range(machine.n_states):
        for x in range(machine.n_symbols):
            if int(np.sum(machine.probs[:, x, j] > atol)) > 1:
                return False
    return True


# --- JSON interchange ---------------------------------------------------
#
# {"alphabet": [...], "states": [...],
#  "transitions": [{"from": ..., "symbol": ..., "to": ..., "p": ...}, ...]}
#
# Zero-probability edges are omitted.  Unknown fields are rejected rather
# than ignored so that typos fail loudly.

_TOP_KEYS = {"alphabet", "states", "transitions"}
_EDGE_KEYS = {"from", "symbol", "to", "p"}


def machine_to_json(machine: EpsilonMachine) -> str:
    doc = {
        "alphabet": list(machine.alphabet),
        "states": list(machine.states),
        "transitions": [
            {"from": frm, "symbol": sym, "to": to, "p": p}
            for frm, sym, to, p in machine.transitions()],
    }
    return json.dumps(doc, indent=2) + "\n"


def machine_from_json(text: str) -> EpsilonMachine:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MachineFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MachineFormatError("top level must be an object")
    extra = set(doc) - _TOP_KEYS
    if extra:
        raise MachineFormatError(f"unknown field {sorted(extra)[0]!r}")
    missing = _TOP_KEYS - set(doc)
    if missing:
        raise MachineFormatError(f"missing field {sorted(missing)[0]!r}")
    states = doc["states"]
    alphabet = doc["alphabet"]
    for name, seq in (("states", states), ("alphabet", alphabet)):
        if (not isinstance(seq, list) or not seq
                or not all(isinstance(s, str) for s in seq)):
            raise MachineFormatError(f"{name!r} must be a nonempty list of strings")
    if not isinstance(doc["transitions"], list):
        raise MachineFormatError("'transitions' must be a list")
    edges = []
    for entry in doc["transitions"]:
        if not isinstance(entry, dict):
            raise MachineFormatError("each transition must be an object")
        extra = set(entry) - _EDGE_KEYS
        if extra:
            raise MachineFormatError(
                f"unknown field {sorted(extra)[0]!r} in transition")
        missing = _EDGE_KEYS - set(entry)
        if missing:
            raise MachineFormatError(
                f"missing field {sorted(missing)[0]!r} in transition")
        if not isinstance(entry["p"], (int, float)) or isinstance(entry["p"], bool):
            raise MachineFormatError(f"transition probability {entry['p']!r} is not a number")
        edges.append((entry["from"], entry["symbol"], entry["to"], float(entry["p"])))
    try:
        return EpsilonMachine.from_transitions(states, alphabet, edges)
    except ContractViolationError as exc:
        raise MachineFormatError(str(exc)) from None

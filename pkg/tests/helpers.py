"""Shared test utilities: machine generators and independent oracles.

The oracles here deliberately avoid the code paths they check:
eigenvalues via the characteristic polynomial, word distributions by
direct enumeration, density matrices handed to numpy's eigensolver.
"""

import numpy as np

from qcomplexity import EpsilonMachine


def random_machine(rng, max_states=6):
    """Random valid machine: a cycle skeleton through all states keeps it
    strongly connected; extra edges and the row normalization are random."""
    n = int(rng.integers(2, max_states + 1))
    n_sym = int(rng.integers(1, 4))
    probs = np.zeros((n, n_sym, n))
    for i in range(n):
        probs[i, rng.integers(n_sym), (i + 1) % n] = rng.uniform(0.5, 1.5)
        for _ in range(int(rng.integers(0, 3))):
            probs[i, rng.integers(n_sym), rng.integers(n)] += rng.uniform(0.1, 1.0)
        probs[i] /= probs[i].sum()
    states = tuple(f"S{i}" for i in range(n))
    alphabet = tuple(str(x) for x in range(n_sym))
    return EpsilonMachine(states, alphabet, probs)


def charpoly_eigenvalues(h):
    """Eigenvalues via Faddeev-LeVerrier coefficients and np.roots.

    Independent of any iterative eigensolver; accurate enough for the
    small well-conditioned matrices it is used on (dim <= 5).
    """
    a = np.asarray(h, dtype=complex)
    n = a.shape[0]
    m = np.zeros_like(a)
    coeffs = [1.0]
    c = 1.0
    for k in range(1, n + 1):
        m = a @ m + c * np.eye(n)
        c = -np.trace(a @ m).real / k
        coeffs.append(c)
    roots = np.roots(coeffs)
    return np.sort(roots.real)[::-1]


def word_distribution(machine, state_label, length):
    """Exact conditional distribution of the next `length` symbols given
    the current state, by explicit enumeration."""
    start = machine.states.index(state_label)
    dist = {}

    def walk(state, prefix, prob):
        if len(prefix) == length:
            dist[prefix] = dist.get(prefix, 0.0) + prob
            return
        for x in range(machine.n_symbols):
            for j in range(machine.n_states):
                p = machine.probs[state, x, j]
                if p > 0.0:
                    walk(j, prefix + (machine.alphabet[x],), prob * p)

    walk(start, (), 1.0)
    return dist


def total_variation(dist_a, dist_b):
    keys = set(dist_a) | set(dist_b)
    return 0.5 * sum(abs(dist_a.get(k, 0.0) - dist_b.get(k, 0.0)) for k in keys)


def aligned_blocks(sequence, block_start_state="A", block_length=3):
    """Cut a sampled trajectory into blocks that begin at the given state,
    using the hidden state path for alignment."""
    first = sequence.states.index(block_start_state)
    symbols = sequence.symbols
    blocks = []
    for t in range(first, len(symbols) - block_length + 1, block_length):
        assert sequence.states[t] == block_start_state
        blocks.append(symbols[t:t + block_length])
    return blocks

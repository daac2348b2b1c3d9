import math

import numpy as np
import pytest

from helpers import random_machine
from qcomplexity import (ContractViolationError, EpsilonMachine,
                         build_and_process, build_xor_process,
                         causal_state_vectors, complexity_sweep,
                         density_operator, gram_matrix,
                         is_retrodictively_deterministic, minimize,
                         quantum_complexity, statistical_complexity,
                         weighted_gram)

AND_SPECTRUM = sorted([1 / 3, 1 / 4, 1 / 4, 1 / 12, 1 / 12], reverse=True)


def basis_index(machine, state_label, symbol):
    return (machine.states.index(state_label) * machine.n_symbols
            + machine.alphabet.index(symbol))


def test_vectors_for_block_start_state():
    m = build_and_process(1.0)
    ens = causal_state_vectors(m)
    vec = ens.vectors[m.states.index("A")]
    expected = np.zeros(10)
    expected[basis_index(m, "B", "0")] = 1 / math.sqrt(2)
    expected[basis_index(m, "D", "1")] = 1 / math.sqrt(2)
    assert np.max(np.abs(vec - expected)) < 1e-12


def test_vectors_for_gate_output_state():
    p = 0.3
    m = build_and_process(p)
    ens = causal_state_vectors(m)
    vec = ens.vectors[m.states.index("C")]
    expected = np.zeros(10)
    expected[basis_index(m, "A", "0")] = math.sqrt(p)
    expected[basis_index(m, "A", "1")] = math.sqrt(1 - p)
    assert np.max(np.abs(vec - expected)) < 1e-12


def test_vectors_deterministic_cycle_are_orthogonal_basis():
    m = EpsilonMachine.from_transitions(
        ("S", "T"), ("0", "1"),
        [("S", "0", "T", 1.0), ("T", "1", "S", 1.0)])
    ens = causal_state_vectors(m)
    g = gram_matrix(ens)
    assert np.allclose(g, np.eye(2), atol=1e-12)
    assert np.count_nonzero(np.abs(ens.vectors) > 1e-12) == 2


def test_ensemble_metadata_and_weights():
    m = build_and_process(0.5)
    raw = causal_state_vectors(m)
    assert raw.minimal is False
    reduced = causal_state_vectors(minimize(m))
    assert reduced.minimal is True
    assert np.allclose(raw.weights, [1 / 3, 1 / 6, 1 / 4, 1 / 6, 1 / 12])
    assert np.allclose(np.linalg.norm(raw.vectors, axis=1), 1.0, atol=1e-12)


def test_gram_overlaps():
    m = build_and_process(1.0)
    g = gram_matrix(causal_state_vectors(m))
    i, j = m.states.index("B"), m.states.index("D")
    assert abs(g[i, j] - 0.5) < 1e-12
    assert np.allclose(np.diag(g), 1.0)
    assert np.allclose(g, g.T)


def test_gram_changed_pair_overlap():
    for p in (0.1, 0.25, 0.8):
        m = build_and_process(p)
        g = gram_matrix(causal_state_vectors(m))
        i, j = m.states.index("C"), m.states.index("E")
        assert abs(g[i, j] - 2 * math.sqrt(p * (1 - p))) < 1e-12


def test_quantum_complexity_and_machine():
    got = quantum_complexity(build_and_process(1.0))
    assert abs(got - 2.1258145836939114) < 1e-9
    assert abs(got - 2.13) < 0.005


def test_weighted_gram_spectrum_matches_full_density_oracle():
    from qcomplexity import hermitian_eigenvalues
    m = minimize(build_and_process(1.0))
    ens = causal_state_vectors(m)
    small = hermitian_eigenvalues(weighted_gram(ens))
    assert np.max(np.abs(small - AND_SPECTRUM)) < 1e-9
    rho = density_operator(ens)
    assert rho.shape == (10, 10)
    full = np.sort(np.linalg.eigvalsh(rho))[::-1]
    assert np.max(np.abs(full[:5] - small)) < 1e-9
    assert np.max(np.abs(full[5:])) < 1e-12
    assert abs(np.trace(rho) - 1.0) < 1e-12


def test_weighted_gram_spectrum_sums_to_one():
    from qcomplexity import hermitian_eigenvalues
    rng = np.random.default_rng(41)
    for _ in range(25):
        m = minimize(random_machine(rng))
        spectrum = hermitian_eigenvalues(weighted_gram(causal_state_vectors(m)))
        assert abs(float(np.sum(spectrum)) - 1.0) < 1e-9


def test_quantum_complexity_collapses_at_half():
    assert quantum_complexity(build_and_process(0.5)) == 0.0


def test_xor_orthogonal_endpoint():
    m = build_xor_process(1.0)
    g = gram_matrix(causal_state_vectors(m))
    assert np.allclose(g, np.eye(5), atol=1e-12)
    c_mu = statistical_complexity(m)
    c_q = quantum_complexity(m)
    assert abs(c_q - c_mu) < 1e-9
    assert abs(c_q - 2.251629167387823) < 1e-9


def test_retrodictively_deterministic_means_no_quantum_advantage():
    machines = [build_xor_process(0.0), build_xor_process(1.0)]
    machines.append(EpsilonMachine.from_transitions(
        ("S", "T", "U"), ("a", "b"),
        [("S", "a", "T", 1.0), ("T", "b", "U", 1.0), ("U", "a", "S", 0.5),
         ("U", "b", "S", 0.5)]))
    for m in machines:
        assert is_retrodictively_deterministic(m)
        assert abs(quantum_complexity(m) - statistical_complexity(minimize(m))) < 1e-9


def test_quantum_never_exceeds_classical():
    rng = np.random.default_rng(43)
    machines = [build_and_process(p) for p in np.linspace(0, 1, 21)]
    machines += [build_xor_process(p) for p in np.linspace(0, 1, 21)]
    machines += [random_machine(rng) for _ in range(50)]
    for m in machines:
        reduced = minimize(m)
        assert (quantum_complexity(reduced)
                <= statistical_complexity(reduced) + 1e-9)


def test_sweep_symmetry_and_monotonicity():
    grid = [i / 20 for i in range(21)]
    table = complexity_sweep("and", grid)
    assert [row[0] for row in table.rows] == grid
    rows = table.rows
    for i in range(21):
        assert abs(rows[i][2] - rows[20 - i][2]) < 1e-9
    first_half = [rows[i][2] for i in range(10)]
    assert all(a > b for a, b in zip(first_half, first_half[1:]))
    assert rows[10][1] == 0.0
    assert rows[10][2] == 0.0


def test_sweep_endpoints_and_midpoint():
    table = complexity_sweep("and", [1.0, 0.0, 0.5])   # sorted on output
    assert [row[0] for row in table.rows] == [0.0, 0.5, 1.0]
    assert abs(table.rows[0][2] - 2.1258145836939114) < 1e-9
    assert abs(table.rows[2][2] - 2.1258145836939114) < 1e-9
    assert table.rows[1][1:] == (0.0, 0.0)


def test_sweep_rejects_unknown_family():
    with pytest.raises(ContractViolationError):
        complexity_sweep("nand", [0.5])


def test_sweep_csv_shape():
    table = complexity_sweep("xor", [0.0, 0.25, 1.0], include_raw=True)
    text = table.to_csv()
    lines = text.strip().split("\n")
    assert lines[0] == "p,c_mu_bits,c_q_qubits,c_mu_raw_bits,c_q_raw_qubits"
    assert len(lines) == 4
    assert lines[1].startswith("0,")
    # 12 significant digits
    assert "2.25162916739" in lines[1]
    plain = complexity_sweep("xor", [0.0]).to_csv()
    assert plain.splitlines()[0] == "p,c_mu_bits,c_q_qubits"


def test_xor_intermediate_gap_is_real_but_vanishes_at_ends():
    # the two costs genuinely differ off the endpoints for this family
    table = complexity_sweep("xor", [0.0, 0.25, 0.5, 1.0])
    by_p = {row[0]: row for row in table.rows}
    assert abs(by_p[0.0][1] - by_p[0.0][2]) < 1e-9
    assert abs(by_p[1.0][1] - by_p[1.0][2]) < 1e-9
    assert by_p[0.25][1] - by_p[0.25][2] > 0.1

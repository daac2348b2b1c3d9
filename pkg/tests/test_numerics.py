import math

import numpy as np
import pytest

from helpers import charpoly_eigenvalues
from qcomplexity import (ContractViolationError, hermitian_eigenvalues,
                         shannon_entropy, tensor_product, von_neumann_entropy)

AND_SPECTRUM = [1 / 3, 1 / 4, 1 / 4, 1 / 12, 1 / 12]
AND_STATIONARY = [1 / 3, 1 / 6, 1 / 4, 1 / 6, 1 / 12]


def test_eigenvalues_identity():
    assert np.allclose(hermitian_eigenvalues(np.eye(2)), [1.0, 1.0])


def test_eigenvalues_pauli_x():
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    assert np.allclose(hermitian_eigenvalues(sx), [1.0, -1.0], atol=1e-12)


def test_eigenvalues_complex_2x2():
    h = np.array([[1.0, -2j], [2j, -1.0]])
    got = hermitian_eigenvalues(h)
    assert np.allclose(got, [math.sqrt(5), -math.sqrt(5)], atol=1e-12)


def test_eigenvalues_match_charpoly_oracle():
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(2, 5))
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (b + b.conj().T) / 2
        got = hermitian_eigenvalues(h)
        assert np.max(np.abs(got - charpoly_eigenvalues(h))) < 1e-8


def test_eigenvalue_sum_equals_trace():
    rng = np.random.default_rng(3)
    for _ in range(100):
        n = int(rng.integers(2, 9))
        b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = (b + b.conj().T) / 2
        got = hermitian_eigenvalues(h)
        assert abs(float(np.sum(got)) - float(np.trace(h).real)) < 1e-9 * n
        assert np.all(np.diff(got) <= 1e-12)   # descending


def test_eigenvalues_reject_non_square():
    with pytest.raises(ContractViolationError):
        hermitian_eigenvalues(np.zeros((2, 3)))


def test_eigenvalues_reject_non_hermitian_naming_entry():
    bad = np.array([[1.0, 0.5], [0.0, 1.0]])
    with pytest.raises(ContractViolationError) as err:
        hermitian_eigenvalues(bad)
    assert "(0, 1)" in str(err.value)


def test_shannon_point_mass_is_exactly_zero():
    value = shannon_entropy([1.0, 0.0, 0.0])
    assert value == 0.0
    assert math.copysign(1.0, value) == 1.0


def test_shannon_uniform():
    assert abs(shannon_entropy([0.25] * 4) - 2.0) < 1e-12


def test_shannon_block_process_value():
    got = shannon_entropy(AND_STATIONARY)
    assert abs(got - 2.188721875540867) < 1e-12
    assert abs(got - 2.19) < 0.005


def test_shannon_permutation_invariant():
    rng = np.random.default_rng(5)
    for _ in range(20):
        w = rng.dirichlet(np.ones(6))
        assert abs(shannon_entropy(w) - shannon_entropy(w[::-1])) < 1e-12


def test_shannon_rejects_negative_weight():
    with pytest.raises(ContractViolationError):
        shannon_entropy([1.1, -0.1])


def test_shannon_rejects_bad_sum():
    with pytest.raises(ContractViolationError):
        shannon_entropy([0.5, 0.4])


def test_von_neumann_pure_and_maximally_mixed():
    assert von_neumann_entropy([1.0, 0.0]) == 0.0
    assert abs(von_neumann_entropy([0.5, 0.5]) - 1.0) < 1e-12


def test_von_neumann_block_spectrum_value():
    got = von_neumann_entropy(AND_SPECTRUM)
    assert abs(got - 2.1258145836939114) < 1e-12
    assert abs(got - 2.13) < 0.005


def test_von_neumann_clamps_eigensolver_debris():
    assert von_neumann_entropy([1.0, -5e-11]) == 0.0
    assert abs(von_neumann_entropy([1.0 + 5e-11, -5e-11])) < 1e-9


def test_von_neumann_rejects_genuinely_negative():
    with pytest.raises(ContractViolationError):
        von_neumann_entropy([1.001, -1e-3])


def test_von_neumann_equals_shannon_on_diagonal_density():
    rng = np.random.default_rng(17)
    for _ in range(30):
        w = rng.dirichlet(np.ones(int(rng.integers(2, 9))))
        spectrum = hermitian_eigenvalues(np.diag(w))
        assert abs(von_neumann_entropy(spectrum) - shannon_entropy(w)) < 1e-10


def test_tensor_product_basis_vectors():
    zero = np.array([1.0, 0.0])
    one = np.array([0.0, 1.0])
    assert np.allclose(tensor_product(zero, one), [0, 1, 0, 0])
    plus = np.array([1.0, 1.0]) / math.sqrt(2)
    assert np.allclose(tensor_product(plus, zero),
                       [1 / math.sqrt(2), 0, 1 / math.sqrt(2), 0])


def test_tensor_product_builds_entangled_sum():
    zero = np.array([1.0, 0.0])
    one = np.array([0.0, 1.0])
    bell = (tensor_product(zero, zero) + tensor_product(one, one)) / math.sqrt(2)
    assert np.allclose(bell, [1 / math.sqrt(2), 0, 0, 1 / math.sqrt(2)])


def test_tensor_product_matrices_and_associativity():
    rng = np.random.default_rng(23)
    a = rng.normal(size=(2, 2))
    b = rng.normal(size=(3, 3))
    c = rng.normal(size=(2, 2))
    left = tensor_product(tensor_product(a, b), c)
    right = tensor_product(a, tensor_product(b, c))
    assert np.allclose(left, right, atol=1e-12)
    u = rng.normal(size=4)
    v = rng.normal(size=3)
    w = rng.normal(size=2)
    assert np.allclose(tensor_product(tensor_product(u, v), w),
                       tensor_product(u, tensor_product(v, w)), atol=1e-12)


def test_tensor_product_rejects_mixed_kinds():
    with pytest.raises(ContractViolationError):
        tensor_product(np.zeros(2), np.zeros((2, 2)))

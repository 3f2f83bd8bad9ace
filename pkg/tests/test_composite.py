import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realqm import oracle
from realqm.composite import (
    PARITY_CONTRACTOR,
    RawPairKet,
    ancilla_witness,
    counterexample_report,
    modified_tensor_operator,
    modified_tensor_state,
    naive_tensor,
    pair_ket,
    parity_contract,
)
from realqm.algebra import real_mul
from realqm.exceptions import BlockStructureViolation, ValidationError
from realqm.realify import J, realify_ket, realify_operator, realify_state

seeds = st.integers(min_value=0, max_value=2**63 - 1)


def _unit_pair(pair, ij, d1=2, d2=2):
    v = np.zeros(4 * d1 * d2)
    v[pair * d1 * d2 + ij] = 1.0
    return RawPairKet(d1, d2, v)


def test_contractor_matrix():
    assert np.array_equal(PARITY_CONTRACTOR, [[1, 0, 0, -1], [0, 1, 1, 0]])


def test_contractor_is_complex_multiplication_table():
    # Brute force over the flag basis: flag 0 -> 1, flag 1 -> i.
    unit = {0: 1, 1: 1j}
    for p, (f1, f2) in enumerate([(0, 0), (0, 1), (1, 0), (1, 1)]):
        z = unit[f1] * unit[f2]
        assert PARITY_CONTRACTOR[:, p].tolist() == [z.real, z.imag]


@pytest.mark.parametrize("pair, block, sign", [(0, 0, 1), (1, 1, 1), (2, 1, 1), (3, 0, -1)])
def test_parity_unit_vectors(pair, block, sign):
    out = parity_contract(_unit_pair(pair, 2))
    expected = np.zeros(8)
    expected[block * 4 + 2] = sign
    assert np.array_equal(out.data, expected)


def test_parity_sign_forced_by_i_times_i():
    psi = oracle.ket([1j])
    got = parity_contract(pair_ket(realify_ket(psi), realify_ket(psi)))
    assert np.array_equal(got.data, realify_ket(oracle.tensor(psi, psi)).data)
    assert np.array_equal(got.data, [-1.0, 0.0])


def test_plain_parity_without_sign_fails():
    unsigned = np.abs(PARITY_CONTRACTOR)
    psi = oracle.ket([1j])
    raw = pair_ket(realify_ket(psi), realify_ket(psi)).data.reshape(4, 1)
    assert not np.allclose((unsigned @ raw).ravel(), realify_ket(oracle.tensor(psi, psi)).data)


def test_from_kron_layout():
    psi, phi = oracle.sample("pure", 2, 1), oracle.sample("pure", 3, 2)
    raw = pair_ket(realify_ket(psi), realify_ket(phi)).data.reshape(2, 2, 2, 3)
    a, b = psi.real.ravel(), psi.imag.ravel()
    c, e = phi.real.ravel(), phi.imag.ravel()
    assert np.allclose(raw[0, 0], np.outer(a, c))
    assert np.allclose(raw[0, 1], np.outer(a, e))
    assert np.allclose(raw[1, 0], np.outer(b, c))
    assert np.allclose(raw[1, 1], np.outer(b, e))


def test_raw_pair_ket_validates_length():
    with pytest.raises(ValidationError):
        RawPairKet(2, 2, np.zeros(15))


@settings(max_examples=200, deadline=None)
@given(seed=seeds, d1=st.integers(1, 6), d2=st.integers(1, 6))
def test_parity_identity(seed, d1, d2):
    psi, phi = oracle.sample("pure", d1, seed), oracle.sample("pure", d2, seed ^ 5)
    got = parity_contract(pair_ket(realify_ket(psi), realify_ket(phi)))
    assert np.max(np.abs(got.data - realify_ket(oracle.tensor(psi, phi)).data)) <= 1e-13


def test_naive_tensor_examples():
    Ji = realify_operator([[1j]])
    assert np.array_equal(naive_tensor(Ji, Ji), np.kron(J, J))
    out = naive_tensor(realify_operator([[1j]]), realify_operator(oracle.sample("generic", 2, 0)))
    assert out.shape == (8, 8)
    assert realify_operator(oracle.tensor([[1j]], oracle.sample("generic", 2, 0))).shape == (4, 4)


def test_naive_tensor_of_real_matrices():
    R1, R2 = np.array([[1.0, 2.0], [3.0, 4.0]]), np.array([[0.0, 1.0], [5.0, 2.0]])
    out = naive_tensor(realify_operator(R1), realify_operator(R2))
    # kron(diag(R1, R1), diag(R2, R2)): both diagonal blocks are R1 (x) diag(R2, R2).
    block = np.kron(R1, np.kron(np.eye(2), R2))
    assert np.array_equal(out[:8, :8], block)
    assert np.array_equal(out[8:, 8:], block)
    assert not out[:8, 8:].any() and not out[8:, :8].any()


@pytest.mark.parametrize("d1", range(1, 5))
@pytest.mark.parametrize("d2", range(1, 5))
def test_naive_dimension_law(d1, d2):
    M1 = realify_operator(oracle.sample("generic", d1, d1))
    M2 = realify_operator(oracle.sample("generic", d2, d2))
    assert naive_tensor(M1, M2).shape == (4 * d1 * d2, 4 * d1 * d2)
    assert modified_tensor_operator(M1, M2).shape == (2 * d1 * d2, 2 * d1 * d2)


def test_modified_tensor_examples():
    Ji = realify_operator([[1j]])
    assert np.array_equal(modified_tensor_operator(Ji, Ji).data, -np.eye(2))
    M = realify_operator(oracle.sample("generic", 3, 4))
    assert np.array_equal(modified_tensor_operator(M, realify_operator([[1]])).data, M.data)


@pytest.mark.parametrize("seed", range(10))
def test_modified_tensor_operator_matches_oracle(seed):
    V1, V2 = oracle.sample("generic", 3, seed), oracle.sample("generic", 2, seed + 1)
    got = modified_tensor_operator(realify_operator(V1), realify_operator(V2))
    assert np.max(np.abs(got.data - realify_operator(oracle.tensor(V1, V2)).data)) <= 1e-13


def test_modified_tensor_rectangular():
    V1 = oracle.sample("generic", 2, 1, cols=3)
    V2 = oracle.sample("generic", 1, 2, cols=2)
    got = modified_tensor_operator(realify_operator(V1), realify_operator(V2))
    assert np.allclose(got.data, realify_operator(oracle.tensor(V1, V2)).data, atol=1e-14)


def test_modified_tensor_equals_identity_plus_j_decomposition():
    V1, V2 = oracle.sample("generic", 2, 3), oracle.sample("generic", 2, 4)
    T = oracle.tensor(V1, V2)
    expected = np.kron(np.eye(2), T.real) + np.kron(J, T.imag)
    got = modified_tensor_operator(realify_operator(V1), realify_operator(V2))
    assert np.allclose(got.data, expected, atol=1e-14)


def test_modified_tensor_rejects_unstructured():
    with pytest.raises(BlockStructureViolation):
        modified_tensor_operator(np.diag([1.0, 2.0]), realify_operator([[1]]))


def test_modified_tensor_state_examples():
    zero = realify_state(np.diag([1, 0]))
    out = modified_tensor_state(zero, zero)
    assert np.array_equal(out.data, realify_state(np.diag([1, 0, 0, 0])).data)


@pytest.mark.parametrize("seed", range(10))
def test_modified_tensor_state_matches_oracle(seed):
    r1, r2 = oracle.sample("density", 2, seed), oracle.sample("density", 3, seed + 1)
    got = modified_tensor_state(realify_state(r1), realify_state(r2))
    assert abs(np.trace(got.data) - 1) <= 1e-12
    assert np.max(np.abs(got.data - realify_state(oracle.tensor(r1, r2)).data)) <= 1e-12


def test_modified_tensor_state_requires_states():
    with pytest.raises(ValidationError):
        modified_tensor_state(realify_operator(np.eye(2) / 2), realify_state(np.eye(2) / 2))
    with pytest.raises(ValidationError):
        modified_tensor_operator(realify_state(np.eye(2) / 2), realify_operator(np.eye(2)))


@settings(max_examples=100, deadline=None)
@given(seed=seeds, d1=st.integers(1, 3), d2=st.integers(1, 3), d3=st.integers(1, 3))
def test_three_party_associativity(seed, d1, d2, d3):
    V = [oracle.sample("generic", d, seed ^ k) for k, d in enumerate((d1, d2, d3))]
    M = [realify_operator(v) for v in V]
    left = modified_tensor_operator(modified_tensor_operator(M[0], M[1]), M[2])
    right = modified_tensor_operator(M[0], modified_tensor_operator(M[1], M[2]))
    target = realify_operator(oracle.tensor_all(*V)).data
    assert np.max(np.abs(left.data - target)) <= 1e-12
    assert np.max(np.abs(right.data - target)) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(seed=seeds, d1=st.integers(1, 3), d2=st.integers(1, 3))
def test_mixed_product_rule(seed, d1, d2):
    A1, A2 = oracle.sample("generic", d1, seed), oracle.sample("generic", d1, seed ^ 1)
    B1, B2 = oracle.sample("generic", d2, seed ^ 2), oracle.sample("generic", d2, seed ^ 3)
    M1, M2, N1, N2 = (realify_operator(x) for x in (A1, A2, B1, B2))
    lhs = modified_tensor_operator(real_mul(M1, M2), real_mul(N1, N2))
    rhs = real_mul(modified_tensor_operator(M1, N1), modified_tensor_operator(M2, N2))
    assert np.max(np.abs(lhs.data - rhs.data)) <= 1e-12


def test_witness_examples():
    assert not ancilla_witness(realify_operator(oracle.tensor(oracle.Z, oracle.I2))).uses_shared_ancilla
    w = ancilla_witness(realify_operator(oracle.tensor(oracle.S_PHASE, oracle.I2)))
    assert w.uses_shared_ancilla and w.xz_component_norm == 1.0
    assert not ancilla_witness(realify_operator(oracle.H)).uses_shared_ancilla


def test_witness_iff_condition():
    errors = 0
    for t in range(500):
        A = oracle.sample("generic", 1 + t % 6, t)
        for M in (A, A.real.astype(complex)):
            expected = np.max(np.abs(M.imag)) > 1e-10
            errors += ancilla_witness(realify_operator(M)).uses_shared_ancilla != expected
    assert errors == 0


def test_witness_threshold():
    A = np.eye(2) + 1e-12j * np.ones((2, 2))
    assert not ancilla_witness(realify_operator(A)).uses_shared_ancilla
    assert ancilla_witness(realify_operator(A), tol=1e-13).uses_shared_ancilla


def test_counterexample_scalar_i():
    r = counterexample_report(1, 1, 0, V1=[[1j]], V2=[[1j]])
    assert r.metrics["naive_dimension"] == 4
    assert r.metrics["realified_tensor_dimension"] == 2
    assert r.verdicts["incompatible"]


def test_counterexample_seeded_and_deterministic():
    r = counterexample_report(2, 2, 12)
    assert r.verdicts["incompatible"] and r.passed
    assert r.to_json() == counterexample_report(2, 2, 12).to_json()


def test_counterexample_rejects_bad_dims():
    with pytest.raises(ValidationError):
        counterexample_report(0, 2, 1)

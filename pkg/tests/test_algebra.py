import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realqm import oracle
from realqm.algebra import (
    RealifiedChannel,
    is_orthogonal,
    real_add,
    real_apply_channel,
    real_evolve,
    real_expectation,
    real_mul,
)
from realqm.exceptions import DimensionMismatch, ValidationError
from realqm.realify import realify_operator, realify_state
from realqm._validation import block_asymmetry

seeds = st.integers(min_value=0, max_value=2**63 - 1)
h = 1 / np.sqrt(2)


def test_add_i_and_minus_i():
    assert np.array_equal(real_add(realify_operator([[1j]]), realify_operator([[-1j]])).data, np.zeros((2, 2)))


def test_add_zero():
    A = oracle.sample("generic", 3, 1)
    assert np.array_equal(real_add(realify_operator(A), realify_operator(np.zeros((3, 3)))).data,
                          realify_operator(A).data)


def test_add_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        real_add(realify_operator(np.eye(2)), realify_operator(np.eye(3)))


def test_mul_i_squared():
    assert np.array_equal(real_mul(realify_operator([[1j]]), realify_operator([[1j]])).data, -np.eye(2))


def test_mul_pauli():
    got = real_mul(realify_operator(oracle.X), realify_operator(oracle.Z))
    assert np.array_equal(got.data, realify_operator(oracle.X @ oracle.Z).data)


def test_mul_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        real_mul(realify_operator(np.ones((2, 3))), realify_operator(np.ones((2, 3))))


def test_operator_dunder_methods():
    A, B = oracle.sample("generic", 2, 1), oracle.sample("generic", 2, 2)
    MA, MB = realify_operator(A), realify_operator(B)
    assert np.allclose((MA @ MB).data, realify_operator(A @ B).data, atol=1e-14)
    assert np.allclose((MA + MB).data, realify_operator(A + B).data, atol=1e-15)


@pytest.mark.parametrize("seed", range(5))
def test_add_mul_match_oracle_d4(seed):
    A, B = oracle.sample("generic", 4, seed), oracle.sample("generic", 4, seed + 50)
    assert np.max(np.abs(real_add(realify_operator(A), realify_operator(B)).data
                         - realify_operator(A + B).data)) <= 1e-14
    assert np.max(np.abs(real_mul(realify_operator(B), realify_operator(A)).data
                         - realify_operator(B @ A).data)) <= 1e-13


def test_homomorphisms_1000_trials():
    add_err = mul_err = closure = 0.0
    for t in range(1000):
        d = 1 + t % 8
        V1, V2 = oracle.sample("generic", d, 2 * t), oracle.sample("generic", d, 2 * t + 1)
        R1, R2 = realify_operator(V1), realify_operator(V2)
        s, p = real_add(R1, R2), real_mul(R2, R1)
        add_err = max(add_err, np.max(np.abs(s.data - realify_operator(V1 + V2).data)))
        mul_err = max(mul_err, np.max(np.abs(p.data - realify_operator(V2 @ V1).data)))
        closure = max(closure, block_asymmetry(s.data), block_asymmetry(p.data))
    assert add_err <= 1e-14
    assert mul_err <= 1e-13
    assert closure <= 1e-12


def test_evolve_identity():
    rho = realify_state(oracle.sample("density", 2, 3))
    assert np.array_equal(real_evolve(rho, realify_operator(np.eye(2))).data, rho.data)


def test_evolve_x_flips():
    out = real_evolve(realify_state(np.diag([1, 0])), realify_operator(oracle.X))
    assert np.array_equal(out.data, realify_state(np.diag([0, 1])).data)


@pytest.mark.parametrize("seed", range(10))
def test_evolve_matches_oracle(seed):
    U, rho = oracle.sample("unitary", 4, seed), oracle.sample("density", 4, seed + 1)
    got = real_evolve(realify_state(rho), realify_operator(U))
    assert np.max(np.abs(got.data - realify_state(U @ rho @ U.conj().T).data)) <= 1e-12


def test_evolve_rejects_non_orthogonal():
    rho = realify_state(np.eye(2) / 2)
    with pytest.raises(ValidationError):
        real_evolve(rho, realify_operator(np.diag([1, 2])))
    assert not is_orthogonal(realify_operator(np.diag([1, 2])))


def test_channel_identity_and_dephasing():
    rho = realify_state(oracle.sample("density", 2, 8))
    assert np.allclose(real_apply_channel(RealifiedChannel.from_complex([np.eye(2)]), rho).data,
                       rho.data, atol=1e-15)
    plus = realify_state(np.full((2, 2), 0.5))
    deph = RealifiedChannel.from_complex([np.diag([1, 0]), np.diag([0, 1])])
    assert np.allclose(real_apply_channel(deph, plus).data, realify_state(np.eye(2) / 2).data, atol=1e-15)


@pytest.mark.parametrize("seed", range(10))
def test_channel_matches_oracle(seed):
    ch = oracle.sample_channel(3, 3, seed)
    rho = oracle.sample("density", 3, seed + 7)
    got = real_apply_channel(RealifiedChannel.from_complex(ch), realify_state(rho))
    assert np.max(np.abs(got.data - realify_state(oracle.apply_channel(ch, rho)).data)) <= 1e-12
    assert abs(np.trace(got.data) - 1) <= 1e-10


def test_channel_completeness_checked():
    with pytest.raises(ValidationError):
        RealifiedChannel.from_complex([np.diag([1, 0])])


def test_channel_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        real_apply_channel(RealifiedChannel.from_complex([np.eye(3)]), realify_state(np.eye(2) / 2))


def test_expectation_examples():
    assert real_expectation(realify_state(np.diag([1, 0])), realify_operator(oracle.Z)) == pytest.approx(1, abs=1e-15)
    plus_i = oracle.projector(oracle.ket([h, 1j * h]))
    assert real_expectation(realify_state(plus_i), realify_operator(oracle.Y)) == pytest.approx(1, abs=1e-15)


def test_expectation_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        real_expectation(realify_state(np.eye(2) / 2), realify_operator(np.array([[0, 1], [0, 0]])))


@pytest.mark.parametrize("seed", range(10))
def test_expectation_matches_oracle_d5(seed):
    rho, O = oracle.sample("density", 5, seed), oracle.sample_observable(5, seed + 1)
    got = real_expectation(realify_state(rho), realify_operator(O))
    assert abs(got - oracle.expectation(rho, O)) <= 1e-11


def test_imaginary_part_of_state_contributes_for_complex_observables():
    # Tr(rho_I O_I) is nonzero in general; dropping it breaks the Born rule for Y-type observables.
    rho = oracle.projector(oracle.ket([h, 1j * h]))
    assert abs(np.trace(rho.imag @ oracle.Y.imag)) == pytest.approx(1.0)
    assert abs(np.trace(rho.real @ oracle.Y.real)) == 0


@settings(max_examples=100, deadline=None)
@given(seed=seeds, d=st.integers(1, 8))
def test_channel_trace_in_real_form(seed, d):
    ch = oracle.sample_channel(d, 2, seed)
    out = real_apply_channel(RealifiedChannel.from_complex(ch), realify_state(oracle.sample("density", d, seed ^ 3)))
    assert abs(np.trace(out.data) - 1) <= 1e-10

"""End-to-end scenarios run through both the complex oracle and the real pipeline."""

import itertools

import numpy as np

from . import oracle
from .algebra import RealifiedChannel, real_apply_channel, real_evolve, real_expectation
from .composite import (
    ancilla_witness,
    modified_tensor_all,
    modified_tensor_operator,
    modified_tensor_state,
    naive_tensor,
)
from .exceptions import ValidationError
from .realify import realified_density_from_ket, realify_ket, realify_operator, realify_state
from .report import ExperimentReport

AGREEMENT_TOL = 1e-9
PROBABILITY_TOL = 1e-10

_SQRT_HALF = 1 / np.sqrt(2)

# (|00> + i|11>)/sqrt(2): imaginary amplitudes so that every stage exercises Im blocks.
SOURCE_STATE = oracle.ket([_SQRT_HALF, 0, 0, 1j * _SQRT_HALF])

BELL_BASIS = {
    "phi+": oracle.ket([_SQRT_HALF, 0, 0, _SQRT_HALF]),
    "phi-": oracle.ket([_SQRT_HALF, 0, 0, -_SQRT_HALF]),
    "psi+": oracle.ket([0, _SQRT_HALF, _SQRT_HALF, 0]),
    "psi-": oracle.ket([0, _SQRT_HALF, -_SQRT_HALF, 0]),
}

# Eigenvectors for outcomes +1 then -1.
PAULI_BASES = {
    "X": (oracle.ket([_SQRT_HALF, _SQRT_HALF]), oracle.ket([_SQRT_HALF, -_SQRT_HALF])),
    "Y": (oracle.ket([_SQRT_HALF, 1j * _SQRT_HALF]), oracle.ket([_SQRT_HALF, -1j * _SQRT_HALF])),
    "Z": (oracle.ket([1, 0]), oracle.ket([0, 1])),
}


def _sub_seeds(seed, n):
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    return [int(s) for s in rng.integers(0, 2**63, size=n)]


def two_source_prediction(rho1, rho2, ch1, ch2, O1, O2):
    """Return (oracle value, real-pipeline value, naive value) of Tr(E1(rho1) (x) E2(rho2) O1 (x) O2).

    The real value composes the two sources with the modified tensor
    product. The naive value uses the plain Kronecker product, which is
    fine here only because the observable is a product.
    """
    lhs = oracle.expectation(
        oracle.tensor(oracle.apply_channel(ch1, rho1), oracle.apply_channel(ch2, rho2)),
        oracle.tensor(O1, O2),
    )
    s1 = real_apply_channel(RealifiedChannel.from_complex(ch1), realify_state(rho1))
    s2 = real_apply_channel(RealifiedChannel.from_complex(ch2), realify_state(rho2))
    M1, M2 = realify_operator(O1), realify_operator(O2)
    rhs = real_expectation(modified_tensor_state(s1, s2), modified_tensor_operator(M1, M2))
    naive = float(np.sum(naive_tensor(s1, s2) * naive_tensor(M1, M2).T))
    return lhs, rhs, naive


def two_source_born_check(d1, d2, trials, seed, n_kraus=2, tol=AGREEMENT_TOL):
    """Two independent sources, local channels, product observable; oracle vs real.

    Trial ``t`` draws everything from seed ``seed ^ t``.
    """
    d1, d2, trials = int(d1), int(d2), int(trials)
    if d1 < 2 or d2 < 2:
        raise ValidationError("two_source_born_check needs d1, d2 >= 2")
    if trials < 1:
        raise ValidationError("trials must be >= 1")
    errors, naive_errors = [], []
    for t in range(trials):
        s = _sub_seeds(int(seed) ^ t, 6)
        lhs, rhs, naive = two_source_prediction(
            oracle.sample("density", d1, s[0]),
            oracle.sample("density", d2, s[1]),
            oracle.sample_channel(d1, n_kraus, s[2]),
            oracle.sample_channel(d2, n_kraus, s[3]),
            oracle.sample_observable(d1, s[4]),
            oracle.sample_observable(d2, s[5]),
        )
        errors.append(abs(lhs - rhs))
        naive_errors.append(abs(lhs - naive))
    max_err = float(max(errors))
    return ExperimentReport(
        name="born2",
        seed=int(seed),
        params={"d1": d1, "d2": d2, "trials": trials, "n_kraus": int(n_kraus), "tol": tol},
        metrics={
            "max_abs_error": max_err,
            "mean_abs_error": float(np.mean(errors)),
            "naive_product_max_abs_error": float(max(naive_errors)),
        },
        verdicts={"pass": max_err <= tol},
    )


def _outcome_labels():
    return [(k, o0, o3) for k in BELL_BASIS for o0 in (0, 1) for o3 in (0, 1)]


def swap_distribution_oracle(basis0, basis3, source=SOURCE_STATE):
    """Joint distribution by explicit amplitude enumeration over all 16 basis states.

    Qubit order is (q0, q1, q2, q3); the sources emit (q0, q1) and (q2, q3)
    and the Bell measurement acts on (q1, q2).
    """
    src = source[:, 0]
    amp4 = {idx: src[2 * idx[0] + idx[1]] * src[2 * idx[2] + idx[3]]
            for idx in itertools.product((0, 1), repeat=4)}
    probs = {}
    for k, o0, o3 in _outcome_labels():
        e0 = PAULI_BASES[basis0][o0][:, 0]
        e3 = PAULI_BASES[basis3][o3][:, 0]
        bell = BELL_BASIS[k][:, 0]
        amp = 0j
        for (q0, q1, q2, q3), a in amp4.items():
            amp += np.conj(e0[q0]) * np.conj(bell[2 * q1 + q2]) * np.conj(e3[q3]) * a
        probs[(k, o0, o3)] = abs(amp) ** 2
    return probs


def swap_distribution_real(basis0, basis3, source=SOURCE_STATE):
    """Same distribution from realified states, realified projectors and the modified tensor."""
    rho_src = realified_density_from_ket(realify_ket(source))
    joint = modified_tensor_state(rho_src, rho_src)
    probs = {}
    for k, o0, o3 in _outcome_labels():
        proj = modified_tensor_all(
            realify_operator(oracle.projector(PAULI_BASES[basis0][o0])),
            realify_operator(oracle.projector(BELL_BASIS[k])),
            realify_operator(oracle.projector(PAULI_BASES[basis3][o3])),
        )
        probs[(k, o0, o3)] = real_expectation(joint, proj)
    return probs


def _distribution_ok(probs):
    p = np.array(list(probs.values()))
    return bool(p.min() >= -PROBABILITY_TOL and abs(p.sum() - 1.0) <= PROBABILITY_TOL)


def tv_distance(p, q):
    return 0.5 * float(sum(abs(p[k] - q[k]) for k in p))


def bell_marginal(probs):
    return [float(sum(v for (k, _, _), v in probs.items() if k == name)) for name in BELL_BASIS]


def entanglement_swapping_demo(seed, shots=0, tol=AGREEMENT_TOL):
    """Bell measurement on the inner qubits of two independent (|00> + i|11>)/sqrt(2) sources.

    Exact distributions for every pair of Pauli bases on the outer qubits
    are computed by the oracle and by the real pipeline. With ``shots`` > 0
    outcomes are also sampled from the real distribution (seeded) and the
    empirical distance to the oracle is recorded as information only.
    """
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    tv_max, marginal_dev, sampled_tv = 0.0, 0.0, 0.0
    valid = True
    marginal = None
    for b0, b3 in itertools.product(PAULI_BASES, repeat=2):
        p_oracle = swap_distribution_oracle(b0, b3)
        p_real = swap_distribution_real(b0, b3)
        valid &= _distribution_ok(p_oracle) and _distribution_ok(p_real)
        tv_max = max(tv_max, tv_distance(p_oracle, p_real))
        m_oracle, m_real = bell_marginal(p_oracle), bell_marginal(p_real)
        marginal_dev = max(marginal_dev, *(abs(m - 0.25) for m in m_oracle + m_real))
        if marginal is None:
            marginal = m_oracle
        if shots:
            keys = list(p_real)
            weights = np.clip([p_real[k] for k in keys], 0, None)
            counts = rng.multinomial(int(shots), weights / weights.sum())
            empirical = {k: c / shots for k, c in zip(keys, counts)}
            sampled_tv = max(sampled_tv, tv_distance(p_oracle, empirical))

    rho_src = realified_density_from_ket(realify_ket(SOURCE_STATE))
    naive_dim = naive_tensor(rho_src, rho_src).shape[0]
    real_dim = modified_tensor_state(rho_src, rho_src).data.shape[0]
    metrics = {
        "tv_distance": tv_max,
        "bell_marginal_max_deviation": marginal_dev,
        "naive_dimension": float(naive_dim),
        "realified_dimension": float(real_dim),
        "source_xz_component_norm": ancilla_witness(rho_src).xz_component_norm,
    }
    for name, m in zip(BELL_BASIS, marginal):
        metrics[f"bell_marginal_{name}"] = m
    if shots:
        metrics["sampled_tv_distance"] = sampled_tv
    return ExperimentReport(
        name="swap",
        seed=int(seed),
        params={"shots": int(shots), "tol": tol, "source": "(|00>+i|11>)/sqrt2",
                "outer_bases": "XYZ x XYZ"},
        metrics=metrics,
        verdicts={
            "tv_within_tol": tv_max <= tol,
            "bell_marginal_uniform": marginal_dev <= PROBABILITY_TOL,
            "distributions_valid": bool(valid),
            "naive_incompatible": naive_dim != real_dim,
        },
    )


def _pauli_strings(n):
    paulis = (oracle.I2, oracle.X, oracle.Y, oracle.Z)
    for combo in itertools.product(range(4), repeat=n):
        yield combo, oracle.tensor_all(*(paulis[c] for c in combo))


def nonlocal_operation_demo(seed, tol=AGREEMENT_TOL):
    """Alice's pair (a1, a2), a2 sent to Bob and entangled with b, then a local gate on a1.

    Bob's qubit starts in a seeded random pure state. Qubit order is
    (a1, a2, b).
    """
    (s_bob,) = _sub_seeds(seed, 1)
    phi_b = oracle.sample("pure", 2, s_bob)
    I4 = np.eye(4)

    # Complex reference.
    psi = oracle.tensor(SOURCE_STATE, phi_b)
    psi = oracle.tensor(oracle.I2, oracle.CNOT) @ psi
    psi_after = oracle.tensor(oracle.S_PHASE, I4) @ psi

    # Real pipeline.
    rho = modified_tensor_state(realified_density_from_ket(realify_ket(SOURCE_STATE)),
                                realified_density_from_ket(realify_ket(phi_b)))
    entangle = modified_tensor_operator(realify_operator(oracle.I2), realify_operator(oracle.CNOT))
    rho = real_evolve(rho, entangle)
    local_gate = realify_operator(oracle.S_PHASE)
    global_gate = modified_tensor_operator(local_gate, realify_operator(I4))
    rho_after = real_evolve(rho, global_gate)

    composition_err = float(np.max(np.abs(
        global_gate.data - realify_operator(oracle.tensor(oracle.S_PHASE, I4)).data)))

    before_err, after_err = 0.0, 0.0
    rho_c, rho_c_after = oracle.projector(psi), oracle.projector(psi_after)
    for _, P in _pauli_strings(3):
        Pr = realify_operator(P)
        before_err = max(before_err, abs(oracle.expectation(rho_c, P) - real_expectation(rho, Pr)))
        after_err = max(after_err, abs(oracle.expectation(rho_c_after, P) - real_expectation(rho_after, Pr)))

    phase_w = ancilla_witness(local_gate)
    real_w = ancilla_witness(realify_operator(oracle.X))
    global_w = ancilla_witness(global_gate)
    # Giving a1's gate its own flag next to the realified (a2, b) block doubles the space.
    naive_local_dim = naive_tensor(local_gate, realify_operator(I4)).shape[0]
    real_dim = global_gate.shape[0]
    return ExperimentReport(
        name="nonlocal",
        seed=int(seed),
        params={"tol": tol, "local_gate": "diag(1,i) on a1", "entangler": "CNOT(a2->b)"},
        metrics={
            "phase_gate_xz_component_norm": phase_w.xz_component_norm,
            "real_gate_xz_component_norm": real_w.xz_component_norm,
            "global_gate_xz_component_norm": global_w.xz_component_norm,
            "global_composition_max_abs_error": composition_err,
            "max_abs_error_before": before_err,
            "max_abs_error": after_err,
            "naive_local_dimension": float(naive_local_dim),
            "realified_dimension": float(real_dim),
        },
        verdicts={
            "phase_gate_uses_shared_ancilla": phase_w.uses_shared_ancilla,
            "real_gate_is_local": not real_w.uses_shared_ancilla,
            "global_gate_uses_shared_ancilla": global_w.uses_shared_ancilla,
            "global_composition_matches": composition_err <= 1e-12,
            "born_agreement": max(before_err, after_err) <= tol,
            "naive_local_incompatible": naive_local_dim != real_dim,
        },
    )

